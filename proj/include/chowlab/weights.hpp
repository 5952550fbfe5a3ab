#ifndef CHOWLAB_WEIGHTS_HPP
#define CHOWLAB_WEIGHTS_HPP

#include <set>
#include <vector>

#include "chowlab/polytope.hpp"
#include "chowlab/rational.hpp"

namespace chowlab {

// Subset of coordinate labels, 1-based, kept sorted.
struct Support {
    std::vector<int> labels;

    Support() = default;
    explicit Support(std::vector<int> ls);

    bool operator==(const Support& o) const { return labels == o.labels; }
    bool operator<(const Support& o) const { return labels < o.labels; }
    bool contains_label(int l) const;
    bool subset_of(const Support& o) const;
    size_t size() const { return labels.size(); }
};

std::string support_to_string(const Support& s);

// Torus (C*)^k acting diagonally on P^n with one integer weight vector per
// homogeneous coordinate.
struct WeightSystem {
    int k{0};
    int n{0};
    std::vector<IntVec> weights; // (n+1) rows of length k, label i -> row i-1

    RatVec weight_of(int label) const; // 1-based
};

// Validates shape, rank of the weight differences, and non-constancy.
WeightSystem make_weight_system(int k, int n, std::vector<IntVec> weights);

// Point of P^n with rational homogeneous coordinates.
struct ProjPoint {
    RatVec coords;
};

ProjPoint make_proj_point(RatVec coords);
Support support_of(const ProjPoint& x);

// Moment map value (sum w_i x_i^2) / (sum x_i^2), exact.
RatVec moment_value(const WeightSystem& ws, const ProjPoint& x);

// Convex hull of the weights with labels in s.
Polytope orbit_polytope(const WeightSystem& ws, const Support& s);

// Dimension of the orbit through a point of support s: rank of the weight
// differences within s.
int orbit_dim(const WeightSystem& ws, const Support& s);

// Orbit types in the closure of an orbit of support s: one support per face
// of the orbit polytope.
std::set<Support> closure_supports(const WeightSystem& ws, const Support& s);

// All nonempty supports, in sorted order.
std::vector<Support> all_supports(const WeightSystem& ws);

// The moment polytope P = conv(all weights).
Polytope moment_polytope(const WeightSystem& ws);

} // namespace chowlab

#endif
