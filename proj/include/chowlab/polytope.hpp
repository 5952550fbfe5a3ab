#ifndef CHOWLAB_POLYTOPE_HPP
#define CHOWLAB_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "chowlab/rational.hpp"

namespace chowlab {

// Convex polytope with both representations kept in sync: the irredundant,
// lexicographically sorted vertex list, the affine-hull equalities, and the
// facet inequalities (valid within the affine hull).
struct Polytope {
    int ambient{0};
    std::vector<RatVec> verts;
    std::vector<std::pair<RatVec, Rat>> eqs;   // a . x == b
    std::vector<std::pair<RatVec, Rat>> ineqs; // a . x <= b
    int dim{-1};

    bool operator==(const Polytope& o) const { return verts == o.verts; }
    bool operator<(const Polytope& o) const { return verts < o.verts; }
};

enum class Where { Interior, Boundary, Outside };

// Hull of a nonempty rational point set, ambient dimension at most 3.
Polytope convex_hull(const std::vector<RatVec>& points);

// Position of x relative to p: Interior means the relative interior.
Where contains(const Polytope& p, const RatVec& x);

// Vertex centroid.
RatVec relative_interior_point(const Polytope& p);

// All nonempty faces (the polytope included), as vertex-index sets grouped
// by face dimension.
struct FaceLattice {
    std::vector<std::vector<std::vector<int>>> by_dim;

    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        for (const auto& level : by_dim) f.push_back(static_cast<long long>(level.size()));
        return f;
    }
};
FaceLattice face_lattice(const Polytope& p);

// The face of p with the given vertex indices, as a polytope.
Polytope face_polytope(const Polytope& p, const std::vector<int>& vertex_ids);

bool is_face_of(const Polytope& face, const Polytope& p);

// A subset of B: every vertex of a inside b.
bool polytope_subset(const Polytope& a, const Polytope& b);

// Intersection of two polytopes, ambient dimension at most 2.
Polytope intersect(const Polytope& a, const Polytope& b);

// Normalized volume (euclidean volume times dim!) of a polytope whose
// vertex differences lie in the lattice spanned by the basis rows. The
// polytope dimension must equal the basis rank.
Int lattice_volume(const Polytope& cell, const IntMat& basis);

// Standard lattice Z^k as a basis matrix.
IntMat standard_lattice(int k);

// Exact euclidean volume times dim!, for rational-vertex polytopes of
// dimension <= 2 (any ambient <= 3).
Rat normalized_volume(const Polytope& p);

// Indices of the points in convex-position cyclic order (ambient 2,
// full-dimensional input).
std::vector<int> cyclic_order_2d(const std::vector<RatVec>& pts);

} // namespace chowlab

#endif
