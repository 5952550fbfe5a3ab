#ifndef CHOWLAB_CHAMBERS_HPP
#define CHOWLAB_CHAMBERS_HPP

#include <vector>

#include "chowlab/polytope.hpp"
#include "chowlab/weights.hpp"

namespace chowlab {

struct Chamber {
    Polytope cell;
    int dim{0};
    int id{0};
};

// Common refinement of all orbit polytopes inside the moment polytope.
// Chambers are closed; ids are canonical (sorted by dimension, then by
// vertex list).
struct ChamberComplex {
    Polytope P;
    std::vector<Chamber> chambers;
    // face_relations: (d, c) with chamber d a proper face of chamber c.
    std::vector<std::pair<int, int>> face_relations;

    std::vector<int> top_chamber_ids() const;
};

// Supported for torus rank k <= 2.
ChamberComplex build_chambers(const WeightSystem& ws);

// The minimal chamber containing r; outside-polytope error if r is not in P.
const Chamber& locate(const ChamberComplex& cc, const RatVec& r);

} // namespace chowlab

#endif
