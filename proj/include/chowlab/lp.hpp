#ifndef CHOWLAB_LP_HPP
#define CHOWLAB_LP_HPP

#include <vector>

#include "chowlab/rational.hpp"

namespace chowlab {

enum class Rel { EQ, LE, GE, LT, GT };

struct LinCon {
    RatVec a;
    Rel rel{Rel::LE};
    Rat b{0};
};

inline LinCon make_con(RatVec a, Rel rel, Rat b) {
    return LinCon{std::move(a), rel, std::move(b)};
}

struct LPPoint {
    bool feasible{false};
    RatVec x; // defined only when feasible
};

// Exact feasibility of a rational linear system, strict inequalities
// included. Strictness is handled by maximizing a shared slack, clamped at
// 1: the system is feasible iff the relaxation is solvable with slack > 0.
// A returned point is re-verified against every constraint before return.
LPPoint lp_feasible(const std::vector<LinCon>& cons, int nvars);

// Exact check of a candidate point against a constraint set.
bool satisfies(const std::vector<LinCon>& cons, const RatVec& x);

} // namespace chowlab

#endif
