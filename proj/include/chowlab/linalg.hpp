#ifndef CHOWLAB_LINALG_HPP
#define CHOWLAB_LINALG_HPP

#include <optional>

#include "chowlab/rational.hpp"

namespace chowlab {

// Rank of a rational matrix (rows x cols), by Gaussian elimination.
int rat_rank(RatMat m);

// One exact solution of A x = b, free variables set to 0; nullopt when the
// system is inconsistent.
std::optional<RatVec> solve_linear(RatMat a, RatVec b);

// Basis of the null space of A (each vector has a.cols entries).
std::vector<RatVec> null_space(RatMat a);

// Row-style Hermite form of an integer matrix; returns the nonzero rows,
// i.e. a basis of the lattice generated by the input rows.
IntMat lattice_basis(IntMat rows);

// Invariant factors d_1 | d_2 | ... (all positive) of an integer matrix.
// Their product is the index of the row lattice inside its saturation.
IntVec invariant_factors(IntMat m);

// Coordinates of v in the given lattice basis, when they are integers;
// nullopt when v is not in the lattice spanned by the basis.
std::optional<IntVec> lattice_coordinates(const IntMat& basis, const RatVec& v);

Int int_det(IntMat m);

} // namespace chowlab

#endif
