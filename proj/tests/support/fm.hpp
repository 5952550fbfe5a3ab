#ifndef CHOWLAB_TESTS_FM_HPP
#define CHOWLAB_TESTS_FM_HPP

#include "chowlab/lp.hpp"

namespace chowlab::testsupport {

// Fourier-Motzkin feasibility over exact rationals, strict inequalities
// tracked through combinations. Test-only oracle, independent of the
// simplex path in the library.
bool fm_feasible(std::vector<LinCon> cons, int nvars);

} // namespace chowlab::testsupport

#endif
