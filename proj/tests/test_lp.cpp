#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chowlab/lp.hpp"
#include "support/fm.hpp"

using namespace chowlab;
using chowlab::testsupport::fm_feasible;

namespace {

LinCon con(std::initializer_list<int> a, Rel r, Rat b) {
    RatVec v;
    for (int x : a) v.push_back(Rat(x));
    return make_con(v, r, b);
}

} // namespace

TEST_CASE("interval with a strict cut") {
    // x >= 0, x <= 1, x > 1/2
    std::vector<LinCon> cons{
        con({1}, Rel::GE, Rat(0)),
        con({1}, Rel::LE, Rat(1)),
        con({1}, Rel::GT, Rat(1, 2)),
    };
    const LPPoint p = lp_feasible(cons, 1);
    REQUIRE(p.feasible);
    CHECK(p.x[0] > Rat(1, 2));
    CHECK(p.x[0] <= Rat(1));
}

TEST_CASE("contradictory strict pair is infeasible") {
    std::vector<LinCon> cons{
        con({1}, Rel::GT, Rat(0)),
        con({1}, Rel::LT, Rat(0)),
    };
    CHECK(!lp_feasible(cons, 1).feasible);
}

TEST_CASE("coherence witness system for the split subdivision on P^3") {
    // Weights (1,1,-1,0); cells {3,4} and {1,4}. Variables:
    // psi_1..psi_4, then (c,d) per cell. The witness psi=(0,1,0,-1)
    // with lL(u) = -1-u and lR(u) = u-1 satisfies it.
    // Layout: [psi1..psi4, cL, dL, cR, dR] -> 8 variables.
    auto row = [](std::initializer_list<int> entries) {
        RatVec v;
        for (int x : entries) v.push_back(Rat(x));
        return v;
    };
    const int w[4] = {1, 1, -1, 0};
    std::vector<LinCon> cons;
    auto cell_con = [&](int label, int coff, bool member) {
        RatVec a(8, Rat(0));
        a[coff] = Rat(w[label]);
        a[coff + 1] = 1;
        a[label] -= 1;
        cons.push_back(make_con(a, member ? Rel::EQ : Rel::LT, Rat(0)));
    };
    for (int label = 0; label < 4; ++label) cell_con(label, 4, label == 2 || label == 3);
    for (int label = 0; label < 4; ++label) cell_con(label, 6, label == 0 || label == 3);
    const LPPoint p = lp_feasible(cons, 8);
    REQUIRE(p.feasible);
    // Direct substitution witness: psi = (0,1,0,-1) itself must satisfy the
    // system with lL, lR as above.
    RatVec witness = {Rat(0), Rat(1), Rat(0), Rat(-1),
                      Rat(-1), Rat(-1), Rat(1), Rat(-1)};
    CHECK(satisfies(cons, witness));
    (void)row;
}

TEST_CASE("unbounded strict direction clamps at slack 1") {
    // x > 5 alone: feasible, slack capped.
    std::vector<LinCon> cons{con({1}, Rel::GT, Rat(5))};
    const LPPoint p = lp_feasible(cons, 1);
    REQUIRE(p.feasible);
    CHECK(p.x[0] > Rat(5));
}

TEST_CASE("equalities only") {
    std::vector<LinCon> cons{
        con({1, 1}, Rel::EQ, Rat(2)),
        con({1, -1}, Rel::EQ, Rat(0)),
    };
    const LPPoint p = lp_feasible(cons, 2);
    REQUIRE(p.feasible);
    CHECK(p.x == RatVec{Rat(1), Rat(1)});
}

TEST_CASE("infeasible equalities") {
    std::vector<LinCon> cons{
        con({1, 1}, Rel::EQ, Rat(2)),
        con({2, 2}, Rel::EQ, Rat(5)),
    };
    CHECK(!lp_feasible(cons, 2).feasible);
}

TEST_CASE("randomized cross-check against Fourier-Motzkin, <= 3 variables") {
    std::mt19937_64 eng(20240817u);
    int feasible_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int nvars = 1 + static_cast<int>(eng() % 3);
        const int ncons = 2 + static_cast<int>(eng() % 6);
        std::vector<LinCon> cons;
        for (int i = 0; i < ncons; ++i) {
            RatVec a(nvars);
            for (int v = 0; v < nvars; ++v)
                a[v] = Rat(static_cast<long>(eng() % 7) - 3);
            const Rat b(static_cast<long>(eng() % 9) - 4);
            const int r = static_cast<int>(eng() % 5);
            const Rel rel = r == 0   ? Rel::EQ
                            : r == 1 ? Rel::LE
                            : r == 2 ? Rel::GE
                            : r == 3 ? Rel::LT
                                     : Rel::GT;
            cons.push_back(make_con(a, rel, b));
        }
        const bool lp = lp_feasible(cons, nvars).feasible;
        const bool fm = fm_feasible(cons, nvars);
        CAPTURE(trial);
        REQUIRE(lp == fm);
        feasible_count += lp ? 1 : 0;
    }
    // The generator should exercise both outcomes.
    CHECK(feasible_count > 30);
    CHECK(feasible_count < 270);
}

TEST_CASE("feasible points always re-verify") {
    std::mt19937_64 eng(77u);
    for (int trial = 0; trial < 100; ++trial) {
        const int nvars = 1 + static_cast<int>(eng() % 4);
        std::vector<LinCon> cons;
        const int ncons = 1 + static_cast<int>(eng() % 5);
        for (int i = 0; i < ncons; ++i) {
            RatVec a(nvars);
            for (int v = 0; v < nvars; ++v)
                a[v] = Rat(static_cast<long>(eng() % 5) - 2);
            cons.push_back(make_con(a, (eng() % 2) ? Rel::LE : Rel::GE,
                                    Rat(static_cast<long>(eng() % 5) - 2)));
        }
        const LPPoint p = lp_feasible(cons, nvars);
        if (p.feasible) CHECK(satisfies(cons, p.x));
    }
}
