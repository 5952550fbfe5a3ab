#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chowlab/errors.hpp"
#include "chowlab/weights.hpp"

using namespace chowlab;

namespace {

WeightSystem p2() {
    return make_weight_system(1, 2, {{Int(1)}, {Int(-1)}, {Int(0)}});
}

WeightSystem p3() {
    return make_weight_system(1, 3, {{Int(1)}, {Int(1)}, {Int(-1)}, {Int(0)}});
}

} // namespace

TEST_CASE("weight system validation") {
    CHECK_THROWS_AS(make_weight_system(1, 1, {{Int(2)}, {Int(2)}}), Error);
    CHECK_THROWS_AS(make_weight_system(2, 1, {{Int(1), Int(0)}, {Int(0), Int(0)}}),
                    Error); // differences do not span Q^2
    CHECK_THROWS_AS(make_weight_system(1, 2, {{Int(1)}, {Int(0)}}), Error);
    CHECK_NOTHROW(make_weight_system(1, 1, {{Int(1)}, {Int(0)}}));
}

TEST_CASE("moment values on the P^2 example") {
    const WeightSystem ws = p2();
    CHECK(moment_value(ws, make_proj_point({Rat(1), Rat(0), Rat(0)})) ==
          RatVec{Rat(1)});
    CHECK(moment_value(ws, make_proj_point({Rat(0), Rat(1), Rat(0)})) ==
          RatVec{Rat(-1)});
    CHECK(moment_value(ws, make_proj_point({Rat(0), Rat(0), Rat(1)})) ==
          RatVec{Rat(0)});
    CHECK(moment_value(ws, make_proj_point({Rat(1), Rat(1), Rat(1)})) ==
          RatVec{Rat(0)});
}

TEST_CASE("moment value on the P^3 example") {
    const WeightSystem ws = p3();
    CHECK(moment_value(ws, make_proj_point({Rat(1), Rat(1), Rat(1), Rat(1)})) ==
          RatVec{Rat(1, 4)});
}

TEST_CASE("orbit polytopes") {
    const WeightSystem ws = p2();
    CHECK(orbit_polytope(ws, Support({1, 2})).verts ==
          std::vector<RatVec>{{Rat(-1)}, {Rat(1)}});
    CHECK(orbit_polytope(ws, Support({2, 3})).verts ==
          std::vector<RatVec>{{Rat(-1)}, {Rat(0)}});
    const Polytope pt = orbit_polytope(ws, Support({3}));
    CHECK(pt.dim == 0);
    CHECK(pt.verts == std::vector<RatVec>{{Rat(0)}});
}

TEST_CASE("orbit dimensions") {
    CHECK(orbit_dim(p2(), Support({1, 2})) == 1);
    CHECK(orbit_dim(p2(), Support({3})) == 0);
    CHECK(orbit_dim(p3(), Support({1, 2})) == 0); // equal weights
}

TEST_CASE("closure supports") {
    const WeightSystem ws = p2();
    CHECK(closure_supports(ws, Support({2, 3})) ==
          std::set<Support>{Support({2, 3}), Support({2}), Support({3})});
    CHECK(closure_supports(ws, Support({3})) == std::set<Support>{Support({3})});
    // 0 is interior to [-1,1], so {3} is not a face support of {1,2,3}.
    CHECK(closure_supports(ws, Support({1, 2, 3})) ==
          std::set<Support>{Support({1, 2, 3}), Support({1}), Support({2})});
}

TEST_CASE("moment value lies in the orbit polytope of the support") {
    std::mt19937_64 eng(5150u);
    for (int trial = 0; trial < 100; ++trial) {
        const WeightSystem ws = (trial % 2) ? p2() : p3();
        RatVec coords(ws.n + 1);
        bool nonzero = false;
        for (auto& c : coords) {
            c = Rat(static_cast<long>(eng() % 5) - 2);
            if (c != 0) nonzero = true;
        }
        if (!nonzero) continue;
        const ProjPoint x = make_proj_point(coords);
        const Support s = support_of(x);
        const RatVec mv = moment_value(ws, x);
        CHECK(contains(orbit_polytope(ws, s), mv) != Where::Outside);
        if (s.size() == 1)
            CHECK(mv == ws.weight_of(s.labels[0]));
    }
}

TEST_CASE("orbit_dim equals affine dimension of the orbit polytope") {
    const WeightSystem k2 = make_weight_system(
        2, 3, {{Int(0), Int(0)}, {Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}});
    for (const Support& s : all_supports(k2)) {
        const int od = orbit_dim(k2, s);
        CHECK(od == orbit_polytope(k2, s).dim);
        CHECK(od <= std::min<int>(k2.k, static_cast<int>(s.size()) - 1));
    }
}

TEST_CASE("closure supports contain the support and vertex singletons") {
    const WeightSystem ws = p3();
    for (const Support& s : all_supports(ws)) {
        const auto cs = closure_supports(ws, s);
        CHECK(cs.count(s) == 1);
        const Polytope op = orbit_polytope(ws, s);
        for (int l : s.labels) {
            const RatVec w = ws.weight_of(l);
            const bool is_vertex =
                std::find(op.verts.begin(), op.verts.end(), w) != op.verts.end();
            if (is_vertex) {
                // Some singleton face containing exactly the labels at w.
                std::vector<int> at;
                for (int l2 : s.labels)
                    if (ws.weight_of(l2) == w) at.push_back(l2);
                CHECK(cs.count(Support(at)) == 1);
            }
        }
        // Taking closures twice adds nothing new.
        for (const Support& f : cs) {
            for (const Support& g : closure_supports(ws, f)) CHECK(cs.count(g) == 1);
        }
    }
}
