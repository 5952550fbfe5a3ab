#include "support/fm.hpp"

#include <algorithm>
#include <set>

#include "chowlab/errors.hpp"

namespace chowlab::testsupport {

namespace {

struct Ineq {
    RatVec a;
    Rat b;
    bool strict;
};

// Normalize to make deduplication effective: primitive integer vector.
void canon(Ineq& q) {
    Int l = 1;
    for (const Rat& x : q.a) l = lcm(l, denominator(x));
    l = lcm(l, denominator(q.b));
    Int g = 0;
    for (Rat& x : q.a) {
        x *= l;
        g = gcd(g, numerator(x));
    }
    q.b *= l;
    g = gcd(g, numerator(q.b));
    if (g == 0) g = 1;
    for (Rat& x : q.a) x /= g;
    q.b /= g;
}

} // namespace

bool fm_feasible(std::vector<LinCon> cons, int nvars) {
    // Equalities out first, by substitution.
    std::vector<Ineq> ineqs;
    std::vector<std::pair<RatVec, Rat>> eqs;
    for (const LinCon& c : cons) {
        switch (c.rel) {
            case Rel::EQ: eqs.emplace_back(c.a, c.b); break;
            case Rel::LE: ineqs.push_back({c.a, c.b, false}); break;
            case Rel::LT: ineqs.push_back({c.a, c.b, true}); break;
            case Rel::GE: ineqs.push_back({scale(-1, c.a), -c.b, false}); break;
            case Rel::GT: ineqs.push_back({scale(-1, c.a), -c.b, true}); break;
        }
    }
    std::vector<bool> eliminated(nvars, false);
    for (size_t e = 0; e < eqs.size(); ++e) {
        auto& [a, b] = eqs[e];
        int pivot = -1;
        for (int v = 0; v < nvars; ++v)
            if (!eliminated[v] && a[v] != 0) {
                pivot = v;
                break;
            }
        if (pivot < 0) {
            if (b != 0) return false; // 0 == nonzero
            continue;
        }
        eliminated[pivot] = true;
        const Rat inv = Rat(1) / a[pivot];
        for (Rat& x : a) x *= inv;
        b *= inv;
        auto substitute = [&](RatVec& row, Rat& rhs) {
            const Rat f = row[pivot];
            if (f == 0) return;
            for (int v = 0; v < nvars; ++v) row[v] -= f * a[v];
            rhs -= f * b;
        };
        for (size_t e2 = e + 1; e2 < eqs.size(); ++e2)
            substitute(eqs[e2].first, eqs[e2].second);
        for (Ineq& q : ineqs) substitute(q.a, q.b);
    }

    // Eliminate the remaining variables one by one.
    for (int v = 0; v < nvars; ++v) {
        if (eliminated[v]) continue;
        std::vector<Ineq> pos, neg, rest;
        for (Ineq& q : ineqs) {
            if (q.a[v] > 0)
                pos.push_back(std::move(q));
            else if (q.a[v] < 0)
                neg.push_back(std::move(q));
            else
                rest.push_back(std::move(q));
        }
        std::set<std::pair<RatVec, std::pair<Rat, bool>>> dedupe;
        for (const Ineq& p : pos)
            for (const Ineq& n : neg) {
                // p: a.x <= b with a_v > 0;  n: c.x <= d with c_v < 0.
                // Combine to remove x_v: a_v * n + (-c_v) * p.
                const Rat pa = p.a[v], na = n.a[v];
                Ineq comb;
                comb.a.resize(nvars);
                for (int j = 0; j < nvars; ++j)
                    comb.a[j] = pa * n.a[j] - na * p.a[j];
                comb.b = pa * n.b - na * p.b;
                comb.strict = p.strict || n.strict;
                canon(comb);
                dedupe.insert({comb.a, {comb.b, comb.strict}});
            }
        ineqs = std::move(rest);
        for (const auto& [a, bs] : dedupe) ineqs.push_back({a, bs.first, bs.second});
    }

    for (const Ineq& q : ineqs) {
        for (const Rat& x : q.a)
            if (x != 0) fail(ErrorKind::Internal, "fm: leftover variable");
        if (q.strict ? !(Rat(0) < q.b) : !(Rat(0) <= q.b)) return false;
    }
    return true;
}

} // namespace chowlab::testsupport
