#include "chowlab/lp.hpp"

#include <algorithm>

#include "chowlab/errors.hpp"

namespace chowlab {

namespace {

// Dense simplex tableau over exact rationals. Rows are equalities over
// nonnegative variables; Bland's rule keeps every pivot sequence finite.
struct Tableau {
    RatMat rows;             // m x (ncols + 1), rhs in the last slot
    std::vector<int> basis;  // basic column per row
    int ncols{0};

    Rat& rhs(size_t i) { return rows[i][ncols]; }

    void pivot(size_t row, int col) {
        const Rat p = rows[row][col];
        if (p == 0) fail(ErrorKind::Internal, "simplex: zero pivot");
        const Rat inv = Rat(1) / p;
        for (auto& v : rows[row]) v *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[row][j];
        }
        basis[row] = col;
    }

    // Minimizes c over the current feasible basis; returns the optimum.
    Rat optimize(const RatVec& c) {
        while (true) {
            // Reduced costs priced against the basis.
            RatVec red = c;
            Rat obj = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                const Rat cb = c[basis[i]];
                if (cb == 0) continue;
                obj += cb * rows[i][ncols];
                for (int j = 0; j < ncols; ++j) red[j] -= cb * rows[i][j];
            }
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return obj;
            size_t leave = rows.size();
            Rat best = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                const Rat ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size())
                fail(ErrorKind::Internal, "simplex: unbounded objective");
            pivot(leave, enter);
        }
    }

    RatVec extract() const {
        RatVec x(ncols, Rat(0));
        for (size_t i = 0; i < rows.size(); ++i) x[basis[i]] = rows[i][ncols];
        return x;
    }
};

Rat eval(const RatVec& a, const RatVec& x) {
    Rat s = 0;
    const size_t n = std::min(a.size(), x.size());
    for (size_t i = 0; i < n; ++i) s += a[i] * x[i];
    return s;
}

} // namespace

bool satisfies(const std::vector<LinCon>& cons, const RatVec& x) {
    for (const LinCon& c : cons) {
        const Rat v = eval(c.a, x);
        switch (c.rel) {
            case Rel::EQ:
                if (v != c.b) return false;
                break;
            case Rel::LE:
                if (v > c.b) return false;
                break;
            case Rel::GE:
                if (v < c.b) return false;
                break;
            case Rel::LT:
                if (v >= c.b) return false;
                break;
            case Rel::GT:
                if (v <= c.b) return false;
                break;
        }
    }
    return true;
}

LPPoint lp_feasible(const std::vector<LinCon>& cons, int nvars) {
    for (const LinCon& c : cons)
        if (static_cast<int>(c.a.size()) != nvars)
            fail(ErrorKind::Internal, "lp_feasible: constraint width mismatch");

    bool has_strict = false;
    for (const LinCon& c : cons)
        if (c.rel == Rel::LT || c.rel == Rel::GT) has_strict = true;

    // Column layout: x_i = p_i - q_i (2*nvars columns), then the shared
    // strictness slack, then one slack per inequality row, then one
    // artificial per row.
    struct Row {
        RatVec a; // over x columns and the strict slack
        Rat b;
        bool ineq; // true: a <= b, false: a == b
    };
    std::vector<Row> rows;
    const int scol = nvars; // strict-slack position in the pre-split layout
    auto widen = [&](const RatVec& a, const Rat& s) {
        RatVec w(nvars + 1, Rat(0));
        for (int i = 0; i < nvars; ++i) w[i] = a[i];
        w[nvars] = s;
        return w;
    };
    for (const LinCon& c : cons) {
        switch (c.rel) {
            case Rel::EQ: rows.push_back({widen(c.a, 0), c.b, false}); break;
            case Rel::LE: rows.push_back({widen(c.a, 0), c.b, true}); break;
            case Rel::GE: rows.push_back({widen(scale(-1, c.a), 0), -c.b, true}); break;
            case Rel::LT: rows.push_back({widen(c.a, 1), c.b, true}); break;
            case Rel::GT: rows.push_back({widen(scale(-1, c.a), 1), -c.b, true}); break;
        }
    }
    if (has_strict) {
        RatVec cap(nvars + 1, Rat(0));
        cap[scol] = 1;
        rows.push_back({cap, Rat(1), true}); // slack clamp
    }

    const int m = static_cast<int>(rows.size());
    int nineq = 0;
    for (const Row& r : rows) nineq += r.ineq ? 1 : 0;
    const int xcols = 2 * nvars;          // p/q split
    const int total = xcols + 1 + nineq + m; // + strict slack + slacks + artificials

    Tableau t;
    t.ncols = total;
    t.rows.assign(m, RatVec(total + 1, Rat(0)));
    t.basis.assign(m, -1);
    int slack_at = xcols + 1;
    for (int i = 0; i < m; ++i) {
        RatVec& out = t.rows[i];
        for (int v = 0; v < nvars; ++v) {
            out[2 * v] = rows[i].a[v];
            out[2 * v + 1] = -rows[i].a[v];
        }
        out[xcols] = rows[i].a[nvars];
        if (rows[i].ineq) out[slack_at++] = 1;
        out[total] = rows[i].b;
        if (out[total] < 0)
            for (auto& v : out) v = -v;
        const int art = xcols + 1 + nineq + i;
        out[art] = 1;
        t.basis[i] = art;
    }

    // Phase 1: drive the artificials to zero.
    RatVec c1(total, Rat(0));
    for (int i = 0; i < m; ++i) c1[xcols + 1 + nineq + i] = 1;
    if (t.optimize(c1) > 0) return {false, {}};

    // Pivot any leftover basic artificials out (or drop redundant rows).
    for (size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < xcols + 1 + nineq) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0; j < xcols + 1 + nineq; ++j)
            if (t.rows[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            t.pivot(i, col);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<long>(i));
            t.basis.erase(t.basis.begin() + static_cast<long>(i));
        }
    }
    // Remove artificial columns entirely.
    for (auto& row : t.rows) {
        row.erase(row.begin() + (xcols + 1 + nineq), row.begin() + total);
    }
    t.ncols = xcols + 1 + nineq;

    if (has_strict) {
        RatVec c2(t.ncols, Rat(0));
        c2[xcols] = -1; // maximize the strict slack
        const Rat opt = -t.optimize(c2);
        if (opt <= 0) return {false, {}};
    }

    const RatVec z = t.extract();
    RatVec x(nvars);
    for (int v = 0; v < nvars; ++v) x[v] = z[2 * v] - z[2 * v + 1];
    if (!satisfies(cons, x))
        fail(ErrorKind::Internal, "lp_feasible: solution failed re-verification");
    return {true, x};
}

} // namespace chowlab
