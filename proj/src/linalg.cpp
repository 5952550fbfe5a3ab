#include "chowlab/linalg.hpp"

#include <algorithm>

namespace chowlab {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int rat_rank(RatMat m) {
    return static_cast<int>(rref(m).size());
}

std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    if (a.size() != b.size()) fail(ErrorKind::Internal, "solve: shape mismatch");
    if (a.empty()) return RatVec{};
    const size_t cols = a[0].size();
    RatMat aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    const std::vector<int> pivots = rref(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    for (int p : pivots)
        if (static_cast<size_t>(p) == cols) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

std::vector<RatVec> null_space(RatMat a) {
    if (a.empty()) return {};
    const size_t cols = a[0].size();
    const std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMat lattice_basis(IntMat rows) {
    // Integer row reduction (Hermite-style, no normalization of signs beyond
    // a positive leading entry).
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    if (rows.empty()) return {};
    const size_t cols = rows[0].size();
    size_t top = 0;
    for (size_t c = 0; c < cols && top < rows.size(); ++c) {
        // Euclidean elimination in column c over rows [top..end).
        while (true) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[i][c]) < abs(rows[best][c]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                const Int q = rows[i][c] / rows[top][c];
                for (size_t j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[top][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] != 0) {
            if (rows[top][c] < 0)
                for (size_t j = 0; j < cols; ++j) rows[top][j] = -rows[top][j];
            ++top;
        }
    }
    rows.resize(top);
    return rows;
}

IntVec invariant_factors(IntMat m) {
    m.erase(std::remove_if(m.begin(), m.end(),
                           [](const IntVec& r) {
                               return std::all_of(r.begin(), r.end(),
                                                  [](const Int& x) { return x == 0; });
                           }),
            m.end());
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    IntVec divisors;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // Find the smallest nonzero entry in the working block.
        size_t pi = rows, pj = cols;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(m[r0], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pj]);
        bool clean = true;
        for (size_t i = r0 + 1; i < rows; ++i) {
            if (m[i][c0] == 0) continue;
            const Int q = m[i][c0] / m[r0][c0];
            for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) clean = false;
        }
        for (size_t j = c0 + 1; j < cols; ++j) {
            if (m[r0][j] == 0) continue;
            const Int q = m[r0][j] / m[r0][c0];
            for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue;
        divisors.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // Enforce the divisibility chain d_1 | d_2 | ...
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j) {
            if (divisors[j] % divisors[i] == 0) continue;
            const Int g = gcd(divisors[i], divisors[j]);
            const Int l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::optional<IntVec> lattice_coordinates(const IntMat& basis, const RatVec& v) {
    if (basis.empty())
        return is_zero(v) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
    const size_t cols = basis[0].size();
    if (v.size() != cols) fail(ErrorKind::Internal, "lattice_coordinates: shape");
    // Solve basis^T * x = v over the rationals, then demand integrality.
    RatMat a(cols, RatVec(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < cols; ++j) a[j][i] = Rat(basis[i][j]);
    auto x = solve_linear(a, v);
    if (!x) return std::nullopt;
    // Residual check (solve_linear only reports pivot consistency).
    for (size_t j = 0; j < cols; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < basis.size(); ++i) s += Rat(basis[i][j]) * (*x)[i];
        if (s != v[j]) return std::nullopt;
    }
    IntVec coords;
    coords.reserve(x->size());
    for (const Rat& c : *x) {
        if (denominator(c) != 1) return std::nullopt;
        coords.push_back(numerator(c));
    }
    return coords;
}

Int int_det(IntMat m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Internal, "int_det: not square");
    // Fraction-free Gaussian elimination (Bareiss).
    Int prev = 1;
    Int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i)
            for (size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace chowlab
