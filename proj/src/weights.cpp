#include "chowlab/weights.hpp"

#include <algorithm>
#include <sstream>

#include "chowlab/errors.hpp"
#include "chowlab/linalg.hpp"

namespace chowlab {

Support::Support(std::vector<int> ls) : labels(std::move(ls)) {
    if (labels.empty()) fail(ErrorKind::Precondition, "empty support");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

bool Support::contains_label(int l) const {
    return std::binary_search(labels.begin(), labels.end(), l);
}

bool Support::subset_of(const Support& o) const {
    return std::includes(o.labels.begin(), o.labels.end(), labels.begin(),
                         labels.end());
}

std::string support_to_string(const Support& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.labels.size(); ++i)
        os << (i ? "," : "") << s.labels[i];
    os << "}";
    return os.str();
}

RatVec WeightSystem::weight_of(int label) const {
    if (label < 1 || label > n + 1)
        fail(ErrorKind::Precondition, "label out of range");
    RatVec w(k);
    for (int j = 0; j < k; ++j) w[j] = Rat(weights[label - 1][j]);
    return w;
}

WeightSystem make_weight_system(int k, int n, std::vector<IntVec> weights) {
    if (k < 1 || n < 1)
        fail(ErrorKind::Parse, "weight system needs k >= 1 and n >= 1");
    if (static_cast<int>(weights.size()) != n + 1)
        fail(ErrorKind::Parse, "weight system needs n+1 weight vectors");
    for (const auto& w : weights)
        if (static_cast<int>(w.size()) != k)
            fail(ErrorKind::Parse, "weight vector length differs from rank k");
    WeightSystem ws{k, n, std::move(weights)};
    bool all_equal = true;
    for (int i = 1; i <= n; ++i)
        if (ws.weights[i] != ws.weights[0]) all_equal = false;
    if (all_equal) fail(ErrorKind::Parse, "all weights equal: the action is trivial");
    RatMat diffs;
    for (int i = 1; i <= n; ++i) {
        RatVec d(k);
        for (int j = 0; j < k; ++j) d[j] = Rat(ws.weights[i][j] - ws.weights[0][j]);
        diffs.push_back(d);
    }
    if (rat_rank(diffs) != k)
        fail(ErrorKind::Parse,
             "weight differences must span Q^k (generically free action)");
    return ws;
}

ProjPoint make_proj_point(RatVec coords) {
    bool nonzero = false;
    for (const Rat& c : coords)
        if (c != 0) nonzero = true;
    if (!nonzero) fail(ErrorKind::Precondition, "projective point with all zeros");
    return ProjPoint{std::move(coords)};
}

Support support_of(const ProjPoint& x) {
    std::vector<int> labels;
    for (size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] != 0) labels.push_back(static_cast<int>(i) + 1);
    return Support(labels);
}

RatVec moment_value(const WeightSystem& ws, const ProjPoint& x) {
    if (static_cast<int>(x.coords.size()) != ws.n + 1)
        fail(ErrorKind::Precondition, "point dimension differs from weight system");
    Rat norm = 0;
    RatVec num(ws.k, Rat(0));
    for (int i = 0; i <= ws.n; ++i) {
        const Rat sq = x.coords[i] * x.coords[i];
        norm += sq;
        for (int j = 0; j < ws.k; ++j) num[j] += Rat(ws.weights[i][j]) * sq;
    }
    for (int j = 0; j < ws.k; ++j) num[j] /= norm;
    return num;
}

Polytope orbit_polytope(const WeightSystem& ws, const Support& s) {
    std::vector<RatVec> pts;
    for (int l : s.labels) {
        if (l < 1 || l > ws.n + 1)
            fail(ErrorKind::Precondition, "support label out of range");
        pts.push_back(ws.weight_of(l));
    }
    return convex_hull(pts);
}

int orbit_dim(const WeightSystem& ws, const Support& s) {
    RatMat diffs;
    for (size_t i = 1; i < s.labels.size(); ++i)
        diffs.push_back(sub(ws.weight_of(s.labels[i]), ws.weight_of(s.labels[0])));
    return rat_rank(diffs);
}

std::set<Support> closure_supports(const WeightSystem& ws, const Support& s) {
    const Polytope poly = orbit_polytope(ws, s);
    const FaceLattice fl = face_lattice(poly);
    std::set<Support> out;
    for (const auto& level : fl.by_dim)
        for (const auto& ids : level) {
            const Polytope face = face_polytope(poly, ids);
            std::vector<int> labels;
            for (int l : s.labels)
                if (contains(face, ws.weight_of(l)) != Where::Outside)
                    labels.push_back(l);
            out.insert(Support(labels));
        }
    return out;
}

std::vector<Support> all_supports(const WeightSystem& ws) {
    const int m = ws.n + 1;
    if (m > 20) fail(ErrorKind::ScaleCap, "too many labels for support enumeration");
    std::vector<Support> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> labels;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) labels.push_back(i + 1);
        out.emplace_back(labels);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polytope moment_polytope(const WeightSystem& ws) {
    std::vector<RatVec> pts;
    for (int l = 1; l <= ws.n + 1; ++l) pts.push_back(ws.weight_of(l));
    return convex_hull(pts);
}

} // namespace chowlab
