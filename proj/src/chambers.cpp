#include "chowlab/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chowlab/errors.hpp"

namespace chowlab {

namespace {

void finish(ChamberComplex& cc) {
    std::sort(cc.chambers.begin(), cc.chambers.end(),
              [](const Chamber& a, const Chamber& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.cell.verts < b.cell.verts;
              });
    for (size_t i = 0; i < cc.chambers.size(); ++i)
        cc.chambers[i].id = static_cast<int>(i);
    cc.face_relations.clear();
    for (const Chamber& d : cc.chambers)
        for (const Chamber& c : cc.chambers) {
            if (d.dim >= c.dim) continue;
            if (polytope_subset(d.cell, c.cell))
                cc.face_relations.emplace_back(d.id, c.id);
        }
}

ChamberComplex build_rank1(const WeightSystem& ws) {
    std::set<Rat> values;
    for (int l = 1; l <= ws.n + 1; ++l) values.insert(ws.weight_of(l)[0]);
    std::vector<Rat> sorted(values.begin(), values.end());
    ChamberComplex cc;
    cc.P = moment_polytope(ws);
    for (const Rat& v : sorted) {
        Chamber ch;
        ch.cell = convex_hull({{v}});
        ch.dim = 0;
        cc.chambers.push_back(ch);
    }
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        Chamber ch;
        ch.cell = convex_hull({{sorted[i]}, {sorted[i + 1]}});
        ch.dim = 1;
        cc.chambers.push_back(ch);
    }
    finish(cc);
    return cc;
}

// ---- rank 2: exact arrangement of the segments between weight points ----

struct Arrangement {
    std::vector<RatVec> nodes;
    std::map<RatVec, int> node_id;
    std::set<std::pair<int, int>> edges; // sorted node-id pairs

    int add_node(const RatVec& p) {
        auto it = node_id.find(p);
        if (it != node_id.end()) return it->second;
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(p);
        node_id.emplace(p, id);
        return id;
    }
};

Rat cross3(const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const RatVec& p, const RatVec& a, const RatVec& b) {
    if (cross3(a, b, p) != 0) return false;
    const Rat t = (b[0] != a[0]) ? (p[0] - a[0]) / (b[0] - a[0])
                                 : (p[1] - a[1]) / (b[1] - a[1]);
    return t >= 0 && t <= 1;
}

ChamberComplex build_rank2(const WeightSystem& ws) {
    ChamberComplex cc;
    cc.P = moment_polytope(ws);

    // Distinct weight points and distinct segments between them.
    std::vector<RatVec> pts;
    {
        std::set<RatVec> seen;
        for (int l = 1; l <= ws.n + 1; ++l) seen.insert(ws.weight_of(l));
        pts.assign(seen.begin(), seen.end());
    }
    std::set<std::pair<RatVec, RatVec>> segs;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            segs.insert({std::min(pts[i], pts[j]), std::max(pts[i], pts[j])});

    Arrangement arr;
    for (const auto& p : pts) arr.add_node(p);

    // Proper crossings create new nodes.
    std::vector<std::pair<RatVec, RatVec>> seglist(segs.begin(), segs.end());
    for (size_t i = 0; i < seglist.size(); ++i)
        for (size_t j = i + 1; j < seglist.size(); ++j) {
            const auto& [p1, p2] = seglist[i];
            const auto& [q1, q2] = seglist[j];
            const Rat d1 = cross3(p1, p2, q1), d2 = cross3(p1, p2, q2);
            const Rat d3 = cross3(q1, q2, p1), d4 = cross3(q1, q2, p2);
            const bool proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                                ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
            if (!proper) continue;
            const Rat t = d3 / (d3 - d4);
            arr.add_node({p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1])});
        }

    // Split each segment at every node lying on it.
    for (const auto& [a, b] : seglist) {
        std::vector<std::pair<Rat, int>> onseg;
        for (size_t id = 0; id < arr.nodes.size(); ++id) {
            const RatVec& p = arr.nodes[id];
            if (!on_segment(p, a, b)) continue;
            const Rat t = (b[0] != a[0]) ? (p[0] - a[0]) / (b[0] - a[0])
                                         : (p[1] - a[1]) / (b[1] - a[1]);
            onseg.emplace_back(t, static_cast<int>(id));
        }
        std::sort(onseg.begin(), onseg.end());
        for (size_t i = 0; i + 1 < onseg.size(); ++i) {
            const int u = onseg[i].second, v = onseg[i + 1].second;
            if (u != v) arr.edges.insert({std::min(u, v), std::max(u, v)});
        }
    }

    // Half-edge rings: outgoing directions sorted counterclockwise.
    const int nn = static_cast<int>(arr.nodes.size());
    std::vector<std::vector<int>> ring(nn);
    for (const auto& [u, v] : arr.edges) {
        ring[u].push_back(v);
        ring[v].push_back(u);
    }
    auto angle_less = [&](int from, int t1, int t2) {
        const RatVec& o = arr.nodes[from];
        const RatVec& a = arr.nodes[t1];
        const RatVec& b = arr.nodes[t2];
        const Rat ady = a[1] - o[1], adx = a[0] - o[0];
        const Rat bdy = b[1] - o[1], bdx = b[0] - o[0];
        const int ha = (ady < 0 || (ady == 0 && adx < 0)) ? 1 : 0;
        const int hb = (bdy < 0 || (bdy == 0 && bdx < 0)) ? 1 : 0;
        if (ha != hb) return ha < hb;
        return adx * bdy - ady * bdx > 0;
    };
    for (int u = 0; u < nn; ++u)
        std::sort(ring[u].begin(), ring[u].end(),
                  [&](int a, int b) { return angle_less(u, a, b); });

    // Face walk: the face to the left of u->v continues with the ring
    // predecessor of the reverse edge.
    std::set<std::pair<int, int>> visited;
    for (const auto& [eu, ev] : arr.edges) {
        for (const auto& [su, sv] :
             {std::pair<int, int>{eu, ev}, std::pair<int, int>{ev, eu}}) {
            if (visited.count({su, sv})) continue;
            std::vector<int> cycle;
            int u = su, v = sv;
            do {
                visited.insert({u, v});
                cycle.push_back(u);
                const auto& rv = ring[v];
                const auto it = std::find(rv.begin(), rv.end(), u);
                if (it == rv.end())
                    fail(ErrorKind::Internal, "arrangement: broken half-edge ring");
                const size_t pos = static_cast<size_t>(it - rv.begin());
                const int w = rv[(pos + rv.size() - 1) % rv.size()];
                u = v;
                v = w;
            } while (!(u == su && v == sv));
            // Signed area: positive for bounded faces walked this way.
            Rat area2 = 0;
            for (size_t i = 0; i < cycle.size(); ++i) {
                const RatVec& p = arr.nodes[cycle[i]];
                const RatVec& q = arr.nodes[cycle[(i + 1) % cycle.size()]];
                area2 += p[0] * q[1] - p[1] * q[0];
            }
            if (area2 <= 0) continue;
            std::vector<RatVec> cyclepts;
            for (int id : cycle) cyclepts.push_back(arr.nodes[id]);
            Chamber ch;
            ch.cell = convex_hull(cyclepts);
            ch.dim = 2;
            if (ch.cell.dim != 2)
                fail(ErrorKind::Internal, "arrangement: degenerate bounded face");
            // The walk must produce a convex cell: every cycle node sits on
            // the hull boundary.
            for (const auto& p : cyclepts)
                if (contains(ch.cell, p) == Where::Interior)
                    fail(ErrorKind::Internal, "arrangement: non-convex face");
            cc.chambers.push_back(ch);
        }
    }

    for (const auto& [u, v] : arr.edges) {
        Chamber ch;
        ch.cell = convex_hull({arr.nodes[u], arr.nodes[v]});
        ch.dim = 1;
        cc.chambers.push_back(ch);
    }
    for (const auto& p : arr.nodes) {
        Chamber ch;
        ch.cell = convex_hull({p});
        ch.dim = 0;
        cc.chambers.push_back(ch);
    }
    finish(cc);
    return cc;
}

} // namespace

std::vector<int> ChamberComplex::top_chamber_ids() const {
    std::vector<int> ids;
    const int d = P.dim;
    for (const Chamber& c : chambers)
        if (c.dim == d) ids.push_back(c.id);
    return ids;
}

ChamberComplex build_chambers(const WeightSystem& ws) {
    if (ws.k > 2)
        fail(ErrorKind::UnsupportedRank,
             "chamber complex supports torus rank k <= 2");
    return ws.k == 1 ? build_rank1(ws) : build_rank2(ws);
}

const Chamber& locate(const ChamberComplex& cc, const RatVec& r) {
    if (contains(cc.P, r) == Where::Outside)
        fail(ErrorKind::OutsidePolytope, "charge lies outside the moment polytope");
    for (const Chamber& c : cc.chambers)
        if (contains(c.cell, r) == Where::Interior) return c;
    fail(ErrorKind::Internal, "locate: no chamber owns the point");
}

} // namespace chowlab
