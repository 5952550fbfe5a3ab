#include "chowlab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chowlab/errors.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/lp.hpp"

namespace chowlab {

namespace {

RatMat differences(const std::vector<RatVec>& pts) {
    RatMat d;
    for (size_t i = 1; i < pts.size(); ++i) d.push_back(sub(pts[i], pts[0]));
    return d;
}

int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    return rat_rank(differences(pts));
}

// Scale to a primitive integer vector with positive leading entry; the
// offset is scaled along. Makes H-representations deterministic.
void canonicalize(RatVec& a, Rat& b) {
    Int l = 1;
    for (const Rat& x : a) l = lcm(l, denominator(x));
    l = lcm(l, denominator(b));
    Int g = 0;
    for (Rat& x : a) {
        x *= l;
        g = gcd(g, numerator(x));
    }
    b *= l;
    if (g == 0) g = 1;
    for (Rat& x : a) x /= g;
    b /= g;
    for (const Rat& x : a) {
        if (x == 0) continue;
        if (x < 0) {
            for (Rat& y : a) y = -y;
            b = -b;
        }
        break;
    }
}

bool point_in_hull_of(const RatVec& p, const std::vector<RatVec>& others) {
    if (others.empty()) return false;
    const int m = static_cast<int>(others.size());
    std::vector<LinCon> cons;
    for (int j = 0; j < m; ++j) {
        RatVec e(m, Rat(0));
        e[j] = 1;
        cons.push_back(make_con(e, Rel::GE, Rat(0)));
    }
    cons.push_back(make_con(RatVec(m, Rat(1)), Rel::EQ, Rat(1)));
    for (size_t c = 0; c < p.size(); ++c) {
        RatVec row(m);
        for (int j = 0; j < m; ++j) row[j] = others[j][c];
        cons.push_back(make_con(row, Rel::EQ, p[c]));
    }
    return lp_feasible(cons, m).feasible;
}

} // namespace

std::vector<int> cyclic_order_2d(const std::vector<RatVec>& pts) {
    if (pts.size() < 3) {
        std::vector<int> all(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }
    RatVec c(2, Rat(0));
    for (const auto& p : pts) {
        c[0] += p[0];
        c[1] += p[1];
    }
    c[0] /= static_cast<int>(pts.size());
    c[1] /= static_cast<int>(pts.size());
    auto half = [&](const RatVec& p) {
        const Rat dy = p[1] - c[1], dx = p[0] - c[0];
        return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
    };
    std::vector<int> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const int hi = half(pts[i]), hj = half(pts[j]);
        if (hi != hj) return hi < hj;
        const Rat cross = (pts[i][0] - c[0]) * (pts[j][1] - c[1]) -
                          (pts[i][1] - c[1]) * (pts[j][0] - c[0]);
        if (cross != 0) return cross > 0;
        // Same ray from the centroid: nearer point first.
        const Rat di = abs(pts[i][0] - c[0]) + abs(pts[i][1] - c[1]);
        const Rat dj = abs(pts[j][0] - c[0]) + abs(pts[j][1] - c[1]);
        return di < dj;
    });
    return order;
}

Polytope convex_hull(const std::vector<RatVec>& points) {
    if (points.empty()) fail(ErrorKind::EmptyPolytope, "convex_hull of no points");
    const int ambient = static_cast<int>(points[0].size());
    if (ambient > 3)
        fail(ErrorKind::UnsupportedDimension,
             "convex_hull supports ambient dimension <= 3");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ambient)
            fail(ErrorKind::Precondition, "convex_hull: mixed dimensions");

    std::vector<RatVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope p;
    p.ambient = ambient;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<RatVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!point_in_hull_of(pts[i], others)) p.verts.push_back(pts[i]);
    }
    p.dim = affine_dim(p.verts);

    // Affine hull equalities.
    if (p.verts.size() == 1) {
        for (int i = 0; i < ambient; ++i) {
            RatVec a(ambient, Rat(0));
            a[i] = 1;
            Rat b = p.verts[0][i];
            canonicalize(a, b);
            p.eqs.emplace_back(a, b);
        }
    } else {
        for (RatVec a : null_space(differences(p.verts))) {
            Rat b = dot(a, p.verts[0]);
            canonicalize(a, b);
            p.eqs.emplace_back(a, b);
        }
    }
    std::sort(p.eqs.begin(), p.eqs.end());

    // Facet inequalities: supporting hyperplanes with (dim-1)-dimensional
    // contact, enumerated over small vertex subsets.
    const int d = p.dim;
    if (d >= 1) {
        // Direction basis of the affine hull.
        RatMat diffs = differences(p.verts);
        RatMat dirbasis;
        for (const RatVec& d : diffs) {
            dirbasis.push_back(d);
            if (rat_rank(dirbasis) < static_cast<int>(dirbasis.size()))
                dirbasis.pop_back();
        }
        std::set<std::pair<RatVec, Rat>> seen;
        const int m = static_cast<int>(p.verts.size());
        std::vector<std::vector<int>> subsets;
        if (d == 1) {
            for (int i = 0; i < m; ++i) subsets.push_back({i});
        } else if (d == 2) {
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) subsets.push_back({i, j});
        } else {
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    for (int l = j + 1; l < m; ++l) subsets.push_back({i, j, l});
        }
        for (const auto& sub_ids : subsets) {
            // Normal direction inside the hull: a = sum alpha_l dir_l with
            // a orthogonal to the subset's differences.
            RatMat sys;
            for (size_t t = 1; t < sub_ids.size(); ++t) {
                const RatVec diff = sub(p.verts[sub_ids[t]], p.verts[sub_ids[0]]);
                RatVec row(dirbasis.size());
                for (size_t l = 0; l < dirbasis.size(); ++l)
                    row[l] = dot(dirbasis[l], diff);
                sys.push_back(row);
            }
            std::vector<RatVec> alphas;
            if (sys.empty()) {
                // d == 1: the single direction itself.
                RatVec one(dirbasis.size(), Rat(0));
                one[0] = 1;
                alphas.push_back(one);
            } else {
                alphas = null_space(sys);
            }
            if (alphas.size() != 1) continue; // subset does not span a hyperplane
            RatVec a(ambient, Rat(0));
            for (size_t l = 0; l < dirbasis.size(); ++l)
                a = add(a, scale(alphas[0][l], dirbasis[l]));
            if (is_zero(a)) continue;
            Rat b = dot(a, p.verts[sub_ids[0]]);
            bool above = false, below = false;
            for (const auto& v : p.verts) {
                const Rat s = dot(a, v);
                if (s > b) above = true;
                if (s < b) below = true;
            }
            if (above && below) continue; // not supporting
            if (above) {
                a = scale(-1, a);
                b = -b;
            }
            // Contact must be a facet, not a lower face.
            std::vector<RatVec> contact;
            for (const auto& v : p.verts)
                if (dot(a, v) == b) contact.push_back(v);
            if (affine_dim(contact) != d - 1) continue;
            canonicalize(a, b);
            // canonicalize may flip orientation; restore "<= b".
            bool flipped = false;
            for (const auto& v : p.verts)
                if (dot(a, v) > b) {
                    flipped = true;
                    break;
                }
            if (flipped) {
                a = scale(-1, a);
                b = -b;
            }
            seen.insert({a, b});
        }
        p.ineqs.assign(seen.begin(), seen.end());
    }
    return p;
}

Where contains(const Polytope& p, const RatVec& x) {
    if (p.dim < 0) fail(ErrorKind::EmptyPolytope, "contains: empty polytope");
    if (static_cast<int>(x.size()) != p.ambient)
        fail(ErrorKind::Precondition, "contains: dimension mismatch");
    for (const auto& [a, b] : p.eqs)
        if (dot(a, x) != b) return Where::Outside;
    bool on_boundary = false;
    for (const auto& [a, b] : p.ineqs) {
        const Rat s = dot(a, x);
        if (s > b) return Where::Outside;
        if (s == b) on_boundary = true;
    }
    return on_boundary ? Where::Boundary : Where::Interior;
}

RatVec relative_interior_point(const Polytope& p) {
    if (p.dim < 0 || p.verts.empty())
        fail(ErrorKind::EmptyPolytope, "relative_interior_point: empty polytope");
    RatVec c(p.ambient, Rat(0));
    for (const auto& v : p.verts) c = add(c, v);
    return scale(Rat(1, static_cast<Int>(p.verts.size())), c);
}

FaceLattice face_lattice(const Polytope& p) {
    if (p.dim < 0) fail(ErrorKind::EmptyPolytope, "face_lattice: empty polytope");
    const int m = static_cast<int>(p.verts.size());
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    std::vector<std::vector<int>> contacts;
    for (const auto& [a, b] : p.ineqs) {
        std::vector<int> c;
        for (int i = 0; i < m; ++i)
            if (dot(a, p.verts[i]) == b) c.push_back(i);
        contacts.push_back(c);
    }
    std::set<std::vector<int>> faces;
    faces.insert(all);
    std::vector<std::vector<int>> queue{all};
    while (!queue.empty()) {
        const std::vector<int> f = queue.back();
        queue.pop_back();
        for (const auto& c : contacts) {
            std::vector<int> inter;
            std::set_intersection(f.begin(), f.end(), c.begin(), c.end(),
                                  std::back_inserter(inter));
            if (inter.empty() || faces.count(inter)) continue;
            faces.insert(inter);
            queue.push_back(inter);
        }
    }
    FaceLattice fl;
    fl.by_dim.assign(p.dim + 1, {});
    for (const auto& f : faces) {
        std::vector<RatVec> pts;
        for (int id : f) pts.push_back(p.verts[id]);
        const int d = affine_dim(pts);
        fl.by_dim[d].push_back(f);
    }
    for (auto& level : fl.by_dim) std::sort(level.begin(), level.end());
    return fl;
}

Polytope face_polytope(const Polytope& p, const std::vector<int>& vertex_ids) {
    std::vector<RatVec> pts;
    for (int id : vertex_ids) pts.push_back(p.verts[id]);
    return convex_hull(pts);
}

bool is_face_of(const Polytope& face, const Polytope& p) {
    if (face.dim < 0) return true;
    if (face == p) return true;
    if (face.dim >= p.dim) return false;
    const FaceLattice fl = face_lattice(p);
    if (face.dim >= static_cast<int>(fl.by_dim.size())) return false;
    for (const auto& ids : fl.by_dim[face.dim]) {
        std::vector<RatVec> pts;
        for (int id : ids) pts.push_back(p.verts[id]);
        std::sort(pts.begin(), pts.end());
        if (pts == face.verts) return true;
    }
    return false;
}

bool polytope_subset(const Polytope& a, const Polytope& b) {
    for (const auto& v : a.verts)
        if (contains(b, v) == Where::Outside) return false;
    return true;
}

Polytope intersect(const Polytope& a, const Polytope& b) {
    if (a.ambient != b.ambient)
        fail(ErrorKind::Precondition, "intersect: mixed ambient dimensions");
    if (a.ambient > 2)
        fail(ErrorKind::UnsupportedDimension, "intersect supports ambient <= 2");
    std::vector<RatVec> candidates;
    for (const auto& v : a.verts)
        if (contains(b, v) != Where::Outside) candidates.push_back(v);
    for (const auto& v : b.verts)
        if (contains(a, v) != Where::Outside) candidates.push_back(v);
    if (a.ambient == 2) {
        auto edges = [](const Polytope& p) {
            std::vector<std::pair<RatVec, RatVec>> es;
            if (p.dim == 1) {
                es.emplace_back(p.verts.front(), p.verts.back());
            } else if (p.dim == 2) {
                const FaceLattice fl = face_lattice(p);
                for (const auto& ids : fl.by_dim[1])
                    es.emplace_back(p.verts[ids[0]], p.verts[ids[1]]);
            }
            return es;
        };
        auto cross = [](const RatVec& o, const RatVec& u, const RatVec& v) {
            return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0]);
        };
        for (const auto& [p1, p2] : edges(a))
            for (const auto& [q1, q2] : edges(b)) {
                const Rat d1 = cross(p1, p2, q1), d2 = cross(p1, p2, q2);
                const Rat d3 = cross(q1, q2, p1), d4 = cross(q1, q2, p2);
                const bool proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                                    ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
                if (!proper) continue;
                const Rat t = d3 / (d3 - d4);
                candidates.push_back({p1[0] + t * (p2[0] - p1[0]),
                                      p1[1] + t * (p2[1] - p1[1])});
            }
    }
    Polytope out;
    out.ambient = a.ambient;
    if (candidates.empty()) return out; // empty intersection, dim == -1
    return convex_hull(candidates);
}

Rat normalized_volume(const Polytope& p) {
    if (p.dim < 0) fail(ErrorKind::EmptyPolytope, "normalized_volume: empty");
    if (p.dim == 0) return Rat(1);
    if (p.dim == 1) {
        // Length along the segment direction; dim! == 1.
        Rat s = 0;
        const RatVec d = sub(p.verts.back(), p.verts.front());
        for (const Rat& x : d) s += x * x;
        // The vertices are rational, so the squared length is rational; for
        // axis-skew segments we report the L2 length only when it is
        // rational, otherwise the squared form would be needed. All callers
        // pass axis-aligned or 1-dimensional-ambient data.
        if (p.ambient == 1) return abs(d[0]);
        fail(ErrorKind::UnsupportedDimension,
             "normalized_volume: 1-dimensional cells only in ambient 1");
    }
    if (p.dim != 2 || p.ambient != 2)
        fail(ErrorKind::UnsupportedDimension,
             "normalized_volume supports dim <= 2 in matching ambient");
    const std::vector<int> order = cyclic_order_2d(p.verts);
    Rat total = 0;
    const RatVec& o = p.verts[order[0]];
    for (size_t i = 1; i + 1 < order.size(); ++i) {
        const RatVec& a = p.verts[order[i]];
        const RatVec& b = p.verts[order[i + 1]];
        total += abs((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
    }
    return total;
}

IntMat standard_lattice(int k) {
    IntMat b(k, IntVec(k, Int(0)));
    for (int i = 0; i < k; ++i) b[i][i] = 1;
    return b;
}

Int lattice_volume(const Polytope& cell, const IntMat& basis) {
    if (cell.dim < 0) fail(ErrorKind::EmptyPolytope, "lattice_volume: empty");
    const int r = static_cast<int>(basis.size());
    if (cell.dim != r)
        fail(ErrorKind::Precondition,
             "lattice_volume: polytope dimension differs from lattice rank");
    if (r == 0) return 1;
    std::vector<IntVec> u;
    for (const auto& v : cell.verts) {
        auto coords = lattice_coordinates(basis, sub(v, cell.verts[0]));
        if (!coords)
            fail(ErrorKind::Precondition, "lattice_volume: vertex off the lattice");
        u.push_back(*coords);
    }
    if (r == 1) {
        Int lo = u[0][0], hi = u[0][0];
        for (const auto& x : u) {
            lo = std::min(lo, x[0]);
            hi = std::max(hi, x[0]);
        }
        return hi - lo;
    }
    if (r == 2) {
        std::vector<RatVec> pts;
        for (const auto& x : u) pts.push_back({Rat(x[0]), Rat(x[1])});
        const std::vector<int> order = cyclic_order_2d(pts);
        Int total = 0;
        const IntVec& o = u[order[0]];
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            const IntVec& s = u[order[i]];
            const IntVec& t = u[order[i + 1]];
            total += abs((s[0] - o[0]) * (t[1] - o[1]) -
                         (s[1] - o[1]) * (t[0] - o[0]));
        }
        return total;
    }
    // r == 3: fan from vertex 0 over triangulated facets.
    const FaceLattice fl = face_lattice(cell);
    Int total = 0;
    for (const auto& ids : fl.by_dim[2]) {
        if (std::find(ids.begin(), ids.end(), 0) != ids.end()) continue;
        // Order the facet vertices cyclically inside their plane.
        const IntVec& o = u[ids[0]];
        RatMat plane;
        for (size_t i = 1; i < ids.size(); ++i) {
            RatVec d(3);
            for (int c = 0; c < 3; ++c) d[c] = Rat(u[ids[i]][c] - o[c]);
            plane.push_back(d);
        }
        // Two independent directions in the facet plane.
        RatMat frame;
        for (const auto& d : plane) {
            frame.push_back(d);
            if (rat_rank(frame) < static_cast<int>(frame.size())) frame.pop_back();
            if (frame.size() == 2) break;
        }
        std::vector<RatVec> coords2;
        std::vector<int> order_ids;
        for (int id : ids) {
            RatVec d(3);
            for (int c = 0; c < 3; ++c) d[c] = Rat(u[id][c] - o[c]);
            // Least-squares-free exact coordinates: solve frame^T alpha = d.
            RatMat sys(3, RatVec(2));
            for (int c = 0; c < 3; ++c)
                for (int l = 0; l < 2; ++l) sys[c][l] = frame[l][c];
            auto alpha = solve_linear(sys, d);
            if (!alpha) fail(ErrorKind::Internal, "lattice_volume: facet frame");
            coords2.push_back(*alpha);
            order_ids.push_back(id);
        }
        const std::vector<int> order = cyclic_order_2d(coords2);
        auto det3 = [&](const IntVec& a0, const IntVec& a1, const IntVec& a2) {
            IntMat m = {IntVec{a0[0], a0[1], a0[2]},
                        IntVec{a1[0], a1[1], a1[2]},
                        IntVec{a2[0], a2[1], a2[2]}};
            return int_det(m);
        };
        const IntVec& apex = u[0];
        const IntVec& first = u[order_ids[order[0]]];
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            const IntVec& s = u[order_ids[order[i]]];
            const IntVec& t = u[order_ids[order[i + 1]]];
            IntVec e1(3), e2(3), e3(3);
            for (int c = 0; c < 3; ++c) {
                e1[c] = first[c] - apex[c];
                e2[c] = s[c] - apex[c];
                e3[c] = t[c] - apex[c];
            }
            total += abs(det3(e1, e2, e3));
        }
    }
    return total;
}

} // namespace chowlab
