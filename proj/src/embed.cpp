#include "topo/embed.hpp"

#include <algorithm>

#include "topo/surface.hpp"

namespace topo {

namespace {

using R = Rational;

struct P2 {
    R x, y;
};

int sgn(const R& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

RatPoint sub(const RatPoint& a, const RatPoint& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

RatPoint cross(const RatPoint& a, const RatPoint& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

R dot(const RatPoint& a, const RatPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const RatPoint& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

R orient3d(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& d) {
    return dot(cross(sub(b, a), sub(c, a)), sub(d, a));
}

// ---------------------------------------------------------------------------
// Planar layout

std::vector<int> ordered_circle(const ChainZ2& circle) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : circle.support) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> out{adj.begin()->first};
    int prev = -1;
    while (out.size() < adj.size()) {
        int cur = out.back();
        for (int nb : adj.at(cur))
            if (nb != prev) {
                out.push_back(nb);
                prev = cur;
                break;
            }
    }
    return out;
}

// Rational point on the circle of radius r: t -> r((1-t^2), 2t)/(1+t^2).
// The parameter sweeps the circle counterclockwise as t increases.
P2 circle_point(const R& r, const R& t) {
    R d = 1 + t * t;
    return {r * (1 - t * t) / d, r * 2 * t / d};
}

/// Exact Gaussian elimination for the convex-averaging system.  Solves both
/// coordinates at once.  Returns false when the system is singular.
bool solve_harmonic(const std::vector<std::pair<int, int>>& edges, const std::set<int>& unknown,
                    std::map<int, P2>& plane) {
    if (unknown.empty()) return true;
    std::map<int, int> idx;
    for (int v : unknown) idx.emplace(v, static_cast<int>(idx.size()));
    int n = static_cast<int>(idx.size());
    std::vector<std::vector<R>> a(n, std::vector<R>(n + 2, R(0)));
    for (const auto& [u, w] : edges) {
        for (auto [from, to] : {std::pair{u, w}, std::pair{w, u}}) {
            auto it = idx.find(from);
            if (it == idx.end()) continue;
            int row = it->second;
            a[row][row] += 1;
            auto jt = idx.find(to);
            if (jt != idx.end()) {
                a[row][jt->second] -= 1;
            } else {
                const P2& p = plane.at(to);
                a[row][n] += p.x;
                a[row][n + 1] += p.y;
            }
        }
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            R f = a[r][col] / a[col][col];
            for (int c = col; c < n + 2; ++c) a[r][c] -= f * a[col][c];
        }
    }
    for (const auto& [v, i] : idx) plane[v] = P2{a[i][n] / a[i][i], a[i][n + 1] / a[i][i]};
    return true;
}

struct Dsu {
    std::map<int, int> parent;
    int find(int v) {
        auto [it, fresh] = parent.emplace(v, v);
        if (it->second == v) return v;
        return it->second = find(it->second);
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EmbeddingResult embed_planar(const Manifold3& h, const Stratification& st) {
    auto rep = validate(st);
    if (!rep.ok)
        throw precondition_error("embed_planar needs a valid stratification: " + rep.violations[0]);
    if (!is_planar(st)) throw precondition_error("embed_planar needs a planar stratification");
    SimplexSet covered;
    for (const auto& s : st.strata) {
        SimplicialComplex cells = s.cells();
        covered.insert(cells.simplices(3).begin(), cells.simplices(3).end());
    }
    if (covered != h.tets())
        throw precondition_error("the stratification must cover the manifold exactly");

    EmbeddingResult out;

    // Vertices chained by an interface identification share one planar
    // position: prisms are drawn vertically, so v and up(v) need the same
    // (x, y).  Quotient by the up-maps and lay out the union of all bases.
    Dsu classes;
    int virtual_id = 0;
    for (const auto& s : st.strata)
        for (const auto& [lo, hi] : s.up_map()) {
            classes.unite(lo, hi);
            virtual_id = std::max({virtual_id, lo + 1, hi + 1});
        }

    SimplicialComplex merged;
    for (const auto& s : st.strata)
        for (const auto& t : s.base().triangles()) {
            std::vector<int> reps{classes.find(t[0]), classes.find(t[1]), classes.find(t[2])};
            std::sort(reps.begin(), reps.end());
            if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) {
                out.error = "interface identifications pinch the triangle " + t.str();
                return out;
            }
            merged.add(Simplex(reps));
        }
    try {
        validate_surface(merged);
    } catch (const structural_error& e) {
        out.error = std::string("the union of the base surfaces is not a surface: ") + e.what();
        return out;
    }

    std::map<int, P2> plane;  // representative -> planar position
    R offset = 0;
    for (const auto& comp : facet_components(merged.simplices(2))) {
        SimplicialComplex cc;
        cc.add_all(comp);
        SurfaceComplex surf(cc);
        auto cls = classify(surf);
        if (!cls.orientable || cls.genus != 0) {
            out.error = "a union component has genus " + std::to_string(cls.genus) +
                        " and cannot be laid out in the plane";
            return out;
        }
        auto circles = boundary_circles(surf);
        if (circles.empty()) {
            out.error = "a closed union component cannot be laid out in the plane";
            return out;
        }
        std::sort(circles.begin(), circles.end(),
                  [](const ChainZ2& a, const ChainZ2& b) { return a.size() > b.size(); });

        std::set<int> unknown = vertices_of(SimplicialComplex::face_closure(comp));
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : cc.simplices(1)) edges.emplace_back(e[0], e[1]);

        // Longest boundary circle becomes the convex outer polygon; every
        // other boundary circle is coned to a virtual hub so the averaging
        // system keeps its hole open.  Hub positions are discarded.
        auto cyc = ordered_circle(circles[0]);
        R radius = 4;
        int n = static_cast<int>(cyc.size());
        for (int k = 0; k < n; ++k) {
            P2 p = circle_point(radius, R(2 * k - (n - 1)) / 2);
            plane[cyc[k]] = P2{p.x + offset, p.y};
            unknown.erase(cyc[k]);
        }
        for (std::size_t k = 1; k < circles.size(); ++k) {
            int hub = virtual_id++;
            unknown.insert(hub);
            for (int v : vertices_of(circles[k].support)) edges.emplace_back(hub, v);
        }
        if (!solve_harmonic(edges, unknown, plane)) {
            out.error = "layout system is singular for a union component";
            return out;
        }
        offset += 3 * radius;  // components sit in disjoint horizontal bands
    }

    for (std::size_t layer = 0; layer < st.size(); ++layer) {
        const Stratum& s = st.strata[layer];
        R z(static_cast<int>(layer));
        for (int v : s.base().complex().vertex_ids()) {
            const P2& p = plane.at(classes.find(v));
            out.coords[v] = {p.x, p.y, z};
            out.coords[s.up(v)] = {p.x, p.y, z + 1};
        }
    }
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Exact verification

namespace {

struct GeoTet {
    Simplex s;
    std::array<RatPoint, 4> p;
    std::array<double, 6> box;  // xmin,xmax,ymin,ymax,zmin,zmax with margin
};

bool boxes_overlap(const GeoTet& a, const GeoTet& b) {
    for (int i = 0; i < 3; ++i)
        if (a.box[2 * i + 1] < b.box[2 * i] || b.box[2 * i + 1] < a.box[2 * i]) return false;
    return true;
}

bool in_tet(const RatPoint& q, const GeoTet& t) {
    static const int faces[4][4] = {{1, 2, 3, 0}, {0, 2, 3, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}};
    for (const auto& f : faces) {
        R ref = orient3d(t.p[f[0]], t.p[f[1]], t.p[f[2]], t.p[f[3]]);
        R val = orient3d(t.p[f[0]], t.p[f[1]], t.p[f[2]], q);
        if (val != 0 && sgn(val) != sgn(ref)) return false;
    }
    return true;
}

bool in_simplex(const RatPoint& q, const std::vector<RatPoint>& f) {
    if (f.empty()) return false;
    if (f.size() == 1) return q == f[0];
    if (f.size() == 2) {
        RatPoint d = sub(f[1], f[0]), r = sub(q, f[0]);
        if (!is_zero(cross(d, r))) return false;
        R t = dot(r, d), len = dot(d, d);
        return t >= 0 && t <= len;
    }
    if (orient3d(f[0], f[1], f[2], q) != 0) return false;
    RatPoint n = cross(sub(f[1], f[0]), sub(f[2], f[0]));
    for (int i = 0; i < 3; ++i) {
        const RatPoint& a = f[i];
        const RatPoint& b = f[(i + 1) % 3];
        if (sgn(dot(cross(sub(b, a), sub(q, a)), n)) < 0) return false;
    }
    return true;
}

template <typename Fn>
void edge_face_candidates(const GeoTet& a, const GeoTet& b, Fn&& emit) {
    static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    static const int faces[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (const auto& e : edges) {
        const RatPoint& s0 = a.p[e[0]];
        const RatPoint& s1 = a.p[e[1]];
        for (const auto& f : faces) {
            const RatPoint &fa = b.p[f[0]], &fb = b.p[f[1]], &fc = b.p[f[2]];
            R d0 = orient3d(fa, fb, fc, s0);
            R d1 = orient3d(fa, fb, fc, s1);
            if (sgn(d0) * sgn(d1) >= 0) continue;  // touching cases are vertex candidates
            R t = d0 / (d0 - d1);
            RatPoint q{s0[0] + t * (s1[0] - s0[0]), s0[1] + t * (s1[1] - s0[1]),
                       s0[2] + t * (s1[2] - s0[2])};
            if (in_simplex(q, {fa, fb, fc})) emit(q);
        }
    }
}

template <typename Fn>
void edge_edge_candidates(const GeoTet& a, const GeoTet& b, Fn&& emit) {
    static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (const auto& ea : edges) {
        RatPoint p0 = a.p[ea[0]], d1 = sub(a.p[ea[1]], a.p[ea[0]]);
        for (const auto& eb : edges) {
            RatPoint q0 = b.p[eb[0]], d2 = sub(b.p[eb[1]], b.p[eb[0]]);
            RatPoint n = cross(d1, d2);
            if (is_zero(n)) continue;  // parallel: endpoints cover the contacts
            RatPoint r = sub(q0, p0);
            if (dot(r, n) != 0) continue;  // skew
            R nn = dot(n, n);
            R s = dot(cross(r, d2), n) / nn;
            R t = dot(cross(r, d1), n) / nn;
            if (s < 0 || s > 1 || t < 0 || t > 1) continue;
            emit(RatPoint{p0[0] + s * d1[0], p0[1] + s * d1[1], p0[2] + s * d1[2]});
        }
    }
}

}  // namespace

EmbeddingReport verify_embedding(const EmbeddingResult& e, const Manifold3& h) {
    EmbeddingReport rep;
    auto flag = [&rep](std::string v) {
        rep.ok = false;
        rep.violations.push_back(std::move(v));
    };

    for (int v : h.complex().vertex_ids())
        if (!e.coords.count(v)) {
            flag("vertex " + std::to_string(v) + " has no coordinates");
            return rep;
        }
    {
        std::map<RatPoint, int> seen;
        for (const auto& [v, p] : e.coords) {
            auto [it, fresh] = seen.emplace(p, v);
            if (!fresh)
                flag("degeneracy: vertices " + std::to_string(it->second) + " and " +
                     std::to_string(v) + " collide");
        }
    }

    // Embeddedness of the boundary image follows from the pairwise cell test;
    // closedness is a property of the complex itself.
    if (!boundary_circles(h.boundary_surface()).empty())
        flag("the boundary does not map to a closed surface");

    std::vector<GeoTet> tets;
    for (const auto& t : h.tets()) {
        GeoTet g;
        g.s = t;
        for (int i = 0; i < 4; ++i) g.p[i] = e.coords.at(t[i]);
        if (orient3d(g.p[0], g.p[1], g.p[2], g.p[3]) == 0) {
            flag("degenerate cell " + t.str());
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            double lo = g.p[0][i].convert_to<double>(), hi = lo;
            for (int k = 1; k < 4; ++k) {
                double c = g.p[k][i].convert_to<double>();
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            g.box[2 * i] = lo - 1e-9;
            g.box[2 * i + 1] = hi + 1e-9;
        }
        tets.push_back(std::move(g));
    }
    if (!rep.ok) return rep;

    for (std::size_t i = 0; i < tets.size(); ++i) {
        for (std::size_t j = i + 1; j < tets.size(); ++j) {
            const GeoTet& a = tets[i];
            const GeoTet& b = tets[j];
            if (!boxes_overlap(a, b)) continue;

            std::vector<RatPoint> common;
            for (int va : a.s)
                if (b.s.has_vertex(va)) common.push_back(e.coords.at(va));

            bool bad = false;
            auto candidate = [&](const RatPoint& q) {
                if (!bad && in_tet(q, a) && in_tet(q, b) && !in_simplex(q, common)) bad = true;
            };
            for (int k = 0; k < 4 && !bad; ++k) {
                if (!b.s.has_vertex(a.s[k])) candidate(a.p[k]);
                if (!a.s.has_vertex(b.s[k])) candidate(b.p[k]);
            }
            if (!bad) edge_face_candidates(a, b, candidate);
            if (!bad) edge_face_candidates(b, a, candidate);
            if (!bad) edge_edge_candidates(a, b, candidate);
            if (bad)
                flag("cells " + a.s.str() + " and " + b.s.str() +
                     " intersect beyond their common face");
        }
    }
    return rep;
}

}  // namespace topo
