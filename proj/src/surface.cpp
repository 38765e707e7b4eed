#include "topo/surface.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "topo/gf2.hpp"
#include "topo/homology.hpp"

namespace topo {

namespace {

// Direction a triangle (sorted vertices) induces on one of its edges when
// traversed v0 -> v1 -> v2 -> v0: true means low-to-high vertex order.
bool forward_on(const Simplex& tri, const Simplex& e) {
    if (e == Simplex{tri[0], tri[1]} || e == Simplex{tri[1], tri[2]}) return true;
    return false;  // {v0, v2} is traversed high-to-low
}

std::map<int, std::vector<Simplex>> edges_at_vertices(const SimplexSet& edges) {
    std::map<int, std::vector<Simplex>> at;
    for (const auto& e : edges) {
        at[e[0]].push_back(e);
        at[e[1]].push_back(e);
    }
    return at;
}

// Walk a disjoint union of simple closed edge-cycles into its components.
// Every vertex of `edges` must meet exactly two of them.
std::vector<ChainZ2> walk_circles(const SimplexSet& edges) {
    auto at = edges_at_vertices(edges);
    for (const auto& [v, es] : at)
        if (es.size() != 2)
            throw structural_error("edge set is not a union of simple circles at vertex " +
                                   std::to_string(v));
    std::vector<ChainZ2> out;
    SimplexSet used;
    for (const auto& start : edges) {
        if (used.count(start)) continue;
        ChainZ2 circle(1, {});
        Simplex cur = start;
        int v = cur[0];
        do {
            circle.support.insert(cur);
            used.insert(cur);
            int w = cur[0] == v ? cur[1] : cur[0];
            const auto& pair = at.at(w);
            cur = (pair[0] == cur) ? pair[1] : pair[0];
            v = w;
        } while (cur != start);
        out.push_back(std::move(circle));
    }
    return out;
}

SimplexSet boundary_edges_of_triangles(const SimplicialComplex& ambient, const SimplexSet& tris) {
    std::map<Simplex, int> edge_count;
    for (const auto& t : tris)
        for (int i = 0; i < 3; ++i) ++edge_count[t.facet(i)];
    SimplexSet out;
    for (const auto& [e, n] : edge_count)
        if (n == 1) out.insert(e);
    (void)ambient;
    return out;
}

}  // namespace

void validate_surface(const SimplicialComplex& c) {
    if (c.dim() > 2) throw structural_error("surface complex has a 3-simplex");
    for (const auto& e : c.simplices(1)) {
        auto cf = c.cofaces(e, 2);
        if (cf.empty() || cf.size() > 2)
            throw structural_error("edge " + e.str() + " lies in " + std::to_string(cf.size()) +
                                   " triangles");
    }
    for (const auto& v : c.simplices(0)) {
        if (c.cofaces(v, 2).empty())
            throw structural_error("vertex " + v.str() + " lies in no triangle");
        vertex_link_order(c, v[0]);  // throws when the link is not one path/cycle
    }
}

SurfaceComplex::SurfaceComplex(SimplicialComplex c) : c_(std::move(c)) {
    validate_surface(c_);
}

std::pair<std::vector<int>, bool> vertex_link_order(const SimplicialComplex& c, int v) {
    std::map<int, std::vector<int>> adj;  // link vertex -> link neighbours
    for (const auto& t : c.cofaces(Simplex{v}, 2)) {
        std::vector<int> others;
        for (int i = 0; i < t.size(); ++i)
            if (t[i] != v) others.push_back(t[i]);
        adj[others[0]].push_back(others[1]);
        adj[others[1]].push_back(others[0]);
    }
    if (adj.empty()) return {{}, false};
    int start = -1;
    bool cycle = true;
    for (const auto& [u, ns] : adj) {
        if (ns.size() > 2) throw structural_error("nonmanifold link at vertex " + std::to_string(v));
        if (ns.size() == 1 && (start < 0)) {
            start = u;
            cycle = false;
        }
    }
    if (cycle) start = adj.begin()->first;
    std::vector<int> order{start};
    std::set<int> seen{start};
    int cur = start;
    while (true) {
        int next = -1;
        for (int u : adj.at(cur))
            if (!seen.count(u)) {
                next = u;
                break;
            }
        if (next < 0) break;
        order.push_back(next);
        seen.insert(next);
        cur = next;
    }
    if (order.size() != adj.size())
        throw structural_error("disconnected link at vertex " + std::to_string(v));
    return {order, cycle};
}

bool is_circle(const ChainZ2& c) {
    if (c.dim != 1 || c.support.empty()) return false;
    auto at = edges_at_vertices(c.support);
    for (const auto& [v, es] : at)
        if (es.size() != 2) return false;
    // connectivity: walk from one edge and count
    try {
        return walk_circles(c.support).size() == 1;
    } catch (const structural_error&) {
        return false;
    }
}

std::vector<SurfaceClass> classify_components(const SurfaceComplex& s) {
    std::vector<SurfaceClass> out;
    for (const auto& comp : facet_components(s.triangles())) {
        SimplicialComplex sub;
        sub.add_all(comp);

        // orientability: propagate coherent orientations over the dual graph
        std::map<Simplex, int> sign;  // +1 keeps sorted order, -1 flips
        bool orientable = true;
        std::map<Simplex, std::vector<Simplex>> tris_at_edge;
        for (const auto& t : comp)
            for (int i = 0; i < 3; ++i) tris_at_edge[t.facet(i)].push_back(t);
        std::vector<Simplex> queue{*comp.begin()};
        sign[*comp.begin()] = 1;
        while (!queue.empty()) {
            Simplex t = queue.back();
            queue.pop_back();
            for (int i = 0; i < 3; ++i) {
                Simplex e = t.facet(i);
                for (const auto& u : tris_at_edge[e]) {
                    if (u == t) continue;
                    // coherent iff the two triangles traverse e oppositely
                    int want = (forward_on(t, e) == forward_on(u, e)) ? -sign[t] : sign[t];
                    auto it = sign.find(u);
                    if (it == sign.end()) {
                        sign[u] = want;
                        queue.push_back(u);
                    } else if (it->second != want) {
                        orientable = false;
                    }
                }
            }
        }

        SurfaceClass sc;
        sc.orientable = orientable;
        sc.euler = sub.euler_characteristic();
        sc.boundary_count =
            static_cast<int>(walk_circles(boundary_edges_of_triangles(sub, comp)).size());
        if (orientable)
            sc.genus = (2 - sc.euler - sc.boundary_count) / 2;
        else
            sc.genus = 2 - sc.euler - sc.boundary_count;  // crosscap number
        out.push_back(sc);
    }
    return out;
}

SurfaceClass classify(const SurfaceComplex& s) {
    auto comps = classify_components(s);
    if (comps.size() != 1)
        throw precondition_error("classify expects a connected surface, found " +
                                 std::to_string(comps.size()) + " components");
    return comps[0];
}

std::vector<ChainZ2> boundary_circles(const SurfaceComplex& s) {
    return walk_circles(boundary_edges_of_triangles(s.complex(), s.triangles()));
}

SurfaceComplex attach_disc(const SurfaceComplex& s, const ChainZ2& k) {
    if (!is_circle(k)) throw precondition_error("attach_disc: chain is not a simple circle");
    auto bd = boundary_edges_of_triangles(s.complex(), s.triangles());
    for (const auto& e : k.support)
        if (!bd.count(e))
            throw precondition_error("attach_disc: edge " + e.str() + " is not a boundary edge");
    SimplicialComplex c = s.complex();
    int apex = c.max_vertex_id() + 1;
    for (const auto& e : k.support) c.add(e.join(Simplex{apex}));
    return SurfaceComplex(std::move(c));
}

bool is_planar(const SurfaceComplex& s) {
    for (const auto& sc : classify_components(s))
        if (!sc.orientable || sc.genus != 0 || sc.boundary_count == 0) return false;
    return true;
}

SimplexSet subsurface_interior(const SurfaceComplex& s, const SimplexSet& t) {
    SimplexSet closed = SimplicialComplex::face_closure(t);
    SimplexSet interior;
    for (const auto& sx : closed) {
        bool inside = true;
        if (sx.dim() == 2) {
            inside = true;  // a triangle of t never touches the complement's interior
        } else {
            for (const auto& cf : s.complex().cofaces(sx, 2))
                if (!closed.count(cf)) inside = false;
        }
        if (inside) interior.insert(sx);
    }
    return interior;
}

std::vector<ChainZ2> extract_circuits(const SurfaceComplex& s, const ChainZ2& z) {
    if (z.dim != 1) throw precondition_error("extract_circuits expects a 1-chain");
    if (!s.complex().boundary(z).empty())
        throw precondition_error("extract_circuits expects a cycle");
    // Pair the cycle edges at each vertex along the vertex rotation; then walk,
    // pinching off a simple circuit whenever the walk revisits a vertex.
    std::map<int, std::vector<Simplex>> at = edges_at_vertices(z.support);
    std::map<std::pair<int, Simplex>, Simplex> partner;
    for (const auto& [v, es] : at) {
        auto [order, is_cycle] = vertex_link_order(s.complex(), v);
        (void)is_cycle;
        std::map<int, std::size_t> pos;
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        std::vector<Simplex> sorted = es;
        std::sort(sorted.begin(), sorted.end(), [&](const Simplex& a, const Simplex& b) {
            int ua = a[0] == v ? a[1] : a[0];
            int ub = b[0] == v ? b[1] : b[0];
            return pos.at(ua) < pos.at(ub);
        });
        for (std::size_t i = 0; i + 1 < sorted.size(); i += 2) {
            partner[{v, sorted[i]}] = sorted[i + 1];
            partner[{v, sorted[i + 1]}] = sorted[i];
        }
    }

    std::vector<ChainZ2> out;
    SimplexSet remaining = z.support;
    while (!remaining.empty()) {
        // walk from the lowest remaining edge until a vertex repeats, then
        // pinch that simple loop off; unconsumed prefix edges stay behind
        Simplex cur = *remaining.begin();
        int v = cur[0];
        std::vector<Simplex> trail{cur};
        std::map<int, std::size_t> where{{v, 0}};
        while (true) {
            int w = cur[0] == v ? cur[1] : cur[0];
            auto hit = where.find(w);
            if (hit != where.end()) {
                ChainZ2 circle(1, {});
                for (std::size_t i = hit->second; i < trail.size(); ++i) {
                    circle.support.insert(trail[i]);
                    remaining.erase(trail[i]);
                }
                out.push_back(std::move(circle));
                break;
            }
            where[w] = trail.size();
            // continue along the rotation partner when possible
            Simplex next{0};
            bool found = false;
            auto pit = partner.find({w, cur});
            if (pit != partner.end() && remaining.count(pit->second) && pit->second != cur) {
                next = pit->second;
                found = true;
            } else {
                for (const auto& e : at.at(w))
                    if (remaining.count(e) && e != cur) {
                        next = e;
                        found = true;
                        break;
                    }
            }
            if (!found)
                throw structural_error("extract_circuits: walk stuck (chain not a cycle?)");
            trail.push_back(next);
            v = w;
            cur = next;
        }
    }
    return out;
}

namespace {

// Solve for a 2-chain x supported on `unknowns` with boundary matching `c`
// on every edge of `targets`; returns c + boundary(x) on success.
std::optional<ChainZ2> cancel_on(const SurfaceComplex& s, const ChainZ2& c,
                                 const SimplexSet& targets,
                                 const std::vector<Simplex>& unknowns) {
    std::vector<Simplex> rows(targets.begin(), targets.end());
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    Gf2Reducer red(rows.size(), unknowns.size());
    for (const auto& t : unknowns) {
        BitVec col(rows.size());
        for (int i = 0; i < 3; ++i) {
            auto it = row_of.find(t.facet(i));
            if (it != row_of.end()) col.flip(it->second);
        }
        red.add_column(col);
    }
    BitVec b(rows.size());
    for (const auto& e : c.support) {
        auto it = row_of.find(e);
        if (it != row_of.end()) b.flip(it->second);
    }
    auto sol = red.solve(b);
    if (!sol) return std::nullopt;
    ChainZ2 x(2, {});
    for (auto j : *sol) x.toggle(unknowns[j]);
    return c + s.complex().boundary(x);
}

// Greedy support reduction: toggling a triangle boundary preserves the class.
void reduce_cycle(const SurfaceComplex& s, ChainZ2& z, const SimplexSet& avoid_edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : s.triangles()) {
            int in = 0;
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                if (avoid_edges.count(t.facet(i))) ok = false;
                if (z.support.count(t.facet(i))) ++in;
            }
            if (ok && in >= 2) {
                for (int i = 0; i < 3; ++i) z.toggle(t.facet(i));
                changed = true;
            }
        }
    }
}

}  // namespace

ChainZ2 push_off(const SurfaceComplex& s, const ChainZ2& c, const SimplexSet& forbidden) {
    SimplexSet fcl = SimplicialComplex::face_closure(forbidden);
    SimplexSet fedges;
    for (const auto& sx : fcl)
        if (sx.dim() == 1) fedges.insert(sx);

    bool touches = false;
    for (const auto& e : c.support)
        if (fedges.count(e)) touches = true;
    if (!touches && is_circle(c)) return c;

    // when the allowed edges form a forest, no circle can avoid `forbidden`
    {
        SimplexSet allowed;
        for (const auto& e : s.edges())
            if (!fedges.count(e)) allowed.insert(e);
        std::map<int, int> comp;
        int ncomp = 0;
        std::map<int, std::vector<int>> adj;
        for (const auto& e : allowed) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        for (const auto& [v, _] : adj) {
            if (comp.count(v)) continue;
            ++ncomp;
            std::vector<int> q{v};
            comp[v] = ncomp;
            for (std::size_t i = 0; i < q.size(); ++i)
                for (int w : adj[q[i]])
                    if (!comp.count(w)) {
                        comp[w] = ncomp;
                        q.push_back(w);
                    }
        }
        if (allowed.size() + ncomp == comp.size())  // |E| = |V| - #components
            throw no_representative_error(
                "push_off: the complement of the forbidden region carries no circle");
    }

    auto consider = [&](const ChainZ2& z) -> std::optional<ChainZ2> {
        for (const auto& gamma : extract_circuits(s, z)) {
            bool clean = true;
            for (const auto& e : gamma.support)
                if (fedges.count(e)) clean = false;
            if (clean && is_boundary(s.complex(), gamma + c).flag) return gamma;
        }
        return std::nullopt;
    };

    // stage 1: collar solve (unknowns near the forbidden region and c)
    SimplexSet near;
    for (const auto& t : s.triangles()) {
        bool hit = fcl.count(t) != 0;
        for (int i = 0; i < 3 && !hit; ++i)
            if (fedges.count(t.facet(i)) || c.support.count(t.facet(i))) hit = true;
        if (hit) near.insert(t);
    }
    std::vector<Simplex> all(s.triangles().begin(), s.triangles().end());
    std::vector<Simplex> local(near.begin(), near.end());

    bool solvable = false;
    for (const auto& unknowns : {local, all}) {
        auto z = cancel_on(s, c, fedges, unknowns);
        if (!z) continue;
        solvable = true;
        auto zz = *z;
        if (auto hit = consider(zz)) return *hit;
        reduce_cycle(s, zz, fedges);
        if (auto hit = consider(zz)) return *hit;

        // randomized exploration of the solution space
        std::mt19937_64 rng(0x9e3779b9u);
        std::vector<Simplex> free_tris;
        for (const auto& t : s.triangles()) {
            bool ok = true;
            for (int i = 0; i < 3; ++i)
                if (fedges.count(t.facet(i))) ok = false;
            if (ok) free_tris.push_back(t);
        }
        ChainZ2 w = zz;
        for (int iter = 0; iter < 400 && !free_tris.empty(); ++iter) {
            const auto& t = free_tris[rng() % free_tris.size()];
            for (int i = 0; i < 3; ++i) w.toggle(t.facet(i));
            if (w.size() > zz.size() + 8) w = zz;  // restart when drifting
            if (iter % 8 == 0) {
                ChainZ2 probe = w;
                reduce_cycle(s, probe, fedges);
                if (auto hit = consider(probe)) return *hit;
            }
        }
    }
    if (!solvable)
        throw no_representative_error("push_off: the class of c meets every representative of "
                                      "the forbidden region");
    throw structural_error("push_off: failed to extract a simple circle in the class of c");
}

namespace {

// First fundamental circuit of the graph (vertices, allowed) that is not a
// boundary in `ambient`; empty chain when every one of them bounds.
ChainZ2 first_nontrivial_circuit(const SimplicialComplex& ambient, const SimplexSet& allowed) {
    std::map<int, std::vector<std::pair<int, Simplex>>> adj;
    for (const auto& e : allowed) {
        adj[e[0]].push_back({e[1], e});
        adj[e[1]].push_back({e[0], e});
    }
    std::map<int, Simplex> parent_edge;
    std::map<int, int> parent, depth;
    SimplexSet tree;
    for (const auto& [root, _] : adj) {
        if (depth.count(root)) continue;
        depth[root] = 0;
        parent[root] = root;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& [w, e] : adj.at(v)) {
                if (depth.count(w)) continue;
                depth[w] = depth[v] + 1;
                parent[w] = v;
                parent_edge.emplace(w, e);
                tree.insert(e);
                queue.push_back(w);
            }
        }
    }
    for (const auto& e : allowed) {
        if (tree.count(e)) continue;
        ChainZ2 gamma(1, {e});
        int a = e[0], b = e[1];
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            gamma.toggle(parent_edge.at(a));
            a = parent[a];
        }
        if (!is_boundary(ambient, gamma).flag) return gamma;
    }
    return ChainZ2(1, {});
}

SimplexSet triangles_of(const SimplexSet& ss) {
    SimplexSet out;
    for (const auto& s : ss)
        if (s.dim() == 2) out.insert(s);
    return out;
}

ChainZ2 circle_by_induction(const SurfaceComplex& S, const SimplexSet& t, int depth);

// Push c off all of t when possible, off its interior otherwise.  A coarse
// triangulation may leave too little room outside t for a full push.
ChainZ2 push_relaxed(const SurfaceComplex& S, const ChainZ2& c, const SimplexSet& t) {
    try {
        return push_off(S, c, t);
    } catch (const precondition_error&) {
    } catch (const structural_error&) {
    }
    SimplexSet interior;
    SimplexSet ttris = triangles_of(t);
    for (const auto& sx : SimplicialComplex::face_closure(t)) {
        if (sx.dim() != 1) continue;
        bool inside = true;
        for (const auto& cf : S.complex().cofaces(sx, 2))
            if (!ttris.count(cf)) inside = false;
        if (inside) interior.insert(sx);
    }
    return push_off(S, c, interior);
}

// Case dispatch for a closed connected orientable surface S and planar t.
ChainZ2 induction_cases(const SurfaceComplex& S, const SimplexSet& t, int g, int depth) {
    if (t.empty() || triangles_of(t).empty())
        return first_nontrivial_circuit(S.complex(), S.edges());

    // boundary circles of t, tolerant of components pinched at a vertex
    ChainZ2 bedges(1, boundary_edges_of_triangles(S.complex(), triangles_of(t)));
    auto K = extract_circuits(S, bedges);
    int r = static_cast<int>(K.size());

    // case (2): some boundary circle of t is already nontrivial
    for (const auto& k : K)
        if (!is_boundary(S.complex(), k).flag) return push_relaxed(S, k, t);

    // every K_i bounds; r = 1 means t is a disc
    if (r <= 1) {
        auto c = first_nontrivial_circuit(S.complex(), S.edges());
        if (c.empty()) throw precondition_error("surface has no nontrivial circle (genus 0?)");
        return push_relaxed(S, c, t);
    }

    // each bounding circle separates S into two sides
    std::vector<std::pair<ChainZ2, std::vector<SimplexSet>>> splits;
    for (const auto& k : K) {
        auto comps = facet_components(S.triangles(), k.support);
        if (comps.size() != 2)
            throw structural_error("bounding circle fails to separate the surface");
        std::sort(comps.begin(), comps.end(),
                  [](const SimplexSet& a, const SimplexSet& b) { return a.size() < b.size(); });
        splits.push_back({k, comps});
    }

    const SimplexSet ttris = triangles_of(t);

    // case (3): one side lies entirely inside t
    for (const auto& [k, sides] : splits) {
        for (const auto& side : sides) {
            if (!std::includes(ttris.begin(), ttris.end(), side.begin(), side.end())) continue;
            SimplexSet rest;
            for (const auto& tri : ttris)
                if (!side.count(tri)) rest.insert(tri);
            auto c = circle_by_induction(S, SimplicialComplex::face_closure(rest), depth + 1);
            SimplexSet vi = SimplicialComplex::face_closure(side);
            for (const auto& e : c.support)
                if (vi.count(e)) return push_relaxed(S, c, vi);
            return c;
        }
    }

    // case (4): cap a side along its circle and recurse into it
    for (const auto& [k, sides] : splits) {
        for (const auto& side : sides) {
            SimplicialComplex w;
            w.add_all(side);
            int apex = S.complex().max_vertex_id() + 1;
            SimplexSet cap;
            for (const auto& e : k.support) {
                w.add(e.join(Simplex{apex}));
                cap.insert(e.join(Simplex{apex}));
            }
            SurfaceComplex wsurf;
            try {
                wsurf = SurfaceComplex(w);
            } catch (const structural_error&) {
                continue;
            }
            auto cls = classify_components(wsurf);
            if (cls.size() != 1 || !cls[0].orientable) continue;
            int gw = cls[0].genus;
            if (gw < 1 || gw > g - 1) continue;
            SimplexSet tin;
            for (const auto& tri : ttris)
                if (side.count(tri)) tin.insert(tri);
            SimplexSet inner = SimplicialComplex::face_closure(tin);
            for (const auto& ctri : cap) inner.insert(ctri);
            inner = SimplicialComplex::face_closure(inner);
            SurfaceComplex innerSurf;
            try {
                SimplicialComplex ic;
                ic.add_all(inner);
                if (!inner.empty() && !is_planar(SurfaceComplex(ic))) continue;
            } catch (const structural_error&) {
                continue;
            }
            auto c = circle_by_induction(wsurf, inner, depth + 1);
            if (!is_boundary(S.complex(), c).flag) return c;
        }
    }

    // case (4), genus-0 side: absorb it into t and recurse
    for (const auto& [k, sides] : splits) {
        for (const auto& side : sides) {
            if (std::includes(ttris.begin(), ttris.end(), side.begin(), side.end()))
                continue;  // that was case (3)
            SimplexSet grown = ttris;
            for (const auto& tri : side) grown.insert(tri);
            SimplexSet closed = SimplicialComplex::face_closure(grown);
            try {
                SimplicialComplex gc;
                gc.add_all(closed);
                SurfaceComplex gs(gc);
                if (!is_planar(gs)) continue;
                auto bc = boundary_circles(gs);
                if (static_cast<int>(bc.size()) >= r) continue;
            } catch (const structural_error&) {
                continue;
            }
            return circle_by_induction(S, closed, depth + 1);
        }
    }
    throw structural_error("circle induction: no applicable case");
}

ChainZ2 circle_by_induction(const SurfaceComplex& S, const SimplexSet& t, int depth) {
    if (depth > 60) throw structural_error("circle induction exceeded depth bound");
    auto cls = classify(S);
    if (!cls.orientable) throw precondition_error("surface must be orientable");
    if (cls.genus < 1) throw precondition_error("surface must have genus at least 1");
    return induction_cases(S, t, cls.genus, depth);
}

}  // namespace

ChainZ2 find_nontrivial_circle(const SurfaceComplex& s, const SimplexSet& t, CircleMethod method) {
    SimplexSet tcl = SimplicialComplex::face_closure(t);
    for (const auto& sx : tcl)
        if (!s.complex().contains(sx))
            throw precondition_error("subsurface is not contained in the surface");
    SimplexSet ttris = triangles_of(tcl);
    if (!ttris.empty()) {
        SimplicialComplex tc;
        tc.add_all(tcl);
        if (!is_planar(SurfaceComplex(tc)))
            throw precondition_error("subsurface t must be planar");
    }

    // cap every boundary circle of s
    SimplicialComplex capped = s.complex();
    SimplexSet capTris;
    {
        int apex = capped.max_vertex_id();
        for (const auto& k : boundary_circles(s)) {
            ++apex;
            for (const auto& e : k.support) {
                capped.add(e.join(Simplex{apex}));
                capTris.insert(e.join(Simplex{apex}));
            }
        }
    }
    SurfaceComplex scap(capped);
    auto cls = classify(scap);
    if (!cls.orientable) throw precondition_error("surface must be orientable");
    if (cls.genus < 1) throw precondition_error("capped surface has genus 0");

    if (method == CircleMethod::oracle) {
        SimplexSet interior = subsurface_interior(s, tcl);
        SimplexSet allowed;
        for (const auto& e : s.complex().simplices(1))
            if (!interior.count(e)) allowed.insert(e);
        auto gamma = first_nontrivial_circuit(capped, allowed);
        if (gamma.empty())
            throw precondition_error("every circle outside the subsurface bounds");
        return gamma;
    }

    SimplexSet tFull = tcl;
    for (const auto& c : capTris) tFull.insert(c);
    tFull = SimplicialComplex::face_closure(tFull);
    return circle_by_induction(scap, tFull, 0);
}

}  // namespace topo
