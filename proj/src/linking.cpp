#include "topo/manifold.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "topo/homology.hpp"
#include "topo/prism.hpp"

namespace topo {

namespace {

// The triangle shared by two distinct tetrahedra, if any.
std::optional<Simplex> shared_facet(const Simplex& a, const Simplex& b) {
    std::vector<int> common;
    for (int i = 0; i < a.size(); ++i)
        if (b.has_vertex(a[i])) common.push_back(a[i]);
    if (common.size() != 3) return std::nullopt;
    return Simplex{common[0], common[1], common[2]};
}

// Cyclic vertex order of a simple circle.
std::vector<int> circle_order(const ChainZ2& c) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : c.support) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> order;
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    do {
        order.push_back(cur);
        int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    } while (cur != start);
    return order;
}

SimplexSet link_of_vertex(const SimplicialComplex& c, int v) {
    SimplexSet link;
    for (const auto& t : c.cofaces(Simplex{v}, 3)) {
        std::vector<int> others;
        for (int i = 0; i < t.size(); ++i)
            if (t[i] != v) others.push_back(t[i]);
        link.insert(Simplex{others[0], others[1], others[2]});
    }
    return link;
}

}  // namespace

Manifold3::Manifold3(SimplicialComplex c) : c_(std::move(c)) {
    if (c_.dim() != 3) throw structural_error("manifold complex must be 3-dimensional");
    for (const auto& t : c_.simplices(2)) {
        auto cf = c_.cofaces(t, 3);
        if (cf.empty() || cf.size() > 2)
            throw structural_error("triangle " + t.str() + " lies in " +
                                   std::to_string(cf.size()) + " tetrahedra");
        if (cf.size() == 1) boundary_.insert(t);
    }
    for (const auto& v : c_.simplices(0)) {
        auto link = link_of_vertex(c_, v[0]);
        if (link.empty())
            throw structural_error("vertex " + v.str() + " lies in no tetrahedron");
        SimplicialComplex lc;
        lc.add_all(link);
        SurfaceComplex ls(lc);  // throws when the link is not a surface
        auto cls = classify(ls);
        bool sphere = cls == SurfaceClass{true, 0, 0, 2};
        bool disc = cls == SurfaceClass{true, 0, 1, 1};
        if (!sphere && !disc)
            throw structural_error("link of vertex " + v.str() + " is neither sphere nor disc");
    }
    SimplicialComplex bc;
    bc.add_all(boundary_);
    if (!boundary_.empty()) boundary_surface_ = SurfaceComplex(bc);
    homology_ = homology_ranks(c_);
}

bool Manifold3::is_homotopy_disc() const {
    if (homology_[1] != 0 || homology_[2] != 0) return false;
    if (boundary_.empty()) return false;
    auto comps = classify_components(boundary_surface_);
    return comps.size() == 1 && comps[0] == SurfaceClass{true, 0, 0, 2};
}

void DualCycle::check(const SimplicialComplex& c) const {
    if (tets.size() <= 1) {
        if (!crossed.empty()) throw structural_error("dual cycle: stray crossed triangles");
        if (tets.size() == 1 && !c.contains(tets[0]))
            throw structural_error("dual cycle: unknown tetrahedron");
        return;
    }
    if (crossed.size() != tets.size())
        throw structural_error("dual cycle: length mismatch");
    for (std::size_t i = 0; i < tets.size(); ++i) {
        const Simplex& a = tets[i];
        const Simplex& b = tets[(i + 1) % tets.size()];
        if (!c.contains(a)) throw structural_error("dual cycle: unknown tetrahedron");
        if (a == b) throw structural_error("dual cycle: repeated tetrahedron");
        auto f = shared_facet(a, b);
        if (!f || *f != crossed[i])
            throw structural_error("dual cycle: consecutive tetrahedra do not share the "
                                   "recorded triangle");
    }
}

DualCycle to_dual_cycle(const Manifold3& m, const ChainZ2& b) {
    if (!is_circle(b)) throw precondition_error("to_dual_cycle expects a simple circle");
    for (const auto& e : b.support)
        if (!m.complex().contains(e))
            throw precondition_error("to_dual_cycle: circle is not carried by the manifold");

    auto order = circle_order(b);
    int n = static_cast<int>(order.size());

    // entry tetrahedron for each edge of the circle
    std::vector<Simplex> entry;
    for (int i = 0; i < n; ++i) {
        Simplex e{order[i], order[(i + 1) % n]};
        auto around = m.complex().cofaces(e, 3);
        if (around.empty()) throw structural_error("circle edge lies in no tetrahedron");
        entry.push_back(*std::min_element(around.begin(), around.end()));
    }

    // connect consecutive entries through the star of the shared vertex
    std::vector<Simplex> seq;
    for (int i = 0; i < n; ++i) {
        int pivot = order[(i + 1) % n];
        const Simplex& from = entry[i];
        const Simplex& to = entry[(i + 1) % n];
        seq.push_back(from);
        if (from == to) continue;
        auto star = m.complex().cofaces(Simplex{pivot}, 3);
        std::map<Simplex, Simplex> parent;
        parent.emplace(from, from);
        std::vector<Simplex> queue{from};
        bool reached = false;
        for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
            for (const auto& nb : star) {
                if (parent.count(nb) || !shared_facet(queue[qi], nb)) continue;
                parent.emplace(nb, queue[qi]);
                queue.push_back(nb);
                if (nb == to) {
                    reached = true;
                    break;
                }
            }
        }
        if (!reached) throw structural_error("vertex star is not dually connected");
        std::vector<Simplex> path;
        for (Simplex at = to; at != from; at = parent.at(at)) path.push_back(at);
        std::reverse(path.begin(), path.end());
        path.pop_back();  // `to` is emitted as the next entry
        for (const auto& t : path) seq.push_back(t);
    }

    // collapse consecutive repeats (cyclically)
    std::vector<Simplex> tight;
    for (const auto& t : seq)
        if (tight.empty() || tight.back() != t) tight.push_back(t);
    while (tight.size() > 1 && tight.front() == tight.back()) tight.pop_back();

    DualCycle dc;
    dc.tets = tight;
    if (tight.size() > 1)
        for (std::size_t i = 0; i < tight.size(); ++i)
            dc.crossed.push_back(*shared_facet(tight[i], tight[(i + 1) % tight.size()]));
    dc.check(m.complex());
    return dc;
}

namespace {

int crossing_parity(const DualCycle& b, const ChainZ2& spanning) {
    int count = 0;
    for (const auto& t : b.crossed)
        if (spanning.support.count(t)) ++count;
    return count % 2;
}

void require_disjoint_circles(const ChainZ2& a, const ChainZ2& b) {
    if (!is_circle(a) || !is_circle(b))
        throw precondition_error("linking requires two simple circles");
    auto va = vertices_of(a.support);
    for (int v : vertices_of(b.support))
        if (va.count(v)) throw precondition_error("circles are not disjoint");
}

}  // namespace

int linking_number(const Manifold3& m, const ChainZ2& a, const ChainZ2& b) {
    require_disjoint_circles(a, b);
    if (!m.is_homotopy_disc())
        throw precondition_error("linking numbers are defined in homotopy discs");
    auto r = is_boundary(m.complex(), a);
    if (!r.flag)
        throw precondition_error("circle does not bound: input is not a homotopy disc");
    auto carrier = to_dual_cycle(m, b);
    return crossing_parity(carrier, *r.witness);
}

std::vector<int> verify_independence(const Manifold3& m, const ChainZ2& a, const ChainZ2& b,
                                     int trials, std::uint64_t seed) {
    require_disjoint_circles(a, b);
    auto r = is_boundary(m.complex(), a);
    if (!r.flag) throw precondition_error("circle does not bound");
    auto carrier = to_dual_cycle(m, b);

    std::vector<Simplex> tets(m.tets().begin(), m.tets().end());
    std::mt19937_64 rng(seed);
    std::vector<int> out;
    for (int k = 0; k < trials; ++k) {
        ChainZ2 span = *r.witness;
        if (k > 0) {
            ChainZ2 w(3, {});
            for (const auto& t : tets)
                if (rng() & 1) w.support.insert(t);
            span = span + m.complex().boundary(w);
        }
        out.push_back(crossing_parity(carrier, span));
    }
    return out;
}

SplitResult split_along_disc(const Manifold3& m, const SplittingDisc& d) {
    if (d.triangles.empty()) throw precondition_error("splitting disc is empty");
    SimplexSet dcl = SimplicialComplex::face_closure(d.triangles);
    for (const auto& s : dcl)
        if (!m.complex().contains(s))
            throw precondition_error("splitting disc is not a subcomplex of the manifold");

    SimplicialComplex dc;
    dc.add_all(dcl);
    SurfaceComplex dsurf(dc);
    if (classify(dsurf) != SurfaceClass{true, 0, 1, 1})
        throw precondition_error("splitting disc is not a disc");
    auto bc = boundary_circles(dsurf);
    if (bc.size() != 1 || bc[0].support != d.boundary.support)
        throw precondition_error("recorded boundary does not match the disc boundary");

    SimplexSet bclosure = SimplicialComplex::face_closure(m.boundary_triangles());
    for (const auto& e : d.boundary.support)
        if (!bclosure.count(e))
            throw precondition_error("disc boundary does not lie in the manifold boundary");
    std::set<int> bverts = vertices_of(d.boundary.support);
    for (const auto& s : dcl) {
        bool on_circle = (s.dim() == 1 && d.boundary.support.count(s)) ||
                         (s.dim() == 0 && bverts.count(s[0]));
        if (!on_circle && bclosure.count(s))
            throw precondition_error("disc interior touches the manifold boundary");
    }

    auto comps = facet_components(m.tets(), d.triangles);
    SplitResult res;
    res.components = static_cast<int>(comps.size());
    if (comps.size() != 2) {
        res.ok = false;
        res.report = "splitting disc produced " + std::to_string(comps.size()) +
                     " complementary pieces instead of 2";
        return res;
    }
    SimplicialComplex uc, vc;
    uc.add_all(comps[0]);
    vc.add_all(comps[1]);

    // the pieces must meet exactly in the disc
    SimplexSet shared;
    for (int dim = 0; dim <= 3; ++dim)
        for (const auto& s : uc.simplices(dim))
            if (vc.contains(s)) shared.insert(s);
    if (shared != dcl) {
        res.ok = false;
        res.report = "the two pieces meet outside the splitting disc";
        return res;
    }
    res.ok = true;
    res.u = Manifold3(uc);
    res.v = Manifold3(vc);
    if (res.u->tets().size() > res.v->tets().size()) std::swap(res.u, res.v);
    return res;
}

PushedDisc splitting_disc_for_circle(const Manifold3& m, const ChainZ2& c) {
    if (!is_circle(c)) throw precondition_error("expected a simple circle");
    auto comps0 = classify_components(m.boundary_surface());
    if (comps0.size() != 1 || !(comps0[0] == SurfaceClass{true, 0, 0, 2}))
        throw precondition_error("manifold boundary must be a single sphere");
    for (const auto& e : c.support)
        if (!m.boundary_surface().complex().contains(e))
            throw precondition_error("circle must lie in the manifold boundary");

    auto sides = facet_components(m.boundary_triangles(), c.support);
    if (sides.size() != 2)
        throw structural_error("circle fails to separate the boundary sphere");
    std::sort(sides.begin(), sides.end(), [](const SimplexSet& a, const SimplexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return *a.begin() < *b.begin();
    });
    const SimplexSet& smaller = sides[0];

    // push the boundary outward: fresh copy of every boundary vertex
    int offset = m.complex().max_vertex_id() + 1;
    auto fresh = [&](int v) { return v + offset; };

    PrismComplex collar;
    for (const auto& t : m.boundary_triangles()) {
        PrismCell cell;
        cell.bottom = {fresh(t[0]), fresh(t[1]), fresh(t[2])};
        cell.top = {t[0], t[1], t[2]};
        cell.base = t;
        collar.cells.push_back(cell);
    }
    SimplicialComplex enlarged = m.complex();
    auto collarTris = collar.to_simplicial();
    for (const auto& tet : collarTris.simplices(3)) enlarged.add(tet);

    // disc: the chosen component, now at depth one, plus the annulus over c
    SplittingDisc disc;
    disc.triangles = smaller;
    for (const auto& e : c.support) {
        for (const auto& tri : triangulate_quad(fresh(e[0]), fresh(e[1]), e[1], e[0]))
            disc.triangles.insert(tri);
    }
    disc.boundary.dim = 1;
    for (const auto& e : c.support) disc.boundary.support.insert(Simplex{fresh(e[0]), fresh(e[1])});

    PushedDisc out;
    out.manifold = Manifold3(enlarged);
    out.disc = std::move(disc);
    return out;
}

}  // namespace topo
