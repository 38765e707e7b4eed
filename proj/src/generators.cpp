#include "topo/generators.hpp"

#include <algorithm>

namespace topo {
namespace gen {

SimplicialComplex boundary_simplex(int n) {
    if (n < 2 || n > 4) throw precondition_error("boundary_simplex: n in {2,3,4}");
    SimplicialComplex c;
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    // all n-subsets of the vertex set
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> verts;
        for (int i = 0; i <= n; ++i)
            if (i != skip) verts.push_back(i);
        c.add(Simplex(verts));
    }
    return c;
}

SimplicialComplex solid_tetrahedron() {
    SimplicialComplex c;
    c.add(Simplex{0, 1, 2, 3});
    return c;
}

SimplicialComplex two_tet_ball() {
    SimplicialComplex c;
    c.add(Simplex{0, 1, 2, 3});
    c.add(Simplex{1, 2, 3, 4});
    return c;
}

SimplicialComplex torus7() {
    SimplicialComplex c;
    for (int i = 0; i < 7; ++i) {
        c.add(Simplex{i, (i + 1) % 7, (i + 3) % 7});
        c.add(Simplex{i, (i + 2) % 7, (i + 3) % 7});
    }
    return c;
}

SimplicialComplex octahedron_sphere() {
    SimplicialComplex c;
    const int eq[4] = {1, 2, 3, 4};
    SimplexSet upper, lower, equator;
    for (int i = 0; i < 4; ++i) {
        int a = eq[i], b = eq[(i + 1) % 4];
        Simplex up{0, a, b}, lo{5, a, b};
        c.add(up);
        c.add(lo);
        upper.insert(up);
        lower.insert(lo);
        equator.insert(Simplex{a, b});
    }
    c.set_label("upper", upper);
    c.set_label("lower", lower);
    c.set_label("equator", equator);
    return c;
}

SimplexSet cone_over(const SimplexSet& base, int apex) {
    SimplexSet out;
    for (const auto& s : base) {
        std::vector<int> verts(s.begin(), s.end());
        verts.push_back(apex);
        out.insert(Simplex(verts));
    }
    return out;
}

SimplicialComplex octa_ball() {
    SimplicialComplex sphere = octahedron_sphere();
    SimplicialComplex c;
    SimplexSet boundary = sphere.simplices(2);
    for (const auto& t : cone_over(boundary, 6)) c.add(t);
    c.set_label("boundary", boundary);
    c.set_label("equator", sphere.label("equator"));
    SimplexSet disc = cone_over(sphere.label("equator"), 6);
    for (const auto& t : disc) c.add(t);
    c.set_label("equator_disc", disc);
    return c;
}

SimplicialComplex join_triangles_s3() {
    SimplicialComplex c;
    // faces of the two triangle circles, including the empty face
    std::vector<std::vector<int>> facesA{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<int>> facesB{{}, {3}, {4}, {5}, {3, 4}, {3, 5}, {4, 5}};
    for (const auto& a : facesA)
        for (const auto& b : facesB) {
            if (a.empty() && b.empty()) continue;
            std::vector<int> verts = a;
            verts.insert(verts.end(), b.begin(), b.end());
            c.add(Simplex(verts));
        }
    c.set_label("coreA", {Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}});
    c.set_label("coreB", {Simplex{3, 4}, Simplex{3, 5}, Simplex{4, 5}});
    return c;
}

SimplicialComplex join_s3_minus_tet() {
    SimplicialComplex full = join_triangles_s3();
    SimplicialComplex c;
    Simplex removed{0, 1, 3, 4};
    for (int d = 0; d < 4; ++d)
        for (const auto& s : full.simplices(d))
            if (!(d == 3 && s == removed)) c.add(s);
    c.set_label("coreA", full.label("coreA"));
    c.set_label("coreB", full.label("coreB"));
    return c;
}

namespace {

// Glue `piece` onto `acc` by identifying the boundary 3-cycle of a removed
// triangle; `flip` swaps two identified vertices to fix orientation.
SimplicialComplex connect_sum(const SimplicialComplex& acc, const Simplex& tri_a,
                              const SimplicialComplex& piece, const Simplex& tri_b,
                              bool flip) {
    int offset = acc.max_vertex_id() + 1;
    std::map<int, int> rename;
    for (int v : piece.vertex_ids()) rename[v] = v + offset;
    for (int i = 0; i < 3; ++i) rename[tri_b[i]] = tri_a[flip ? (i == 0 ? 1 : i == 1 ? 0 : 2) : i];
    SimplicialComplex out;
    for (const auto& t : acc.simplices(2))
        if (!(t == tri_a)) out.add(t);
    for (const auto& t : piece.simplices(2))
        if (!(t == tri_b)) out.add(t.relabeled(rename));
    return out;
}

}  // namespace

SimplicialComplex genus_surface(int g) {
    if (g < 1) throw precondition_error("genus_surface: g >= 1");
    SimplicialComplex acc = torus7();
    for (int i = 1; i < g; ++i) {
        SimplicialComplex piece = torus7();
        acc = connect_sum(acc, *acc.simplices(2).begin(), piece, *piece.simplices(2).begin(),
                          false);
    }
    return acc;
}

SimplicialComplex punctured(const SimplicialComplex& closed_surface, int holes) {
    // Greedily pick pairwise vertex-disjoint triangles to remove.
    std::vector<Simplex> chosen;
    for (const auto& t : closed_surface.simplices(2)) {
        bool clash = false;
        for (const auto& c : chosen)
            for (int v : c)
                if (t.has_vertex(v)) clash = true;
        if (!clash) chosen.push_back(t);
        if (static_cast<int>(chosen.size()) == holes) break;
    }
    if (static_cast<int>(chosen.size()) < holes)
        throw precondition_error("punctured: not enough disjoint triangles");
    SimplicialComplex out;
    SimplexSet removed(chosen.begin(), chosen.end());
    for (const auto& t : closed_surface.simplices(2))
        if (!removed.count(t)) out.add(t);
    return out;
}

SimplicialComplex annulus() {
    SimplicialComplex c;
    for (int i = 0; i < 4; ++i) {
        int a = i, b = (i + 1) % 4;        // outer
        int p = 4 + i, q = 4 + (i + 1) % 4;  // inner
        for (const auto& t : triangulate_quad(a, b, q, p)) c.add(t);
    }
    return c;
}

PrismComplex box_two_prisms() {
    PrismComplex pc;
    PrismCell a, b;
    a.bottom = {0, 1, 4, 3};
    a.top = {6, 7, 10, 9};
    b.bottom = {1, 2, 5, 4};
    b.top = {7, 8, 11, 10};
    pc.cells = {a, b};
    return pc;
}

SimplicialComplex box_ball() {
    PrismComplex pc = box_two_prisms();
    SimplicialComplex c = pc.to_simplicial();
    SimplexSet mid = triangulate_quad(1, 4, 10, 7);
    c.set_label("midsquare", mid);
    SimplexSet circle{Simplex{1, 4}, Simplex{4, 10}, Simplex{7, 10}, Simplex{1, 7}};
    c.set_label("midcircle", circle);
    return c;
}

}  // namespace gen
}  // namespace topo
