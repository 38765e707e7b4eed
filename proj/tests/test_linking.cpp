#include "doctest.h"

#include <random>

#include "topo/generators.hpp"
#include "topo/homology.hpp"
#include "topo/manifold.hpp"
#include "topo/subdivide.hpp"

using namespace topo;

namespace {

ChainZ2 circle_on(std::initializer_list<std::pair<int, int>> edges) {
    ChainZ2 c(1, {});
    for (auto [a, b] : edges) c.support.insert(Simplex{a, b});
    return c;
}

SimplicialComplex boundary4_minus_tet() {
    SimplicialComplex c;
    auto s4 = gen::boundary_simplex(4);
    for (const auto& t : s4.simplices(3))
        if (t != Simplex{1, 2, 3, 4}) c.add(t);
    return c;
}

int count_crossings(const DualCycle& b, const ChainZ2& d) {
    int n = 0;
    for (const auto& t : b.crossed)
        if (d.support.count(t)) ++n;
    return n;
}

}  // namespace

TEST_CASE("Manifold3 validation") {
    CHECK_NOTHROW(Manifold3{gen::two_tet_ball()});
    CHECK_NOTHROW(Manifold3{gen::octa_ball()});

    SimplicialComplex bad;  // three tetrahedra around one triangle
    bad.add(Simplex{0, 1, 2, 3});
    bad.add(Simplex{0, 1, 2, 4});
    bad.add(Simplex{0, 1, 2, 5});
    CHECK_THROWS_AS(Manifold3{bad}, structural_error);
}

TEST_CASE("homotopy-disc evidence") {
    CHECK(Manifold3{gen::octa_ball()}.is_homotopy_disc());
    CHECK(Manifold3{gen::join_s3_minus_tet()}.is_homotopy_disc());
    CHECK(Manifold3{gen::two_tet_ball()}.is_homotopy_disc());

    // thickened torus: valid manifold, but H_1 != 0 and boundary is two tori
    auto torus = gen::torus7();
    PrismComplex pc;
    for (const auto& t : torus.simplices(2)) {
        PrismCell cell;
        cell.bottom = {t[0], t[1], t[2]};
        cell.top = {t[0] + 10, t[1] + 10, t[2] + 10};
        pc.cells.push_back(cell);
    }
    Manifold3 thick(pc.to_simplicial());
    CHECK(!thick.is_homotopy_disc());
}

TEST_CASE("dual cycle around an edge link") {
    Manifold3 m(boundary4_minus_tet());
    auto b = circle_on({{2, 3}, {3, 4}, {2, 4}});  // link of the interior edge {0,1}
    auto dc = to_dual_cycle(m, b);
    CHECK(dc.tets.size() >= 3);
    CHECK(dc.crossed.size() == dc.tets.size());
    CHECK_NOTHROW(dc.check(m.complex()));
    for (const auto& t : dc.tets) CHECK(m.tets().count(t));
}

TEST_CASE("dual cycle inside one tetrahedron star") {
    Manifold3 m(gen::octa_ball());
    auto b = circle_on({{1, 2}, {2, 6}, {1, 6}});  // inside tet {0,1,2,6}
    auto dc = to_dual_cycle(m, b);
    CHECK(dc.tets.size() == 1);
    CHECK(dc.crossed.empty());
}

TEST_CASE("dual cycle rejects open paths") {
    Manifold3 m(gen::octa_ball());
    ChainZ2 arc(1, {Simplex{1, 2}, Simplex{2, 3}});
    CHECK_THROWS_AS(to_dual_cycle(m, arc), precondition_error);
}

TEST_CASE("Hopf cores link once") {
    auto c = gen::join_s3_minus_tet();
    Manifold3 m(c);
    ChainZ2 coreA(1, c.label("coreA"));
    ChainZ2 coreB(1, c.label("coreB"));

    CHECK(linking_number(m, coreA, coreB) == 1);
    CHECK(linking_number(m, coreB, coreA) == 1);  // symmetry

    // brute force: every spanning chain of coreA crosses coreB's carrier oddly
    auto carrier = to_dual_cycle(m, coreB);
    auto witness = *is_boundary(m.complex(), coreA).witness;
    std::vector<Simplex> tets(m.tets().begin(), m.tets().end());
    REQUIRE(tets.size() == 8);
    for (unsigned mask = 0; mask < 256u; ++mask) {
        ChainZ2 w(3, {});
        for (int i = 0; i < 8; ++i)
            if (mask & (1u << i)) w.support.insert(tets[i]);
        auto span = witness + m.complex().boundary(w);
        CHECK(count_crossings(carrier, span) % 2 == 1);
    }
}

TEST_CASE("unlinked circles in a ball") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    auto a = circle_on({{1, 2}, {2, 6}, {1, 6}});
    auto b = circle_on({{0, 3}, {3, 4}, {0, 4}});
    CHECK(linking_number(m, a, b) == 0);
    CHECK(linking_number(m, b, a) == 0);

    auto ind = verify_independence(m, a, b, 10);
    CHECK(ind == std::vector<int>(10, 0));
}

TEST_CASE("independence of the spanning chain for the Hopf pair") {
    auto c = gen::join_s3_minus_tet();
    Manifold3 m(c);
    ChainZ2 coreA(1, c.label("coreA"));
    ChainZ2 coreB(1, c.label("coreB"));
    auto ind = verify_independence(m, coreA, coreB, 10);
    CHECK(ind == std::vector<int>(10, 1));
}

TEST_CASE("linking parity equals the crossing count mod 2") {
    auto c = gen::join_s3_minus_tet();
    Manifold3 m(c);
    ChainZ2 coreA(1, c.label("coreA"));
    ChainZ2 coreB(1, c.label("coreB"));
    auto carrier = to_dual_cycle(m, coreB);
    auto witness = *is_boundary(m.complex(), coreA).witness;
    int card = count_crossings(carrier, witness);
    CHECK(linking_number(m, coreA, coreB) == card % 2);
    CHECK(card % 2 == 1);
}

TEST_CASE("homotopy invariance of the second circle") {
    Subdivision sd(gen::octa_ball());
    Manifold3 m(sd.complex());
    // a and b: boundaries of two far-apart subdivision triangles
    Simplex atri{3, sd.barycenter(Simplex{3, 4}), sd.barycenter(Simplex{3, 4, 6})};
    REQUIRE(m.complex().contains(atri));
    ChainZ2 a(1, {atri.facet(0), atri.facet(1), atri.facet(2)});
    Simplex btri{1, sd.barycenter(Simplex{1, 2}), sd.barycenter(Simplex{0, 1, 2})};
    REQUIRE(m.complex().contains(btri));
    ChainZ2 b(1, {btri.facet(0), btri.facet(1), btri.facet(2)});

    int base = linking_number(m, a, b);
    auto averts = vertices_of(a.support);
    int perturbed = 0;
    for (const auto& tri : m.complex().simplices(2)) {
        bool clean = true;
        for (int i = 0; i < 3; ++i)
            if (averts.count(tri[i])) clean = false;
        if (!clean) continue;
        int shared_edges = 0;
        for (int i = 0; i < 3; ++i)
            if (b.support.count(tri.facet(i))) ++shared_edges;
        if (shared_edges != 1) continue;
        ChainZ2 moved = b;
        for (int i = 0; i < 3; ++i) moved.toggle(tri.facet(i));
        if (!is_circle(moved)) continue;
        bool disjoint = true;
        for (int v : vertices_of(moved.support))
            if (averts.count(v)) disjoint = false;
        if (!disjoint) continue;
        CHECK(linking_number(m, a, moved) == base);
        ++perturbed;
    }
    CHECK(perturbed > 0);
}

TEST_CASE("linking precondition checks") {
    auto c = gen::join_s3_minus_tet();
    Manifold3 m(c);
    ChainZ2 coreA(1, c.label("coreA"));
    // sharing a vertex is rejected
    auto touching = circle_on({{0, 3}, {3, 5}, {0, 5}});
    CHECK_THROWS_AS(linking_number(m, coreA, touching), precondition_error);

    // thickened torus is not a homotopy disc
    auto torus = gen::torus7();
    PrismComplex pc;
    for (const auto& t : torus.simplices(2)) {
        PrismCell cell;
        cell.bottom = {t[0], t[1], t[2]};
        cell.top = {t[0] + 10, t[1] + 10, t[2] + 10};
        pc.cells.push_back(cell);
    }
    Manifold3 thick(pc.to_simplicial());
    auto a = circle_on({{0, 1}, {1, 2}, {0, 2}});
    auto b = circle_on({{14, 15}, {15, 16}, {14, 16}});
    CHECK_THROWS_AS(linking_number(thick, a, b), precondition_error);
}

TEST_CASE("randomized symmetry of the linking parity") {
    Subdivision sd(gen::octa_ball());
    Manifold3 m(sd.complex());
    // circles: boundaries of triangles of the subdivision
    std::vector<ChainZ2> circles;
    for (const auto& t : m.complex().simplices(2))
        circles.push_back(ChainZ2(1, {t.facet(0), t.facet(1), t.facet(2)}));

    std::mt19937_64 rng(0xFACADEu);
    int pairs = 0;
    for (int attempt = 0; pairs < 100 && attempt < 4000; ++attempt) {
        const auto& a = circles[rng() % circles.size()];
        const auto& b = circles[rng() % circles.size()];
        auto va = vertices_of(a.support);
        bool disjoint = true;
        for (int v : vertices_of(b.support))
            if (va.count(v)) disjoint = false;
        if (!disjoint) continue;
        CHECK(linking_number(m, a, b) == linking_number(m, b, a));
        ++pairs;
    }
    CHECK(pairs >= 100);
}

TEST_CASE("split a box along its mid square") {
    auto c = gen::box_ball();
    Manifold3 m(c);
    SplittingDisc d;
    d.triangles = c.label("midsquare");
    d.boundary = ChainZ2(1, c.label("midcircle"));
    auto res = split_along_disc(m, d);
    REQUIRE(res.ok);
    CHECK(res.components == 2);
    CHECK(res.u->is_homotopy_disc());
    CHECK(res.v->is_homotopy_disc());
    CHECK(res.u->tets().size() + res.v->tets().size() == m.tets().size());
}

TEST_CASE("split the octahedral ball along its equatorial disc") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    SplittingDisc d;
    d.triangles = c.label("equator_disc");
    d.boundary = ChainZ2(1, c.label("equator"));
    auto res = split_along_disc(m, d);
    REQUIRE(res.ok);
    CHECK(res.components == 2);
    for (const auto& piece : {*res.u, *res.v}) {
        auto cls = classify_components(piece.boundary_surface());
        REQUIRE(cls.size() == 1);
        CHECK(cls[0] == SurfaceClass{true, 0, 0, 2});
    }
}

TEST_CASE("split rejects a disc whose boundary is interior") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    SplittingDisc d;
    d.triangles = {Simplex{1, 2, 6}};
    d.boundary = ChainZ2(1, {Simplex{1, 2}, Simplex{2, 6}, Simplex{1, 6}});
    CHECK_THROWS_AS(split_along_disc(m, d), precondition_error);
}

TEST_CASE("splitting disc for the equator of the octahedral ball") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    ChainZ2 equator(1, c.label("equator"));
    auto pushed = splitting_disc_for_circle(m, equator);

    // the result is a disc inside the enlarged ball
    SimplicialComplex dc;
    dc.add_all(SimplicialComplex::face_closure(pushed.disc.triangles));
    CHECK(classify(SurfaceComplex(dc)) == SurfaceClass{true, 0, 1, 1});
    CHECK(pushed.manifold.is_homotopy_disc());

    auto res = split_along_disc(pushed.manifold, pushed.disc);
    REQUIRE(res.ok);
    CHECK(res.u->is_homotopy_disc());
    CHECK(res.v->is_homotopy_disc());

    // tie in triangle counts (4 vs 4): the side holding {0,1,2} wins
    CHECK(pushed.disc.triangles.count(Simplex{0, 1, 2}));
    CHECK(!pushed.disc.triangles.count(Simplex{1, 2, 5}));
}

TEST_CASE("splitting disc for a single-triangle circle") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    ChainZ2 small(1, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
    auto pushed = splitting_disc_for_circle(m, small);
    CHECK(pushed.disc.triangles.size() == 1 + 2 * 3);  // triangle + annulus
    auto res = split_along_disc(pushed.manifold, pushed.disc);
    REQUIRE(res.ok);
}

TEST_CASE("splitting disc rejects circles off the boundary") {
    auto c = gen::octa_ball();
    Manifold3 m(c);
    auto interior = circle_on({{1, 6}, {6, 2}, {1, 2}});
    CHECK_THROWS_AS(splitting_disc_for_circle(m, interior), precondition_error);
}
