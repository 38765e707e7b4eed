#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "topo/generators.hpp"
#include "topo/handles.hpp"
#include "topo/pipeline.hpp"

using namespace topo;

namespace {

SimplicialComplex square_disc() {
    SimplicialComplex c;
    c.add(Simplex{0, 1, 2});
    c.add(Simplex{1, 2, 3});
    return c;
}

std::map<int, int> shift_map(const SimplicialComplex& c, int offset) {
    std::map<int, int> m;
    for (int v : c.vertex_ids()) m[v] = v + offset;
    return m;
}

Stratum shifted_stratum(const SimplicialComplex& base, int offset) {
    return Stratum(SurfaceComplex(base), shift_map(base, offset));
}

// A square annulus: inner cycle b+0,b+1,b+3,b+2, outer cycle b+10,b+11,b+13,b+12.
SimplicialComplex square_annulus(int b) {
    SimplicialComplex c;
    const int inner[4] = {0, 1, 3, 2};
    const int outer[4] = {10, 11, 13, 12};
    for (int k = 0; k < 4; ++k) {
        int a = inner[k], a2 = inner[(k + 1) % 4];
        int o = outer[k], o2 = outer[(k + 1) % 4];
        c.add(Simplex{b + a, b + a2, b + o});
        c.add(Simplex{b + a2, b + o, b + o2});
    }
    return c;
}

SimplexSet cone_tets(const SimplexSet& sphere, int apex) {
    SimplexSet tets;
    for (const auto& s : gen::cone_over(sphere, apex))
        if (s.dim() == 3) tets.insert(s);
    return tets;
}

SimplexSet set_union(const SimplexSet& a, const SimplexSet& b) {
    SimplexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

Manifold3 manifold_from(const SimplexSet& tets) {
    SimplicialComplex c;
    c.add_all(tets);
    return Manifold3(c);
}

// A closed homology 3-sphere: one disc stratum capped by a cone ball over
// its boundary sphere, with a single chart U0.
struct BallFixture {
    Manifold3 m;
    std::map<std::string, SimplexSet> charts;
    Stratification st;
    Manifold3 body;
};

BallFixture ball_fixture() {
    BallFixture f;
    f.st.strata.push_back(shifted_stratum(square_disc(), 100));
    f.body = Manifold3(f.st.total());
    f.charts["U0"] = cone_tets(f.body.boundary_triangles(), 900);
    f.m = manifold_from(set_union(f.body.tets(), f.charts.at("U0")));
    return f;
}

// A closed manifold built from a sphere-times-interval stratum between two
// cone balls: the octahedral sphere as base, its lift 100 higher, and cone
// charts over both boundary spheres.
struct ProductFixture {
    Manifold3 m;
    std::map<std::string, SimplexSet> charts;
    Stratification st;
    Manifold3 body;
};

ProductFixture product_fixture() {
    ProductFixture f;
    f.st.strata.push_back(shifted_stratum(gen::octahedron_sphere(), 100));
    f.body = Manifold3(f.st.total());
    SimplexSet lower, upper;
    for (const auto& t : f.body.boundary_triangles())
        (t[0] < 100 ? lower : upper).insert(t);
    f.charts["U0"] = cone_tets(lower, 900);
    f.charts["U1"] = cone_tets(upper, 901);
    f.m = manifold_from(
        set_union(f.body.tets(), set_union(f.charts.at("U0"), f.charts.at("U1"))));
    return f;
}

}  // namespace

TEST_CASE("reduction removes a tetrahedron from a two-tet ball") {
    Manifold3 m(gen::two_tet_ball());
    SimplexSet d{Simplex{1, 2, 3, 4}};
    HomotopyOpLog log;
    Manifold3 out = reduction(m, d, &log);
    CHECK(out.tets() == SimplexSet{Simplex{0, 1, 2, 3}});
    REQUIRE(log.size() == 1);
    CHECK(log[0].kind == "reduction");
    CHECK(log[0].cell == d);
    CHECK(log[0].before == log[0].after);
    CHECK(log[0].interface.count(Simplex{1, 2, 4}));
    CHECK(log[0].interface.count(Simplex{1, 3, 4}));
    CHECK(log[0].interface.count(Simplex{2, 3, 4}));
    CHECK_FALSE(log[0].interface.count(Simplex{1, 2, 3}));

    CHECK_THROWS_AS(reduction(m, m.tets()), precondition_error);
    CHECK_THROWS_AS(reduction(m, SimplexSet{Simplex{4, 5, 6, 7}}), precondition_error);
}

TEST_CASE("reduction of a boundary prism from a slab, and the inverse extension") {
    Stratification st;
    st.strata.push_back(shifted_stratum(square_disc(), 100));
    Manifold3 m(st.total());
    SimplexSet d = tower(st, 0, SimplexSet{Simplex{0, 1, 2}}).body.simplices(3);
    REQUIRE(d.size() == 3);

    HomotopyOpLog log;
    Manifold3 out = reduction(m, d, &log);
    CHECK(out.tets().size() == m.tets().size() - 3);
    for (int i = 0; i <= 3; ++i)
        CHECK(oracle::homology_rank(out.complex(), i) == oracle::homology_rank(m.complex(), i));
    CHECK(classify(out.boundary_surface()) == SurfaceClass{true, 0, 0, 2});

    Manifold3 back = extension(out, d, &log);
    CHECK(back.tets() == m.tets());
    REQUIRE(log.size() == 2);
    CHECK(log[0].kind == "reduction");
    CHECK(log[1].kind == "extension");
    CHECK(log[0].cell == log[1].cell);
    // the reduction leaves through the free side of the prism, the extension
    // reattaches along the interior wall left behind
    int back_tris = 0;
    for (const auto& s : log[1].interface)
        if (s.dim() == 2) ++back_tris;
    CHECK(back_tris == 2);

    // attaching a cell that overlaps the interior is rejected
    CHECK_THROWS_AS(extension(m, d), precondition_error);
}

TEST_CASE("reduction with an annulus interface is rejected") {
    Stratification st;
    st.strata.push_back(shifted_stratum(square_disc(), 100));
    st.strata.push_back(shifted_stratum(relabel(square_disc(), shift_map(square_disc(), 100)),
                                        100));
    st.strata.push_back(shifted_stratum(relabel(square_disc(), shift_map(square_disc(), 200)),
                                        100));
    REQUIRE(validate(st).ok);
    Manifold3 m(st.total());
    SimplexSet middle = st.strata[1].cells().simplices(3);
    // the middle slab is a 3-ball, but it meets the boundary in a side annulus
    CHECK(manifold_from(middle).is_homotopy_disc());
    CHECK_THROWS_AS(reduction(m, middle), precondition_error);
}

TEST_CASE("glue_discs doubles a tetrahedron into the boundary of the 4-simplex") {
    Manifold3 a(gen::solid_tetrahedron());
    SimplicialComplex bc;
    bc.add(Simplex{10, 11, 12, 14});
    bc.add(Simplex{10, 11, 13, 14});
    bc.add(Simplex{10, 12, 13, 14});
    bc.add(Simplex{11, 12, 13, 14});
    Manifold3 b(bc);
    std::map<int, int> ident{{10, 0}, {11, 1}, {12, 2}, {13, 3}};

    Manifold3 g = glue_discs(a, b, ident);
    CHECK(g.tets().size() == 5);
    CHECK(g.boundary_triangles().empty());
    CHECK(g.homology() == std::array<int, 4>{1, 0, 0, 1});
    CHECK(g.complex().vertex_ids().size() == 5);
    for (int i = 0; i <= 3; ++i)
        CHECK(oracle::homology_rank(g.complex(), i) == g.homology()[i]);
}

TEST_CASE("glue_discs doubles the octahedral ball and rejects mismatches") {
    Manifold3 a(gen::octa_ball());
    Manifold3 b(relabel(gen::octa_ball(), shift_map(gen::octa_ball(), 10)));
    std::map<int, int> ident;
    for (int i = 0; i <= 5; ++i) ident[i + 10] = i;

    Manifold3 g = glue_discs(a, b, ident);
    CHECK(g.tets().size() == 16);
    CHECK(g.boundary_triangles().empty());
    CHECK(g.homology() == std::array<int, 4>{1, 0, 0, 1});
    CHECK(oracle::homology_rank(g.complex(), 2) == 0);

    // a twisted identification sends sphere faces to non-faces
    std::map<int, int> twisted{{10, 0}, {11, 5}, {12, 2}, {13, 3}, {14, 4}, {15, 1}};
    CHECK_THROWS_AS(glue_discs(a, b, twisted), structural_error);

    // dropping a vertex leaves a partial map
    std::map<int, int> partial = ident;
    partial.erase(15);
    CHECK_THROWS_AS(glue_discs(a, b, partial), structural_error);

    // mapping two vertices to the same image is not injective
    std::map<int, int> folded = ident;
    folded[15] = 0;
    CHECK_THROWS_AS(glue_discs(a, b, folded), precondition_error);

    // interior vertices may not appear in the identification
    std::map<int, int> interior = ident;
    interior.erase(15);
    interior[16] = 5;
    CHECK_THROWS_AS(glue_discs(a, b, interior), precondition_error);
}

TEST_CASE("drilling with a single chart needs no tunnels") {
    auto f = ball_fixture();
    REQUIRE(f.m.boundary_triangles().empty());
    REQUIRE(f.m.homology() == std::array<int, 4>{1, 0, 0, 1});

    CompanionState cs = drill_true_companion(f.m, f.charts, f.st);
    CHECK(cs.h.tets() == f.body.tets());
    CHECK(cs.h.is_homotopy_disc());
    CHECK(cs.h.homology() == std::array<int, 4>{1, 0, 0, 0});
    CHECK(cs.tubes.empty());
    CHECK(cs.log.empty());
    CHECK(validate(cs.st).ok);
    CHECK(cs.st.strata[0].base().triangles() == f.st.strata[0].base().triangles());

    PlanarizationState ps = planarize(cs);
    CHECK(ps.verdict == "planar");
    CHECK(ps.steps == 0);
    CHECK(ps.non_planar_index == 0);
}

TEST_CASE("drilling one tube through a product layer") {
    auto f = product_fixture();
    REQUIRE(f.m.boundary_triangles().empty());
    REQUIRE(f.m.homology() == std::array<int, 4>{1, 0, 0, 1});

    CompanionState cs = drill_true_companion(f.m, f.charts, f.st);
    REQUIRE(cs.tubes.size() == 1);
    CHECK(cs.tubes[0].size() == 3);  // one prism column
    CHECK(cs.h.tets().size() == f.body.tets().size() - 3);
    CHECK(cs.h.is_homotopy_disc());
    CHECK(classify(cs.h.boundary_surface()) == SurfaceClass{true, 0, 0, 2});

    // the drilled base lost exactly the tube triangle and became a disc
    REQUIRE(validate(cs.st).ok);
    CHECK(cs.st.strata[0].base().triangles().size() == 7);
    CHECK(classify(cs.st.strata[0].base()) == SurfaceClass{true, 0, 1, 1});

    // one logged reduction whose interface is the closure of one triangle
    REQUIRE(cs.log.size() == 1);
    CHECK(cs.log[0].kind == "reduction");
    CHECK(cs.log[0].cell.size() == f.charts.at("U1").size() + 3);
    int ifc_tris = 0;
    for (const auto& s : cs.log[0].interface)
        if (s.dim() == 2) ++ifc_tris;
    CHECK(ifc_tris == 1);

    // the companion avoids every drilled chart
    for (const auto& t : f.charts.at("U1")) CHECK_FALSE(cs.h.tets().count(t));
    for (const auto& t : f.charts.at("U0")) CHECK_FALSE(cs.h.tets().count(t));
}

TEST_CASE("drilling rejects bad chart labels and overlapping charts") {
    auto f = product_fixture();
    std::map<std::string, SimplexSet> gap{{"U0", f.charts.at("U0")},
                                          {"U2", f.charts.at("U1")}};
    CHECK_THROWS_AS(drill_true_companion(f.m, gap, f.st), precondition_error);

    // rebuild U1 with the apex of U0: the charts share a vertex
    SimplexSet upper_sphere;
    for (const auto& t : f.body.boundary_triangles())
        if (t[0] >= 100) upper_sphere.insert(t);
    std::map<std::string, SimplexSet> overlap = f.charts;
    overlap["U1"] = cone_tets(upper_sphere, 900);
    SimplexSet all = set_union(f.body.tets(),
                               set_union(overlap.at("U0"), overlap.at("U1")));
    CHECK_THROWS_AS(drill_true_companion(manifold_from(all), overlap, f.st),
                    precondition_error);
}

TEST_CASE("theorem pipeline passes end to end on the product fixture") {
    auto f = product_fixture();
    TheoremReport rep = run_theorem_pipeline(f.m, f.charts, f.st);
    CHECK(rep.ok);
    CHECK(rep.planar.verdict == "planar");
    CHECK(rep.embedding.ok);
    CHECK(rep.embedding_report.ok);
    CHECK(rep.companion.h.homology() == std::array<int, 4>{1, 0, 0, 0});
    CHECK(rep.diagnostics.empty());
    CHECK(rep.verified.size() == 4);
    CHECK(rep.cited.size() == 2);

    // pipeline input must be closed
    CHECK_THROWS_AS(run_theorem_pipeline(Manifold3(gen::two_tet_ball()), {}, {}),
                    precondition_error);
}

namespace {

// Two strata whose second base carries a punctured torus: layer 1 is a disc
// fanned out beyond the square, layer 2 is the square joined to a punctured
// torus by a two-triangle strip.  The fan triangles overhang layer 2, so the
// pyramid property fails below the non-planar layer.
CompanionState genus_fixture() {
    SimplicialComplex base1 = square_disc();
    base1.add(Simplex{0, 1, 4});
    base1.add(Simplex{1, 3, 4});

    SimplicialComplex pt = relabel(gen::punctured(gen::torus7(), 1),
                                   shift_map(gen::torus7(), 150));
    auto circles = boundary_circles(SurfaceComplex(pt));
    REQUIRE(circles.size() == 1);
    Simplex e = *circles[0].support.begin();

    SimplicialComplex base2;
    base2.add(Simplex{100, 101, 102});
    base2.add(Simplex{101, 102, 103});
    base2.add(Simplex{102, 103, e[0]});
    base2.add(Simplex{103, e[0], e[1]});
    base2.add_all(pt.simplices(2));

    Stratification st;
    st.strata.push_back(shifted_stratum(base1, 100));
    st.strata.push_back(shifted_stratum(base2, 100));
    REQUIRE(validate(st).ok);

    CompanionState cs;
    cs.h = Manifold3(st.total());
    cs.st = st;
    return cs;
}

}  // namespace

TEST_CASE("planarize restores the pyramid by a disc extension, then exhibits the obstruction") {
    CompanionState cs = genus_fixture();
    PlanarizationState ps = planarize(cs, 8);

    CHECK(ps.verdict == "obstruction-exhibited");
    CHECK(ps.non_planar_index == 2);
    CHECK(ps.steps == 1);
    REQUIRE(!ps.audit.empty());
    CHECK(ps.audit[0].find("case-(3)") != std::string::npos);
    CHECK(ps.audit.back().find("splitting disc unavailable") != std::string::npos);
    CHECK(pyramid_check(ps.st, 2));
    REQUIRE(ps.log.size() == 1);
    CHECK(ps.log[0].kind == "extension");
    CHECK(ps.log[0].cell.size() == 6);  // two prisms over the fan triangles

    // the essential circle does not bound in the base surface
    REQUIRE(ps.circle.has_value());
    CHECK(ps.circle->dim == 1);
    CHECK_FALSE(ps.circle->support.empty());
    CHECK_FALSE(oracle::bounds(ps.st.strata[1].base().complex(), *ps.circle));
    CHECK_FALSE(ps.disc.has_value());
    CHECK(ps.chain.empty());
}

TEST_CASE("planarize honours the step budget") {
    CompanionState cs = genus_fixture();
    PlanarizationState ps = planarize(cs, 0);
    CHECK(ps.verdict == "budget-exhausted");
    CHECK(ps.steps == 0);
    CHECK(ps.non_planar_index == 2);
    CHECK(ps.audit.back().find("budget exhausted") != std::string::npos);
}

TEST_CASE("planarize grows a strip when the overhang is not a disc") {
    // Layer 1: the square annulus.  Layer 2: one lifted annulus triangle
    // next to a far-away punctured torus.  The overhang (annulus minus one
    // triangle) is a pair of pants, so only a one-prism strip can grow.
    SimplicialComplex base1 = square_annulus(0);
    SimplicialComplex base2;
    base2.add(Simplex{100, 101, 110});
    base2.add_all(
        relabel(gen::punctured(gen::torus7(), 1), shift_map(gen::torus7(), 150)).simplices(2));

    Stratification st;
    st.strata.push_back(shifted_stratum(base1, 100));
    st.strata.push_back(shifted_stratum(base2, 100));
    REQUIRE(validate(st).ok);

    CompanionState cs;
    cs.h = Manifold3(st.total());
    cs.st = st;

    PlanarizationState ps = planarize(cs, 1);
    CHECK(ps.verdict == "budget-exhausted");
    CHECK(ps.steps == 1);
    REQUIRE(!ps.audit.empty());
    CHECK(ps.audit[0].find("case-(4)") != std::string::npos);
    CHECK(ps.audit[0].find("1 triangle") != std::string::npos);
    CHECK(ps.st.strata[1].base().triangles().size() == base2.count(2) + 1);
    REQUIRE(ps.log.size() == 1);
    CHECK(ps.log[0].kind == "extension");
    CHECK(ps.log[0].cell.size() == 3);  // a single prism
}

namespace {

// Close an assembled handle complement by coning every chart sphere, and
// collect the cone balls as drilling charts U0..Uk.
struct AssembledFixture {
    Manifold3 m;
    std::map<std::string, SimplexSet> charts;
    Stratification st;
};

AssembledFixture close_assembly(const HandleSpec& spec) {
    auto ac = assemble_stratified_complement(spec);
    AssembledFixture f;
    f.st = ac.st;
    int apex = ac.n.complex().max_vertex_id() + 1;
    SimplexSet all = ac.n.tets();
    for (std::size_t i = 0; i < ac.charts.size(); ++i) {
        SimplexSet sphere;
        for (const auto& s : ac.charts.at("chart" + std::to_string(i)))
            if (s.dim() == 2) sphere.insert(s);
        SimplexSet ball = cone_tets(sphere, apex++);
        f.charts["U" + std::to_string(i)] = ball;
        all = set_union(all, ball);
    }
    f.m = manifold_from(all);
    return f;
}

}  // namespace

TEST_CASE("two-critical assembly passes the theorem pipeline end to end") {
    auto f = close_assembly(HandleSpec{{{0, {}}, {3, {}}}});
    REQUIRE(f.m.boundary_triangles().empty());
    REQUIRE(f.m.homology() == std::array<int, 4>{1, 0, 0, 1});

    TheoremReport rep = run_theorem_pipeline(f.m, f.charts, f.st);
    CHECK(rep.ok);
    CHECK(rep.planar.verdict == "planar");
    CHECK(rep.embedding.ok);
    CHECK(rep.embedding_report.ok);
    CHECK(rep.companion.h.homology() == std::array<int, 4>{1, 0, 0, 0});
    CHECK(classify(rep.companion.h.boundary_surface()) == SurfaceClass{true, 0, 0, 2});
    for (const auto& op : rep.planar.log) CHECK(op.before == op.after);
}

TEST_CASE("four-critical assembly drills after refinement and audits its obstruction") {
    auto f = close_assembly(HandleSpec{{{0, {}}, {1, {}}, {2, {}}, {3, {}}}});
    REQUIRE(f.charts.size() == 4);
    REQUIRE(f.m.boundary_triangles().empty());
    REQUIRE(f.m.homology() == std::array<int, 4>{1, 0, 0, 1});

    // Before refinement the lowest base is the six-vertex octahedral sphere;
    // three vertex-disjoint tube columns cannot fit, so the drill must go
    // through its refinement retry and still deliver a companion.
    CompanionState cs = drill_true_companion(f.m, f.charts, f.st);
    CHECK(cs.tubes.size() == 3);
    CHECK(cs.h.is_homotopy_disc());
    CHECK(cs.h.homology() == std::array<int, 4>{1, 0, 0, 0});
    CHECK(classify(cs.h.boundary_surface()) == SurfaceClass{true, 0, 0, 2});
    CHECK(cs.log.size() == 3);
    for (const auto& op : cs.log) {
        CHECK(op.kind == "reduction");
        CHECK(op.before == op.after);
    }
    REQUIRE(validate(cs.st).ok);
    for (const auto& s : cs.st.strata) CHECK(is_planar(s.base()));

    // The drilled chart spheres fold against the stratum interfaces: three
    // sheets meet along each chart's attaching circle, so the pyramid
    // property cannot be restored by literal base growth.  The pipeline must
    // say so instead of claiming success.
    TheoremReport rep = run_theorem_pipeline(f.m, f.charts, f.st, 500);
    CHECK_FALSE(rep.ok);
    CHECK(rep.planar.verdict == "obstruction-exhibited");
    CHECK(rep.companion.h.homology() == std::array<int, 4>{1, 0, 0, 0});
    REQUIRE(!rep.diagnostics.empty());
    bool blocked = false;
    for (const auto& line : rep.diagnostics)
        blocked = blocked || line.find("pyramid restoration blocked") != std::string::npos;
    CHECK(blocked);
    CHECK(rep.cited.size() == 2);
    CHECK(!rep.verified.empty());
}
