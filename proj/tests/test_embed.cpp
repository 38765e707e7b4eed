#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "topo/embed.hpp"
#include "topo/generators.hpp"

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
// With cut set, one quad is left out and the band opens into a disc.
SimplicialComplex square_annulus(int b, bool cut = false) {
    SimplicialComplex c;
    const int inner[4] = {0, 1, 3, 2};
    const int outer[4] = {10, 11, 13, 12};
    for (int k = 0; k < (cut ? 3 : 4); ++k) {
        int a = inner[k], a2 = inner[(k + 1) % 4];
        int o = outer[k], o2 = outer[(k + 1) % 4];
        c.add(Simplex{b + a, b + a2, b + o});
        c.add(Simplex{b + a2, b + o, b + o2});
    }
    return c;
}

Manifold3 manifold_of(const Stratification& st) {
    SimplicialComplex total;
    for (const auto& s : st.strata) {
        SimplicialComplex cells = s.cells();
        total.add_all(cells.simplices(3));
    }
    return Manifold3(total);
}

Rational sq_xy(const RatPoint& p) { return p[0] * p[0] + p[1] * p[1]; }

}  // namespace

TEST_CASE("single disc stratum becomes a vertical prism over a convex polygon") {
    Stratification st;
    st.strata.push_back(shifted_stratum(square_disc(), 100));
    auto m = manifold_of(st);

    auto e = embed_planar(m, st);
    REQUIRE(e.ok);
    for (int v : {0, 1, 2, 3}) {
        const auto& lo = e.coords.at(v);
        const auto& hi = e.coords.at(v + 100);
        CHECK(lo[2] == 0);
        CHECK(hi[2] == 1);
        CHECK(lo[0] == hi[0]);
        CHECK(lo[1] == hi[1]);
        // every vertex of the disc lies on its boundary polygon's circle
        CHECK(sq_xy(lo) == 16);
    }
    auto rep = verify_embedding(e, m);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
}

TEST_CASE("two-layer pyramid shares interface coordinates at z=1") {
    auto lower = square_disc();
    SimplicialComplex upper;  // the same square with two more triangles fanned on
    upper.add(Simplex{100, 101, 102});
    upper.add(Simplex{101, 102, 103});
    upper.add(Simplex{100, 101, 104});
    upper.add(Simplex{101, 103, 104});

    Stratification st;
    st.strata.push_back(shifted_stratum(lower, 100));
    st.strata.push_back(shifted_stratum(upper, 100));
    REQUIRE(validate(st).ok);
    auto m = manifold_of(st);

    auto e = embed_planar(m, st);
    REQUIRE(e.ok);
    for (int v : {0, 1, 2, 3}) {
        CHECK(e.coords.at(v)[2] == 0);
        CHECK(e.coords.at(v + 100)[2] == 1);
        CHECK(e.coords.at(v)[0] == e.coords.at(v + 100)[0]);
        CHECK(e.coords.at(v)[1] == e.coords.at(v + 100)[1]);
        CHECK(e.coords.at(v + 200)[2] == 2);
    }
    CHECK(e.coords.at(104)[2] == 1);
    CHECK(e.coords.at(204)[2] == 2);
    CHECK(verify_embedding(e, m).ok);
}

TEST_CASE("three-layer stack with an annular middle base embeds injectively") {
    // Layer 1: the annulus minus one quad (a disc).  Layer 2: the annulus.
    // Layer 3: the annulus with its inner circle capped (a disc again).
    SimplicialComplex f1 = square_annulus(0, true);
    SimplicialComplex f2 = square_annulus(100);
    SimplicialComplex f3 = square_annulus(200);
    f3.add(Simplex{200, 201, 220});
    f3.add(Simplex{201, 203, 220});
    f3.add(Simplex{203, 202, 220});
    f3.add(Simplex{202, 200, 220});

    Stratification st;
    st.strata.push_back(shifted_stratum(f1, 100));
    st.strata.push_back(shifted_stratum(f2, 100));
    st.strata.push_back(shifted_stratum(f3, 100));
    REQUIRE(validate(st).ok);
    CHECK(classify(st.strata[1].base()) == SurfaceClass{true, 0, 2, 0});
    auto m = manifold_of(st);

    auto e = embed_planar(m, st);
    REQUIRE(e.ok);
    // inner circle strictly inside the outer polygon, shared across layers
    for (int v : {0, 1, 2, 3}) {
        CHECK(sq_xy(e.coords.at(v)) < 16);
        CHECK(e.coords.at(v)[0] == e.coords.at(v + 200)[0]);
        CHECK(e.coords.at(v)[1] == e.coords.at(v + 300)[1]);
    }
    CHECK(e.coords.at(320)[2] == 3);

    auto rep = verify_embedding(e, m);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
}

TEST_CASE("verifier notices collided vertices and overlapping cells") {
    Stratification st;
    st.strata.push_back(shifted_stratum(square_disc(), 100));
    auto m = manifold_of(st);
    auto e = embed_planar(m, st);
    REQUIRE(e.ok);

    SUBCASE("two vertices collided") {
        e.coords[0] = e.coords[3];
        auto rep = verify_embedding(e, m);
        CHECK_FALSE(rep.ok);
        REQUIRE_FALSE(rep.violations.empty());
        CHECK(rep.violations[0].find("collide") != std::string::npos);
    }

    SUBCASE("degenerate cell") {
        auto flat = e.coords.at(100);
        flat[2] = 0;  // drop an upper vertex into the base plane
        e.coords[100] = flat;
        auto rep = verify_embedding(e, m);
        CHECK_FALSE(rep.ok);
    }
}

TEST_CASE("verifier flags a vertex buried in a foreign cell") {
    Manifold3 m(gen::two_tet_ball());
    EmbeddingResult e;
    e.ok = true;
    e.coords[0] = {0, 0, 0};
    e.coords[1] = {1, 0, 0};
    e.coords[2] = {0, 1, 0};
    e.coords[3] = {0, 0, 1};

    SUBCASE("valid placement passes") {
        e.coords[4] = {1, 1, 1};
        CHECK(verify_embedding(e, m).ok);
    }

    SUBCASE("vertex 4 inside the other tetrahedron") {
        e.coords[4] = {Rational(1) / 10, Rational(1) / 10, Rational(1) / 10};
        auto rep = verify_embedding(e, m);
        CHECK_FALSE(rep.ok);
        REQUIRE_FALSE(rep.violations.empty());
        CHECK(rep.violations[0].find("intersect") != std::string::npos);
    }
}

TEST_CASE("embedding reports are invariant under translation") {
    SimplicialComplex f1 = square_annulus(0, true);
    Stratification st;
    st.strata.push_back(shifted_stratum(f1, 100));
    auto m = manifold_of(st);
    auto e = embed_planar(m, st);
    REQUIRE(e.ok);
    for (auto& [v, p] : e.coords) {
        p[0] += 7;
        p[1] -= Rational(22) / 3;
        p[2] += 11;
    }
    CHECK(verify_embedding(e, m).ok);
}

TEST_CASE("non-planar stratifications and partial covers are rejected") {
    Stratification torus_layer;
    torus_layer.strata.push_back(shifted_stratum(gen::torus7(), 100));
    auto tm = manifold_of(torus_layer);
    CHECK_THROWS_AS(embed_planar(tm, torus_layer), precondition_error);

    Stratification st;
    st.strata.push_back(shifted_stratum(square_disc(), 100));
    auto m = manifold_of(st);
    SimplicialComplex bigger = m.complex();
    bigger.add(Simplex{500, 501, 502, 503});
    CHECK_THROWS_AS(embed_planar(Manifold3(bigger), st), precondition_error);
}
