#include "topo/handles.hpp"

#include <algorithm>
#include <cmath>

#include "topo/generators.hpp"
#include "topo/subdivide.hpp"

namespace topo {

void MorseData::check() const {
    for (const auto& p : points) {
        if (p.index < 0 || p.index > 3)
            throw structural_error("critical index out of range");
        if (p.radius <= 0) throw structural_error("chart radius must be positive");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i].value < points[i + 1].value))
            throw structural_error("critical values must climb");
        if (!(points[i].value + points[i].radius <
              points[i + 1].value - points[i + 1].radius))
            throw structural_error("chart intervals overlap");
    }
}

std::array<int, 3> epsilon_signs(int n) {
    if (n < 0 || n > 3) throw precondition_error("critical index must be 0..3");
    std::array<int, 3> eps{};
    for (int i = 0; i < 3; ++i) eps[i] = (i + 1 <= 3 - n) ? 1 : -1;
    return eps;
}

double quadric(const Point& x, int n) {
    auto eps = epsilon_signs(n);
    double v = 0;
    for (int i = 0; i < 3; ++i) v += eps[i] * x[i] * x[i];
    return v;
}

Point flow(const Point& x0, double t, int n) {
    auto eps = epsilon_signs(n);
    Point x{};
    for (int i = 0; i < 3; ++i) x[i] = x0[i] * std::exp(2.0 * eps[i] * t);
    return x;
}

namespace {

// -------------------------------------------------------------------------
// Chart meshes

struct RevolutionBuilder {
    int around;
    SimplicialComplex c;
    std::map<int, Point> coords;
    std::vector<std::vector<int>> rows;  // one entry: pole; `around` entries: circle
    int next = 0;

    void add_row(double r, double z) {
        std::vector<int> row;
        if (r == 0.0) {
            row.push_back(next);
            coords[next++] = {0, 0, z};
        } else {
            for (int j = 0; j < around; ++j) {
                double a = 2.0 * M_PI * j / around;
                row.push_back(next);
                coords[next++] = {r * std::cos(a), r * std::sin(a), z};
            }
        }
        rows.push_back(std::move(row));
    }

    // Triangles of the band between rows i and i+1.
    SimplexSet band(std::size_t i) {
        const auto& a = rows[i];
        const auto& b = rows[i + 1];
        SimplexSet out;
        if (a.size() == 1) {
            for (int j = 0; j < around; ++j)
                out.insert(Simplex{a[0], b[j], b[(j + 1) % around]});
        } else if (b.size() == 1) {
            for (int j = 0; j < around; ++j)
                out.insert(Simplex{b[0], a[j], a[(j + 1) % around]});
        } else {
            for (int j = 0; j < around; ++j) {
                int k = (j + 1) % around;
                for (const auto& t : triangulate_quad(a[j], a[k], b[k], b[j])) out.insert(t);
            }
        }
        c.add_all(out);
        return out;
    }
};

}  // namespace

ChartMesh chart_boundary_mesh(int n, int around, int along) {
    if (n != 1 && n != 2) throw precondition_error("chart boundary mesh needs index 1 or 2");
    if (around < 3 || along < 1)
        throw precondition_error("degenerate mesh: need >= 3 around and >= 1 along");

    const double T = 0.25 * std::log(4.0 / 3.0);  // flow time from bay rim to L
    RevolutionBuilder rb{around, {}, {}, {}, 0};

    // Bay H+: the psi = -1 sheet from its apex (0,0,1) to the rim at x3 = 2.
    for (int k = 0; k <= along; ++k) {
        double z = 1.0 + static_cast<double>(k) / along;
        rb.add_row(std::sqrt(z * z - 1.0), z);
    }
    // Ring R+: flow trajectories from the rim to the landing circle on L.
    for (int k = 1; k <= along; ++k) {
        double t = T * k / along;
        rb.add_row(std::sqrt(3.0) * std::exp(2.0 * t), 2.0 * std::exp(-2.0 * t));
    }
    // Cloak Q: the bounded band of L = {psi = 1} between the two landings.
    for (int k = 1; k <= along; ++k) {
        double z = std::sqrt(3.0) * (1.0 - 2.0 * k / along);
        rb.add_row(std::sqrt(1.0 + z * z), z);
    }
    // Ring R- and bay H-: mirror images below.
    for (int k = 1; k <= along; ++k) {
        double t = T * (1.0 - static_cast<double>(k) / along);
        rb.add_row(std::sqrt(3.0) * std::exp(2.0 * t), -2.0 * std::exp(-2.0 * t));
    }
    for (int k = 1; k <= along; ++k) {
        double z = -2.0 + static_cast<double>(k) / along;
        rb.add_row(std::sqrt(z * z - 1.0), z);
    }

    const char* names[5] = {"H+", "R+", "Q", "R-", "H-"};
    std::map<std::string, SimplexSet> pieces;
    for (int p = 0; p < 5; ++p) {
        SimplexSet tris;
        for (int k = 0; k < along; ++k) {
            for (const auto& t : rb.band(static_cast<std::size_t>(p) * along + k))
                tris.insert(t);
        }
        pieces[names[p]] = std::move(tris);
    }
    for (auto& [name, tris] : pieces)
        rb.c.set_label(name, SimplicialComplex::face_closure(tris));

    if (n == 2)  // quarter turn about the y-axis
        for (auto& [v, p] : rb.coords) p = {p[2], p[1], -p[0]};

    return ChartMesh{SurfaceComplex(rb.c), std::move(rb.coords)};
}

ChartMesh chart_disc_mesh(int n, int refinements) {
    if (n != 0 && n != 3) throw precondition_error("chart disc mesh needs index 0 or 3");
    if (refinements < 0) throw precondition_error("refinement count must be >= 0");

    SimplicialComplex c = gen::octahedron_sphere();
    for (const auto& name : {"equator", "upper", "lower"}) c.drop_label(name);
    std::map<int, Point> coords{{0, {0, 0, 1}},  {1, {1, 0, 0}},  {2, {0, 1, 0}},
                                {3, {-1, 0, 0}}, {4, {0, -1, 0}}, {5, {0, 0, -1}}};

    for (int r = 0; r < refinements; ++r) {
        Subdivision sd(c);
        std::map<int, Point> next = coords;
        for (int d = 1; d <= 2; ++d) {
            for (const auto& s : c.simplices(d)) {
                Point p{0, 0, 0};
                for (int v : s)
                    for (int i = 0; i < 3; ++i) p[i] += coords.at(v)[i] / s.size();
                double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
                for (double& x : p) x /= len;
                next[sd.barycenter(s)] = p;
            }
        }
        c = sd.complex();
        coords = std::move(next);
    }
    return ChartMesh{SurfaceComplex(c), std::move(coords)};
}

// -------------------------------------------------------------------------
// Stratified complement assembly

namespace {

std::vector<int> circle_vertices(const Simplex& tri) { return {tri[0], tri[1], tri[2]}; }

SimplexSet annulus_between(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.size() < 3)
        throw structural_error("tube circles have mismatched sizes");
    SimplexSet out;
    std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        for (const auto& t : triangulate_quad(a[i], a[j], b[j], b[i])) out.insert(t);
    }
    return out;
}

struct Assembler {
    int next_id = 0;
    SimplicialComplex level;          // current level surface
    std::vector<Stratum> strata;
    SimplexSet pending_annulus;       // tube half offered to the next 2-handle
    SimplexSet unbodied;              // level triangles not yet inside any stratum
    bool need_layer = false;          // level has cells not yet inside a stratum
    bool closed = false;
    std::vector<std::pair<std::string, Simplex>> seeds;  // chart name -> boundary seed
    int charts = 0;

    SimplicialComplex from_triangles(const SimplexSet& tris) {
        SimplicialComplex c;
        c.add_all(tris);
        return c;
    }

    std::vector<Simplex> sorted_triangles() const {
        return {level.simplices(2).begin(), level.simplices(2).end()};
    }

    std::string chart_name() { return "chart" + std::to_string(charts++); }

    /// Emit a product stratum over the current level and move up through it.
    const Stratum& emit_product() {
        std::map<int, int> up;
        for (int v : level.vertex_ids()) up[v] = next_id++;
        strata.emplace_back(SurfaceComplex(level), up);
        const Stratum& s = strata.back();
        SimplexSet lifted_pending;
        for (const auto& t : pending_annulus) lifted_pending.insert(s.lift(t));
        pending_annulus = std::move(lifted_pending);
        level = relabel(level, up);
        need_layer = false;
        unbodied.clear();
        return s;
    }

    void minimum() {
        if (level.count(2) != 0) throw structural_error("index-0 event on a non-empty level");
        SimplicialComplex octa = gen::octahedron_sphere();
        std::map<int, int> fresh;
        for (int v : octa.vertex_ids()) fresh[v] = next_id++;
        level = from_triangles(relabel(octa, fresh).simplices(2));
        std::string name = chart_name();
        emit_product();
        seeds.emplace_back(name, *strata.back().base().triangles().begin());
    }

    void one_handle(const std::vector<int>& attach) {
        auto tris = sorted_triangles();
        Simplex d1, d2;
        if (!attach.empty()) {
            if (attach.size() != 2) throw structural_error("a 1-handle attaches along two discs");
            for (int p : attach)
                if (p < 0 || p >= static_cast<int>(tris.size()))
                    throw structural_error("attaching triangle position out of range");
            d1 = tris[attach[0]];
            d2 = tris[attach[1]];
        } else {
            bool found = false;
            for (std::size_t i = 0; i < tris.size() && !found; ++i)
                for (std::size_t j = i + 1; j < tris.size() && !found; ++j) {
                    bool disjoint = true;
                    for (int v : tris[j]) disjoint = disjoint && !tris[i].has_vertex(v);
                    if (disjoint) {
                        d1 = tris[i];
                        d2 = tris[j];
                        found = true;
                    }
                }
            if (!found) throw structural_error("no disjoint attaching discs on this level");
        }
        for (int v : d2)
            if (d1.has_vertex(v)) throw structural_error("attaching discs overlap");

        SimplexSet base_tris = level.simplices(2);
        base_tris.erase(d1);
        base_tris.erase(d2);
        std::map<int, int> up;  // bay rims stay in the base, so all vertices survive
        for (int v : vertices_of(SimplicialComplex::face_closure(base_tris)))
            up[v] = next_id++;
        strata.emplace_back(SurfaceComplex(from_triangles(base_tris)), up);
        const Stratum& s = strata.back();
        seeds.emplace_back(chart_name(), d1);

        // Close the level with a two-segment tube between the lifted bay rims.
        std::vector<int> c1, c2, mid;
        for (int v : circle_vertices(d1)) c1.push_back(up.at(v));
        for (int v : circle_vertices(d2)) c2.push_back(up.at(v));
        for (std::size_t i = 0; i < c1.size(); ++i) mid.push_back(next_id++);

        SimplexSet upper_tris;
        for (const auto& t : s.base().triangles()) upper_tris.insert(s.lift(t));
        SimplexSet t1 = annulus_between(c1, mid);
        for (int flip = 0; flip < 2; ++flip) {
            std::vector<int> c2o = c2;
            if (flip) std::reverse(c2o.begin(), c2o.end());
            SimplexSet t2 = annulus_between(mid, c2o);
            SimplexSet all = upper_tris;
            all.insert(t1.begin(), t1.end());
            all.insert(t2.begin(), t2.end());
            SimplicialComplex cand = from_triangles(all);
            bool orientable = true;
            for (const auto& cls : classify_components(SurfaceComplex(cand)))
                orientable = orientable && cls.orientable;
            if (orientable) {
                level = cand;
                pending_annulus = t1;
                unbodied = t1;
                unbodied.insert(t2.begin(), t2.end());
                need_layer = true;
                return;
            }
        }
        throw structural_error("could not orient the 1-handle tube");
    }

    void two_handle(const std::vector<int>& attach) {
        SimplexSet a;
        if (!attach.empty()) {
            auto tris = sorted_triangles();
            for (int p : attach) {
                if (p < 0 || p >= static_cast<int>(tris.size()))
                    throw structural_error("attaching triangle position out of range");
                a.insert(tris[p]);
            }
        } else {
            if (pending_annulus.empty())
                throw structural_error("no attaching annulus available for the 2-handle");
            a = pending_annulus;
        }
        for (const auto& t : a)
            if (!level.contains(t))
                throw structural_error("attaching annulus is not on the current level");
        auto cls = classify(SurfaceComplex(from_triangles(a)));
        if (cls != SurfaceClass{true, 0, 2, 0})
            throw structural_error("attaching region is not an annulus");

        SimplexSet base_tris = level.simplices(2);
        for (const auto& t : a) base_tris.erase(t);
        std::map<int, int> up;
        SimplexSet base_cl = SimplicialComplex::face_closure(base_tris);
        for (int v : vertices_of(base_cl)) up[v] = next_id++;
        strata.emplace_back(SurfaceComplex(from_triangles(base_tris)), up);
        const Stratum& s = strata.back();
        pending_annulus.clear();

        // Cap the lifted boundary circles with cone discs.  The chart seed is
        // the cap on the free side of the level (adjacent triangles not yet
        // glued into a stratum), which ends up on the 2-handle's own sphere.
        std::map<int, int> down;
        for (const auto& [lo, hi] : up) down[hi] = lo;
        SimplexSet upper_tris;
        for (const auto& t : s.base().triangles()) upper_tris.insert(s.lift(t));
        SimplicialComplex top = from_triangles(upper_tris);
        Simplex cap_seed{0};
        bool have_seed = false, have_free_seed = false;
        SimplexSet caps;
        for (const auto& circle : boundary_circles(SurfaceComplex(top))) {
            bool free_side = true;
            for (const auto& e : circle.support) {
                Simplex pre{down.at(e[0]), down.at(e[1])};
                for (const auto& t : s.base().complex().cofaces(pre, 2))
                    free_side = free_side && unbodied.count(t);
            }
            int apex = next_id++;
            SimplexSet cap = gen::cone_over(circle.support, apex);
            if (!have_seed || (free_side && !have_free_seed)) {
                cap_seed = *cap.begin();
                have_seed = true;
                have_free_seed = have_free_seed || free_side;
            }
            caps.insert(cap.begin(), cap.end());
            top.add_all(cap);
        }
        if (!have_seed) throw structural_error("2-handle removed nothing from the level");
        seeds.emplace_back(chart_name(), cap_seed);
        unbodied = caps;
        level = top;
        need_layer = true;
    }

    void maximum() {
        if (level.count(2) == 0) throw structural_error("index-3 event on an empty level");
        for (const auto& cls : classify_components(SurfaceComplex(level)))
            if (cls != SurfaceClass{true, 0, 0, 2})
                throw structural_error("index-3 event must close a sphere level");
        if (need_layer) emit_product();
        seeds.emplace_back(chart_name(), *level.simplices(2).begin());
        level = SimplicialComplex{};
        closed = true;
    }
};

}  // namespace

AssembledComplement assemble_stratified_complement(const HandleSpec& spec) {
    if (spec.events.empty()) throw precondition_error("empty handle spec");
    Assembler as;
    for (const auto& ev : spec.events) {
        if (as.closed) throw structural_error("events after the closing index-3 handle");
        switch (ev.index) {
            case -1:
                if (as.level.count(2) == 0)
                    throw structural_error("trivial cobordism on an empty level");
                as.emit_product();
                break;
            case 0:
                as.minimum();
                break;
            case 1:
                as.one_handle(ev.attach);
                break;
            case 2:
                as.two_handle(ev.attach);
                break;
            case 3:
                as.maximum();
                break;
            default:
                throw precondition_error("handle index must be -1 or 0..3");
        }
    }
    if (!as.closed) throw precondition_error("handle spec must end with an index-3 event");

    SimplicialComplex total;
    for (const auto& s : as.strata) {
        SimplicialComplex cells = s.cells();
        for (const auto& t : cells.simplices(3)) total.add(t);
    }
    AssembledComplement out;
    out.n = Manifold3(total);
    out.st.strata = std::move(as.strata);

    auto comps = facet_components(out.n.boundary_triangles());
    for (const auto& [name, seed] : as.seeds) {
        bool placed = false;
        for (const auto& comp : comps)
            if (comp.count(seed)) {
                out.charts[name] = SimplicialComplex::face_closure(comp);
                placed = true;
                break;
            }
        if (!placed)
            throw structural_error("chart seed " + seed.str() + " is not on the boundary");
    }
    return out;
}

}  // namespace topo
