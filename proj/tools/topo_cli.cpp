// Command-line front end: file parsing, corpus generators, batch
// verification commands, and mesh export.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "topo/generators.hpp"
#include "topo/homology.hpp"
#include "topo/io.hpp"
#include "topo/pipeline.hpp"

using namespace topo;

namespace {

/// Bad invocation or unreadable input: exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A checked property failed: exit code 1 (the report still goes out).
struct violation_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot write '" + path + "'");
    out << text;
}

struct Options {
    std::uint64_t seed = 0;
    std::string report_path;
};

void emit(const Options& opt, const std::string& report) {
    std::cout << report;
    if (!opt.report_path.empty()) write_file(opt.report_path, report);
}

io::ParsedFile load(const std::string& path) { return io::parse(read_file(path)); }

ChainZ2 label_chain(const SimplicialComplex& c, const std::string& name, int dim) {
    if (!c.has_label(name)) throw usage_error("no label '" + name + "' in the input");
    SimplexSet support;
    for (const auto& s : c.label(name))
        if (s.dim() == dim) support.insert(s);
    if (support.empty())
        throw usage_error("label '" + name + "' has no " + std::to_string(dim) + "-simplices");
    return ChainZ2{dim, support};
}

std::string ranks_text(const std::array<int, 4>& r) {
    return std::to_string(r[0]) + " " + std::to_string(r[1]) + " " + std::to_string(r[2]) +
           " " + std::to_string(r[3]);
}

std::string class_text(const SurfaceClass& c) {
    std::ostringstream os;
    os << (c.orientable ? "orientable" : "non-orientable") << " genus " << c.genus
       << " boundaries " << c.boundary_count << " euler " << c.euler;
    return os.str();
}

/// Charts U0..Uk out of the tetrahedron labels of the complex.
std::map<std::string, SimplexSet> chart_labels(const SimplicialComplex& c) {
    std::map<std::string, SimplexSet> charts;
    for (const auto& [name, set] : c.labels()) {
        if (name.size() < 2 || name[0] != 'U') continue;
        if (name.find_first_not_of("0123456789", 1) != std::string::npos) continue;
        SimplexSet tets;
        for (const auto& s : set)
            if (s.dim() == 3) tets.insert(s);
        charts[name] = tets;
    }
    if (charts.empty()) throw usage_error("the input has no U0..Uk chart labels");
    return charts;
}

Stratification need_strata(const io::ParsedFile& f) {
    if (!f.strata) throw usage_error("the input has no STRATA section");
    return *f.strata;
}

void check_expect(const io::ParsedFile& f, const std::string& key, const std::string& got,
                  std::ostringstream& os, bool& fail) {
    auto it = f.expect.find(key);
    if (it == f.expect.end()) return;
    std::string want;
    for (const auto& tok : it->second) want += (want.empty() ? "" : " ") + tok;
    bool ok = want == got;
    os << "expected " << key << " " << want << ": " << (ok ? "match" : "MISMATCH") << "\n";
    fail = fail || !ok;
}

// -------------------------------------------------------------------------
// generators

std::map<int, int> offset_map(const SimplicialComplex& c, int offset) {
    std::map<int, int> m;
    for (int v : c.vertex_ids()) m[v] = v + offset;
    return m;
}

io::ParsedFile make_ball_stack(int layers) {
    SimplicialComplex square;
    square.add(Simplex{0, 1, 2});
    square.add(Simplex{1, 2, 3});
    io::ParsedFile f;
    f.strata.emplace();
    for (int i = 0; i < layers; ++i) {
        SimplicialComplex base = relabel(square, offset_map(square, 100 * i));
        f.strata->strata.push_back(Stratum(SurfaceComplex(base), offset_map(base, 100)));
    }
    f.complex = f.strata->total();
    f.expect["ranks"] = {"1", "0", "0", "0"};
    f.expect["euler"] = {"1"};
    return f;
}

io::ParsedFile make_nonplanar_layer() {
    SimplicialComplex base1;
    base1.add(Simplex{0, 1, 2});
    base1.add(Simplex{1, 2, 3});

    SimplicialComplex torus = gen::torus7();
    SimplicialComplex pt = relabel(gen::punctured(torus, 1), offset_map(torus, 150));
    auto circles = boundary_circles(SurfaceComplex(pt));
    Simplex e = *circles.front().support.begin();

    SimplicialComplex base2;
    base2.add(Simplex{100, 101, 102});
    base2.add(Simplex{101, 102, 103});
    base2.add(Simplex{102, 103, e[0]});
    base2.add(Simplex{103, e[0], e[1]});
    base2.add_all(pt.simplices(2));

    io::ParsedFile f;
    f.strata.emplace();
    f.strata->strata.push_back(Stratum(SurfaceComplex(base1), offset_map(base1, 100)));
    f.strata->strata.push_back(Stratum(SurfaceComplex(base2), offset_map(base2, 100)));
    f.complex = f.strata->total();
    f.expect["planar"] = {"false"};
    f.expect["ranks"] = {"1", "2", "0", "0"};
    return f;
}

io::ParsedFile generate(const std::string& name, int g, int layers) {
    io::ParsedFile f;
    if (name == "boundary-4-simplex") {
        for (int skip = 0; skip <= 4; ++skip) {
            std::vector<int> verts;
            for (int v = 0; v <= 4; ++v)
                if (v != skip) verts.push_back(v);
            f.complex.add(Simplex(verts));
        }
        f.expect["euler"] = {"0"};
        f.expect["ranks"] = {"1", "0", "0", "1"};
    } else if (name == "join-triangles-s3") {
        f.complex = gen::join_triangles_s3();
        f.expect["counts"] = {"6", "15", "18", "9"};
        f.expect["euler"] = {"0"};
        f.expect["ranks"] = {"1", "0", "0", "1"};
    } else if (name == "torus-7") {
        f.complex = gen::torus7();
        f.expect["counts"] = {"7", "21", "14"};
        f.expect["euler"] = {"0"};
        f.expect["surface"] = {"orientable", "genus", "1", "boundaries", "0", "euler", "0"};
    } else if (name == "octahedron-sphere") {
        f.complex = gen::octahedron_sphere();
        f.expect["euler"] = {"2"};
        f.expect["surface"] = {"orientable", "genus", "0", "boundaries", "0", "euler", "2"};
    } else if (name == "octa-ball") {
        f.complex = gen::octa_ball();
        f.expect["euler"] = {"1"};
        f.expect["ranks"] = {"1", "0", "0", "0"};
    } else if (name == "two-tet-ball") {
        f.complex = gen::two_tet_ball();
        f.expect["euler"] = {"1"};
        f.expect["ranks"] = {"1", "0", "0", "0"};
    } else if (name == "solid-tetrahedron") {
        f.complex = gen::solid_tetrahedron();
        f.expect["euler"] = {"1"};
        f.expect["ranks"] = {"1", "0", "0", "0"};
    } else if (name == "genus-surface") {
        f.complex = gen::genus_surface(g);
        f.expect["euler"] = {std::to_string(2 - 2 * g)};
        f.expect["surface"] = {"orientable", "genus",      std::to_string(g), "boundaries",
                               "0",          "euler",      std::to_string(2 - 2 * g)};
    } else if (name == "sphere-product") {
        SimplicialComplex base = gen::octahedron_sphere();
        f.strata.emplace();
        f.strata->strata.push_back(Stratum(SurfaceComplex(base), offset_map(base, 100)));
        Manifold3 body(f.strata->total());
        SimplexSet lower, upper;
        for (const auto& t : body.boundary_triangles()) (t[0] < 100 ? lower : upper).insert(t);
        SimplexSet u0, u1;
        for (const auto& s : gen::cone_over(lower, 900))
            if (s.dim() == 3) u0.insert(s);
        for (const auto& s : gen::cone_over(upper, 901))
            if (s.dim() == 3) u1.insert(s);
        f.complex = body.complex();
        f.complex.add_all(u0);
        f.complex.add_all(u1);
        f.complex.set_label("U0", u0);
        f.complex.set_label("U1", u1);
        f.expect["euler"] = {"0"};
        f.expect["ranks"] = {"1", "0", "0", "1"};
    } else if (name == "ball-stack") {
        f = make_ball_stack(layers);
    } else if (name == "nonplanar-layer") {
        f = make_nonplanar_layer();
    } else {
        throw usage_error("unknown generator '" + name + "'");
    }
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational 3-manifold topology toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized verification paths");
    app.add_option("--report", opt.report_path, "also write the report to this path");

    std::string file, out_path, off_path, label_a, label_b, label_t, res = "24x8";
    std::string gen_name, method = "oracle";
    int g = 1, layers = 3, index = 1, budget = 16;

    auto* c_generate = app.add_subcommand("generate", "emit a corpus complex file");
    c_generate->add_option("name", gen_name)->required();
    c_generate->add_option("--g", g, "genus for genus-surface");
    c_generate->add_option("--layers", layers, "layer count for ball-stack");
    c_generate->add_option("--out", out_path, "output path (default stdout)");

    auto* c_homology = app.add_subcommand("homology", "Z2 homology ranks of a complex");
    c_homology->add_option("file", file)->required();

    auto* c_classify = app.add_subcommand("classify", "classify surface components");
    c_classify->add_option("file", file)->required();
    c_classify->add_option("--label", label_t, "classify this labeled subcomplex");

    auto* c_circle = app.add_subcommand("circle-find", "find an essential circle");
    c_circle->add_option("file", file)->required();
    c_circle->add_option("--avoid", label_t, "label of the planar subsurface to avoid");
    c_circle->add_option("--method", method)->check(CLI::IsMember({"oracle", "induction"}));

    auto* c_link = app.add_subcommand("link", "mod-2 linking number of two labeled cycles");
    c_link->add_option("file", file)->required();
    c_link->add_option("--a", label_a)->required();
    c_link->add_option("--b", label_b)->required();

    auto* c_split = app.add_subcommand("split", "split along a labeled disc");
    c_split->add_option("file", file)->required();
    c_split->add_option("--disc", label_t)->required();

    auto* c_strat = app.add_subcommand("strat-validate", "validate the STRATA section");
    c_strat->add_option("file", file)->required();

    auto* c_chart = app.add_subcommand("chart-mesh", "mesh a canonical chart boundary");
    c_chart->add_option("--index", index)->check(CLI::Range(0, 3));
    c_chart->add_option("--res", res, "around x along, e.g. 24x8");
    c_chart->add_option("--off", off_path, "write the mesh as OFF");

    auto* c_companion = app.add_subcommand("companion", "drill the true companion");
    c_companion->add_option("file", file)->required();

    auto* c_planarize = app.add_subcommand("planarize", "drill, then run the planarization loop");
    c_planarize->add_option("file", file)->required();
    c_planarize->add_option("--budget", budget, "planarize step limit");

    auto* c_embed = app.add_subcommand("embed", "embed a planar stratification into R^3");
    c_embed->add_option("file", file)->required();
    c_embed->add_option("--out", out_path, "write the complex with COORDS here");
    c_embed->add_option("--off", off_path, "write the boundary surface as OFF");

    auto* c_verify = app.add_subcommand("verify-embed", "check COORDS for self-intersection");
    c_verify->add_option("file", file)->required();

    auto* c_theorem = app.add_subcommand("theorem", "run the end-to-end pipeline");
    c_theorem->add_option("file", file)->required();
    c_theorem->add_option("--budget", budget, "planarize step limit");

    try {
        app.parse(argc, argv);
        std::ostringstream os;
        bool fail = false;

        if (c_generate->parsed()) {
            std::string text = io::serialize(generate(gen_name, g, layers));
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }

        if (c_homology->parsed()) {
            io::ParsedFile f = load(file);
            std::array<int, 4> r = homology_ranks(f.complex);
            os << "euler " << f.complex.euler_characteristic() << "\n";
            os << "ranks " << ranks_text(r) << "\n";
            check_expect(f, "euler", std::to_string(f.complex.euler_characteristic()), os, fail);
            check_expect(f, "ranks", ranks_text(r), os, fail);
            if (f.expect.count("counts")) {
                std::string counts;
                for (int d = 0; d <= f.complex.dim(); ++d)
                    counts += (d ? " " : "") + std::to_string(f.complex.count(d));
                os << "counts " << counts << "\n";
                check_expect(f, "counts", counts, os, fail);
            }
        } else if (c_classify->parsed()) {
            io::ParsedFile f = load(file);
            SimplicialComplex c;
            if (label_t.empty()) {
                c = f.complex;
            } else {
                if (!f.complex.has_label(label_t))
                    throw usage_error("no label '" + label_t + "' in the input");
                c.add_all(f.complex.label(label_t));
            }
            auto classes = classify_components(SurfaceComplex(c));
            for (const auto& cls : classes) os << class_text(cls) << "\n";
            if (classes.size() == 1)
                check_expect(f, "surface", class_text(classes[0]), os, fail);
        } else if (c_circle->parsed()) {
            io::ParsedFile f = load(file);
            SimplexSet avoid;
            if (!label_t.empty()) {
                if (!f.complex.has_label(label_t))
                    throw usage_error("no label '" + label_t + "' in the input");
                avoid = f.complex.label(label_t);
            }
            CircleMethod cm =
                method == "oracle" ? CircleMethod::oracle : CircleMethod::induction;
            ChainZ2 c = find_nontrivial_circle(SurfaceComplex(f.complex), avoid, cm);
            os << "circle " << c.support.size() << " edges\n";
            for (const auto& e : c.support) os << e.str() << "\n";
        } else if (c_link->parsed()) {
            io::ParsedFile f = load(file);
            ChainZ2 a = label_chain(f.complex, label_a, 1);
            ChainZ2 b = label_chain(f.complex, label_b, 1);
            Manifold3 m(f.complex);
            if (m.boundary_triangles().empty()) {
                // linking lives in a homotopy disc: puncture a closed input by
                // dropping the first tetrahedron away from both cycles
                std::set<int> touched = vertices_of(a.support);
                for (int v : vertices_of(b.support)) touched.insert(v);
                Simplex drop = *f.complex.simplices(3).begin();
                for (const auto& t : f.complex.simplices(3)) {
                    bool meets = false;
                    for (int v : t) meets = meets || touched.count(v);
                    if (!meets) {
                        drop = t;
                        break;
                    }
                }
                SimplicialComplex open_c;
                for (const auto& t : f.complex.simplices(3))
                    if (!(t == drop)) open_c.add(t);
                m = Manifold3(open_c);
                os << "punctured: dropped one tetrahedron to open the closed input\n";
            }
            int lk = linking_number(m, a, b);
            os << "link " << lk << "\n";
            check_expect(f, "link", std::to_string(lk), os, fail);
        } else if (c_split->parsed()) {
            io::ParsedFile f = load(file);
            Manifold3 m(f.complex);
            ChainZ2 two = label_chain(f.complex, label_t, 2);
            SplittingDisc disc{two.support, f.complex.boundary(two)};
            SplitResult r = split_along_disc(m, disc);
            os << "pieces " << r.components << "\n";
            if (r.ok) {
                os << "u " << r.u->tets().size() << " tets, boundary "
                   << class_text(classify(r.u->boundary_surface())) << "\n";
                os << "v " << r.v->tets().size() << " tets, boundary "
                   << class_text(classify(r.v->boundary_surface())) << "\n";
            } else {
                os << "failed: " << r.report << "\n";
                fail = true;
            }
        } else if (c_strat->parsed()) {
            io::ParsedFile f = load(file);
            auto rep = validate(need_strata(f));
            os << (rep.ok ? "valid" : "invalid") << "\n";
            for (const auto& v : rep.violations) os << v << "\n";
            fail = !rep.ok;
        } else if (c_chart->parsed()) {
            auto sep = res.find('x');
            if (sep == std::string::npos)
                throw usage_error("--res must look like 24x8");
            int around = std::stoi(res.substr(0, sep));
            int along = std::stoi(res.substr(sep + 1));
            ChartMesh mesh = (index == 0 || index == 3)
                                 ? chart_disc_mesh(index, std::max(1, along / 8))
                                 : chart_boundary_mesh(index, around, along);
            auto cls = classify(mesh.surface);
            os << "index " << index << " resolution " << around << "x" << along << "\n";
            os << "surface " << class_text(cls) << "\n";
            for (const auto& [name, set] : mesh.surface.complex().labels())
                os << "piece " << name << " " << set.size() << " simplices\n";
            if (!off_path.empty())
                write_file(off_path, io::to_off(mesh.coords, mesh.surface.triangles()));
            fail = !(cls == SurfaceClass{true, 0, 0, 2});
        } else if (c_companion->parsed() || c_planarize->parsed()) {
            io::ParsedFile f = load(file);
            Manifold3 m(f.complex);
            CompanionState cs = drill_true_companion(m, chart_labels(f.complex),
                                                     need_strata(f));
            os << "companion " << cs.h.tets().size() << " tets, ranks "
               << ranks_text(cs.h.homology()) << ", boundary "
               << class_text(classify(cs.h.boundary_surface())) << "\n";
            os << "tubes " << cs.tubes.size() << ", logged reductions " << cs.log.size()
               << "\n";
            if (c_planarize->parsed()) {
                PlanarizationState ps = planarize(cs, budget);
                os << "verdict " << ps.verdict << " after " << ps.steps << " step(s)\n";
                for (const auto& line : ps.audit) os << "audit: " << line << "\n";
                fail = ps.verdict != "planar";
            }
        } else if (c_embed->parsed()) {
            io::ParsedFile f = load(file);
            Manifold3 m(f.complex);
            EmbeddingResult e = embed_planar(m, need_strata(f));
            if (!e.ok) {
                os << "embedding failed: " << e.error << "\n";
                fail = true;
            } else {
                os << "embedded " << e.coords.size() << " vertices\n";
                if (!out_path.empty()) {
                    io::ParsedFile g2 = f;
                    g2.coords = e.coords;
                    write_file(out_path, io::serialize(g2));
                }
                if (!off_path.empty()) {
                    std::map<int, Point> pts;
                    for (const auto& [v, p] : e.coords)
                        pts[v] = Point{static_cast<double>(p[0]), static_cast<double>(p[1]),
                                       static_cast<double>(p[2])};
                    write_file(off_path, io::to_off(pts, m.boundary_triangles()));
                }
            }
        } else if (c_verify->parsed()) {
            io::ParsedFile f = load(file);
            if (f.coords.empty()) throw usage_error("the input has no COORDS section");
            EmbeddingResult e;
            e.ok = true;
            e.coords = f.coords;
            EmbeddingReport rep = verify_embedding(e, Manifold3(f.complex));
            os << (rep.ok ? "embedding verified" : "embedding rejected") << "\n";
            for (const auto& v : rep.violations) os << v << "\n";
            fail = !rep.ok;
        } else if (c_theorem->parsed()) {
            io::ParsedFile f = load(file);
            Manifold3 m(f.complex);
            TheoremReport rep =
                run_theorem_pipeline(m, chart_labels(f.complex), need_strata(f), budget);
            os << "companion ranks " << ranks_text(rep.companion.h.homology())
               << ", boundary "
               << class_text(classify(rep.companion.h.boundary_surface())) << "\n";
            for (const auto& v : rep.verified) os << "verified: " << v << "\n";
            for (const auto& c : rep.cited) os << "cited: " << c << "\n";
            for (const auto& d : rep.diagnostics) os << "diagnostic: " << d << "\n";
            os << "result " << (rep.ok ? "pass" : "incomplete") << "\n";
            fail = !rep.ok;
        }

        emit(opt, os.str());
        if (fail) return 1;
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const io::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
