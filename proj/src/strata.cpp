#include "topo/strata.hpp"

#include <algorithm>

#include "topo/subdivide.hpp"

namespace topo {

namespace {

std::set<int> complex_vertices(const SimplicialComplex& c) {
    auto ids = c.vertex_ids();
    return {ids.begin(), ids.end()};
}

SimplexSet all_simplices(const SimplicialComplex& c) {
    SimplexSet out;
    for (int d = 0; d <= 3; ++d)
        out.insert(c.simplices(d).begin(), c.simplices(d).end());
    return out;
}

SimplexSet intersect(const SimplexSet& a, const SimplexSet& b) {
    SimplexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace

Stratum::Stratum(SurfaceComplex base, std::map<int, int> up)
    : base_(std::move(base)), up_(std::move(up)) {
    std::set<int> lower_verts = complex_vertices(base_.complex());
    std::set<int> upper_verts;
    for (int v : lower_verts) {
        auto it = up_.find(v);
        if (it == up_.end())
            throw structural_error("stratum up-map misses vertex " + std::to_string(v));
        if (lower_verts.count(it->second))
            throw structural_error("stratum upper vertex " + std::to_string(it->second) +
                                   " collides with the base");
        if (!upper_verts.insert(it->second).second)
            throw structural_error("stratum up-map is not injective at " +
                                   std::to_string(it->second));
    }
    if (up_.size() != lower_verts.size())
        throw structural_error("stratum up-map has extra vertices");
}

int Stratum::up(int v) const {
    auto it = up_.find(v);
    if (it == up_.end())
        throw precondition_error("vertex " + std::to_string(v) + " is not in the stratum base");
    return it->second;
}

Simplex Stratum::lift(const Simplex& s) const {
    std::vector<int> verts;
    for (int i = 0; i <= s.dim(); ++i) verts.push_back(up(s[i]));
    return Simplex(verts);
}

ChainZ2 Stratum::lift(const ChainZ2& c) const {
    ChainZ2 out(c.dim, {});
    for (const auto& s : c.support) out.support.insert(lift(s));
    return out;
}

SimplexSet Stratum::lower() const { return all_simplices(base_.complex()); }

SimplexSet Stratum::upper() const {
    SimplexSet out;
    for (const auto& s : lower()) out.insert(lift(s));
    return out;
}

PrismComplex Stratum::body(int stratum_id) const {
    PrismComplex pc;
    for (const auto& t : base_.triangles()) {
        PrismCell cell;
        cell.bottom = {t[0], t[1], t[2]};
        cell.top = {up(t[0]), up(t[1]), up(t[2])};
        cell.stratum = stratum_id;
        cell.base = t;
        cell.check();
        pc.cells.push_back(cell);
    }
    return pc;
}

SimplicialComplex Stratum::cells() const { return body().to_simplicial(); }

SimplicialComplex Stratification::total() const {
    SimplicialComplex out;
    for (const auto& s : strata)
        for (const auto& cell : all_simplices(s.cells())) out.add(cell);
    return out;
}

StratificationReport validate(const Stratification& st) {
    StratificationReport rep;
    auto flag = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    std::vector<SimplexSet> cells;
    for (std::size_t i = 0; i < st.size(); ++i) {
        const Stratum& s = st.strata[i];
        try {
            cells.push_back(all_simplices(s.cells()));
        } catch (const structural_error& e) {
            flag("stratum " + std::to_string(i + 1) + ": " + e.what());
            cells.push_back({});
            continue;
        }
        for (const auto& cls : classify_components(s.base()))
            if (!cls.orientable) {
                flag("stratum " + std::to_string(i + 1) + ": base is non-orientable");
                break;
            }
    }

    for (std::size_t i = 0; i < st.size(); ++i) {
        for (std::size_t j = i + 1; j < st.size(); ++j) {
            SimplexSet shared = intersect(cells[i], cells[j]);
            if (j - i >= 2) {
                if (!shared.empty())
                    flag("strata " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " are not disjoint (share " + shared.begin()->str() + ")");
                continue;
            }
            SimplexSet expected = intersect(st.strata[i].upper(), st.strata[j].lower());
            if (shared != expected) {
                SimplexSet extra;
                std::set_symmetric_difference(shared.begin(), shared.end(), expected.begin(),
                                              expected.end(), std::inserter(extra, extra.begin()));
                flag("strata " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                     " meet outside the upper/lower interface (at " + extra.begin()->str() + ")");
            }
        }
    }
    return rep;
}

bool is_planar(const Stratification& st) {
    StratificationReport rep = validate(st);
    if (!rep.ok)
        throw precondition_error("is_planar needs a valid stratification: " + rep.violations[0]);
    for (const auto& s : st.strata)
        if (!is_planar(s.base())) return false;
    return true;
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::map<int, int>& m) {
    auto rename = [&m](const Simplex& s) {
        std::vector<int> verts;
        for (int i = 0; i <= s.dim(); ++i) {
            auto it = m.find(s[i]);
            verts.push_back(it == m.end() ? s[i] : it->second);
        }
        return Simplex(verts);
    };
    SimplicialComplex out;
    for (int d = c.dim(); d >= 0; --d)
        for (const auto& s : c.simplices(d)) out.add(rename(s));
    for (const auto& [name, ss] : c.labels()) {
        SimplexSet mapped;
        for (const auto& s : ss) mapped.insert(rename(s));
        out.set_label(name, mapped);
    }
    return out;
}

Refined refine(const Stratification& st, const RefineSpec& spec) {
    int r = static_cast<int>(st.size());
    for (int i : spec.level_splits)
        if (i < 0 || i >= r) throw precondition_error("level split index out of range");
    for (int i : spec.base_subdivisions)
        if (i < 0 || i >= r) throw precondition_error("base subdivision index out of range");

    std::vector<std::set<int>> verts;
    int fresh = 0;
    for (const auto& s : st.strata) {
        std::set<int> vs = complex_vertices(s.base().complex());
        for (const auto& [lo, hi] : s.up_map()) {
            (void)lo;
            vs.insert(hi);
        }
        for (int v : vs) fresh = std::max(fresh, v + 1);
        verts.push_back(std::move(vs));
    }

    // Base subdivisions propagate to every stratum sharing vertices with a
    // selected one, so glued interfaces stay triangulation-compatible.
    std::set<int> subdivide = spec.base_subdivisions;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < r; ++i) {
            if (subdivide.count(i)) continue;
            for (int j : subdivide) {
                std::vector<int> common;
                std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(),
                                      verts[j].end(), std::back_inserter(common));
                if (!common.empty()) {
                    subdivide.insert(i);
                    grew = true;
                    break;
                }
            }
        }
    }

    // One fresh vertex per subdivided simplex, shared across strata so that
    // barycenters of interface cells coincide.
    std::map<Simplex, int> registry;
    auto barycenter_id = [&registry, &fresh](const Simplex& s) {
        auto it = registry.find(s);
        if (it != registry.end()) return it->second;
        registry.emplace(s, fresh);
        return fresh++;
    };

    Refined out;
    for (int i = 0; i < r; ++i) {
        SurfaceComplex base = st.strata[i].base();
        std::map<int, int> up = st.strata[i].up_map();

        if (subdivide.count(i)) {
            const SimplicialComplex& bc = base.complex();
            Subdivision sd(bc);
            std::map<int, int> rename;
            std::map<int, int> new_up = up;
            for (int d = 1; d <= 2; ++d) {
                for (const auto& s : bc.simplices(d)) {
                    int lo = barycenter_id(s);
                    rename[sd.barycenter(s)] = lo;
                    new_up[lo] = barycenter_id(st.strata[i].lift(s));
                }
            }
            base = SurfaceComplex(relabel(sd.complex(), rename));
            up = std::move(new_up);
        }

        if (spec.level_splits.count(i)) {
            std::map<int, int> mid;
            for (const auto& [lo, hi] : up) {
                (void)hi;
                mid[lo] = fresh++;
            }
            std::map<int, int> top_up;
            for (const auto& [lo, hi] : up) top_up[mid[lo]] = hi;
            out.st.strata.emplace_back(base, mid);
            out.parent.push_back(i);
            out.st.strata.emplace_back(SurfaceComplex(relabel(base.complex(), mid)),
                                       std::move(top_up));
            out.parent.push_back(i);
        } else {
            out.st.strata.emplace_back(std::move(base), std::move(up));
            out.parent.push_back(i);
        }
    }
    return out;
}

bool pyramid_check(const Stratification& st, int upTo) {
    if (upTo < 0 || upTo > static_cast<int>(st.size()))
        throw precondition_error("pyramid_check index out of range");
    for (int i = 1; i < upTo; ++i) {
        const Stratum& below = st.strata[i - 1];
        const SimplicialComplex& next_lower = st.strata[i].base().complex();
        for (const auto& t : below.base().triangles())
            if (!next_lower.contains(below.lift(t))) return false;
    }
    return true;
}

Tower tower(const Stratification& st, int i, const SimplexSet& x) {
    if (i < 0 || i >= static_cast<int>(st.size()))
        throw precondition_error("tower stratum index out of range");
    const Stratum& s = st.strata[i];

    SimplexSet base = SimplicialComplex::face_closure(x);
    for (const auto& cell : base)
        if (!s.base().complex().contains(cell))
            throw precondition_error("tower base is not carried by the lower copy: " + cell.str());

    SimplicialComplex body;
    for (const auto& cell : base) {
        switch (cell.dim()) {
            case 0:
                body.add(Simplex{cell[0], s.up(cell[0])});
                break;
            case 1:
                body.add_all(triangulate_quad(cell[0], cell[1], s.up(cell[1]), s.up(cell[0])));
                break;
            default: {
                PrismCell pc;
                pc.bottom = {cell[0], cell[1], cell[2]};
                pc.top = {s.up(cell[0]), s.up(cell[1]), s.up(cell[2])};
                pc.base = cell;
                for (const auto& t : prism_tets(pc)) body.add(t);
                break;
            }
        }
    }

    std::set<int> lower_verts = complex_vertices(s.base().complex());
    std::set<int> upper_verts;
    for (int v : lower_verts) upper_verts.insert(s.up(v));
    SimplexSet in_lower, in_upper;
    for (const auto& cell : all_simplices(body)) {
        bool lo = true, hi = true;
        for (int k = 0; k <= cell.dim(); ++k) {
            lo = lo && lower_verts.count(cell[k]);
            hi = hi && upper_verts.count(cell[k]);
        }
        if (lo) in_lower.insert(cell);
        if (hi) in_upper.insert(cell);
    }
    SimplexSet lifted;
    for (const auto& cell : base) lifted.insert(s.lift(cell));
    if (in_lower != base || in_upper != lifted)
        throw structural_error("tower body does not meet the stratum levels in its base");

    return Tower{i, std::move(base), std::move(body)};
}

}  // namespace topo
