#include "topo/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace topo {

ChainZ2 ChainZ2::operator+(const ChainZ2& o) const {
    if (dim != o.dim && !empty() && !o.empty())
        throw precondition_error("chain dimensions differ");
    ChainZ2 r;
    r.dim = empty() ? o.dim : dim;
    std::set_symmetric_difference(support.begin(), support.end(), o.support.begin(),
                                  o.support.end(), std::inserter(r.support, r.support.end()));
    return r;
}

void ChainZ2::toggle(const Simplex& s) {
    auto it = support.find(s);
    if (it != support.end())
        support.erase(it);
    else
        support.insert(s);
}

void SimplicialComplex::add(const Simplex& s) {
    if (!simplices_[s.dim()].insert(s).second) return;
    if (s.dim() > 0)
        for (int i = 0; i < s.size(); ++i) add(s.facet(i));
}

int SimplicialComplex::dim() const {
    for (int d = 3; d >= 0; --d)
        if (!simplices_[d].empty()) return d;
    return -1;
}

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t n = 0;
    for (int d = 0; d < 4; ++d) n += simplices_[d].size();
    return n;
}

std::vector<int> SimplicialComplex::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(simplices_[0].size());
    for (const auto& s : simplices_[0]) ids.push_back(s[0]);
    return ids;
}

int SimplicialComplex::max_vertex_id() const {
    int m = -1;
    for (const auto& s : simplices_[0]) m = std::max(m, s[0]);
    return m;
}

void SimplicialComplex::set_label(const std::string& name, SimplexSet simplices) {
    for (const auto& s : simplices)
        if (!contains(s))
            throw structural_error("label '" + name + "' references missing simplex " + s.str());
    labels_[name] = std::move(simplices);
}

const SimplexSet& SimplicialComplex::label(const std::string& name) const {
    auto it = labels_.find(name);
    if (it == labels_.end()) throw precondition_error("unknown label '" + name + "'");
    return it->second;
}

ChainZ2 SimplicialComplex::boundary(const ChainZ2& chain) const {
    if (chain.empty()) return ChainZ2(std::max(chain.dim - 1, 0), {});
    if (chain.dim < 1) throw precondition_error("boundary needs dimension >= 1");
    ChainZ2 r;
    r.dim = chain.dim - 1;
    for (const auto& s : chain.support) {
        if (!contains(s))
            throw precondition_error("chain simplex " + s.str() + " not in complex");
        for (int i = 0; i < s.size(); ++i) r.toggle(s.facet(i));
    }
    return r;
}

int SimplicialComplex::euler_characteristic() const {
    int chi = 0;
    for (int d = 0; d < 4; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(simplices_[d].size());
    return chi;
}

SimplexSet SimplicialComplex::face_closure(const SimplexSet& sub) {
    SimplexSet out;
    std::vector<Simplex> stack(sub.begin(), sub.end());
    while (!stack.empty()) {
        Simplex s = stack.back();
        stack.pop_back();
        if (!out.insert(s).second) continue;
        if (s.dim() > 0)
            for (int i = 0; i < s.size(); ++i) stack.push_back(s.facet(i));
    }
    return out;
}

SimplexSet SimplicialComplex::closed_star_of_vertices(const std::set<int>& verts) const {
    SimplexSet star;
    for (int d = 0; d < 4; ++d)
        for (const auto& s : simplices_[d])
            for (int v : verts)
                if (s.has_vertex(v)) {
                    star.insert(s);
                    break;
                }
    return face_closure(star);
}

SimplexSet SimplicialComplex::induced_on_vertices(const std::set<int>& verts) const {
    SimplexSet out;
    for (int d = 0; d < 4; ++d)
        for (const auto& s : simplices_[d]) {
            bool inside = true;
            for (int v : s)
                if (!verts.count(v)) {
                    inside = false;
                    break;
                }
            if (inside) out.insert(s);
        }
    return out;
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s, int coface_dim) const {
    std::vector<Simplex> out;
    for (const auto& c : simplices_[coface_dim])
        if (s.is_face_of(c)) out.push_back(c);
    return out;
}

void SimplicialComplex::validate() const {
    for (int d = 1; d < 4; ++d)
        for (const auto& s : simplices_[d])
            for (int i = 0; i < s.size(); ++i)
                if (!contains(s.facet(i)))
                    throw structural_error("missing face " + s.facet(i).str() + " of " + s.str());
    for (const auto& [name, sub] : labels_) {
        for (const auto& s : sub)
            if (!contains(s))
                throw structural_error("label '" + name + "' references missing " + s.str());
    }
}

std::vector<SimplexSet> facet_components(const SimplexSet& cells, const SimplexSet& blocked) {
    // Adjacency through shared facets, except facets listed in `blocked`.
    std::map<Simplex, std::vector<const Simplex*>> by_facet;
    for (const auto& c : cells) {
        if (c.dim() == 0) continue;
        for (int i = 0; i < c.size(); ++i) {
            Simplex f = c.facet(i);
            if (!blocked.count(f)) by_facet[f].push_back(&c);
        }
    }
    std::map<Simplex, int> comp;
    std::vector<SimplexSet> out;
    for (const auto& seed : cells) {
        if (comp.count(seed)) continue;
        SimplexSet group;
        std::queue<Simplex> q;
        q.push(seed);
        comp[seed] = static_cast<int>(out.size());
        while (!q.empty()) {
            Simplex c = q.front();
            q.pop();
            group.insert(c);
            if (c.dim() == 0) continue;
            for (int i = 0; i < c.size(); ++i) {
                auto it = by_facet.find(c.facet(i));
                if (it == by_facet.end()) continue;
                for (const Simplex* nb : it->second)
                    if (!comp.count(*nb)) {
                        comp[*nb] = comp[seed];
                        q.push(*nb);
                    }
            }
        }
        out.push_back(std::move(group));
    }
    return out;
}

std::set<int> vertices_of(const SimplexSet& ss) {
    std::set<int> verts;
    for (const auto& s : ss)
        for (int v : s) verts.insert(v);
    return verts;
}

}  // namespace topo
