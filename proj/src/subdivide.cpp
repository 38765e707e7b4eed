#include "topo/subdivide.hpp"

namespace topo {

namespace {

// All full flags sigma_0 < ... < sigma_k = top, emitted as barycenter tuples.
void emit_flags(const Simplex& top, std::vector<Simplex>& flag,
                const std::map<Simplex, int>& bary, SimplicialComplex& out) {
    flag.push_back(top);
    if (top.dim() == 0) {
        std::vector<int> verts;
        verts.reserve(flag.size());
        for (const auto& s : flag) verts.push_back(bary.at(s));
        out.add(Simplex(verts));
    } else {
        for (int i = 0; i < top.size(); ++i) emit_flags(top.facet(i), flag, bary, out);
    }
    flag.pop_back();
}

}  // namespace

Subdivision::Subdivision(const SimplicialComplex& c) {
    int next = c.max_vertex_id() + 1;
    for (int d = 0; d < 4; ++d)
        for (const auto& s : c.simplices(d)) {
            int id = (d == 0) ? s[0] : next++;
            barycenter_[s] = id;
            origin_[id] = s;
        }
    std::vector<Simplex> flag;
    for (int d = 0; d < 4; ++d)
        for (const auto& s : c.simplices(d)) emit_flags(s, flag, barycenter_, sd_);
    for (const auto& [name, sub] : c.labels()) sd_.set_label(name, carry(sub));
}

SimplexSet Subdivision::carry(const SimplexSet& sub) const {
    SimplexSet closure = SimplicialComplex::face_closure(sub);
    SimplexSet out;
    for (int d = 0; d < 4; ++d)
        for (const auto& s : sd_.simplices(d)) {
            bool inside = true;
            for (int v : s)
                if (!closure.count(origin_.at(v))) {
                    inside = false;
                    break;
                }
            if (inside) out.insert(s);
        }
    return out;
}

ChainZ2 Subdivision::carry(const ChainZ2& chain) const {
    ChainZ2 out;
    out.dim = chain.dim;
    for (const auto& s : sd_.simplices(chain.dim)) {
        // A carried d-simplex is a flag whose top element lies in the support.
        Simplex top = origin_.at(s[0]);
        for (int v : s)
            if (origin_.at(v).dim() > top.dim()) top = origin_.at(v);
        if (top.dim() != chain.dim || !chain.support.count(top)) continue;
        bool flag_inside = true;
        for (int v : s)
            if (!origin_.at(v).is_face_of(top)) {
                flag_inside = false;
                break;
            }
        if (flag_inside) out.support.insert(s);
    }
    return out;
}

RegularNeighborhood regular_neighborhood(const SimplicialComplex& c, const SimplexSet& sub) {
    Subdivision sd1(c);
    SimplexSet carried1 = sd1.carry(sub);
    Subdivision sd2(sd1.complex());
    SimplexSet carried2 = sd2.carry(carried1);
    RegularNeighborhood out;
    out.neighborhood = sd2.complex().closed_star_of_vertices(vertices_of(carried2));
    out.ambient = std::move(sd2.complex());
    return out;
}

}  // namespace topo
