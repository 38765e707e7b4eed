#include "topo/prism.hpp"

#include <algorithm>
#include <set>

namespace topo {

void PrismCell::check() const {
    if (bottom.size() != top.size())
        throw structural_error("prism bottom/top vertex counts differ");
    if (bottom.size() < 3) throw structural_error("prism polygon needs >= 3 vertices");
    std::set<int> all(bottom.begin(), bottom.end());
    all.insert(top.begin(), top.end());
    if (all.size() != 2 * bottom.size())
        throw structural_error("prism vertices not pairwise distinct");
}

SimplexSet triangulate_polygon(const std::vector<int>& cyc) {
    std::size_t n = cyc.size();
    std::size_t lo = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
    SimplexSet out;
    for (std::size_t k = 1; k + 1 < n; ++k)
        out.insert(Simplex{cyc[lo], cyc[(lo + k) % n], cyc[(lo + k + 1) % n]});
    return out;
}

SimplexSet triangulate_quad(int a, int b, int c, int d) {
    std::array<int, 4> q{a, b, c, d};
    std::size_t lo = std::min_element(q.begin(), q.end()) - q.begin();
    SimplexSet out;
    out.insert(Simplex{q[lo], q[(lo + 1) % 4], q[(lo + 2) % 4]});
    out.insert(Simplex{q[lo], q[(lo + 2) % 4], q[(lo + 3) % 4]});
    return out;
}

SimplexSet prism_boundary_triangles(const PrismCell& p) {
    p.check();
    SimplexSet tris = triangulate_polygon(p.bottom);
    for (const auto& t : triangulate_polygon(p.top)) tris.insert(t);
    std::size_t n = p.bottom.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        for (const auto& t : triangulate_quad(p.bottom[i], p.bottom[j], p.top[j], p.top[i]))
            tris.insert(t);
    }
    return tris;
}

std::vector<Simplex> prism_tets(const PrismCell& p) {
    int apex = *std::min_element(p.bottom.begin(), p.bottom.end());
    apex = std::min(apex, *std::min_element(p.top.begin(), p.top.end()));
    std::vector<Simplex> tets;
    for (const auto& t : prism_boundary_triangles(p)) {
        if (t.has_vertex(apex)) continue;
        tets.push_back(Simplex{apex, t[0], t[1], t[2]});
    }
    return tets;
}

SimplicialComplex PrismComplex::to_simplicial() const {
    SimplicialComplex out;
    for (const auto& cell : cells)
        for (const auto& t : prism_tets(cell)) out.add(t);
    return out;
}

}  // namespace topo
