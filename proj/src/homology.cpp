#include "topo/homology.hpp"

namespace topo {

BoundaryMatrix::BoundaryMatrix(const SimplicialComplex& c, int d)
    : d_(d),
      rows_(c.simplices(d - 1).begin(), c.simplices(d - 1).end()),
      cols_(c.simplices(d).begin(), c.simplices(d).end()),
      reducer_(rows_.size(), cols_.size()) {
    if (d < 1 || d > 3) throw precondition_error("boundary matrix dimension out of range");
    for (std::size_t i = 0; i < rows_.size(); ++i) row_index_[rows_[i]] = i;
    for (const auto& s : cols_) {
        BitVec col(rows_.size());
        for (int i = 0; i < s.size(); ++i) col.flip(row_index_.at(s.facet(i)));
        reducer_.add_column(std::move(col));
    }
}

BitVec BoundaryMatrix::to_row_vector(const ChainZ2& chain) const {
    BitVec b(rows_.size());
    for (const auto& s : chain.support) {
        auto it = row_index_.find(s);
        if (it == row_index_.end())
            throw precondition_error("chain simplex " + s.str() + " not in complex");
        b.flip(it->second);
    }
    return b;
}

std::optional<ChainZ2> BoundaryMatrix::solve(const ChainZ2& rhs) const {
    auto sol = reducer_.solve(to_row_vector(rhs));
    if (!sol) return std::nullopt;
    ChainZ2 w;
    w.dim = d_;
    for (auto j : *sol) w.support.insert(cols_[j]);
    return w;
}

IsBoundaryResult is_boundary(const SimplicialComplex& c, const ChainZ2& cycle) {
    if (cycle.empty()) return {true, ChainZ2(cycle.dim + 1, {})};
    if (!c.boundary(cycle).empty()) throw precondition_error("is_boundary input is not a cycle");
    if (cycle.dim >= c.dim()) return {false, std::nullopt};
    BoundaryMatrix bd(c, cycle.dim + 1);
    auto w = bd.solve(cycle);
    if (!w) return {false, std::nullopt};
    return {true, std::move(*w)};
}

int homology_rank(const SimplicialComplex& c, int i) {
    if (i < 0 || i > 3 || i > c.dim())
        throw precondition_error("homology dimension out of range");
    std::size_t n_i = c.count(i);
    std::size_t rank_di = (i == 0) ? 0 : BoundaryMatrix(c, i).rank();
    std::size_t rank_next = (i == c.dim()) ? 0 : BoundaryMatrix(c, i + 1).rank();
    return static_cast<int>(n_i - rank_di - rank_next);
}

std::array<int, 4> homology_ranks(const SimplicialComplex& c) {
    std::array<int, 4> out{0, 0, 0, 0};
    int top = c.dim();
    if (top < 0) return out;
    // Share the boundary-matrix ranks across dimensions.
    std::array<std::size_t, 4> rank{};  // rank[d] = rank of boundary_d
    for (int d = 1; d <= top; ++d) rank[d] = BoundaryMatrix(c, d).rank();
    for (int i = 0; i <= top; ++i) {
        std::size_t next = (i < top) ? rank[i + 1] : 0;
        out[i] = static_cast<int>(c.count(i) - rank[i] - next);
    }
    return out;
}

}  // namespace topo
