// Test-only oracles, independent of the library's GF(2) path: dense
// row-reduction over uint8 matrices built directly from simplex face maps.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "topo/complex.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::uint8_t>>;

inline std::size_t dense_rank(Matrix m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][col]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][col])
                for (std::size_t c = col; c < cols; ++c) m[r][c] ^= m[rank][c];
        ++rank;
    }
    return rank;
}

inline Matrix boundary_matrix(const topo::SimplicialComplex& cx, int d) {
    std::vector<topo::Simplex> rows(cx.simplices(d - 1).begin(), cx.simplices(d - 1).end());
    std::vector<topo::Simplex> cols(cx.simplices(d).begin(), cx.simplices(d).end());
    std::map<topo::Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    Matrix m(rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < cols[j].size(); ++i) m[row_of.at(cols[j].facet(i))][j] ^= 1;
    return m;
}

inline int homology_rank(const topo::SimplicialComplex& cx, int i) {
    int top = cx.dim();
    std::size_t rank_i = (i == 0) ? 0 : dense_rank(boundary_matrix(cx, i));
    std::size_t rank_next = (i >= top) ? 0 : dense_rank(boundary_matrix(cx, i + 1));
    return static_cast<int>(cx.count(i) - rank_i - rank_next);
}

/// Whether the system [A | b] is consistent, i.e. the cycle bounds.
inline bool bounds(const topo::SimplicialComplex& cx, const topo::ChainZ2& cycle) {
    if (cycle.support.empty()) return true;
    if (cycle.dim >= cx.dim()) return false;
    Matrix m = boundary_matrix(cx, cycle.dim + 1);
    std::vector<topo::Simplex> rows(cx.simplices(cycle.dim).begin(),
                                    cx.simplices(cycle.dim).end());
    std::size_t rank_a = dense_rank(m);
    std::map<topo::Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    for (auto& row : m) row.push_back(0);
    for (const auto& s : cycle.support) m[row_of.at(s)].back() = 1;
    return dense_rank(m) == rank_a;
}

}  // namespace oracle
