#pragma once

#include <optional>
#include <vector>

#include "topo/complex.hpp"
#include "topo/gf2.hpp"

namespace topo {

/// The mod-2 boundary matrix from d-simplices (columns) to (d-1)-simplices
/// (rows) of a complex, with rows and columns in sorted simplex order.
class BoundaryMatrix {
public:
    BoundaryMatrix(const SimplicialComplex& c, int d);

    std::size_t rank() const { return reducer_.rank(); }
    std::size_t num_cols() const { return cols_.size(); }

    /// Solve for a d-chain whose boundary is the given (d-1)-chain.
    std::optional<ChainZ2> solve(const ChainZ2& rhs) const;

    BitVec to_row_vector(const ChainZ2& chain) const;

private:
    int d_;
    std::vector<Simplex> rows_, cols_;
    std::map<Simplex, std::size_t> row_index_;
    Gf2Reducer reducer_;
};

struct IsBoundaryResult {
    bool flag = false;
    std::optional<ChainZ2> witness;
};

/// Whether a cycle bounds, with a deterministic witness chain one dimension up.
/// Throws precondition_error when the input is not a cycle.
IsBoundaryResult is_boundary(const SimplicialComplex& c, const ChainZ2& cycle);

/// Rank of H_i(c; Z2).
int homology_rank(const SimplicialComplex& c, int i);

/// Ranks (H_0, H_1, H_2, H_3).
std::array<int, 4> homology_ranks(const SimplicialComplex& c);

}  // namespace topo
