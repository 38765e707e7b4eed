#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace topo {

/// A bit vector over GF(2), used for matrix columns.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    void operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    /// Index of the lowest set bit, or -1 when zero.
    long lowest() const;

    std::vector<std::size_t> ones() const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Incremental column reducer for a GF(2) matrix.  Columns are fed in order;
/// pivots are the lowest remaining row index, so witnesses are deterministic.
class Gf2Reducer {
public:
    Gf2Reducer(std::size_t rows, std::size_t cols) : rows_(rows), maxcols_(cols) {}

    /// Feed the next column; returns true when it was independent of the
    /// columns seen so far.
    bool add_column(BitVec col);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return ncols_; }

    /// Solve R x = b for x expressed in the original column indices.
    /// Empty optional when b is outside the column span.
    std::optional<std::vector<std::size_t>> solve(BitVec b) const;

private:
    struct Reduced {
        BitVec col;    // reduced column
        BitVec combo;  // original columns combined into it
        long pivot;
    };
    std::size_t rows_;
    std::size_t maxcols_;
    std::size_t ncols_ = 0;
    std::vector<Reduced> pivots_;    // independent reduced columns
    std::vector<long> row_owner_;    // row -> index into pivots_, or -1
};

}  // namespace topo
