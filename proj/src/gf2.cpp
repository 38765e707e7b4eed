#include "topo/gf2.hpp"

#include <bit>

namespace topo {

long BitVec::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<long>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool Gf2Reducer::add_column(BitVec col) {
    if (row_owner_.empty()) row_owner_.assign(rows_ ? rows_ : 1, -1);
    BitVec combo(maxcols_);
    combo.set(ncols_++);
    long p;
    while ((p = col.lowest()) >= 0 && row_owner_[p] >= 0) {
        const Reduced& r = pivots_[row_owner_[p]];
        col ^= r.col;
        combo ^= r.combo;
    }
    if (p < 0) return false;
    row_owner_[p] = static_cast<long>(pivots_.size());
    pivots_.push_back({std::move(col), std::move(combo), p});
    return true;
}

std::optional<std::vector<std::size_t>> Gf2Reducer::solve(BitVec b) const {
    BitVec combo(maxcols_);
    long p;
    while ((p = b.lowest()) >= 0) {
        if (row_owner_.empty() || row_owner_[p] < 0) return std::nullopt;
        const Reduced& r = pivots_[row_owner_[p]];
        b ^= r.col;
        combo ^= r.combo;
    }
    return combo.ones();
}

}  // namespace topo
