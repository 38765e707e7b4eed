#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

/// A simplex of dimension <= 3, stored as a strictly increasing vertex tuple.
class Simplex {
public:
    Simplex() : n_(0) { v_.fill(-1); }

    Simplex(std::initializer_list<int> verts) : Simplex(std::vector<int>(verts)) {}

    explicit Simplex(std::vector<int> verts) {
        if (verts.size() < 1 || verts.size() > 4)
            throw std::invalid_argument("simplex must have 1..4 vertices");
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw std::invalid_argument("simplex has repeated vertices");
        n_ = static_cast<int>(verts.size());
        v_.fill(-1);
        std::copy(verts.begin(), verts.end(), v_.begin());
    }

    int dim() const { return n_ - 1; }
    int size() const { return n_; }
    int operator[](int i) const { return v_[i]; }

    const int* begin() const { return v_.data(); }
    const int* end() const { return v_.data() + n_; }

    bool has_vertex(int v) const {
        for (int i = 0; i < n_; ++i)
            if (v_[i] == v) return true;
        return false;
    }

    /// The facet obtained by dropping vertex position i.
    Simplex facet(int i) const {
        assert(n_ >= 2 && i >= 0 && i < n_);
        Simplex f;
        f.n_ = n_ - 1;
        int k = 0;
        for (int j = 0; j < n_; ++j)
            if (j != i) f.v_[k++] = v_[j];
        return f;
    }

    bool is_face_of(const Simplex& s) const {
        int i = 0;
        for (int j = 0; j < s.n_ && i < n_; ++j)
            if (s.v_[j] == v_[i]) ++i;
        return i == n_;
    }

    /// Join with a disjoint simplex (vertex sets must not overlap).
    Simplex join(const Simplex& o) const {
        std::vector<int> verts(begin(), end());
        verts.insert(verts.end(), o.begin(), o.end());
        return Simplex(verts);
    }

    Simplex relabeled(const auto& vertex_map) const {
        std::vector<int> verts;
        verts.reserve(n_);
        for (int i = 0; i < n_; ++i) verts.push_back(vertex_map.at(v_[i]));
        return Simplex(verts);
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ' ';
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Simplex&) const = default;

private:
    std::array<int, 4> v_;
    int n_;
};

}  // namespace topo
