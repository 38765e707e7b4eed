#pragma once

#include "topo/complex.hpp"

namespace topo {

/// First barycentric subdivision.  Original vertices keep their ids; the
/// barycenter of every higher simplex receives a fresh id.  Labels are
/// carried automatically; chains can be carried through `carry`.
class Subdivision {
public:
    explicit Subdivision(const SimplicialComplex& c);

    const SimplicialComplex& complex() const { return sd_; }
    SimplicialComplex& complex() { return sd_; }

    int barycenter(const Simplex& s) const { return barycenter_.at(s); }

    /// Subcomplex of the subdivision covering the same set as `sub`.
    SimplexSet carry(const SimplexSet& sub) const;

    /// A carried chain has the same homology class as the original.
    ChainZ2 carry(const ChainZ2& chain) const;

private:
    SimplicialComplex sd_;
    std::map<Simplex, int> barycenter_;
    std::map<int, Simplex> origin_;  // subdivision vertex -> original simplex
};

struct RegularNeighborhood {
    SimplicialComplex ambient;  // second barycentric subdivision
    SimplexSet neighborhood;    // face-closed subcomplex of it
};

/// Closed star of the image of `sub` in the second barycentric subdivision.
RegularNeighborhood regular_neighborhood(const SimplicialComplex& c, const SimplexSet& sub);

}  // namespace topo
