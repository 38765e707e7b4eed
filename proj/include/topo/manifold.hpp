#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/surface.hpp"

namespace topo {

/// A triangulated 3-manifold: every triangle lies in one or two tetrahedra
/// and every vertex link is a sphere or a disc.
class Manifold3 {
public:
    Manifold3() = default;
    explicit Manifold3(SimplicialComplex c);

    const SimplicialComplex& complex() const { return c_; }
    const SimplexSet& tets() const { return c_.simplices(3); }

    /// Triangles lying in exactly one tetrahedron.
    const SimplexSet& boundary_triangles() const { return boundary_; }
    const SurfaceComplex& boundary_surface() const { return boundary_surface_; }
    const std::array<int, 4>& homology() const { return homology_; }

    /// H_1 = H_2 = 0 and the boundary is one genus-0 closed surface.
    bool is_homotopy_disc() const;

private:
    SimplicialComplex c_;
    SimplexSet boundary_;
    SurfaceComplex boundary_surface_;
    std::array<int, 4> homology_{};
};

/// A closed walk in the dual graph: consecutive tetrahedra share a triangle.
/// Carries a 1-cycle transversely to the triangle skeleton.
struct DualCycle {
    std::vector<Simplex> tets;
    std::vector<Simplex> crossed;  // crossed[i] is shared by tets[i] and tets[i+1 (mod)]

    void check(const SimplicialComplex& c) const;  // throws structural_error
};

/// Dual carrier of an interior edge cycle: a closed tetrahedron walk through
/// the closed star of b, visiting the stars of b's vertices in cycle order.
DualCycle to_dual_cycle(const Manifold3& m, const ChainZ2& b);

/// Mod-2 linking number of two disjoint circles in a homotopy 3-disc:
/// the parity of crossings between a spanning chain of a and the dual
/// carrier of b.
int linking_number(const Manifold3& m, const ChainZ2& a, const ChainZ2& b);

/// Recompute the linking parity with `trials` different spanning chains
/// (the witness perturbed by random 3-chain boundaries).
std::vector<int> verify_independence(const Manifold3& m, const ChainZ2& a, const ChainZ2& b,
                                     int trials, std::uint64_t seed = 0x5eed);

/// A disc subcomplex whose boundary circle lies in the manifold boundary
/// and whose interior is interior to the manifold.
struct SplittingDisc {
    SimplexSet triangles;
    ChainZ2 boundary;  // the circle bounding the disc
};

struct SplitResult {
    bool ok = false;      // exactly two pieces found
    int components = 0;   // how many pieces the complement fell into
    std::string report;   // diagnostic when ok is false
    std::optional<Manifold3> u, v;
};

/// Cut m along d.  A splitting disc must separate a homotopy disc into two
/// pieces meeting exactly in d; when it does not, the result reports the
/// counterexample instead of throwing.
SplitResult split_along_disc(const Manifold3& m, const SplittingDisc& d);

struct PushedDisc {
    Manifold3 manifold;  // m with a boundary collar attached
    SplittingDisc disc;
};

/// Realize a circle in the boundary sphere as the boundary of a splitting
/// disc: insert a collar over the boundary, keep the smaller complementary
/// component at depth one, and close it with the annulus over c.
PushedDisc splitting_disc_for_circle(const Manifold3& m, const ChainZ2& c);

}  // namespace topo
