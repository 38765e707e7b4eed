#pragma once

#include "topo/complex.hpp"

namespace topo {

/// A polygon x [0,1] product cell: aligned cyclic vertex lists at the
/// bottom and top level.
struct PrismCell {
    std::vector<int> bottom, top;
    int stratum = -1;       // product tag: owning stratum, if any
    Simplex base{0};        // product tag: base cell (defaults to a dummy vertex)

    void check() const;
};

/// Fan triangulation of a cyclic polygon from its lowest vertex id.
SimplexSet triangulate_polygon(const std::vector<int>& cyc);

/// Split a cyclic quadrilateral by the diagonal through its lowest vertex id.
SimplexSet triangulate_quad(int a, int b, int c, int d);

/// Boundary triangles of a prism cell (bottom + top fans, side quads).
SimplexSet prism_boundary_triangles(const PrismCell& p);

/// Tetrahedra of a prism cell: cone over its boundary triangulation from the
/// cell's lowest vertex id.  The same global rule on every cell makes shared
/// faces triangulate identically from both sides.
std::vector<Simplex> prism_tets(const PrismCell& p);

struct PrismComplex {
    std::vector<PrismCell> cells;

    /// Tetrahedralize every cell into one simplicial complex.
    SimplicialComplex to_simplicial() const;
};

}  // namespace topo
