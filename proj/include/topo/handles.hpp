#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "topo/manifold.hpp"
#include "topo/strata.hpp"

namespace topo {

using Point = std::array<double, 3>;

/// A chain of critical points of a height function, bottom to top.
struct MorseData {
    struct Critical {
        int index = 0;     // 0..3
        double value = 0;  // height of the critical point
        double radius = 0; // chart radius around it
    };
    std::vector<Critical> points;

    /// Climbing values and separated chart intervals; throws structural_error.
    void check() const;
};

/// Sign vector of the model quadric for a critical point of index n:
/// +1 for the first 3-n coordinates, -1 for the rest.
std::array<int, 3> epsilon_signs(int n);

/// psi(x) = sum_i epsilon_i x_i^2.
double quadric(const Point& x, int n);

/// Closed-form gradient flow of the quadric: x_i(t) = x_i(0) e^{2 eps_i t}.
Point flow(const Point& x0, double t, int n);

/// A triangulated surface with vertex coordinates.
struct ChartMesh {
    SurfaceComplex surface;
    std::map<int, Point> coords;
};

/// Boundary sphere of a canonical index-1 or index-2 chart, swept around the
/// flow axis: bays ("H+", "H-") on the psi = -1 sheets, rings ("R+", "R-")
/// along flow trajectories from the bay rims, and the cloak ("Q") on the
/// psi = 1 cylinder between the ring landings.  Index 2 is the index-1 mesh
/// rotated a quarter turn about the y-axis.
ChartMesh chart_boundary_mesh(int n, int around, int along);

/// Round boundary sphere of an index-0 or index-3 chart ball: the octahedron
/// sphere refined `refinements` times and projected to the unit sphere.
ChartMesh chart_disc_mesh(int n, int refinements);

/// One level event of a handle decomposition, bottom to top.
struct HandleEvent {
    int index = -1;  // -1: trivial cobordism; otherwise critical index 0..3

    /// Positions into the sorted triangle list of the current level surface
    /// naming the attaching region (index 1: two disc triangles; index 2: an
    /// annulus).  Empty selects an attaching region automatically.
    std::vector<int> attach;
};

struct HandleSpec {
    std::vector<HandleEvent> events;
};

struct AssembledComplement {
    Manifold3 n;                                 // complement of the chart balls
    Stratification st;                           // product strata filling it
    std::map<std::string, SimplexSet> charts;    // chart sphere per handle, in boundary(n)
};

/// Build the complement of the chart balls of a handle decomposition as a
/// stack of product strata: trivial levels emit a product over the current
/// surface, an index-1 event removes two bay discs and closes the level with
/// a tube, an index-2 event removes an attaching annulus and caps the
/// resulting circles, and indices 0/3 open and close sphere levels.
AssembledComplement assemble_stratified_complement(const HandleSpec& spec);

}  // namespace topo
