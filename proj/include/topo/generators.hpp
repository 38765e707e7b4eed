#pragma once

#include "topo/complex.hpp"
#include "topo/prism.hpp"

namespace topo {
namespace gen {

/// Boundary of the n-simplex on vertices 0..n (n = 2, 3 or 4).
SimplicialComplex boundary_simplex(int n);

/// One solid tetrahedron 0..3.
SimplicialComplex solid_tetrahedron();

/// Two tetrahedra sharing a triangle: a 3-ball.
SimplicialComplex two_tet_ball();

/// The 7-vertex (Csaszar) torus: 7 vertices, 21 edges, 14 triangles.
SimplicialComplex torus7();

/// Octahedron 2-sphere: apexes 0 (top) and 5 (bottom), equator 1,2,3,4.
/// Labels: "equator" (the 4-cycle), "upper" / "lower" hemispheres.
SimplicialComplex octahedron_sphere();

/// Cone over the octahedron sphere from apex 6: an octahedral 3-ball.
/// Labels: "equator" (circle in the boundary), "equator_disc" (cone of the
/// equator through the apex), "boundary" (the octahedron sphere).
SimplicialComplex octa_ball();

/// The join of two triangle circles: a 6-vertex S^3 with Hopf cores
/// labeled "coreA" ({0,1,2} circle) and "coreB" ({3,4,5} circle).
SimplicialComplex join_triangles_s3();

/// join_triangles_s3 with one tetrahedron removed: a homotopy 3-disc.
SimplicialComplex join_s3_minus_tet();

/// Closed orientable genus-g surface, g >= 1, via iterated connected sum
/// of 7-vertex tori.
SimplicialComplex genus_surface(int g);

/// Remove `holes` pairwise vertex-disjoint triangles from a closed surface.
SimplicialComplex punctured(const SimplicialComplex& closed_surface, int holes);

/// Flat triangulated annulus: outer square 0..3, inner square 4..7.
SimplicialComplex annulus();

/// Cone from `apex` over a set of simplices (dim <= 2).
SimplexSet cone_over(const SimplexSet& base, int apex);

/// A 2x1x1 box as two cube prisms side by side.  The vertical mid-square
/// between them is returned via the "midsquare" label of to_simplicial()
/// plus labels "boundary".
PrismComplex box_two_prisms();

/// Triangulated box complex with labels "midsquare" (splitting disc),
/// "midcircle" (its boundary).
SimplicialComplex box_ball();

}  // namespace gen
}  // namespace topo
