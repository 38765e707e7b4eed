#pragma once

#include <vector>

#include "topo/complex.hpp"

namespace topo {

/// Raised when no representative with the requested support exists.
struct no_representative_error : precondition_error {
    using precondition_error::precondition_error;
};

struct SurfaceClass {
    bool orientable = false;
    int genus = 0;
    int boundary_count = 0;
    int euler = 0;

    bool operator==(const SurfaceClass&) const = default;
};

/// A 2-dimensional complex validated to be a surface: every edge lies in one
/// or two triangles and every vertex link is a single path or cycle.
class SurfaceComplex {
public:
    SurfaceComplex() = default;
    explicit SurfaceComplex(SimplicialComplex c);

    const SimplicialComplex& complex() const { return c_; }
    const SimplexSet& triangles() const { return c_.simplices(2); }
    const SimplexSet& edges() const { return c_.simplices(1); }

private:
    SimplicialComplex c_;
};

/// Throws structural_error when c is not a valid surface complex.
void validate_surface(const SimplicialComplex& c);

/// Neighbours of v in cyclic (closed link) or path (boundary link) order.
/// The second member is true when the link is a cycle.
std::pair<std::vector<int>, bool> vertex_link_order(const SimplicialComplex& c, int v);

/// Whether the support of a 1-chain is a single simple closed edge-cycle.
bool is_circle(const ChainZ2& c);

/// Orientability, genus and boundary count of a connected surface.
/// Throws precondition_error when s is disconnected.
SurfaceClass classify(const SurfaceComplex& s);

/// Classification of every connected component.
std::vector<SurfaceClass> classify_components(const SurfaceComplex& s);

/// The boundary edges of s partitioned into simple cycles.
std::vector<ChainZ2> boundary_circles(const SurfaceComplex& s);

/// Cone a fresh vertex over the boundary circle k.
SurfaceComplex attach_disc(const SurfaceComplex& s, const ChainZ2& k);

/// True iff every component embeds in the plane: orientable, genus zero and
/// non-empty boundary.  (A closed sphere does not count as planar here.)
bool is_planar(const SurfaceComplex& s);

/// Simplices of the subsurface t that do not meet the closure of s minus t.
SimplexSet subsurface_interior(const SurfaceComplex& s, const SimplexSet& t);

/// Decompose a 1-cycle into simple circuits, resolving high-degree vertices
/// by pairing consecutive cycle edges in the vertex rotation.
std::vector<ChainZ2> extract_circuits(const SurfaceComplex& s, const ChainZ2& z);

/// A simple circle homologous to c whose support avoids the edges of
/// `forbidden`.  Throws no_representative_error when the class of c has no
/// representative outside `forbidden`.
ChainZ2 push_off(const SurfaceComplex& s, const ChainZ2& c, const SimplexSet& forbidden);

enum class CircleMethod {
    induction,  // the double induction on (genus, boundary count)
    oracle,     // spanning-forest fundamental circuits + homology test
};

/// A simple circle in s avoiding the interior of the planar subsurface t
/// whose class in H_1 (of s with boundaries capped) is nonzero.
ChainZ2 find_nontrivial_circle(const SurfaceComplex& s, const SimplexSet& t,
                               CircleMethod method = CircleMethod::oracle);

}  // namespace topo
