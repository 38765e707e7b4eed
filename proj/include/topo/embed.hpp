#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "topo/manifold.hpp"
#include "topo/strata.hpp"

namespace topo {

using Rational = boost::multiprecision::cpp_rational;
using RatPoint = std::array<Rational, 3>;

struct EmbeddingResult {
    bool ok = false;
    std::string error;               // offending component when layout fails
    std::map<int, RatPoint> coords;  // exact rational vertex coordinates
};

/// Layer-stacking embedding of a planar stratification: stratum i occupies
/// the slab i <= z <= i+1 as vertical prisms.  Vertices identified across
/// interfaces share one planar position; the union of all bases modulo these
/// identifications is laid out per component with its longest boundary
/// circle on a convex polygon, the other holes coned to virtual hubs, and
/// every interior vertex at the convex average of its neighbours.  All
/// coordinates are exact rationals.
EmbeddingResult embed_planar(const Manifold3& h, const Stratification& st);

struct EmbeddingReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact-arithmetic verification: every vertex is placed, no two coincide,
/// every tetrahedron is non-degenerate, and any two tetrahedra intersect in
/// exactly the image of their common face.
EmbeddingReport verify_embedding(const EmbeddingResult& e, const Manifold3& h);

}  // namespace topo
