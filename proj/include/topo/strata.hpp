#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "topo/prism.hpp"
#include "topo/surface.hpp"

namespace topo {

/// A product F x [0,1] over an orientable surface F.  The base sits at the
/// lower level; `up` maps every lower vertex to its upper copy.  Neighbouring
/// strata glue by sharing vertex ids at the interface.
class Stratum {
public:
    Stratum() = default;
    Stratum(SurfaceComplex base, std::map<int, int> up);

    const SurfaceComplex& base() const { return base_; }
    const std::map<int, int>& up_map() const { return up_; }

    int up(int v) const;
    Simplex lift(const Simplex& s) const;
    ChainZ2 lift(const ChainZ2& c) const;

    /// Face closure of the lower copy (= all simplices of the base).
    SimplexSet lower() const;
    /// Face closure of the upper copy.
    SimplexSet upper() const;

    /// One prism cell per base triangle, product-tagged with it.
    PrismComplex body(int stratum_id = -1) const;
    /// Tetrahedralized body.
    SimplicialComplex cells() const;

private:
    SurfaceComplex base_;
    std::map<int, int> up_;
};

struct StratificationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// An ordered list of product strata.  Consecutive strata may meet, and only
/// in upper-of-one equals-lower-of-next interface cells; strata two or more
/// apart must be disjoint.
struct Stratification {
    std::vector<Stratum> strata;

    std::size_t size() const { return strata.size(); }
    /// Union of all stratum bodies as one simplicial complex.
    SimplicialComplex total() const;
};

/// Report-based check of the stratification invariants: product structure and
/// orientability per stratum, exact interface intersections, disjointness of
/// non-adjacent strata.
StratificationReport validate(const Stratification& st);

/// True iff every base surface is planar.  Requires a valid stratification.
bool is_planar(const Stratification& st);

struct RefineSpec {
    std::set<int> level_splits;       // strata to split at their mid level
    std::set<int> base_subdivisions;  // strata whose base gets subdivided
};

struct Refined {
    Stratification st;
    std::vector<int> parent;  // new stratum index -> originating old index
};

/// Split selected strata at an interior level and/or barycentrically
/// subdivide selected bases.  Base subdivisions propagate to every stratum
/// sharing vertices with a selected one, keeping interfaces compatible.
Refined refine(const Stratification& st, const RefineSpec& spec);

/// True iff upper(S_i) is contained in lower(S_{i+1}) for all i < upTo
/// (1-based stratum indices; upTo <= 1 is vacuous).
bool pyramid_check(const Stratification& st, int upTo);

struct Tower {
    int stratum = -1;
    SimplexSet base;          // face closure of the requested subcomplex
    SimplicialComplex body;   // base x [0,1] inside the stratum
};

/// The product of a subcomplex x of lower(S_i) with [0,1] inside stratum i
/// (0-based index).  Throws precondition_error when x is not carried by the
/// lower copy.
Tower tower(const Stratification& st, int i, const SimplexSet& x);

/// Copy of a complex with every vertex renamed through `m` (vertices absent
/// from `m` keep their id).  Labels are carried.
SimplicialComplex relabel(const SimplicialComplex& c, const std::map<int, int>& m);

}  // namespace topo
