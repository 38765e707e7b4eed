#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topo/simplex.hpp"

namespace topo {

/// Raised when a value violates a documented precondition of an operation.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a complex or cell structure is internally malformed.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SimplexSet = std::set<Simplex>;

/// A Z2 chain identified with its support: a set of same-dimension simplices.
struct ChainZ2 {
    int dim = 0;
    SimplexSet support;

    ChainZ2() = default;
    ChainZ2(int d, SimplexSet s) : dim(d), support(std::move(s)) {}

    bool empty() const { return support.empty(); }
    std::size_t size() const { return support.size(); }

    /// Chain addition over Z2 is symmetric difference of supports.
    ChainZ2 operator+(const ChainZ2& o) const;
    void toggle(const Simplex& s);

    bool operator==(const ChainZ2&) const = default;
};

/// A finite simplicial complex of dimension <= 3, closed under taking faces.
/// Simplices are identified by their sorted vertex tuples; named face-closed
/// subcomplexes may be attached as labels.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Insert a simplex together with all of its faces.
    void add(const Simplex& s);
    void add_all(const SimplexSet& ss) {
        for (const auto& s : ss) add(s);
    }

    bool contains(const Simplex& s) const {
        return simplices_[s.dim()].count(s) != 0;
    }

    int dim() const;
    const SimplexSet& simplices(int d) const { return simplices_[d]; }
    std::size_t count(int d) const { return simplices_[d].size(); }
    std::size_t total_simplices() const;
    std::vector<int> vertex_ids() const;
    int max_vertex_id() const;

    void set_label(const std::string& name, SimplexSet simplices);
    bool has_label(const std::string& name) const { return labels_.count(name) != 0; }
    const SimplexSet& label(const std::string& name) const;
    const std::map<std::string, SimplexSet>& labels() const { return labels_; }
    void drop_label(const std::string& name) { labels_.erase(name); }

    /// Mod-2 boundary of a chain.  Throws if the chain is not carried by
    /// this complex.
    ChainZ2 boundary(const ChainZ2& chain) const;

    int euler_characteristic() const;

    /// Simplices of `sub` together with all their faces.
    static SimplexSet face_closure(const SimplexSet& sub);

    /// All simplices having at least one vertex in `verts`, plus faces
    /// (the closed star of the vertex set).
    SimplexSet closed_star_of_vertices(const std::set<int>& verts) const;

    /// Simplices all of whose vertices lie in `verts`.
    SimplexSet induced_on_vertices(const std::set<int>& verts) const;

    /// Top-dimensional simplices containing the given simplex.
    std::vector<Simplex> cofaces(const Simplex& s, int coface_dim) const;

    void validate() const;  // face closure + label closure, throws structural_error

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::array<SimplexSet, 4> simplices_;
    std::map<std::string, SimplexSet> labels_;
};

/// Connected components of the top-dimensional cells of `cells` under
/// shared-facet adjacency restricted by `blocked` facets.
std::vector<SimplexSet> facet_components(const SimplexSet& cells,
                                         const SimplexSet& blocked = {});

/// Vertices appearing in a simplex set.
std::set<int> vertices_of(const SimplexSet& ss);

}  // namespace topo
