#ifndef RAAG_FLAG_COMPLEX_HPP
#define RAAG_FLAG_COMPLEX_HPP

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A simplex of the flag complex: strictly increasing vertex indices of the
/// source graph.  The empty list is the empty simplex with dim -1.
struct Simplex {
    std::vector<int> verts;

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }

    auto operator<=>(const Simplex&) const = default;
};

/// Render as {a,b,c} using the graph's vertex names; the empty simplex
/// renders as {}.
std::string to_string(const Simplex& s, const SimplicialGraph& g);

/// The flag complex of a graph: simplices in dimension i-1 are exactly the
/// i-cliques, stored per size (level k = simplices with k vertices, so
/// level 0 holds the empty simplex).  Closed under faces by construction.
class FlagComplex {
public:
    FlagComplex() { levels_.push_back({Simplex{}}); }

    explicit FlagComplex(SimplicialGraph g);

    const SimplicialGraph& graph() const { return graph_; }

    /// Top dimension; -1 when only the empty simplex is present.
    int dim() const { return static_cast<int>(levels_.size()) - 2; }

    /// Number of levels = dim() + 2 (sizes 0..dim+1).
    int level_count() const { return static_cast<int>(levels_.size()); }

    /// Simplices with k vertices (dimension k-1), in lexicographic order.
    const std::vector<Simplex>& level(int k) const { return levels_.at(k); }

    /// Simplices of dimension d; empty list outside [-1, dim()].
    const std::vector<Simplex>& simplices_of_dim(int d) const;

    bool contains(const Simplex& s) const;

    /// Total number of simplices of dimension >= 0.
    long long size_nonempty() const;

private:
    SimplicialGraph graph_;
    std::vector<std::vector<Simplex>> levels_;
};

FlagComplex flag_complex(const SimplicialGraph& g);

/// The link of a simplex: the flag complex induced on the common neighbors
/// of its vertices.  link(k, {}) is k itself.  Throws std::invalid_argument
/// when s is not a simplex of k.  Vertex names are preserved, so simplices
/// of the link live on the induced subgraph's index set.
FlagComplex link(const FlagComplex& k, const Simplex& s);

}  // namespace raag

#endif
