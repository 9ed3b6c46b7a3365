#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Error raised while reading a graph description; carries the 1-based
/// line number of the offending line (0 when no line applies).
class graph_parse_error : public std::runtime_error {
public:
    graph_parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A finite simple graph.  Vertices are identified by their index into
/// `names`; the declaration order of the vertices is the canonical total
/// order used for every downstream tie-break (simplex orientations, word
/// normal forms, witness selection).
class SimplicialGraph {
public:
    SimplicialGraph() = default;

    /// Build from vertex names and index pairs.  Throws on self-loops,
    /// duplicate names, or out-of-range endpoints.  Duplicate edges are
    /// collapsed (edges form a set).
    SimplicialGraph(std::vector<std::string> names,
                    const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const;

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    /// Index of a named vertex, or nullopt.
    std::optional<int> find_vertex(std::string_view name) const;

    bool adjacent(int u, int v) const { return adj_.at(u).at(v) != 0; }

    /// Neighbor indices of v in increasing canonical order.
    std::vector<int> neighbors(int v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// True when every pair of the given vertices is adjacent.
    bool is_clique(const std::vector<int>& verts) const;

    /// Induced subgraph on the given vertex set (indices into this graph,
    /// any order, deduplicated); vertex names are preserved and the induced
    /// canonical order is inherited from this graph.
    SimplicialGraph induced(std::vector<int> verts) const;

    bool operator==(const SimplicialGraph& other) const {
        return names_ == other.names_ && adj_ == other.adj_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<char>> adj_;
};

/// Parse the line-oriented graph text format ('#' comments, "vertex <name>",
/// "edge <u> <v>"), or — when the text is a single non-comment line matching
/// a builtin generator spec — that generator.  Errors carry line numbers.
SimplicialGraph parse_graph(const std::string& text);

/// Expand a builtin generator spec: "complete:n", "path:n", "cycle:n",
/// "disjoint-edges:n", "disjoint:<spec>+<spec>", "join:<spec>,<spec>".
/// Generated vertices are named v0, v1, ... in construction order.
SimplicialGraph builtin_graph(const std::string& spec);

/// True when the string looks like a builtin generator spec.
bool is_builtin_spec(std::string_view s);

/// Serialize back to the text format; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const SimplicialGraph& g);

/// Connected components as vertex-index lists, each sorted, ordered by
/// their least vertex.  The empty graph yields an empty partition.
std::vector<std::vector<int>> components(const SimplicialGraph& g);

enum class EndsClass { zero, one, two, infinite };

std::string_view to_string(EndsClass e);

/// Number-of-ends classification of the right-angled Artin group of g:
/// empty graph -> zero (trivial group), single vertex -> two (Z),
/// disconnected -> infinite (free product), otherwise one.
EndsClass ends(const SimplicialGraph& g);

/// All cliques grouped by size: result[k] lists the k-cliques as strictly
/// increasing index vectors in lexicographic order, for k = 0..omega(g).
/// result[0] holds the single empty clique.
std::vector<std::vector<std::vector<int>>> cliques_by_size(const SimplicialGraph& g);

/// Clique counts b_1..b_omega (b_i = number of i-cliques); empty for the
/// empty graph.  b_0 = 1 by convention and is not part of the list.
std::vector<long long> clique_counts(const SimplicialGraph& g);

struct CohomologicalDimension {
    int dimension = 0;          // clique number omega(Gamma)
    bool at_most_three = true;  // no 4-clique
};

CohomologicalDimension cohomological_dimension(const SimplicialGraph& g);

/// Free-product skeleton of a disconnected graph: m singleton components,
/// n components containing an edge, and a witness subgraph made of the
/// singletons plus the least edge of each non-singleton component.
struct FreeProductSkeleton {
    bool connected = false;  // nothing to extract (<= 1 component)
    int n = 0;               // components containing an edge
    int m = 0;               // singleton components
    std::vector<int> singleton_vertices;            // canonical order
    std::vector<std::pair<int, int>> witness_edges; // least edge per component
    SimplicialGraph witness;                        // induced on the above
};

FreeProductSkeleton free_product_skeleton(const SimplicialGraph& g);

}  // namespace raag

#endif
