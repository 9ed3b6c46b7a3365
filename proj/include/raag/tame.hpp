#ifndef RAAG_TAME_HPP
#define RAAG_TAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Outcome of one tameness condition.  The implemented criteria are
/// sufficient, never necessary, so there is no failing state: a condition
/// either holds (with the cohomological reason), is automatic from the
/// cohomological dimension bound, or stays unknown.
enum class CondState { holds, automatic, unknown };

std::string_view to_string(CondState s);

struct TameCondition {
    CondState state = CondState::unknown;
    std::string reason;
};

/// Verdict on the three dual/Ext vanishing conditions for the group
/// cohomology in degrees 2 and 3.  overall_tame is set exactly when none
/// of the three conditions is unknown.
struct TameVerdict {
    TameCondition dual_h2;      // Hom(H^2, ring) = 0
    TameCondition dual_h3;      // Hom(H^3, ring) = 0
    TameCondition ext1_h3;      // Ext^1(H^3, ring) = 0
    bool overall_tame = false;
};

/// Vanishing of the reduced flag-complex cohomology in degree i forces the
/// degree-(i+1) group cohomology to be a torsion module.  Returns holds
/// exactly when that vanishing is verified; otherwise unknown.
enum class TorsionCriterion { holds, unknown };

TorsionCriterion torsion_criterion(const SimplicialGraph& g, int degree);

/// Sufficient tameness check: condition one from the degree-1 vanishing of
/// the flag complex, conditions two and three either from the degree-2
/// vanishing plus vanishing degree-1 link cohomology at every vertex, or
/// automatically when the graph has no 4-clique.
TameVerdict tame_sufficient(const SimplicialGraph& g);

/// One construction move for the inductive family of graphs with tame
/// cohomology: glue a fresh edge or triangle along a vertex, or a fresh
/// triangle along an existing edge.  Vertices are named by the builder.
struct BuildMove {
    enum class Kind { edge_at_vertex, tri_at_vertex, tri_at_edge };
    Kind kind = Kind::edge_at_vertex;
    std::string u;  // attachment vertex (or first edge endpoint)
    std::string v;  // second edge endpoint for tri_at_edge
};

struct BuildScript {
    std::vector<BuildMove> moves;
};

/// Text format: one move per line — "edge-at-vertex <v>",
/// "tri-at-vertex <v>", "tri-at-edge <u> <v>".
std::string to_text(const BuildScript& s);
BuildScript parse_build_script(const std::string& text);

/// Run a build script starting from the single vertex v0; fresh vertices
/// are named v1, v2, ... in creation order.  Throws graph_parse_error when
/// a move references a missing vertex or edge.
SimplicialGraph generate_tame(const BuildScript& script);

/// Deterministic random script: legal sites are enumerated in canonical
/// order and selected by rejection sampling from a seeded mt19937_64, so a
/// fixed seed always yields the same script on every platform.
BuildScript random_build_script(int steps, std::uint64_t seed);

/// Witness for the separator criterion: an independent separator S and the
/// two induced halves, each connected with vanishing reduced flag
/// cohomology in degrees 1 and 2.
struct SeparatorWitness {
    std::vector<int> separator;
    std::vector<int> side_a;  // vertices of the first half, without S
    std::vector<int> side_b;
};

/// Search for an independent separating set of at most max_separator
/// vertices whose two induced halves are connected and have vanishing
/// reduced flag cohomology in degrees 1 and 2 (this forces the dual of the
/// degree-2 group cohomology to vanish).  Requires g connected.  Witnesses
/// are returned in canonical-order-first fashion.
std::optional<SeparatorWitness> separator_criterion(const SimplicialGraph& g,
                                                    int max_separator = 3);

/// Conclusions available from the cohomological dimension alone: in top
/// degree n, the dual and first Ext of the group cohomology vanish; with
/// no 4-clique this covers the degree-3 tameness conditions.
struct CdAutomaticReport {
    int dimension = 0;
    bool trivial_group = false;
    bool degree3_conditions_automatic = false;  // no 4-clique
    std::string top_degree_statement;
};

CdAutomaticReport cd3_automatic(const SimplicialGraph& g);

/// True exactly when the dual of the degree-1 group cohomology is nonzero:
/// the graph is disconnected and contains at least one edge.
bool h1_dual_nonzero(const SimplicialGraph& g);

}  // namespace raag

#endif
