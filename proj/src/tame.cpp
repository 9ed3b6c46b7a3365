#include "raag/tame.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "raag/flag_complex.hpp"
#include "raag/homology.hpp"

namespace raag {

std::string_view to_string(CondState s) {
    switch (s) {
        case CondState::holds: return "holds";
        case CondState::automatic: return "automatic";
        case CondState::unknown: return "unknown";
    }
    return "?";
}

TorsionCriterion torsion_criterion(const SimplicialGraph& g, int degree) {
    if (degree < 1) throw std::invalid_argument("torsion_criterion: degree must be >= 1");
    FlagComplex k = flag_complex(g);
    return reduced_cohomology(k, degree).is_zero() ? TorsionCriterion::holds
                                                   : TorsionCriterion::unknown;
}

TameVerdict tame_sufficient(const SimplicialGraph& g) {
    TameVerdict v;
    FlagComplex k = flag_complex(g);

    bool h1_vanishes = reduced_cohomology(k, 1).is_zero();
    if (h1_vanishes) {
        v.dual_h2 = {CondState::holds, "reduced H^1 of the flag complex vanishes"};
    } else {
        v.dual_h2 = {CondState::unknown, "reduced H^1 of the flag complex is nonzero"};
    }

    if (cohomological_dimension(g).at_most_three) {
        v.dual_h3 = {CondState::automatic, "cohomological dimension at most 3"};
        v.ext1_h3 = {CondState::automatic, "cohomological dimension at most 3"};
    } else {
        bool h2_vanishes = reduced_cohomology(k, 2).is_zero();
        bool links_ok = true;
        for (const Simplex& vx : k.level(1))
            if (!reduced_cohomology(link(k, vx), 1).is_zero()) {
                links_ok = false;
                break;
            }
        if (h1_vanishes && h2_vanishes && links_ok) {
            const char* why = "flag complex has vanishing reduced H^1 and H^2 "
                              "and every vertex link has vanishing H^1";
            v.dual_h3 = {CondState::holds, why};
            v.ext1_h3 = {CondState::holds, why};
        } else {
            v.dual_h3 = {CondState::unknown, "no sufficient criterion applies"};
            v.ext1_h3 = {CondState::unknown, "no sufficient criterion applies"};
        }
    }

    v.overall_tame = v.dual_h2.state != CondState::unknown &&
                     v.dual_h3.state != CondState::unknown &&
                     v.ext1_h3.state != CondState::unknown;
    return v;
}

// ---------------------------------------------------------------------------
// Build scripts
// ---------------------------------------------------------------------------

std::string to_text(const BuildScript& s) {
    std::ostringstream out;
    for (const BuildMove& m : s.moves) {
        switch (m.kind) {
            case BuildMove::Kind::edge_at_vertex: out << "edge-at-vertex " << m.u; break;
            case BuildMove::Kind::tri_at_vertex: out << "tri-at-vertex " << m.u; break;
            case BuildMove::Kind::tri_at_edge: out << "tri-at-edge " << m.u << ' ' << m.v; break;
        }
        out << '\n';
    }
    return out.str();
}

BuildScript parse_build_script(const std::string& text) {
    BuildScript s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        BuildMove m;
        if (word == "edge-at-vertex") {
            m.kind = BuildMove::Kind::edge_at_vertex;
            if (!(ls >> m.u)) throw graph_parse_error(lineno, "expected 'edge-at-vertex <v>'");
        } else if (word == "tri-at-vertex") {
            m.kind = BuildMove::Kind::tri_at_vertex;
            if (!(ls >> m.u)) throw graph_parse_error(lineno, "expected 'tri-at-vertex <v>'");
        } else if (word == "tri-at-edge") {
            m.kind = BuildMove::Kind::tri_at_edge;
            if (!(ls >> m.u >> m.v))
                throw graph_parse_error(lineno, "expected 'tri-at-edge <u> <v>'");
        } else {
            throw graph_parse_error(lineno, "unrecognized move '" + word + "'");
        }
        s.moves.push_back(std::move(m));
    }
    return s;
}

SimplicialGraph generate_tame(const BuildScript& script) {
    std::vector<std::string> names = {"v0"};
    std::vector<std::pair<int, int>> edges;
    auto find = [&](const std::string& n) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw graph_parse_error(0, "move references missing vertex '" + n + "'");
    };
    auto has_edge = [&](int a, int b) {
        for (auto [x, y] : edges)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    int fresh = 1;
    auto new_vertex = [&] {
        names.push_back("v" + std::to_string(fresh++));
        return static_cast<int>(names.size()) - 1;
    };
    for (const BuildMove& m : script.moves) {
        switch (m.kind) {
            case BuildMove::Kind::edge_at_vertex: {
                int a = find(m.u);
                int b = new_vertex();
                edges.emplace_back(a, b);
                break;
            }
            case BuildMove::Kind::tri_at_vertex: {
                int a = find(m.u);
                int b = new_vertex();
                int c = new_vertex();
                edges.emplace_back(a, b);
                edges.emplace_back(a, c);
                edges.emplace_back(b, c);
                break;
            }
            case BuildMove::Kind::tri_at_edge: {
                int a = find(m.u);
                int b = find(m.v);
                if (!has_edge(a, b))
                    throw graph_parse_error(0, "move references missing edge " + m.u + " " + m.v);
                int c = new_vertex();
                edges.emplace_back(a, c);
                edges.emplace_back(b, c);
                break;
            }
        }
    }
    return SimplicialGraph(std::move(names), edges);
}

namespace {

// Bounded uniform draw by rejection; std::uniform_int_distribution is
// implementation-defined, this is not.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

BuildScript random_build_script(int steps, std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("random_build_script: steps must be >= 0");
    std::mt19937_64 rng(seed);
    BuildScript script;
    std::vector<std::string> names = {"v0"};
    std::vector<std::pair<int, int>> edges;
    int fresh = 1;
    for (int step = 0; step < steps; ++step) {
        // Legal options in canonical order: edge-at-vertex for every vertex,
        // tri-at-vertex for every vertex, tri-at-edge for every edge.
        std::vector<BuildMove> options;
        for (const auto& n : names)
            options.push_back({BuildMove::Kind::edge_at_vertex, n, ""});
        for (const auto& n : names)
            options.push_back({BuildMove::Kind::tri_at_vertex, n, ""});
        for (auto [a, b] : edges)
            options.push_back({BuildMove::Kind::tri_at_edge, names[a], names[b]});
        BuildMove m = options[draw_below(rng, options.size())];
        script.moves.push_back(m);
        // Replay the move to keep the site lists current.
        switch (m.kind) {
            case BuildMove::Kind::edge_at_vertex: {
                int a = static_cast<int>(std::find(names.begin(), names.end(), m.u) -
                                         names.begin());
                names.push_back("v" + std::to_string(fresh++));
                edges.emplace_back(a, static_cast<int>(names.size()) - 1);
                break;
            }
            case BuildMove::Kind::tri_at_vertex: {
                int a = static_cast<int>(std::find(names.begin(), names.end(), m.u) -
                                         names.begin());
                names.push_back("v" + std::to_string(fresh++));
                names.push_back("v" + std::to_string(fresh++));
                int b = static_cast<int>(names.size()) - 2;
                int c = static_cast<int>(names.size()) - 1;
                edges.emplace_back(a, b);
                edges.emplace_back(a, c);
                edges.emplace_back(b, c);
                break;
            }
            case BuildMove::Kind::tri_at_edge: {
                int a = static_cast<int>(std::find(names.begin(), names.end(), m.u) -
                                         names.begin());
                int b = static_cast<int>(std::find(names.begin(), names.end(), m.v) -
                                         names.begin());
                names.push_back("v" + std::to_string(fresh++));
                int c = static_cast<int>(names.size()) - 1;
                edges.emplace_back(a, c);
                edges.emplace_back(b, c);
                break;
            }
        }
    }
    return script;
}

// ---------------------------------------------------------------------------
// Separator criterion
// ---------------------------------------------------------------------------

namespace {

bool half_is_admissible(const SimplicialGraph& half) {
    if (components(half).size() != 1) return false;
    FlagComplex k = flag_complex(half);
    return reduced_cohomology(k, 1).is_zero() && reduced_cohomology(k, 2).is_zero();
}

}  // namespace

std::optional<SeparatorWitness> separator_criterion(const SimplicialGraph& g, int max_separator) {
    if (components(g).size() != 1)
        throw std::invalid_argument("separator_criterion: graph must be connected");
    const int n = g.vertex_count();
    max_separator = std::min(max_separator, n);

    // Independent subsets of each size in lexicographic order.
    std::vector<int> subset;
    std::optional<SeparatorWitness> found;
    auto try_subset = [&](const std::vector<int>& s) -> bool {
        if (!std::all_of(s.begin(), s.end(), [&](int u) {
                return std::all_of(s.begin(), s.end(),
                                   [&](int v) { return u == v || !g.adjacent(u, v); });
            }))
            return false;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
        SimplicialGraph removed = g.induced(rest);
        auto comps = components(removed);
        if (comps.size() < 2) return false;
        // Try every bipartition of the components into two nonempty groups,
        // in canonical (bitmask) order; component 0 stays on the A side so
        // each split is enumerated once.
        const size_t c = comps.size();
        for (std::uint64_t mask = 1; mask < (1ULL << (c - 1)); ++mask) {
            std::vector<int> a, b;
            for (size_t j = 0; j < c; ++j) {
                bool a_side = j == 0 || !(mask >> (j - 1) & 1);
                for (int idx : comps[j]) (a_side ? a : b).push_back(rest[idx]);
            }
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<int> av = a, bv = b;
            av.insert(av.end(), s.begin(), s.end());
            bv.insert(bv.end(), s.begin(), s.end());
            if (half_is_admissible(g.induced(av)) && half_is_admissible(g.induced(bv))) {
                found = SeparatorWitness{s, a, b};
                return true;
            }
        }
        return false;
    };

    for (int size = 1; size <= max_separator && !found; ++size) {
        std::vector<int> idx(size);
        // Enumerate size-subsets lexicographically.
        for (int i = 0; i < size; ++i) idx[i] = i;
        if (size > n) break;
        while (true) {
            if (try_subset(idx)) return found;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return found;
}

CdAutomaticReport cd3_automatic(const SimplicialGraph& g) {
    CdAutomaticReport r;
    auto cd = cohomological_dimension(g);
    r.dimension = cd.dimension;
    r.trivial_group = g.vertex_count() == 0;
    r.degree3_conditions_automatic = cd.at_most_three;
    if (r.trivial_group) {
        r.top_degree_statement = "trivial group: all group cohomology with ring "
                                 "coefficients vanishes above degree 0";
    } else {
        r.top_degree_statement =
            "in top degree " + std::to_string(r.dimension) +
            " the dual and the first Ext of the group cohomology vanish";
    }
    return r;
}

bool h1_dual_nonzero(const SimplicialGraph& g) {
    return components(g).size() >= 2 && g.edge_count() >= 1;
}

}  // namespace raag
