// Independent oracles used by the test suites: a fraction-free rational
// rank (no Smith normal form involved), brute-force homology ranks, a
// breadth-first word-problem oracle, and seeded random generators.
#ifndef RAAG_TESTS_ORACLES_HPP
#define RAAG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "raag/flag_complex.hpp"
#include "raag/graph.hpp"
#include "raag/group_ring.hpp"
#include "raag/homology.hpp"
#include "raag/integer_matrix.hpp"

namespace oracle {

using raag::Int;
using raag::IntMatrix;
using raag::Letter;
using raag::SimplicialGraph;

/// Rank over the rationals by fraction-free (Bareiss-style) elimination.
inline int rational_rank(IntMatrix m) {
    int rank = 0;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Int a = m.at(r, c), b = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) * a - m.at(r, j) * b;
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Free rank of reduced homology in the given degree, from kernel/image
/// dimensions over the rationals.
inline long long reduced_betti(const raag::FlagComplex& k, int degree) {
    auto cc = raag::boundary_matrices(k, true);
    int s = degree + 1;
    if (s < 0 || s >= cc.level_count()) return 0;
    long long n = static_cast<long long>(cc.bases[s].size());
    long long rank_out = (s >= 1) ? rational_rank(cc.boundary[s]) : 0;
    long long rank_in = (s + 1 < cc.level_count()) ? rational_rank(cc.boundary[s + 1]) : 0;
    return n - rank_out - rank_in;
}

/// Deterministic bounded draw (the library's own sampling is not reused).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

/// Random graph with each edge kept with probability num/den.
inline SimplicialGraph random_graph(int n, int num, int den, std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(draw(rng, den)) < num) edges.emplace_back(u, v);
    return SimplicialGraph(names, edges);
}

/// Drop one edge from every 4-clique until none remain.
inline SimplicialGraph without_4_cliques(SimplicialGraph g, std::mt19937_64& rng) {
    while (true) {
        auto cliques = raag::cliques_by_size(g);
        if (cliques.size() < 5) return g;
        const auto& quad = cliques[4][0];
        int pick = static_cast<int>(draw(rng, 6));
        static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        int a = quad[pairs[pick][0]], b = quad[pairs[pick][1]];
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            if (!(u == a && v == b)) edges.emplace_back(u, v);
        g = SimplicialGraph(g.names(), edges);
    }
}

/// All graphs on exactly n vertices up to isomorphism, by canonical
/// adjacency bitmask over all vertex permutations (n <= 5 intended).
inline std::vector<SimplicialGraph> all_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int bits = static_cast<int>(slots.size());
    std::vector<int> perm(n);
    std::set<std::uint64_t> seen;
    std::vector<SimplicialGraph> out;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        // Canonical form: the least mask over all relabelings.
        std::uint64_t best = mask;
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            std::uint64_t m2 = 0;
            for (int b = 0; b < bits; ++b) {
                if (!(mask >> b & 1)) continue;
                int u = perm[slots[b].first], v = perm[slots[b].second];
                if (u > v) std::swap(u, v);
                for (int b2 = 0; b2 < bits; ++b2)
                    if (slots[b2] == std::make_pair(u, v)) {
                        m2 |= 1ULL << b2;
                        break;
                    }
            }
            best = std::min(best, m2);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best != mask || !seen.insert(best).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) edges.push_back(slots[b]);
        out.emplace_back(names, edges);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word problem oracle: breadth-first closure under adjacent-commutation
// swaps and adjacent same-vertex merges.  The canonical representative of a
// closure is a complete equality invariant that does not go through the
// library's normal form.
// ---------------------------------------------------------------------------

using Blocks = std::vector<Letter>;

inline Blocks coalesce(const Blocks& in) {
    Blocks st;
    for (const Letter& l : in) {
        if (l.exponent == 0) continue;
        if (!st.empty() && st.back().vertex == l.vertex) {
            st.back().exponent += l.exponent;
            if (st.back().exponent == 0) st.pop_back();
        } else {
            st.push_back(l);
        }
    }
    return st;
}

inline bool blocks_less(const Blocks& a, const Blocks& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].vertex != b[i].vertex) return a[i].vertex < b[i].vertex;
        if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
    }
    return false;
}

struct BlocksLess {
    bool operator()(const Blocks& a, const Blocks& b) const { return blocks_less(a, b); }
};

/// All words reachable from w by swapping adjacent commuting blocks and
/// merging adjacent same-vertex blocks.
inline std::set<Blocks, BlocksLess> closure(const Blocks& start, const SimplicialGraph& g) {
    std::set<Blocks, BlocksLess> seen;
    std::queue<Blocks> todo;
    Blocks s = coalesce(start);
    seen.insert(s);
    todo.push(s);
    while (!todo.empty()) {
        Blocks w = todo.front();
        todo.pop();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].vertex != w[i + 1].vertex && g.adjacent(w[i].vertex, w[i + 1].vertex)) {
                Blocks nxt = w;
                std::swap(nxt[i], nxt[i + 1]);
                nxt = coalesce(nxt);
                if (seen.insert(nxt).second) todo.push(nxt);
            }
            if (w[i].vertex == w[i + 1].vertex) {
                Blocks nxt = w;
                nxt[i].exponent += nxt[i + 1].exponent;
                nxt.erase(nxt.begin() + i + 1);
                nxt = coalesce(nxt);
                if (seen.insert(nxt).second) todo.push(nxt);
            }
        }
    }
    return seen;
}

/// Least minimal-length word of the closure, under an arbitrary fixed order
/// independent of the library's normal form.
inline Blocks bfs_canonical(const Blocks& w, const SimplicialGraph& g) {
    auto cl = closure(w, g);
    const Blocks* best = nullptr;
    auto letters = [](const Blocks& b) {
        long long n = 0;
        for (const Letter& l : b) n += l.exponent < 0 ? -l.exponent : l.exponent;
        return n;
    };
    for (const Blocks& cand : cl) {
        if (!best) {
            best = &cand;
            continue;
        }
        long long lc = letters(cand), lb = letters(*best);
        if (lc < lb || (lc == lb && blocks_less(cand, *best))) best = &cand;
    }
    return *best;
}

}  // namespace oracle

#endif
