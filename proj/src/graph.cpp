#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace raag {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

SimplicialGraph::SimplicialGraph(std::vector<std::string> names,
                                 const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!valid_name(n)) throw graph_parse_error(0, "invalid vertex name '" + n + "'");
        if (!seen.insert(n).second)
            throw graph_parse_error(0, "duplicate vertex name '" + n + "'");
    }
    const int n = vertex_count();
    adj_.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw graph_parse_error(0, "edge endpoint out of range");
        if (u == v)
            throw graph_parse_error(0, "self-loop at vertex '" + names_[u] + "'");
        adj_[u][v] = adj_[v][u] = 1;
    }
}

int SimplicialGraph::edge_count() const {
    int c = 0;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (adj_[u][v]) ++c;
    return c;
}

std::optional<int> SimplicialGraph::find_vertex(std::string_view name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::vector<int> SimplicialGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vertex_count(); ++u)
        if (u != v && adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> SimplicialGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

bool SimplicialGraph::is_clique(const std::vector<int>& verts) const {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!adjacent(verts[i], verts[j])) return false;
    return true;
}

SimplicialGraph SimplicialGraph::induced(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<std::string> names;
    names.reserve(verts.size());
    for (int v : verts) names.push_back(names_.at(v));
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) es.emplace_back(int(i), int(j));
    return SimplicialGraph(std::move(names), es);
}

// ---------------------------------------------------------------------------
// Builtin generator specs
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxGeneratedVertices = 4096;

struct RawGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

long parse_count(const std::string& spec, size_t& pos) {
    size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) throw graph_parse_error(0, "expected a count in spec '" + spec + "'");
    long n = std::stol(spec.substr(start, pos - start));
    if (n > kMaxGeneratedVertices)
        throw graph_parse_error(0, "generated graph too large in spec '" + spec + "'");
    return n;
}

RawGraph parse_spec_rec(const std::string& spec, size_t& pos) {
    static const std::vector<std::string> kinds = {
        "complete", "path", "cycle", "disjoint-edges", "disjoint", "join"};
    std::string kind;
    for (const auto& k : kinds) {
        if (spec.compare(pos, k.size(), k) == 0 && pos + k.size() < spec.size() &&
            spec[pos + k.size()] == ':') {
            kind = k;
            break;
        }
    }
    if (kind.empty()) throw graph_parse_error(0, "unknown generator in spec '" + spec + "'");
    pos += kind.size() + 1;

    RawGraph g;
    if (kind == "complete" || kind == "path" || kind == "cycle" || kind == "disjoint-edges") {
        long n = parse_count(spec, pos);
        if (kind == "complete") {
            g.n = int(n);
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v) g.edges.emplace_back(u, v);
        } else if (kind == "path") {
            g.n = int(n);
            for (int u = 0; u + 1 < g.n; ++u) g.edges.emplace_back(u, u + 1);
        } else if (kind == "cycle") {
            if (n < 3) throw graph_parse_error(0, "cycle:n requires n >= 3");
            g.n = int(n);
            for (int u = 0; u < g.n; ++u) g.edges.emplace_back(u, (u + 1) % g.n);
        } else {  // disjoint-edges
            g.n = int(2 * n);
            for (int i = 0; i < n; ++i) g.edges.emplace_back(2 * i, 2 * i + 1);
        }
        return g;
    }

    // disjoint:<a>+<b> and join:<a>,<b>
    char sep = (kind == "disjoint") ? '+' : ',';
    RawGraph a = parse_spec_rec(spec, pos);
    if (pos >= spec.size() || spec[pos] != sep)
        throw graph_parse_error(0, std::string("expected '") + sep + "' in spec '" + spec + "'");
    ++pos;
    RawGraph b = parse_spec_rec(spec, pos);
    g.n = a.n + b.n;
    if (g.n > kMaxGeneratedVertices)
        throw graph_parse_error(0, "generated graph too large in spec '" + spec + "'");
    g.edges = a.edges;
    for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.n, v + a.n);
    if (kind == "join")
        for (int u = 0; u < a.n; ++u)
            for (int v = 0; v < b.n; ++v) g.edges.emplace_back(u, a.n + v);
    return g;
}

}  // namespace

bool is_builtin_spec(std::string_view s) {
    for (std::string_view k :
         {"complete:", "path:", "cycle:", "disjoint-edges:", "disjoint:", "join:"})
        if (s.substr(0, k.size()) == k) return true;
    return false;
}

SimplicialGraph builtin_graph(const std::string& spec) {
    size_t pos = 0;
    RawGraph raw = parse_spec_rec(spec, pos);
    if (pos != spec.size())
        throw graph_parse_error(0, "trailing characters in spec '" + spec + "'");
    std::vector<std::string> names;
    names.reserve(raw.n);
    for (int i = 0; i < raw.n; ++i) names.push_back("v" + std::to_string(i));
    return SimplicialGraph(std::move(names), raw.edges);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

SimplicialGraph parse_graph(const std::string& text) {
    // A single non-comment line that matches a generator spec is expanded.
    {
        std::istringstream probe(text);
        std::string line;
        std::string only;
        int nonblank = 0;
        while (std::getline(probe, line)) {
            size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            ++nonblank;
            size_t e = line.find_last_not_of(" \t\r");
            only = line.substr(b, e - b + 1);
        }
        if (nonblank == 1 && is_builtin_spec(only)) return builtin_graph(only);
    }

    std::vector<std::string> names;
    std::map<std::string, int, std::less<>> index;
    std::vector<std::pair<int, int>> edges;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word == "vertex") {
            std::string name, extra;
            if (!(ls >> name) || (ls >> extra))
                throw graph_parse_error(lineno, "expected 'vertex <name>'");
            if (!valid_name(name))
                throw graph_parse_error(lineno, "invalid vertex name '" + name + "'");
            if (index.count(name))
                throw graph_parse_error(lineno, "duplicate vertex name '" + name + "'");
            index[name] = static_cast<int>(names.size());
            names.push_back(name);
        } else if (word == "edge") {
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra))
                throw graph_parse_error(lineno, "expected 'edge <u> <v>'");
            auto ia = index.find(a);
            auto ib = index.find(b);
            if (ia == index.end())
                throw graph_parse_error(lineno, "edge references unknown vertex '" + a + "'");
            if (ib == index.end())
                throw graph_parse_error(lineno, "edge references unknown vertex '" + b + "'");
            if (ia->second == ib->second)
                throw graph_parse_error(lineno, "self-loop at vertex '" + a + "'");
            edges.emplace_back(ia->second, ib->second);
        } else {
            throw graph_parse_error(lineno, "unrecognized directive '" + word + "'");
        }
    }
    return SimplicialGraph(std::move(names), edges);
}

std::string serialize_graph(const SimplicialGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.name(v) << '\n';
    for (auto [u, v] : g.edges()) out << "edge " << g.name(u) << ' ' << g.name(v) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Components, ends, cliques
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> components(const SimplicialGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack = {s};
        comp[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    std::vector<std::vector<int>> out(next);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

std::string_view to_string(EndsClass e) {
    switch (e) {
        case EndsClass::zero: return "zero";
        case EndsClass::one: return "one";
        case EndsClass::two: return "two";
        case EndsClass::infinite: return "infinite";
    }
    return "?";
}

EndsClass ends(const SimplicialGraph& g) {
    if (g.vertex_count() == 0) return EndsClass::zero;
    if (g.vertex_count() == 1) return EndsClass::two;
    if (components(g).size() > 1) return EndsClass::infinite;
    return EndsClass::one;
}

std::vector<std::vector<std::vector<int>>> cliques_by_size(const SimplicialGraph& g) {
    std::vector<std::vector<std::vector<int>>> out;
    out.push_back({std::vector<int>{}});  // the empty clique
    if (g.vertex_count() == 0) return out;
    std::vector<std::vector<int>> current;
    for (int v = 0; v < g.vertex_count(); ++v) current.push_back({v});
    while (!current.empty()) {
        out.push_back(current);
        // Extend each clique by vertices above its maximum, in canonical order.
        std::vector<std::vector<int>> next;
        for (const auto& c : current) {
            for (int w = c.back() + 1; w < g.vertex_count(); ++w) {
                bool ok = true;
                for (int v : c)
                    if (!g.adjacent(v, w)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    auto ext = c;
                    ext.push_back(w);
                    next.push_back(std::move(ext));
                }
            }
        }
        current = std::move(next);
    }
    return out;
}

std::vector<long long> clique_counts(const SimplicialGraph& g) {
    auto all = cliques_by_size(g);
    std::vector<long long> b;
    for (size_t k = 1; k < all.size(); ++k) b.push_back(static_cast<long long>(all[k].size()));
    return b;
}

CohomologicalDimension cohomological_dimension(const SimplicialGraph& g) {
    auto b = clique_counts(g);
    CohomologicalDimension cd;
    cd.dimension = static_cast<int>(b.size());
    cd.at_most_three = b.size() < 4;
    return cd;
}

FreeProductSkeleton free_product_skeleton(const SimplicialGraph& g) {
    FreeProductSkeleton out;
    auto comps = components(g);
    if (comps.size() <= 1) {
        out.connected = true;
        return out;
    }
    std::vector<int> keep;
    for (const auto& c : comps) {
        if (c.size() == 1) {
            ++out.m;
            out.singleton_vertices.push_back(c[0]);
            keep.push_back(c[0]);
        } else {
            ++out.n;
            // Least edge of the component in canonical order.
            std::pair<int, int> best = {-1, -1};
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j)
                    if (g.adjacent(c[i], c[j])) {
                        std::pair<int, int> e = {c[i], c[j]};
                        if (best.first == -1 || e < best) best = e;
                    }
            out.witness_edges.push_back(best);
            keep.push_back(best.first);
            keep.push_back(best.second);
        }
    }
    out.witness = g.induced(keep);
    return out;
}

}  // namespace raag
