#include "raag/flag_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace raag {

std::string to_string(const Simplex& s, const SimplicialGraph& g) {
    std::string out = "{";
    for (size_t i = 0; i < s.verts.size(); ++i) {
        if (i) out += ",";
        out += g.name(s.verts[i]);
    }
    out += "}";
    return out;
}

FlagComplex::FlagComplex(SimplicialGraph g) : graph_(std::move(g)) {
    auto cliques = cliques_by_size(graph_);
    levels_.reserve(cliques.size());
    for (auto& lvl : cliques) {
        std::vector<Simplex> simplices;
        simplices.reserve(lvl.size());
        for (auto& c : lvl) simplices.push_back(Simplex{std::move(c)});
        levels_.push_back(std::move(simplices));
    }
}

const std::vector<Simplex>& FlagComplex::simplices_of_dim(int d) const {
    static const std::vector<Simplex> kEmpty;
    int k = d + 1;
    if (k < 0 || k >= level_count()) return kEmpty;
    return levels_[k];
}

bool FlagComplex::contains(const Simplex& s) const {
    int k = static_cast<int>(s.verts.size());
    if (k >= level_count()) return false;
    const auto& lvl = levels_[k];
    return std::binary_search(lvl.begin(), lvl.end(), s);
}

long long FlagComplex::size_nonempty() const {
    long long total = 0;
    for (int k = 1; k < level_count(); ++k) total += static_cast<long long>(levels_[k].size());
    return total;
}

FlagComplex flag_complex(const SimplicialGraph& g) { return FlagComplex(g); }

FlagComplex link(const FlagComplex& k, const Simplex& s) {
    if (!k.contains(s)) throw std::invalid_argument("link: simplex not in complex");
    if (s.empty()) return k;
    const SimplicialGraph& g = k.graph();
    std::vector<int> common;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : s.verts)
            if (u == v || !g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) common.push_back(v);
    }
    return FlagComplex(g.induced(common));
}

}  // namespace raag
