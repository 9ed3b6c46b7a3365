#include "raag/graded_cohomology.hpp"

#include <stdexcept>

namespace raag {

bool GradedCohomologyReport::is_zero() const {
    if (single_simplex_rank) return *single_simplex_rank != degree;
    return summands.empty();
}

bool is_single_simplex(const SimplicialGraph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

GradedCohomologyReport graded_group_cohomology(const SimplicialGraph& g, int degree) {
    GradedCohomologyReport report;
    report.degree = degree;
    if (is_single_simplex(g)) {
        report.single_simplex_rank = g.vertex_count();
        return report;
    }
    FlagComplex k = flag_complex(g);
    for (int level = 0; level < k.level_count(); ++level) {
        for (const Simplex& sigma : k.level(level)) {
            FlagComplex lk = link(k, sigma);
            FGAbelianGroup h = reduced_cohomology(lk, degree - sigma.dim() - 2);
            if (h.is_zero()) continue;
            report.summands.push_back({sigma, std::move(h), sigma.dim() + 1});
        }
    }
    return report;
}

FiltrationReport filtration(const SimplicialGraph& g, int degree) {
    if (is_single_simplex(g))
        throw std::invalid_argument("filtration: flag complex is a single simplex");
    GradedCohomologyReport graded = graded_group_cohomology(g, degree);
    FiltrationReport report;
    report.degree = degree;
    for (int j = 0; j <= degree; ++j) {
        FiltrationQuotient q;
        q.index = j;
        q.simplex_dim = j - 1;
        for (const GradedSummand& s : graded.summands)
            if (s.simplex.dim() == j - 1) q.summands.push_back(s);
        report.quotients.push_back(std::move(q));
    }
    return report;
}

FGAbelianGroup integral_group_homology(const SimplicialGraph& g, int degree) {
    FGAbelianGroup out;
    if (degree < 0) return out;
    if (degree == 0) {
        out.free_rank = 1;
        return out;
    }
    auto b = clique_counts(g);
    if (degree <= static_cast<int>(b.size())) out.free_rank = b[degree - 1];
    return out;
}

}  // namespace raag
