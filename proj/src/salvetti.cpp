#include "raag/salvetti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raag {

std::string LambdaChainComplex::to_text() const {
    std::ostringstream out;
    const SimplicialGraph& g = *graph;
    for (size_t i = 1; i < d.size(); ++i) {
        out << "d" << i << " : C" << i << " -> C" << i - 1 << "  (rows ";
        for (size_t r = 0; r < bases[i - 1].size(); ++r) {
            if (r) out << ' ';
            out << to_string(bases[i - 1][r], g);
        }
        out << "; cols ";
        for (size_t c = 0; c < bases[i].size(); ++c) {
            if (c) out << ' ';
            out << to_string(bases[i][c], g);
        }
        out << ")\n" << d[i].to_text();
    }
    return out.str();
}

LambdaChainComplex salvetti_resolution(const SimplicialGraph& g) {
    auto cd = cohomological_dimension(g);
    if (!cd.at_most_three)
        throw std::invalid_argument("salvetti_resolution: graph contains a 4-clique");

    auto graph = std::make_shared<const SimplicialGraph>(g);
    auto cliques = cliques_by_size(g);

    LambdaChainComplex c;
    c.graph = graph;
    c.bases.resize(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i)
        for (auto& cl : cliques[i]) c.bases[i].push_back(Simplex{cl});

    c.d.resize(cliques.size());
    for (size_t i = 1; i < cliques.size(); ++i) {
        const auto& domain = c.bases[i];
        const auto& target = c.bases[i - 1];
        LambdaMatrix m(graph, static_cast<int>(target.size()), static_cast<int>(domain.size()));
        for (int col = 0; col < static_cast<int>(domain.size()); ++col) {
            const Simplex& sigma = domain[col];
            int sign = 1;
            for (size_t j = 0; j < sigma.verts.size(); ++j) {
                Simplex face;
                face.verts = sigma.verts;
                face.verts.erase(face.verts.begin() + j);
                auto it = std::lower_bound(target.begin(), target.end(), face);
                int row = static_cast<int>(it - target.begin());
                GroupRingElement coeff =
                    GroupRingElement::generator(graph, sigma.verts[j]) -
                    GroupRingElement::constant(graph, 1);
                coeff *= Int(sign);
                m.at(row, col) += coeff;
                sign = -sign;
            }
        }
        c.d[i] = std::move(m);
    }
    return c;
}

bool verify_resolution(const LambdaChainComplex& c) {
    for (size_t i = 1; i + 1 < c.d.size(); ++i)
        if (!(c.d[i] * c.d[i + 1]).is_zero()) return false;
    // The augmentation is the coefficient sum; it must kill every entry of d1.
    if (c.d.size() > 1) {
        const LambdaMatrix& d1 = c.d[1];
        for (int r = 0; r < d1.rows(); ++r)
            for (int col = 0; col < d1.cols(); ++col)
                if (augmentation(d1.at(r, col)) != 0) return false;
    }
    return true;
}

long long pi2_skeleton_rank(const SimplicialGraph& g) {
    auto cd = cohomological_dimension(g);
    if (!cd.at_most_three)
        throw std::invalid_argument("pi2_skeleton_rank: graph contains a 4-clique");
    auto b = clique_counts(g);
    return b.size() >= 3 ? b[2] : 0;
}

FourTermReport four_term_report(const SimplicialGraph& g) {
    auto cd = cohomological_dimension(g);
    if (!cd.at_most_three)
        throw std::invalid_argument("four_term_report: graph contains a 4-clique");
    FourTermReport r;
    r.h2_group = graded_group_cohomology(g, 2);
    r.h3_group = graded_group_cohomology(g, 3);
    r.pi2_dual_free_rank = pi2_skeleton_rank(g);
    bool single_triangle = is_single_simplex(g) && g.vertex_count() == 3;
    if (r.h2_group.is_zero() && single_triangle) {
        r.h2_skeleton_is_augmentation_ideal = true;
        r.h2_skeleton = "I(pi), the augmentation ideal";
    } else if (r.h2_group.is_zero() && r.h3_group.is_zero()) {
        r.h2_skeleton = "free of rank " + std::to_string(r.pi2_dual_free_rank);
    } else if (r.pi2_dual_free_rank == 0) {
        r.h2_skeleton = "isomorphic to the degree-2 group cohomology";
    } else {
        r.h2_skeleton = "extension determined by the outer terms (not expanded)";
    }
    return r;
}

ModelReport minimal_model_invariants(const SimplicialGraph& g) {
    auto cd = cohomological_dimension(g);
    if (!cd.at_most_three)
        throw std::invalid_argument("minimal_model_invariants: graph contains a 4-clique");
    auto b = clique_counts(g);
    long long b1 = b.size() >= 1 ? b[0] : 0;
    long long b2 = b.size() >= 2 ? b[1] : 0;
    long long b3 = b.size() >= 3 ? b[2] : 0;
    ModelReport r;
    r.chi = 2 - 2 * b1 + 2 * b2;
    r.pi2_tensor_rank = b2 + b3;
    r.pi2_dual_rank = 2 * b3;
    r.stabilization_bound = b3;
    r.pi2_structure =
        "H^2(K;L) + H_2(K;L) with H_2(K;L) free of rank " + std::to_string(b3);
    r.four_term = four_term_report(g);
    return r;
}

IntegerChainComplex tensor_down(const LambdaChainComplex& c) {
    IntegerChainComplex out;
    out.augmented = false;
    out.bases = c.bases;
    out.boundary.resize(c.d.size());
    for (size_t i = 1; i < c.d.size(); ++i) {
        const LambdaMatrix& m = c.d[i];
        IntMatrix z(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r)
            for (int col = 0; col < m.cols(); ++col) z.at(r, col) = augmentation(m.at(r, col));
        out.boundary[i] = std::move(z);
    }
    return out;
}

}  // namespace raag
