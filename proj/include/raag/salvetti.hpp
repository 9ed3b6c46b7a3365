#ifndef RAAG_SALVETTI_HPP
#define RAAG_SALVETTI_HPP

#include <string>
#include <vector>

#include "raag/flag_complex.hpp"
#include "raag/graded_cohomology.hpp"
#include "raag/homology.hpp"
#include "raag/lambda_matrix.hpp"

namespace raag {

/// The cellular chain complex of the classifying cube complex of the group
/// with module coefficients, through degree 3: level i is free on the
/// i-cliques in canonical order, the differential is the Koszul/Fox form
/// d[v0..vk] = sum_j (-1)^j (vj - 1) [v0..^vj..vk] with left coefficients,
/// and the augmentation is the coefficient sum on level 0.
struct LambdaChainComplex {
    LambdaMatrix::GraphPtr graph;
    std::vector<std::vector<Simplex>> bases;  // bases[i] = i-cliques, i = 0..top
    std::vector<LambdaMatrix> d;              // d[i]: level i -> level i-1, i >= 1

    int top_degree() const { return static_cast<int>(bases.size()) - 1; }

    /// Per-degree matrices in the group ring text format.
    std::string to_text() const;
};

/// Build the free resolution for a graph with no 4-clique (degrees 0..3).
/// Throws std::invalid_argument when a 4-clique is present.
LambdaChainComplex salvetti_resolution(const SimplicialGraph& g);

/// Check d_i * d_{i+1} = 0 for all i and that the augmentation kills every
/// entry of d_1.  Exactness beyond these identities is not re-verified.
bool verify_resolution(const LambdaChainComplex& c);

/// Rank of the second homology of the 2-skeleton with module coefficients:
/// the number of triangles.  Throws on a 4-clique.
long long pi2_skeleton_rank(const SimplicialGraph& g);

/// The four-term exact sequence tying the group cohomology in degrees 2
/// and 3 to the 2-skeleton: everything computable is attached.
struct FourTermReport {
    GradedCohomologyReport h2_group;  // left term, as a graded summand list
    GradedCohomologyReport h3_group;  // right term
    long long pi2_dual_free_rank = 0; // middle-right term is free of this rank
    bool h2_skeleton_is_augmentation_ideal = false;
    std::string h2_skeleton;          // symbolic description
};

FourTermReport four_term_report(const SimplicialGraph& g);

/// Rank and Euler characteristic bookkeeping for the minimal thickened
/// double 4-manifold model of the group.
struct ModelReport {
    long long chi = 0;                 // 2 - 2 b1 + 2 b2
    long long pi2_tensor_rank = 0;     // b2 + b3
    long long pi2_dual_rank = 0;       // 2 b3
    long long stabilization_bound = 0; // b3
    std::string pi2_structure;         // symbolic module decomposition
    FourTermReport four_term;
};

ModelReport minimal_model_invariants(const SimplicialGraph& g);

/// Apply the augmentation entry-wise, producing integer matrices.  For the
/// resolution above every differential maps to zero and the homology ranks
/// are the clique counts.
IntegerChainComplex tensor_down(const LambdaChainComplex& c);

}  // namespace raag

#endif
