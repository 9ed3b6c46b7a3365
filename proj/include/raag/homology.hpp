#ifndef RAAG_HOMOLOGY_HPP
#define RAAG_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "raag/flag_complex.hpp"
#include "raag/integer_matrix.hpp"

namespace raag {

/// Finitely generated abelian group in canonical form: free rank plus a
/// divisibility chain of torsion coefficients d1 | d2 | ..., each >= 2.
struct FGAbelianGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FGAbelianGroup&) const = default;

    /// "0", "Z", "Z^3", "Z^2 + Z/2 + Z/6", ...
    std::string to_string() const;
};

/// Simplicial chain complex with integer coefficients.  Level k holds the
/// simplices with k vertices (dimension k-1); when augmented, level 0 is
/// the empty simplex and the level-1 boundary is the augmentation.
/// boundary[k] maps level k to level k-1 (k >= 1); boundary[0] is unused.
struct IntegerChainComplex {
    bool augmented = false;
    std::vector<std::vector<Simplex>> bases;
    std::vector<IntMatrix> boundary;

    int level_count() const { return static_cast<int>(bases.size()); }
};

/// Boundary matrices with the canonical orientation
/// d[v0..vk] = sum_j (-1)^j [v0..^vj..vk] (vertices in canonical order).
/// With use_augmentation the reduced complex is built: level 0 is the empty
/// simplex and every vertex maps to it with coefficient one.
IntegerChainComplex boundary_matrices(const FlagComplex& k, bool use_augmentation);

/// Reduced simplicial homology of degree i via Smith normal form.  Degrees
/// outside [-1, dim] give the zero group; the empty complex has its one
/// nontrivial group Z in degree -1.
FGAbelianGroup reduced_homology(const FlagComplex& k, int degree);

/// Reduced simplicial cohomology of degree i, computed from the transposed
/// boundary matrices.
FGAbelianGroup reduced_cohomology(const FlagComplex& k, int degree);

/// Alternating sum of simplex counts over dimensions >= 0.  Throws
/// std::invalid_argument on the empty complex.
long long euler_characteristic(const FlagComplex& k);

/// Free ranks of the homology of an arbitrary integer chain complex, one
/// entry per level (ignores the augmented flag; works on any boundary
/// family with d*d = 0).
std::vector<long long> betti_numbers(const IntegerChainComplex& cc);

}  // namespace raag

#endif
