#ifndef RAAG_GRADED_COHOMOLOGY_HPP
#define RAAG_GRADED_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "raag/flag_complex.hpp"
#include "raag/graph.hpp"
#include "raag/homology.hpp"

namespace raag {

/// One summand of the associated graded of the group cohomology with group
/// ring coefficients in a fixed degree k: a simplex sigma of the flag
/// complex together with the reduced link cohomology in degree
/// k - dim(sigma) - 2 and the rank of the free abelian stabilizer subgroup
/// (dim sigma + 1).  The coset module Z[pi/pi_sigma] stays symbolic.
struct GradedSummand {
    Simplex simplex;
    FGAbelianGroup link_cohomology;
    int stabilizer_rank = 0;
};

/// Graded group cohomology report for one degree.  When the flag complex is
/// a single simplex the group is Z^n and the report carries the special
/// case instead of a summand list: the only nonvanishing degree is n,
/// where the cohomology is Z.
struct GradedCohomologyReport {
    int degree = 0;
    std::optional<int> single_simplex_rank;  // n with H^n = Z
    std::vector<GradedSummand> summands;

    bool is_zero() const;
};

GradedCohomologyReport graded_group_cohomology(const SimplicialGraph& g, int degree);

/// Filtration quotient: index j lists the summands with dim sigma = j - 1,
/// the empty simplex at the bottom (j = 0).
struct FiltrationQuotient {
    int index = 0;
    int simplex_dim = -1;
    std::vector<GradedSummand> summands;
};

struct FiltrationReport {
    int degree = 0;
    std::vector<FiltrationQuotient> quotients;  // j = 0..degree
};

/// Filtration of the degree-k graded report by simplex dimension.  Throws
/// std::invalid_argument when the flag complex is a single simplex.
FiltrationReport filtration(const SimplicialGraph& g, int degree);

/// Integral group homology: free abelian of rank equal to the number of
/// i-cliques (rank 1 in degree 0), zero above the clique number.
FGAbelianGroup integral_group_homology(const SimplicialGraph& g, int degree);

/// True when the flag complex is a single simplex, i.e. the graph is
/// complete (the empty graph counts: the trivial group is Z^0).
bool is_single_simplex(const SimplicialGraph& g);

}  // namespace raag

#endif
