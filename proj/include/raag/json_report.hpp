#ifndef RAAG_JSON_REPORT_HPP
#define RAAG_JSON_REPORT_HPP

#include <json.hpp>

#include "raag/forms.hpp"
#include "raag/graded_cohomology.hpp"
#include "raag/graph.hpp"
#include "raag/salvetti.hpp"
#include "raag/tame.hpp"

namespace raag {

using Json = nlohmann::ordered_json;

Json to_json(const FGAbelianGroup& g);
Json to_json(const SimplicialGraph& g);
Json to_json(const Simplex& s, const SimplicialGraph& g);
Json to_json(const GradedSummand& s, const SimplicialGraph& g);
Json to_json(const GradedCohomologyReport& r, const SimplicialGraph& g);
Json to_json(const FiltrationReport& r, const SimplicialGraph& g);
Json to_json(const TameVerdict& v);
Json to_json(const CdAutomaticReport& r);
Json to_json(const BuildScript& s);
Json to_json(const FourTermReport& r, const SimplicialGraph& g);
Json to_json(const ModelReport& r, const SimplicialGraph& g);

/// {rank, hermitian, w, strongly_even, witness?} for a square matrix over
/// the group ring.
Json form_report(const LambdaMatrix& h);

/// Matrix as an array of rows, each row an array of rendered entries.
Json to_json(const LambdaMatrix& m);

}  // namespace raag

#endif
