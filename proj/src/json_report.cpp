#include "raag/json_report.hpp"

namespace raag {

Json to_json(const FGAbelianGroup& g) {
    Json torsion = Json::array();
    for (const Int& d : g.torsion) torsion.push_back(d.str());
    return Json{{"rank", g.free_rank}, {"torsion", torsion}};
}

Json to_json(const SimplicialGraph& g) {
    Json verts = Json::array();
    for (const auto& n : g.names()) verts.push_back(n);
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.name(u), g.name(v)}));
    return Json{{"vertices", verts}, {"edges", edges}};
}

Json to_json(const Simplex& s, const SimplicialGraph& g) {
    Json out = Json::array();
    for (int v : s.verts) out.push_back(g.name(v));
    return out;
}

Json to_json(const GradedSummand& s, const SimplicialGraph& g) {
    return Json{{"simplex", to_json(s.simplex, g)},
                {"link_cohomology", to_json(s.link_cohomology)},
                {"stabilizer_rank", s.stabilizer_rank}};
}

Json to_json(const GradedCohomologyReport& r, const SimplicialGraph& g) {
    Json out{{"degree", r.degree}};
    if (r.single_simplex_rank) {
        FGAbelianGroup value;
        if (r.degree == *r.single_simplex_rank) value.free_rank = 1;
        out["special_case"] = Json{{"free_abelian_rank", *r.single_simplex_rank},
                                   {"group", to_json(value)}};
    }
    Json summands = Json::array();
    for (const auto& s : r.summands) summands.push_back(to_json(s, g));
    out["summands"] = summands;
    return out;
}

Json to_json(const FiltrationReport& r, const SimplicialGraph& g) {
    Json quotients = Json::array();
    for (const auto& q : r.quotients) {
        Json summands = Json::array();
        for (const auto& s : q.summands) summands.push_back(to_json(s, g));
        quotients.push_back(
            Json{{"index", q.index}, {"simplex_dim", q.simplex_dim}, {"summands", summands}});
    }
    return Json{{"degree", r.degree}, {"quotients", quotients}};
}

namespace {

Json to_json(const TameCondition& c) {
    return Json{{"state", std::string(to_string(c.state))}, {"reason", c.reason}};
}

}  // namespace

Json to_json(const TameVerdict& v) {
    return Json{{"dual_h2", to_json(v.dual_h2)},
                {"dual_h3", to_json(v.dual_h3)},
                {"ext1_h3", to_json(v.ext1_h3)},
                {"overall", v.overall_tame ? "tame" : "unknown"}};
}

Json to_json(const CdAutomaticReport& r) {
    return Json{{"dimension", r.dimension},
                {"trivial_group", r.trivial_group},
                {"degree3_conditions_automatic", r.degree3_conditions_automatic},
                {"top_degree_statement", r.top_degree_statement}};
}

Json to_json(const BuildScript& s) {
    Json moves = Json::array();
    for (const BuildMove& m : s.moves) {
        switch (m.kind) {
            case BuildMove::Kind::edge_at_vertex:
                moves.push_back(Json{{"move", "edge-at-vertex"}, {"vertex", m.u}});
                break;
            case BuildMove::Kind::tri_at_vertex:
                moves.push_back(Json{{"move", "tri-at-vertex"}, {"vertex", m.u}});
                break;
            case BuildMove::Kind::tri_at_edge:
                moves.push_back(Json{{"move", "tri-at-edge"}, {"u", m.u}, {"v", m.v}});
                break;
        }
    }
    return moves;
}

Json to_json(const FourTermReport& r, const SimplicialGraph& g) {
    return Json{{"h2_group", to_json(r.h2_group, g)},
                {"h2_skeleton", r.h2_skeleton},
                {"h2_skeleton_is_augmentation_ideal", r.h2_skeleton_is_augmentation_ideal},
                {"pi2_dual_free_rank", r.pi2_dual_free_rank},
                {"h3_group", to_json(r.h3_group, g)}};
}

Json to_json(const ModelReport& r, const SimplicialGraph& g) {
    return Json{{"chi", r.chi},
                {"pi2_tensor_rank", r.pi2_tensor_rank},
                {"pi2_dual_rank", r.pi2_dual_rank},
                {"stabilization_bound", r.stabilization_bound},
                {"stabilization_bound_note",
                 "triangle count; an upper bound for the minimal number of "
                 "module generators of the top cohomology"},
                {"pi2_structure", r.pi2_structure},
                {"four_term", to_json(r.four_term, g)}};
}

Json to_json(const LambdaMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json form_report(const LambdaMatrix& h) {
    Json out{{"rank", h.rows()}};
    bool herm = is_hermitian(h);
    out["hermitian"] = herm;
    if (herm) {
        auto w = w_invariant(h);
        out["w"] = w;
        auto witness = strongly_even_witness(h);
        out["strongly_even"] = witness.has_value();
        if (witness) out["witness"] = to_json(*witness);
    }
    return out;
}

}  // namespace raag
