#include "raag/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "raag/flag_complex.hpp"
#include "raag/forms.hpp"
#include "raag/graded_cohomology.hpp"
#include "raag/homology.hpp"
#include "raag/json_report.hpp"
#include "raag/salvetti.hpp"
#include "raag/tame.hpp"

namespace raag {

namespace {

constexpr const char* kSchema = "raag-report/1";
constexpr const char* kVersion = "1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_parse_error(0, "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// --graph accepts a file path or a builtin generator spec.
SimplicialGraph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_graph(read_file(arg));
    if (is_builtin_spec(arg)) return builtin_graph(arg);
    throw graph_parse_error(0, "no such file and not a builtin spec: '" + arg + "'");
}

Json report_shell(const std::string& command, const SimplicialGraph* g) {
    Json out{{"schema", kSchema}, {"version", kVersion}, {"command", command}};
    if (g) out["graph"] = to_json(*g);
    return out;
}

void emit(std::ostream& os, const Json& report, bool pretty, const std::string& pretty_text) {
    if (pretty)
        os << pretty_text;
    else
        os << report.dump(2) << '\n';
}

std::string pretty_group_list(const GradedCohomologyReport& r, const SimplicialGraph& g) {
    std::ostringstream os;
    os << "degree " << r.degree << "\n";
    if (r.single_simplex_rank) {
        os << "  flag complex is a single simplex: group is Z^" << *r.single_simplex_rank
           << ", cohomology is Z in degree " << *r.single_simplex_rank << " and 0 elsewhere\n";
        return os.str();
    }
    if (r.summands.empty()) {
        os << "  0\n";
        return os.str();
    }
    for (const auto& s : r.summands)
        os << "  sigma=" << to_string(s.simplex, g) << "  link " << s.link_cohomology.to_string()
           << "  (x) Z[pi/pi_sigma], stabilizer rank " << s.stabilizer_rank << "\n";
    return os.str();
}

int cmd_invariants(const SimplicialGraph& g, bool pretty, std::ostream& out) {
    Json report = report_shell("invariants", &g);
    auto b = clique_counts(g);
    auto cd = cohomological_dimension(g);
    FlagComplex k = flag_complex(g);

    Json result;
    result["vertex_count"] = g.vertex_count();
    result["edge_count"] = g.edge_count();
    result["b0"] = 1;
    result["clique_counts"] = b;
    result["cohomological_dimension"] = cd.dimension;
    result["cd_at_most_3"] = cd.at_most_three;
    result["ends"] = std::string(to_string(ends(g)));
    result["component_count"] = components(g).size();
    if (k.size_nonempty() > 0)
        result["flag_euler_characteristic"] = euler_characteristic(k);
    else
        result["flag_euler_characteristic"] = nullptr;

    auto fps = free_product_skeleton(g);
    Json fj{{"connected", fps.connected}};
    if (!fps.connected) {
        fj["n"] = fps.n;
        fj["m"] = fps.m;
        Json edges = Json::array();
        for (auto [u, v] : fps.witness_edges)
            edges.push_back(Json::array({g.name(u), g.name(v)}));
        Json singles = Json::array();
        for (int v : fps.singleton_vertices) singles.push_back(g.name(v));
        fj["singletons"] = singles;
        fj["witness_edges"] = edges;
    }
    result["free_product_skeleton"] = fj;
    result["h1_dual_nonzero"] = h1_dual_nonzero(g);
    if (cd.at_most_three)
        result["chi_minimal_model"] = minimal_model_invariants(g).chi;
    else
        result["chi_minimal_model"] = nullptr;
    report["result"] = result;

    std::ostringstream p;
    p << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << "\n";
    p << "clique counts b = (";
    for (size_t i = 0; i < b.size(); ++i) p << (i ? "," : "") << b[i];
    p << ")\n";
    p << "cohomological dimension " << cd.dimension << (cd.at_most_three ? " (<= 3)" : " (> 3)")
      << "\n";
    p << "ends: " << to_string(ends(g)) << "\n";
    if (cd.at_most_three)
        p << "chi of the minimal model: " << minimal_model_invariants(g).chi << "\n";
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_cohomology(const SimplicialGraph& g, int degree, bool pretty, std::ostream& out) {
    Json report = report_shell("cohomology", &g);
    auto graded = graded_group_cohomology(g, degree);
    report["result"] = to_json(graded, g);
    emit(out, report, pretty, pretty_group_list(graded, g));
    return 0;
}

int cmd_filtration(const SimplicialGraph& g, int degree, bool pretty, std::ostream& out) {
    Json report = report_shell("filtration", &g);
    auto f = filtration(g, degree);
    report["result"] = to_json(f, g);
    std::ostringstream p;
    p << "filtration of graded degree " << degree << "\n";
    for (const auto& q : f.quotients) {
        p << "  quotient " << q.index << " (dim sigma = " << q.simplex_dim << "): "
          << q.summands.size() << " summand(s)\n";
        for (const auto& s : q.summands)
            p << "    sigma=" << to_string(s.simplex, g) << "  link "
              << s.link_cohomology.to_string() << "\n";
    }
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_tame(const SimplicialGraph& g, int max_separator, bool pretty, std::ostream& out) {
    Json report = report_shell("tame", &g);
    auto verdict = tame_sufficient(g);
    Json result{{"verdict", to_json(verdict)}};
    result["torsion_criterion_degree1"] =
        torsion_criterion(g, 1) == TorsionCriterion::holds ? "holds" : "unknown";
    result["torsion_criterion_degree2"] =
        torsion_criterion(g, 2) == TorsionCriterion::holds ? "holds" : "unknown";
    auto cdrep = cd3_automatic(g);
    result["cd_report"] = to_json(cdrep);
    if (!cdrep.degree3_conditions_automatic)
        result["note"] = "cohomological dimension " + std::to_string(cdrep.dimension) +
                         ": automatic degree-3 conditions unavailable";
    result["h1_dual_nonzero"] = h1_dual_nonzero(g);
    if (components(g).size() == 1 && g.vertex_count() > 0) {
        auto w = separator_criterion(g, max_separator);
        if (w) {
            Json sep = Json::array(), a = Json::array(), b = Json::array();
            for (int v : w->separator) sep.push_back(g.name(v));
            for (int v : w->side_a) a.push_back(g.name(v));
            for (int v : w->side_b) b.push_back(g.name(v));
            result["separator_criterion"] =
                Json{{"found", true}, {"separator", sep}, {"side_a", a}, {"side_b", b}};
        } else {
            result["separator_criterion"] = Json{{"found", false}};
        }
    } else {
        result["separator_criterion"] = nullptr;
    }
    report["result"] = result;

    std::ostringstream p;
    p << "dual of H^2: " << to_string(verdict.dual_h2.state) << " — " << verdict.dual_h2.reason
      << "\n";
    p << "dual of H^3: " << to_string(verdict.dual_h3.state) << " — " << verdict.dual_h3.reason
      << "\n";
    p << "Ext^1 of H^3: " << to_string(verdict.ext1_h3.state) << " — " << verdict.ext1_h3.reason
      << "\n";
    p << "overall: " << (verdict.overall_tame ? "tame" : "unknown") << "\n";
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_generate(int steps, std::uint64_t seed, const std::string& script_path, bool pretty,
                 std::ostream& out) {
    BuildScript script;
    if (!script_path.empty())
        script = parse_build_script(read_file(script_path));
    else
        script = random_build_script(steps, seed);
    SimplicialGraph g = generate_tame(script);
    Json report = report_shell("generate", &g);
    Json result{{"script", to_json(script)},
                {"script_text", to_text(script)},
                {"tame", to_json(tame_sufficient(g))}};
    report["result"] = result;
    std::ostringstream p;
    p << to_text(script) << serialize_graph(g)
      << "tame: " << (tame_sufficient(g).overall_tame ? "yes" : "unknown") << "\n";
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_resolution(const SimplicialGraph& g, bool pretty, std::ostream& out) {
    Json report = report_shell("resolution", &g);
    auto c = salvetti_resolution(g);
    Json ranks = Json::array();
    for (const auto& basis : c.bases) ranks.push_back(basis.size());
    Json diffs = Json::array();
    for (size_t i = 1; i < c.d.size(); ++i) diffs.push_back(to_json(c.d[i]));
    bool ok = verify_resolution(c);
    auto down = tensor_down(c);
    Json result{{"ranks", ranks},
                {"differentials", diffs},
                {"verified", ok},
                {"tensor_down_betti", betti_numbers(down)}};
    report["result"] = result;
    std::ostringstream p;
    p << c.to_text() << "verified: " << (ok ? "yes" : "no") << "\n";
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_model(const SimplicialGraph& g, bool pretty, std::ostream& out) {
    Json report = report_shell("model", &g);
    auto m = minimal_model_invariants(g);
    report["result"] = to_json(m, g);
    std::ostringstream p;
    p << "chi(M0) = " << m.chi << "\n"
      << "rank of pi2 tensored down = " << m.pi2_tensor_rank << "\n"
      << "rank of the dual of pi2 = " << m.pi2_dual_rank << "\n"
      << "stabilization bound = " << m.stabilization_bound << "\n"
      << "pi2 = " << m.pi2_structure << "\n";
    emit(out, report, pretty, p.str());
    return 0;
}

int cmd_forms(const std::string& graph_arg, int hyperbolic_rank, const std::string& matrix_path,
              const std::string& metabolic_path, bool even, const std::string& stabilize_path,
              bool pretty, std::ostream& out) {
    std::shared_ptr<const SimplicialGraph> g;
    if (!graph_arg.empty())
        g = std::make_shared<const SimplicialGraph>(load_graph(graph_arg));
    else
        g = std::make_shared<const SimplicialGraph>(
            SimplicialGraph({}, {}));  // forms over the trivial group

    Json report = report_shell("forms", g.get());
    Json result;
    std::ostringstream p;
    if (hyperbolic_rank >= 0) {
        auto h = hyperbolic_form(g, hyperbolic_rank);
        result = Json{{"matrix", to_json(h)}, {"report", form_report(h)}};
        p << h.to_text();
    } else if (!matrix_path.empty()) {
        auto h = parse_lambda_matrix(g, read_file(matrix_path));
        result = Json{{"report", form_report(h)}};
        p << h.to_text();
    } else if (!metabolic_path.empty()) {
        auto delta = parse_lambda_matrix(g, read_file(metabolic_path));
        auto m = metabolic_double(delta, even);
        result = Json{{"matrix", to_json(m)}, {"report", form_report(m)}};
        p << m.to_text();
    } else if (!stabilize_path.empty()) {
        auto theta = parse_lambda_matrix(g, read_file(stabilize_path));
        auto bundle = stabilization_isometry(theta);
        bool ok = isometry_check(bundle.psi, hyperbolic_form(g, theta.rows()), bundle.k);
        result = Json{{"theta", to_json(bundle.theta)},
                      {"lambda", to_json(bundle.lambda)},
                      {"psi", to_json(bundle.psi)},
                      {"k", to_json(bundle.k)},
                      {"isometry_verified", ok}};
        p << "k =\n" << bundle.k.to_text() << "isometry verified: " << (ok ? "yes" : "no")
          << "\n";
    } else {
        throw CLI::ValidationError(
            "forms", "one of --hyperbolic, --matrix, --metabolic, --stabilize is required");
    }
    report["result"] = result;
    emit(out, report, pretty, p.str());
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants of right-angled Artin groups and their minimal 4-manifold models",
                 "raag"};
    app.require_subcommand(1);

    std::string graph_arg;
    int degree = 2;
    int max_separator = 3;
    int steps = 8;
    std::uint64_t seed = 0;
    std::string script_path;
    bool pretty = false;
    int hyperbolic_rank = -1;
    std::string matrix_path, metabolic_path, stabilize_path;
    bool even = false;

    app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

    auto add_graph = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--graph", graph_arg, "graph file or builtin spec");
        if (required) opt->required();
    };

    auto* inv = app.add_subcommand("invariants", "clique data, dimension, ends, model chi");
    add_graph(inv);
    auto* coh = app.add_subcommand("cohomology", "graded group cohomology in one degree");
    add_graph(coh);
    coh->add_option("--degree", degree, "cohomology degree")->required();
    auto* fil = app.add_subcommand("filtration", "filtration quotients of the graded report");
    add_graph(fil);
    fil->add_option("--degree", degree, "cohomology degree")->required();
    auto* tam = app.add_subcommand("tame", "tameness verdict and related criteria");
    add_graph(tam);
    tam->add_option("--max-separator", max_separator, "separator search bound (default 3)");
    auto* gen = app.add_subcommand("generate", "build a graph with tame cohomology");
    gen->add_option("--steps", steps, "number of random moves (default 8)");
    gen->add_option("--seed", seed, "random seed (default 0)");
    gen->add_option("--script", script_path, "build-script file (overrides --steps/--seed)");
    auto* res = app.add_subcommand("resolution", "free resolution over the group ring");
    add_graph(res);
    auto* mod = app.add_subcommand("model", "minimal 4-manifold model report");
    add_graph(mod);
    auto* frm = app.add_subcommand("forms", "hermitian forms toolkit");
    add_graph(frm, false);
    frm->add_option("--hyperbolic", hyperbolic_rank, "emit the hyperbolic form of this rank");
    frm->add_option("--matrix", matrix_path, "report on a form matrix file");
    frm->add_option("--metabolic", metabolic_path, "double the given form metabolically");
    frm->add_flag("--even", even, "require the metabolic input to be even");
    frm->add_option("--stabilize", stabilize_path, "stabilization isometry of an even form");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();  // lets --pretty appear after the subcommand

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands())
            if (sub->get_help_ptr() != nullptr && sub->get_help_ptr()->count() > 0) {
                out << sub->help();
                return 0;
            }
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(load_graph(graph_arg), pretty, out);
        if (coh->parsed()) return cmd_cohomology(load_graph(graph_arg), degree, pretty, out);
        if (fil->parsed()) return cmd_filtration(load_graph(graph_arg), degree, pretty, out);
        if (tam->parsed()) return cmd_tame(load_graph(graph_arg), max_separator, pretty, out);
        if (gen->parsed()) return cmd_generate(steps, seed, script_path, pretty, out);
        if (res->parsed()) return cmd_resolution(load_graph(graph_arg), pretty, out);
        if (mod->parsed()) return cmd_model(load_graph(graph_arg), pretty, out);
        if (frm->parsed())
            return cmd_forms(graph_arg, hyperbolic_rank, matrix_path, metabolic_path, even,
                             stabilize_path, pretty, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace raag
