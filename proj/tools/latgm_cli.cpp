// Command-line interface: decide, certify, and construct factorizations of
// lattice-supported binary distributions over undirected graphical models.
// Exit codes: 0 success or true verdict, 1 false verdict (with certificate on
// stdout), 2 input or usage errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgm/latgm.hpp"

using namespace latgm;
using latgm::io::json;

namespace {

struct Options {
    bool as_json = false;
};

void emit(const Options& opt, const json& machine, const std::string& text) {
    if (opt.as_json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

std::string sets_lines(const std::vector<SubsetMask>& sets) {
    std::string out;
    for (SubsetMask s : sets) out += s.to_string() + "\n";
    return out;
}

json schema_object() { return json{{"schema_version", io::kSchemaVersion}}; }

json binomials_json(const std::vector<Binomial>& bs) {
    json arr = json::array();
    for (const auto& b : bs) {
        json plus = json::array(), minus = json::array();
        for (SubsetMask s : b.plus()) plus.push_back(s.to_key());
        for (SubsetMask s : b.minus()) minus.push_back(s.to_key());
        arr.push_back(json{{"plus", plus}, {"minus", minus}});
    }
    return arr;
}

json statements_json(const std::vector<CIStatement>& stmts) {
    json arr = json::array();
    for (const auto& s : stmts)
        arr.push_back(json{{"A", s.A.to_key()}, {"B", s.B.to_key()}, {"C", s.C.to_key()}});
    return arr;
}

json matrix_json(const ParamMatrix& m) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& l : m.row_labels()) rows.push_back(l.to_string());
    for (SubsetMask c : m.col_labels()) cols.push_back(c.to_key());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.entry(i, j));
        entries.push_back(row);
    }
    json out = schema_object();
    out["rows"] = rows;
    out["cols"] = cols;
    out["entries"] = entries;
    return out;
}

enum class MatrixKind { AG, BG, HIBI };

ParamMatrix build_matrix(MatrixKind kind, const std::string& instance_path) {
    const json j = io::load_file(instance_path);
    switch (kind) {
        case MatrixKind::AG: return matrix_AG(io::parse_graph(j));
        case MatrixKind::BG: return matrix_BG(io::parse_graph(j));
        case MatrixKind::HIBI: return hibi_matrix(io::parse_lattice(j));
    }
    throw std::logic_error("unreachable");
}

std::string certificate_text(const FactorizationCertificate& cert) {
    std::string out = "clique parameters:\n";
    for (const auto& [c, v] : cert.clique_params)
        out += "  c" + c.to_string() + " = " + format_rational(v) + "\n";
    out += "dependent trace:\n";
    for (const auto& step : cert.dependent_trace)
        out += "  " + step.set.to_string() + " via non-edge {" + std::to_string(step.i) + "," +
               std::to_string(step.j) + "}\n";
    return out;
}

int report_result(const Options& opt, const Report& r) {
    emit(opt, io::to_json(r), r.to_text());
    return r.ok() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact factorization toolkit for lattice-supported binary graphical models"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");

    int exit_code = 0;
    const std::map<std::string, MatrixKind> matrix_kinds{
        {"AG", MatrixKind::AG}, {"BG", MatrixKind::BG}, {"HIBI", MatrixKind::HIBI}};

    // ---- lattice ----
    auto* lattice_cmd = app.add_subcommand("lattice", "distributive lattice operations");
    lattice_cmd->require_subcommand(1);

    static std::string from_poset_file;
    auto* from_poset = lattice_cmd->add_subcommand("from-poset", "order ideals of a poset");
    from_poset->add_option("poset", from_poset_file, "poset file")->required();
    from_poset->callback([&] {
        const DistributiveLattice l = order_ideals(io::parse_poset(io::load_file(from_poset_file)));
        emit(opt, io::to_json(l), sets_lines(l.elements()));
    });

    static std::string check_natural_file;
    auto* check_natural = lattice_cmd->add_subcommand("check-natural", "is the lattice natural?");
    check_natural->add_option("lattice", check_natural_file, "lattice file")->required();
    check_natural->callback([&] {
        const DistributiveLattice l = io::parse_lattice(io::load_file(check_natural_file));
        const bool natural = is_natural(l);
        json out = schema_object();
        out["natural"] = natural;
        emit(opt, out, natural ? "natural\n" : "not natural\n");
        exit_code = natural ? 0 : 1;
    });

    static std::string minimal_graph_file;
    auto* minimal_cmd = lattice_cmd->add_subcommand("minimal-graph", "graph of the Hasse diagram");
    minimal_cmd->add_option("lattice", minimal_graph_file, "lattice file")->required();
    minimal_cmd->callback([&] {
        const DistributiveLattice l = io::parse_lattice(io::load_file(minimal_graph_file));
        const Graph g = minimal_graph(l);
        std::string text = "m: " + std::to_string(g.m()) + "\n";
        for (auto [i, j] : g.edges()) text += "{" + std::to_string(i) + "," + std::to_string(j) + "}\n";
        emit(opt, io::to_json(g), text);
    });

    static std::string closure_file;
    auto* closure_cmd = lattice_cmd->add_subcommand("closure", "union/intersection closure");
    closure_cmd->add_option("sets", closure_file, "set family file")->required();
    closure_cmd->callback([&] {
        const auto family = io::parse_set_family(io::load_file(closure_file));
        const DistributiveLattice l = lattice_close(family.m, family.sets);
        emit(opt, io::to_json(l), sets_lines(l.elements()));
    });

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "graph operations");
    graph_cmd->require_subcommand(1);

    static std::string cliques_file;
    auto* cliques_cmd = graph_cmd->add_subcommand("cliques", "all and maximal cliques");
    cliques_cmd->add_option("graph", cliques_file, "graph file")->required();
    cliques_cmd->callback([&] {
        const auto cs = cliques(io::parse_graph(io::load_file(cliques_file)));
        json out = schema_object();
        json all = json::array(), maximal = json::array();
        for (SubsetMask s : cs.all) all.push_back(s.to_key());
        for (SubsetMask s : cs.maximal) maximal.push_back(s.to_key());
        out["all"] = all;
        out["maximal"] = maximal;
        emit(opt, out, "all:\n" + sets_lines(cs.all) + "maximal:\n" + sets_lines(cs.maximal));
    });

    static std::string comparability_file;
    auto* comp_cmd = graph_cmd->add_subcommand("comparability", "comparability graph of a poset");
    comp_cmd->add_option("poset", comparability_file, "poset file")->required();
    comp_cmd->callback([&] {
        const Graph g = comparability_graph(io::parse_poset(io::load_file(comparability_file)));
        std::string text = "m: " + std::to_string(g.m()) + "\n";
        for (auto [i, j] : g.edges()) text += "{" + std::to_string(i) + "," + std::to_string(j) + "}\n";
        emit(opt, io::to_json(g), text);
    });

    // ---- ci ----
    auto* ci_cmd = app.add_subcommand("ci", "conditional independence statements and binomials");
    ci_cmd->require_subcommand(1);

    static std::string ci_pairwise_file;
    auto* ci_pairwise = ci_cmd->add_subcommand("pairwise", "pairwise Markov statements");
    ci_pairwise->add_option("graph", ci_pairwise_file, "graph file")->required();
    ci_pairwise->callback([&] {
        const Graph g = io::parse_graph(io::load_file(ci_pairwise_file));
        const auto stmts = pairwise_statements(g);
        const auto bs = pairwise_binomials(g);
        json out = schema_object();
        out["statements"] = statements_json(stmts);
        out["binomials"] = binomials_json(bs);
        std::string text;
        for (const auto& s : stmts) text += s.to_string() + "\n";
        text += "binomials:\n";
        for (const auto& b : bs) text += "  " + b.to_string() + "\n";
        emit(opt, out, text);
    });

    static std::string ci_global_file;
    auto* ci_global = ci_cmd->add_subcommand("global", "saturated global Markov statements");
    ci_global->add_option("graph", ci_global_file, "graph file")->required();
    ci_global->callback([&] {
        const Graph g = io::parse_graph(io::load_file(ci_global_file));
        const auto stmts = saturated_global_statements(g);
        json out = schema_object();
        out["statements"] = statements_json(stmts);
        std::string text;
        for (const auto& s : stmts) text += s.to_string() + "\n";
        emit(opt, out, text);
    });

    static std::string ci_check_dist, ci_check_graph;
    static bool ci_check_global = false;
    auto* ci_check = ci_cmd->add_subcommand("check", "evaluate Markov binomials at a distribution");
    ci_check->add_option("distribution", ci_check_dist, "distribution file")->required();
    ci_check->add_option("graph", ci_check_graph, "graph file")->required();
    ci_check->add_flag("--global", ci_check_global, "check saturated global statements too");
    ci_check->callback([&] {
        const Distribution p = io::parse_distribution(io::load_file(ci_check_dist));
        const Graph g = io::parse_graph(io::load_file(ci_check_graph));
        if (p.m() != g.m()) throw ParseError("distribution and graph disagree on m");
        std::vector<Binomial> bs = pairwise_binomials(g);
        if (ci_check_global)
            for (const auto& stmt : saturated_global_statements(g))
                for (auto& b : ci_binomials(stmt, g.m())) bs.push_back(std::move(b));
        exit_code = report_result(opt, satisfies_all(bs, p));
    });

    // ---- param ----
    auto* param_cmd = app.add_subcommand("param", "parametrization matrices and support tests");
    param_cmd->require_subcommand(1);

    static MatrixKind matrix_kind = MatrixKind::AG;
    static std::string matrix_instance, support_file;
    static std::uint64_t realize_seed = 0;

    auto add_matrix_options = [&](CLI::App* cmd, bool with_support) {
        cmd->add_option("--matrix", matrix_kind, "matrix kind")
            ->transform(CLI::CheckedTransformer(matrix_kinds, CLI::ignore_case))
            ->required();
        cmd->add_option("instance", matrix_instance, "graph file (AG/BG) or lattice file (HIBI)")
            ->required();
        if (with_support)
            cmd->add_option("--support", support_file, "set family file of column labels")
                ->required();
    };

    auto* param_matrix = param_cmd->add_subcommand("matrix", "print the matrix");
    add_matrix_options(param_matrix, false);
    param_matrix->callback([&] {
        const ParamMatrix m = build_matrix(matrix_kind, matrix_instance);
        emit(opt, matrix_json(m), m.to_text());
    });

    auto* param_feasible = param_cmd->add_subcommand("feasible", "combinatorial support test");
    add_matrix_options(param_feasible, true);
    param_feasible->callback([&] {
        const ParamMatrix m = build_matrix(matrix_kind, matrix_instance);
        const auto family = io::parse_set_family(io::load_file(support_file));
        const auto res = is_feasible(m, family.sets);
        json out = schema_object();
        out["feasible"] = res.feasible;
        std::string text;
        if (res.feasible) {
            json h = json::array();
            text = "feasible\nH:\n";
            for (const auto& l : res.h_rows) {
                h.push_back(l.to_string());
                text += "  " + l.to_string() + "\n";
            }
            out["h_rows"] = h;
        } else {
            out["violating_column"] = res.violating_column->to_key();
            text = "not feasible\nviolating column: " + res.violating_column->to_string() + "\n";
        }
        emit(opt, out, text);
        exit_code = res.feasible ? 0 : 1;
    });

    auto* param_facial = param_cmd->add_subcommand("facial", "supporting-functional test");
    add_matrix_options(param_facial, true);
    param_facial->callback([&] {
        const ParamMatrix m = build_matrix(matrix_kind, matrix_instance);
        const auto family = io::parse_set_family(io::load_file(support_file));
        const auto res = is_facial(m, family.sets);
        json out = schema_object();
        out["facial"] = res.facial;
        std::string text;
        if (res.facial) {
            text = "facial\ncertificate:\n";
            json cert = json::object();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                cert[m.row_labels()[i].to_string()] = format_rational(res.certificate[i]);
                if (res.certificate[i] != 0)
                    text += "  c[" + m.row_labels()[i].to_string() +
                            "] = " + format_rational(res.certificate[i]) + "\n";
            }
            out["certificate"] = cert;
        } else {
            text = "not facial\nrefutation (nonnegative combination of outside columns "
                   "cancels against the support):\n";
            json ineq = json::object(), eq = json::object();
            for (const auto& [col, lam] : res.proof->ineq_multipliers) {
                ineq[col.to_key()] = format_rational(lam);
                text += "  lambda[" + col.to_string() + "] = " + format_rational(lam) + "\n";
            }
            for (const auto& [col, mu] : res.proof->eq_multipliers) {
                eq[col.to_key()] = format_rational(mu);
                text += "  mu[" + col.to_string() + "] = " + format_rational(mu) + "\n";
            }
            out["ineq_multipliers"] = ineq;
            out["eq_multipliers"] = eq;
        }
        emit(opt, out, text);
        exit_code = res.facial ? 0 : 1;
    });

    auto* param_realize = param_cmd->add_subcommand("realize", "construct a point with the support");
    add_matrix_options(param_realize, true);
    param_realize->add_option("--seed", realize_seed, "random seed")->default_val(0);
    param_realize->callback([&] {
        const ParamMatrix m = build_matrix(matrix_kind, matrix_instance);
        const auto family = io::parse_set_family(io::load_file(support_file));
        try {
            const Distribution d = realize_support(m, family.sets, realize_seed);
            std::string text;
            for (const auto& [s, v] : d.values())
                if (v != 0) text += s.to_string() + ": " + format_rational(v) + "\n";
            emit(opt, io::to_json(d), text);
        } catch (const NotFeasibleError& e) {
            json out = schema_object();
            out["error"] = e.what();
            emit(opt, out, std::string(e.what()) + "\n");
            exit_code = 1;
        }
    });

    // ---- factorize / verify ----
    static std::string fact_dist, fact_graph;
    auto* fact_cmd = app.add_subcommand("factorize", "factor a lattice-supported distribution");
    fact_cmd->add_option("distribution", fact_dist, "distribution file")->required();
    fact_cmd->add_option("graph", fact_graph, "graph file")->required();
    fact_cmd->callback([&] {
        const Distribution p = io::parse_distribution(io::load_file(fact_dist));
        const Graph g = io::parse_graph(io::load_file(fact_graph));
        try {
            const auto cert = factorize(p, g);
            emit(opt, io::to_json(cert), certificate_text(cert));
        } catch (const PairwiseViolationError& e) {
            json out = schema_object();
            out["violation"] = {{"set", SubsetMask(e.set_bits).to_key()}, {"i", e.i}, {"j", e.j}};
            emit(opt, out, std::string("does not factor: ") + e.what() + "\n");
            exit_code = 1;
        } catch (const MissingCoverEdgeError& e) {
            json out = schema_object();
            out["missing_cover_edge"] = {e.upper, e.lower};
            emit(opt, out, std::string("does not factor: ") + e.what() + "\n");
            exit_code = 1;
        }
    });

    static std::string verify_cert, verify_dist, verify_graph;
    auto* verify_cmd = app.add_subcommand("verify", "check a factorization certificate");
    verify_cmd->add_option("certificate", verify_cert, "certificate file")->required();
    verify_cmd->add_option("distribution", verify_dist, "distribution file")->required();
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->callback([&] {
        const Distribution p = io::parse_distribution(io::load_file(verify_dist));
        const Graph g = io::parse_graph(io::load_file(verify_graph));
        const auto cert = io::parse_certificate(io::load_file(verify_cert), g.m());
        const bool valid = verify_certificate(cert, p, g);
        json out = schema_object();
        out["valid"] = valid;
        emit(opt, out, valid ? "valid\n" : "invalid\n");
        exit_code = valid ? 0 : 1;
    });

    // ---- hibi ----
    auto* hibi_cmd = app.add_subcommand("hibi", "Hibi ideals of distributive lattices");
    hibi_cmd->require_subcommand(1);

    static std::string hibi_gens_file;
    auto* hibi_gens_cmd = hibi_cmd->add_subcommand("gens", "join-meet generators");
    hibi_gens_cmd->add_option("lattice", hibi_gens_file, "lattice file")->required();
    hibi_gens_cmd->callback([&] {
        const DistributiveLattice l = io::parse_lattice(io::load_file(hibi_gens_file));
        const auto gens = hibi_generators(l);
        json out = schema_object();
        out["generators"] = binomials_json(gens);
        std::string text;
        for (const auto& b : gens) text += b.to_string() + "\n";
        emit(opt, out, text);
    });

    static std::string hibi_eq_lattice, hibi_eq_graph;
    auto* hibi_eq = hibi_cmd->add_subcommand("check-equality",
                                             "lattice model ideal vs Hibi ideal");
    hibi_eq->add_option("lattice", hibi_eq_lattice, "lattice file")->required();
    hibi_eq->add_option("graph", hibi_eq_graph, "graph file")->required();
    hibi_eq->callback([&] {
        const DistributiveLattice l = io::parse_lattice(io::load_file(hibi_eq_lattice));
        const Graph g = io::parse_graph(io::load_file(hibi_eq_graph));
        const bool equal = check_hibi_equality(l, g);
        json out = schema_object();
        out["equal"] = equal;
        emit(opt, out, equal ? "equal\n" : "different\n");
        exit_code = equal ? 0 : 1;
    });

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "randomized end-to-end verifiers");
    oracle_cmd->require_subcommand(1);

    static SweepConfig sweep_config;
    static bool sweep_no_facial = false;
    auto* sweep_cmd = oracle_cmd->add_subcommand("sweep", "seeded verification sweep");
    sweep_cmd->add_option("--trials", sweep_config.trials, "number of trials")->default_val(200);
    sweep_cmd->add_option("--seed", sweep_config.seed, "root seed")->default_val(0);
    sweep_cmd->add_option("--m-min", sweep_config.m_min, "smallest ground set")->default_val(2);
    sweep_cmd->add_option("--m-max", sweep_config.m_max, "largest ground set")->default_val(6);
    sweep_cmd->add_flag("--no-facial", sweep_no_facial, "skip the facial LP checks");
    sweep_cmd->callback([&] {
        sweep_config.with_facial = !sweep_no_facial;
        if (sweep_config.m_min < 1 || sweep_config.m_max > kMaxGroundSet ||
            sweep_config.m_min > sweep_config.m_max)
            throw ParseError("field 'm-min'/'m-max': need 1 <= m-min <= m-max <= " +
                             std::to_string(kMaxGroundSet));
        exit_code = report_result(opt, oracle_sweep(sweep_config));
    });

    static std::string counterexample_p_empty = "1/2";
    auto* counter_cmd = oracle_cmd->add_subcommand("counterexample",
                                                   "the unnatural-lattice witness");
    counter_cmd->add_option("--p-empty", counterexample_p_empty,
                            "value at the empty set")->default_val("1/2");
    counter_cmd->callback([&] {
        const Rat p_empty = parse_rational(counterexample_p_empty);
        if (p_empty <= 0) throw ParseError("field 'p-empty': must be positive");
        exit_code = report_result(opt, verify_unnatural_counterexample(p_empty));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage errors
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
