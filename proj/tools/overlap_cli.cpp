#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "overlap/closed_forms.hpp"
#include "overlap/exact_search.hpp"
#include "overlap/graph.hpp"
#include "overlap/io.hpp"
#include "overlap/reductions.hpp"
#include "overlap/representation.hpp"
#include "overlap/solve.hpp"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitBudget = 2;
constexpr int kExitError = 3;

struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text).flush())
        throw CommandError("cannot write " + path);
}

std::string stem_of(const std::string& path) {
    size_t slash = path.find_last_of('/');
    size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path;
    return path.substr(0, dot);
}

std::string format_set(const overlap::ElementSet& s) {
    if (s.empty()) return "EMPTY";
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    return out.str();
}

int run_solve(const std::string& graph_path, bool exact_only, int max_universe,
              long long node_limit, std::string witness_path) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    overlap::SearchBudget budget{max_universe, node_limit};
    if (witness_path.empty()) witness_path = stem_of(graph_path) + ".rep";
    if (exact_only) {
        overlap::SearchOutcome out = overlap::overlap_number_exact(g, budget);
        if (out.status != overlap::SearchStatus::Exact) {
            std::cerr << "budget exceeded (max universe " << budget.max_universe
                      << ", node limit " << budget.node_limit << ")\n";
            return kExitBudget;
        }
        std::cout << *out.value << '\n';
        spit(witness_path, overlap::serialize_representation(*out.witness));
        std::cerr << "witness: " << witness_path << '\n';
        return 0;
    }
    overlap::SolveResult res = overlap::solve_auto(g, budget);
    if (res.exact)
        std::cout << res.value << '\n';
    else
        std::cout << "upper bound " << res.value << " (edge-clique cover)\n";
    spit(witness_path, overlap::serialize_representation(res.witness));
    std::cerr << "method: " << res.method << '\n';
    std::cerr << "witness: " << witness_path << '\n';
    return res.exact ? 0 : kExitBudget;
}

int run_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& out_path, const std::string& graph_out) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw CommandError(std::string("construct ") + family + ": " + what);
    };
    overlap::SizedRepresentation rep;
    overlap::Graph g;
    if (family == "clique") {
        need(params.size() == 1 && params[0] >= 1, "expected one vertex count >= 1");
        rep = overlap::clique_representation(params[0]);
        g = overlap::complete_graph(params[0]);
    } else if (family == "kpartite") {
        need(!params.empty(), "expected part sizes");
        rep = overlap::kpartite_representation(params);
        g = overlap::complete_multipartite(params);
    } else if (family == "path") {
        need(params.size() == 1 && params[0] >= 2, "expected one vertex count >= 2");
        g = overlap::path_graph(params[0]);
        rep = params[0] == 2 ? overlap::clique_representation(2)
                             : overlap::path_representation(params[0]);
    } else if (family == "cycle") {
        need(params.size() == 1 && params[0] >= 3, "expected one vertex count >= 3");
        g = overlap::cycle_graph(params[0]);
        rep = params[0] == 3 ? overlap::clique_representation(3)
                             : overlap::cycle_representation(params[0]);
    } else if (family == "caterpillar") {
        need(!params.empty(), "expected per-spine leaf counts");
        g = overlap::caterpillar_graph(params);
        int k = static_cast<int>(params.size());
        std::vector<int> spine(k);
        std::iota(spine.begin(), spine.end(), 0);
        std::vector<std::vector<int>> leaves(k);
        int next = k;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < params[i]; ++j) leaves[i].push_back(next++);
        rep = overlap::caterpillar_representation(g, spine, leaves);
    } else {
        throw CommandError("unknown family '" + family +
                           "' (clique|kpartite|path|cycle|caterpillar)");
    }
    if (!overlap::verify(g, rep.representation).valid)
        throw CommandError("internal error: constructed witness failed verify");
    std::string text = overlap::serialize_representation(rep.representation);
    if (out_path.empty())
        std::cout << text;
    else
        spit(out_path, text);
    if (!graph_out.empty()) spit(graph_out, overlap::serialize_graph(g));
    std::cerr << "size: " << rep.claimed_size << '\n';
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& rep_path,
               bool count_containments) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    overlap::Representation r = overlap::parse_representation(slurp(rep_path));
    overlap::VerifyReport report = overlap::verify(g, r);
    if (!report.valid) {
        std::cout << "invalid (" << report.violations.size() << " violations)\n";
        for (const auto& v : report.violations)
            std::cout << "violation: u=" << v.u << " v=" << v.v << " expected="
                      << (v.expected_edge ? "edge" : "non-edge")
                      << " observed=" << overlap::to_string(v.observed) << '\n';
        return kExitNo;
    }
    std::cout << "valid, size " << overlap::size(r) << '\n';
    if (count_containments)
        std::cout << "containments: " << overlap::containment_count(g, r) << '\n';
    return 0;
}

int run_extend(const std::string& graph_path, const std::string& rep_path,
               const std::vector<int>& targets, bool containment) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    overlap::Representation r = overlap::parse_representation(slurp(rep_path));
    std::optional<overlap::ElementSet> s =
        containment ? overlap::containment_extension_solve(g, r, targets)
                    : overlap::overlap_extension_solve(g, r, targets);
    if (!s) {
        std::cout << "NONE\n";
        return kExitNo;
    }
    std::cout << format_set(*s) << '\n';
    return 0;
}

int run_reduce_sat(const std::string& kind, const std::string& cnf_path,
                   std::string prefix) {
    overlap::CnfInstance f = overlap::parse_dimacs_cnf(slurp(cnf_path));
    if (kind == "3sat" && f.mode == overlap::CnfMode::NotAllEqual)
        throw CommandError("file declares 'c mode: nae' but subcommand is 3sat");
    f.mode = kind == "nae3sat" ? overlap::CnfMode::NotAllEqual
                               : overlap::CnfMode::Standard3Sat;
    overlap::ExtensionInstance inst = kind == "nae3sat"
                                          ? overlap::nae3sat_to_overlap_extension(f)
                                          : overlap::threesat_to_containment_extension(f);
    if (prefix.empty()) prefix = stem_of(cnf_path);
    spit(prefix + ".graph", overlap::serialize_graph(inst.graph));
    spit(prefix + ".rep", overlap::serialize_representation(inst.representation));
    spit(prefix + ".targets", overlap::serialize_targets(inst.target));
    std::cout << "kind: "
              << (inst.kind == overlap::ExtensionKind::Overlap ? "overlap" : "containment")
              << '\n';
    if (inst.presolved) std::cout << "presolved trivial instance\n";
    std::cout << "wrote " << prefix << ".graph " << prefix << ".rep " << prefix
              << ".targets\n";
    return 0;
}

int run_reduce_intnum(const std::string& graph_path, long long k, std::string prefix) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    auto [h, k2] = overlap::intersection_to_cf_overlap(g, k);
    if (prefix.empty()) prefix = stem_of(graph_path) + ".cf";
    spit(prefix + ".graph", overlap::serialize_graph(h));
    std::cout << "k' = " << k2 << '\n';
    std::cout << "wrote " << prefix << ".graph\n";
    return 0;
}

int run_reduce_cfl(const std::string& graph_path, long long k, int l,
                   std::string prefix) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    overlap::LContainmentInstance inst = overlap::cf_to_lcontainment(g, k, l);
    if (prefix.empty()) prefix = stem_of(graph_path) + ".lcont";
    spit(prefix + ".graph", overlap::serialize_graph(inst.graph));
    std::cout << "k' = " << inst.k << '\n';
    std::cout << "l = " << inst.l << '\n';
    std::cout << "wrote " << prefix << ".graph\n";
    return 0;
}

int run_oracle(const std::string& which, const std::string& graph_path,
               int max_universe, long long node_limit, const std::string& witness_path) {
    overlap::Graph g = overlap::parse_graph(slurp(graph_path));
    overlap::SearchBudget budget{max_universe, node_limit};
    overlap::SearchOutcome out;
    if (which == "overlap")
        out = overlap::overlap_number_exact(g, budget);
    else if (which == "cf")
        out = overlap::cf_overlap_number_exact(g, budget);
    else if (which == "intersection")
        out = overlap::intersection_number_exact(g, budget);
    else
        throw CommandError("unknown oracle '" + which + "' (overlap|cf|intersection)");
    if (out.status != overlap::SearchStatus::Exact) {
        std::cerr << "budget exceeded (max universe " << budget.max_universe
                  << ", node limit " << budget.node_limit << ")\n";
        return kExitBudget;
    }
    std::cout << *out.value << '\n';
    if (!witness_path.empty() && out.witness)
        spit(witness_path, overlap::serialize_representation(*out.witness));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlap numbers: solvers, constructions, verification, reductions"};
    app.require_subcommand(1);

    std::string graph_path, rep_path, cnf_path, out_path, witness_path, graph_out;
    std::string family, oracle_kind, reduce_kind;
    std::vector<int> params, targets;
    bool exact_only = false, containment = false, count_containments = false;
    int max_universe = 14;
    long long node_limit = 1'000'000'000;
    long long k_budget = 0;
    int l_budget = 0;

    CLI::App* solve = app.add_subcommand("solve", "overlap number of a graph");
    solve->add_option("graph", graph_path)->required();
    solve->add_flag("--exact", exact_only, "skip closed forms, search only");
    solve->add_option("--max-universe", max_universe);
    solve->add_option("--node-limit", node_limit);
    solve->add_option("--witness", witness_path, "witness output (default: <stem>.rep)");

    CLI::App* construct = app.add_subcommand("construct", "closed-form representation");
    construct->add_option("family", family)->required();
    construct->add_option("params", params)->required();
    construct->add_option("--out", out_path, "write representation here (default stdout)");
    construct->add_option("--graph-out", graph_out, "also write the host graph");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a representation");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("rep", rep_path)->required();
    verify_cmd->add_flag("--count-containments", count_containments);

    CLI::App* extend = app.add_subcommand("extend", "solve an extension instance");
    extend->add_option("graph", graph_path)->required();
    extend->add_option("rep", rep_path)->required();
    extend->add_option("--targets", targets)->delimiter(',');
    extend->add_flag("--containment", containment, "containment semantics");

    CLI::App* reduce = app.add_subcommand("reduce", "generate reduction instances");
    reduce->add_option("kind", reduce_kind, "nae3sat|3sat|intnum|cfl")->required();
    reduce->add_option("input", cnf_path)->required();
    reduce->add_option("--k", k_budget);
    reduce->add_option("--l", l_budget);
    reduce->add_option("--out", out_path, "output path prefix");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force exact values");
    oracle->add_option("which", oracle_kind, "overlap|cf|intersection")->required();
    oracle->add_option("graph", graph_path)->required();
    oracle->add_option("--max-universe", max_universe);
    oracle->add_option("--node-limit", node_limit);
    oracle->add_option("--witness", witness_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (solve->parsed())
            return run_solve(graph_path, exact_only, max_universe, node_limit, witness_path);
        if (construct->parsed()) return run_construct(family, params, out_path, graph_out);
        if (verify_cmd->parsed())
            return run_verify(graph_path, rep_path, count_containments);
        if (extend->parsed()) return run_extend(graph_path, rep_path, targets, containment);
        if (reduce->parsed()) {
            if (reduce_kind == "nae3sat" || reduce_kind == "3sat")
                return run_reduce_sat(reduce_kind, cnf_path, out_path);
            if (reduce_kind == "intnum")
                return run_reduce_intnum(cnf_path, k_budget, out_path);
            if (reduce_kind == "cfl")
                return run_reduce_cfl(cnf_path, k_budget, l_budget, out_path);
            throw CommandError("unknown reduction '" + reduce_kind +
                               "' (nae3sat|3sat|intnum|cfl)");
        }
        if (oracle->parsed())
            return run_oracle(oracle_kind, graph_path, max_universe, node_limit,
                              witness_path);
    } catch (const overlap::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
