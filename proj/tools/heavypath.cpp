// Command-line front end: solve, compare and gen subcommands.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heavypath/generators.hpp"
#include "heavypath/harness.hpp"
#include "heavypath/io.hpp"

namespace hp = heavypath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitShort = 2;

struct InstanceFlags {
    std::string input;
    std::string format = "edgelist";
    std::string on_duplicate = "reject";
    bool normalize_lightest = false;
    std::size_t length = 0;
    std::size_t topk = 1;
    std::string ra_strategy = "on";
    std::optional<std::uint64_t> capacity;
    std::string metrics_file;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    cmd->add_option("--input", f.input, "Graph file ('-' reads stdin)")->required();
    cmd->add_option("--format", f.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd->add_option("--on-duplicate", f.on_duplicate, "Duplicate edge rows in edge lists")
        ->check(CLI::IsMember({"reject", "keep-max"}));
    cmd->add_flag("--normalize-lightest", f.normalize_lightest,
                  "Replace each weight w by 1 - w/w_max before solving");
    cmd->add_option("--length", f.length, "Path length L in edges")->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--topk", f.topk, "Number of paths")->check(CLI::PositiveNumber);
    cmd->add_option("--ra-strategy", f.ra_strategy, "End-edge random access filter (heavypath)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--capacity", f.capacity,
                    "Path capacity: heuristic takeover for heavypath, hard cap for rankjoin");
    cmd->add_option("--metrics", f.metrics_file, "Write metrics CSV to this file");
}

hp::WeightedGraph load_instance(const InstanceFlags& f) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (f.input != "-") {
        file.open(f.input);
        if (!file) throw std::runtime_error("cannot read '" + f.input + "'");
        in = &file;
    }
    hp::WeightedGraph g;
    if (f.format == "dimacs") {
        g = hp::load_dimacs(*in);
    } else {
        hp::LoadOptions opt;
        opt.on_duplicate = f.on_duplicate == "keep-max" ? hp::DuplicatePolicy::keep_max
                                                        : hp::DuplicatePolicy::reject;
        g = hp::load_edge_list(*in, opt);
    }
    return f.normalize_lightest ? hp::normalize_for_lightest(g) : g;
}

std::string instance_name(const InstanceFlags& f) {
    return f.input == "-" ? "stdin" : std::filesystem::path(f.input).stem().string();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

void check_flags(hp::Algo algo, const InstanceFlags& f, bool ra_given, bool trace_given) {
    const std::string name = hp::to_string(algo);
    if (ra_given && algo != hp::Algo::heavypath) {
        throw std::invalid_argument("--ra-strategy applies to heavypath only, not " + name);
    }
    if (f.capacity && algo != hp::Algo::heavypath && algo != hp::Algo::rankjoin) {
        throw std::invalid_argument("--capacity applies to heavypath and rankjoin only, not " +
                                    name);
    }
    if (trace_given && algo != hp::Algo::heavypath && algo != hp::Algo::rankjoin) {
        throw std::invalid_argument("--trace-thresholds needs a threshold algorithm, not " +
                                    name);
    }
    if (algo == hp::Algo::greedy && f.topk != 1) {
        throw std::invalid_argument("greedy returns a single path; use --topk 1");
    }
}

hp::RunConfig make_config(hp::Algo algo, const InstanceFlags& f) {
    hp::RunConfig c;
    c.algo = algo;
    c.length = f.length;
    c.k = f.topk;
    c.ra_strategy = f.ra_strategy == "on";
    c.capacity = f.capacity;
    return c;
}

void print_paths(const hp::WeightedGraph& g, const hp::RunOutcome& out) {
    if (out.heuristic) {
        std::cout << "# rho=" << hp::format_weight(out.heuristic->rho)
                  << " u_ell=" << hp::format_weight(out.heuristic->u_ell)
                  << " j=" << out.heuristic->j << '\n';
    }
    std::size_t rank = 1;
    for (const hp::Path& p : out.result.paths) {
        std::cout << "# rank=" << rank++ << '\n' << hp::format_path(g, p) << '\n';
    }
}

int run_solve(const InstanceFlags& f, const std::string& algo_name, bool ra_given,
              const std::string& trace_file) {
    const hp::Algo algo = hp::parse_algo(algo_name);
    check_flags(algo, f, ra_given, !trace_file.empty());
    const hp::WeightedGraph g = load_instance(f);
    const hp::SortedEdgeList edges(g);

    hp::ThresholdTrace trace(!trace_file.empty());
    hp::RunConfig config = make_config(algo, f);
    if (trace.enabled()) config.trace = &trace;
    const hp::RunOutcome out = hp::run_solver(edges, config);

    print_paths(g, out);
    if (!f.metrics_file.empty()) {
        auto os = open_output(f.metrics_file);
        hp::write_metrics_csv(os, {hp::make_metrics_row(instance_name(f), config, out)});
    }
    if (trace.enabled()) {
        auto os = open_output(trace_file);
        hp::write_trace_csv(os, trace);
    }
    return out.result.paths.size() < f.topk ? kExitShort : kExitOk;
}

// --ra-strategy is accepted here and applies to the heavypath entries only.
int run_compare(const InstanceFlags& f, const std::vector<std::string>& algo_names) {
    std::vector<hp::CompareEntry> entries;
    for (const std::string& name : algo_names) {
        const hp::Algo algo = hp::parse_algo(name);
        check_flags(algo, f, false, false);
        entries.push_back({make_config(algo, f), hp::run_solver});
    }
    const hp::WeightedGraph g = load_instance(f);
    const hp::SortedEdgeList edges(g);
    const hp::CompareReport report = hp::compare_runs(edges, instance_name(f), entries);

    std::cout << (report.match ? "MATCH" : "MISMATCH") << '\n';
    for (const std::string& m : report.mismatches) std::cout << "  " << m << '\n';
    hp::write_metrics_csv(std::cout, report.rows);
    if (!f.metrics_file.empty()) {
        auto os = open_output(f.metrics_file);
        hp::write_metrics_csv(os, report.rows);
    }
    return report.match ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Top-k heaviest simple paths of a fixed length"};
    app.require_subcommand(1);

    InstanceFlags solve_flags;
    std::string algo;
    std::string trace_file;
    auto* solve = app.add_subcommand("solve", "Run one algorithm and print ranked paths");
    add_instance_flags(solve, solve_flags);
    solve->add_option("--algo", algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"dfs", "dp", "greedy", "rankjoin", "heavypath"}));
    solve->add_option("--trace-thresholds", trace_file, "Write the threshold trace CSV");

    InstanceFlags compare_flags;
    std::vector<std::string> algos;
    auto* compare = app.add_subcommand("compare", "Run several algorithms and cross-check them");
    add_instance_flags(compare, compare_flags);
    compare->add_option("--algos", algos, "Comma-separated algorithms")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"dfs", "dp", "greedy", "rankjoin", "heavypath"}));

    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Write a generated instance as an edge list");
    gen->add_option("--output", gen_output, "Output file (default stdout)");
    gen->require_subcommand(1);
    std::size_t fig3_n = 1;
    auto* fig3 = gen->add_subcommand("fig3", "One heavy path and n light fan paths");
    fig3->add_option("--n", fig3_n, "Number of fan paths")->required();
    hp::RandomGraphOptions rnd;
    auto* random = gen->add_subcommand("random", "Seeded random graph");
    random->add_option("--nodes", rnd.node_count, "Node count");
    random->add_option("--p", rnd.edge_probability, "Edge probability")
        ->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", rnd.seed, "Random seed");
    random->add_option("--lo", rnd.weights.lo, "Lowest weight");
    random->add_option("--hi", rnd.weights.hi, "Highest weight");
    random->add_flag("--distinct-weights", rnd.distinct_weights, "Force pairwise distinct weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*solve) {
            const bool ra_given = solve->count("--ra-strategy") > 0;
            return run_solve(solve_flags, algo, ra_given, trace_file);
        }
        if (*compare) {
            return run_compare(compare_flags, algos);
        }
        if (*gen) {
            const hp::WeightedGraph g = *fig3 ? hp::generate_fig3(fig3_n) : hp::generate_random(rnd);
            if (gen_output.empty()) {
                hp::write_edge_list(std::cout, g);
            } else {
                auto os = open_output(gen_output);
                hp::write_edge_list(os, g);
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
