#include "heavypath/harness.hpp"

#include <charconv>
#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "heavypath/baselines.hpp"
#include "heavypath/io.hpp"
#include "heavypath/rank_join.hpp"

namespace heavypath {

const char* const kMetricsHeader =
    "algo,instance,length,k,ra_strategy,capacity,edge_reads,joins,paths_constructed,"
    "duplicates_discarded,depth,peak_stored_paths,wall_ms,status";
const char* const kTraceHeader = "event,l,theta,trigger";

std::string to_string(Algo a) {
    switch (a) {
        case Algo::dfs: return "dfs";
        case Algo::dp: return "dp";
        case Algo::greedy: return "greedy";
        case Algo::rankjoin: return "rankjoin";
        case Algo::heavypath: return "heavypath";
    }
    return "?";
}

Algo parse_algo(const std::string& name) {
    for (Algo a : {Algo::dfs, Algo::dp, Algo::greedy, Algo::rankjoin, Algo::heavypath}) {
        if (to_string(a) == name) return a;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

bool is_exact(Algo a) { return a != Algo::greedy; }

RunOutcome run_solver(const SortedEdgeList& edges, const RunConfig& config) {
    const WeightedGraph& g = edges.graph();
    RunOutcome out;
    switch (config.algo) {
        case Algo::dfs:
            out.result = dfs_topk(g, config.length, config.k);
            break;
        case Algo::dp:
            out.result = dp_topk(g, config.length, config.k, DpOptions{config.dp_max_states});
            break;
        case Algo::greedy: {
            if (config.k != 1) throw std::invalid_argument("greedy returns a single path (k = 1)");
            require_query(config.length, 1);
            GreedyResult r = greedy_path(g, config.length);
            out.result.metrics = r.metrics;
            if (r.path) out.result.paths.push_back(canonical(*r.path));
            out.result.status = r.path ? RunStatus::complete : RunStatus::exhausted;
            break;
        }
        case Algo::rankjoin: {
            RankJoinOptions opt;
            opt.path_cap = config.capacity;
            opt.trace = config.trace;
            out.result = rank_join_topk(edges, config.length, config.k, opt);
            break;
        }
        case Algo::heavypath: {
            HeavyPathOptions opt;
            opt.ra_strategy = config.ra_strategy;
            opt.capacity = config.capacity;
            opt.heuristic = config.capacity.has_value();
            opt.trace = config.trace;
            HeavyPathResult r = heavy_path_topk(edges, config.length, config.k, opt);
            out.heuristic = r.heuristic;
            out.result = std::move(r);
            break;
        }
    }
    return out;
}

MetricsRow make_metrics_row(const std::string& instance, const RunConfig& config,
                            const RunOutcome& outcome) {
    const RunMetrics& m = outcome.result.metrics;
    MetricsRow row;
    row.algo = to_string(config.algo);
    row.instance = instance;
    row.length = config.length;
    row.k = config.k;
    row.ra_strategy = config.algo == Algo::heavypath ? (config.ra_strategy ? "on" : "off") : "-";
    row.capacity = config.capacity ? std::to_string(*config.capacity) : "-";
    row.edge_reads = m.edge_reads;
    row.joins = m.joins;
    row.paths_constructed = m.paths_constructed;
    row.duplicates_discarded = m.duplicates_discarded;
    row.depth = m.depth;
    row.peak_stored_paths = m.peak_stored_paths;
    row.wall_ms = std::chrono::duration<double, std::milli>(m.wall_time).count();
    if (outcome.heuristic) {
        row.status = "heuristic";
    } else {
        row.status = outcome.result.status == RunStatus::complete ? "complete" : "exhausted";
    }
    return row;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw std::runtime_error("unterminated quote in CSV row");
    return fields;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error(std::string("bad ") + what + " value '" + s + "'");
    }
    return v;
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

}  // namespace

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
    out << kMetricsHeader << '\n';
    for (const MetricsRow& r : rows) {
        out << csv_field(r.algo) << ',' << csv_field(r.instance) << ',' << r.length << ','
            << r.k << ',' << r.ra_strategy << ',' << r.capacity << ',' << r.edge_reads << ','
            << r.joins << ',' << r.paths_constructed << ',' << r.duplicates_discarded << ','
            << r.depth << ',' << r.peak_stored_paths << ',' << format_weight(r.wall_ms) << ','
            << r.status << '\n';
    }
}

std::vector<MetricsRow> parse_metrics_csv(std::istream& in) {
    std::string line;
    if (!read_line(in, line) || line != kMetricsHeader) {
        throw std::runtime_error("metrics CSV header mismatch");
    }
    std::vector<MetricsRow> rows;
    while (read_line(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 14) throw std::runtime_error("metrics CSV row needs 14 fields");
        MetricsRow r;
        r.algo = f[0];
        r.instance = f[1];
        r.length = parse_number<std::uint64_t>(f[2], "length");
        r.k = parse_number<std::uint64_t>(f[3], "k");
        r.ra_strategy = f[4];
        r.capacity = f[5];
        r.edge_reads = parse_number<std::uint64_t>(f[6], "edge_reads");
        r.joins = parse_number<std::uint64_t>(f[7], "joins");
        r.paths_constructed = parse_number<std::uint64_t>(f[8], "paths_constructed");
        r.duplicates_discarded = parse_number<std::uint64_t>(f[9], "duplicates_discarded");
        r.depth = parse_number<std::uint64_t>(f[10], "depth");
        r.peak_stored_paths = parse_number<std::uint64_t>(f[11], "peak_stored_paths");
        r.wall_ms = parse_number<double>(f[12], "wall_ms");
        r.status = f[13];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_trace_csv(std::ostream& out, const ThresholdTrace& trace) {
    out << kTraceHeader << '\n';
    for (const ThresholdTraceRow& r : trace.rows()) {
        out << r.event << ',' << r.length << ',' << format_weight(r.theta) << ','
            << to_string(r.trigger) << '\n';
    }
}

std::vector<ThresholdTraceRow> parse_trace_csv(std::istream& in) {
    std::string line;
    if (!read_line(in, line) || line != kTraceHeader) {
        throw std::runtime_error("trace CSV header mismatch");
    }
    std::vector<ThresholdTraceRow> rows;
    while (read_line(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 4) throw std::runtime_error("trace CSV row needs 4 fields");
        ThresholdTraceRow r;
        r.event = parse_number<std::uint64_t>(f[0], "event");
        r.length = parse_number<std::size_t>(f[1], "l");
        r.theta = parse_number<double>(f[2], "theta");
        if (f[3] == "sorted-access") {
            r.trigger = TraceTrigger::sorted_access;
        } else if (f[3] == "path-return") {
            r.trigger = TraceTrigger::path_return;
        } else {
            throw std::runtime_error("bad trigger '" + f[3] + "'");
        }
        rows.push_back(r);
    }
    return rows;
}

namespace {

std::string describe(const Path& p) {
    std::string s = format_weight(p.weight()) + " [";
    for (std::size_t i = 0; i < p.nodes().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.nodes()[i]);
    }
    return s + "]";
}

}  // namespace

CompareReport compare_runs(const SortedEdgeList& edges, const std::string& instance,
                           const std::vector<CompareEntry>& entries) {
    std::vector<std::future<RunOutcome>> futures;
    futures.reserve(entries.size());
    for (const CompareEntry& e : entries) {
        futures.push_back(std::async(std::launch::async,
                                     [&edges, &e] { return e.solver(edges, e.config); }));
    }
    CompareReport report;
    for (auto& f : futures) report.outcomes.push_back(f.get());

    std::optional<std::size_t> reference;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        report.rows.push_back(make_metrics_row(instance, entries[i].config, report.outcomes[i]));
        if (!is_exact(entries[i].config.algo) || report.outcomes[i].heuristic) continue;
        if (!reference) {
            reference = i;
            continue;
        }
        const auto& want = report.outcomes[*reference].result.paths;
        const auto& got = report.outcomes[i].result.paths;
        const std::string who = to_string(entries[i].config.algo) + " vs " +
                                to_string(entries[*reference].config.algo);
        if (want.size() != got.size()) {
            report.mismatches.push_back(who + ": " + std::to_string(got.size()) + " paths vs " +
                                        std::to_string(want.size()));
            continue;
        }
        for (std::size_t r = 0; r < want.size(); ++r) {
            const Path a = canonical(got[r]);
            const Path b = canonical(want[r]);
            if (!(a == b)) {
                report.mismatches.push_back(who + " at rank " + std::to_string(r + 1) + ": " +
                                            describe(a) + " vs " + describe(b));
            }
        }
    }
    report.match = report.mismatches.empty();
    return report;
}

}  // namespace heavypath
