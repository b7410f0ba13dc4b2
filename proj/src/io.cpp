#include "heavypath/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace heavypath {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
    return out;
}

std::optional<double> parse_double(const std::string& tok) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::optional<std::uint64_t> parse_uint(const std::string& tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

double checked_weight(const std::string& tok, std::size_t line_no) {
    auto w = parse_double(tok);
    if (!w || !std::isfinite(*w)) throw ParseError(line_no, "malformed weight '" + tok + "'");
    if (*w < 0.0) throw ParseError(line_no, "negative weight " + tok);
    return *w;
}

struct RawEdge {
    std::string a, b;
    double w;
    std::size_t line;
};

}  // namespace

WeightedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
    std::vector<RawEdge> raw;
    std::vector<std::string> order;  // first appearance
    std::unordered_map<std::string, bool> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok.size() != 3) {
            throw ParseError(line_no, "expected 'u v w', got " + std::to_string(tok.size()) +
                                          " fields");
        }
        double w = checked_weight(tok[2], line_no);
        if (tok[0] == tok[1]) throw ParseError(line_no, "self-loop on node " + tok[0]);
        for (int i = 0; i < 2; ++i) {
            if (seen.emplace(tok[i], true).second) order.push_back(tok[i]);
        }
        raw.push_back({tok[0], tok[1], w, line_no});
    }

    bool numeric = std::all_of(order.begin(), order.end(),
                               [](const std::string& s) { return parse_uint(s).has_value(); });
    if (numeric) {
        std::stable_sort(order.begin(), order.end(), [](const std::string& x, const std::string& y) {
            return *parse_uint(x) < *parse_uint(y);
        });
    }
    std::unordered_map<std::string, NodeId> id;
    for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<NodeId>(i);

    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, std::size_t> at;
    for (const RawEdge& r : raw) {
        NodeId u = id[r.a], v = id[r.b];
        auto key = edge_key(u, v);
        auto it = at.find(key);
        if (it != at.end()) {
            if (options.on_duplicate == DuplicatePolicy::reject) {
                throw ParseError(r.line, "duplicate edge (" + r.a + "," + r.b + ")");
            }
            edges[it->second].weight = std::max(edges[it->second].weight, r.w);
            continue;
        }
        at.emplace(key, edges.size());
        edges.push_back({std::min(u, v), std::max(u, v), r.w});
    }
    const std::size_t n = order.size();
    return WeightedGraph(n, std::move(edges), std::move(order));
}

WeightedGraph load_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> n;
    std::map<std::uint64_t, std::pair<double, std::size_t>> arcs;  // key -> (w, line)
    std::vector<std::uint64_t> key_order;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(std::move(t));
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n) throw ParseError(line_no, "second problem line");
            if (tok.size() != 4 || tok[1] != "sp") throw ParseError(line_no, "malformed header");
            auto nn = parse_uint(tok[2]);
            auto mm = parse_uint(tok[3]);
            if (!nn || !mm) throw ParseError(line_no, "malformed header");
            n = *nn;
            continue;
        }
        if (tok[0] != "a") throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
        if (!n) throw ParseError(line_no, "arc before problem line");
        if (tok.size() != 4) throw ParseError(line_no, "expected 'a u v w'");
        auto u = parse_uint(tok[1]);
        auto v = parse_uint(tok[2]);
        if (!u || !v || *u == 0 || *v == 0 || *u > *n || *v > *n) {
            throw ParseError(line_no, "node id out of range");
        }
        if (*u == *v) throw ParseError(line_no, "self-loop on node " + tok[1]);
        double w = checked_weight(tok[3], line_no);
        auto key = edge_key(static_cast<NodeId>(*u - 1), static_cast<NodeId>(*v - 1));
        auto it = arcs.find(key);
        if (it == arcs.end()) {
            arcs.emplace(key, std::make_pair(w, line_no));
            key_order.push_back(key);
        } else if (it->second.first != w) {
            throw ParseError(line_no, "reciprocal arc weight " + tok[3] +
                                          " disagrees with line " +
                                          std::to_string(it->second.second));
        }
    }
    if (!n) throw ParseError(line_no, "missing problem line");
    std::vector<Edge> edges;
    edges.reserve(key_order.size());
    for (auto key : key_order) {
        edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu),
                         arcs[key].first});
    }
    std::vector<std::string> labels(*n);
    for (std::uint64_t i = 0; i < *n; ++i) labels[i] = std::to_string(i + 1);
    return WeightedGraph(*n, std::move(edges), std::move(labels));
}

std::string format_weight(double w) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << format_weight(e.weight) << '\n';
    }
}

}  // namespace heavypath
