// Graph ingestion and serialization: whitespace edge lists and DIMACS .gr.

#pragma once

#include <iosfwd>
#include <string>

#include "heavypath/graph.hpp"

namespace heavypath {

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class DuplicatePolicy { reject, keep_max };

struct LoadOptions {
    DuplicatePolicy on_duplicate = DuplicatePolicy::reject;
};

// Lines are `u v w` with `#` starting a comment. Node labels are arbitrary
// tokens; when every label is a non-negative integer, ids follow numeric
// label order, otherwise order of first appearance.
WeightedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});

// `p sp n m`, `c ...`, `a u v w` with 1-based node ids. Reciprocal arcs
// collapse to one undirected edge and must agree on weight.
WeightedGraph load_dimacs(std::istream& in);

// Shortest decimal form that parses back to the identical double.
std::string format_weight(double w);

// One `u v w` line per edge in edge-index order, using node labels.
void write_edge_list(std::ostream& out, const WeightedGraph& g);

}  // namespace heavypath
