#pragma once

#include <stdexcept>
#include <string>

#include "overlap/graph.hpp"
#include "overlap/reductions.hpp"
#include "overlap/representation.hpp"

namespace overlap {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

// Graph files: "p graph <n> <m>" header, then m lines "<u> <v>".
// '#' starts a comment line in both formats.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Representation files: one line per vertex, "<v>: <e1> <e2> ...",
// elements strictly ascending, every vertex 0..n-1 exactly once.
Representation parse_representation(const std::string& text);
std::string serialize_representation(const Representation& r);

// DIMACS CNF with exactly 3 literals per clause; a comment line
// "c mode: nae" switches the instance to NotAllEqual mode.
CnfInstance parse_dimacs_cnf(const std::string& text);

// Target vertex lists for extension instances: one line of ids.
std::vector<int> parse_targets(const std::string& text);
std::string serialize_targets(const std::vector<int>& targets);

}  // namespace overlap
