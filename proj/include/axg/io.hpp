#pragma once

#include "axg/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace axg {

// Input rejected with a 1-based line number and a reason.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

enum class Format { edge_list, dimacs };

// Returns edge_list / dimacs for "edgelist" / "dimacs"; throws
// std::invalid_argument otherwise.
Format parse_format(const std::string& name);

// Edge-list format:
//   first non-blank line: "<n> <m>"
//   then m lines "<token> <token>", arbitrary labels, mapped to ids 0..n-1 in
//   first-seen order. Vertices never mentioned get decimal labels.
// Rejects self loops, more than n distinct labels, malformed lines.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// DIMACS format: "c" comment lines, one "p edge <n> <m>" line, then m lines
// "e <u> <v>" with 1-based endpoints. Labels are the original decimal ids.
Graph read_dimacs(std::istream& in);
std::string write_dimacs(const Graph& g);

Graph read_graph(std::istream& in, Format f);
std::string write_graph(const Graph& g, Format f);

} // namespace axg
