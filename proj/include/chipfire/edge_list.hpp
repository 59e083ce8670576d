#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chipfire/graph.hpp"

namespace chipfire {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0-based vertex indices)
//
// Tokens are whitespace-separated; blank lines are ignored. Malformed input
// throws InputError with the offending line number.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::filesystem::path& file);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace chipfire
