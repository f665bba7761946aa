#pragma once

#include <filesystem>
#include <iosfwd>

#include "spectral_entropy/graph.hpp"

namespace spectral_entropy {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n <N>
//   <u> <v>
//   ...
//
// Indices are 0-based, whitespace separated. Blank lines are ignored.

Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace spectral_entropy
