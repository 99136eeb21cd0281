#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eigsum/embedding.hpp"
#include "eigsum/graph.hpp"

namespace eigsum {

// Text formats. '#' starts a comment running to end of line; blank lines are
// ignored. Parse failures throw InputError whose index is the 1-based line.
//
// Edge list:     "n m", then m lines "u v" (0-based ids).
// Lattice file:  "n nu induced" (induced is 0 or 1), then n lines
//                "vid x_1 ... x_nu"; when induced = 0 a line "m" and m edge
//                lines follow.
// Pair file:     lines "u v", one ordered pair each.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_text(const Graph& g);

LatticeGraph read_lattice(std::istream& in);
LatticeGraph read_lattice_file(const std::string& path);
void write_lattice(std::ostream& out, const LatticeGraph& lg);

std::vector<Edge> read_pairs(std::istream& in);
std::vector<Edge> read_pairs_file(const std::string& path);

}  // namespace eigsum
