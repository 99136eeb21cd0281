#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigsum/graph.hpp"

namespace eigsum {

using LatticePoint = std::vector<std::int64_t>;

// Placement of a graph's vertices at distinct points of the cubic lattice Z^nu.
//
// Every graph edge joins two points at l1-distance 1. When `induced` is set
// the converse also holds: every pair of placed points at distance 1 is an
// edge of the graph.
struct LatticeEmbedding {
    std::size_t nu = 1;
    std::vector<LatticePoint> coords;
    bool induced = true;
};

struct LatticeGraph {
    Graph graph;
    LatticeEmbedding embedding;
};

/// True when the two points differ by +-1 in exactly one axis.
bool lattice_neighbors(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Builds the graph on the given points. With `induced` every neighbor pair
/// becomes an edge; otherwise exactly `edges` are used and each must join
/// lattice neighbors. Duplicate points or non-neighbor edges throw InputError.
LatticeGraph gen_lattice_subgraph(std::vector<LatticePoint> coords, std::size_t nu, bool induced,
                                  std::span<const Edge> edges = {});

/// Throws InvalidArgument unless `emb` is injective and edge-consistent with `g`.
void validate_embedding(const Graph& g, const LatticeEmbedding& emb);

}  // namespace eigsum
