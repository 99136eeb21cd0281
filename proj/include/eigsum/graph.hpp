#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eigsum {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Immutable after construction. Edges are stored once with u < v, sorted
// lexicographically, so two graphs with the same edge set compare equal
// regardless of the order the edges were supplied in.
class Graph {
public:
    /// Builds a graph from unordered pairs. Duplicates (in either orientation)
    /// are merged; self-loops and out-of-range ids throw InputError carrying
    /// the index of the offending pair.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

    bool adjacent(Vertex u, Vertex v) const { return u != v && bits_[u * n_ + v] != 0; }

    std::size_t min_degree() const;
    std::size_t max_degree() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    Graph() = default;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::size_t> degrees_;
    std::vector<std::uint8_t> bits_;
};

/// First Zagreb index: sum of squared degrees.
std::uint64_t zagreb_index(const Graph& g);

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

}  // namespace eigsum
