#include "eigsum/graph.hpp"

#include <algorithm>
#include <queue>

#include "eigsum/error.hpp"

namespace eigsum {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
    if (n == 0) {
        throw InvalidArgument("graph must have at least one vertex");
    }
    Graph g;
    g.n_ = n;
    g.bits_.assign(n * n, 0);
    g.adj_.resize(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u >= n || v >= n) {
            throw InputError("vertex id out of range [0, " + std::to_string(n) + ")", i);
        }
        if (u == v) {
            throw InputError("self-loop on vertex " + std::to_string(u), i);
        }
        if (g.bits_[u * n + v]) {
            continue;
        }
        g.bits_[u * n + v] = g.bits_[v * n + u] = 1;
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.degrees_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::sort(g.adj_[v].begin(), g.adj_[v].end());
        g.degrees_[v] = g.adj_[v].size();
    }
    return g;
}

std::size_t Graph::min_degree() const {
    return *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
    return *std::max_element(degrees_.begin(), degrees_.end());
}

std::uint64_t zagreb_index(const Graph& g) {
    std::uint64_t total = 0;
    for (auto d : g.degrees()) {
        total += static_cast<std::uint64_t>(d) * d;
    }
    return total;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == n;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> pairs;
    pairs.reserve(n * (n - 1) / 2 - g.size());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edge_list(n, pairs);
}

}  // namespace eigsum
