#include "eigsum/generators.hpp"

#include <set>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

void require_order(std::size_t n, std::size_t minimum, const char* family) {
    if (n < minimum) {
        throw InvalidArgument(std::string(family) + " needs n >= " + std::to_string(minimum) +
                              ", got " + std::to_string(n));
    }
}

}  // namespace

Graph gen_path(std::size_t n) {
    require_order(n, 2, "path");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(std::size_t n) {
    require_order(n, 3, "cycle");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_star(std::size_t n) {
    require_order(n, 2, "star");
    return gen_join(n, 1);
}

Graph gen_complete(std::size_t n) {
    require_order(n, 2, "complete graph");
    return gen_join(n, n - 1);
}

Graph gen_join(std::size_t n, std::size_t p) {
    require_order(n, 2, "join");
    if (p < 1 || p > n - 1) {
        throw InvalidArgument("join needs 1 <= p <= n-1, got p=" + std::to_string(p) +
                              " for n=" + std::to_string(n));
    }
    std::vector<Edge> edges;
    edges.reserve(p * (n - p) + p * (p - 1) / 2);
    for (Vertex c = n - p; c < n; ++c) {
        for (Vertex v = 0; v < c; ++v) {
            edges.emplace_back(v, c);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph gen_random_connected(std::size_t n, double edge_probability, std::uint64_t seed) {
    if (n == 0) {
        throw InvalidArgument("random graph needs n >= 1");
    }
    if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
        throw InvalidArgument("edge probability must lie in (0, 1]");
    }
    constexpr int kMaxAttempts = 1000;
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        edges.clear();
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.uniform() < edge_probability) {
                    edges.emplace_back(u, v);
                }
            }
        }
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) {
            return g;
        }
    }
    throw InvalidArgument("no connected graph after " + std::to_string(kMaxAttempts) +
                          " draws; use a larger edge probability");
}

std::vector<LatticePoint> gen_random_lattice_cluster(std::size_t nu, std::size_t n, std::uint64_t seed) {
    if (nu == 0 || n == 0) {
        throw InvalidArgument("lattice cluster needs nu >= 1 and n >= 1");
    }
    SplitMix64 rng(seed);
    std::vector<LatticePoint> points{LatticePoint(nu, 0)};
    std::set<LatticePoint> placed{points.front()};
    while (points.size() < n) {
        LatticePoint next = points[rng.below(points.size())];
        const std::size_t axis = rng.below(nu);
        next[axis] += (rng.next() & 1U) ? 1 : -1;
        if (placed.insert(next).second) {
            points.push_back(std::move(next));
        }
    }
    return points;
}

}  // namespace eigsum
