#include "eigsum/embedding.hpp"

#include <map>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

using PointIndex = std::map<LatticePoint, Vertex>;

PointIndex index_points(const std::vector<LatticePoint>& coords, std::size_t nu) {
    PointIndex index;
    for (std::size_t v = 0; v < coords.size(); ++v) {
        if (coords[v].size() != nu) {
            throw InputError("point has " + std::to_string(coords[v].size()) +
                                 " coordinates, expected " + std::to_string(nu),
                             v);
        }
        if (!index.emplace(coords[v], v).second) {
            throw InputError("duplicate lattice point", v);
        }
    }
    return index;
}

}  // namespace

bool lattice_neighbors(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) {
        return false;
    }
    std::size_t differing = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t diff = a[i] - b[i];
        if (diff == 0) {
            continue;
        }
        if (diff != 1 && diff != -1) {
            return false;
        }
        ++differing;
    }
    return differing == 1;
}

LatticeGraph gen_lattice_subgraph(std::vector<LatticePoint> coords, std::size_t nu, bool induced,
                                  std::span<const Edge> edges) {
    if (nu == 0) {
        throw InvalidArgument("lattice dimension must be at least 1");
    }
    if (coords.empty()) {
        throw InvalidArgument("lattice subgraph needs at least one point");
    }
    const PointIndex index = index_points(coords, nu);
    std::vector<Edge> chosen;
    if (induced) {
        for (std::size_t v = 0; v < coords.size(); ++v) {
            LatticePoint probe = coords[v];
            for (std::size_t axis = 0; axis < nu; ++axis) {
                probe[axis] += 1;
                if (auto it = index.find(probe); it != index.end()) {
                    chosen.emplace_back(v, it->second);
                }
                probe[axis] -= 1;
            }
        }
    } else {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u >= coords.size() || v >= coords.size()) {
                throw InputError("edge endpoint out of range", i);
            }
            if (!lattice_neighbors(coords[u], coords[v])) {
                throw InputError("edge endpoints are not lattice neighbors", i);
            }
            chosen.push_back(edges[i]);
        }
    }
    const std::size_t n = coords.size();
    Graph g = Graph::from_edge_list(n, chosen);
    return LatticeGraph{std::move(g), LatticeEmbedding{nu, std::move(coords), induced}};
}

void validate_embedding(const Graph& g, const LatticeEmbedding& emb) {
    if (emb.coords.size() != g.order()) {
        throw InvalidArgument("embedding has " + std::to_string(emb.coords.size()) +
                              " points for a graph on " + std::to_string(g.order()) + " vertices");
    }
    PointIndex index;
    try {
        index = index_points(emb.coords, emb.nu);
    } catch (const InputError& e) {
        throw InvalidArgument(std::string("invalid embedding: ") + e.what());
    }
    for (auto [u, v] : g.edges()) {
        if (!lattice_neighbors(emb.coords[u], emb.coords[v])) {
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} does not join lattice neighbors");
        }
    }
    if (!emb.induced) {
        return;
    }
    for (std::size_t v = 0; v < emb.coords.size(); ++v) {
        LatticePoint probe = emb.coords[v];
        for (std::size_t axis = 0; axis < emb.nu; ++axis) {
            probe[axis] += 1;
            if (auto it = index.find(probe); it != index.end() && !g.adjacent(v, it->second)) {
                throw InvalidArgument("induced embedding: lattice neighbors " + std::to_string(v) +
                                      " and " + std::to_string(it->second) + " are not adjacent");
            }
            probe[axis] -= 1;
        }
    }
}

}  // namespace eigsum
