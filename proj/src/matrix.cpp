#include "eigsum/matrix.hpp"

#include <cmath>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

SymMatrix::SymMatrix(std::size_t order) {
    if (order == 0) {
        throw InvalidArgument("matrix order must be positive");
    }
    const auto n = static_cast<Eigen::Index>(order);
    data_ = Eigen::MatrixXd::Zero(n, n);
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& dense) {
    if (dense.rows() == 0 || dense.rows() != dense.cols()) {
        throw InvalidArgument("symmetric matrix must be square and non-empty");
    }
    if (dense != dense.transpose()) {
        throw InvalidArgument("matrix is not exactly symmetric");
    }
    SymMatrix m(static_cast<std::size_t>(dense.rows()));
    m.data_ = dense;
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    const auto r = static_cast<Eigen::Index>(i);
    const auto c = static_cast<Eigen::Index>(j);
    data_(r, c) = value;
    data_(c, r) = value;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (auto [u, v] : g.edges()) {
        a.set(u, v, 1.0);
    }
    return a;
}

SymMatrix laplacian(const Graph& g) {
    SymMatrix h(g.order());
    for (auto [u, v] : g.edges()) {
        h.set(u, v, -1.0);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        h.set(v, v, static_cast<double>(g.degree(v)));
    }
    return h;
}

SymMatrix normalized_laplacian(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            throw InvalidArgument("normalized Laplacian undefined: vertex " + std::to_string(v) +
                                  " has degree zero");
        }
    }
    SymMatrix h(g.order());
    for (auto [u, v] : g.edges()) {
        h.set(u, v, -1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v))));
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        h.set(v, v, 1.0);
    }
    return h;
}

}  // namespace eigsum
