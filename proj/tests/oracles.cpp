#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <cstdint>

namespace oracle {

using eigsum::Graph;
using eigsum::Vertex;

Eigen::MatrixXd adjacency(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
        a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
    }
    return a;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const Eigen::MatrixXd a = adjacency(g);
    Eigen::MatrixXd h = -a;
    h.diagonal() = a.rowwise().sum();
    return h;
}

Eigen::MatrixXd normalized(const Graph& g) {
    const Eigen::MatrixXd a = adjacency(g);
    const Eigen::VectorXd inv_sqrt = a.rowwise().sum().cwiseSqrt().cwiseInverse();
    return inv_sqrt.asDiagonal() * laplacian(g) * inv_sqrt.asDiagonal();
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

Eigen::VectorXd basis_vector(std::size_t n, std::size_t ell) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    if (ell == 0) {
        v.setConstant(1.0 / std::sqrt(static_cast<double>(n)));
        return v;
    }
    const double l = static_cast<double>(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        v(static_cast<Eigen::Index>(i)) = -1.0;
    }
    v(static_cast<Eigen::Index>(ell)) = l;
    return v / std::sqrt(l * (l + 1.0));
}

double reduced_sum(const Graph& g, const std::vector<Vertex>& subset) {
    const std::size_t n = g.order();
    std::vector<Vertex> perm = subset;
    for (Vertex v = 0; v < n; ++v) {
        if (std::find(subset.begin(), subset.end(), v) == subset.end()) {
            perm.push_back(v);
        }
    }
    const Eigen::MatrixXd h = laplacian(g);
    Eigen::MatrixXd hp(h.rows(), h.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            hp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                h(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j]));
        }
    }
    double total = 0.0;
    for (std::size_t ell = 1; ell < subset.size(); ++ell) {
        const Eigen::VectorXd e = basis_vector(n, ell);
        total += e.dot(hp * e);
    }
    return total;
}

double brute_l_sum(const Graph& g, std::size_t L, bool lower) {
    const std::size_t n = g.order();
    const std::size_t s = L + 1;
    // Bitmask enumeration; fine for the small n used in tests.
    double best = lower ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != s) {
            continue;
        }
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1U) {
                subset.push_back(v);
            }
        }
        const double value = reduced_sum(g, subset);
        best = lower ? std::min(best, value) : std::max(best, value);
    }
    return best;
}

double normalized_square_direct(const Graph& g, Vertex u, Vertex v) {
    const Eigen::MatrixXd hn = normalized(g);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(hn.rows());
    b(static_cast<Eigen::Index>(u)) = std::sqrt(static_cast<double>(g.degree(v)));
    b(static_cast<Eigen::Index>(v)) = -std::sqrt(static_cast<double>(g.degree(u)));
    return (hn * b).squaredNorm();
}

double brute_min_pair_cost(const Graph& g, std::size_t count) {
    const std::size_t n = g.order();
    const Eigen::MatrixXd h = laplacian(g);
    std::vector<double> cost;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) {
                Eigen::VectorXd b = Eigen::VectorXd::Zero(h.rows());
                b(static_cast<Eigen::Index>(u)) = 1.0;
                b(static_cast<Eigen::Index>(v)) = -1.0;
                cost.push_back(b.dot(h * b));
            }
        }
    }
    const std::size_t total = cost.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != count) {
            continue;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            if (mask >> i & 1U) {
                s += cost[i];
            }
        }
        best = std::min(best, s);
    }
    return best;
}

double head_sum(const Eigen::VectorXd& ascending, std::size_t k) {
    return ascending.head(static_cast<Eigen::Index>(k)).sum();
}

}  // namespace oracle
