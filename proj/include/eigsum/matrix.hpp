#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "eigsum/graph.hpp"

namespace eigsum {

// Dense real symmetric matrix. Writes go through set(), which mirrors the
// entry, so storage is symmetric bit for bit.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t order);

    /// Adopts `dense` after checking exact symmetry (throws InvalidArgument).
    static SymMatrix from_dense(const Eigen::MatrixXd& dense);

    std::size_t order() const noexcept { return static_cast<std::size_t>(data_.rows()); }

    double operator()(std::size_t i, std::size_t j) const {
        return data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    void set(std::size_t i, std::size_t j, double value);

    const Eigen::MatrixXd& dense() const noexcept { return data_; }

    double max_abs() const { return data_.cwiseAbs().maxCoeff(); }
    double frobenius() const { return data_.norm(); }

private:
    Eigen::MatrixXd data_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// Combinatorial Laplacian H = Deg - A (positive semidefinite).
SymMatrix laplacian(const Graph& g);

/// Renormalized Laplacian Deg^{-1/2} H Deg^{-1/2}. Throws InvalidArgument on
/// an isolated vertex.
SymMatrix normalized_laplacian(const Graph& g);

}  // namespace eigsum
