#pragma once

#include <optional>

#include <Eigen/Dense>

#include "eigsum/matrix.hpp"

namespace eigsum {

enum class EigenSolver {
    /// Householder tridiagonalization + implicit symmetric QR (Eigen).
    tridiagonal,
    /// Cyclic Jacobi rotations.
    jacobi,
};

/// Eigenvalues in ascending order; column j of `vectors` (when requested) is a
/// unit eigenvector for values[j].
struct EigenDecomposition {
    Eigen::VectorXd values;
    std::optional<Eigen::MatrixXd> vectors;
};

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below tolerance * ||M||_F.
    double tolerance = 1e-12;
    int max_sweeps = 64;
};

/// Full symmetric eigendecomposition. Failure to converge throws
/// ConvergenceError; nothing is returned silently.
EigenDecomposition eig_sym(const SymMatrix& m, bool want_vectors,
                           EigenSolver solver = EigenSolver::tridiagonal);

EigenDecomposition jacobi_eigen(const SymMatrix& m, bool want_vectors, const JacobiOptions& options = {});

}  // namespace eigsum
