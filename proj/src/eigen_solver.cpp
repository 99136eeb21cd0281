#include "eigsum/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    const Eigen::Index n = a.rows();
    for (Eigen::Index j = 1; j < n; ++j) {
        sum += a.col(j).head(j).squaredNorm();
    }
    return std::sqrt(2.0 * sum);
}

// One rotation in the (p, q) plane chosen to annihilate a(p, q).
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd* v, Eigen::Index p, Eigen::Index q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    // Small-angle root of t^2 + 2 theta t - 1 = 0; the guard avoids overflow
    // of theta^2 when the diagonal gap dwarfs the coupling.
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (k == p || k == q) {
            continue;
        }
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = a(p, k) = c * akp - s * akq;
        a(k, q) = a(q, k) = s * akp + c * akq;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;

    if (v != nullptr) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p);
            const double vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
        }
    }
}

EigenDecomposition sorted(Eigen::VectorXd values, std::optional<Eigen::MatrixXd> vectors) {
    const auto n = static_cast<std::size_t>(values.size());
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
    EigenDecomposition out;
    out.values.resize(values.size());
    if (vectors) {
        out.vectors = Eigen::MatrixXd(vectors->rows(), vectors->cols());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto dst = static_cast<Eigen::Index>(i);
        out.values(dst) = values(order[i]);
        if (vectors) {
            out.vectors->col(dst) = vectors->col(order[i]);
        }
    }
    return out;
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& m, bool want_vectors, const JacobiOptions& options) {
    Eigen::MatrixXd a = m.dense();
    const Eigen::Index n = a.rows();
    std::optional<Eigen::MatrixXd> v;
    if (want_vectors) {
        v = Eigen::MatrixXd::Identity(n, n);
    }
    const double target = options.tolerance * a.norm();
    double off = off_diagonal_norm(a);
    for (int sweep = 0; off >= target && off > 0.0; ++sweep) {
        if (sweep == options.max_sweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge in " +
                                       std::to_string(options.max_sweeps) + " sweeps",
                                   off);
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) != 0.0) {
                    rotate(a, v ? &*v : nullptr, p, q);
                }
            }
        }
        off = off_diagonal_norm(a);
    }
    return sorted(a.diagonal(), std::move(v));
}

EigenDecomposition eig_sym(const SymMatrix& m, bool want_vectors, EigenSolver solver) {
    if (solver == EigenSolver::jacobi) {
        return jacobi_eigen(m, want_vectors);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m.dense(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw ConvergenceError("tridiagonal QR eigensolver did not converge",
                               std::numeric_limits<double>::quiet_NaN());
    }
    std::optional<Eigen::MatrixXd> vectors;
    if (want_vectors) {
        vectors = es.eigenvectors();
    }
    return EigenDecomposition{es.eigenvalues(), std::move(vectors)};
}

}  // namespace eigsum
