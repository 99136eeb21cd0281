#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eigsum/eigen_solver.hpp"
#include "eigsum/graph.hpp"
#include "eigsum/matrix.hpp"
#include "eigsum/report.hpp"

namespace eigsum {

enum class MatrixKind { adjacency, laplacian, normalized };

const char* to_string(MatrixKind kind);

// Eigenvalues in canonical order: adjacency nonincreasing (alpha_0 is the
// largest), laplacian and normalized nondecreasing (lambda_0 = 0 for a
// connected graph). Column j of `vectors` belongs to values[j].
//
// Counting convention: partial sums always start at index 0. For Laplacians
// lambda_0 = 0, so partial_sum(s, k) = lambda_1 + ... + lambda_{k-1}, the sum
// of the k-1 smallest nontrivial eigenvalues.
struct Spectrum {
    MatrixKind kind = MatrixKind::laplacian;
    std::vector<double> values;
    std::optional<Eigen::MatrixXd> vectors;

    std::size_t size() const noexcept { return values.size(); }
};

SymMatrix matrix_of(const Graph& g, MatrixKind kind);

/// Reorders an ascending decomposition into the canonical order for `kind`.
Spectrum canonical(MatrixKind kind, EigenDecomposition eig);

/// Back to ascending order, the convention of the variational principle.
EigenDecomposition ascending(const Spectrum& s);

Spectrum spectrum(const Graph& g, MatrixKind kind, bool want_vectors = false,
                  EigenSolver solver = EigenSolver::tridiagonal);

/// Sum of the first k canonical values; 1 <= k <= n.
double partial_sum(const Spectrum& s, std::size_t k);
/// Sum of the first k canonical values, each raised to the power p.
double partial_power_sum(const Spectrum& s, std::size_t k, double p);

/// Indices sorted by |value| ascending, ties by index.
std::vector<std::size_t> magnitude_order(const Spectrum& s);

/// sum_i |lambda_i - 2m/n|, cross-checked against 2 sum_i (2m/n - lambda_i)_+;
/// throws InconsistencyError if the two disagree beyond 1e-9 (relative).
double laplacian_energy(const Spectrum& s, std::size_t m, std::size_t n);

struct RieszValue {
    double z = 0.0;
    double power = 1.0;
    double value = 0.0;
};

/// sum_j (z - lambda_j)_+^p. At p = 0 each term is the indicator of lambda_j < z.
RieszValue riesz_mean(const Spectrum& s, double z, double p);

/// Checks sum lambda = 2m and sum lambda^2 = 2m + M1(G) on a Laplacian spectrum.
std::pair<BoundReport, BoundReport> trace_identity_report(const Graph& g, const Spectrum& s,
                                                          double tol = kDefaultTolerance);

/// CSV "index,value" with 17 significant digits.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

}  // namespace eigsum
