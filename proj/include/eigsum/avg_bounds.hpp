#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eigsum/eigen_solver.hpp"
#include "eigsum/graph.hpp"
#include "eigsum/matrix.hpp"
#include "eigsum/report.hpp"
#include "eigsum/spectrum.hpp"

namespace eigsum {

// Pair sets are sequences of distinct ordered pairs (u, v) with u != v.
using PairSet = std::vector<Edge>;

/// Throws InvalidArgument on a repeated pair, u == v, or an id >= n.
void validate_pairs(std::span<const Edge> pairs, std::size_t n);

// Finite trial family for the averaged variational principle: vectors f_z with
// positive weights w_z (the measure); `marked` lists the indices forming M0.
struct TrialFamily {
    std::vector<Eigen::VectorXd> vectors;
    std::vector<double> weights;
    std::vector<std::size_t> marked;
};

struct PrincipleCheck {
    /// c = sum_{M0} w |f|^2 - sum_{j<k} sum_M w |<f, psi_j>|^2
    double coefficient = 0.0;
    /// r = sum_{M0} w <Mf, f> - sum_{j<k} mu_j sum_M w |<f, psi_j>|^2
    double rhs = 0.0;
    /// mu_k c <= r. Not applicable when k = n (no mu_k).
    BoundReport principle;
    /// sum_{j<k} mu_j sum_M w |<f, psi_j>|^2 <= sum_{M0} w <Mf, f>, applicable
    /// once the left side of the principle is nonnegative.
    BoundReport sum_bound;
};

/// `eig` is the ascending eigendecomposition of `m` with eigenvectors.
PrincipleCheck averaged_principle_check(const SymMatrix& m, const EigenDecomposition& eig, const TrialFamily& fam,
                                        std::size_t k, double tol = kDefaultTolerance);

// Laplacian: sum_{j=1}^{k-1} lambda_j <= 1/(2n) sum_{M0} (d_u + d_v + 2 a_uv)
// for |M0| = n(k-1), 2 <= k <= n.

double laplacian_pair_cost(const Graph& g, Vertex u, Vertex v);

BoundReport laplacian_pairsum_bound(const Graph& g, const Spectrum& lap, std::size_t k, std::span<const Edge> m0,
                                    double tol = kDefaultTolerance);

enum class PairStrategy { greedy, exhaustive_small };

/// Exhaustive search is limited to graphs with n(n-1) <= 30 ordered pairs and
/// to at most 10^7 candidate sets.
PairSet select_pairs_laplacian(const Graph& g, std::size_t k, PairStrategy strategy = PairStrategy::greedy);

// Renormalized Laplacian, with M0 any set of ordered pairs satisfying
// sum_{M0} (d_u + d_v) >= 4 (k-1) m. Otherwise the reports are NOT_APPLICABLE.

bool normalized_pairs_valid(const Graph& g, std::size_t k, std::span<const Edge> m0);

BoundReport normalized_pairsum_bound(const Graph& g, const Spectrum& norm, std::size_t k, std::span<const Edge> m0,
                                     double tol = kDefaultTolerance);

/// ||Hhat b||^2 for b = sqrt(d_v) e_u - sqrt(d_u) e_v:
/// d_u + d_v + 4 a_uv + sum_x (1/d_x) (a_xv sqrt(d_u/d_v) - a_xu sqrt(d_v/d_u))^2.
double normalized_square_term(const Graph& g, Vertex u, Vertex v);

/// The same with the printed deviation term (a_xv d_u/d_v - a_xu d_v/d_u)^2.
double normalized_square_term_printed(const Graph& g, Vertex u, Vertex v);

/// Asserted bound on sum_{j=1}^{k-1} c_j^2 using the exact expectation value.
BoundReport normalized_square_bound(const Graph& g, const Spectrum& norm, std::size_t k, std::span<const Edge> m0,
                                    double tol = kDefaultTolerance);

/// The printed variant, reported without being asserted.
BoundReport normalized_square_bound_printed(const Graph& g, const Spectrum& norm, std::size_t k,
                                            std::span<const Edge> m0, double tol = kDefaultTolerance);

/// Greedy by d_u + d_v + 2 a_uv, extended until the validity condition holds.
PairSet select_pairs_normalized(const Graph& g, std::size_t k);

// Adjacency.

/// Sum of the k smallest alpha <= -min(nk, 2m)/n and, equivalently by trace
/// zero, sum of the n-k largest >= min(nk, 2m)/n. 1 <= k <= n-1.
std::pair<BoundReport, BoundReport> adjacency_sum_bound(const Graph& g, const Spectrum& adj, std::size_t k,
                                                        double tol = kDefaultTolerance);

/// The unconditional form "sum of the k smallest <= -k" (k replaced by
/// min(k, m) for disconnected graphs), reported without being asserted.
BoundReport adjacency_sum_bound_literal(const Graph& g, const Spectrum& adj, std::size_t k,
                                        double tol = kDefaultTolerance);

/// (A^2)_uv for all pairs, row-major n x n.
std::vector<std::uint32_t> common_neighbor_counts(const Graph& g);

/// sum of the k smallest squared alpha (magnitude order)
/// <= 1/(2n) sum_{M0} (d_u + d_v - 2 (A^2)_uv), |M0| = nk, 1 <= k <= n-1.
BoundReport adjacency_square_bound(const Graph& g, const Spectrum& adj, std::size_t k, std::span<const Edge> m0,
                                   double tol = kDefaultTolerance);

PairSet select_pairs_adjacency(const Graph& g, std::size_t k);

}  // namespace eigsum
