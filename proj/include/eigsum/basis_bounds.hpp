#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eigsum/graph.hpp"
#include "eigsum/matrix.hpp"
#include "eigsum/report.hpp"
#include "eigsum/spectrum.hpp"

namespace eigsum {

// Reduced basis of R^n (0-based):
//   eps^(0) = (1, ..., 1) / sqrt(n)
//   eps^(l) = (l e_l - e_0 - ... - e_{l-1}) / sqrt(l (l+1)),  1 <= l <= n-1.
struct ReducedBasisVector {
    std::size_t ell = 0;
    Eigen::VectorXd coeffs;
};

Eigen::VectorXd reduced_basis_vector(std::size_t n, std::size_t ell);
std::vector<ReducedBasisVector> reduced_basis(std::size_t n);

/// perm[new_label] = original vertex.
using VertexRelabeling = std::vector<Vertex>;

/// Throws InvalidArgument unless `perm` is a bijection on 0..n-1.
void validate_relabeling(std::span<const Vertex> perm, std::size_t n);

/// <eps^(l), M' eps^(l)> with M'(i, j) = M(perm[i], perm[j]), evaluated by the
/// closed-form sums over the first l+1 relabeled vertices and cross-checked
/// against the direct product (InconsistencyError beyond 1e-10).
double quad_form_diag(const SymMatrix& m, std::size_t ell, std::span<const Vertex> perm);

enum class Extremum { min, max };

// All bounds below read the measured eigenvalues from `lap`, which must be the
// complete Laplacian spectrum of `g`.

/// lambda_1 <= n/(n-1) min d  and  lambda_{n-1} >= n/(n-1) max d.
std::pair<BoundReport, BoundReport> fiedler_bounds(const Graph& g, const Spectrum& lap,
                                                   double tol = kDefaultTolerance);

/// min: lambda_1 + lambda_2 <= (n-1)/(n-2) min_{u != v} (d_u + d_v - 2 a_uv/(n-1));
/// max: lambda_{n-2} + lambda_{n-1} >= the same expression maximized.
BoundReport pair_sum_bound(const Graph& g, const Spectrum& lap, Extremum mode, double tol = kDefaultTolerance);

/// The pair-sum bound averaged over one vertex of the pair:
/// 2m/(n-2) + n(n-3)/((n-1)(n-2)) * (min or max) d.
BoundReport degree_averaged_pair_bound(const Graph& g, const Spectrum& lap, Extremum mode,
                                       double tol = kDefaultTolerance);

enum class LSide {
    lower,  // lambda_1 + ... + lambda_L <= B
    top,    // lambda_{n-L} + ... + lambda_{n-1} >= B
};

/// B(S) = L/(L+1) sum_{x in S} d_x + 1/(L+1) sum_{u != v in S} a_uv over
/// ordered pairs, for a subset S of L+1 distinct vertices.
double l_sum_value(const Graph& g, std::span<const Vertex> subset);

BoundReport l_sum_bound(const Graph& g, const Spectrum& lap, std::size_t L, std::span<const Vertex> subset,
                        LSide side, double tol = kDefaultTolerance);

/// The alternative printed form with L vertices, coefficients (n-L+1)/(n-L)
/// and 1/(n-L), and a plus-signed adjacency term. It is evaluated on the given
/// L-vertex subset and reported without being asserted.
BoundReport l_sum_verbatim(const Graph& g, const Spectrum& lap, std::size_t L, std::span<const Vertex> subset,
                           LSide side, double tol = kDefaultTolerance);

enum class SubsetStrategy { exhaustive, greedy_degree, degree_sorted };

inline constexpr double kExhaustiveSubsetBudget = 1e6;

/// Subset of `size` vertices optimizing the L-sum value for `side` (minimizing
/// for lower, maximizing for top). Ties go to the lexicographically smallest
/// subset (exhaustive) or the lowest vertex id (greedy, sorted).
std::vector<Vertex> select_subset(const Graph& g, std::size_t size, LSide side, SubsetStrategy strategy);

/// Greedy order for all n vertices. Its prefixes are the greedy-degree
/// subsets for every size.
std::vector<Vertex> greedy_degree_order(const Graph& g, LSide side);

namespace detail {
/// <eps^(j), M' eps^(l)> by the closed-form sums; cross-check use only.
double quad_form_offdiag(const SymMatrix& m, std::size_t j, std::size_t ell, std::span<const Vertex> perm);
}  // namespace detail

}  // namespace eigsum
