#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eigsum/embedding.hpp"
#include "eigsum/graph.hpp"
#include "eigsum/report.hpp"
#include "eigsum/spectrum.hpp"

namespace eigsum {

// Notation: m edges, n vertices, lattice dimension nu, kappa = k/n.

/// sin(x)/x with sinc(0) = 1; Taylor series for |x| < 1e-4.
double sinc(double x);

/// d_par[x]: axes along which both lattice neighbors x +- e_axis are joined to
/// x by an edge of g.
std::vector<std::size_t> collinear_counts(const Graph& g, const LatticeEmbedding& emb);

/// 2 m kappa (1 - sinc(pi kappa^{1/nu})), upper bound on lambda_0 + ... + lambda_{k-1}.
double weyl_sum_bound(std::size_t m, std::size_t n, std::size_t nu, std::size_t k);

/// Both sides of lambda_k (n a^nu - k) <= 2 m a^nu (1 - sinc(pi a)) - sum_{j<k} lambda_j:
/// coefficient = n a^nu - k, envelope = 2 m a^nu (1 - sinc(pi a)).
struct WeylAtA {
    double coefficient = 0.0;
    double envelope = 0.0;
};
WeylAtA weyl_sum_bound_at_a(std::size_t m, std::size_t n, std::size_t nu, std::size_t k, double a);

/// 2 m kappa, dimension free.
double simple_lattice_bound(std::size_t m, std::size_t n, std::size_t k);

/// (pi^2 m / 3) kappa^{1 + 2/nu}.
double weyl_power_bound(std::size_t m, std::size_t n, std::size_t nu, std::size_t k);

struct SquareSumInputs {
    std::size_t n = 0;
    std::size_t nu = 1;
    double trace_h2 = 0.0;      // 2m + M1(G)
    double degree_sum = 0.0;    // 2m
    double collinear_sum = 0.0; // sum_x d_par[x]
};

SquareSumInputs square_sum_inputs(const Graph& g, const LatticeEmbedding& emb);

/// Upper bound on lambda_0^2 + ... + lambda_{k-1}^2 with s = sinc(pi kappa^{1/nu}),
/// c = cos(pi kappa^{1/nu}):
///   kappa (1-s)^2 Tr(H^2) + 2 kappa s (1-s) sum d + 2 kappa s (c - s) sum d_par.
double weyl_sq_bound(const SquareSumInputs& in, std::size_t k);

/// Variant whose last term reads -2 kappa s (1 - c) sum d_par.
double weyl_sq_bound_printed(const SquareSumInputs& in, std::size_t k);

/// z n a^nu - 2 m a^nu (1 - sinc(pi a)), lower bound on the Riesz mean sum (z - lambda)_+.
double riesz_lower_bound_at_a(double z, std::size_t m, std::size_t n, std::size_t nu, double a);

/// (2/nu)(m pi^2/3) X^{1+nu/2} with X = nu/(nu+2) * 3 n z/(m pi^2), the maximum
/// over a of z n a^nu - (pi^2 m/3) a^{nu+2}. For X > 1 the maximizer leaves
/// [0, 1] and the value at a = 1, z n - pi^2 m/3, is returned instead.
/// Cross-checked against a golden-section maximization.
double riesz_lower_bound(double z, std::size_t m, std::size_t n, std::size_t nu);

struct LaplacianEnergyBound {
    double argmax = 0.0;      // maximizer of a^nu sinc(pi a) on [0, 1]
    double max_form = 0.0;    // 4 m max_a a^nu sinc(pi a)
    double closed_form = 0.0; // 8m/(nu+2) (6 nu/(pi^2 (nu+2)))^{nu/2}
    bool golden = true;       // false when the grid fallback was used
};

LaplacianEnergyBound le_lower_bound(std::size_t m, std::size_t nu);

/// Maximizer of f on [lo, hi] by golden-section search, assuming unimodality.
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

/// Partial-sum domination sum_{j<k} mu_j <= sum_{j<k} mseq_j (+ tolerance) for
/// every k. Both sequences must be nondecreasing (InvalidArgument otherwise).
bool karamata_check(const std::vector<double>& mu, const std::vector<double>& mseq,
                    double tol = kDefaultTolerance);

enum class WeylSequenceForm {
    /// m_j = S(j+1) - S(j) for the power envelope S; partial sums telescope.
    difference,
    /// m_j = (1 + 2/nu) pi^2 m j^{2/nu} / (3 n^{1+2/nu}), the derivative of S at j.
    derivative,
};

std::vector<double> weyl_sequence(std::size_t n, std::size_t m, std::size_t nu,
                                  WeylSequenceForm form = WeylSequenceForm::difference);

struct TransformFunction {
    enum class Kind { sqrt, exp_neg, riesz } kind = Kind::sqrt;
    double t = 1.0;
    double p = 1.0;

    double operator()(double x) const;
    /// Concave nondecreasing (Phi) functions bound from above; convex
    /// nonincreasing (Psi) ones from below.
    bool concave() const { return kind == Kind::sqrt; }
    std::string label() const;
};

BoundReport karamata_transform_bound(const Spectrum& lap, std::size_t m, std::size_t nu,
                                     const TransformFunction& fn, std::size_t k,
                                     WeylSequenceForm form = WeylSequenceForm::difference,
                                     double tol = kDefaultTolerance);

struct EmbedVerdict {
    std::size_t nu = 0;
    bool excluded = false;
    std::optional<std::size_t> first_violation_k;
    std::optional<double> slack;
    std::string violated;  // name of the first violated bound
};

/// Necessary conditions for a connected graph to be a subgraph of Z^nu, for
/// nu = 1..nu_max. Uses only bounds depending on n, m and nu.
std::vector<EmbedVerdict> embeddability_certificate(const Graph& g, const Spectrum& lap, std::size_t nu_max,
                                                    double tol = kDefaultTolerance);

struct LatticeSuiteOptions {
    std::vector<double> a_grid;  // default 0.1, 0.2, ..., 1.0
    std::vector<double> z_grid;  // default 21 points on [0, 2m] plus fractions of 2m/n
    bool include_printed = true;
};

/// Full lattice suite for a graph with a valid embedding.
std::vector<BoundReport> verify_embedding(const Graph& g, const LatticeEmbedding& emb, const Spectrum& lap,
                                          const LatticeSuiteOptions& options = {}, double tol = kDefaultTolerance);

}  // namespace eigsum
