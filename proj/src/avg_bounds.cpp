#include "eigsum/avg_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

double dbl(std::size_t x) { return static_cast<double>(x); }

void require_kind(const Graph& g, const Spectrum& s, MatrixKind kind) {
    if (s.kind != kind || s.size() != g.order()) {
        throw InvalidArgument(std::string("expected the complete ") + to_string(kind) + " spectrum of the graph");
    }
}

void require_k(std::size_t k, std::size_t lo, std::size_t hi) {
    if (k < lo || k > hi) {
        throw InvalidArgument("k = " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    }
}

void require_count(std::span<const Edge> pairs, std::size_t expected) {
    if (pairs.size() != expected) {
        throw InvalidArgument("pair set must contain " + std::to_string(expected) + " ordered pairs, got " +
                              std::to_string(pairs.size()));
    }
}

// All ordered pairs sorted by integer cost, ties in lexicographic (u, v) order.
PairSet cheapest_pairs(std::size_t n, const std::function<std::int64_t(Vertex, Vertex)>& cost) {
    std::vector<std::pair<std::int64_t, Edge>> all;
    all.reserve(n * (n - 1));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) {
                all.push_back({cost(u, v), {u, v}});
            }
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    PairSet out;
    out.reserve(all.size());
    for (const auto& entry : all) {
        out.push_back(entry.second);
    }
    return out;
}

std::int64_t laplacian_cost_int(const Graph& g, Vertex u, Vertex v) {
    return static_cast<std::int64_t>(g.degree(u) + g.degree(v)) + (g.adjacent(u, v) ? 2 : 0);
}

}  // namespace

void validate_pairs(std::span<const Edge> pairs, std::size_t n) {
    std::vector<bool> seen(n * n, false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [u, v] = pairs[i];
        if (u >= n || v >= n) {
            throw InvalidArgument("pair " + std::to_string(i) + " has a vertex id out of range");
        }
        if (u == v) {
            throw InvalidArgument("pair " + std::to_string(i) + " repeats a vertex");
        }
        if (seen[u * n + v]) {
            throw InvalidArgument("pair " + std::to_string(i) + " is listed twice");
        }
        seen[u * n + v] = true;
    }
}

PrincipleCheck averaged_principle_check(const SymMatrix& m, const EigenDecomposition& eig, const TrialFamily& fam,
                                        std::size_t k, double tol) {
    const std::size_t n = m.order();
    if (!eig.vectors) {
        throw InvalidArgument("averaged principle needs eigenvectors");
    }
    if (static_cast<std::size_t>(eig.values.size()) != n) {
        throw InvalidArgument("eigendecomposition does not match the matrix order");
    }
    require_k(k, 1, n);
    if (fam.weights.size() != fam.vectors.size()) {
        throw InvalidArgument("trial family needs one weight per vector");
    }
    std::vector<bool> is_marked(fam.vectors.size(), false);
    for (std::size_t idx : fam.marked) {
        if (idx >= fam.vectors.size() || is_marked[idx]) {
            throw InvalidArgument("marked indices must be distinct and in range");
        }
        is_marked[idx] = true;
    }

    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::MatrixXd low = eig.vectors->leftCols(kk);
    Eigen::VectorXd weight_sums = Eigen::VectorXd::Zero(kk);  // W_j
    double norm_sum = 0.0;                                    // sum_{M0} w |f|^2
    double form_sum = 0.0;                                    // sum_{M0} w <Mf, f>
    double form_abs = 0.0;
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) {
        const Eigen::VectorXd& f = fam.vectors[i];
        const double w = fam.weights[i];
        if (static_cast<std::size_t>(f.size()) != n) {
            throw InvalidArgument("trial vector has the wrong dimension");
        }
        if (!(w > 0.0)) {
            throw InvalidArgument("trial weights must be positive");
        }
        weight_sums += w * (low.transpose() * f).cwiseAbs2();
        if (is_marked[i]) {
            const double form = f.dot(m.dense() * f);
            norm_sum += w * f.squaredNorm();
            form_sum += w * form;
            form_abs += w * std::abs(form);
        }
    }
    const Eigen::VectorXd mu = eig.values.head(kk);
    const double projected = mu.dot(weight_sums);
    const double scale = std::max(form_abs, mu.cwiseAbs().dot(weight_sums));

    PrincipleCheck out;
    out.coefficient = norm_sum - weight_sums.sum();
    out.rhs = form_sum - projected;

    if (k == n) {
        out.principle = not_applicable("averaged_principle", "k = n leaves no eigenvalue mu_k");
    } else {
        const double mu_k = eig.values(kk);
        out.principle = make_report("averaged_principle", Sense::upper, out.rhs, mu_k * out.coefficient, tol,
                                    scale + std::abs(mu_k) * (norm_sum + weight_sums.sum()));
    }
    out.principle.param("k", static_cast<std::int64_t>(k));

    const double c_tol = tol * (1.0 + norm_sum);
    const bool nonnegative = out.coefficient >= -c_tol;
    const bool usable = k == n || eig.values(kk) >= 0.0 || std::abs(out.coefficient) <= c_tol;
    if (nonnegative && usable) {
        out.sum_bound = make_report("averaged_sum", Sense::upper, form_sum, projected, tol, scale);
    } else {
        out.sum_bound = not_applicable("averaged_sum", nonnegative ? "mu_k < 0 with a positive coefficient"
                                                                   : "coefficient of mu_k is negative");
    }
    out.sum_bound.param("k", static_cast<std::int64_t>(k));
    return out;
}

double laplacian_pair_cost(const Graph& g, Vertex u, Vertex v) {
    return static_cast<double>(laplacian_cost_int(g, u, v));
}

BoundReport laplacian_pairsum_bound(const Graph& g, const Spectrum& lap, std::size_t k, std::span<const Edge> m0,
                                    double tol) {
    require_kind(g, lap, MatrixKind::laplacian);
    const std::size_t n = g.order();
    require_k(k, 2, n);
    require_count(m0, n * (k - 1));
    validate_pairs(m0, n);
    double total = 0.0;
    for (auto [u, v] : m0) {
        total += laplacian_pair_cost(g, u, v);
    }
    auto r = make_report("laplacian_pairs", Sense::upper, total / (2.0 * dbl(n)), partial_sum(lap, k), tol);
    r.param("k", static_cast<std::int64_t>(k));
    r.pairs.assign(m0.begin(), m0.end());
    return r;
}

PairSet select_pairs_laplacian(const Graph& g, std::size_t k, PairStrategy strategy) {
    const std::size_t n = g.order();
    require_k(k, 2, n);
    const std::size_t count = n * (k - 1);
    PairSet sorted = cheapest_pairs(n, [&](Vertex u, Vertex v) { return laplacian_cost_int(g, u, v); });
    if (strategy == PairStrategy::greedy) {
        sorted.resize(count);
        return sorted;
    }

    const std::size_t total = n * (n - 1);
    if (total > 30) {
        throw InvalidArgument("exhaustive pair search needs n(n-1) <= 30");
    }
    double combinations = 1.0;
    for (std::size_t i = 1; i <= count; ++i) {
        combinations = combinations * dbl(total - count + i) / dbl(i);
    }
    if (combinations > 1e7) {
        throw InvalidArgument("exhaustive pair search exceeds 10^7 candidate sets; use greedy");
    }
    // Candidates in lexicographic order so ties go to the first set found.
    PairSet pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) {
                pairs.push_back({u, v});
            }
        }
    }
    std::vector<std::int64_t> cost(total);
    for (std::size_t i = 0; i < total; ++i) {
        cost[i] = laplacian_cost_int(g, pairs[i].first, pairs[i].second);
    }
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto value = [&] {
        std::int64_t s = 0;
        for (std::size_t i : idx) {
            s += cost[i];
        }
        return s;
    };
    std::vector<std::size_t> best = idx;
    std::int64_t best_value = value();
    while (count > 0) {
        std::size_t i = count;
        while (i > 0 && idx[i - 1] == total - count + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < count; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
        const std::int64_t v = value();
        if (v < best_value) {
            best_value = v;
            best = idx;
        }
    }
    PairSet out;
    for (std::size_t i : best) {
        out.push_back(pairs[i]);
    }
    return out;
}

bool normalized_pairs_valid(const Graph& g, std::size_t k, std::span<const Edge> m0) {
    std::size_t degree_sum = 0;
    for (auto [u, v] : m0) {
        degree_sum += g.degree(u) + g.degree(v);
    }
    return degree_sum >= 4 * (k - 1) * g.size();
}

namespace {

// Shared preconditions of the renormalized bounds. Returns an explanation when
// the report is not applicable, or an empty string.
std::string normalized_inapplicable(const Graph& g, const Spectrum& norm, std::size_t k, std::span<const Edge> m0) {
    const std::size_t n = g.order();
    require_k(k, 1, n);
    validate_pairs(m0, n);
    if (g.min_degree() == 0) {
        return "graph has an isolated vertex";
    }
    require_kind(g, norm, MatrixKind::normalized);
    if (!normalized_pairs_valid(g, k, m0)) {
        return "pair set violates sum (d_u + d_v) >= 4 (k-1) m";
    }
    return {};
}

BoundReport normalized_report(std::string name, const Graph& g, const Spectrum& norm, std::size_t k,
                              std::span<const Edge> m0, double tol, bool squares,
                              const std::function<double(Vertex, Vertex)>& term) {
    BoundReport r;
    if (auto why = normalized_inapplicable(g, norm, k, m0); !why.empty()) {
        r = not_applicable(std::move(name), std::move(why));
    } else {
        double total = 0.0;
        for (auto [u, v] : m0) {
            total += term(u, v);
        }
        const double measured = squares ? partial_power_sum(norm, k, 2.0) : partial_sum(norm, k);
        r = make_report(std::move(name), Sense::upper, total / (4.0 * dbl(g.size())), measured, tol);
    }
    r.param("k", static_cast<std::int64_t>(k));
    r.pairs.assign(m0.begin(), m0.end());
    return r;
}

}  // namespace

BoundReport normalized_pairsum_bound(const Graph& g, const Spectrum& norm, std::size_t k, std::span<const Edge> m0,
                                     double tol) {
    return normalized_report("normalized_pairs", g, norm, k, m0, tol, false,
                             [&](Vertex u, Vertex v) { return laplacian_pair_cost(g, u, v); });
}

double normalized_square_term(const Graph& g, Vertex u, Vertex v) {
    const double du = dbl(g.degree(u));
    const double dv = dbl(g.degree(v));
    const double ru = std::sqrt(du / dv);
    const double rv = std::sqrt(dv / du);
    double deviation = 0.0;
    for (Vertex x : g.neighbors(u)) {
        const double t = (g.adjacent(x, v) ? ru : 0.0) - rv;
        deviation += t * t / dbl(g.degree(x));
    }
    for (Vertex x : g.neighbors(v)) {
        if (!g.adjacent(x, u)) {
            deviation += ru * ru / dbl(g.degree(x));
        }
    }
    return du + dv + (g.adjacent(u, v) ? 4.0 : 0.0) + deviation;
}

double normalized_square_term_printed(const Graph& g, Vertex u, Vertex v) {
    const double du = dbl(g.degree(u));
    const double dv = dbl(g.degree(v));
    double deviation = 0.0;
    for (Vertex x : g.neighbors(u)) {
        const double t = (g.adjacent(x, v) ? du / dv : 0.0) - dv / du;
        deviation += t * t / dbl(g.degree(x));
    }
    for (Vertex x : g.neighbors(v)) {
        if (!g.adjacent(x, u)) {
            deviation += (du / dv) * (du / dv) / dbl(g.degree(x));
        }
    }
    return du + dv + (g.adjacent(u, v) ? 4.0 : 0.0) + deviation;
}

BoundReport normalized_square_bound(const Graph& g, const Spectrum& norm, std::size_t k, std::span<const Edge> m0,
                                    double tol) {
    return normalized_report("normalized_squares", g, norm, k, m0, tol, true,
                             [&](Vertex u, Vertex v) { return normalized_square_term(g, u, v); });
}

BoundReport normalized_square_bound_printed(const Graph& g, const Spectrum& norm, std::size_t k,
                                            std::span<const Edge> m0, double tol) {
    auto r = normalized_report("normalized_squares_printed", g, norm, k, m0, tol, true,
                               [&](Vertex u, Vertex v) { return normalized_square_term_printed(g, u, v); });
    r.asserted = false;
    if (r.note.empty()) {
        r.note = "printed deviation term, evaluated for information only";
    }
    return r;
}

PairSet select_pairs_normalized(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    require_k(k, 1, n);
    const std::size_t target = 4 * (k - 1) * g.size();
    PairSet out;
    if (target == 0) {
        return out;
    }
    std::size_t degree_sum = 0;
    for (const Edge& e : cheapest_pairs(n, [&](Vertex u, Vertex v) { return laplacian_cost_int(g, u, v); })) {
        out.push_back(e);
        degree_sum += g.degree(e.first) + g.degree(e.second);
        if (degree_sum >= target) {
            return out;
        }
    }
    throw InvalidArgument("no pair set reaches sum (d_u + d_v) >= 4 (k-1) m");
}

std::pair<BoundReport, BoundReport> adjacency_sum_bound(const Graph& g, const Spectrum& adj, std::size_t k,
                                                        double tol) {
    require_kind(g, adj, MatrixKind::adjacency);
    const std::size_t n = g.order();
    require_k(k, 1, n - 1);
    const double b = dbl(std::min(n * k, 2 * g.size())) / dbl(n);
    double smallest = 0.0;
    double largest = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        (j + k >= n ? smallest : largest) += adj.values[j];
    }
    auto low = make_report("adjacency_sum_smallest", Sense::upper, -b, smallest, tol);
    auto high = make_report("adjacency_sum_largest", Sense::lower, b, largest, tol);
    low.param("k", static_cast<std::int64_t>(k));
    high.param("k", static_cast<std::int64_t>(k));
    return {std::move(low), std::move(high)};
}

BoundReport adjacency_sum_bound_literal(const Graph& g, const Spectrum& adj, std::size_t k, double tol) {
    require_kind(g, adj, MatrixKind::adjacency);
    const std::size_t n = g.order();
    require_k(k, 1, n - 1);
    const std::size_t kk = is_connected(g) ? k : std::min(k, g.size());
    double smallest = 0.0;
    for (std::size_t j = n - k; j < n; ++j) {
        smallest += adj.values[j];
    }
    auto r = make_report("adjacency_sum_literal", Sense::upper, -dbl(kk), smallest, tol);
    r.param("k", static_cast<std::int64_t>(k));
    r.asserted = false;
    r.note = "bound -k without the min(nk, 2m)/n correction, evaluated for information only";
    return r;
}

std::vector<std::uint32_t> common_neighbor_counts(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> a2(n * n, 0);
    for (Vertex x = 0; x < n; ++x) {
        const auto& nb = g.neighbors(x);
        for (Vertex y : nb) {
            for (Vertex z : nb) {
                ++a2[y * n + z];
            }
        }
    }
    return a2;
}

BoundReport adjacency_square_bound(const Graph& g, const Spectrum& adj, std::size_t k, std::span<const Edge> m0,
                                   double tol) {
    require_kind(g, adj, MatrixKind::adjacency);
    const std::size_t n = g.order();
    require_k(k, 1, n - 1);
    require_count(m0, n * k);
    validate_pairs(m0, n);
    const auto a2 = common_neighbor_counts(g);
    double total = 0.0;
    for (auto [u, v] : m0) {
        total += dbl(g.degree(u) + g.degree(v)) - 2.0 * a2[u * n + v];
    }
    const auto order = magnitude_order(adj);
    double measured = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        measured += adj.values[order[j]] * adj.values[order[j]];
    }
    auto r = make_report("adjacency_squares", Sense::upper, total / (2.0 * dbl(n)), measured, tol);
    r.param("k", static_cast<std::int64_t>(k));
    r.pairs.assign(m0.begin(), m0.end());
    return r;
}

PairSet select_pairs_adjacency(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    require_k(k, 1, n - 1);
    const auto a2 = common_neighbor_counts(g);
    PairSet sorted = cheapest_pairs(n, [&](Vertex u, Vertex v) {
        return static_cast<std::int64_t>(g.degree(u) + g.degree(v)) - 2 * static_cast<std::int64_t>(a2[u * n + v]);
    });
    sorted.resize(n * k);
    return sorted;
}

}  // namespace eigsum
