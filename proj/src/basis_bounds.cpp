#include "eigsum/basis_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

double agreement_tolerance(const SymMatrix& m, double a, double b) {
    return 1e-10 * std::max({1.0, std::abs(a), std::abs(b), m.max_abs()});
}

void require_laplacian(const Graph& g, const Spectrum& lap) {
    if (lap.kind != MatrixKind::laplacian || lap.size() != g.order()) {
        throw InvalidArgument("expected the complete Laplacian spectrum of the graph");
    }
}

double dbl(std::size_t x) { return static_cast<double>(x); }

// Integer form of (L+1) * B(S): L * sum d + number of ordered adjacent pairs.
std::uint64_t scaled_l_sum(const Graph& g, std::span<const Vertex> subset) {
    const std::uint64_t L = subset.size() - 1;
    std::uint64_t degrees = 0;
    std::uint64_t adjacent = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        degrees += g.degree(subset[i]);
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            adjacent += g.adjacent(subset[i], subset[j]) ? 2 : 0;
        }
    }
    return L * degrees + adjacent;
}

void validate_subset(const Graph& g, std::span<const Vertex> subset) {
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : subset) {
        if (v >= g.order() || seen[v]) {
            throw InvalidArgument("subset must hold distinct valid vertex ids");
        }
        seen[v] = true;
    }
}

double binomial(std::size_t n, std::size_t k) {
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * dbl(n - k + i) / dbl(i);
    }
    return c;
}

std::string side_suffix(LSide side) { return side == LSide::lower ? "lower" : "top"; }

}  // namespace

Eigen::VectorXd reduced_basis_vector(std::size_t n, std::size_t ell) {
    if (n == 0 || ell >= n) {
        throw InvalidArgument("reduced basis index out of range");
    }
    const auto size = static_cast<Eigen::Index>(n);
    if (ell == 0) {
        return Eigen::VectorXd::Constant(size, 1.0 / std::sqrt(dbl(n)));
    }
    Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
    const double scale = 1.0 / std::sqrt(dbl(ell) * dbl(ell + 1));
    const auto l = static_cast<Eigen::Index>(ell);
    v.head(l).setConstant(-scale);
    v(l) = dbl(ell) * scale;
    return v;
}

std::vector<ReducedBasisVector> reduced_basis(std::size_t n) {
    std::vector<ReducedBasisVector> basis;
    basis.reserve(n);
    for (std::size_t ell = 0; ell < n; ++ell) {
        basis.push_back({ell, reduced_basis_vector(n, ell)});
    }
    return basis;
}

void validate_relabeling(std::span<const Vertex> perm, std::size_t n) {
    if (perm.size() != n) {
        throw InvalidArgument("relabeling must list every vertex once");
    }
    std::vector<bool> seen(n, false);
    for (Vertex v : perm) {
        if (v >= n || seen[v]) {
            throw InvalidArgument("relabeling is not a permutation");
        }
        seen[v] = true;
    }
}

double quad_form_diag(const SymMatrix& m, std::size_t ell, std::span<const Vertex> perm) {
    const std::size_t n = m.order();
    validate_relabeling(perm, n);
    if (ell < 1 || ell >= n) {
        throw InvalidArgument("quad_form_diag needs 1 <= ell <= n-1");
    }
    auto mp = [&](std::size_t i, std::size_t j) { return m(perm[i], perm[j]); };
    double block = 0.0;
    double column = 0.0;
    for (std::size_t a = 0; a < ell; ++a) {
        for (std::size_t b = 0; b < ell; ++b) {
            block += mp(a, b);
        }
        column += mp(a, ell);
    }
    const double l = dbl(ell);
    const double value = (l * l * mp(ell, ell) + block - 2.0 * l * column) / (l * (l + 1.0));

    // Direct product restricted to the support of eps^(l).
    const Eigen::VectorXd eps = reduced_basis_vector(ell + 1, ell);
    double direct = 0.0;
    for (std::size_t i = 0; i <= ell; ++i) {
        for (std::size_t j = 0; j <= ell; ++j) {
            direct += eps(static_cast<Eigen::Index>(i)) * mp(i, j) * eps(static_cast<Eigen::Index>(j));
        }
    }
    if (std::abs(value - direct) > agreement_tolerance(m, value, direct)) {
        throw InconsistencyError("reduced-basis matrix element disagrees with the direct product");
    }
    return value;
}

namespace detail {

double quad_form_offdiag(const SymMatrix& m, std::size_t j, std::size_t ell, std::span<const Vertex> perm) {
    const std::size_t n = m.order();
    validate_relabeling(perm, n);
    if (j < 1 || ell < 1 || j >= n || ell >= n) {
        throw InvalidArgument("reduced-basis indices must lie in 1..n-1");
    }
    auto mp = [&](std::size_t a, std::size_t b) { return m(perm[a], perm[b]); };
    double block = 0.0;
    for (std::size_t a = 0; a < j; ++a) {
        for (std::size_t b = 0; b < ell; ++b) {
            block += mp(a, b);
        }
    }
    double row_j = 0.0;
    for (std::size_t b = 0; b < ell; ++b) {
        row_j += mp(b, j);
    }
    double col_l = 0.0;
    for (std::size_t a = 0; a < j; ++a) {
        col_l += mp(a, ell);
    }
    const double dj = dbl(j);
    const double dl = dbl(ell);
    const double c = 1.0 / std::sqrt(dj * (dj + 1.0) * dl * (dl + 1.0));
    return c * (dj * dl * mp(j, ell) + block - dj * row_j - dl * col_l);
}

}  // namespace detail

std::pair<BoundReport, BoundReport> fiedler_bounds(const Graph& g, const Spectrum& lap, double tol) {
    require_laplacian(g, lap);
    const std::size_t n = g.order();
    if (n < 2) {
        throw InvalidArgument("Fiedler bounds need n >= 2");
    }
    const double factor = dbl(n) / dbl(n - 1);
    auto low = make_report("fiedler_min", Sense::upper, factor * dbl(g.min_degree()), lap.values[1], tol);
    auto high = make_report("fiedler_max", Sense::lower, factor * dbl(g.max_degree()), lap.values[n - 1], tol);
    return {std::move(low), std::move(high)};
}

BoundReport pair_sum_bound(const Graph& g, const Spectrum& lap, Extremum mode, double tol) {
    require_laplacian(g, lap);
    const std::size_t n = g.order();
    if (n < 3) {
        throw InvalidArgument("pair-sum bounds need n >= 3");
    }
    // Optimize the integer (n-1)(d_u + d_v) - 2 a_uv, proportional to the bound.
    std::int64_t best = mode == Extremum::min ? std::numeric_limits<std::int64_t>::max()
                                              : std::numeric_limits<std::int64_t>::min();
    Edge arg{0, 1};
    const auto nm1 = static_cast<std::int64_t>(n - 1);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const auto cost = nm1 * static_cast<std::int64_t>(g.degree(u) + g.degree(v)) - (g.adjacent(u, v) ? 2 : 0);
            if (mode == Extremum::min ? cost < best : cost > best) {
                best = cost;
                arg = {u, v};
            }
        }
    }
    const double bound = static_cast<double>(best) / dbl(n - 2);

    // The same number arises from the two last reduced-basis vectors with the
    // optimal pair labeled last.
    const std::vector<Vertex> others = [&] {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v) {
            if (v != arg.first && v != arg.second) {
                rest.push_back(v);
            }
        }
        rest.push_back(arg.first);
        rest.push_back(arg.second);
        return rest;
    }();
    const SymMatrix h = laplacian(g);
    const double via_basis = quad_form_diag(h, n - 2, others) + quad_form_diag(h, n - 1, others);
    if (std::abs(via_basis - bound) > agreement_tolerance(h, via_basis, bound)) {
        throw InconsistencyError("pair-sum bound disagrees with its reduced-basis form");
    }

    const bool is_min = mode == Extremum::min;
    const double measured = is_min ? lap.values[1] + lap.values[2] : lap.values[n - 2] + lap.values[n - 1];
    auto r = make_report(is_min ? "pair_sum_min" : "pair_sum_max", is_min ? Sense::upper : Sense::lower, bound,
                         measured, tol);
    r.subset = {arg.first, arg.second};
    return r;
}

BoundReport degree_averaged_pair_bound(const Graph& g, const Spectrum& lap, Extremum mode, double tol) {
    require_laplacian(g, lap);
    const std::size_t n = g.order();
    if (n < 3) {
        throw InvalidArgument("pair-sum bounds need n >= 3");
    }
    const bool is_min = mode == Extremum::min;
    const double d = dbl(is_min ? g.min_degree() : g.max_degree());
    const double dn = dbl(n);
    const double bound = 2.0 * dbl(g.size()) / (dn - 2.0) + dn * (dn - 3.0) / ((dn - 1.0) * (dn - 2.0)) * d;

    // An average of pair-sum values is never more extreme than their optimum.
    const double pair = pair_sum_bound(g, lap, mode, tol).bound;
    const double gap = is_min ? bound - pair : pair - bound;
    if (gap < -1e-10 * (1.0 + std::abs(pair))) {
        throw InconsistencyError("degree-averaged bound is tighter than the pair-sum bound");
    }

    const double measured = is_min ? lap.values[1] + lap.values[2] : lap.values[n - 2] + lap.values[n - 1];
    return make_report(is_min ? "degree_averaged_min" : "degree_averaged_max", is_min ? Sense::upper : Sense::lower,
                       bound, measured, tol);
}

double l_sum_value(const Graph& g, std::span<const Vertex> subset) {
    if (subset.size() < 2) {
        throw InvalidArgument("L-sum subset needs at least two vertices");
    }
    validate_subset(g, subset);
    return static_cast<double>(scaled_l_sum(g, subset)) / dbl(subset.size());
}

BoundReport l_sum_bound(const Graph& g, const Spectrum& lap, std::size_t L, std::span<const Vertex> subset, LSide side,
                        double tol) {
    require_laplacian(g, lap);
    const std::size_t n = g.order();
    if (L < 1 || L >= n) {
        throw InvalidArgument("L must satisfy 1 <= L <= n-1");
    }
    if (subset.size() != L + 1) {
        throw InvalidArgument("L-sum subset must have L+1 = " + std::to_string(L + 1) + " vertices, got " +
                              std::to_string(subset.size()));
    }
    const double bound = l_sum_value(g, subset);

    // Same value as the sum of the diagonal reduced-basis elements l = 1..L
    // with the subset labeled first; accumulated incrementally.
    double via_basis = 0.0;
    double block = 0.0;  // sum over the leading l x l block of H'
    for (std::size_t ell = 0; ell <= L; ++ell) {
        const Vertex x = subset[ell];
        double column = 0.0;
        for (std::size_t a = 0; a < ell; ++a) {
            column += g.adjacent(subset[a], x) ? -1.0 : 0.0;
        }
        if (ell > 0) {
            const double l = dbl(ell);
            via_basis += (l * l * dbl(g.degree(x)) + block - 2.0 * l * column) / (l * (l + 1.0));
        }
        block += 2.0 * column + dbl(g.degree(x));
    }
    if (std::abs(via_basis - bound) > 1e-10 * std::max(1.0, std::abs(bound))) {
        throw InconsistencyError("L-sum bound disagrees with its reduced-basis form");
    }

    double measured = 0.0;
    if (side == LSide::lower) {
        measured = partial_sum(lap, L + 1);
    } else {
        for (std::size_t j = n - L; j < n; ++j) {
            measured += lap.values[j];
        }
    }
    auto r = make_report("l_sum_" + side_suffix(side), side == LSide::lower ? Sense::upper : Sense::lower, bound,
                         measured, tol);
    r.param("L", static_cast<std::int64_t>(L));
    r.subset.assign(subset.begin(), subset.end());
    return r;
}

BoundReport l_sum_verbatim(const Graph& g, const Spectrum& lap, std::size_t L, std::span<const Vertex> subset,
                           LSide side, double tol) {
    require_laplacian(g, lap);
    const std::size_t n = g.order();
    if (L < 1 || L >= n) {
        throw InvalidArgument("L must satisfy 1 <= L <= n-1");
    }
    if (subset.size() != L) {
        throw InvalidArgument("verbatim L-sum subset must have L vertices");
    }
    validate_subset(g, subset);
    double degrees = 0.0;
    double adjacent = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
        degrees += dbl(g.degree(subset[i]));
        for (std::size_t j = i + 1; j < L; ++j) {
            adjacent += g.adjacent(subset[i], subset[j]) ? 2.0 : 0.0;
        }
    }
    const double nl = dbl(n - L);
    const double bound = (nl + 1.0) / nl * degrees + adjacent / nl;
    double measured = 0.0;
    if (side == LSide::lower) {
        measured = partial_sum(lap, L + 1);
    } else {
        for (std::size_t j = n - L; j < n; ++j) {
            measured += lap.values[j];
        }
    }
    auto r = make_report("l_sum_verbatim_" + side_suffix(side), side == LSide::lower ? Sense::upper : Sense::lower,
                         bound, measured, tol);
    r.param("L", static_cast<std::int64_t>(L));
    r.subset.assign(subset.begin(), subset.end());
    r.asserted = false;
    r.note = "alternative printed form, evaluated for information only";
    return r;
}

std::vector<Vertex> greedy_degree_order(const Graph& g, LSide side) {
    const std::size_t n = g.order();
    std::vector<bool> taken(n, false);
    std::vector<std::size_t> links(n, 0);  // adjacencies into the chosen set
    std::vector<Vertex> order;
    order.reserve(n);
    const bool minimize = side == LSide::lower;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (taken[v]) {
                continue;
            }
            if (best == n) {
                best = v;
                continue;
            }
            const auto key = [&](Vertex x) { return std::pair{g.degree(x), links[x]}; };
            if (minimize ? key(v) < key(best) : key(v) > key(best)) {
                best = v;
            }
        }
        taken[best] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            ++links[w];
        }
    }
    return order;
}

std::vector<Vertex> select_subset(const Graph& g, std::size_t size, LSide side, SubsetStrategy strategy) {
    const std::size_t n = g.order();
    if (size < 1 || size > n) {
        throw InvalidArgument("subset size must lie in 1..n");
    }
    switch (strategy) {
        case SubsetStrategy::greedy_degree: {
            auto order = greedy_degree_order(g, side);
            order.resize(size);
            return order;
        }
        case SubsetStrategy::degree_sorted: {
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), Vertex{0});
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
                return side == LSide::lower ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
            });
            order.resize(size);
            return order;
        }
        case SubsetStrategy::exhaustive:
            break;
    }
    if (binomial(n, size) > kExhaustiveSubsetBudget) {
        throw InvalidArgument("exhaustive subset search over C(" + std::to_string(n) + ", " + std::to_string(size) +
                              ") subsets exceeds the 10^6 budget; use the greedy-degree strategy");
    }
    std::vector<Vertex> current(size);
    std::iota(current.begin(), current.end(), Vertex{0});
    std::vector<Vertex> best = current;
    std::uint64_t best_value = scaled_l_sum(g, current);
    while (true) {
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && current[i - 1] == n - size + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++current[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            current[j] = current[j - 1] + 1;
        }
        const std::uint64_t value = scaled_l_sum(g, current);
        if (side == LSide::lower ? value < best_value : value > best_value) {
            best_value = value;
            best = current;
        }
    }
    return best;
}

}  // namespace eigsum
