#include "eigsum/lattice_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

using std::numbers::pi;

double dbl(std::size_t x) { return static_cast<double>(x); }

void require_k(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw InvalidArgument("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
}

void require_nu(std::size_t nu) {
    if (nu < 1) {
        throw InvalidArgument("lattice dimension must be at least 1");
    }
}

void require_a(double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw InvalidArgument("a must lie in [0, 1]");
    }
}

// kappa^{1/nu}
double edge_of_cube(std::size_t n, std::size_t nu, std::size_t k) {
    return std::pow(dbl(k) / dbl(n), 1.0 / dbl(nu));
}

std::vector<double> prefix_sums(const std::vector<double>& values, double power) {
    std::vector<double> out(values.size() + 1, 0.0);
    for (std::size_t j = 0; j < values.size(); ++j) {
        out[j + 1] = out[j] + (power == 1.0 ? values[j] : std::pow(values[j], power));
    }
    return out;
}

}  // namespace

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

std::vector<std::size_t> collinear_counts(const Graph& g, const LatticeEmbedding& emb) {
    validate_embedding(g, emb);
    std::map<LatticePoint, Vertex> where;
    for (Vertex v = 0; v < g.order(); ++v) {
        where.emplace(emb.coords[v], v);
    }
    std::vector<std::size_t> counts(g.order(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
        for (std::size_t axis = 0; axis < emb.nu; ++axis) {
            LatticePoint plus = emb.coords[x];
            LatticePoint minus = emb.coords[x];
            ++plus[axis];
            --minus[axis];
            auto hi = where.find(plus);
            auto lo = where.find(minus);
            if (hi != where.end() && lo != where.end() && g.adjacent(x, hi->second) && g.adjacent(x, lo->second)) {
                ++counts[x];
            }
        }
    }
    return counts;
}

double weyl_sum_bound(std::size_t m, std::size_t n, std::size_t nu, std::size_t k) {
    require_nu(nu);
    require_k(k, n);
    const double kappa = dbl(k) / dbl(n);
    return 2.0 * dbl(m) * kappa * (1.0 - sinc(pi * edge_of_cube(n, nu, k)));
}

WeylAtA weyl_sum_bound_at_a(std::size_t m, std::size_t n, std::size_t nu, std::size_t k, double a) {
    require_nu(nu);
    require_k(k, n);
    require_a(a);
    const double an = std::pow(a, dbl(nu));
    return WeylAtA{dbl(n) * an - dbl(k), 2.0 * dbl(m) * an * (1.0 - sinc(pi * a))};
}

double simple_lattice_bound(std::size_t m, std::size_t n, std::size_t k) {
    require_k(k, n);
    return 2.0 * dbl(m) * dbl(k) / dbl(n);
}

double weyl_power_bound(std::size_t m, std::size_t n, std::size_t nu, std::size_t k) {
    require_nu(nu);
    require_k(k, n);
    const double kappa = dbl(k) / dbl(n);
    return pi * pi * dbl(m) / 3.0 * std::pow(kappa, 1.0 + 2.0 / dbl(nu));
}

SquareSumInputs square_sum_inputs(const Graph& g, const LatticeEmbedding& emb) {
    const auto par = collinear_counts(g, emb);
    SquareSumInputs in;
    in.n = g.order();
    in.nu = emb.nu;
    in.degree_sum = 2.0 * dbl(g.size());
    in.trace_h2 = in.degree_sum + static_cast<double>(zagreb_index(g));
    for (std::size_t c : par) {
        in.collinear_sum += dbl(c);
    }
    return in;
}

double weyl_sq_bound(const SquareSumInputs& in, std::size_t k) {
    require_nu(in.nu);
    require_k(k, in.n);
    const double kappa = dbl(k) / dbl(in.n);
    const double x = pi * edge_of_cube(in.n, in.nu, k);
    const double s = sinc(x);
    const double c = std::cos(x);
    return kappa * (1.0 - s) * (1.0 - s) * in.trace_h2 + 2.0 * kappa * s * (1.0 - s) * in.degree_sum +
           2.0 * kappa * s * (c - s) * in.collinear_sum;
}

double weyl_sq_bound_printed(const SquareSumInputs& in, std::size_t k) {
    require_nu(in.nu);
    require_k(k, in.n);
    const double kappa = dbl(k) / dbl(in.n);
    const double x = pi * edge_of_cube(in.n, in.nu, k);
    const double s = sinc(x);
    const double c = std::cos(x);
    return kappa * (1.0 - s) * (1.0 - s) * in.trace_h2 + 2.0 * kappa * s * (1.0 - s) * in.degree_sum -
           2.0 * kappa * s * (1.0 - c) * in.collinear_sum;
}

double riesz_lower_bound_at_a(double z, std::size_t m, std::size_t n, std::size_t nu, double a) {
    require_nu(nu);
    require_a(a);
    const double an = std::pow(a, dbl(nu));
    return z * dbl(n) * an - 2.0 * dbl(m) * an * (1.0 - sinc(pi * a));
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    // The endpoints are candidates too: the maximum may sit on the boundary.
    const double mid = 0.5 * (a + b);
    double best = mid;
    for (double x : {lo, hi}) {
        if (f(x) > f(best)) {
            best = x;
        }
    }
    return best;
}

double riesz_lower_bound(double z, std::size_t m, std::size_t n, std::size_t nu) {
    require_nu(nu);
    if (!(z >= 0.0 && z <= 2.0 * dbl(m))) {
        throw InvalidArgument("z must lie in [0, 2m]");
    }
    if (m == 0) {
        return 0.0;
    }
    const double dnu = dbl(nu);
    const double weyl = pi * pi * dbl(m) / 3.0;
    const double x = dnu / (dnu + 2.0) * 3.0 * dbl(n) * z / (dbl(m) * pi * pi);
    const double closed = x <= 1.0 ? 2.0 / dnu * weyl * std::pow(x, 1.0 + dnu / 2.0) : z * dbl(n) - weyl;

    auto simplified = [&](double a) { return z * dbl(n) * std::pow(a, dnu) - weyl * std::pow(a, dnu + 2.0); };
    const double direct = simplified(golden_section_max(simplified, 0.0, 1.0));
    if (std::abs(direct - closed) > 1e-6 * std::max(1.0, std::abs(closed))) {
        throw InconsistencyError("Riesz closed form disagrees with direct maximization: " + std::to_string(closed) +
                                 " vs " + std::to_string(direct));
    }
    return closed;
}

LaplacianEnergyBound le_lower_bound(std::size_t m, std::size_t nu) {
    require_nu(nu);
    const double dnu = dbl(nu);
    auto h = [&](double a) { return std::pow(a, dnu) * sinc(pi * a); };

    // Unimodality: the grid differences must change sign exactly once.
    constexpr int kGrid = 10000;
    int sign_changes = 0;
    int previous = 0;
    double grid_best = 0.0;
    double grid_arg = 0.0;
    for (int i = 1; i <= kGrid; ++i) {
        const double a0 = static_cast<double>(i - 1) / kGrid;
        const double a1 = static_cast<double>(i) / kGrid;
        const double diff = h(a1) - h(a0);
        const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
        if (sign != 0 && previous != 0 && sign != previous) {
            ++sign_changes;
        }
        if (sign != 0) {
            previous = sign;
        }
        if (h(a1) > grid_best) {
            grid_best = h(a1);
            grid_arg = a1;
        }
    }

    LaplacianEnergyBound out;
    out.golden = sign_changes == 1;
    out.argmax = out.golden ? golden_section_max(h, 0.0, 1.0, 1e-10) : grid_arg;
    out.max_form = 4.0 * dbl(m) * h(out.argmax);
    out.closed_form = 8.0 * dbl(m) / (dnu + 2.0) * std::pow(6.0 * dnu / (pi * pi * (dnu + 2.0)), dnu / 2.0);
    if (out.max_form < out.closed_form * (1.0 - 1e-12)) {
        throw InconsistencyError("maximized Laplacian-energy bound is below its closed form");
    }
    return out;
}

bool karamata_check(const std::vector<double>& mu, const std::vector<double>& mseq, double tol) {
    if (mu.size() != mseq.size()) {
        throw InvalidArgument("Karamata sequences must have equal length");
    }
    for (std::size_t j = 1; j < mu.size(); ++j) {
        if (mu[j] < mu[j - 1] || mseq[j] < mseq[j - 1]) {
            throw InvalidArgument("Karamata sequences must be nondecreasing");
        }
    }
    double sum_mu = 0.0;
    double sum_m = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        sum_mu += mu[j];
        sum_m += mseq[j];
        if (sum_mu > sum_m + tol * (1.0 + std::abs(sum_m))) {
            return false;
        }
    }
    return true;
}

std::vector<double> weyl_sequence(std::size_t n, std::size_t m, std::size_t nu, WeylSequenceForm form) {
    require_nu(nu);
    std::vector<double> seq(n, 0.0);
    const double exponent = 1.0 + 2.0 / dbl(nu);
    const double scale = pi * pi * dbl(m) / 3.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (form == WeylSequenceForm::difference) {
            seq[j] = scale * (std::pow(dbl(j + 1) / dbl(n), exponent) - std::pow(dbl(j) / dbl(n), exponent));
        } else {
            seq[j] = exponent * scale * std::pow(dbl(j), 2.0 / dbl(nu)) / std::pow(dbl(n), exponent);
        }
    }
    return seq;
}

double TransformFunction::operator()(double x) const {
    switch (kind) {
        case Kind::sqrt:
            return std::sqrt(std::max(x, 0.0));
        case Kind::exp_neg:
            return std::exp(-t * x);
        case Kind::riesz:
            return x < t ? std::pow(t - x, p) : 0.0;
    }
    return 0.0;
}

std::string TransformFunction::label() const {
    switch (kind) {
        case Kind::sqrt:
            return "sqrt";
        case Kind::exp_neg:
            return "exp_neg";
        case Kind::riesz:
            return "riesz";
    }
    return "?";
}

BoundReport karamata_transform_bound(const Spectrum& lap, std::size_t m, std::size_t nu, const TransformFunction& fn,
                                     std::size_t k, WeylSequenceForm form, double tol) {
    if (lap.kind != MatrixKind::laplacian) {
        throw InvalidArgument("Karamata transforms act on a Laplacian spectrum");
    }
    const std::size_t n = lap.size();
    require_k(k, n);
    if (fn.kind == TransformFunction::Kind::exp_neg && !(fn.t >= 0.0)) {
        throw InvalidArgument("exp(-t x) is nonincreasing only for t >= 0");
    }
    if (fn.kind == TransformFunction::Kind::riesz && !(fn.p >= 1.0)) {
        throw InvalidArgument("(t - x)_+^p is convex only for p >= 1");
    }
    const auto seq = weyl_sequence(n, m, nu, form);
    double measured = 0.0;
    double bound = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        measured += fn(lap.values[j]);
        bound += fn(seq[j]);
    }
    auto r = make_report("karamata_" + fn.label(), fn.concave() ? Sense::upper : Sense::lower, bound, measured, tol);
    r.param("k", static_cast<std::int64_t>(k)).param("nu", static_cast<std::int64_t>(nu));
    if (fn.kind != TransformFunction::Kind::sqrt) {
        r.param("t", fn.t);
    }
    if (fn.kind == TransformFunction::Kind::riesz) {
        r.param("p", fn.p);
    }
    return r;
}

std::vector<EmbedVerdict> embeddability_certificate(const Graph& g, const Spectrum& lap, std::size_t nu_max,
                                                    double tol) {
    if (!is_connected(g)) {
        throw InvalidArgument("embeddability certificate needs a connected graph");
    }
    if (lap.kind != MatrixKind::laplacian || lap.size() != g.order()) {
        throw InvalidArgument("expected the complete Laplacian spectrum of the graph");
    }
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    const auto sums = prefix_sums(lap.values, 1.0);
    std::vector<EmbedVerdict> out;
    for (std::size_t nu = 1; nu <= nu_max; ++nu) {
        EmbedVerdict v;
        v.nu = nu;
        for (std::size_t k = 1; k <= n && !v.excluded; ++k) {
            const std::pair<const char*, double> bounds[] = {{"lattice_weyl", weyl_sum_bound(m, n, nu, k)},
                                                             {"weyl_power", weyl_power_bound(m, n, nu, k)}};
            for (const auto& [name, bound] : bounds) {
                const double slack = bound - sums[k];
                if (slack < -tol * (1.0 + std::abs(bound)) && (!v.slack || slack < *v.slack)) {
                    v.excluded = true;
                    v.first_violation_k = k;
                    v.slack = slack;
                    v.violated = name;
                }
            }
        }
        out.push_back(v);
    }
    // Both envelopes grow with nu, so exclusions must form an initial run.
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].excluded && !out[i - 1].excluded) {
            throw InconsistencyError("dimension " + std::to_string(out[i].nu) + " excluded but " +
                                     std::to_string(out[i - 1].nu) + " not");
        }
    }
    return out;
}

std::vector<BoundReport> verify_embedding(const Graph& g, const LatticeEmbedding& emb, const Spectrum& lap,
                                          const LatticeSuiteOptions& options, double tol) {
    validate_embedding(g, emb);
    if (lap.kind != MatrixKind::laplacian || lap.size() != g.order()) {
        throw InvalidArgument("expected the complete Laplacian spectrum of the graph");
    }
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    const std::size_t nu = emb.nu;
    const auto nu_param = static_cast<std::int64_t>(nu);
    const auto sums = prefix_sums(lap.values, 1.0);
    const auto squares = prefix_sums(lap.values, 2.0);
    const auto sq_in = square_sum_inputs(g, emb);

    std::vector<BoundReport> out;
    auto push = [&](BoundReport r, std::size_t k) {
        r.param("k", static_cast<std::int64_t>(k)).param("nu", nu_param);
        out.push_back(std::move(r));
    };
    for (std::size_t k = 1; k <= n; ++k) {
        push(make_report("lattice_weyl", Sense::upper, weyl_sum_bound(m, n, nu, k), sums[k], tol), k);
        push(make_report("lattice_weyl_squares", Sense::upper, weyl_sq_bound(sq_in, k), squares[k], tol), k);
        if (options.include_printed) {
            auto r = make_report("lattice_weyl_squares_printed", Sense::upper, weyl_sq_bound_printed(sq_in, k),
                                 squares[k], tol);
            r.asserted = false;
            r.note = "printed collinear term, evaluated for information only";
            push(std::move(r), k);
        }
        push(make_report("simple_lattice", Sense::upper, simple_lattice_bound(m, n, k), sums[k], tol), k);
        push(make_report("weyl_power", Sense::upper, weyl_power_bound(m, n, nu, k), sums[k], tol), k);
    }

    std::vector<double> a_grid = options.a_grid;
    if (a_grid.empty()) {
        for (int i = 1; i <= 10; ++i) {
            a_grid.push_back(i / 10.0);
        }
    }
    for (std::size_t k = 1; k < n; ++k) {
        for (double a : a_grid) {
            const auto at = weyl_sum_bound_at_a(m, n, nu, k, a);
            const double lhs = lap.values[k] * at.coefficient + sums[k];
            auto r = make_report("lattice_weyl_at_a", Sense::upper, at.envelope, lhs, tol,
                                 std::abs(lap.values[k] * at.coefficient) + sums[k]);
            r.param("a", a);
            push(std::move(r), k);
        }
    }

    std::vector<double> z_grid = options.z_grid;
    if (z_grid.empty()) {
        const double top = 2.0 * dbl(m);
        for (int i = 0; i <= 20; ++i) {
            z_grid.push_back(top * i / 20.0);
        }
        for (double f : {0.1, 0.5, 1.0, 2.0}) {
            const double z = f * top / dbl(n);
            if (z <= top) {
                z_grid.push_back(z);
            }
        }
    }
    for (double z : z_grid) {
        const double riesz = riesz_mean(lap, z, 1.0).value;
        for (double a : a_grid) {
            auto r = make_report("riesz_at_a", Sense::lower, riesz_lower_bound_at_a(z, m, n, nu, a), riesz, tol,
                                 z * dbl(n));
            r.param("z", z).param("a", a).param("nu", nu_param);
            out.push_back(std::move(r));
        }
        auto r = make_report("riesz_closed_form", Sense::lower, riesz_lower_bound(z, m, n, nu), riesz, tol, z * dbl(n));
        r.param("z", z).param("nu", nu_param);
        out.push_back(std::move(r));
    }

    const auto le = le_lower_bound(m, nu);
    const double energy = laplacian_energy(lap, m, n);
    auto le_max = make_report("laplacian_energy_max", Sense::lower, le.max_form, energy, tol);
    le_max.param("nu", nu_param).param("a", le.argmax);
    out.push_back(std::move(le_max));
    auto le_closed = make_report("laplacian_energy_closed", Sense::lower, le.closed_form, energy, tol);
    le_closed.param("nu", nu_param);
    out.push_back(std::move(le_closed));
    return out;
}

}  // namespace eigsum
