#include "eigsum/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "eigsum/error.hpp"

namespace eigsum {

const char* to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency:
            return "adjacency";
        case MatrixKind::laplacian:
            return "laplacian";
        case MatrixKind::normalized:
            return "normalized";
    }
    return "?";
}

SymMatrix matrix_of(const Graph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency:
            return adjacency_matrix(g);
        case MatrixKind::laplacian:
            return laplacian(g);
        case MatrixKind::normalized:
            return normalized_laplacian(g);
    }
    throw InvalidArgument("unknown matrix kind");
}

Spectrum canonical(MatrixKind kind, EigenDecomposition eig) {
    Spectrum s;
    s.kind = kind;
    s.values.assign(eig.values.data(), eig.values.data() + eig.values.size());
    s.vectors = std::move(eig.vectors);
    if (kind == MatrixKind::adjacency) {
        std::reverse(s.values.begin(), s.values.end());
        if (s.vectors) {
            s.vectors = s.vectors->rowwise().reverse().eval();
        }
    }
    return s;
}

EigenDecomposition ascending(const Spectrum& s) {
    EigenDecomposition eig;
    eig.values = Eigen::Map<const Eigen::VectorXd>(s.values.data(), static_cast<Eigen::Index>(s.size()));
    eig.vectors = s.vectors;
    if (s.kind == MatrixKind::adjacency) {
        eig.values.reverseInPlace();
        if (eig.vectors) {
            eig.vectors = eig.vectors->rowwise().reverse().eval();
        }
    }
    return eig;
}

Spectrum spectrum(const Graph& g, MatrixKind kind, bool want_vectors, EigenSolver solver) {
    return canonical(kind, eig_sym(matrix_of(g, kind), want_vectors, solver));
}

namespace {

void check_k(const Spectrum& s, std::size_t k) {
    if (k < 1 || k > s.size()) {
        throw InvalidArgument("k = " + std::to_string(k) + " outside 1.." + std::to_string(s.size()));
    }
}

}  // namespace

double partial_sum(const Spectrum& s, std::size_t k) {
    check_k(s, k);
    return std::accumulate(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

double partial_power_sum(const Spectrum& s, std::size_t k, double p) {
    check_k(s, k);
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        sum += std::pow(s.values[j], p);
    }
    return sum;
}

std::vector<std::size_t> magnitude_order(const Spectrum& s) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(s.values[i]) < std::abs(s.values[j]);
    });
    return order;
}

double laplacian_energy(const Spectrum& s, std::size_t m, std::size_t n) {
    if (s.kind != MatrixKind::laplacian || s.size() != n) {
        throw InvalidArgument("laplacian_energy needs the complete Laplacian spectrum");
    }
    const double mean = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    double direct = 0.0;
    double below = 0.0;
    for (double lambda : s.values) {
        direct += std::abs(lambda - mean);
        below += std::max(mean - lambda, 0.0);
    }
    // The two agree because the deviations from the mean sum to zero, which
    // needs the trace of the spectrum to be exactly 2m.
    if (std::abs(direct - 2.0 * below) > 1e-9 * (1.0 + direct)) {
        throw InconsistencyError("Laplacian energy forms disagree: " + std::to_string(direct) + " vs " +
                                 std::to_string(2.0 * below));
    }
    return direct;
}

RieszValue riesz_mean(const Spectrum& s, double z, double p) {
    if (!(p >= 0.0)) {
        throw InvalidArgument("Riesz mean power must be nonnegative");
    }
    double value = 0.0;
    for (double lambda : s.values) {
        if (lambda < z) {
            value += p == 0.0 ? 1.0 : std::pow(z - lambda, p);
        }
    }
    return RieszValue{z, p, value};
}

std::pair<BoundReport, BoundReport> trace_identity_report(const Graph& g, const Spectrum& s, double tol) {
    if (s.kind != MatrixKind::laplacian || s.size() != g.order()) {
        throw InvalidArgument("trace identities need the complete Laplacian spectrum");
    }
    const double two_m = 2.0 * static_cast<double>(g.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double lambda : s.values) {
        sum += lambda;
        sum_sq += lambda * lambda;
    }
    auto trace = make_report("trace_identity", Sense::equal, two_m, sum, tol);
    auto trace_sq =
        make_report("trace_square_identity", Sense::equal, two_m + static_cast<double>(zagreb_index(g)), sum_sq, tol);
    return {std::move(trace), std::move(trace_sq)};
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "index,value\n";
    char buf[40];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", s.values[i]);
        out << i << ',' << buf << '\n';
    }
}

}  // namespace eigsum
