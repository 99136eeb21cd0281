#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "corpus.hpp"
#include "eigsum/closed_form.hpp"
#include "eigsum/error.hpp"
#include "eigsum/generators.hpp"
#include "eigsum/spectrum.hpp"
#include "oracles.hpp"

using namespace eigsum;

namespace {

double max_diff(const std::vector<double>& a, const Eigen::VectorXd& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
    }
    return d;
}

Eigen::VectorXd reversed(const Eigen::VectorXd& v) { return v.reverse(); }

}  // namespace

TEST_CASE("canonical spectra agree with the independent dense oracle") {
    for (const auto& [name, g] : corpus::full_set()) {
        CAPTURE(name);
        const auto lap = spectrum(g, MatrixKind::laplacian);
        const auto adj = spectrum(g, MatrixKind::adjacency);
        const auto nrm = spectrum(g, MatrixKind::normalized);
        CHECK(max_diff(lap.values, oracle::eigenvalues(oracle::laplacian(g))) < 1e-10);
        CHECK(max_diff(adj.values, reversed(oracle::eigenvalues(oracle::adjacency(g)))) < 1e-10);
        CHECK(max_diff(nrm.values, oracle::eigenvalues(oracle::normalized(g))) < 1e-10);
        CHECK(std::is_sorted(lap.values.begin(), lap.values.end()));
        CHECK(std::is_sorted(adj.values.rbegin(), adj.values.rend()));
        // Normalized spectrum lies in [0, 2].
        CHECK(nrm.values.front() > -1e-12);
        CHECK(nrm.values.back() < 2.0 + 1e-12);
    }
}

TEST_CASE("Jacobi and tridiagonal QR agree") {
    for (const auto& [name, g] : corpus::random_set(40)) {
        CAPTURE(name);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::normalized}) {
            const auto a = spectrum(g, kind, true, EigenSolver::tridiagonal);
            const auto b = spectrum(g, kind, true, EigenSolver::jacobi);
            double d = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                d = std::max(d, std::abs(a.values[i] - b.values[i]));
            }
            CHECK(d < 1e-10);
            // Eigenvectors of the Jacobi result reproduce the matrix.
            const SymMatrix m = matrix_of(g, kind);
            const Eigen::MatrixXd& v = *b.vectors;
            const Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(b.values.data(), b.values.size());
            CHECK((m.dense() * v - v * lam.asDiagonal()).norm() < 1e-9);
            CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(v.cols(), v.cols())).norm() < 1e-9);
        }
    }
}

TEST_CASE("Jacobi reports non-convergence") {
    const SymMatrix m = laplacian(gen_random_connected(30, 0.3, 4));
    JacobiOptions tight;
    tight.max_sweeps = 1;
    CHECK_THROWS_AS((void)jacobi_eigen(m, false, tight), ConvergenceError);
}

TEST_CASE("closed forms for generator families") {
    for (std::size_t n = 4; n <= 30; ++n) {
        CAPTURE(n);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::normalized}) {
            CAPTURE(to_string(kind));
            auto near = [&](const Graph& g, const Spectrum& cf) {
                const auto s = spectrum(g, kind);
                double d = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    d = std::max(d, std::abs(s.values[i] - cf.values[i]));
                }
                return d;
            };
            CHECK(near(gen_path(n), closed_form(kind, Family::path, n)) < 1e-10);
            CHECK(near(gen_cycle(n), closed_form(kind, Family::cycle, n)) < 1e-10);
            CHECK(near(gen_complete(n), closed_form(kind, Family::complete, n)) < 1e-10);
            CHECK(near(gen_star(n), closed_form(kind, Family::star, n)) < 1e-10);
            for (std::size_t p = 1; p < n; ++p) {
                CHECK(near(gen_join(n, p), closed_form(kind, Family::join, n, p)) < 1e-10);
            }
        }
    }
}

TEST_CASE("small named spectra") {
    const auto k4 = spectrum(gen_complete(4), MatrixKind::laplacian);
    CHECK(k4.values[0] == doctest::Approx(0.0));
    for (int i = 1; i < 4; ++i) {
        CHECK(k4.values[i] == doctest::Approx(4.0));
    }
    const auto s4 = spectrum(gen_star(4), MatrixKind::adjacency);
    CHECK(s4.values[0] == doctest::Approx(std::sqrt(3.0)));
    CHECK(std::abs(s4.values[1]) < 1e-12);
    CHECK(std::abs(s4.values[2]) < 1e-12);
    CHECK(s4.values[3] == doctest::Approx(-std::sqrt(3.0)));

    std::ostringstream csv;
    write_spectrum_csv(csv, k4);
    CHECK(csv.str().rfind("index,value\n0,", 0) == 0);
}

TEST_CASE("path partial sums match the sinc closed form") {
    // sum_{j=1}^{k-1} lambda_j = (2k-1)(1 - sinc(pi(2k-1)/2n) / sinc(pi/2n))
    const double pi = std::numbers::pi;
    auto sinc = [](double x) { return std::sin(x) / x; };
    for (std::size_t n : {10, 37, 120}) {
        const auto lap = spectrum(gen_path(n), MatrixKind::laplacian);
        for (std::size_t k = 1; k <= n; ++k) {
            const double kk = 2.0 * static_cast<double>(k) - 1.0;
            const double want = kk * (1.0 - sinc(pi * kk / (2.0 * n)) / sinc(pi / (2.0 * n)));
            CHECK(partial_sum(lap, k) == doctest::Approx(want).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("trace identities hold over the corpus") {
    for (const auto& [name, g] : corpus::full_set()) {
        CAPTURE(name);
        const auto lap = spectrum(g, MatrixKind::laplacian);
        auto [t1, t2] = trace_identity_report(g, lap);
        CHECK(t1.holds());
        CHECK(t2.holds());
        CHECK(t1.bound == doctest::Approx(2.0 * static_cast<double>(g.size())));
        CHECK(t2.bound == doctest::Approx(2.0 * static_cast<double>(g.size()) + static_cast<double>(zagreb_index(g))));
        // Tr(Hhat) = n without isolated vertices; Tr(A) = 0, Tr(A^2) = 2m.
        const auto nrm = spectrum(g, MatrixKind::normalized);
        CHECK(partial_sum(nrm, g.order()) == doctest::Approx(static_cast<double>(g.order())));
        const auto adj = spectrum(g, MatrixKind::adjacency);
        CHECK(std::abs(partial_sum(adj, g.order())) < 1e-9 * g.order());
        CHECK(partial_power_sum(adj, g.order(), 2.0) == doctest::Approx(2.0 * static_cast<double>(g.size())));
    }
}

TEST_CASE("join traces") {
    for (std::size_t n = 3; n <= 20; ++n) {
        for (std::size_t p = 1; p < n; ++p) {
            const Graph g = gen_join(n, p);
            const JoinTraces t = join_traces(n, p);
            const auto lap = spectrum(g, MatrixKind::laplacian);
            CHECK(t.trace == doctest::Approx(partial_sum(lap, n)));
            CHECK(t.trace_squared == doctest::Approx(partial_power_sum(lap, n, 2.0)));
            CHECK(t.trace == static_cast<double>(2 * g.size()));
            CHECK(t.trace_squared == static_cast<double>(2 * g.size() + zagreb_index(g)));
        }
    }
    CHECK(join_traces(6, 2).trace == 2.0 * 9.0);
}

TEST_CASE("normalization identities of the pair trial families") {
    // sum over ordered pairs of |<e_u - e_v, psi>|^2 = 2n for unit psi orthogonal to 1;
    // sum of |<sqrt(d_v) e_u - sqrt(d_u) e_v, phi>|^2 = 4m for unit phi orthogonal to sqrt(d).
    for (const auto& [name, g] : corpus::random_set(30)) {
        CAPTURE(name);
        const std::size_t n = g.order();
        const auto lap = spectrum(g, MatrixKind::laplacian, true);
        const auto nrm = spectrum(g, MatrixKind::normalized, true);
        for (std::size_t j = 1; j < n; j += 3) {
            const Eigen::VectorXd psi = lap.vectors->col(static_cast<Eigen::Index>(j));
            const Eigen::VectorXd phi = nrm.vectors->col(static_cast<Eigen::Index>(j));
            double s1 = 0.0;
            double s2 = 0.0;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = 0; v < n; ++v) {
                    if (u == v) continue;
                    const auto iu = static_cast<Eigen::Index>(u);
                    const auto iv = static_cast<Eigen::Index>(v);
                    s1 += std::pow(psi(iu) - psi(iv), 2);
                    s2 += std::pow(std::sqrt(double(g.degree(v))) * phi(iu) - std::sqrt(double(g.degree(u))) * phi(iv), 2);
                }
            }
            CHECK(s1 == doctest::Approx(2.0 * n));
            CHECK(s2 == doctest::Approx(4.0 * g.size()));
        }
    }
}

TEST_CASE("Laplacian energy and Riesz means") {
    for (const auto& [name, g] : corpus::generator_set(9)) {
        CAPTURE(name);
        const auto lap = spectrum(g, MatrixKind::laplacian);
        const double avg = 2.0 * g.size() / g.order();
        double want = 0.0;
        for (double x : lap.values) want += std::abs(x - avg);
        CHECK(laplacian_energy(lap, g.size(), g.order()) == doctest::Approx(want));
    }
    const auto lap = spectrum(gen_complete(5), MatrixKind::laplacian);  // 0, 5, 5, 5, 5
    CHECK(riesz_mean(lap, 4.5, 0.0).value == 1.0);
    CHECK(riesz_mean(lap, -0.5, 0.0).value == 0.0);
    CHECK(riesz_mean(lap, 5.5, 0.0).value == 5.0);
    CHECK(riesz_mean(lap, 6.0, 1.0).value == doctest::Approx(6.0 + 4.0));
    CHECK(riesz_mean(lap, 6.0, 2.0).value == doctest::Approx(36.0 + 4.0));
}

TEST_CASE("partial sums and magnitude order") {
    const auto adj = spectrum(gen_star(5), MatrixKind::adjacency);  // 2, 0, 0, 0, -2
    CHECK(partial_sum(adj, 1) == doctest::Approx(2.0));
    const auto order = magnitude_order(adj);
    CHECK(order.size() == 5);
    CHECK(std::abs(adj.values[order[0]]) < 1e-12);
    CHECK(std::abs(adj.values[order[4]]) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)partial_sum(adj, 6), InvalidArgument);
}
