#include "eigsum/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

using std::numbers::pi;

void append(std::vector<double>& v, double value, std::size_t multiplicity) {
    v.insert(v.end(), multiplicity, value);
}

double sin_sq(double x) {
    const double s = std::sin(x);
    return s * s;
}

std::vector<double> path_values(MatrixKind kind, std::size_t n) {
    std::vector<double> v;
    const double dn = static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double dj = static_cast<double>(j);
        switch (kind) {
            case MatrixKind::adjacency:
                v.push_back(2.0 * std::cos(pi * (dj + 1.0) / (dn + 1.0)));
                break;
            case MatrixKind::laplacian:
                v.push_back(4.0 * sin_sq(pi * dj / (2.0 * dn)));
                break;
            case MatrixKind::normalized:
                v.push_back(1.0 - std::cos(pi * dj / (dn - 1.0)));
                break;
        }
    }
    return v;
}

std::vector<double> cycle_values(MatrixKind kind, std::size_t n) {
    std::vector<double> v;
    const double dn = static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lambda = 4.0 * sin_sq(pi * static_cast<double>(j) / dn);
        switch (kind) {
            case MatrixKind::adjacency:
                v.push_back(2.0 - lambda);
                break;
            case MatrixKind::laplacian:
                v.push_back(lambda);
                break;
            case MatrixKind::normalized:
                v.push_back(lambda / 2.0);
                break;
        }
    }
    return v;
}

std::vector<double> join_values(MatrixKind kind, std::size_t n, std::size_t p) {
    std::vector<double> v;
    const double dn = static_cast<double>(n);
    const double dp = static_cast<double>(p);
    switch (kind) {
        case MatrixKind::laplacian:
            append(v, 0.0, 1);
            append(v, dp, n - p - 1);
            append(v, dn, p);
            break;
        case MatrixKind::normalized:
            append(v, 0.0, 1);
            append(v, 1.0, n - p - 1);
            append(v, dn / (dn - 1.0), p - 1);
            append(v, (2.0 * dn - 1.0 - dp) / (dn - 1.0), 1);
            break;
        case MatrixKind::adjacency: {
            const double d = std::sqrt((dp - 1.0) * (dp - 1.0) + 4.0 * dp * (dn - dp));
            append(v, 0.0, n - p - 1);
            append(v, -1.0, p - 1);
            append(v, (dp - 1.0 + d) / 2.0, 1);
            append(v, (dp - 1.0 - d) / 2.0, 1);
            break;
        }
    }
    return v;
}

}  // namespace

Spectrum closed_form(MatrixKind kind, Family family, std::size_t n, std::size_t p) {
    std::vector<double> values;
    switch (family) {
        case Family::path:
            if (n < 2) {
                throw InvalidArgument("path closed form needs n >= 2");
            }
            values = path_values(kind, n);
            break;
        case Family::cycle:
            if (n < 3) {
                throw InvalidArgument("cycle closed form needs n >= 3");
            }
            values = cycle_values(kind, n);
            break;
        case Family::complete:
            if (n < 2) {
                throw InvalidArgument("complete closed form needs n >= 2");
            }
            values = join_values(kind, n, n - 1);
            break;
        case Family::star:
            if (n < 2) {
                throw InvalidArgument("star closed form needs n >= 2");
            }
            values = join_values(kind, n, 1);
            break;
        case Family::join:
            if (n < 2 || p < 1 || p > n - 1) {
                throw InvalidArgument("join closed form needs 1 <= p <= n-1, got p = " + std::to_string(p));
            }
            values = join_values(kind, n, p);
            break;
    }
    std::sort(values.begin(), values.end());
    if (kind == MatrixKind::adjacency) {
        std::reverse(values.begin(), values.end());
    }
    return Spectrum{kind, std::move(values), std::nullopt};
}

JoinTraces join_traces(std::size_t n, std::size_t p) {
    if (p < 1 || p + 1 > n) {
        throw InvalidArgument("join traces need 1 <= p <= n-1");
    }
    const double dn = static_cast<double>(n);
    const double dp = static_cast<double>(p);
    return JoinTraces{dp * (2.0 * dn - dp - 1.0), dp * (dn * dn + dp * dn - dp * dp - dp)};
}

}  // namespace eigsum
