#pragma once

#include <cstddef>

#include "eigsum/spectrum.hpp"

namespace eigsum {

enum class Family { path, cycle, complete, star, join };

/// Exact spectrum of a generator family in canonical order. `p` is used only
/// by the join family (1 <= p <= n-1); star and complete are the joins with
/// p = 1 and p = n-1.
Spectrum closed_form(MatrixKind kind, Family family, std::size_t n, std::size_t p = 0);

struct JoinTraces {
    double trace = 0.0;         // p(2n - p - 1)
    double trace_squared = 0.0; // p(n^2 + pn - p^2 - p)
};

/// Traces of H and H^2 for the join of K_p with n - p isolated vertices.
JoinTraces join_traces(std::size_t n, std::size_t p);

}  // namespace eigsum
