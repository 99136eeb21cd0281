#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eigsum/graph.hpp"

namespace eigsum {

/// Relative tolerance: an inequality holds when slack >= -tol * (1 + |bound|).
inline constexpr double kDefaultTolerance = 1e-9;

enum class Verdict { pass, fail, not_applicable, equality };

/// Which side of the bound the measured value must lie on.
enum class Sense {
    upper,  // measured <= bound
    lower,  // measured >= bound
    equal,  // measured == bound
};

const char* to_string(Verdict v);

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, ParamValue>> params;
    Sense sense = Sense::upper;
    double bound = 0.0;
    double measured = 0.0;
    /// Sign-adjusted so that nonnegative means the bound holds. For equality
    /// checks it is -|bound - measured|.
    double slack = 0.0;
    /// Absolute tolerance the verdict was judged against.
    double tolerance = 0.0;
    Verdict verdict = Verdict::not_applicable;
    /// Informational reports never influence exit codes or acceptance.
    bool asserted = true;
    std::vector<Edge> pairs;
    std::vector<Vertex> subset;
    std::string note;

    bool holds() const noexcept { return verdict == Verdict::pass || verdict == Verdict::equality; }
    bool failed() const noexcept { return verdict == Verdict::fail; }

    BoundReport& param(std::string key, ParamValue value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

BoundReport make_report(std::string name, Sense sense, double bound, double measured,
                        double tol = kDefaultTolerance);

/// As above, with the tolerance widened to tol * (1 + max(|bound|, scale)) for
/// quantities formed by cancellation of terms of size `scale`.
BoundReport make_report(std::string name, Sense sense, double bound, double measured, double tol, double scale);

BoundReport not_applicable(std::string name, std::string note);

/// True when some asserted report failed.
bool any_failure(const std::vector<BoundReport>& reports);

}  // namespace eigsum
