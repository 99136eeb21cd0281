#include "eigsum/report.hpp"

#include <algorithm>
#include <cmath>

namespace eigsum {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "PASS";
        case Verdict::fail:
            return "FAIL";
        case Verdict::not_applicable:
            return "NOT_APPLICABLE";
        case Verdict::equality:
            return "EQUALITY";
    }
    return "?";
}

BoundReport make_report(std::string name, Sense sense, double bound, double measured, double tol) {
    return make_report(std::move(name), sense, bound, measured, tol, 0.0);
}

BoundReport make_report(std::string name, Sense sense, double bound, double measured, double tol, double scale) {
    BoundReport r;
    r.name = std::move(name);
    r.sense = sense;
    r.bound = bound;
    r.measured = measured;
    r.tolerance = tol * (1.0 + std::max(std::abs(bound), scale));
    switch (sense) {
        case Sense::upper:
            r.slack = bound - measured;
            break;
        case Sense::lower:
            r.slack = measured - bound;
            break;
        case Sense::equal:
            r.slack = -std::abs(bound - measured);
            break;
    }
    if (std::isnan(r.slack) || r.slack < -r.tolerance) {
        r.verdict = Verdict::fail;
    } else if (std::abs(r.slack) <= r.tolerance) {
        r.verdict = Verdict::equality;
    } else {
        r.verdict = Verdict::pass;
    }
    return r;
}

BoundReport not_applicable(std::string name, std::string note) {
    BoundReport r;
    r.name = std::move(name);
    r.verdict = Verdict::not_applicable;
    r.note = std::move(note);
    return r;
}

bool any_failure(const std::vector<BoundReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const BoundReport& r) { return r.asserted && r.failed(); });
}

}  // namespace eigsum
