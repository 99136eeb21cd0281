#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eigsum/avg_bounds.hpp"
#include "eigsum/basis_bounds.hpp"
#include "eigsum/eigen_solver.hpp"
#include "eigsum/graph.hpp"
#include "eigsum/report.hpp"
#include "eigsum/spectrum.hpp"

namespace eigsum {

// Report assembly for the audit suites. Reports come out in a fixed order:
// suite, then k (or L), then bound name, so repeated runs are identical.

enum class Suite { traces, fiedler, lsum, laplacian_pairs, normalized, adjacency, all };

/// Parses "fiedler", "lsum", "laplacian-pairs", "normalized", "adjacency",
/// "traces" or "all"; InvalidArgument otherwise.
Suite parse_suite(const std::string& name);

struct SuiteOptions {
    /// Restricts k (pair-set suites) to one value; all valid k otherwise.
    std::optional<std::size_t> k;
    /// Restricts L (L-sum suite) to one value; 1..n-1 otherwise.
    std::optional<std::size_t> L;
    SubsetStrategy subset_strategy = SubsetStrategy::greedy_degree;
    PairStrategy pair_strategy = PairStrategy::greedy;
    /// Adds the square-sum bounds to the normalized and adjacency suites.
    bool squares = false;
    /// Adds the informational printed variants.
    bool verbatim = false;
    /// Explicit M0; requires a single k and a single pair-set suite.
    std::optional<PairSet> pairs;
    /// Selected pair sets larger than this are summarized by their size.
    std::size_t echo_limit = 64;
    double tol = kDefaultTolerance;
};

/// Spectra of the three matrices, computed on first use.
class SpectrumCache {
public:
    SpectrumCache(const Graph& g, EigenSolver solver) : g_(g), solver_(solver) {}
    const Spectrum& get(MatrixKind kind);

private:
    const Graph& g_;
    EigenSolver solver_;
    std::optional<Spectrum> cache_[3];
};

std::vector<BoundReport> run_suite(const Graph& g, Suite suite, const SuiteOptions& options, SpectrumCache& spectra);

/// One row per report: name,params,bound,measured,slack,verdict,asserted,tolerance.
/// Params are joined as key=value with ';'.
void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace eigsum
