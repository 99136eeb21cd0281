#include "eigsum/suites.hpp"

#include <cstdio>
#include <variant>

#include "eigsum/error.hpp"
#include "eigsum/json_writer.hpp"

namespace eigsum {

Suite parse_suite(const std::string& name) {
    if (name == "traces") return Suite::traces;
    if (name == "fiedler") return Suite::fiedler;
    if (name == "lsum") return Suite::lsum;
    if (name == "laplacian-pairs") return Suite::laplacian_pairs;
    if (name == "normalized") return Suite::normalized;
    if (name == "adjacency") return Suite::adjacency;
    if (name == "all") return Suite::all;
    throw InvalidArgument("unknown suite '" + name + "'");
}

const Spectrum& SpectrumCache::get(MatrixKind kind) {
    auto& slot = cache_[static_cast<int>(kind)];
    if (!slot) {
        slot = spectrum(g_, kind, false, solver_);
    }
    return *slot;
}

namespace {

using Reports = std::vector<BoundReport>;

std::int64_t i64(std::size_t x) { return static_cast<std::int64_t>(x); }

// [lo, hi] or the single requested value, which must lie inside.
std::vector<std::size_t> range_of(std::optional<std::size_t> only, std::size_t lo, std::size_t hi, const char* what) {
    std::vector<std::size_t> out;
    if (only) {
        if (*only < lo || *only > hi) {
            throw InvalidArgument(std::string(what) + " = " + std::to_string(*only) + " outside " +
                                  std::to_string(lo) + ".." + std::to_string(hi));
        }
        out.push_back(*only);
        return out;
    }
    for (std::size_t x = lo; x <= hi; ++x) {
        out.push_back(x);
    }
    return out;
}

void finish_pairs(BoundReport& r, const SuiteOptions& o) {
    if (r.pairs.empty()) {
        return;
    }
    r.param("pair_count", i64(r.pairs.size()));
    if (r.pairs.size() > o.echo_limit) {
        r.pairs.clear();
    }
}

BoundReport with_k(BoundReport r, std::size_t k) {
    r.param("k", i64(k));
    return r;
}

void traces(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    auto [t1, t2] = trace_identity_report(g, sc.get(MatrixKind::laplacian), o.tol);
    out.push_back(std::move(t1));
    out.push_back(std::move(t2));
}

void fiedler(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    const std::size_t n = g.order();
    if (n < 2) {
        out.push_back(not_applicable("fiedler_min", "needs n >= 2"));
        out.push_back(not_applicable("fiedler_max", "needs n >= 2"));
        return;
    }
    const Spectrum& lap = sc.get(MatrixKind::laplacian);
    auto [lo, hi] = fiedler_bounds(g, lap, o.tol);
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
    if (n < 3) {
        for (const char* name : {"pair_sum_min", "pair_sum_max", "degree_averaged_min", "degree_averaged_max"}) {
            out.push_back(not_applicable(name, "needs n >= 3"));
        }
        return;
    }
    out.push_back(pair_sum_bound(g, lap, Extremum::min, o.tol));
    out.push_back(pair_sum_bound(g, lap, Extremum::max, o.tol));
    out.push_back(degree_averaged_pair_bound(g, lap, Extremum::min, o.tol));
    out.push_back(degree_averaged_pair_bound(g, lap, Extremum::max, o.tol));
}

void lsum(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    const std::size_t n = g.order();
    if (n < 2) {
        out.push_back(not_applicable("l_sum_lower", "needs n >= 2"));
        out.push_back(not_applicable("l_sum_top", "needs n >= 2"));
        return;
    }
    const Spectrum& lap = sc.get(MatrixKind::laplacian);
    const auto Ls = range_of(o.L, 1, n - 1, "L");
    std::vector<Vertex> greedy[2];
    if (o.subset_strategy == SubsetStrategy::greedy_degree) {
        greedy[0] = greedy_degree_order(g, LSide::lower);
        greedy[1] = greedy_degree_order(g, LSide::top);
    }
    auto pick = [&](std::size_t size, LSide side) {
        if (o.subset_strategy == SubsetStrategy::greedy_degree) {
            const auto& order = greedy[side == LSide::lower ? 0 : 1];
            return std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
        }
        return select_subset(g, size, side, o.subset_strategy);
    };
    for (std::size_t L : Ls) {
        for (LSide side : {LSide::lower, LSide::top}) {
            const std::string suffix = side == LSide::lower ? "lower" : "top";
            try {
                out.push_back(l_sum_bound(g, lap, L, pick(L + 1, side), side, o.tol));
            } catch (const InvalidArgument& e) {
                // Only the exhaustive budget can refuse here.
                out.push_back(not_applicable("l_sum_" + suffix, e.what()));
                out.back().param("L", i64(L));
            }
            if (o.verbatim) {
                try {
                    out.push_back(l_sum_verbatim(g, lap, L, pick(L, side), side, o.tol));
                } catch (const InvalidArgument& e) {
                    out.push_back(not_applicable("l_sum_verbatim_" + suffix, e.what()));
                    out.back().param("L", i64(L));
                    out.back().asserted = false;
                }
            }
        }
    }
}

std::vector<std::size_t> pair_ks(const SuiteOptions& o, std::size_t lo, std::size_t hi) {
    if (o.pairs && !o.k) {
        throw InvalidArgument("an explicit pair set needs --k");
    }
    return range_of(o.k, lo, hi, "k");
}

void laplacian_pairs(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    const std::size_t n = g.order();
    if (n < 2) {
        out.push_back(not_applicable("laplacian_pairs", "needs n >= 2"));
        return;
    }
    const Spectrum& lap = sc.get(MatrixKind::laplacian);
    for (std::size_t k : pair_ks(o, 2, n)) {
        PairSet m0;
        if (o.pairs) {
            m0 = *o.pairs;
        } else {
            try {
                m0 = select_pairs_laplacian(g, k, o.pair_strategy);
            } catch (const InvalidArgument& e) {
                out.push_back(with_k(not_applicable("laplacian_pairs", e.what()), k));
                continue;
            }
        }
        out.push_back(laplacian_pairsum_bound(g, lap, k, m0, o.tol));
        finish_pairs(out.back(), o);
    }
}

void normalized(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    const std::size_t n = g.order();
    const char* names[] = {"normalized_pairs", "normalized_squares", "normalized_squares_printed"};
    const std::size_t count = o.squares ? (o.verbatim ? 3 : 2) : 1;
    if (n < 2 || g.min_degree() == 0) {
        const char* why = n < 2 ? "needs n >= 2" : "graph has an isolated vertex";
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(not_applicable(names[i], why));
            out.back().asserted = i < 2;
        }
        return;
    }
    const Spectrum& norm = sc.get(MatrixKind::normalized);
    for (std::size_t k : pair_ks(o, 2, n)) {
        PairSet m0;
        if (o.pairs) {
            m0 = *o.pairs;
        } else {
            try {
                m0 = select_pairs_normalized(g, k);
            } catch (const InvalidArgument& e) {
                for (std::size_t i = 0; i < count; ++i) {
                    out.push_back(with_k(not_applicable(names[i], e.what()), k));
                    out.back().asserted = i < 2;
                }
                continue;
            }
        }
        out.push_back(normalized_pairsum_bound(g, norm, k, m0, o.tol));
        finish_pairs(out.back(), o);
        if (o.squares) {
            out.push_back(normalized_square_bound(g, norm, k, m0, o.tol));
            finish_pairs(out.back(), o);
            if (o.verbatim) {
                out.push_back(normalized_square_bound_printed(g, norm, k, m0, o.tol));
                finish_pairs(out.back(), o);
            }
        }
    }
}

void adjacency(const Graph& g, const SuiteOptions& o, SpectrumCache& sc, Reports& out) {
    const std::size_t n = g.order();
    if (n < 2) {
        out.push_back(not_applicable("adjacency_sum_smallest", "needs n >= 2"));
        out.push_back(not_applicable("adjacency_sum_largest", "needs n >= 2"));
        return;
    }
    const Spectrum& adj = sc.get(MatrixKind::adjacency);
    for (std::size_t k : pair_ks(o, 1, n - 1)) {
        if (!o.pairs) {
            auto [lo, hi] = adjacency_sum_bound(g, adj, k, o.tol);
            out.push_back(std::move(lo));
            out.push_back(std::move(hi));
            if (o.verbatim) {
                out.push_back(adjacency_sum_bound_literal(g, adj, k, o.tol));
            }
        }
        if (o.squares || o.pairs) {
            const PairSet m0 = o.pairs ? *o.pairs : select_pairs_adjacency(g, k);
            out.push_back(adjacency_square_bound(g, adj, k, m0, o.tol));
            finish_pairs(out.back(), o);
        }
    }
}

}  // namespace

std::vector<BoundReport> run_suite(const Graph& g, Suite suite, const SuiteOptions& options, SpectrumCache& spectra) {
    Reports out;
    switch (suite) {
        case Suite::traces:
            traces(g, options, spectra, out);
            break;
        case Suite::fiedler:
            fiedler(g, options, spectra, out);
            break;
        case Suite::lsum:
            lsum(g, options, spectra, out);
            break;
        case Suite::laplacian_pairs:
            laplacian_pairs(g, options, spectra, out);
            break;
        case Suite::normalized:
            normalized(g, options, spectra, out);
            break;
        case Suite::adjacency:
            adjacency(g, options, spectra, out);
            break;
        case Suite::all: {
            if (options.pairs) {
                throw InvalidArgument("an explicit pair set applies to a single suite");
            }
            // k and L restrictions apply where they are meaningful; the
            // remaining suites run their full sweep.
            traces(g, options, spectra, out);
            fiedler(g, options, spectra, out);
            lsum(g, options, spectra, out);
            laplacian_pairs(g, options, spectra, out);
            normalized(g, options, spectra, out);
            adjacency(g, options, spectra, out);
            break;
        }
    }
    return out;
}

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
    out << "name,params,bound,measured,slack,verdict,asserted,tolerance\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) {
            if (!params.empty()) {
                params += ';';
            }
            params += k + '=';
            std::visit(
                [&](const auto& x) {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, std::string>) {
                        params += x;
                    } else if constexpr (std::is_same_v<T, double>) {
                        params += format_double(x);
                    } else {
                        params += std::to_string(x);
                    }
                },
                v);
        }
        const bool na = r.verdict == Verdict::not_applicable;
        out << r.name << ',' << params << ',' << (na ? "" : format_double(r.bound)) << ','
            << (na ? "" : format_double(r.measured)) << ',' << (na ? "" : format_double(r.slack)) << ','
            << to_string(r.verdict) << ',' << (r.asserted ? "true" : "false") << ',' << format_double(r.tolerance)
            << '\n';
    }
}

}  // namespace eigsum
