#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "eigsum/error.hpp"
#include "eigsum/generators.hpp"
#include "eigsum/json_writer.hpp"
#include "eigsum/suites.hpp"

using namespace eigsum;

namespace {

std::vector<BoundReport> run(const Graph& g, Suite s, const SuiteOptions& o = {}) {
    SpectrumCache sc(g, EigenSolver::tridiagonal);
    return run_suite(g, s, o, sc);
}

std::string json(const std::vector<BoundReport>& r) {
    std::ostringstream out;
    JsonWriter w(out);
    write_reports(w, r);
    return out.str();
}

}  // namespace

TEST_CASE("K_4 suite: every report holds, Fiedler and pair sums at equality") {
    const auto reports = run(gen_complete(4), Suite::all);
    CHECK_FALSE(any_failure(reports));
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.holds());
        if (r.name.starts_with("fiedler") || r.name.starts_with("pair_sum")) {
            CHECK(r.verdict == Verdict::equality);
        }
    }
}

TEST_CASE("star_5 laplacian-pairs at k = 2 is an equality") {
    SuiteOptions o;
    o.k = 2;
    const auto r = run(gen_star(5), Suite::laplacian_pairs, o);
    REQUIRE(r.size() == 1);
    CHECK(r[0].verdict == Verdict::equality);
}

TEST_CASE("suites pass on the random corpus") {
    SuiteOptions o;
    o.squares = true;
    for (const auto& [name, g] : corpus::random_set(25)) {
        CAPTURE(name);
        CHECK_FALSE(any_failure(run(g, Suite::all, o)));
    }
}

TEST_CASE("k and L restrictions and explicit pair sets") {
    const Graph g = gen_path(6);
    SuiteOptions o;
    o.k = 3;
    const auto lp = run(g, Suite::laplacian_pairs, o);
    REQUIRE(lp.size() == 1);
    CHECK(std::get<std::int64_t>(lp[0].params[0].second) == 3);
    o.k = 9;
    CHECK_THROWS_AS(run(g, Suite::laplacian_pairs, o), InvalidArgument);

    SuiteOptions l;
    l.L = 2;
    CHECK(run(g, Suite::lsum, l).size() == 2);

    SuiteOptions p;
    p.pairs = PairSet{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
    CHECK_THROWS_AS(run(g, Suite::laplacian_pairs, p), InvalidArgument);  // needs k
    p.k = 2;
    const auto explicit_pairs = run(g, Suite::laplacian_pairs, p);
    REQUIRE(explicit_pairs.size() == 1);
    CHECK(explicit_pairs[0].pairs.size() == 6);
    p.k = 3;
    CHECK_THROWS_AS(run(g, Suite::laplacian_pairs, p), InvalidArgument);  // wrong count
    CHECK_THROWS_AS(run(g, Suite::all, p), InvalidArgument);
}

TEST_CASE("isolated vertices make the normalized suite not applicable") {
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    const Graph g = Graph::from_edge_list(4, e);
    const auto r = run(g, Suite::normalized);
    REQUIRE(r.size() == 1);
    CHECK(r[0].verdict == Verdict::not_applicable);
    CHECK_FALSE(any_failure(r));
}

TEST_CASE("exhaustive subsets beyond the budget are reported, not thrown") {
    SuiteOptions o;
    o.subset_strategy = SubsetStrategy::exhaustive;
    const auto r = run(gen_path(30), Suite::lsum, o);
    bool saw_na = false;
    for (const auto& x : r) saw_na = saw_na || x.verdict == Verdict::not_applicable;
    CHECK(saw_na);
    CHECK_FALSE(any_failure(r));
}

TEST_CASE("JSON output is deterministic and ordered") {
    const Graph g = gen_join(6, 2);
    const std::string a = json(run(g, Suite::all));
    const std::string b = json(run(g, Suite::all));
    CHECK(a == b);
    const auto name = a.find("\"name\"");
    const auto params = a.find("\"params\"");
    const auto bound = a.find("\"bound\"");
    const auto verdict = a.find("\"verdict\"");
    CHECK(name < params);
    CHECK(params < bound);
    CHECK(bound < verdict);

    std::ostringstream out;
    JsonWriter w(out, false);
    w.begin_object().field("x", 0.1).field("n", std::int64_t{-3}).field("s", "a\"b").key("nan").value(std::nan(""));
    w.end_object();
    CHECK(out.str() == "{\"x\":0.10000000000000001,\"n\":-3,\"s\":\"a\\\"b\",\"nan\":null}");
}

TEST_CASE("CSV rows") {
    std::ostringstream out;
    write_reports_csv(out, run(gen_complete(4), Suite::fiedler));
    const std::string s = out.str();
    CHECK(s.rfind("name,params,bound,measured,slack,verdict,asserted,tolerance\n", 0) == 0);
    CHECK(s.find("fiedler_min,,4,") != std::string::npos);
}

TEST_CASE("verdict rules") {
    CHECK(make_report("x", Sense::upper, 1.0, 0.5).verdict == Verdict::pass);
    CHECK(make_report("x", Sense::upper, 1.0, 1.0 + 1e-12).verdict == Verdict::equality);
    CHECK(make_report("x", Sense::upper, 1.0, 1.1).verdict == Verdict::fail);
    CHECK(make_report("x", Sense::lower, 1.0, 1.1).verdict == Verdict::pass);
    CHECK(make_report("x", Sense::equal, 1.0, 1.1).verdict == Verdict::fail);
    CHECK(make_report("x", Sense::upper, 1.0, std::nan("")).verdict == Verdict::fail);
    auto info = make_report("x", Sense::upper, 1.0, 2.0);
    info.asserted = false;
    CHECK_FALSE(any_failure({info, not_applicable("y", "n/a")}));
    CHECK(parse_suite("laplacian-pairs") == Suite::laplacian_pairs);
    CHECK_THROWS_AS(parse_suite("bogus"), InvalidArgument);
}
