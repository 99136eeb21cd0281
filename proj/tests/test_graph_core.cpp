#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "eigsum/error.hpp"
#include "eigsum/generators.hpp"
#include "eigsum/io.hpp"
#include "eigsum/json_writer.hpp"

using namespace eigsum;

TEST_CASE("edge list construction merges duplicates and sorts") {
    const std::vector<Edge> pairs{{2, 1}, {0, 1}, {1, 2}, {1, 0}};
    const Graph g = Graph::from_edge_list(3, pairs);
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degrees() == std::vector<std::size_t>{1, 2, 1});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 1));
    CHECK(g == gen_path(3));
}

TEST_CASE("invalid pairs report their index") {
    const std::vector<Edge> loop{{0, 1}, {2, 2}};
    try {
        (void)Graph::from_edge_list(3, loop);
        FAIL("self-loop accepted");
    } catch (const InputError& e) {
        CHECK(e.index() == 1);
    }
    const std::vector<Edge> range{{0, 5}};
    CHECK_THROWS_AS((void)Graph::from_edge_list(3, range), InputError);
    CHECK_THROWS_AS((void)Graph::from_edge_list(0, {}), InvalidArgument);
}

TEST_CASE("generator edge counts") {
    CHECK(gen_path(7).size() == 6);
    CHECK(gen_cycle(7).size() == 7);
    CHECK(gen_complete(4).size() == 6);
    CHECK(gen_star(6).size() == 5);
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t p = 1; p < n; ++p) {
            CHECK(gen_join(n, p).size() == p * (n - p) + p * (p - 1) / 2);
        }
    }
    CHECK(gen_join(5, 2).size() == 7);
    CHECK(gen_join(6, 1) == gen_star(6));
    CHECK(gen_join(6, 5) == gen_complete(6));
    CHECK_THROWS_AS(gen_join(5, 0), InvalidArgument);
    CHECK_THROWS_AS(gen_join(5, 5), InvalidArgument);
}

TEST_CASE("random generator is deterministic and connected") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        const Graph a = gen_random_connected(30, 0.15, seed);
        const Graph b = gen_random_connected(30, 0.15, seed);
        CHECK(a == b);
        CHECK(is_connected(a));
    }
    CHECK_FALSE(gen_random_connected(30, 0.15, 1) == gen_random_connected(30, 0.15, 2));
    SplitMix64 r(0);
    // Reference outputs of SplitMix64 seeded with 0.
    CHECK(r.next() == 0xe220a8397b1dcdafULL);
    CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("zagreb index, connectivity and complement") {
    CHECK(zagreb_index(gen_star(5)) == 16 + 4);
    CHECK(zagreb_index(gen_complete(4)) == 36);
    CHECK(is_connected(gen_path(9)));
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_FALSE(is_connected(Graph::from_edge_list(4, two)));
    CHECK(complement(gen_complete(5)).size() == 0);
    CHECK(complement(complement(gen_cycle(6))) == gen_cycle(6));
}

TEST_CASE("edge list text format round trips") {
    CHECK(edge_list_text(gen_path(3)) == "3 2\n0 1\n1 2\n");
    for (const auto& [name, g] : corpus::generator_set(7)) {
        std::istringstream in(edge_list_text(g));
        CHECK_MESSAGE(read_edge_list(in) == g, name);
    }
    std::istringstream commented("# header\n\n4 2 # n m\n3 2\n0 1   # trailing\n");
    const Graph g = read_edge_list(commented);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("edge list parse errors carry 1-based line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            (void)read_edge_list(in);
        } catch (const InputError& e) {
            return e.index();
        }
        return 0;
    };
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
    CHECK(line_of("# c\n3 2\n0 1\n0 9\n") == 4);
    CHECK(line_of("3 2\n0 1\n") == 3);
    CHECK(line_of("") == 1);
}

TEST_CASE("lattice files and embeddings") {
    const std::string square = "4 2 1\n0 0 0\n1 1 0\n2 1 1\n3 0 1\n";
    std::istringstream in(square);
    const LatticeGraph lg = read_lattice(in);
    CHECK(lg.graph == gen_cycle(4));
    CHECK(lg.embedding.nu == 2);
    CHECK_NOTHROW(validate_embedding(lg.graph, lg.embedding));

    // The same points without the closing edge form a non-induced path.
    std::istringstream sub("4 2 0\n0 0 0\n1 1 0\n2 1 1\n3 0 1\n3\n0 1\n1 2\n2 3\n");
    const LatticeGraph path = read_lattice(sub);
    CHECK(path.graph == gen_path(4));
    CHECK_FALSE(path.embedding.induced);
    LatticeEmbedding forced = path.embedding;
    forced.induced = true;
    CHECK_THROWS_AS(validate_embedding(path.graph, forced), InvalidArgument);

    std::istringstream dup("2 1 1\n0 0\n1 0\n");
    CHECK_THROWS_AS((void)read_lattice(dup), InputError);
    std::istringstream far("2 1 0\n0 0\n1 2\n1\n0 1\n");
    CHECK_THROWS_AS((void)read_lattice(far), InputError);

    std::ostringstream out;
    write_lattice(out, lg);
    std::istringstream back(out.str());
    const LatticeGraph again = read_lattice(back);
    CHECK(again.graph == lg.graph);
    CHECK(again.embedding.coords == lg.embedding.coords);
}

TEST_CASE("lattice clusters are connected induced subgraphs") {
    for (std::size_t nu : {1, 2, 3}) {
        const auto pts = gen_random_lattice_cluster(nu, 80, 5);
        const LatticeGraph lg = gen_lattice_subgraph(pts, nu, true);
        CHECK(lg.graph.order() == 80);
        CHECK(is_connected(lg.graph));
        CHECK(lg.graph.max_degree() <= 2 * nu);
        CHECK_NOTHROW(validate_embedding(lg.graph, lg.embedding));
    }
    for (const auto& [name, lg] : corpus::lattice_set(12, 120)) {
        CHECK_MESSAGE(is_connected(lg.graph), name);
        CHECK_NOTHROW(validate_embedding(lg.graph, lg.embedding));
    }
}

TEST_CASE("pair files") {
    std::istringstream in("0 1\n# c\n2 0\n");
    CHECK(read_pairs(in) == std::vector<Edge>{{0, 1}, {2, 0}});
}

TEST_CASE("FNV-1a digest") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hex64(0xabcULL) == "0000000000000abc");
}
