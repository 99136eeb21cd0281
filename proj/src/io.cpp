#include "eigsum/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "eigsum/error.hpp"

namespace eigsum {

namespace {

// Yields the whitespace tokens of each non-blank line, comments stripped.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream fields(line);
            tokens.clear();
            for (std::string tok; fields >> tok;) {
                tokens.push_back(tok);
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }

    [[noreturn]] void fail(const std::string& what) const { throw InputError(what, line_no_); }

    void expect_line(std::vector<std::string>& tokens, std::size_t count, const char* what) {
        if (!next(tokens)) {
            throw InputError(std::string("unexpected end of input, expected ") + what, line_no_ + 1);
        }
        if (tokens.size() != count) {
            fail(std::string("expected ") + std::to_string(count) + " fields for " + what);
        }
    }

    void expect_end() {
        std::vector<std::string> tokens;
        if (next(tokens)) {
            fail("unexpected trailing content");
        }
    }

    template <typename T>
    T number(const std::string& tok) const {
        T value{};
        std::istringstream s(tok);
        s >> value;
        if (!s || !s.eof()) {
            fail("malformed number '" + tok + "'");
        }
        return value;
    }

    std::size_t count(const std::string& tok) const {
        if (!tok.empty() && tok.front() == '-') {
            fail("negative value '" + tok + "'");
        }
        return number<std::size_t>(tok);
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return in;
}

// Reads m edge lines, remembering which line each came from.
std::vector<Edge> read_edges(LineReader& reader, std::size_t m, std::vector<std::size_t>& lines) {
    std::vector<Edge> edges;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < m; ++i) {
        reader.expect_line(tokens, 2, "an edge \"u v\"");
        edges.emplace_back(reader.count(tokens[0]), reader.count(tokens[1]));
        lines.push_back(reader.line());
    }
    return edges;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    reader.expect_line(tokens, 2, "header \"n m\"");
    const std::size_t n = reader.count(tokens[0]);
    const std::size_t m = reader.count(tokens[1]);
    if (n == 0) {
        reader.fail("graph must have at least one vertex");
    }
    std::vector<std::size_t> lines;
    auto edges = read_edges(reader, m, lines);
    reader.expect_end();
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const InputError& e) {
        throw InputError(e.what(), lines[e.index()]);
    }
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

std::string edge_list_text(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

LatticeGraph read_lattice(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    reader.expect_line(tokens, 3, "header \"n nu induced\"");
    const std::size_t n = reader.count(tokens[0]);
    const std::size_t nu = reader.count(tokens[1]);
    const std::size_t induced = reader.count(tokens[2]);
    if (n == 0 || nu == 0) {
        reader.fail("n and nu must be positive");
    }
    if (induced > 1) {
        reader.fail("induced flag must be 0 or 1");
    }
    std::vector<LatticePoint> coords(n);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> point_lines(n);
    for (std::size_t i = 0; i < n; ++i) {
        reader.expect_line(tokens, nu + 1, "a point \"vid x_1 ... x_nu\"");
        const std::size_t vid = reader.count(tokens[0]);
        if (vid >= n) {
            reader.fail("vertex id out of range");
        }
        if (seen[vid]) {
            reader.fail("vertex id listed twice");
        }
        seen[vid] = true;
        point_lines[vid] = reader.line();
        LatticePoint p(nu);
        for (std::size_t a = 0; a < nu; ++a) {
            p[a] = reader.number<std::int64_t>(tokens[a + 1]);
        }
        coords[vid] = std::move(p);
    }
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    if (induced == 0) {
        reader.expect_line(tokens, 1, "edge count \"m\"");
        const std::size_t m = reader.count(tokens[0]);
        edges = read_edges(reader, m, edge_lines);
    }
    reader.expect_end();
    std::set<LatticePoint> distinct;
    for (std::size_t v = 0; v < n; ++v) {
        if (!distinct.insert(coords[v]).second) {
            throw InputError("duplicate lattice point", point_lines[v]);
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= n || v >= n || !lattice_neighbors(coords[u], coords[v])) {
            throw InputError("edge endpoints are not lattice neighbors", edge_lines[i]);
        }
    }
    return gen_lattice_subgraph(std::move(coords), nu, induced == 1, edges);
}

LatticeGraph read_lattice_file(const std::string& path) {
    auto in = open_input(path);
    return read_lattice(in);
}

void write_lattice(std::ostream& out, const LatticeGraph& lg) {
    const auto& emb = lg.embedding;
    out << emb.coords.size() << ' ' << emb.nu << ' ' << (emb.induced ? 1 : 0) << '\n';
    for (std::size_t v = 0; v < emb.coords.size(); ++v) {
        out << v;
        for (auto x : emb.coords[v]) {
            out << ' ' << x;
        }
        out << '\n';
    }
    if (!emb.induced) {
        out << lg.graph.size() << '\n';
        for (auto [u, v] : lg.graph.edges()) {
            out << u << ' ' << v << '\n';
        }
    }
}

std::vector<Edge> read_pairs(std::istream& in) {
    LineReader reader(in);
    std::vector<Edge> pairs;
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        if (tokens.size() != 2) {
            reader.fail("expected an ordered pair \"u v\"");
        }
        pairs.emplace_back(reader.count(tokens[0]), reader.count(tokens[1]));
    }
    return pairs;
}

std::vector<Edge> read_pairs_file(const std::string& path) {
    auto in = open_input(path);
    return read_pairs(in);
}

}  // namespace eigsum
