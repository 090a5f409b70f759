#include "stabgraph/graph_io.hpp"

#include <sstream>

namespace stabgraph {

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

int parse_id(std::istringstream& in, int line, int n, const char* what) {
    long long v;
    if (!(in >> v)) throw ParseError(line, std::string("malformed ") + what + " record");
    if (v < 1 || v > n) throw ParseError(line, "node id out of range");
    return static_cast<int>(v);
}

void expect_end(std::istringstream& in, int line) {
    std::string rest;
    if (in >> rest) throw ParseError(line, "trailing tokens");
}

} // namespace

ParsedGraph parse_graph_file(const std::string& text) {
    std::istringstream lines(text);
    std::string raw;
    int line = 0;
    int n = 0;
    bool have_header = false;
    char kind = 0; // 'e' or 'd' once a record fixes it
    std::vector<std::pair<int, int>> links;
    std::vector<int> loops;

    while (std::getline(lines, raw)) {
        ++line;
        if (blank(raw) || raw[raw.find_first_not_of(" \t")] == '#') continue;
        std::istringstream in(raw);
        std::string tag;
        in >> tag;
        if (tag == "n") {
            if (have_header) throw ParseError(line, "duplicate header");
            long long v;
            if (!(in >> v) || v < 1) throw ParseError(line, "malformed header");
            expect_end(in, line);
            n = static_cast<int>(v);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line, "expected header before records");
        if (tag == "e" || tag == "d") {
            char c = tag[0];
            if (kind == 0) {
                kind = c;
            } else if (kind != c) {
                throw ParseError(line, "mixed edge kinds");
            }
            int u = parse_id(in, line, n, "edge");
            int v = parse_id(in, line, n, "edge");
            expect_end(in, line);
            if (c == 'e' && u == v) throw ParseError(line, "loop in edge list");
            links.emplace_back(u, v);
        } else if (tag == "l") {
            int u = parse_id(in, line, n, "loop");
            expect_end(in, line);
            loops.push_back(u);
        } else {
            throw ParseError(line, "unknown record '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(line, "missing header");

    if (kind == 'd') {
        std::vector<std::pair<int, int>> arcs = std::move(links);
        for (int u : loops) arcs.emplace_back(u, u);
        return Digraph(n, std::move(arcs));
    }
    return Graph(n, std::move(links), std::move(loops));
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.node_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    for (int u : g.loops()) out << "l " << u << '\n';
    return out.str();
}

std::string serialize(const Digraph& d) {
    std::ostringstream out;
    out << "n " << d.node_count() << '\n';
    for (auto [i, j] : d.arcs()) {
        if (i != j) out << "d " << i << ' ' << j << '\n';
    }
    for (auto [i, j] : d.arcs()) {
        if (i == j) out << "l " << i << '\n';
    }
    return out.str();
}

} // namespace stabgraph
