#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "stabgraph/cli.hpp"
#include "stabgraph/graph_io.hpp"
#include "stabgraph/rng.hpp"

using namespace stabgraph;

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_command(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

int parse_error_line(const std::string& text) {
    try {
        parse_graph_file(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

Graph random_graph(Rng& rng, int n, double p, double q) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (rng.next_uniform() < p) edges.emplace_back(u, v);
        }
    }
    std::vector<int> loops;
    for (int u = 1; u <= n; ++u) {
        if (rng.next_uniform() < q) loops.push_back(u);
    }
    return Graph(n, std::move(edges), std::move(loops));
}

} // namespace

TEST_CASE("graph files round-trip through their canonical form") {
    const std::string star = "n 4\ne 1 4\ne 2 4\ne 3 4\n";
    ParsedGraph parsed = parse_graph_file(star);
    REQUIRE(std::holds_alternative<Graph>(parsed));
    CHECK(serialize(std::get<Graph>(parsed)) == star);

    const std::string dig = "n 3\nd 1 2\nd 2 1\nl 2\n";
    ParsedGraph pd = parse_graph_file(dig);
    REQUIRE(std::holds_alternative<Digraph>(pd));
    CHECK(std::get<Digraph>(pd).has_arc(2, 2));
    CHECK(serialize(std::get<Digraph>(pd)) == dig);

    // loops alone stay undirected
    ParsedGraph pl = parse_graph_file("n 2\nl 2\n");
    REQUIRE(std::holds_alternative<Graph>(pl));

    ParsedGraph commented = parse_graph_file("# header next\n\n  n 2\n  e 2 1\n# done\n");
    CHECK(serialize(std::get<Graph>(commented)) == "n 2\ne 1 2\n");

    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(9));
        Graph g = random_graph(rng, n, 0.4, 0.4);
        ParsedGraph back = parse_graph_file(serialize(g));
        REQUIRE(std::holds_alternative<Graph>(back));
        CHECK(std::get<Graph>(back).edges() == g.edges());
        CHECK(std::get<Graph>(back).loops() == g.loops());
    }
}

TEST_CASE("parse errors carry their line number") {
    try {
        parse_graph_file("n 3\ne 1 2\nd 2 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "mixed edge kinds at line 3");
        CHECK(e.line == 3);
    }

    CHECK(parse_error_line("e 1 2\n") == 1);                 // record before header
    CHECK(parse_error_line("n 2\nn 3\n") == 2);              // duplicate header
    CHECK(parse_error_line("n x\n") == 1);                   // malformed header
    CHECK(parse_error_line("n 0\n") == 1);                   // malformed header
    CHECK(parse_error_line("n 2\ne 1 3\n") == 2);            // id out of range
    CHECK(parse_error_line("n 2\ne 2 2\n") == 2);            // loop spelled as an edge
    CHECK(parse_error_line("n 2\ne 1 2 9\n") == 2);          // trailing tokens
    CHECK(parse_error_line("n 2\nq 1\n") == 2);              // unknown record
    CHECK(parse_error_line("n 2\ne 1\n") == 2);              // missing endpoint
    CHECK(parse_error_line("# nothing\n") == 1);             // missing header

    try {
        parse_graph_file("n 2\nq 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "unknown record 'q'"));
    }
}

TEST_CASE("command line entry points and exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "sample"));
    CHECK(run({"check"}).code == 2); // missing file argument
    CHECK(run({"check", "no_such_file.graph"}).code == 1);
    CHECK(contains(run({"check", "no_such_file.graph"}).err, "error:"));
}

TEST_CASE("sampling is reproducible and honours the model flags") {
    std::vector<std::string> args{"sample", "--model", "a", "--n",    "6",
                                  "--p",    "0.5",     "--q", "0.4",  "--seed", "11"};
    RunResult first = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == run(args).out);
    ParsedGraph parsed = parse_graph_file(first.out);
    REQUIRE(std::holds_alternative<Graph>(parsed));
    CHECK(std::get<Graph>(parsed).node_count() == 6);

    RunResult fixed = run({"sample", "--model", "b", "--n", "7", "--N", "9", "--M", "2",
                           "--seed", "3"});
    REQUIRE(fixed.code == 0);
    Graph gb = std::get<Graph>(parse_graph_file(fixed.out));
    CHECK(gb.edges().size() == 9);
    CHECK(gb.loops().size() == 2);

    std::string path = "cli_test_sample.graph";
    RunResult to_file = run({"sample", "--model", "a", "--n", "5", "--p", "1", "--q", "1",
                             "--seed", "2", "--out", path});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(std::get<Graph>(parse_graph_file(buf.str())).edges().size() == 10);
    std::remove(path.c_str());

    CHECK(run({"sample", "--model", "a", "--n", "5", "--N", "3", "--seed", "1"}).code == 2);
    CHECK(run({"sample", "--model", "b", "--n", "5", "--p", "0.5", "--seed", "1"}).code == 2);
    CHECK(run({"sample", "--model", "c", "--n", "5", "--seed", "1"}).code == 2);
    // counts that cannot fit are a domain error, not a usage error
    CHECK(run({"sample", "--model", "b", "--n", "4", "--N", "11", "--M", "0", "--seed", "1"})
              .code == 1);
}

TEST_CASE("verdict reports pin their certificates") {
    std::string star = temp_file("star.graph", "n 4\ne 1 4\ne 2 4\ne 3 4\n");
    RunResult r = run({"check", star});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "kind=graph\n"));
    CHECK(contains(r.out, "n=4\n"));
    CHECK(contains(r.out, "L=0\n"));
    CHECK(contains(r.out, "H=0\n"));
    CHECK(contains(r.out, "components=1\n"));
    CHECK(contains(r.out, "loopless_component={1,2,3,4}\n"));
    CHECK(contains(r.out, "hall_members={1,2}\n"));
    CHECK(contains(r.out, "hall_neighbors={4}\n"));
    CHECK(contains(r.out, "UNSTABLE\n"));

    std::string looped = temp_file("tri.graph", "n 3\ne 1 2\ne 1 3\ne 2 3\nl 1\nl 2\nl 3\n");
    RunResult s = run({"check", looped});
    CHECK(contains(s.out, "L=1\n"));
    CHECK(contains(s.out, "H=1\n"));
    CHECK(contains(s.out, "loop_witness=1\n"));
    CHECK(contains(s.out, "decomposition="));
    CHECK(contains(s.out, "STABLE\n"));

    std::string fig = temp_file("fig.graph", "n 3\nd 1 2\nd 2 1\nd 3 2\nd 1 3\nl 2\n");
    RunResult f = run({"check", fig});
    CHECK(contains(f.out, "kind=digraph\n"));
    CHECK(contains(f.out, "chain={2}<{1,2}<{1,2,3}\n"));
    CHECK(contains(f.out, "STABLE\n"));

    std::string cyc = temp_file("cyc.graph", "n 3\nd 1 2\nd 2 3\nd 3 1\n");
    RunResult c = run({"check", cyc});
    CHECK(contains(c.out, "missing_k=1\n"));
    CHECK(contains(c.out, "UNSTABLE\n"));

    RunResult forced = run({"check", star, "--digraph"});
    CHECK(contains(forced.out, "kind=digraph\n"));
    CHECK(contains(forced.out, "UNSTABLE\n"));

    std::remove(star.c_str());
    std::remove(looped.c_str());
    std::remove(fig.c_str());
    std::remove(cyc.c_str());
}

TEST_CASE("deficiency report prints the class and the witness") {
    std::string star = temp_file("thin_star.graph", "n 4\ne 1 4\ne 2 4\ne 3 4\n");
    RunResult r = run({"thin", star});
    REQUIRE(r.code == 0);
    CHECK(r.out == "F_2, I={1,2}, N(I)={4}\n");

    std::string looped = temp_file("thin_loop.graph", "n 2\nl 1\nl 2\n");
    CHECK(run({"thin", looped}).out == "none\n");

    std::string dig = temp_file("thin_dig.graph", "n 2\nd 1 2\n");
    CHECK(run({"thin", dig}).code == 1);

    std::remove(star.c_str());
    std::remove(looped.c_str());
    std::remove(dig.c_str());
}

TEST_CASE("limit values print with six significant digits") {
    RunResult r = run({"asymptote", "--model", "a", "--regime", "critical:0", "--q",
                       "constant:0.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "0.606531\n");
    CHECK(r.err.empty());

    RunResult b = run({"asymptote", "--model", "b", "--regime", "critical:0", "--M",
                       "constant:3"});
    CHECK(b.out == "0.367879\n");

    RunResult boundary = run({"asymptote", "--model", "a", "--regime", "sparse", "--q",
                              "constant:1"});
    CHECK(boundary.out == "1\n");
    CHECK(contains(boundary.err, "boundary"));

    CHECK(run({"asymptote", "--model", "a", "--regime", "critical:0"}).code == 2);
    CHECK(run({"asymptote", "--model", "a", "--regime", "critical", "--q", "constant:1"}).code ==
          2);
    CHECK(run({"asymptote", "--model", "b", "--regime", "dense", "--q", "constant:1"}).code == 2);
    CHECK(run({"asymptote", "--model", "a", "--regime", "dense", "--q", "scaled:-1"}).code == 1);
}

TEST_CASE("sweeps emit one CSV row per grid point, independent of threads") {
    std::vector<std::string> base{"sweep", "--model", "a",   "--n",  "30",       "--trials",
                                  "40",    "--seed",  "5",   "--c",  "0,1",      "--mu",
                                  "0.5,1", "--q-regime",     "constant"};
    std::vector<std::string> one = base;
    one.push_back("--threads");
    one.push_back("1");
    std::vector<std::string> four = base;
    four.push_back("--threads");
    four.push_back("4");

    RunResult r1 = run(one);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == run(four).out);

    std::istringstream lines(r1.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "model,n,trials,seed,c,p,q,N,M,mu,p_stable,p_L,p_H,ci_low,ci_high,asymptote");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].rfind("a,30,40,", 0) == 0);
        CHECK(rows[i].back() != ','); // asymptote column filled on regime grids
    }

    RunResult raw = run({"sweep", "--model", "a", "--n", "12", "--trials", "25", "--seed", "9",
                         "--p", "0.1", "--q", "0.3", "--threads", "2"});
    REQUIRE(raw.code == 0);
    std::istringstream raw_lines(raw.out);
    std::getline(raw_lines, line);
    std::getline(raw_lines, line);
    CHECK(line.back() == ','); // no limit annotation without a regime

    RunResult modelb = run({"sweep", "--model", "b", "--n", "14", "--trials", "20", "--seed",
                            "3", "--N", "20", "--M", "2,3", "--threads", "2"});
    REQUIRE(modelb.code == 0);
    std::istringstream b_lines(modelb.out);
    std::vector<std::string> b_rows;
    while (std::getline(b_lines, line)) b_rows.push_back(line);
    CHECK(b_rows.size() == 3);
    CHECK(b_rows[1].rfind("b,14,20,", 0) == 0);

    CHECK(run({"sweep", "--model", "a", "--n", "10", "--trials", "5", "--seed", "1", "--c", "0",
               "--p", "0.1", "--q", "0.1"})
              .code == 2);
    CHECK(run({"sweep", "--model", "a", "--n", "10", "--trials", "5", "--seed", "1", "--c", "0",
               "--mu", "1"})
              .code == 2); // --q-regime missing
    CHECK(run({"sweep", "--model", "a", "--n", "10", "--trials", "5", "--seed", "1", "--c", "0",
               "--M", "2"})
              .code == 2);
    CHECK(run({"sweep", "--model", "b", "--n", "10", "--trials", "5", "--seed", "1", "--N", "5",
               "--q", "0.5"})
              .code == 2);
}

TEST_CASE("pattern search reports a witness matrix or a miss") {
    std::string looped = temp_file("oracle_diag.graph", "n 3\nl 1\nl 2\nl 3\n");
    RunResult hit = run({"oracle", looped, "--seed", "4"});
    REQUIRE(hit.code == 0);
    CHECK(contains(hit.out, "n=3\n"));
    CHECK(contains(hit.out, "found=1\n"));
    std::istringstream lines(hit.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    std::getline(lines, line); // first matrix row
    std::istringstream row(line);
    double a11 = 0.0, a12 = 1.0, a13 = 1.0;
    row >> a11 >> a12 >> a13;
    CHECK(a11 < 0.0);
    CHECK(a12 == 0.0);
    CHECK(a13 == 0.0);

    std::string cyc = temp_file("oracle_cyc.graph", "n 3\nd 1 2\nd 2 3\nd 3 1\n");
    RunResult miss = run({"oracle", cyc, "--seed", "4", "--restarts", "6"});
    REQUIRE(miss.code == 0);
    CHECK(contains(miss.out, "found=0\n"));

    std::remove(looped.c_str());
    std::remove(cyc.c_str());
}
