#include "stabgraph/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stabgraph/asymptotics.hpp"
#include "stabgraph/graph_io.hpp"
#include "stabgraph/matching.hpp"
#include "stabgraph/montecarlo.hpp"
#include "stabgraph/oracle.hpp"
#include "stabgraph/rng.hpp"
#include "stabgraph/stability.hpp"

namespace stabgraph {

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write file: " + path);
    file << text;
}

double parse_tail_number(const std::string& s, std::size_t colon) {
    try {
        std::size_t used = 0;
        double v = std::stod(s.substr(colon + 1), &used);
        if (colon + 1 + used != s.size()) throw std::invalid_argument("trail");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("regime", "malformed regime parameter in '" + s + "'");
    }
}

EdgeRegime parse_edge_regime(const std::string& s) {
    if (s == "sparse") return {GrowthClass::Sparse, 0.0};
    if (s == "dense") return {GrowthClass::Dense, 0.0};
    if (s.rfind("critical:", 0) == 0) return {GrowthClass::Critical, parse_tail_number(s, 8)};
    throw CLI::ValidationError("regime", "expected sparse, dense or critical:<c>, got '" + s + "'");
}

std::pair<LoopRegimeA, double> parse_loop_regime_a(const std::string& s) {
    if (s.rfind("scaled:", 0) == 0) return {LoopRegimeA::Scaled, parse_tail_number(s, 6)};
    if (s.rfind("constant:", 0) == 0) return {LoopRegimeA::Constant, parse_tail_number(s, 8)};
    throw CLI::ValidationError("regime", "expected scaled:<mu> or constant:<mu>, got '" + s + "'");
}

std::pair<LoopRegimeB, double> parse_loop_regime_b(const std::string& s) {
    if (s.rfind("constant:", 0) == 0) return {LoopRegimeB::Constant, parse_tail_number(s, 8)};
    if (s.rfind("linear:", 0) == 0) return {LoopRegimeB::Linear, parse_tail_number(s, 6)};
    throw CLI::ValidationError("regime", "expected constant:<mu> or linear:<mu>, got '" + s + "'");
}

std::string format_cycles(const Decomposition& dec) {
    std::string s;
    for (const auto& cyc : dec.cycles) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

const char* verdict_token(Stability s) {
    switch (s) {
        case Stability::Stable: return "STABLE";
        case Stability::Unstable: return "UNSTABLE";
        default: return "UNKNOWN";
    }
}

void print_common_certificates(std::ostream& out, const StabilityVerdict& v) {
    if (!v.component_loops.empty()) {
        out << "loop_witness=";
        for (std::size_t i = 0; i < v.component_loops.size(); ++i) {
            if (i) out << ',';
            out << v.component_loops[i];
        }
        out << '\n';
    }
    if (v.hamiltonian) out << "decomposition=" << format_cycles(*v.hamiltonian) << '\n';
    if (v.loopless_component) out << "loopless_component=" << v.loopless_component->to_string() << '\n';
    if (v.hall) {
        out << "hall_members=" << v.hall->members.to_string() << '\n';
        out << "hall_neighbors=" << v.hall->neighbors.to_string() << '\n';
    }
    if (v.chain) {
        out << "chain=";
        for (std::size_t i = 0; i < v.chain->size(); ++i) {
            if (i) out << '<';
            out << (*v.chain)[i].covered.to_string();
        }
        out << '\n';
    }
    if (v.missing_k) out << "missing_k=" << *v.missing_k << '\n';
    if (v.failing_component) out << "failing_component=" << v.failing_component->to_string() << '\n';
    if (!v.note.empty()) out << "note=" << v.note << '\n';
}

int do_check(const std::string& path, bool force_digraph, std::ostream& out) {
    ParsedGraph parsed = parse_graph_file(read_file(path));
    if (std::holds_alternative<Digraph>(parsed) || force_digraph) {
        Digraph d = std::holds_alternative<Digraph>(parsed)
                        ? std::get<Digraph>(std::move(parsed))
                        : expand_symmetric(std::get<Graph>(parsed));
        StabilityVerdict v = check_digraph_stability(d);
        out << "kind=digraph\n";
        out << "n=" << d.node_count() << '\n';
        out << "L=" << (v.l_flag ? 1 : 0) << '\n';
        out << "H=" << (v.h_flag ? 1 : 0) << '\n';
        print_common_certificates(out, v);
        out << verdict_token(v.status) << '\n';
        return 0;
    }
    const Graph& g = std::get<Graph>(parsed);
    StabilityVerdict v = check_symmetric_stability(g);
    out << "kind=graph\n";
    out << "n=" << g.node_count() << '\n';
    out << "L=" << (v.l_flag ? 1 : 0) << '\n';
    out << "H=" << (v.h_flag ? 1 : 0) << '\n';
    out << "components=" << connected_components(g).size() << '\n';
    print_common_certificates(out, v);
    out << verdict_token(v.status) << '\n';
    return 0;
}

int do_thin(const std::string& path, std::ostream& out) {
    ParsedGraph parsed = parse_graph_file(read_file(path));
    if (!std::holds_alternative<Graph>(parsed)) {
        throw std::runtime_error("thin expects an undirected graph file");
    }
    ThinClass tc = classify_thin(std::get<Graph>(parsed));
    if (!tc.k) {
        out << "none\n";
        return 0;
    }
    out << "F_" << *tc.k << ", I=" << tc.witness->members.to_string()
        << ", N(I)=" << tc.witness->neighbors.to_string() << '\n';
    return 0;
}

struct SweepAxis {
    std::vector<double> c;        // critical offsets
    std::vector<double> raw_p;    // raw densities (model a)
    std::vector<long long> raw_n; // raw edge counts (model b)
};

std::string csv_cell(const std::optional<double>& v) { return v ? fmt6(*v) : std::string(); }

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"structural stability toolkit for sparse interaction patterns"};
    app.name("stabgraph");
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "draw one random graph and print it");
    std::string s_model, s_out;
    int s_n = 0;
    double s_p = -1.0, s_q = -1.0;
    long long s_edges = -1;
    int s_loops = -1;
    std::uint64_t s_seed = 0;
    sample->add_option("--model", s_model, "a or b")->required();
    sample->add_option("--n", s_n, "node count")->required();
    sample->add_option("--p", s_p, "edge probability (model a)");
    sample->add_option("--q", s_q, "loop probability (model a)");
    sample->add_option("--N", s_edges, "edge count (model b)");
    sample->add_option("--M", s_loops, "loop count (model b)");
    sample->add_option("--seed", s_seed, "random seed")->required();
    sample->add_option("--out", s_out, "output path (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "stability verdict with certificate");
    std::string c_file;
    bool c_digraph = false;
    check->add_option("file", c_file, "graph file")->required();
    check->add_flag("--digraph", c_digraph, "run the directed checks on a symmetric input");

    // thin
    auto* thin = app.add_subcommand("thin", "minimal deficiency class of a graph");
    std::string t_file;
    thin->add_option("file", t_file, "graph file")->required();

    // asymptote
    auto* asym = app.add_subcommand("asymptote", "limit stability probability for a regime");
    std::string a_model, a_regime, a_q, a_m;
    asym->add_option("--model", a_model, "a or b")->required();
    asym->add_option("--regime", a_regime, "sparse, dense or critical:<c>")->required();
    asym->add_option("--q", a_q, "loop regime, scaled:<mu> or constant:<mu> (model a)");
    asym->add_option("--M", a_m, "loop regime, constant:<mu> or linear:<mu> (model b)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo grid, CSV output");
    std::string w_model, w_out, w_q_regime, w_m_regime;
    int w_n = 0, w_threads = 0;
    long long w_trials = 0;
    std::uint64_t w_seed = 0;
    std::vector<double> w_c, w_p, w_mu, w_q;
    std::vector<long long> w_edges, w_loops;
    sweep_cmd->add_option("--model", w_model, "a or b")->required();
    sweep_cmd->add_option("--n", w_n, "node count")->required();
    sweep_cmd->add_option("--trials", w_trials, "trials per grid point")->required();
    sweep_cmd->add_option("--seed", w_seed, "random seed")->required();
    sweep_cmd->add_option("--c", w_c, "critical offsets")->delimiter(',');
    sweep_cmd->add_option("--p", w_p, "raw edge probabilities (model a)")->delimiter(',');
    sweep_cmd->add_option("--N", w_edges, "raw edge counts (model b)")->delimiter(',');
    sweep_cmd->add_option("--mu", w_mu, "loop regime parameters")->delimiter(',');
    sweep_cmd->add_option("--q", w_q, "raw loop probabilities (model a)")->delimiter(',');
    sweep_cmd->add_option("--M", w_loops, "raw loop counts (model b)")->delimiter(',');
    sweep_cmd->add_option("--q-regime", w_q_regime, "scaled or constant (with --mu, model a)");
    sweep_cmd->add_option("--m-regime", w_m_regime, "constant or linear (with --mu, model b)");
    sweep_cmd->add_option("--threads", w_threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", w_out, "output path (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "search for a Hurwitz matrix in a pattern");
    std::string o_file;
    int o_restarts = 64;
    std::uint64_t o_seed = 0;
    oracle->add_option("file", o_file, "pattern file")->required();
    oracle->add_option("--restarts", o_restarts, "random restarts (default 64)");
    oracle->add_option("--seed", o_seed, "random seed")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("stabgraph");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*sample) {
            std::string text;
            if (s_model == "a") {
                if (s_p < 0.0 || s_q < 0.0 || s_edges >= 0 || s_loops >= 0) {
                    throw CLI::ValidationError("sample", "model a takes --p and --q");
                }
                text = serialize(sample_model_a({s_n, s_p, s_q, s_seed}));
            } else if (s_model == "b") {
                if (s_edges < 0 || s_loops < 0 || s_p >= 0.0 || s_q >= 0.0) {
                    throw CLI::ValidationError("sample", "model b takes --N and --M");
                }
                text = serialize(sample_model_b({s_n, s_edges, s_loops, s_seed}));
            } else {
                throw CLI::ValidationError("sample", "--model must be a or b");
            }
            write_output(s_out, text, out);
            return 0;
        }
        if (*check) return do_check(c_file, c_digraph, out);
        if (*thin) return do_thin(t_file, out);
        if (*asym) {
            EdgeRegime edge = parse_edge_regime(a_regime);
            double value = 0.0;
            bool boundary = false;
            if (a_model == "a") {
                if (a_q.empty() || !a_m.empty()) {
                    throw CLI::ValidationError("asymptote", "model a takes --q <regime>");
                }
                auto [kind, mu] = parse_loop_regime_a(a_q);
                RegimeA r{edge, kind, mu};
                value = model_a_asymptote(r);
                boundary = boundary_all_loops(r);
            } else if (a_model == "b") {
                if (a_m.empty() || !a_q.empty()) {
                    throw CLI::ValidationError("asymptote", "model b takes --M <regime>");
                }
                auto [kind, mu] = parse_loop_regime_b(a_m);
                RegimeB r{edge, kind, mu};
                value = model_b_asymptote(r);
                boundary = boundary_all_loops(r);
            } else {
                throw CLI::ValidationError("asymptote", "--model must be a or b");
            }
            if (boundary) err << "note: boundary regime, every node carries a loop in the limit\n";
            out << fmt6(value) << '\n';
            return 0;
        }
        if (*oracle) {
            ParsedGraph parsed = parse_graph_file(read_file(o_file));
            ZeroPattern z = std::holds_alternative<Digraph>(parsed)
                                ? digraph_to_pattern(std::get<Digraph>(parsed))
                                : digraph_to_pattern(expand_symmetric(std::get<Graph>(parsed)));
            auto found = find_hurwitz(z, o_restarts, o_seed);
            out << "n=" << z.dim() << '\n';
            out << "found=" << (found ? 1 : 0) << '\n';
            if (found) {
                for (int i = 1; i <= z.dim(); ++i) {
                    for (int j = 1; j <= z.dim(); ++j) {
                        if (j > 1) out << ' ';
                        char buf[64];
                        std::snprintf(buf, sizeof buf, "%.17g", found->at(i, j));
                        out << buf;
                    }
                    out << '\n';
                }
            }
            return 0;
        }
        if (*sweep_cmd) {
            bool model_a = w_model == "a";
            if (!model_a && w_model != "b") {
                throw CLI::ValidationError("sweep", "--model must be a or b");
            }

            SweepAxis edges;
            edges.c = w_c;
            edges.raw_p = w_p;
            edges.raw_n = w_edges;
            if (model_a && !w_edges.empty()) throw CLI::ValidationError("sweep", "--N is for model b");
            if (!model_a && !w_p.empty()) throw CLI::ValidationError("sweep", "--p is for model a");
            bool use_c = !edges.c.empty();
            if (use_c == !(model_a ? edges.raw_p.empty() : edges.raw_n.empty())) {
                throw CLI::ValidationError("sweep", model_a ? "give exactly one of --c or --p"
                                                            : "give exactly one of --c or --N");
            }

            bool use_mu = !w_mu.empty();
            if (model_a) {
                if (use_mu == !w_q.empty() || (use_mu && w_q_regime.empty())) {
                    throw CLI::ValidationError("sweep", "give --q-regime with --mu, or raw --q");
                }
                if (use_mu && w_q_regime != "scaled" && w_q_regime != "constant") {
                    throw CLI::ValidationError("sweep", "--q-regime must be scaled or constant");
                }
                if (!w_loops.empty()) throw CLI::ValidationError("sweep", "--M is for model b");
            } else {
                if (use_mu == !w_loops.empty() || (use_mu && w_m_regime.empty())) {
                    throw CLI::ValidationError("sweep", "give --m-regime with --mu, or raw --M");
                }
                if (use_mu && w_m_regime != "constant" && w_m_regime != "linear") {
                    throw CLI::ValidationError("sweep", "--m-regime must be constant or linear");
                }
                if (!w_q.empty()) throw CLI::ValidationError("sweep", "--q is for model a");
            }

            std::size_t edge_count = use_c ? edges.c.size()
                                           : (model_a ? edges.raw_p.size() : edges.raw_n.size());
            std::size_t loop_count = use_mu ? w_mu.size() : (model_a ? w_q.size() : w_loops.size());

            std::vector<SweepRequest> requests;
            std::vector<std::optional<double>> col_c, col_p, col_q, col_mu;
            std::vector<std::optional<long long>> col_edges, col_loops;
            std::uint64_t row_index = 0;
            for (std::size_t i = 0; i < edge_count; ++i) {
                for (std::size_t j = 0; j < loop_count; ++j, ++row_index) {
                    SweepRequest req;
                    req.trials = w_trials;
                    std::uint64_t row_seed = Rng::derive(w_seed, row_index).key();
                    std::optional<double> c_val, mu_val;
                    if (use_c) c_val = edges.c[i];
                    if (use_mu) mu_val = w_mu[j];
                    req.c = c_val;
                    req.mu = mu_val;
                    if (model_a) {
                        double p = use_c ? (std::log(w_n) + *c_val) / w_n : edges.raw_p[i];
                        double q;
                        LoopRegimeA kind = w_q_regime == "scaled" ? LoopRegimeA::Scaled
                                                                  : LoopRegimeA::Constant;
                        if (use_mu) {
                            q = kind == LoopRegimeA::Scaled ? *mu_val / w_n : *mu_val;
                        } else {
                            q = w_q[j];
                        }
                        req.params = ModelAParams{w_n, p, q, row_seed};
                        if (use_c && use_mu) {
                            req.asymptote = model_a_asymptote({{GrowthClass::Critical, *c_val}, kind, *mu_val});
                        }
                        col_p.push_back(p);
                        col_q.push_back(q);
                        col_edges.push_back(std::nullopt);
                        col_loops.push_back(std::nullopt);
                    } else {
                        long long num_edges =
                            use_c ? std::llround(w_n / 2.0 * (std::log(w_n) + *c_val)) : edges.raw_n[i];
                        LoopRegimeB kind = w_m_regime == "linear" ? LoopRegimeB::Linear
                                                                  : LoopRegimeB::Constant;
                        long long num_loops;
                        if (use_mu) {
                            num_loops = kind == LoopRegimeB::Linear
                                            ? static_cast<long long>(std::floor(*mu_val * w_n))
                                            : std::llround(*mu_val);
                        } else {
                            num_loops = w_loops[j];
                        }
                        req.params = ModelBParams{w_n, num_edges, static_cast<int>(num_loops), row_seed};
                        if (use_c && use_mu) {
                            req.asymptote = model_b_asymptote({{GrowthClass::Critical, *c_val}, kind, *mu_val});
                        }
                        col_p.push_back(std::nullopt);
                        col_q.push_back(std::nullopt);
                        col_edges.push_back(num_edges);
                        col_loops.push_back(num_loops);
                    }
                    col_c.push_back(c_val);
                    col_mu.push_back(mu_val);
                    requests.push_back(std::move(req));
                }
            }

            RunOptions opt;
            opt.threads = w_threads;
            auto rows = sweep(requests, opt);

            std::ostringstream csv;
            csv << "model,n,trials,seed,c,p,q,N,M,mu,p_stable,p_L,p_H,ci_low,ci_high,asymptote\n";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const auto& row = rows[r];
                csv << (model_a ? 'a' : 'b') << ',' << w_n << ',' << row.stats.trials << ','
                    << row.stable.seed << ',' << csv_cell(col_c[r]) << ',' << csv_cell(col_p[r])
                    << ',' << csv_cell(col_q[r]) << ','
                    << (col_edges[r] ? std::to_string(*col_edges[r]) : std::string()) << ','
                    << (col_loops[r] ? std::to_string(*col_loops[r]) : std::string()) << ','
                    << csv_cell(col_mu[r]) << ',' << fmt6(row.stable.point) << ','
                    << fmt6(row.loops.point) << ',' << fmt6(row.cycle_cover.point) << ','
                    << fmt6(row.stable.ci_low) << ',' << fmt6(row.stable.ci_high) << ','
                    << csv_cell(row.request.asymptote) << '\n';
            }
            write_output(w_out, csv.str(), out);
            return 0;
        }
        return 2; // unreachable: require_subcommand guarantees a branch
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace stabgraph
