#include "stabgraph/models.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "stabgraph/rng.hpp"

namespace stabgraph {

namespace {

void check_probability(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
    }
}

// Edge {u,v}, u < v, lives at slot (v-1)(v-2)/2 + (u-1); loop u comes after
// all edge slots.
std::uint64_t edge_slot(int u, int v) {
    return static_cast<std::uint64_t>(v - 1) * (v - 2) / 2 + (u - 1);
}

std::uint64_t loop_slot(int n, int u) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2 + (u - 1);
}

// Inverse of edge_slot: largest v with (v-1)(v-2)/2 <= slot.
std::pair<int, int> slot_to_edge(std::uint64_t slot) {
    auto block = [](std::uint64_t v) { return (v - 1) * (v - 2) / 2; };
    auto v = static_cast<std::uint64_t>((3.0 + std::sqrt(8.0 * static_cast<double>(slot) + 1.0)) / 2.0);
    if (v < 2) v = 2;
    while (v > 2 && block(v) > slot) --v;
    while (block(v + 1) <= slot) ++v;
    int u = static_cast<int>(slot - block(v)) + 1;
    return {u, static_cast<int>(v)};
}

// Partial Fisher-Yates: `count` distinct values from [0, universe) without
// materializing the universe; displaced cells live in a hash map.
std::vector<std::uint64_t> sample_distinct(Rng& stream, std::uint64_t universe,
                                           std::uint64_t count) {
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t j = i + stream.next_below(universe - i);
        auto it_i = moved.find(i);
        std::uint64_t vi = it_i == moved.end() ? i : it_i->second;
        auto it_j = moved.find(j);
        std::uint64_t vj = it_j == moved.end() ? j : it_j->second;
        out.push_back(vj);
        moved[j] = vi;
    }
    return out;
}

} // namespace

Graph sample_model_a(const ModelAParams& params, std::uint64_t trial) {
    if (params.n < 1) throw std::invalid_argument("node count must be positive");
    check_probability(params.p, "edge probability");
    check_probability(params.q, "loop probability");

    Rng stream = Rng::derive(params.seed, trial);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= params.n; ++v) {
        for (int u = 1; u < v; ++u) {
            if (stream.uniform(edge_slot(u, v)) < params.p) edges.emplace_back(u, v);
        }
    }
    std::vector<int> loops;
    for (int u = 1; u <= params.n; ++u) {
        if (stream.uniform(loop_slot(params.n, u)) < params.q) loops.push_back(u);
    }
    return Graph(params.n, std::move(edges), std::move(loops));
}

Graph sample_model_b(const ModelBParams& params, std::uint64_t trial) {
    int n = params.n;
    if (n < 1) throw std::invalid_argument("node count must be positive");
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (params.num_edges < 0 || params.num_edges > pairs) {
        throw std::invalid_argument("edge count out of range");
    }
    if (params.num_loops < 0 || params.num_loops > n) {
        throw std::invalid_argument("loop count out of range");
    }

    Rng stream = Rng::derive(params.seed, trial);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(params.num_edges);
    if (params.num_edges > 0) {
        for (std::uint64_t slot : sample_distinct(stream, pairs, params.num_edges)) {
            edges.push_back(slot_to_edge(slot));
        }
    }
    std::vector<int> loops;
    loops.reserve(params.num_loops);
    if (params.num_loops > 0) {
        for (std::uint64_t v : sample_distinct(stream, n, params.num_loops)) {
            loops.push_back(static_cast<int>(v) + 1);
        }
    }
    return Graph(n, std::move(edges), std::move(loops));
}

std::pair<Graph, Graph> coupled_pair_a(int n, double p1, double p2, double q1, double q2,
                                       std::uint64_t seed, std::uint64_t trial) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    check_probability(p1, "edge probability");
    check_probability(p2, "edge probability");
    check_probability(q1, "loop probability");
    check_probability(q2, "loop probability");
    if (p1 > p2 || q1 > q2) throw std::invalid_argument("coupled pair needs p1 <= p2 and q1 <= q2");

    Rng stream = Rng::derive(seed, trial);
    std::vector<std::pair<int, int>> edges1, edges2;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u) {
            double x = stream.uniform(edge_slot(u, v));
            if (x < p1) edges1.emplace_back(u, v);
            if (x < p2) edges2.emplace_back(u, v);
        }
    }
    std::vector<int> loops1, loops2;
    for (int u = 1; u <= n; ++u) {
        double x = stream.uniform(loop_slot(n, u));
        if (x < q1) loops1.push_back(u);
        if (x < q2) loops2.push_back(u);
    }
    return {Graph(n, std::move(edges1), std::move(loops1)),
            Graph(n, std::move(edges2), std::move(loops2))};
}

} // namespace stabgraph
