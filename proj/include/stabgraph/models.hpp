#ifndef STABGRAPH_MODELS_HPP
#define STABGRAPH_MODELS_HPP

#include <cstdint>
#include <utility>

#include "stabgraph/graph.hpp"

namespace stabgraph {

// Every edge appears independently with probability p, every loop with
// probability q.
struct ModelAParams {
    int n = 1;
    double p = 0.0;
    double q = 0.0;
    std::uint64_t seed = 0;
};

// Exactly num_edges distinct edges and num_loops distinct loops, uniform.
struct ModelBParams {
    int n = 1;
    long long num_edges = 0;
    int num_loops = 0;
    std::uint64_t seed = 0;
};

// The random stream for trial t is derived from (seed, t); within a trial the
// uniform for edge {u,v} (u < v) sits at a slot that is a fixed function of
// (u, v), so draws are independent of evaluation order and graphs built from
// the same seed couple slot by slot.
Graph sample_model_a(const ModelAParams& params, std::uint64_t trial = 0);
Graph sample_model_b(const ModelBParams& params, std::uint64_t trial = 0);

// Shared-uniform pair: requires p1 <= p2 and q1 <= q2; the first graph is a
// subgraph of the second by construction.
std::pair<Graph, Graph> coupled_pair_a(int n, double p1, double p2, double q1, double q2,
                                       std::uint64_t seed, std::uint64_t trial = 0);

} // namespace stabgraph

#endif
