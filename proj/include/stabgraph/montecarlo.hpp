#ifndef STABGRAPH_MONTECARLO_HPP
#define STABGRAPH_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "stabgraph/models.hpp"

namespace stabgraph {

struct TrialStats {
    long long trials = 0;
    long long s_count = 0; // stable: loops cover and spanning cycle union
    long long l_count = 0;
    long long h_count = 0;
    std::map<int, long long> isolated_histogram;
    long long small_component_count = 0; // some component of size in (1, n/2]
    // minimal deficiency class per failed cover, k >= 2; absent when
    // classification is skipped (n above the cap or disabled)
    std::optional<std::map<int, long long>> fk_counts;

    void merge(const TrialStats& other);
};

struct Estimate {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    long long trials = 0;
    std::uint64_t seed = 0;
};

// Wilson score interval.
std::pair<double, double> wilson_ci(long long successes, long long trials, double level = 0.95);

Estimate make_estimate(long long successes, long long trials, std::uint64_t seed,
                       double level = 0.95);

struct RunOptions {
    int threads = 0;       // 0 = hardware concurrency
    bool classify_fk = true;
    int fk_cap = 24;       // skip deficiency classification above this size
};

using ModelParams = std::variant<ModelAParams, ModelBParams>;

// Trial t draws from stream (seed, t), so the result does not depend on the
// thread count or execution order.
TrialStats run_trials(const ModelParams& params, long long trials, const RunOptions& opt = {});

struct SweepRequest {
    ModelParams params;
    long long trials = 0;
    std::optional<double> c;   // critical offset behind the derived density, if any
    std::optional<double> mu;  // loop regime parameter, if any
    std::optional<double> asymptote;
};

struct SweepRow {
    SweepRequest request;
    TrialStats stats;
    Estimate stable, loops, cycle_cover;
};

std::vector<SweepRow> sweep(const std::vector<SweepRequest>& requests,
                            const RunOptions& opt = {});

} // namespace stabgraph

#endif
