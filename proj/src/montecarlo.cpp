#include "stabgraph/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "stabgraph/matching.hpp"
#include "stabgraph/stability.hpp"

namespace stabgraph {

void TrialStats::merge(const TrialStats& other) {
    trials += other.trials;
    s_count += other.s_count;
    l_count += other.l_count;
    h_count += other.h_count;
    for (auto [k, c] : other.isolated_histogram) isolated_histogram[k] += c;
    small_component_count += other.small_component_count;
    if (fk_counts && other.fk_counts) {
        for (auto [k, c] : *other.fk_counts) (*fk_counts)[k] += c;
    } else if (!other.fk_counts) {
        fk_counts.reset();
    }
}

namespace {

// Acklam's rational approximation to the normal quantile; relative error
// below 1.2e-9, plenty for interval z-values.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double low = 0.02425;
    if (p < low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

struct TrialOutcome {
    bool l = false, h = false;
    int isolated = 0;
    bool small_component = false;
    int fk = 0; // minimal deficiency class when classified and >= 2
};

TrialOutcome evaluate(const Graph& g, bool classify) {
    TrialOutcome out;
    int n = g.node_count();
    out.l = true;
    for (const auto& comp : connected_components(g)) {
        int size = comp.size();
        if (size == 1) ++out.isolated;
        if (size > 1 && 2 * size <= n) out.small_component = true;
        if (out.l && std::none_of(comp.begin(), comp.end(),
                                  [&](int u) { return g.has_loop(u); })) {
            out.l = false;
        }
    }
    out.h = max_matching(BipartiteCover::from_graph(g)).size == n;
    if (!out.h && classify) {
        auto thin = classify_thin(g);
        if (thin.k && *thin.k >= 2) out.fk = *thin.k;
    }
    return out;
}

Graph sample(const ModelAParams& p, std::uint64_t trial) { return sample_model_a(p, trial); }
Graph sample(const ModelBParams& p, std::uint64_t trial) { return sample_model_b(p, trial); }

TrialStats run_range(const ModelParams& params, long long begin, long long end, bool classify) {
    TrialStats stats;
    if (classify) stats.fk_counts.emplace();
    for (long long t = begin; t < end; ++t) {
        Graph g = std::visit(
            [&](const auto& p) { return sample(p, static_cast<std::uint64_t>(t)); }, params);
        TrialOutcome out = evaluate(g, classify);
        ++stats.trials;
        stats.l_count += out.l;
        stats.h_count += out.h;
        stats.s_count += out.l && out.h;
        ++stats.isolated_histogram[out.isolated];
        stats.small_component_count += out.small_component;
        if (out.fk >= 2) ++(*stats.fk_counts)[out.fk];
    }
    return stats;
}

int model_size(const ModelParams& params) {
    return std::visit([](const auto& p) { return p.n; }, params);
}

std::uint64_t model_seed(const ModelParams& params) {
    return std::visit([](const auto& p) { return p.seed; }, params);
}

} // namespace

std::pair<double, double> wilson_ci(long long successes, long long trials, double level) {
    if (trials < 1 || successes < 0 || successes > trials) {
        throw std::invalid_argument("counts out of range");
    }
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("level must lie in (0,1)");
    double z = normal_quantile(0.5 + level / 2.0);
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2n = z * z / n;
    double denom = 1.0 + z2n;
    double center = (phat + z2n / 2.0) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2n / (4.0 * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

Estimate make_estimate(long long successes, long long trials, std::uint64_t seed, double level) {
    auto [lo, hi] = wilson_ci(successes, trials, level);
    Estimate e;
    e.point = static_cast<double>(successes) / static_cast<double>(trials);
    e.ci_low = lo;
    e.ci_high = hi;
    e.trials = trials;
    e.seed = seed;
    return e;
}

TrialStats run_trials(const ModelParams& params, long long trials, const RunOptions& opt) {
    if (trials < 1) throw std::invalid_argument("trial count must be positive");
    bool classify = opt.classify_fk && model_size(params) <= opt.fk_cap;

    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<long long>(threads, trials));

    if (threads == 1) return run_range(params, 0, trials, classify);

    std::vector<TrialStats> parts(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    long long chunk = trials / threads, extra = trials % threads;
    long long begin = 0;
    for (int i = 0; i < threads; ++i) {
        long long end = begin + chunk + (i < extra ? 1 : 0);
        pool.emplace_back([&, i, begin, end] { parts[i] = run_range(params, begin, end, classify); });
        begin = end;
    }
    for (auto& th : pool) th.join();

    TrialStats total;
    if (classify) total.fk_counts.emplace();
    for (const auto& part : parts) total.merge(part);
    return total;
}

std::vector<SweepRow> sweep(const std::vector<SweepRequest>& requests, const RunOptions& opt) {
    std::vector<SweepRow> rows;
    rows.reserve(requests.size());
    for (const auto& req : requests) {
        SweepRow row;
        row.request = req;
        row.stats = run_trials(req.params, req.trials, opt);
        std::uint64_t seed = model_seed(req.params);
        row.stable = make_estimate(row.stats.s_count, row.stats.trials, seed);
        row.loops = make_estimate(row.stats.l_count, row.stats.trials, seed);
        row.cycle_cover = make_estimate(row.stats.h_count, row.stats.trials, seed);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace stabgraph
