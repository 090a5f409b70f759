#include "stabgraph/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stabgraph {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void validate(const RegimeA& r) {
    if (r.q_kind == LoopRegimeA::Scaled) {
        if (!(r.mu >= 0.0)) throw std::invalid_argument("scaled loop rate needs mu >= 0");
    } else {
        if (!(r.mu > 0.0 && r.mu <= 1.0)) throw std::invalid_argument("constant loop rate needs mu in (0,1]");
    }
}

void validate(const RegimeB& r) {
    if (r.m_kind == LoopRegimeB::Constant) {
        if (!(r.mu > 0.0)) throw std::invalid_argument("constant loop count needs mu > 0");
    } else {
        if (!(r.mu > 0.0 && r.mu <= 1.0)) throw std::invalid_argument("linear loop count needs mu in (0,1]");
    }
}

} // namespace

bool boundary_all_loops(const RegimeA& r) {
    return r.p.kind == GrowthClass::Sparse && r.q_kind == LoopRegimeA::Constant && r.mu == 1.0;
}

bool boundary_all_loops(const RegimeB& r) {
    return r.edges.kind == GrowthClass::Sparse && r.m_kind == LoopRegimeB::Linear && r.mu == 1.0;
}

double model_a_asymptote(const RegimeA& r) {
    validate(r);
    switch (r.p.kind) {
        case GrowthClass::Sparse:
            return boundary_all_loops(r) ? 1.0 : 0.0;
        case GrowthClass::Dense:
            return r.q_kind == LoopRegimeA::Scaled ? 1.0 - std::exp(-r.mu) : 1.0;
        case GrowthClass::Critical: {
            double lambda = std::exp(-r.p.c);
            if (r.q_kind == LoopRegimeA::Scaled) {
                return std::exp(-lambda) * (1.0 - std::exp(-r.mu));
            }
            return std::exp(-lambda * (1.0 - r.mu));
        }
    }
    throw std::logic_error("unhandled growth class");
}

double model_b_asymptote(const RegimeB& r) {
    validate(r);
    switch (r.edges.kind) {
        case GrowthClass::Sparse:
            return boundary_all_loops(r) ? 1.0 : 0.0;
        case GrowthClass::Dense:
            return 1.0;
        case GrowthClass::Critical: {
            double lambda = std::exp(-r.edges.c);
            if (r.m_kind == LoopRegimeB::Constant) return std::exp(-lambda);
            return std::exp(-lambda * (1.0 - r.mu));
        }
    }
    throw std::logic_error("unhandled growth class");
}

double log_choose(long long a, long long b) {
    if (b < 0 || b > a) return kNegInf;
    return std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
           std::lgamma(static_cast<double>(a - b) + 1.0);
}

double loops_cover_given_split_a(int n, int k, double q) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("split out of range");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("loop probability must lie in [0,1]");
    // every isolated vertex looped, and the remaining component looped somewhere
    return std::pow(q, k) * (1.0 - std::pow(1.0 - q, n - k));
}

double loops_cover_given_split_b(int n, int k, int M) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("split out of range");
    if (M < 0 || M > n) throw std::invalid_argument("loop count out of range");
    if (k >= M) return 0.0; // the big component would be left bare
    return std::exp(log_choose(n - k, M - k) - log_choose(n, M));
}

double fk_upper_bound(int n, int k, double p) {
    if (k < 2 || k > (n + 2) / 2) throw std::invalid_argument("class index out of range");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
    double log_neighbors = log_choose(n - k, k - 1);
    if (log_neighbors == kNegInf) return 0.0; // not enough nodes outside the set
    if (p == 0.0 || p == 1.0) return 0.0;     // pair hits resp. inner gaps are impossible
    double log1mp = std::log1p(-p);
    double pairs_inside = static_cast<double>(k) * (k - 1) / 2.0;
    double pairs_out = static_cast<double>(n - 2 * k + 1) * k;
    double log_pair_hit = std::log(pairs_inside * p * p);
    double log_bound = log_choose(n, k) + pairs_inside * log1mp + log_neighbors +
                       pairs_out * log1mp + static_cast<double>(k - 1) * log_pair_hit;
    return std::exp(log_bound);
}

} // namespace stabgraph
