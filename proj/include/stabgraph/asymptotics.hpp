#ifndef STABGRAPH_ASYMPTOTICS_HPP
#define STABGRAPH_ASYMPTOTICS_HPP

namespace stabgraph {

// Edge density classes around the connectivity threshold: Sparse is below it,
// Critical pins p = (log n + c)/n (or the matching edge count), Dense is
// above. The limit constant is lambda = exp(-c).
enum class GrowthClass { Sparse, Critical, Dense };

struct EdgeRegime {
    GrowthClass kind = GrowthClass::Critical;
    double c = 0.0; // used only when Critical
};

// Loop probability q: Scaled means q = (mu + o(1))/n with mu >= 0, Constant
// means q = mu + o(1) with 0 < mu <= 1.
enum class LoopRegimeA { Scaled, Constant };
struct RegimeA {
    EdgeRegime p;
    LoopRegimeA q_kind = LoopRegimeA::Constant;
    double mu = 1.0;
};

// Loop count M: Constant means M = mu + o(1) with mu > 0, Linear means
// M = mu*n + o(n) with 0 < mu <= 1.
enum class LoopRegimeB { Constant, Linear };
struct RegimeB {
    EdgeRegime edges;
    LoopRegimeB m_kind = LoopRegimeB::Constant;
    double mu = 1.0;
};

// Limit of the stability probability. Blank boundary cells (Sparse with all
// loops present in the limit) resolve to 1.
double model_a_asymptote(const RegimeA& r);
double model_b_asymptote(const RegimeB& r);

// True when the regime hits the all-loops boundary rule rather than a table
// entry.
bool boundary_all_loops(const RegimeA& r);
bool boundary_all_loops(const RegimeB& r);

// Probability that loops cover every part, conditioned on the node set
// splitting into k isolated vertices plus one component on the rest.
double loops_cover_given_split_a(int n, int k, double q);
double loops_cover_given_split_b(int n, int k, int M);

// First-moment bound on the frequency of minimal deficiency-one class k.
// Evaluated in log space; 2 <= k <= ceil((n+1)/2).
double fk_upper_bound(int n, int k, double p);

double log_choose(long long a, long long b); // -inf outside 0 <= b <= a

} // namespace stabgraph

#endif
