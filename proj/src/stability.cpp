#include "stabgraph/stability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stabgraph {

std::pair<bool, std::optional<VertexSet>> check_L(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        bool looped = std::any_of(comp.begin(), comp.end(), [&](int u) { return g.has_loop(u); });
        if (!looped) return {false, comp};
    }
    return {true, std::nullopt};
}

StabilityVerdict check_symmetric_stability(const Graph& g) {
    StabilityVerdict v;
    auto comps = connected_components(g);
    auto [l, loopless] = check_L(g);
    v.l_flag = l;
    v.loopless_component = loopless;

    auto ham = hamiltonian_decomposition(g);
    v.h_flag = ham.has_value();

    if (v.l_flag && v.h_flag) {
        v.status = Stability::Stable;
        v.hamiltonian = std::move(ham);
        for (const auto& comp : comps) {
            for (int u : comp) {
                if (g.has_loop(u)) {
                    v.component_loops.push_back(u);
                    break;
                }
            }
        }
        return v;
    }

    v.status = Stability::Unstable;
    if (!v.l_flag) {
        v.note = "component " + v.loopless_component->to_string() +
                 " has no loop; its diagonal block is traceless";
    }
    if (!v.h_flag) {
        v.hall = hall_violator(g);
        if (v.note.empty()) {
            v.note = "no spanning disjoint-cycle union; deficient set " +
                     v.hall->members.to_string();
        }
    }
    return v;
}

namespace {

// Lexicographically first independent set of the requested size whose
// neighborhood is one short. The neighbor mask only grows along a branch, so
// branches that already exceed the target pop out early.
struct ThinScan {
    int n = 0;
    int want = 0;
    std::vector<std::uint64_t> adj;
    std::uint64_t looped = 0;
    std::vector<int> chosen;
    std::uint64_t hit_members = 0, hit_neighbors = 0;

    bool dfs(int next, std::uint64_t members, std::uint64_t neighbors) {
        int depth = static_cast<int>(chosen.size());
        if (depth == want) {
            if (std::popcount(neighbors) == want - 1) {
                hit_members = members;
                hit_neighbors = neighbors;
                return true;
            }
            return false;
        }
        for (int v = next; v <= n - (want - depth); ++v) {
            std::uint64_t bit = 1ULL << v;
            if (looped & bit) continue;
            if (adj[v] & members) continue;
            std::uint64_t nb = neighbors | adj[v];
            if (std::popcount(nb) > want - 1) continue;
            chosen.push_back(v);
            if (dfs(v + 1, members | bit, nb)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

std::vector<int> mask_to_ids(std::uint64_t mask) {
    std::vector<int> ids;
    while (mask) {
        int v = std::countr_zero(mask);
        ids.push_back(v + 1);
        mask &= mask - 1;
    }
    return ids;
}

} // namespace

ThinClass classify_thin(const Graph& g) {
    int n = g.node_count();
    if (n > 64) throw std::invalid_argument("classify_thin supports n <= 64");
    if (hamiltonian_decomposition(g)) return {};

    ThinScan scan;
    scan.n = n;
    scan.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        scan.adj[u - 1] |= 1ULL << (v - 1);
        scan.adj[v - 1] |= 1ULL << (u - 1);
    }
    for (int u : g.loops()) scan.looped |= 1ULL << (u - 1);

    int kmax = (n + 2) / 2;
    for (int k = 1; k <= kmax; ++k) {
        scan.want = k;
        scan.chosen.clear();
        if (scan.dfs(0, 0, 0)) {
            HallCertificate cert{VertexSet(mask_to_ids(scan.hit_members)),
                                 VertexSet(mask_to_ids(scan.hit_neighbors))};
            return {k, std::move(cert)};
        }
    }
    throw std::logic_error("thin graph without deficiency-one set"); // unreachable
}

namespace {

Decomposition relabel(const Decomposition& local, const std::vector<int>& original_ids) {
    Decomposition out;
    std::vector<int> covered;
    for (const auto& cyc : local.cycles) {
        std::vector<int> mapped;
        mapped.reserve(cyc.size());
        for (int u : cyc) mapped.push_back(original_ids[u - 1]);
        std::rotate(mapped.begin(), std::min_element(mapped.begin(), mapped.end()), mapped.end());
        covered.insert(covered.end(), mapped.begin(), mapped.end());
        out.cycles.push_back(std::move(mapped));
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.covered = VertexSet(std::move(covered));
    return out;
}

std::optional<Decomposition> decompose_subset(const Digraph& d, const VertexSet& s) {
    auto induced = induced_subgraph(d, s);
    auto dec = hamiltonian_decomposition(induced.digraph);
    if (!dec) return std::nullopt;
    return relabel(*dec, induced.original_ids);
}

} // namespace

std::optional<Decomposition> k_decomposition(const Digraph& d, int k) {
    int n = d.node_count();
    if (n > 20) throw std::invalid_argument("k_decomposition supports n <= 20");
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");

    std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
    for (auto [i, j] : d.arcs()) {
        out_mask[i - 1] |= 1U << (j - 1);
        in_mask[j - 1] |= 1U << (i - 1);
    }
    std::vector<int> cand;
    for (int v = 0; v < n; ++v) {
        if (out_mask[v] && in_mask[v]) cand.push_back(v);
    }
    int m = static_cast<int>(cand.size());
    if (m < k) return std::nullopt;

    // lexicographic k-combinations of the candidate list
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1U << cand[i];
        bool viable = true;
        for (int i : idx) {
            if (!(out_mask[cand[i]] & mask) || !(in_mask[cand[i]] & mask)) {
                viable = false;
                break;
            }
        }
        if (viable) {
            std::vector<int> ids;
            ids.reserve(k);
            for (int i : idx) ids.push_back(cand[i] + 1);
            if (auto dec = decompose_subset(d, VertexSet(std::move(ids)))) return dec;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

namespace {

struct ChainSearch {
    const Digraph& d;
    int n;
    std::unordered_map<std::uint32_t, bool> admissible_memo;
    std::unordered_set<std::uint32_t> dead;
    std::vector<std::uint32_t> path;

    explicit ChainSearch(const Digraph& dg) : d(dg), n(dg.node_count()) {}

    bool admissible(std::uint32_t mask) {
        auto it = admissible_memo.find(mask);
        if (it != admissible_memo.end()) return it->second;
        bool ok = decompose_subset(d, VertexSet(mask_to_ids(mask))).has_value();
        admissible_memo.emplace(mask, ok);
        return ok;
    }

    bool dfs(std::uint32_t mask) {
        path.push_back(mask);
        if (std::popcount(mask) == n) return true;
        for (int v = 0; v < n; ++v) {
            std::uint32_t bit = 1U << v;
            if (mask & bit) continue;
            std::uint32_t grown = mask | bit;
            if (dead.contains(grown) || !admissible(grown)) continue;
            if (dfs(grown)) return true;
            dead.insert(grown);
        }
        path.pop_back();
        return false;
    }
};

} // namespace

std::optional<std::vector<Decomposition>> nested_chain(const Digraph& d) {
    int n = d.node_count();
    if (n > 16) throw std::invalid_argument("nested_chain supports n <= 16");

    ChainSearch search(d);
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 1U << v;
        if (!search.admissible(m)) continue;
        if (search.dfs(m)) {
            std::vector<Decomposition> chain;
            chain.reserve(n);
            for (std::uint32_t mask : search.path) {
                chain.push_back(*decompose_subset(d, VertexSet(mask_to_ids(mask))));
            }
            return chain;
        }
    }
    return std::nullopt;
}

StabilityVerdict check_digraph_stability(const Digraph& d) {
    int n = d.node_count();
    if (n > 16) throw std::invalid_argument("check_digraph_stability supports n <= 16");

    StabilityVerdict v;
    {
        // L on the underlying undirected structure
        std::vector<std::pair<int, int>> edges;
        std::vector<int> loops;
        for (auto [i, j] : d.arcs()) {
            if (i == j) {
                loops.push_back(i);
            } else {
                edges.emplace_back(std::min(i, j), std::max(i, j));
            }
        }
        Graph underlying(n, std::move(edges), std::move(loops));
        auto [l, loopless] = check_L(underlying);
        v.l_flag = l;
        v.loopless_component = loopless;
    }
    v.h_flag = k_decomposition(d, n).has_value();

    for (int k = 1; k <= n; ++k) {
        if (!k_decomposition(d, k)) {
            v.status = Stability::Unstable;
            v.missing_k = k;
            v.note = "no disjoint-cycle union covers exactly " + std::to_string(k) + " nodes";
            return v;
        }
    }
    for (const auto& scc : strongly_connected_components(d)) {
        if (scc.size() == n) continue; // already covered by the pass above
        auto induced = induced_subgraph(d, scc);
        for (int k = 1; k <= scc.size(); ++k) {
            if (!k_decomposition(induced.digraph, k)) {
                v.status = Stability::Unstable;
                v.missing_k = k;
                v.failing_component = scc;
                v.note = "strongly connected part " + scc.to_string() +
                         " has no disjoint-cycle union covering exactly " + std::to_string(k) +
                         " of its nodes";
                return v;
            }
        }
    }

    if (auto chain = nested_chain(d)) {
        v.status = Stability::Stable;
        v.hamiltonian = chain->back();
        v.chain = std::move(chain);
        return v;
    }

    v.status = Stability::Unknown;
    v.note = "necessary conditions hold but no nested chain was found";
    return v;
}

} // namespace stabgraph
