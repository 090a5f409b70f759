#include "stabgraph/matching.hpp"

#include <algorithm>
#include <queue>

namespace stabgraph {

BipartiteCover BipartiteCover::from_digraph(const Digraph& d) {
    BipartiteCover c;
    c.n = d.node_count();
    c.adj.assign(c.n + 1, {});
    for (int u = 1; u <= c.n; ++u) c.adj[u] = d.out_neighbors(u);
    return c;
}

BipartiteCover BipartiteCover::from_graph(const Graph& g) {
    BipartiteCover c;
    c.n = g.node_count();
    c.adj.assign(c.n + 1, {});
    for (int u = 1; u <= c.n; ++u) {
        const auto& nb = g.neighbors(u);
        auto& row = c.adj[u];
        row.reserve(nb.size() + 1);
        bool placed = false;
        for (int v : nb) {
            if (!placed && g.has_loop(u) && u < v) {
                row.push_back(u);
                placed = true;
            }
            row.push_back(v);
        }
        if (!placed && g.has_loop(u)) row.push_back(u);
    }
    return c;
}

std::size_t BipartiteCover::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj) total += row.size();
    return total;
}

bool BipartiteCover::has_edge(int left, int right) const {
    if (left < 1 || left > n || right < 1 || right > n) return false;
    const auto& row = adj[left];
    return std::binary_search(row.begin(), row.end(), right);
}

namespace {

constexpr int kInf = 1 << 30;

struct Hk {
    const BipartiteCover& cover;
    std::vector<int> pair_u, pair_v, dist;

    explicit Hk(const BipartiteCover& c)
        : cover(c), pair_u(c.n + 1, 0), pair_v(c.n + 1, 0), dist(c.n + 1, 0) {}

    bool bfs() {
        std::queue<int> q;
        for (int u = 1; u <= cover.n; ++u) {
            if (pair_u[u] == 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : cover.adj[u]) {
                int w = pair_v[v];
                if (w == 0) {
                    reachable_free = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : cover.adj[u]) {
            int w = pair_v[v];
            if (w == 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                pair_u[u] = v;
                pair_v[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    int run() {
        int matched = 0;
        while (bfs()) {
            for (int u = 1; u <= cover.n; ++u) {
                if (pair_u[u] == 0 && dfs(u)) ++matched;
            }
        }
        return matched;
    }
};

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& pair_u, int n) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(n + 1, false);
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int u = s;
        do {
            seen[u] = true;
            cyc.push_back(u);
            u = pair_u[u];
        } while (u != s);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::optional<Decomposition> decomposition_from_cover(const BipartiteCover& cover) {
    Hk hk(cover);
    if (hk.run() != cover.n) return std::nullopt;
    Decomposition dec;
    dec.cycles = permutation_cycles(hk.pair_u, cover.n);
    std::vector<int> all(cover.n);
    for (int i = 0; i < cover.n; ++i) all[i] = i + 1;
    dec.covered = VertexSet(std::move(all));
    return dec;
}

} // namespace

Matching max_matching(const BipartiteCover& cover) {
    Hk hk(cover);
    Matching m;
    m.size = hk.run();
    m.pair_of_left = std::move(hk.pair_u);
    m.pair_of_right = std::move(hk.pair_v);
    return m;
}

std::optional<Decomposition> hamiltonian_decomposition(const Digraph& d) {
    return decomposition_from_cover(BipartiteCover::from_digraph(d));
}

std::optional<Decomposition> hamiltonian_decomposition(const Graph& g) {
    return decomposition_from_cover(BipartiteCover::from_graph(g));
}

std::optional<HallCertificate> hall_violator(const Graph& g) {
    int n = g.node_count();
    BipartiteCover cover = BipartiteCover::from_graph(g);
    Matching m = max_matching(cover);
    if (m.size == n) return std::nullopt;

    // Alternating reachability from the unmatched lefts. The reached rights
    // are exactly the cover neighborhood of the reached lefts, which is one
    // unmatched-left short of them.
    std::vector<bool> seen_l(n + 1, false), seen_r(n + 1, false);
    std::vector<int> work;
    for (int u = 1; u <= n; ++u) {
        if (m.pair_of_left[u] == 0) {
            seen_l[u] = true;
            work.push_back(u);
        }
    }
    while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        for (int v : cover.adj[u]) {
            if (seen_r[v]) continue;
            seen_r[v] = true;
            int w = m.pair_of_right[v];
            if (w != 0 && !seen_l[w]) {
                seen_l[w] = true;
                work.push_back(w);
            }
        }
    }

    // Members whose own right copy was reached sit inside the neighborhood;
    // dropping them leaves an independent deficient set in the graph itself.
    std::vector<int> members;
    for (int u = 1; u <= n; ++u) {
        if (seen_l[u] && !seen_r[u]) members.push_back(u);
    }

    VertexSet set(std::move(members));
    VertexSet nb = neighbor_set(g, set);
    while (nb.size() < set.size() - 1) {
        std::vector<int> shrunk(set.begin(), set.end());
        shrunk.pop_back(); // deficiency stays positive whichever member goes; drop the largest
        set = VertexSet(std::move(shrunk));
        nb = neighbor_set(g, set);
    }
    return HallCertificate{std::move(set), std::move(nb)};
}

bool validate_decomposition(const Digraph& d, const Decomposition& dec) {
    std::vector<bool> used(d.node_count() + 1, false);
    std::vector<int> covered;
    for (const auto& cyc : dec.cycles) {
        if (cyc.empty()) return false;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (u < 1 || u > d.node_count() || used[u]) return false;
            if (!d.has_arc(u, v)) return false;
        }
        for (int u : cyc) {
            used[u] = true;
            covered.push_back(u);
        }
    }
    return VertexSet(std::move(covered)) == dec.covered;
}

bool validate_decomposition(const Graph& g, const Decomposition& dec) {
    return validate_decomposition(expand_symmetric(g), dec);
}

bool validate_hall_certificate(const Graph& g, const HallCertificate& cert) {
    if (cert.members.empty()) return false;
    if (!is_independent(g, cert.members)) return false;
    if (!(neighbor_set(g, cert.members) == cert.neighbors)) return false;
    return cert.neighbors.size() == cert.members.size() - 1;
}

} // namespace stabgraph
