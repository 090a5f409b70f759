#include "brute.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace brute {

using stabgraph::BipartiteCover;
using stabgraph::DenseMatrix;
using stabgraph::Digraph;
using stabgraph::Graph;
using stabgraph::VertexSet;

bool has_permutation_cover(const Digraph& d) {
    int n = d.node_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) ok = d.has_arc(i, perm[i - 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool has_permutation_cover(const Graph& g) {
    return has_permutation_cover(stabgraph::expand_symmetric(g));
}

namespace {

// Advances idx to the next k-subset of {1..n} in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - 1 - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool has_k_cycle_cover(const Digraph& d, int k) {
    int n = d.node_count();
    if (k < 1 || k > n) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    do {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = d.has_arc(idx[i], idx[perm[i]]);
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_combination(idx, n));
    return false;
}

namespace {

bool kuhn_augment(const BipartiteCover& cover, int u, std::vector<char>& used,
                  std::vector<int>& match_right) {
    for (int v : cover.adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        if (match_right[v] == 0 || kuhn_augment(cover, match_right[v], used, match_right)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace

int max_matching_size(const BipartiteCover& cover) {
    std::vector<int> match_right(cover.n + 1, 0);
    int size = 0;
    for (int u = 1; u <= cover.n; ++u) {
        std::vector<char> used(cover.n + 1, 0);
        if (kuhn_augment(cover, u, used, match_right)) ++size;
    }
    return size;
}

std::optional<DeficiencyClass> min_deficiency_class(const Graph& g) {
    int n = g.node_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 1);
        do {
            VertexSet members(idx);
            if (!stabgraph::is_independent(g, members)) continue;
            VertexSet nb = stabgraph::neighbor_set(g, members);
            if (nb.size() == k - 1) return DeficiencyClass{k, members, nb};
        } while (next_combination(idx, n));
    }
    return std::nullopt;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

bool every_component_has_loop(const Graph& g) {
    int n = g.node_count();
    Dsu dsu(n);
    for (auto [u, v] : g.edges()) dsu.unite(u, v);
    std::vector<char> looped(n + 1, 0);
    for (int u : g.loops()) looped[dsu.find(u)] = 1;
    for (int u = 1; u <= n; ++u) {
        if (!looped[dsu.find(u)]) return false;
    }
    return true;
}

std::vector<std::vector<int>> component_partition(const Graph& g) {
    int n = g.node_count();
    Dsu dsu(n);
    for (auto [u, v] : g.edges()) dsu.unite(u, v);
    std::vector<std::vector<int>> by_root(n + 1);
    for (int u = 1; u <= n; ++u) by_root[dsu.find(u)].push_back(u);
    std::vector<std::vector<int>> parts;
    for (int u = 1; u <= n; ++u) {
        if (!by_root[u].empty()) parts.push_back(by_root[u]);
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::vector<std::vector<int>> scc_partition(const Digraph& d) {
    int n = d.node_count();
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
    for (int u = 1; u <= n; ++u) reach[u][u] = 1;
    for (auto [u, v] : d.arcs()) reach[u][v] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
            if (!reach[i][k]) continue;
            for (int j = 1; j <= n; ++j) {
                if (reach[k][j]) reach[i][j] = 1;
            }
        }
    }
    std::vector<char> assigned(n + 1, 0);
    std::vector<std::vector<int>> parts;
    for (int u = 1; u <= n; ++u) {
        if (assigned[u]) continue;
        std::vector<int> part;
        for (int v = u; v <= n; ++v) {
            if (reach[u][v] && reach[v][u]) {
                part.push_back(v);
                assigned[v] = 1;
            }
        }
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    }
    int pair_bits = static_cast<int>(pairs.size());
    for (std::uint64_t em = 0; em < (1ull << pair_bits); ++em) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < pair_bits; ++b) {
            if (em >> b & 1) edges.push_back(pairs[b]);
        }
        for (std::uint64_t lm = 0; lm < (1ull << n); ++lm) {
            std::vector<int> loops;
            for (int b = 0; b < n; ++b) {
                if (lm >> b & 1) loops.push_back(b + 1);
            }
            fn(Graph(n, edges, loops));
        }
    }
}

namespace {

double laplace_det(const std::vector<std::vector<double>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    double total = 0.0;
    double sign = 1.0;
    for (std::size_t col = 0; col < n; ++col, sign = -sign) {
        std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        total += sign * m[0][col] * laplace_det(minor);
    }
    return total;
}

} // namespace

double det_by_expansion(const DenseMatrix& a) {
    int n = a.dim();
    if (n > 6) throw std::invalid_argument("expansion oracle is capped at n = 6");
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = a.at(i, j);
    }
    return laplace_det(m);
}

bool hurwitz_closed_form(const DenseMatrix& a) {
    if (a.dim() == 1) return a.at(1, 1) < 0.0;
    if (a.dim() == 2) {
        double tr = a.at(1, 1) + a.at(2, 2);
        double det = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
        return tr < 0.0 && det > 0.0;
    }
    throw std::invalid_argument("closed form is capped at n = 2");
}

} // namespace brute
