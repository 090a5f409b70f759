#include "stabgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stabgraph {

namespace {

void check_id(int v, int n, const char* what) {
    if (v < 1 || v > n) {
        throw std::invalid_argument(std::string(what) + " id out of range: " + std::to_string(v));
    }
}

void sort_dedup(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_dedup(std::vector<std::pair<int, int>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { sort_dedup(ids_); }

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) os << ',';
        os << ids_[i];
    }
    os << '}';
    return os.str();
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    for (auto& [u, v] : edges_) {
        check_id(u, n_, "edge");
        check_id(v, n_, "edge");
        if (u == v) throw std::invalid_argument("loop in edge list: " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    sort_dedup(edges_);
    for (int u : loops_) check_id(u, n_, "loop");
    sort_dedup(loops_);

    adj_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_id(u, n_, "node");
    return adj_[u];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_loop(int u) const {
    return std::binary_search(loops_.begin(), loops_.end(), u);
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    for (auto [i, j] : arcs_) {
        check_id(i, n_, "arc");
        check_id(j, n_, "arc");
    }
    sort_dedup(arcs_);
    out_.assign(n_ + 1, {});
    for (auto [i, j] : arcs_) out_[i].push_back(j); // arcs_ sorted, so lists come out sorted
}

const std::vector<int>& Digraph::out_neighbors(int u) const {
    check_id(u, n_, "node");
    return out_[u];
}

bool Digraph::has_arc(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return false;
    const auto& nb = out_[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool Digraph::symmetric() const {
    for (auto [i, j] : arcs_) {
        if (i != j && !has_arc(j, i)) return false;
    }
    return true;
}

ZeroPattern::ZeroPattern(int n, std::vector<std::pair<int, int>> support)
    : n_(n), support_(std::move(support)) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    for (auto [i, j] : support_) {
        check_id(i, n_, "support");
        check_id(j, n_, "support");
    }
    sort_dedup(support_);
}

bool ZeroPattern::contains(int i, int j) const {
    return std::binary_search(support_.begin(), support_.end(), std::pair{i, j});
}

bool ZeroPattern::symmetric() const {
    for (auto [i, j] : support_) {
        if (i != j && !contains(j, i)) return false;
    }
    return true;
}

VertexSet neighbor_set(const Graph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int u : s) {
        const auto& nb = g.neighbors(u);
        out.insert(out.end(), nb.begin(), nb.end());
        if (g.has_loop(u)) out.push_back(u);
    }
    return VertexSet(std::move(out));
}

VertexSet neighbor_set(const Digraph& d, const VertexSet& s) {
    std::vector<int> out;
    for (int u : s) {
        const auto& nb = d.out_neighbors(u);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    return VertexSet(std::move(out));
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int u : s) {
        if (g.has_loop(u)) return false;
        for (int v : g.neighbors(u)) {
            if (v > u && s.contains(v)) return false;
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.node_count();
    std::vector<int> comp(n + 1, 0);
    std::vector<VertexSet> out;
    std::vector<int> stack, members;
    int label = 0;
    for (int s = 1; s <= n; ++s) {
        if (comp[s]) continue;
        ++label;
        comp[s] = label;
        stack.assign(1, s);
        members.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (!comp[v]) {
                    comp[v] = label;
                    stack.push_back(v);
                    members.push_back(v);
                }
            }
        }
        out.emplace_back(members);
    }
    return out;
}

std::vector<VertexSet> strongly_connected_components(const Digraph& d) {
    // Tarjan; components are emitted in reverse topological order and flipped
    // at the end so sources come first.
    int n = d.node_count();
    std::vector<int> index(n + 1, 0), low(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<int> stack;
    std::vector<VertexSet> sccs;
    int counter = 0;

    std::function<void(int)> dfs = [&](int u) {
        index[u] = low[u] = ++counter;
        stack.push_back(u);
        on_stack[u] = true;
        for (int v : d.out_neighbors(u)) {
            if (!index[v]) {
                dfs(v);
                low[u] = std::min(low[u], low[v]);
            } else if (on_stack[v]) {
                low[u] = std::min(low[u], index[v]);
            }
        }
        if (low[u] == index[u]) {
            std::vector<int> members;
            for (;;) {
                int v = stack.back();
                stack.pop_back();
                on_stack[v] = false;
                members.push_back(v);
                if (v == u) break;
            }
            sccs.emplace_back(std::move(members));
        }
    };

    for (int u = 1; u <= n; ++u) {
        if (!index[u]) dfs(u);
    }
    std::reverse(sccs.begin(), sccs.end());
    return sccs;
}

Digraph pattern_to_digraph(const ZeroPattern& z) {
    return Digraph(z.dim(), z.support());
}

ZeroPattern digraph_to_pattern(const Digraph& d) {
    return ZeroPattern(d.node_count(), d.arcs());
}

Digraph expand_symmetric(const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edges().size() + g.loops().size());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    for (int u : g.loops()) arcs.emplace_back(u, u);
    return Digraph(g.node_count(), std::move(arcs));
}

Graph collapse_symmetric(const Digraph& d) {
    if (!d.symmetric()) throw std::invalid_argument("digraph is not symmetric");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> loops;
    for (auto [i, j] : d.arcs()) {
        if (i == j) {
            loops.push_back(i);
        } else if (i < j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(d.node_count(), std::move(edges), std::move(loops));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> ids(s.begin(), s.end());
    std::vector<int> new_id(g.node_count() + 1, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 1 || ids[i] > g.node_count()) throw std::invalid_argument("vertex set out of range");
        new_id[ids[i]] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (new_id[u] && new_id[v]) edges.emplace_back(new_id[u], new_id[v]);
    }
    std::vector<int> loops;
    for (int u : g.loops()) {
        if (new_id[u]) loops.push_back(new_id[u]);
    }
    return {Graph(static_cast<int>(ids.size()), std::move(edges), std::move(loops)), std::move(ids)};
}

InducedSubdigraph induced_subgraph(const Digraph& d, const VertexSet& s) {
    std::vector<int> ids(s.begin(), s.end());
    std::vector<int> new_id(d.node_count() + 1, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 1 || ids[i] > d.node_count()) throw std::invalid_argument("vertex set out of range");
        new_id[ids[i]] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [i, j] : d.arcs()) {
        if (new_id[i] && new_id[j]) arcs.emplace_back(new_id[i], new_id[j]);
    }
    return {Digraph(static_cast<int>(ids.size()), std::move(arcs)), std::move(ids)};
}

} // namespace stabgraph
