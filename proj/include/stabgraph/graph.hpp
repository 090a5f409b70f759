#ifndef STABGRAPH_GRAPH_HPP
#define STABGRAPH_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace stabgraph {

// Node ids are 1-based throughout.

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids); // sorts and dedups

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

    std::string to_string() const; // "{1,2,4}"

private:
    std::vector<int> ids_;
};

// Undirected graph with optional self-loops. Loops are kept apart from the
// edge list; an edge never has equal endpoints.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops);

    int node_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; } // u < v, sorted
    const std::vector<int>& loops() const { return loops_; }                 // sorted
    const std::vector<int>& neighbors(int u) const;                          // loop excluded
    bool has_edge(int u, int v) const;
    bool has_loop(int u) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> loops_;
    std::vector<std::vector<int>> adj_;
};

class Digraph {
public:
    Digraph(int n, std::vector<std::pair<int, int>> arcs);

    int node_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; } // sorted, may contain (i,i)
    const std::vector<int>& out_neighbors(int u) const;
    bool has_arc(int i, int j) const;
    bool symmetric() const; // arc set closed under reversal

private:
    int n_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_;
};

// Zero pattern of an n x n matrix: the support lists the entries allowed to
// be nonzero. Rows/columns are 1-based like node ids.
class ZeroPattern {
public:
    ZeroPattern(int n, std::vector<std::pair<int, int>> support);

    int dim() const { return n_; }
    const std::vector<std::pair<int, int>>& support() const { return support_; }
    bool contains(int i, int j) const;
    bool symmetric() const;

private:
    int n_;
    std::vector<std::pair<int, int>> support_;
};

VertexSet neighbor_set(const Graph& g, const VertexSet& s);   // loop at u adds u itself
VertexSet neighbor_set(const Digraph& d, const VertexSet& s); // out-neighbors
bool is_independent(const Graph& g, const VertexSet& s);      // no inner edges, no loops on members

std::vector<VertexSet> connected_components(const Graph& g);          // loops connect nothing
std::vector<VertexSet> strongly_connected_components(const Digraph& d); // topological order

// support <-> arc set bijection
Digraph pattern_to_digraph(const ZeroPattern& z);
ZeroPattern digraph_to_pattern(const Digraph& d);

Digraph expand_symmetric(const Graph& g);   // edge -> both arcs, loop -> (u,u)
Graph collapse_symmetric(const Digraph& d); // throws on asymmetric input

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids; // original_ids[new - 1] = old id
};
struct InducedSubdigraph {
    Digraph digraph;
    std::vector<int> original_ids;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubdigraph induced_subgraph(const Digraph& d, const VertexSet& s);

} // namespace stabgraph

#endif
