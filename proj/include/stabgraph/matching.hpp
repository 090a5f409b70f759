#ifndef STABGRAPH_MATCHING_HPP
#define STABGRAPH_MATCHING_HPP

#include <optional>
#include <vector>

#include "stabgraph/graph.hpp"

namespace stabgraph {

// Bipartite double cover of a digraph: left copy i' and right copy j'' of the
// node set, with (i', j'') present exactly when arc (i, j) is. A perfect
// matching in the cover is the same thing as a spanning disjoint-cycle union.
struct BipartiteCover {
    int n = 0;
    std::vector<std::vector<int>> adj; // adj[i] = sorted right neighbors of left i (1-based)

    static BipartiteCover from_digraph(const Digraph& d);
    static BipartiteCover from_graph(const Graph& g); // symmetric expansion

    std::size_t edge_count() const;
    bool has_edge(int left, int right) const;
};

struct Matching {
    std::vector<int> pair_of_left;  // 0 = unmatched
    std::vector<int> pair_of_right; // 0 = unmatched
    int size = 0;
};

// Hopcroft-Karp, O(E sqrt(V)). Deterministic: augmenting search scans sorted
// adjacency in order.
Matching max_matching(const BipartiteCover& cover);

// Disjoint cycles; a cycle of length 1 is a loop, length 2 in an undirected
// source uses one edge in both directions. Cycles start at their smallest
// member and are listed by that member.
struct Decomposition {
    std::vector<std::vector<int>> cycles;
    VertexSet covered;
};

std::optional<Decomposition> hamiltonian_decomposition(const Digraph& d);
std::optional<Decomposition> hamiltonian_decomposition(const Graph& g);

// Deficiency-one witness: members independent, |neighbors| = |members| - 1.
struct HallCertificate {
    VertexSet members;   // I
    VertexSet neighbors; // N(I)
};

// None exactly when the cover has a perfect matching. Certificate comes from
// alternating reachability off a maximum matching, reduced and then minimized
// by dropping the largest member while the deficiency exceeds one.
std::optional<HallCertificate> hall_violator(const Graph& g);

bool validate_decomposition(const Digraph& d, const Decomposition& dec);
bool validate_decomposition(const Graph& g, const Decomposition& dec);
bool validate_hall_certificate(const Graph& g, const HallCertificate& cert);

} // namespace stabgraph

#endif
