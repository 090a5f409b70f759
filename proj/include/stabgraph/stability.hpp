#ifndef STABGRAPH_STABILITY_HPP
#define STABGRAPH_STABILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabgraph/graph.hpp"
#include "stabgraph/matching.hpp"

namespace stabgraph {

enum class Stability { Stable, Unstable, Unknown };

struct StabilityVerdict {
    Stability status = Stability::Unknown;
    bool l_flag = false; // every component carries a loop
    bool h_flag = false; // spanning disjoint-cycle union exists

    // whichever certificates apply; all of them re-validate against the input
    std::optional<Decomposition> hamiltonian;        // stable, symmetric
    std::vector<int> component_loops;                // one looped vertex per component
    std::optional<VertexSet> loopless_component;     // L failure
    std::optional<HallCertificate> hall;             // H failure, symmetric
    std::optional<std::vector<Decomposition>> chain; // stable, directed
    std::optional<int> missing_k;                    // unstable, directed
    std::optional<VertexSet> failing_component;      // strongly connected part behind missing_k
    std::string note;
};

// (flag, first loopless component if any)
std::pair<bool, std::optional<VertexSet>> check_L(const Graph& g);

StabilityVerdict check_symmetric_stability(const Graph& g);

// Minimal deficiency-one class of a graph without a spanning cycle cover.
// k is absent exactly when such a cover exists. The witness is the
// lexicographically smallest certificate of minimal size.
struct ThinClass {
    std::optional<int> k;
    std::optional<HallCertificate> witness;
};
ThinClass classify_thin(const Graph& g); // n <= 64

// Disjoint cycles covering exactly k nodes; lexicographically first witness.
// Subset search, n <= 20.
std::optional<Decomposition> k_decomposition(const Digraph& d, int k);

// Chain of decompositions covering nested sets of sizes 1..n, or none.
// Memoized subset DFS, n <= 16.
std::optional<std::vector<Decomposition>> nested_chain(const Digraph& d);

// Three-valued: Unstable on a missing k-decomposition (whole digraph or any
// strongly connected part), Stable on a nested chain, Unknown otherwise.
// n <= 16.
StabilityVerdict check_digraph_stability(const Digraph& d);

} // namespace stabgraph

#endif
