// walks.hpp -- the forward-visit construction of a predecessor function p
// whose iterates trace a leftmost walk from every node, for a digraph in
// which every node has an in-edge and a total order on its nodes.
#pragma once

#include <optional>
#include <vector>

#include "cfs/colex_oracle.hpp"
#include "cfs/digraph.hpp"

namespace cfs {

struct PredecessorMap {
    std::vector<State> p;                        // (p[u], u) is always an edge

    State step(State u) const { return p[u]; }
    // p^k(u)
    State iterate(State u, std::size_t k) const {
        while (k--) u = p[u];
        return u;
    }
};

// One cycle-closing event: the cycle in next-link order and the left/right
// frontier sets derived from it.
struct WalkTraceEntry {
    std::vector<State> cycle;
    std::vector<State> left;
    std::vector<State> right;
};

struct ForwardVisitOptions {
    // Roots tried by the outer loop, in order, before the remaining nodes
    // in increasing id order.
    std::vector<State> roots;
    std::vector<WalkTraceEntry>* trace = nullptr;
};

// Alternating DFS / multi-source BFS visit. Neighbor iteration follows the
// total order; cycle closure triggers the shortest-path sweep over the
// right subgraph, then the longest-path sweep over the (acyclic) left
// subgraph, the latter overriding the former on shared nodes.
PredecessorMap forward_visit(const Digraph& g, const TotalOrder& order,
                             const ForwardVisitOptions& opts = {});

// forward_visit under the reversed order: rightmost walks w.r.t. `order`.
PredecessorMap rightmost_map(const Digraph& g, const TotalOrder& order,
                             const ForwardVisitOptions& opts = {});

// Independent check that every p-walk is leftmost: a backward dynamic
// program over (node, depth) up to depth 2|V| compares the stored
// predecessor against every walk that meets it.
bool certify_leftmost(const Digraph& g, const TotalOrder& order,
                      const PredecessorMap& p);
bool certify_rightmost(const Digraph& g, const TotalOrder& order,
                       const PredecessorMap& p);

}  // namespace cfs
