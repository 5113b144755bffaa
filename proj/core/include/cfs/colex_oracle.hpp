// colex_oracle.hpp -- ground truth for the maximum co-lex order of a
// forward-stable NFA, via the preceding-pair relation, plus a deterministic
// total extension of it.
#pragma once

#include <vector>

#include "cfs/nfa.hpp"

namespace cfs {

// Graph on ordered pairs of distinct states. An edge (u,v) -> (u',v') means
// the pair (u,v) can take one synchronized backward step (both walks read
// the same symbol, components stay distinct) to (u',v'). A pair (ub,vb)
// precedes (u,v) iff (u,v) reaches (ub,vb), reflexively.
struct PairGraph {
    std::size_t n = 0;
    std::vector<std::vector<uint32_t>> succ;     // pair index -> successor pair indices

    static uint32_t index(State u, State v, std::size_t n) {
        return static_cast<uint32_t>(u * n + v);
    }
    bool precedes(State ub, State vb, State u, State v) const;  // (ub,vb) => => (u,v)
};

PairGraph preceding_pair_graph(const Nfa& nfa);

// rel[u*n+v] == true iff u <=_FS v.
struct PartialOrderMatrix {
    std::size_t n = 0;
    std::vector<uint8_t> rel;

    bool leq(State u, State v) const { return rel[u * n + v] != 0; }
    bool lt(State u, State v) const { return u != v && leq(u, v); }
};

// u <=_FS v (u != v) iff every pair preceding (u,v) is label-ordered.
// Verifies antisymmetry, transitivity and label-monotonicity post hoc and
// throws InvariantError on failure (which indicates a non-forward-stable
// input).
PartialOrderMatrix max_colex_order(const Nfa& nfa);

struct TotalOrder {
    std::vector<uint32_t> rank;                  // state -> 1..n
    std::vector<State> by_rank;                  // rank-1 -> state

    std::size_t size() const { return rank.size(); }
    bool less(State u, State v) const { return rank[u] < rank[v]; }
    TotalOrder reversed() const;
};

// Topological linear extension of the partial order; among ready states the
// smallest (label, id) is placed first.
TotalOrder colex_extension(const PartialOrderMatrix& order, const Nfa& nfa);

// True iff u <=_FS v implies rank(u) <= rank(v).
bool is_colex_extension(const PartialOrderMatrix& order, const TotalOrder& total);

}  // namespace cfs
