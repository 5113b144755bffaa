// conflicts.hpp -- conflict depths along the infimum/supremum walks: the
// deepest position at which a parallel equal-labelled walk can still fail
// the order test against the walk node.
#pragma once

#include <vector>

#include "cfs/colex_oracle.hpp"
#include "cfs/nfa.hpp"
#include "cfs/walks.hpp"

namespace cfs {

// True iff some walk (x_i) to u with x_1 = u, x_i != u_i and matching
// labels for 1 < i <= j ends in x_j with !(u_j < x_j) (infimum side) or
// !(x_j < u_j) (supremum side), where (u_i) is the walk traced by `walk`.
// Depth 1 is always a conflict.
bool is_inf_conflict(const Nfa& nfa, const PartialOrderMatrix& order,
                     const PredecessorMap& walk, State u, std::size_t depth);
bool is_sup_conflict(const Nfa& nfa, const PartialOrderMatrix& order,
                     const PredecessorMap& walk, State u, std::size_t depth);

// Per-state maximum conflict depth, in [1, 2n-1]. phi is taken along the
// infimum walks, gamma along the supremum walks. Conflicts are closed
// downward in the depth, so each entry is found by binary search.
struct ConflictDepths {
    std::vector<uint32_t> phi;
    std::vector<uint32_t> gamma;
};

ConflictDepths conflict_depths(const Nfa& nfa, const PartialOrderMatrix& order,
                               const PredecessorMap& inf_walk,
                               const PredecessorMap& sup_walk);

}  // namespace cfs
