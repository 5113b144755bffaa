// partition.hpp -- coarsest forward-stable partition and quotient automaton.
#pragma once

#include <vector>

#include "cfs/nfa.hpp"

namespace cfs {

struct Partition {
    std::vector<uint32_t> block_of;              // state -> block index
    std::vector<std::vector<State>> blocks;      // sorted members

    std::size_t size() const { return blocks.size(); }
    bool all_singletons() const;
};

// Coarsest partition refining the label partition such that for any two
// blocks B1, B2, either every state of B1 has a transition from B2 or none
// does (B1 is inside the image of B2 or disjoint from it). States sharing a
// block thus receive the same incoming strings. Computed by iterated
// splitting to a fixpoint.
Partition coarsest_forward_stable_partition(const Nfa& nfa);

// One state per block (block identity: minimum member id, blocks ordered by
// it); block -> block transition iff any member -> member transition exists.
Nfa forward_stable_quotient(const Nfa& nfa);

bool is_forward_stable(const Nfa& nfa);

// Runs one splitting pass over the given partition; returns true if any
// block was split. Exposed so tests can check stability of the fixpoint.
bool refine_once(const Nfa& nfa, Partition& p);

}  // namespace cfs
