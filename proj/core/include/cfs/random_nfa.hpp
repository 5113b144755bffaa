// random_nfa.hpp -- seeded generation of forward-stable test automata and
// the oracle-comparison harness built on them.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "cfs/nfa.hpp"

namespace cfs {

// Random normalized NFA: initial '#' state, remaining labels drawn from
// codes 1..sigma-1 with every code used, a spanning out-tree from the
// initial state, and random extra edges up to m total. sigma is clamped to
// n and m to the feasible range. Deterministic in the seed.
Nfa random_nfa(std::size_t n, std::size_t m, std::size_t sigma, uint64_t seed);

// random_nfa followed by the coarsest forward-stable quotient; the result
// may have fewer than n states.
Nfa random_forward_stable_nfa(std::size_t n, std::size_t m, std::size_t sigma,
                              uint64_t seed);

// First ordered pair on which the built index answers differently from the
// brute-force order matrix, or nullopt if they agree on all n^2 pairs.
std::optional<std::pair<State, State>> find_mismatch(const Nfa& nfa);

// Greedy state deletion (with re-quotienting) while still_fails holds;
// returns the smallest automaton reached.
Nfa minimize_counterexample(const Nfa& nfa,
                            const std::function<bool(const Nfa&)>& still_fails);

}  // namespace cfs
