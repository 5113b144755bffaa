// infsup.hpp -- per-state infimum/supremum string prefixes and the
// infimum/supremum graphs whose infinite walks spell them.
#pragma once

#include <compare>
#include <vector>

#include "cfs/digraph.hpp"
#include "cfs/nfa.hpp"

namespace cfs {

// First 2n-1 symbols of an infinite string; enough to decide any comparison
// between infimum/supremum strings of the same automaton.
struct StringPrefix {
    std::vector<Symbol> symbols;
};

enum class Cmp { Less, Equal, Greater };

// Lexicographic comparison; Equal certifies equality of the underlying
// infinite strings when both prefixes have the full 2n-1 length.
Cmp compare_prefixes(const StringPrefix& a, const StringPrefix& b);

enum class Extreme { Inf, Sup };

// Prefixes together with the per-round rank history of the backward
// relaxation that produced them. ranks[k][u], for k in 0..2n-2, orders the
// (k+1)-symbol prefixes; the last round's ranks order the infinite strings
// themselves.
struct PrefixSet {
    Extreme kind;
    std::size_t rounds = 0;                       // number of rounds run
    std::vector<std::vector<uint32_t>> ranks;     // round -> state -> dense rank
    std::vector<StringPrefix> prefix;             // per state, length = rounds
};

// Runs `rounds` rounds of backward relaxation (default 2n-1) with per-round
// rank compression; round k+1 keys each state by (label, best round-k rank
// over in-neighbors), minimizing for Inf and maximizing for Sup.
PrefixSet inf_prefixes(const Nfa& nfa, std::size_t rounds = 0);
PrefixSet sup_prefixes(const Nfa& nfa, std::size_t rounds = 0);
PrefixSet extreme_prefixes(const Nfa& nfa, Extreme kind, std::size_t rounds = 0);

// Edge (u,v) iff (u,v) is an NFA transition and some infimum (supremum)
// walk steps from v to u, i.e. u attains the best final-round rank among
// v's in-neighbors. Throws if some node ends up without an in-edge.
Digraph inf_graph(const Nfa& nfa, const PrefixSet& inf);
Digraph sup_graph(const Nfa& nfa, const PrefixSet& sup);

}  // namespace cfs
