// nfa.hpp -- input-consistent NFA representation, text format parsing and
// normalization to the standing assumptions (unique '#' self-loop at the
// initial state, reachability, effective alphabet, one in-label per state).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfs/types.hpp"

namespace cfs {

// Input-consistent NFA. Every transition into a state carries that state's
// label, so transitions are plain (source, target) pairs and the transition
// label is label[target].
struct Nfa {
    std::size_t n = 0;
    State initial = 0;
    std::size_t sigma = 0;                       // alphabet size, code 0 = '#'
    std::vector<Symbol> label;                   // lambda, per state
    std::vector<std::string> symbol_names;       // code -> printable name
    std::vector<std::vector<State>> out;         // sorted by target id
    std::vector<std::vector<State>> in;          // sorted by source id

    std::size_t num_edges() const;
    bool has_edge(State src, State dst) const;
    std::string symbol_name(Symbol s) const;
};

// Raw automaton as parsed: edges carry explicit labels, so a state may be
// reached by edges of several distinct labels. normalize() resolves that by
// state splitting.
struct RawEdge {
    State src;
    State dst;
    Symbol label;
};

struct RawNfa {
    std::size_t n = 0;
    State initial = 0;
    std::vector<Symbol> declared_label;          // from 'state' lines
    std::vector<std::string> symbol_names;
    std::vector<RawEdge> edges;
};

// Line-oriented text format:
//   nfa <n> <m> <sigma>
//   initial <id>
//   symbols <sym_1> ... <sym_sigma>        (increasing order, first is '#')
//   state <id> <symbol>                    (n lines)
//   edge <src> <dst> [<symbol>]            (m lines; label defaults to
//                                           the target state's symbol)
// Lines whose first character is '#' are comments.
RawNfa parse_nfa(std::istream& text);
RawNfa parse_nfa_file(const std::string& path);

// Result of normalization, with the map from new states back to the raw
// state they were split from.
struct NormalizeResult {
    Nfa nfa;
    std::vector<State> origin;                   // new state -> raw state
};

// Enforces the standing assumptions: every state reachable from the initial
// state, '#' labels only the initial self-loop (added if absent), every
// symbol labels at least one edge, and states reached by k > 1 distinct
// labels are split into k copies (in-edges routed by label, out-edges
// duplicated). Unreachable states and unused symbols are errors.
NormalizeResult normalize(const RawNfa& raw);
Nfa normalize(const Nfa& nfa);

// Throws InvariantError if any Nfa invariant is violated.
void validate(const Nfa& nfa);

RawNfa to_raw(const Nfa& nfa);
void write_nfa(std::ostream& os, const Nfa& nfa);
void write_nfa_file(const std::string& path, const Nfa& nfa);

}  // namespace cfs
