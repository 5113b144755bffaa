// Shared fixtures: the 13-state worked-example NFA, its hand-checked
// expected values, and the 16-node digraph exercising the forward visit.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfs/colex_oracle.hpp"
#include "cfs/digraph.hpp"
#include "cfs/infsup.hpp"
#include "cfs/nfa.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(TEST_DATA_DIR) + "/" + name;
}

inline cfs::Nfa example13() {
    return cfs::normalize(cfs::parse_nfa_file(data_path("example13.nfa"))).nfa;
}

// Expected infimum/supremum strings of example13, one symbol char per
// position; the final char repeats forever. Symbols: '#'=0, 'a'=1, 'b'=2.
inline const std::array<const char*, 13> kInfStrings = {
    "#", "a#", "aa#", "aab#", "ab#", "ab#", "aab#",
    "b#", "b#", "baa#", "baab#", "bb#", "bb#"};
inline const std::array<const char*, 13> kSupStrings = {
    "#", "ab", "aab", "aab", "ab#", "ab", "abb#",
    "b#", "b", "baab", "babb#", "bb#", "b"};

// Depth columns, hand-derived from the conflict definition. phi[9] = 3: the
// infimum walk 9,2,1,... competes with the walk 9,3,5 and state 1 is
// incomparable with 5. gamma[10] = 2: the supremum walk 10,6,... competes
// with 10,4 and state 4 is incomparable with 6.
inline const std::array<uint32_t, 13> kPhi = {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 2, 1, 1};
inline const std::array<uint32_t, 13> kGamma = {1, 1, 1, 1, 1, 1, 1, 1, 1, 25, 2, 1, 1};

inline cfs::Symbol sym_of(char c) { return c == '#' ? 0 : (c == 'a' ? 1 : 2); }

// Pattern expanded to `len` symbols, last symbol repeating.
inline cfs::StringPrefix expand(const char* pattern, std::size_t len) {
    cfs::StringPrefix s;
    for (const char* c = pattern; *c; ++c) s.symbols.push_back(sym_of(*c));
    while (s.symbols.size() < len) s.symbols.push_back(s.symbols.back());
    s.symbols.resize(len);
    return s;
}

// Infimum-graph and supremum-graph edge lists of example13.
inline const std::vector<std::pair<cfs::State, cfs::State>> kInfGraphEdges = {
    {0, 0}, {0, 1}, {0, 7}, {0, 8}, {1, 2}, {2, 9}, {5, 3},
    {5, 6}, {6, 10}, {7, 4}, {7, 11}, {8, 5}, {8, 12}};
// Both 2 and 3 attain the supremum of state 9's predecessors, so the
// supremum graph has an edge from each of them.
inline const std::vector<std::pair<cfs::State, cfs::State>> kSupGraphEdges = {
    {0, 0}, {0, 7}, {1, 2}, {2, 9}, {3, 9}, {5, 3}, {6, 10}, {7, 4},
    {7, 11}, {8, 5}, {8, 12}, {11, 6}, {12, 1}, {12, 8}};

// 16-node digraph whose forward visit (from root 1, identity order) has a
// fully hand-checked trace: first cycle {4,6}, left set {2,3}, right set
// {10,12}, and the predecessor map below.
inline cfs::Digraph walk16() {
    cfs::Digraph g(16);
    const std::pair<cfs::State, cfs::State> edges[] = {
        {1, 5},  {5, 1},  {1, 10}, {1, 4},  {10, 8}, {4, 10}, {4, 2},
        {8, 4},  {2, 3},  {4, 6},  {6, 4},  {8, 12}, {6, 3},  {6, 12},
        {3, 14}, {3, 9},  {12, 14}, {14, 7}, {9, 7},  {0, 8},  {11, 15},
        {15, 0}, {15, 8}, {11, 13}, {13, 11}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.sort_adjacency();
    return g;
}

inline const std::array<cfs::State, 16> kWalk16P = {
    15, 5, 4, 2, 6, 1, 4, 9, 10, 3, 4, 13, 6, 11, 3, 11};

inline cfs::TotalOrder identity_order(std::size_t n) {
    cfs::TotalOrder t;
    t.rank.resize(n);
    t.by_rank.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.rank[i] = static_cast<uint32_t>(i + 1);
        t.by_rank[i] = static_cast<cfs::State>(i);
    }
    return t;
}

}  // namespace fixtures
