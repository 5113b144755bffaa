// cfs_index.hpp -- the O(n)-word query structure: per-state extension rank,
// label, infimum/supremum walk predecessors and conflict depths, with the
// decision-tree order query and a binary serialization.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfs/colex_oracle.hpp"
#include "cfs/conflicts.hpp"
#include "cfs/infsup.hpp"
#include "cfs/nfa.hpp"
#include "cfs/walks.hpp"

namespace cfs {

struct CfsIndex {
    std::size_t n = 0;
    std::vector<uint32_t> rank;                  // a co-lex extension, 1..n
    std::vector<Symbol> label;
    std::vector<State> p_inf;                    // leftmost infimum walk
    std::vector<State> p_sup;                    // rightmost supremum walk
    std::vector<uint32_t> phi;
    std::vector<uint32_t> gamma;

    bool operator==(const CfsIndex&) const = default;
};

// Intermediate products of build(), retained on request for tests and
// debugging output.
struct BuildArtifacts {
    PartialOrderMatrix order;
    TotalOrder total;
    PrefixSet inf;
    PrefixSet sup;
    Digraph inf_g;
    Digraph sup_g;
    PredecessorMap p_inf;
    PredecessorMap p_sup;
    ConflictDepths depths;
};

// Full pipeline: order matrix, extension, prefix relaxation, walk graphs,
// forward visits (reversed order for the supremum side), conflict depths.
// Both predecessor maps are certified before assembly. Throws
// InvariantError on non-forward-stable input, naming a non-singleton block.
CfsIndex build_index(const Nfa& nfa, BuildArtifacts* artifacts = nullptr);

struct QueryTrace {
    bool leq = false;
    char rule = 'a';                             // decision-tree case a..f
    uint32_t steps = 0;                          // always <= 2n-1
    uint32_t meet = 0;                           // first i with u_i = v_i, 0 if none
    uint32_t inversion = 0;                      // first i with rank(v_i) < rank(u_i)
};

// Is u <=_FS v. Walks u_i = p_sup^{i-1}(u) and v_i = p_inf^{i-1}(v) are
// scanned in lockstep, comparing labels and ranks.
QueryTrace query(const CfsIndex& idx, State u, State v);

// Little-endian 64-bit words: magic "CFSX" + version 1 packed into the
// first word, then n, then the six per-state arrays in declaration order;
// 6n+2 words total.
std::vector<uint8_t> serialize(const CfsIndex& idx);
CfsIndex deserialize(const std::vector<uint8_t>& bytes);
void write_index_file(const std::string& path, const CfsIndex& idx);
CfsIndex read_index_file(const std::string& path);

std::size_t serialized_words(const CfsIndex& idx);

// One state per line: id, rank, label, p_inf, p_sup, phi, gamma.
void write_index_text(std::ostream& os, const CfsIndex& idx);

}  // namespace cfs
