#include "cfs/infsup.hpp"

#include <algorithm>
#include <numeric>

namespace cfs {

Cmp compare_prefixes(const StringPrefix& a, const StringPrefix& b) {
    if (a.symbols.size() != b.symbols.size())
        throw InvariantError("prefix length mismatch");
    if (a.symbols < b.symbols) return Cmp::Less;
    if (b.symbols < a.symbols) return Cmp::Greater;
    return Cmp::Equal;
}

namespace {

// Dense-ranks states by 64-bit keys.
std::vector<uint32_t> compress(const std::vector<uint64_t>& keys) {
    const std::size_t n = keys.size();
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return keys[a] < keys[b]; });
    std::vector<uint32_t> rank(n);
    uint32_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++r;
        rank[order[i]] = r;
    }
    return rank;
}

}  // namespace

PrefixSet extreme_prefixes(const Nfa& nfa, Extreme kind, std::size_t rounds) {
    const std::size_t n = nfa.n;
    if (rounds == 0) rounds = 2 * n - 1;
    PrefixSet ps;
    ps.kind = kind;
    ps.rounds = rounds;
    ps.ranks.reserve(rounds);

    // round 1: one-symbol prefixes, ordered by label
    {
        std::vector<uint64_t> keys(n);
        for (std::size_t u = 0; u < n; ++u) keys[u] = nfa.label[u];
        ps.ranks.push_back(compress(keys));
    }
    // round k+1: prefix(u) = label(u) . best round-k prefix over in-neighbors
    for (std::size_t k = 1; k < rounds; ++k) {
        const auto& prev = ps.ranks.back();
        std::vector<uint64_t> keys(n);
        for (std::size_t u = 0; u < n; ++u) {
            uint32_t best = prev[nfa.in[u].front()];
            for (State w : nfa.in[u]) {
                uint32_t r = prev[w];
                if (kind == Extreme::Inf ? r < best : r > best) best = r;
            }
            keys[u] = (static_cast<uint64_t>(nfa.label[u]) << 32) | best;
        }
        ps.ranks.push_back(compress(keys));
    }

    // materialize the prefix strings by following best-ranked in-neighbors
    ps.prefix.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        auto& sym = ps.prefix[u].symbols;
        sym.reserve(rounds);
        State cur = static_cast<State>(u);
        for (std::size_t pos = 0; pos < rounds; ++pos) {
            sym.push_back(nfa.label[cur]);
            if (pos + 1 == rounds) break;
            const auto& rk = ps.ranks[rounds - 2 - pos];  // orders remaining suffix
            State best = nfa.in[cur].front();
            for (State w : nfa.in[cur]) {
                bool better = kind == Extreme::Inf ? rk[w] < rk[best] : rk[w] > rk[best];
                if (better) best = w;
            }
            cur = best;
        }
    }
    return ps;
}

PrefixSet inf_prefixes(const Nfa& nfa, std::size_t rounds) {
    return extreme_prefixes(nfa, Extreme::Inf, rounds);
}

PrefixSet sup_prefixes(const Nfa& nfa, std::size_t rounds) {
    return extreme_prefixes(nfa, Extreme::Sup, rounds);
}

namespace {

Digraph walk_graph(const Nfa& nfa, const PrefixSet& ps) {
    const std::size_t n = nfa.n;
    const auto& final_rank = ps.ranks.back();
    Digraph g(n);
    for (std::size_t v = 0; v < n; ++v) {
        uint32_t best = final_rank[nfa.in[v].front()];
        for (State w : nfa.in[v]) {
            uint32_t r = final_rank[w];
            if (ps.kind == Extreme::Inf ? r < best : r > best) best = r;
        }
        for (State w : nfa.in[v])
            if (final_rank[w] == best) g.add_edge(w, static_cast<State>(v));
    }
    g.sort_adjacency();
    for (std::size_t v = 0; v < n; ++v)
        if (g.in[v].empty())
            throw InvariantError("walk graph node without in-edge");
    return g;
}

}  // namespace

Digraph inf_graph(const Nfa& nfa, const PrefixSet& inf) {
    if (inf.kind != Extreme::Inf) throw InvariantError("expected infimum prefixes");
    return walk_graph(nfa, inf);
}

Digraph sup_graph(const Nfa& nfa, const PrefixSet& sup) {
    if (sup.kind != Extreme::Sup) throw InvariantError("expected supremum prefixes");
    return walk_graph(nfa, sup);
}

}  // namespace cfs
