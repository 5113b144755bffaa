#include "cfs/partition.hpp"

#include <algorithm>
#include <map>

namespace cfs {

bool Partition::all_singletons() const {
    return blocks.size() == block_of.size();
}

namespace {

void rebuild_blocks(Partition& p, std::size_t n_blocks) {
    p.blocks.assign(n_blocks, {});
    for (std::size_t u = 0; u < p.block_of.size(); ++u)
        p.blocks[p.block_of[u]].push_back(static_cast<State>(u));
}

// Renumber blocks by minimum member so block ids are deterministic.
void canonicalize(const Nfa& nfa, Partition& p) {
    std::vector<std::pair<State, uint32_t>> order;  // (min member, old id)
    order.reserve(p.blocks.size());
    for (uint32_t b = 0; b < p.blocks.size(); ++b)
        order.emplace_back(p.blocks[b].front(), b);
    std::sort(order.begin(), order.end());
    std::vector<uint32_t> remap(p.blocks.size());
    for (uint32_t pos = 0; pos < order.size(); ++pos) remap[order[pos].second] = pos;
    for (std::size_t u = 0; u < nfa.n; ++u) p.block_of[u] = remap[p.block_of[u]];
    rebuild_blocks(p, p.blocks.size());
}

}  // namespace

bool refine_once(const Nfa& nfa, Partition& p) {
    const std::size_t n = nfa.n;
    bool changed = false;
    std::size_t n_blocks = p.blocks.size();
    // split every block against every splitter block
    for (std::size_t splitter = 0; splitter < p.blocks.size(); ++splitter) {
        std::vector<bool> hits(n, false);  // u has a transition from the splitter
        for (State v : p.blocks[splitter])
            for (State u : nfa.out[v]) hits[u] = true;
        std::vector<uint32_t> new_id(n_blocks, UINT32_MAX);  // block -> id of its "miss" half
        for (std::size_t u = 0; u < n; ++u) {
            if (hits[u]) continue;
            uint32_t b = p.block_of[u];
            bool block_has_hit = false;
            for (State w : p.blocks[b])
                if (hits[w]) { block_has_hit = true; break; }
            if (!block_has_hit) continue;  // block uniformly misses or uniformly hits
            if (new_id[b] == UINT32_MAX) {
                new_id[b] = static_cast<uint32_t>(n_blocks++);
                changed = true;
            }
            p.block_of[u] = new_id[b];
        }
        if (n_blocks != p.blocks.size()) rebuild_blocks(p, n_blocks);
    }
    return changed;
}

Partition coarsest_forward_stable_partition(const Nfa& nfa) {
    Partition p;
    p.block_of.assign(nfa.n, 0);
    // initial partition: by label
    std::map<Symbol, uint32_t> by_label;
    for (std::size_t u = 0; u < nfa.n; ++u) {
        auto [it, fresh] = by_label.try_emplace(nfa.label[u],
                                                static_cast<uint32_t>(by_label.size()));
        p.block_of[u] = it->second;
    }
    rebuild_blocks(p, by_label.size());
    while (refine_once(nfa, p)) {}
    canonicalize(nfa, p);
    return p;
}

Nfa forward_stable_quotient(const Nfa& nfa) {
    Partition p = coarsest_forward_stable_partition(nfa);
    Nfa q;
    q.n = p.blocks.size();
    q.sigma = nfa.sigma;
    q.symbol_names = nfa.symbol_names;
    q.initial = p.block_of[nfa.initial];
    q.label.resize(q.n);
    q.out.assign(q.n, {});
    q.in.assign(q.n, {});
    for (uint32_t b = 0; b < q.n; ++b) q.label[b] = nfa.label[p.blocks[b].front()];
    std::vector<std::vector<State>> outs(q.n);
    for (std::size_t u = 0; u < nfa.n; ++u)
        for (State v : nfa.out[u])
            outs[p.block_of[u]].push_back(p.block_of[v]);
    for (uint32_t b = 0; b < q.n; ++b) {
        auto& a = outs[b];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        q.out[b] = a;
        for (State v : a) q.in[v].push_back(b);
    }
    validate(q);
    if (!is_forward_stable(q))
        throw InvariantError("quotient automaton is not forward-stable");
    return q;
}

bool is_forward_stable(const Nfa& nfa) {
    return coarsest_forward_stable_partition(nfa).all_singletons();
}

}  // namespace cfs
