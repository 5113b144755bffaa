#include "cfs/conflicts.hpp"

namespace cfs {

namespace {

bool conflict_at(const Nfa& nfa, const PartialOrderMatrix& order,
                 const PredecessorMap& walk, State u, std::size_t depth,
                 bool inf_side) {
    const std::size_t n = nfa.n;
    std::vector<State> w(depth);
    w[0] = u;
    for (std::size_t i = 1; i < depth; ++i) w[i] = walk.p[w[i - 1]];

    // layer[i] = states reachable as position-i nodes of a parallel walk
    std::vector<bool> layer(n, false);
    layer[u] = true;
    for (std::size_t i = 2; i <= depth; ++i) {
        std::vector<bool> nxt(n, false);
        State wi = w[i - 1];
        for (std::size_t x = 0; x < n; ++x) {
            if (!layer[x]) continue;
            for (State y : nfa.in[x])
                if (y != wi && nfa.label[y] == nfa.label[wi]) nxt[y] = true;
        }
        layer = std::move(nxt);
    }
    State wd = w[depth - 1];
    for (std::size_t x = 0; x < n; ++x) {
        if (!layer[x]) continue;
        bool ordered = inf_side ? order.lt(wd, static_cast<State>(x))
                                : order.lt(static_cast<State>(x), wd);
        if (!ordered) return true;
    }
    return false;
}

uint32_t max_conflict_depth(const Nfa& nfa, const PartialOrderMatrix& order,
                            const PredecessorMap& walk, State u, bool inf_side) {
    // conflict depths form a prefix of [1, 2n-1]; depth 1 always conflicts
    std::size_t lo = 1, hi = 2 * nfa.n - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (conflict_at(nfa, order, walk, u, mid, inf_side))
            lo = mid;
        else
            hi = mid - 1;
    }
    return static_cast<uint32_t>(lo);
}

}  // namespace

bool is_inf_conflict(const Nfa& nfa, const PartialOrderMatrix& order,
                     const PredecessorMap& walk, State u, std::size_t depth) {
    return conflict_at(nfa, order, walk, u, depth, true);
}

bool is_sup_conflict(const Nfa& nfa, const PartialOrderMatrix& order,
                     const PredecessorMap& walk, State u, std::size_t depth) {
    return conflict_at(nfa, order, walk, u, depth, false);
}

ConflictDepths conflict_depths(const Nfa& nfa, const PartialOrderMatrix& order,
                               const PredecessorMap& inf_walk,
                               const PredecessorMap& sup_walk) {
    const std::size_t n = nfa.n;
    ConflictDepths d;
    d.phi.resize(n);
    d.gamma.resize(n);
    for (State u = 0; u < n; ++u) {
        d.phi[u] = max_conflict_depth(nfa, order, inf_walk, u, true);
        d.gamma[u] = max_conflict_depth(nfa, order, sup_walk, u, false);
    }
    return d;
}

}  // namespace cfs
