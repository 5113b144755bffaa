#include "cfs/colex_oracle.hpp"

#include <algorithm>
#include <deque>

#include "cfs/partition.hpp"

namespace cfs {

PairGraph preceding_pair_graph(const Nfa& nfa) {
    if (!is_forward_stable(nfa))
        throw InvariantError("preceding-pair graph requires a forward-stable NFA");
    const std::size_t n = nfa.n;
    PairGraph g;
    g.n = n;
    g.succ.assign(n * n, {});
    for (State u = 0; u < n; ++u) {
        for (State v = 0; v < n; ++v) {
            if (u == v || nfa.label[u] != nfa.label[v]) continue;
            // one synchronized backward step along the shared symbol
            auto& succ = g.succ[PairGraph::index(u, v, n)];
            for (State up : nfa.in[u])
                for (State vp : nfa.in[v])
                    if (up != vp) succ.push_back(PairGraph::index(up, vp, n));
            std::sort(succ.begin(), succ.end());
            succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        }
    }
    return g;
}

bool PairGraph::precedes(State ub, State vb, State u, State v) const {
    if (u == v || ub == vb) return false;
    uint32_t target = index(ub, vb, n);
    uint32_t start = index(u, v, n);
    if (start == target) return true;
    std::vector<bool> seen(n * n, false);
    std::vector<uint32_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        uint32_t q = stack.back();
        stack.pop_back();
        for (uint32_t r : succ[q]) {
            if (r == target) return true;
            if (!seen[r]) { seen[r] = true; stack.push_back(r); }
        }
    }
    return false;
}

PartialOrderMatrix max_colex_order(const Nfa& nfa) {
    const std::size_t n = nfa.n;
    PairGraph g = preceding_pair_graph(nfa);

    // A pair is "violating" if it can reach a label-inverted pair in the
    // pair graph. One multi-source BFS over the reversed edges covers all
    // query pairs at once.
    std::vector<std::vector<uint32_t>> pred(n * n);
    for (uint32_t q = 0; q < n * n; ++q)
        for (uint32_t r : g.succ[q]) pred[r].push_back(q);

    std::vector<uint8_t> reaches_bad(n * n, 0);
    std::deque<uint32_t> queue;
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v)
            if (u != v && nfa.label[u] > nfa.label[v]) {
                uint32_t q = PairGraph::index(u, v, n);
                if (!reaches_bad[q]) { reaches_bad[q] = 1; queue.push_back(q); }
            }
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t r : pred[q])
            if (!reaches_bad[r]) { reaches_bad[r] = 1; queue.push_back(r); }
    }

    PartialOrderMatrix m;
    m.n = n;
    m.rel.assign(n * n, 0);
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v)
            m.rel[u * n + v] = (u == v) || !reaches_bad[PairGraph::index(u, v, n)];

    // order axioms; a failure here means the input was not forward-stable
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v) {
            if (u != v && m.leq(u, v) && m.leq(v, u))
                throw InvariantError("max co-lex relation is not antisymmetric");
            if (u != v && m.leq(u, v) && nfa.label[u] > nfa.label[v])
                throw InvariantError("max co-lex relation is not label-monotone");
        }
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v) {
            if (!m.leq(u, v)) continue;
            for (State w = 0; w < n; ++w)
                if (m.leq(v, w) && !m.leq(u, w))
                    throw InvariantError("max co-lex relation is not transitive");
        }
    return m;
}

TotalOrder TotalOrder::reversed() const {
    TotalOrder r;
    const std::size_t n = rank.size();
    r.rank.resize(n);
    r.by_rank.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        r.rank[u] = static_cast<uint32_t>(n + 1 - rank[u]);
        r.by_rank[r.rank[u] - 1] = static_cast<State>(u);
    }
    return r;
}

TotalOrder colex_extension(const PartialOrderMatrix& order, const Nfa& nfa) {
    const std::size_t n = order.n;
    std::vector<std::size_t> unplaced_preds(n, 0);
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v)
            if (order.lt(u, v)) ++unplaced_preds[v];

    TotalOrder total;
    total.rank.assign(n, 0);
    total.by_rank.reserve(n);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        State best = kNoState;
        for (State v = 0; v < n; ++v) {
            if (placed[v] || unplaced_preds[v] > 0) continue;
            if (best == kNoState ||
                std::pair(nfa.label[v], v) < std::pair(nfa.label[best], best))
                best = v;
        }
        if (best == kNoState)
            throw InvariantError("cycle in the order relation");
        placed[best] = true;
        total.rank[best] = static_cast<uint32_t>(step + 1);
        total.by_rank.push_back(best);
        for (State v = 0; v < n; ++v)
            if (!placed[v] && order.lt(best, v)) --unplaced_preds[v];
    }
    if (!is_colex_extension(order, total))
        throw InvariantError("computed extension violates the partial order");
    return total;
}

bool is_colex_extension(const PartialOrderMatrix& order, const TotalOrder& total) {
    const std::size_t n = order.n;
    if (total.rank.size() != n) return false;
    for (State u = 0; u < n; ++u)
        for (State v = 0; v < n; ++v)
            if (order.leq(u, v) && total.rank[u] > total.rank[v]) return false;
    return true;
}

}  // namespace cfs
