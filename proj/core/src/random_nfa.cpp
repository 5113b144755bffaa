#include "cfs/random_nfa.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cfs/cfs_index.hpp"
#include "cfs/colex_oracle.hpp"
#include "cfs/partition.hpp"

namespace cfs {

namespace {

std::string symbol_name(std::size_t code) {
    if (code == 0) return "#";
    if (code <= 26) return std::string(1, static_cast<char>('a' + code - 1));
    return "s" + std::to_string(code);
}

}  // namespace

Nfa random_nfa(std::size_t n, std::size_t m, std::size_t sigma, uint64_t seed) {
    if (n == 0) throw InvariantError("need at least one state");
    std::mt19937_64 rng(seed);
    sigma = std::max<std::size_t>(1, std::min(sigma, n));

    Nfa nfa;
    nfa.n = n;
    nfa.initial = 0;
    nfa.sigma = sigma;
    for (std::size_t c = 0; c < sigma; ++c) nfa.symbol_names.push_back(symbol_name(c));

    nfa.label.assign(n, 0);
    if (n > 1) {
        std::uniform_int_distribution<std::size_t> any_sym(1, sigma - 1);
        for (std::size_t u = 1; u < n; ++u)
            nfa.label[u] = static_cast<Symbol>(u < sigma ? u : any_sym(rng));
        std::shuffle(nfa.label.begin() + 1, nfa.label.end(), rng);
    }

    std::set<std::pair<State, State>> edges;
    edges.insert({0, 0});
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<State> parent(0, static_cast<State>(v - 1));
        edges.insert({parent(rng), static_cast<State>(v)});
    }
    const std::size_t max_edges = n * (n - 1) + 1;
    m = std::clamp(m, edges.size(), max_edges);
    std::uniform_int_distribution<State> any_src(0, static_cast<State>(n - 1));
    std::uniform_int_distribution<State> any_dst(1, static_cast<State>(n > 1 ? n - 1 : 1));
    while (edges.size() < m)
        edges.insert({any_src(rng), any_dst(rng)});

    nfa.out.assign(n, {});
    nfa.in.assign(n, {});
    for (auto [u, v] : edges) {
        nfa.out[u].push_back(v);
        nfa.in[v].push_back(u);
    }
    validate(nfa);
    return nfa;
}

Nfa random_forward_stable_nfa(std::size_t n, std::size_t m, std::size_t sigma,
                              uint64_t seed) {
    return forward_stable_quotient(random_nfa(n, m, sigma, seed));
}

std::optional<std::pair<State, State>> find_mismatch(const Nfa& nfa) {
    CfsIndex idx = build_index(nfa);
    PartialOrderMatrix oracle = max_colex_order(nfa);
    for (State u = 0; u < nfa.n; ++u)
        for (State v = 0; v < nfa.n; ++v)
            if (query(idx, u, v).leq != oracle.leq(u, v))
                return std::make_pair(u, v);
    return std::nullopt;
}

namespace {

// nfa minus state `victim`, re-quotiented; nullopt if the removal breaks a
// structural invariant (unreachable state, empty automaton, ...)
std::optional<Nfa> delete_state(const Nfa& nfa, State victim) {
    if (victim == nfa.initial || nfa.n <= 1) return std::nullopt;
    RawNfa raw;
    raw.n = nfa.n - 1;
    std::vector<State> renumber(nfa.n, kNoState);
    State next = 0;
    for (State u = 0; u < nfa.n; ++u)
        if (u != victim) renumber[u] = next++;
    raw.initial = renumber[nfa.initial];

    // drop symbols that no longer label any surviving state
    std::vector<bool> used(nfa.sigma, false);
    for (State u = 0; u < nfa.n; ++u)
        if (u != victim) used[nfa.label[u]] = true;
    std::vector<Symbol> resym(nfa.sigma, 0);
    Symbol nsym = 0;
    for (std::size_t c = 0; c < nfa.sigma; ++c)
        if (used[c]) {
            resym[c] = nsym++;
            raw.symbol_names.push_back(nfa.symbol_names[c]);
        }

    for (State u = 0; u < nfa.n; ++u)
        if (u != victim) raw.declared_label.push_back(resym[nfa.label[u]]);
    for (State u = 0; u < nfa.n; ++u) {
        if (u == victim) continue;
        for (State v : nfa.out[u]) {
            if (v == victim) continue;
            raw.edges.push_back({renumber[u], renumber[v], resym[nfa.label[v]]});
        }
    }
    try {
        Nfa shrunk = normalize(raw).nfa;
        return forward_stable_quotient(shrunk);
    } catch (const InvariantError&) {
        return std::nullopt;
    }
}

}  // namespace

Nfa minimize_counterexample(const Nfa& nfa,
                            const std::function<bool(const Nfa&)>& still_fails) {
    Nfa best = nfa;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (State u = 0; u < best.n; ++u) {
            auto cand = delete_state(best, u);
            if (cand && cand->n < best.n && still_fails(*cand)) {
                best = std::move(*cand);
                shrunk = true;
                break;
            }
        }
    }
    return best;
}

}  // namespace cfs
