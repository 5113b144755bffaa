// Acceptance gate: each numbered criterion prints one pass/fail line; the
// process exits non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "cfs/cfs_index.hpp"
#include "cfs/conflicts.hpp"
#include "cfs/random_nfa.hpp"
#include "fixtures.hpp"

using namespace cfs;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, bool ok, const char* what) {
    std::printf("criterion %d: %s - %s\n", number, ok ? "pass" : "FAIL", what);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// criterion 1: the 13-state example reproduces all inf/sup prefixes and
// both depth columns in under a second
void criterion_prefixes_and_depths() {
    auto t0 = Clock::now();
    Nfa nfa = fixtures::example13();
    BuildArtifacts a;
    build_index(nfa, &a);
    bool ok = true;
    for (State u = 0; u < 13; ++u) {
        ok &= a.inf.prefix[u].symbols ==
              fixtures::expand(fixtures::kInfStrings[u], 25).symbols;
        ok &= a.sup.prefix[u].symbols ==
              fixtures::expand(fixtures::kSupStrings[u], 25).symbols;
        ok &= a.depths.phi[u] == fixtures::kPhi[u];
        ok &= a.depths.gamma[u] == fixtures::kGamma[u];
    }
    ok &= seconds_since(t0) < 1.0;
    report(1, ok, "13-state example: 13 inf/sup prefixes and depth columns, < 1 s");
}

// criterion 2: the four worked query cases with exact case tags
void criterion_query_cases() {
    CfsIndex idx = build_index(fixtures::example13());
    auto is = [&](State u, State v, bool leq, char rule) {
        QueryTrace t = query(idx, u, v);
        return t.leq == leq && t.rule == rule;
    };
    bool ok = is(2, 4, true, 'c') && is(1, 5, false, 'd') && is(3, 6, true, 'f') &&
              is(9, 10, false, 'e');
    report(2, ok, "13-state example: query cases c, d, f, e with exact tags");
}

// criterion 3: forward visit of the 16-node digraph from root 1
void criterion_forward_visit() {
    auto t0 = Clock::now();
    Digraph g = fixtures::walk16();
    TotalOrder order = fixtures::identity_order(16);
    std::vector<WalkTraceEntry> trace;
    ForwardVisitOptions opts;
    opts.roots = {1};
    opts.trace = &trace;
    PredecessorMap p = forward_visit(g, order, opts);
    bool ok = !trace.empty();
    if (ok) {
        std::set<State> cycle(trace[0].cycle.begin(), trace[0].cycle.end());
        ok &= cycle == std::set<State>{4, 6};
        ok &= trace[0].left == std::vector<State>{2, 3};
        ok &= trace[0].right == std::vector<State>{10, 12};
    }
    for (State u = 0; u < 16; ++u) ok &= p.p[u] == fixtures::kWalk16P[u];
    ok &= seconds_since(t0) < 0.1;
    report(3, ok, "16-node digraph: first cycle, left/right sets, all 16 p-values, < 0.1 s");
}

struct Corpus {
    std::vector<Nfa> instances;
};

Corpus make_corpus(std::size_t count) {
    Corpus c;
    std::mt19937_64 rng(20240815);
    c.instances.push_back(random_nfa(1, 1, 1, 0));
    c.instances.push_back(fixtures::example13());
    while (c.instances.size() < count) {
        std::uniform_int_distribution<std::size_t> pick_n(2, 30);
        std::size_t n = pick_n(rng);
        std::uniform_int_distribution<std::size_t> pick_sigma(
            2, std::max<std::size_t>(2, std::min<std::size_t>(n, 5)));
        std::size_t sigma = pick_sigma(rng);
        std::uniform_int_distribution<std::size_t> pick_m(n, 3 * n);
        c.instances.push_back(random_forward_stable_nfa(n, pick_m(rng), sigma, rng()));
    }
    return c;
}

// criteria 4-9 share one pass over the corpus
void corpus_criteria() {
    auto t0 = Clock::now();
    Corpus corpus = make_corpus(502);   // 500 random + two fixed instances

    bool oracle_ok = true;          // 4
    bool words_ok = true;           // 5
    bool steps_ok = true;           // 6
    bool certify_ok = true;         // 7 (certificates pass on correct maps)
    std::size_t faults_detected = 0;
    bool bound_ok = true;           // 8
    bool closure_ok = true;         // 9

    std::mt19937_64 fault_rng(7);
    for (const Nfa& nfa : corpus.instances) {
        BuildArtifacts a;
        CfsIndex idx = build_index(nfa, &a);
        PartialOrderMatrix m = max_colex_order(nfa);
        const uint32_t cap = static_cast<uint32_t>(2 * nfa.n - 1);

        for (State u = 0; u < nfa.n; ++u)
            for (State v = 0; v < nfa.n; ++v) {
                QueryTrace t = query(idx, u, v);
                oracle_ok &= t.leq == m.leq(u, v);
                steps_ok &= t.steps <= cap;
            }

        words_ok &= serialized_words(idx) == 6 * nfa.n + 2;
        words_ok &= serialize(idx).size() == (6 * nfa.n + 2) * 8;

        certify_ok &= certify_leftmost(a.inf_g, a.total, a.p_inf);
        certify_ok &= certify_rightmost(a.sup_g, a.total, a.p_sup);
        // single-edge perturbations; only those the certifier flags count
        for (int attempt = 0; attempt < 4 && faults_detected < 40; ++attempt) {
            std::uniform_int_distribution<State> pick(0, static_cast<State>(nfa.n - 1));
            State v = pick(fault_rng);
            const auto& in = a.inf_g.in[v];
            if (in.size() < 2) continue;
            PredecessorMap broken = a.p_inf;
            for (State w : in)
                if (w != broken.p[v]) {
                    broken.p[v] = w;
                    break;
                }
            if (!certify_leftmost(a.inf_g, a.total, broken)) ++faults_detected;
        }

        // equal short prefixes must agree on the 4n expansion
        PrefixSet inf4 = extreme_prefixes(nfa, Extreme::Inf, 4 * nfa.n);
        PrefixSet sup4 = extreme_prefixes(nfa, Extreme::Sup, 4 * nfa.n);
        for (State u = 0; u < nfa.n; ++u)
            for (State v = 0; v < nfa.n; ++v) {
                if (a.inf.prefix[u].symbols == a.inf.prefix[v].symbols)
                    bound_ok &= inf4.prefix[u].symbols == inf4.prefix[v].symbols;
                if (a.sup.prefix[u].symbols == a.sup.prefix[v].symbols)
                    bound_ok &= sup4.prefix[u].symbols == sup4.prefix[v].symbols;
                if (a.sup.prefix[u].symbols == a.inf.prefix[v].symbols)
                    bound_ok &= sup4.prefix[u].symbols == inf4.prefix[v].symbols;
            }

        // incremental layered scan: conflict truth must be a prefix of depths
        for (State u = 0; u < nfa.n; ++u) {
            for (bool inf_side : {true, false}) {
                const PredecessorMap& pm = inf_side ? a.p_inf : a.p_sup;
                uint32_t stored = inf_side ? idx.phi[u] : idx.gamma[u];
                std::vector<bool> layer(nfa.n, false);
                layer[u] = true;
                State wj = u;
                uint32_t last_true = 1;
                bool gap = false;
                for (uint32_t j = 2; j <= cap; ++j) {
                    State wj_next = pm.p[wj];
                    std::vector<bool> nxt(nfa.n, false);
                    bool any = false;
                    for (State x = 0; x < nfa.n; ++x) {
                        if (!layer[x]) continue;
                        for (State y : nfa.in[x])
                            if (y != wj_next && nfa.label[y] == nfa.label[wj_next]) {
                                nxt[y] = true;
                                any = true;
                            }
                    }
                    layer = std::move(nxt);
                    wj = wj_next;
                    if (!any) break;
                    bool conflict = false;
                    for (State x = 0; x < nfa.n && !conflict; ++x) {
                        if (!layer[x]) continue;
                        conflict = inf_side ? !m.lt(wj, x) : !m.lt(x, wj);
                    }
                    if (conflict) {
                        if (j != last_true + 1) gap = true;
                        last_true = j;
                    }
                }
                closure_ok &= !gap;
                closure_ok &= last_true == stored;
            }
        }
    }

    double elapsed = seconds_since(t0);
    report(4, oracle_ok && elapsed < 300.0,
           "500 random forward-stable NFAs (n <= 30): all pairs match the oracle, < 5 min");
    report(5, words_ok, "serialized word count is 6n+2 on every instance");
    report(6, steps_ok, "query steps never exceed 2n-1");
    report(7, certify_ok && faults_detected >= 20,
           "walk certificates pass, and >= 20 injected faults are caught");
    report(8, bound_ok, "prefixes equal at 2n-1 symbols stay equal at 4n");
    report(9, closure_ok,
           "conflict depths form a prefix range matching the stored values");
}

}  // namespace

int main() {
    criterion_prefixes_and_depths();
    criterion_query_cases();
    criterion_forward_visit();
    corpus_criteria();
    return failures == 0 ? 0 : 1;
}
