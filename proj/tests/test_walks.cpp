#include <algorithm>
#include <set>

#include "cfs/cfs_index.hpp"
#include "cfs/random_nfa.hpp"
#include "cfs/walks.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cfs;

TEST_CASE("16-node digraph: full visit trace from root 1") {
    Digraph g = fixtures::walk16();
    TotalOrder order = fixtures::identity_order(16);
    std::vector<WalkTraceEntry> trace;
    ForwardVisitOptions opts;
    opts.roots = {1};
    opts.trace = &trace;
    PredecessorMap p = forward_visit(g, order, opts);

    REQUIRE(!trace.empty());
    std::set<State> cycle(trace[0].cycle.begin(), trace[0].cycle.end());
    CHECK(cycle == std::set<State>{4, 6});
    CHECK(trace[0].left == std::vector<State>{2, 3});
    CHECK(trace[0].right == std::vector<State>{10, 12});

    for (State u = 0; u < 16; ++u) CHECK(p.p[u] == fixtures::kWalk16P[u]);
    CHECK(certify_leftmost(g, order, p));
}

TEST_CASE("13-state fixture: both walk maps certify") {
    Nfa nfa = fixtures::example13();
    BuildArtifacts a;
    build_index(nfa, &a);
    CHECK(certify_leftmost(a.inf_g, a.total, a.p_inf));
    CHECK(certify_rightmost(a.sup_g, a.total, a.p_sup));
    // p always steps along a graph edge
    for (State u = 0; u < nfa.n; ++u) {
        CHECK(a.inf_g.has_edge(a.p_inf.p[u], u));
        CHECK(a.sup_g.has_edge(a.p_sup.p[u], u));
    }
}

TEST_CASE("certifier rejects non-edges and wrong choices") {
    Digraph g = fixtures::walk16();
    TotalOrder order = fixtures::identity_order(16);
    PredecessorMap p = forward_visit(g, order);

    PredecessorMap broken = p;
    broken.p[7] = 0;                             // (0,7) is not an edge
    CHECK_FALSE(certify_leftmost(g, order, broken));

    // node 3 has in-neighbors {2, 6}; the leftmost map uses 2
    PredecessorMap wrong = p;
    REQUIRE(wrong.p[3] == 2);
    wrong.p[3] = 6;
    CHECK_FALSE(certify_leftmost(g, order, wrong));
}

TEST_CASE("visit covers every node on random graphs") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Nfa nfa = random_forward_stable_nfa(14, 34, 4, seed);
        BuildArtifacts a;
        build_index(nfa, &a);
        for (State u = 0; u < nfa.n; ++u) {
            CHECK(a.p_inf.p[u] != kNoState);
            CHECK(a.p_sup.p[u] != kNoState);
        }
    }
}

TEST_CASE("rightmost equals leftmost under reversed order") {
    Digraph g = fixtures::walk16();
    TotalOrder order = fixtures::identity_order(16);
    PredecessorMap r = rightmost_map(g, order);
    PredecessorMap l = forward_visit(g, order.reversed());
    CHECK(r.p == l.p);
    CHECK(certify_rightmost(g, order, r));
}

TEST_CASE("iterate walks the map") {
    Digraph g = fixtures::walk16();
    PredecessorMap p = forward_visit(g, fixtures::identity_order(16));
    CHECK(p.iterate(7, 0) == 7);
    CHECK(p.iterate(7, 1) == p.p[7]);
    CHECK(p.iterate(7, 2) == p.p[p.p[7]]);
}

TEST_CASE("node without in-edge rejected") {
    Digraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.sort_adjacency();
    // node 0 has an in-edge, node 1 does too; remove by building a graph
    Digraph bad(2);
    bad.add_edge(0, 1);                          // node 0 has no in-edge
    bad.sort_adjacency();
    CHECK_THROWS_AS(forward_visit(bad, fixtures::identity_order(2)), InvariantError);
}
