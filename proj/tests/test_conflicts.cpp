#include "cfs/cfs_index.hpp"
#include "cfs/conflicts.hpp"
#include "cfs/random_nfa.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cfs;

TEST_CASE("13-state fixture: depth columns") {
    Nfa nfa = fixtures::example13();
    BuildArtifacts a;
    build_index(nfa, &a);
    for (State u = 0; u < 13; ++u) {
        CHECK(a.depths.phi[u] == fixtures::kPhi[u]);
        CHECK(a.depths.gamma[u] == fixtures::kGamma[u]);
    }
}

TEST_CASE("depth 1 is always a conflict") {
    Nfa nfa = fixtures::example13();
    BuildArtifacts a;
    build_index(nfa, &a);
    for (State u = 0; u < nfa.n; ++u) {
        CHECK(is_inf_conflict(nfa, a.order, a.p_inf, u, 1));
        CHECK(is_sup_conflict(nfa, a.order, a.p_sup, u, 1));
    }
}

TEST_CASE("binary-searched depths equal linear scan") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Nfa nfa = random_forward_stable_nfa(8, 18, 3, seed);
        BuildArtifacts a;
        build_index(nfa, &a);
        std::size_t cap = 2 * nfa.n - 1;
        for (State u = 0; u < nfa.n; ++u) {
            uint32_t phi = 1, gamma = 1;
            for (std::size_t j = 1; j <= cap; ++j) {
                if (is_inf_conflict(nfa, a.order, a.p_inf, u, j))
                    phi = static_cast<uint32_t>(j);
                if (is_sup_conflict(nfa, a.order, a.p_sup, u, j))
                    gamma = static_cast<uint32_t>(j);
            }
            CHECK(a.depths.phi[u] == phi);
            CHECK(a.depths.gamma[u] == gamma);
        }
    }
}

TEST_CASE("conflict depths form a prefix range") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Nfa nfa = random_forward_stable_nfa(9, 20, 3, seed);
        BuildArtifacts a;
        build_index(nfa, &a);
        std::size_t cap = 2 * nfa.n - 1;
        for (State u = 0; u < nfa.n; ++u) {
            bool prev_inf = true, prev_sup = true;
            for (std::size_t j = 2; j <= cap; ++j) {
                bool ci = is_inf_conflict(nfa, a.order, a.p_inf, u, j);
                bool cs = is_sup_conflict(nfa, a.order, a.p_sup, u, j);
                if (ci) CHECK(prev_inf);   // no conflict may appear after a gap
                if (cs) CHECK(prev_sup);
                prev_inf = ci;
                prev_sup = cs;
            }
        }
    }
}

TEST_CASE("single state: depths are 1") {
    Nfa nfa = random_nfa(1, 1, 1, 0);
    BuildArtifacts a;
    build_index(nfa, &a);
    CHECK(a.depths.phi[0] == 1);
    CHECK(a.depths.gamma[0] == 1);
}
