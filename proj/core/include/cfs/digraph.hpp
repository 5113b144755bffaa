// digraph.hpp -- plain directed graph used for the infimum/supremum graphs
// and the predecessor-walk machinery.
#pragma once

#include <algorithm>
#include <vector>

#include "cfs/types.hpp"

namespace cfs {

struct Digraph {
    std::size_t n = 0;
    std::vector<std::vector<State>> out;
    std::vector<std::vector<State>> in;

    explicit Digraph(std::size_t n_ = 0) : n(n_), out(n_), in(n_) {}

    void add_edge(State u, State v) {
        out[u].push_back(v);
        in[v].push_back(u);
    }

    void sort_adjacency() {
        for (auto& a : out) std::sort(a.begin(), a.end());
        for (auto& a : in) std::sort(a.begin(), a.end());
    }

    bool has_edge(State u, State v) const {
        return std::find(out[u].begin(), out[u].end(), v) != out[u].end();
    }

    std::size_t num_edges() const {
        std::size_t m = 0;
        for (const auto& a : out) m += a.size();
        return m;
    }
};

}  // namespace cfs
