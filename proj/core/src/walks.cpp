#include "cfs/walks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cfs {

namespace {

enum class Color : uint8_t { White, Gray, Black };

class ForwardVisit {
public:
    ForwardVisit(const Digraph& g, const TotalOrder& order,
                 const ForwardVisitOptions& opts)
        : g_(g), order_(order), opts_(opts), n_(g.n) {
        color_.assign(n_, Color::White);
        next_.assign(n_, kNoState);
        p_.assign(n_, kNoState);
        // neighbor lists in increasing order w.r.t. the total order
        nbrs_.resize(n_);
        for (std::size_t u = 0; u < n_; ++u) {
            nbrs_[u] = g_.out[u];
            std::sort(nbrs_[u].begin(), nbrs_[u].end(),
                      [&](State a, State b) { return order_.rank[a] < order_.rank[b]; });
        }
    }

    PredecessorMap run() {
        for (std::size_t u = 0; u < n_; ++u)
            if (g_.in[u].empty())
                throw InvariantError("forward visit requires every node to have an in-edge");
        for (State r : opts_.roots)
            if (color_[r] == Color::White) dfs(r);
        // remaining roots in increasing order w.r.t. the total order, so runs
        // on a reversed order start from the largest-ranked nodes
        for (State r : order_.by_rank)
            if (color_[r] == Color::White) dfs(r);
        for (std::size_t u = 0; u < n_; ++u)
            if (p_[u] == kNoState)
                throw InvariantError("forward visit left a node without predecessor");
        return PredecessorMap{std::move(p_)};
    }

private:
    struct Frame {
        State node;
        std::size_t next_nbr = 0;
    };

    void dfs(State root) {
        std::vector<Frame> stack;
        stack.push_back({root});
        color_[root] = Color::Gray;
        while (!stack.empty()) {
            Frame& f = stack.back();
            State u = f.node;
            if (f.next_nbr == nbrs_[u].size()) {
                color_[u] = Color::Black;
                stack.pop_back();
                continue;
            }
            State v = nbrs_[u][f.next_nbr++];
            if (color_[v] == Color::White) {
                next_[u] = v;
                color_[v] = Color::Gray;
                stack.push_back({v});
            } else if (color_[v] == Color::Gray) {
                next_[u] = v;
                std::vector<State> cycle;
                State w = u;
                do {
                    cycle.push_back(w);
                    w = next_[w];
                } while (w != u);
                compute_walks(cycle);
            }
        }
    }

    bool unassigned(State v) const { return p_[v] == kNoState; }

    // nodes of G[V'] reachable from the seed set, V' = {v : p(v) = null}
    std::vector<bool> reach(const std::vector<State>& seeds) const {
        std::vector<bool> in_set(n_, false);
        std::vector<State> stack;
        for (State v : seeds)
            if (!in_set[v]) { in_set[v] = true; stack.push_back(v); }
        while (!stack.empty()) {
            State u = stack.back();
            stack.pop_back();
            for (State v : g_.out[u])
                if (unassigned(v) && !in_set[v]) {
                    in_set[v] = true;
                    stack.push_back(v);
                }
        }
        return in_set;
    }

    void compute_walks(const std::vector<State>& cycle) {
        std::vector<bool> on_cycle(n_, false);
        for (State c : cycle) {
            if (!unassigned(c))
                throw InvariantError("cycle node already carries a predecessor");
            on_cycle[c] = true;
        }

        // frontier sets: neighbors of the cycle in V', split by the side of
        // the cycle successor they fall on
        std::vector<State> left, right;
        std::vector<bool> in_left(n_, false), in_right(n_, false);
        for (State c : cycle) {
            for (State v : g_.out[c]) {
                if (!unassigned(v) || on_cycle[v]) continue;
                if (order_.rank[v] > order_.rank[next_[c]] && !in_right[v]) {
                    in_right[v] = true;
                    right.push_back(v);
                } else if (order_.rank[v] < order_.rank[next_[c]] && !in_left[v]) {
                    in_left[v] = true;
                    left.push_back(v);
                }
            }
        }
        for (State v : left)
            if (on_cycle[v])
                throw InvariantError("left subgraph edge re-enters the cycle");

        if (opts_.trace) {
            WalkTraceEntry e{cycle, left, right};
            std::sort(e.left.begin(), e.left.end());
            std::sort(e.right.begin(), e.right.end());
            opts_.trace->push_back(std::move(e));
        }

        std::vector<bool> in_gr = reach(right);   // nodes of G_R besides the cycle
        std::vector<bool> in_gl = reach(left);    // nodes of G_L besides the cycle
        for (std::size_t v = 0; v < n_; ++v)
            if (in_gl[v] && on_cycle[v])
                throw InvariantError("left subgraph reaches the cycle");

        shortest_path_sweep(cycle, on_cycle, in_right, in_gr);
        longest_path_sweep(cycle, on_cycle, in_left, in_gl);

        for (State c : cycle) p_[next_[c]] = c;

        for (State c : cycle) color_[c] = Color::Black;
        for (std::size_t v = 0; v < n_; ++v)
            if (in_gr[v] || in_gl[v]) {
                color_[v] = Color::Black;
                if (p_[v] == kNoState)
                    throw InvariantError("walk sweep missed a reachable node");
            }
    }

    // multi-source BFS over G_R from the cycle; p(v) = discoverer
    void shortest_path_sweep(const std::vector<State>& cycle,
                             const std::vector<bool>& on_cycle,
                             const std::vector<bool>& in_right,
                             const std::vector<bool>& in_gr) {
        std::vector<bool> visited(n_, false);
        std::deque<State> queue;
        for (State c : cycle) {
            visited[c] = true;
            queue.push_back(c);
        }
        while (!queue.empty()) {
            State u = queue.front();
            queue.pop_front();
            for (State v : nbrs_[u]) {
                // edges of G_R: cycle -> right frontier through an edge that
                // itself lies right of the cycle successor, or edges inside
                // the reachable-from-right subgraph of G[V'].  A frontier
                // node may sit right of one cycle node and left of another;
                // entering it through the wrong-side edge would misalign the
                // walk against walks that re-meet it on the cycle.
                bool edge_ok =
                    on_cycle[u]
                        ? (in_right[v] &&
                           order_.rank[v] > order_.rank[next_[u]])
                        : (in_gr[u] && in_gr[v]);
                if (!edge_ok || visited[v]) continue;
                visited[v] = true;
                p_[v] = u;
                queue.push_back(v);
            }
        }
    }

    // longest-path distances by topological order, then a BFS that only
    // advances along distance-increasing edges; overrides p on nodes shared
    // with G_R
    void longest_path_sweep(const std::vector<State>& cycle,
                            const std::vector<bool>& on_cycle,
                            const std::vector<bool>& in_left,
                            const std::vector<bool>& in_gl) {
        auto edge_in_gl = [&](State u, State v) {
            // cycle edges must witness the left side themselves; see the
            // matching comment in shortest_path_sweep
            return on_cycle[u]
                       ? (in_left[v] && order_.rank[v] < order_.rank[next_[u]])
                       : (in_gl[u] && in_gl[v]);
        };

        // Kahn over G_L (cycle nodes are sources: no G_L edge enters them)
        std::vector<uint32_t> indeg(n_, 0);
        std::vector<State> nodes = cycle;
        for (std::size_t v = 0; v < n_; ++v)
            if (in_gl[v]) nodes.push_back(static_cast<State>(v));
        for (State u : nodes)
            for (State v : g_.out[u])
                if (edge_in_gl(u, v)) ++indeg[v];
        std::vector<int64_t> dist(n_, -1);
        std::vector<State> ready;
        for (State u : nodes)
            if (indeg[u] == 0) {
                ready.push_back(u);
                dist[u] = on_cycle[u] ? 0 : dist[u];
            }
        for (State c : cycle) dist[c] = 0;
        std::size_t processed = 0;
        std::vector<State> topo;
        while (!ready.empty()) {
            State u = ready.back();
            ready.pop_back();
            topo.push_back(u);
            ++processed;
            for (State v : g_.out[u])
                if (edge_in_gl(u, v) && --indeg[v] == 0) ready.push_back(v);
        }
        if (processed != nodes.size())
            throw InvariantError("left subgraph contains a cycle");
        for (State u : topo)
            for (State v : g_.out[u])
                if (edge_in_gl(u, v) && dist[u] >= 0)
                    dist[v] = std::max(dist[v], dist[u] + 1);

        std::vector<bool> visited(n_, false);
        std::deque<State> queue;
        for (State c : cycle) {
            visited[c] = true;
            queue.push_back(c);
        }
        while (!queue.empty()) {
            State u = queue.front();
            queue.pop_front();
            for (State v : nbrs_[u]) {
                if (!edge_in_gl(u, v) || visited[v]) continue;
                if (dist[v] != dist[u] + 1) continue;
                visited[v] = true;
                p_[v] = u;
                queue.push_back(v);
            }
        }
    }

    const Digraph& g_;
    const TotalOrder& order_;
    const ForwardVisitOptions& opts_;
    std::size_t n_;
    std::vector<Color> color_;
    std::vector<State> next_;
    std::vector<State> p_;
    std::vector<std::vector<State>> nbrs_;
};

}  // namespace

PredecessorMap forward_visit(const Digraph& g, const TotalOrder& order,
                             const ForwardVisitOptions& opts) {
    return ForwardVisit(g, order, opts).run();
}

PredecessorMap rightmost_map(const Digraph& g, const TotalOrder& order,
                             const ForwardVisitOptions& opts) {
    TotalOrder rev = order.reversed();
    return forward_visit(g, rev, opts);
}

namespace {

bool certify(const Digraph& g, const TotalOrder& order, const PredecessorMap& pm,
             bool leftmost) {
    const std::size_t n = g.n;
    if (pm.p.size() != n) return false;
    for (std::size_t u = 0; u < n; ++u)
        if (pm.p[u] == kNoState || !g.has_edge(pm.p[u], u)) return false;

    const std::size_t depth = 2 * n;
    for (State start = 0; start < n; ++start) {
        // walk[j] = p^j(start); walk positions are 1-based in the defining
        // property, so walk[j-1] is the node at position j
        std::vector<State> walk(depth + 1);
        walk[0] = start;
        for (std::size_t j = 1; j <= depth; ++j) walk[j] = pm.p[walk[j - 1]];

        // frontier[x]: x can be the position-(j-1) node of some walk to start
        std::vector<bool> frontier(n, false);
        frontier[start] = true;
        for (std::size_t j = 2; j <= depth; ++j) {
            // candidates for position j-1 among walks meeting walk at position j
            State mine = walk[j - 2];
            for (State x : g.out[walk[j - 1]]) {
                if (!frontier[x]) continue;
                bool worse = leftmost ? order.rank[x] < order.rank[mine]
                                      : order.rank[x] > order.rank[mine];
                if (worse) return false;
            }
            // advance: possible position-j nodes are in-neighbors of
            // possible position-(j-1) nodes
            std::vector<bool> nxt(n, false);
            for (std::size_t x = 0; x < n; ++x)
                if (frontier[x])
                    for (State y : g.in[x]) nxt[y] = true;
            frontier = std::move(nxt);
        }
    }
    return true;
}

}  // namespace

bool certify_leftmost(const Digraph& g, const TotalOrder& order,
                      const PredecessorMap& p) {
    return certify(g, order, p, true);
}

bool certify_rightmost(const Digraph& g, const TotalOrder& order,
                       const PredecessorMap& p) {
    return certify(g, order, p, false);
}

}  // namespace cfs
