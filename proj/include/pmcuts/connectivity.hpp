#ifndef PMCUTS_CONNECTIVITY_HPP
#define PMCUTS_CONNECTIVITY_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pmcuts/graph.hpp"

namespace pmcuts {

namespace detail {

// Small dinic-style max flow on an integer-capacity digraph.
class MaxFlow {
  public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    void add_edge(int u, int v, int cap, int rcap = 0) {
        to_.push_back(v);
        cap_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = static_cast<int>(to_.size()) - 1;
        to_.push_back(u);
        cap_.push_back(rcap);
        next_.push_back(head_[v]);
        head_[v] = static_cast<int>(to_.size()) - 1;
    }

    int run(int s, int t, int limit = kInfinity) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter_ = head_;
            while (flow < limit) {
                int f = dfs(s, t, limit - flow);
                if (f == 0) break;
                flow += f;
            }
        }
        return flow;
    }

    // After run(): vertices reachable from s in the residual graph.
    std::vector<char> min_cut_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e != -1; e = next_[e])
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
        }
        return seen;
    }

  private:
    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        level_[s] = 0;
        std::vector<int> q{s};
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (int e = head_[v]; e != -1; e = next_[e])
                if (cap_[e] > 0 && level_[to_[e]] == -1) {
                    level_[to_[e]] = level_[v] + 1;
                    q.push_back(to_[e]);
                }
        }
        return level_[t] != -1;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& e = iter_[v]; e != -1; e = next_[e]) {
            int w = to_[e];
            if (cap_[e] > 0 && level_[w] == level_[v] + 1) {
                int d = dfs(w, t, std::min(f, cap_[e]));
                if (d > 0) {
                    cap_[e] -= d;
                    cap_[e ^ 1] += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, next_, to_, cap_, level_, iter_;
};

inline int edge_flow(const MultiGraph& g, int s, int t, int limit = kInfinity) {
    MaxFlow f(g.n);
    for (const auto& e : g.edges) f.add_edge(e.a, e.b, 1, 1);
    return f.run(s, t, limit);
}

}  // namespace detail

// Exact edge connectivity (0 for disconnected or single-vertex-free cases).
inline int edge_connectivity(const MultiGraph& g) {
    if (g.n <= 1) return kInfinity;
    if (!is_connected(g)) return 0;
    int best = kInfinity;
    // lambda(G) = min over t != 0 of maxflow(0, t)
    for (int t = 1; t < g.n; ++t) best = std::min(best, detail::edge_flow(g, 0, t, best));
    return best;
}

inline bool is_k_edge_connected(const MultiGraph& g, int k) {
    if (g.n <= 1) return true;
    if (!is_connected(g)) return false;
    for (int t = 1; t < g.n; ++t)
        if (detail::edge_flow(g, 0, t, k) < k) return false;
    return true;
}

// Exact vertex connectivity via vertex-split flows; complete graphs get n-1.
inline int vertex_connectivity(const MultiGraph& g) {
    if (g.n <= 1) return g.n == 0 ? 0 : kInfinity;
    if (!is_connected(g)) return 0;
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& e : g.edges) adj[e.a][e.b] = adj[e.b][e.a] = 1;

    auto split_flow = [&](int s, int t) {
        // in-node v, out-node v + n; internal capacity 1 except at s,t
        detail::MaxFlow f(2 * g.n);
        for (int v = 0; v < g.n; ++v)
            f.add_edge(v, v + g.n, (v == s || v == t) ? g.n : 1);
        for (const auto& e : g.edges) {
            f.add_edge(e.a + g.n, e.b, g.n);
            f.add_edge(e.b + g.n, e.a, g.n);
        }
        return f.run(s + g.n, t);
    };

    int best = g.n - 1;
    for (int s = 0; s <= best && s < g.n; ++s)
        for (int t = 0; t < g.n; ++t)
            if (s != t && !adj[s][t]) best = std::min(best, split_flow(s, t));
    return best;  // complete graph: loop body never runs, best = n-1
}

inline bool is_three_connected(const MultiGraph& g) {
    return g.n >= 4 && g.is_simple() && vertex_connectivity(g) >= 3;
}

namespace detail {

// All chordless cycles (as vertex lists) of a simple graph. A shortest cycle
// inside any induced subgraph is chordless in the host, which is what the
// cyclic-connectivity scan below relies on.
inline std::vector<std::vector<int>> chordless_cycles(const MultiGraph& g,
                                                      size_t limit = 2'000'000) {
    if (!g.is_simple()) throw std::invalid_argument("chordless_cycles: simple hosts only");
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& e : g.edges) adj[e.a][e.b] = adj[e.b][e.a] = 1;
    auto adjl = g.adjacency();
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);

    // Grow induced paths whose minimal vertex is path[0]; close back to it.
    auto extend = [&](auto&& self, int root) -> void {
        int v = path.back();
        for (auto [w, e] : adjl[v]) {
            if (w <= root || on_path[w]) continue;
            // w may touch the path only at v (and at root when closing)
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (adj[w][path[i]]) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (adj[w][root]) {
                if (path.size() >= 2) {
                    // each cycle appears in both directions; keep one
                    if (path[1] < w) {
                        cycles.push_back(path);
                        cycles.back().push_back(w);
                        if (cycles.size() > limit)
                            throw std::runtime_error("chordless cycle enumeration exploded");
                    }
                    continue;  // extending past w would leave a chord to root
                }
            }
            path.push_back(w);
            on_path[w] = 1;
            self(self, root);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int root = 0; root < g.n; ++root) {
        path = {root};
        on_path.assign(g.n, 0);
        on_path[root] = 1;
        extend(extend, root);
    }
    return cycles;
}

// min edge cut separating two vertex-disjoint contracted sets
inline int separating_cut(const MultiGraph& g, const std::vector<int>& c1,
                          const std::vector<int>& c2, int limit) {
    std::vector<int> map(g.n);
    for (int v = 0; v < g.n; ++v) map[v] = v;
    for (int v : c1) map[v] = c1[0];
    for (int v : c2) map[v] = c2[0];
    MaxFlow f(g.n);
    for (const auto& e : g.edges) {
        int a = map[e.a], b = map[e.b];
        if (a != b) f.add_edge(a, b, 1, 1);
    }
    return f.run(c1[0], c2[0], limit);
}

}  // namespace detail

// Minimum size of a cyclic cut (minimal edge cut leaving a cycle in both
// components); kInfinity when no two vertex-disjoint cycles exist.
// Defined here for cubic connected hosts only.
inline int cyclic_connectivity(const MultiGraph& g) {
    if (!is_cubic(g)) throw std::invalid_argument("cyclic_connectivity: host must be cubic");
    if (!is_connected(g)) throw std::invalid_argument("cyclic_connectivity: host must be connected");

    // Each side of a minimum cyclic cut contains a cycle that is chordless in
    // g, and the minimum cut separating two disjoint cycles refines to a bond
    // with both sides cyclic. So min over disjoint chordless-cycle pairs of
    // the separating max-flow is exact.
    auto cycles = detail::chordless_cycles(g);
    std::vector<std::vector<char>> masks;
    masks.reserve(cycles.size());
    for (auto& c : cycles) {
        std::vector<char> mk(g.n, 0);
        for (int v : c) mk[v] = 1;
        masks.push_back(std::move(mk));
    }
    // Cheap upper bound first: a chordless cycle C has |C| boundary edges in a
    // cubic host; if G - V(C) still contains a cycle, that cut refines to a
    // cyclic cut of size <= |C|. Keeps the flow limits tight below.
    int best = kInfinity;
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (static_cast<int>(cycles[i].size()) >= best) continue;
        std::vector<char> outside(g.n, 1);
        for (int v : cycles[i]) outside[v] = 0;
        auto comps = components_of_subset(g, outside);
        // a subgraph contains a cycle iff some component has >= its vertex count edges
        std::vector<int> comp_id(g.n, -1);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_id[v] = static_cast<int>(c);
        std::vector<int> comp_edges(comps.size(), 0);
        for (const auto& e : g.edges)
            if (outside[e.a] && outside[e.b] && comp_id[e.a] == comp_id[e.b])
                ++comp_edges[comp_id[e.a]];
        for (size_t c = 0; c < comps.size(); ++c)
            if (comp_edges[c] >= static_cast<int>(comps[c].size()))
                best = std::min(best, static_cast<int>(cycles[i].size()));
    }
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            bool disjoint = true;
            for (int v = 0; v < g.n && disjoint; ++v)
                if (masks[i][v] && masks[j][v]) disjoint = false;
            if (!disjoint) continue;
            int limit = best == kInfinity ? g.m() : best;
            best = std::min(best, detail::separating_cut(g, cycles[i], cycles[j], limit));
        }
    }
    return best;
}

}  // namespace pmcuts

#endif
