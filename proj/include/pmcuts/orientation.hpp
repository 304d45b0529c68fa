#ifndef PMCUTS_ORIENTATION_HPP
#define PMCUTS_ORIENTATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "pmcuts/graph.hpp"

namespace pmcuts {

enum class EdgeDir : std::uint8_t {
    Undirected = 0,
    Forward = 1,   // edge.a -> edge.b
    Backward = 2,  // edge.b -> edge.a
};

inline EdgeDir reversed(EdgeDir d) {
    if (d == EdgeDir::Forward) return EdgeDir::Backward;
    if (d == EdgeDir::Backward) return EdgeDir::Forward;
    return EdgeDir::Undirected;
}

// Per-edge direction state layered over a MultiGraph; index = edge id.
struct PartialOrientation {
    std::vector<EdgeDir> dir;

    PartialOrientation() = default;
    explicit PartialOrientation(int m) : dir(m, EdgeDir::Undirected) {}

    bool is_full() const {
        for (EdgeDir d : dir)
            if (d == EdgeDir::Undirected) return false;
        return true;
    }

    int directed_count() const {
        int c = 0;
        for (EdgeDir d : dir) c += d != EdgeDir::Undirected;
        return c;
    }

    // tau extends sigma iff tau agrees with sigma on every edge sigma directs
    bool extends(const PartialOrientation& sigma) const {
        if (dir.size() != sigma.dir.size()) return false;
        for (size_t e = 0; e < dir.size(); ++e)
            if (sigma.dir[e] != EdgeDir::Undirected && sigma.dir[e] != dir[e]) return false;
        return true;
    }

    bool operator==(const PartialOrientation&) const = default;
};

inline PartialOrientation reverse_all(const PartialOrientation& o) {
    PartialOrientation r(static_cast<int>(o.dir.size()));
    for (size_t e = 0; e < o.dir.size(); ++e) r.dir[e] = reversed(o.dir[e]);
    return r;
}

// Tail/head of a directed edge; throws on undirected edges.
inline int tail_of(const MultiGraph& g, const PartialOrientation& o, int e) {
    if (o.dir[e] == EdgeDir::Undirected) throw std::logic_error("tail_of: edge undirected");
    return o.dir[e] == EdgeDir::Forward ? g.edges[e].a : g.edges[e].b;
}

inline int head_of(const MultiGraph& g, const PartialOrientation& o, int e) {
    if (o.dir[e] == EdgeDir::Undirected) throw std::logic_error("head_of: edge undirected");
    return o.dir[e] == EdgeDir::Forward ? g.edges[e].b : g.edges[e].a;
}

// Out-neighbour lists over directed edges only.
inline std::vector<std::vector<int>> out_adjacency(const MultiGraph& g,
                                                   const PartialOrientation& o) {
    std::vector<std::vector<int>> out(g.n);
    for (int e = 0; e < g.m(); ++e) {
        if (o.dir[e] == EdgeDir::Forward)
            out[g.edges[e].a].push_back(g.edges[e].b);
        else if (o.dir[e] == EdgeDir::Backward)
            out[g.edges[e].b].push_back(g.edges[e].a);
    }
    return out;
}

inline int out_degree(const MultiGraph& g, const PartialOrientation& o, int v) {
    int d = 0;
    for (int e = 0; e < g.m(); ++e)
        if (o.dir[e] != EdgeDir::Undirected && tail_of(g, o, e) == v) ++d;
    return d;
}

// True iff the directed part has no directed cycle.
inline bool is_acyclic(const MultiGraph& g, const PartialOrientation& o) {
    auto out = out_adjacency(g, o);
    std::vector<int> state(g.n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < g.n; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < out[v].size()) {
                int w = out[v][idx++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// Length of a shortest directed cycle, kInfinity if acyclic. Undirected edges
// do not contribute.
inline int digirth(const MultiGraph& g, const PartialOrientation& o) {
    auto out = out_adjacency(g, o);
    int best = kInfinity;
    for (int s = 0; s < g.n; ++s) {
        // BFS over arcs, looking for a shortest closed walk back to s.
        std::vector<int> dist(g.n, -1);
        dist[s] = 0;
        std::vector<int> frontier{s};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier) {
                if (best != kInfinity && dist[v] + 1 >= best) continue;
                for (int w : out[v]) {
                    if (w == s) best = std::min(best, dist[v] + 1);
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return best;
}

// Contract-violation guard: only meaningful for FULL orientations.
inline bool is_strongly_connected(const MultiGraph& g, const PartialOrientation& o) {
    if (!o.is_full())
        throw std::logic_error("is_strongly_connected requires a full orientation");
    if (g.n == 0) return true;
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == g.n;
    };
    auto out = out_adjacency(g, o);
    std::vector<std::vector<int>> in(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int w : out[v]) in[w].push_back(v);
    return reach_all(out) && reach_all(in);
}

// Strong connectivity after contracting the components of an arbitrary
// digraph given as arc list over nn vertices (helper for D/E checks).
inline bool digraph_strongly_connected(int nn, const std::vector<std::pair<int, int>>& arcs) {
    if (nn == 0) return true;
    std::vector<std::vector<int>> out(nn), in(nn);
    for (auto [a, b] : arcs) {
        out[a].push_back(b);
        in[b].push_back(a);
    }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(nn, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == nn;
    };
    return reach_all(out) && reach_all(in);
}

// Orientation carried through a contraction via its edge map.
inline PartialOrientation carry_orientation(const ContractionResult& c,
                                            const PartialOrientation& o) {
    PartialOrientation r(c.graph.m());
    for (size_t e = 0; e < o.dir.size(); ++e) {
        int ne = c.edge_map[e];
        if (ne >= 0) r.dir[ne] = o.dir[e];
    }
    return r;
}

}  // namespace pmcuts

#endif
