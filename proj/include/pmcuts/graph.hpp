#ifndef PMCUTS_GRAPH_HPP
#define PMCUTS_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmcuts {

// Sentinel for "no finite value" (girth of a forest, cyclic connectivity of K4, ...).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Undirected multigraph with stable, dense edge ids 0..m-1.
// Parallel edges are allowed; loops never survive construction (contraction
// drops them). Treat instances as immutable once built.
struct MultiGraph {
    struct Edge {
        int a = 0;
        int b = 0;
    };

    int n = 0;
    std::vector<Edge> edges;

    MultiGraph() = default;
    MultiGraph(int n_, std::vector<std::pair<int, int>> edge_list) : n(n_) {
        edges.reserve(edge_list.size());
        for (auto [a, b] : edge_list) add_edge(a, b);
    }

    int m() const { return static_cast<int>(edges.size()); }

    void add_edge(int a, int b) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("loops are not representable");
        edges.push_back({a, b});
    }

    // Endpoint of edge e that is not v.
    int other(int e, int v) const {
        const Edge& ed = edges[e];
        return ed.a == v ? ed.b : ed.a;
    }

    bool incident(int e, int v) const { return edges[e].a == v || edges[e].b == v; }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (const Edge& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        return deg;
    }

    // adjacency as (neighbor, edge-id) lists, in edge-id order
    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e = 0; e < m(); ++e) {
            adj[edges[e].a].push_back({edges[e].b, e});
            adj[edges[e].b].push_back({edges[e].a, e});
        }
        return adj;
    }

    bool has_parallel_edges() const {
        std::vector<std::pair<int, int>> norm;
        norm.reserve(edges.size());
        for (const Edge& e : edges) norm.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
        std::sort(norm.begin(), norm.end());
        return std::adjacent_find(norm.begin(), norm.end()) != norm.end();
    }

    bool is_simple() const { return !has_parallel_edges(); }

    bool operator==(const MultiGraph& o) const {
        if (n != o.n || edges.size() != o.edges.size()) return false;
        for (size_t i = 0; i < edges.size(); ++i) {
            auto key = [](const Edge& e) {
                return std::pair{std::min(e.a, e.b), std::max(e.a, e.b)};
            };
            if (key(edges[i]) != key(o.edges[i])) return false;
        }
        return true;
    }
};

// Simple graph with edge-ids assigned lexicographically by (min,max) endpoint,
// the order every parser and writer in this project agrees on.
inline MultiGraph from_sorted_edge_set(int n, std::vector<std::pair<int, int>> pairs) {
    for (auto& [a, b] : pairs)
        if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    MultiGraph g;
    g.n = n;
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
}

inline bool is_connected(const MultiGraph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    auto adj = g.adjacency();
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

// Connected components of the subgraph spanned by a vertex subset.
inline std::vector<std::vector<int>> components_of_subset(const MultiGraph& g,
                                                          const std::vector<char>& in_set) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n; ++s) {
        if (!in_set[s] || seen[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (auto [w, e] : adj[v])
                if (in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

inline bool subset_connected(const MultiGraph& g, const std::vector<char>& in_set) {
    int total = 0;
    for (char c : in_set) total += c;
    if (total == 0) return false;
    return static_cast<int>(components_of_subset(g, in_set)[0].size()) == total;
}

inline bool is_cubic(const MultiGraph& g) {
    auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
}

// Bipartition as a 0/1 coloring, or nullopt.
inline std::optional<std::vector<int>> is_bipartite(const MultiGraph& g) {
    std::vector<int> color(g.n, -1);
    auto adj = g.adjacency();
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// Length of a shortest cycle; kInfinity for forests. A parallel pair is a
// 2-cycle.
inline int girth(const MultiGraph& g) {
    auto adj = g.adjacency();
    int best = kInfinity;
    // BFS from every vertex; a non-tree edge closes a cycle.
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), par_edge(g.n, -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (best != kInfinity && 2 * dist[v] >= best) continue;
            for (auto [w, e] : adj[v]) {
                if (e == par_edge[v]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par_edge[w] = e;
                    q.push(w);
                } else if (dist[w] >= dist[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

struct ContractionResult {
    MultiGraph graph;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> edge_map;    // old edge -> new edge, -1 if contracted or loop-dropped
};

// Contract an edge set: merge endpoints, keep parallel edges, drop loops.
inline ContractionResult contract(const MultiGraph& g, const std::vector<int>& edge_ids) {
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e : edge_ids) {
        if (e < 0 || e >= g.m()) throw std::invalid_argument("contract: unknown edge id");
        int ra = find(g.edges[e].a), rb = find(g.edges[e].b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> vmap(g.n, -1);
    int nn = 0;
    for (int v = 0; v < g.n; ++v)
        if (find(v) == v) vmap[v] = nn++;
    for (int v = 0; v < g.n; ++v) vmap[v] = vmap[find(v)];

    std::vector<char> contracted(g.m(), 0);
    for (int e : edge_ids) contracted[e] = 1;

    ContractionResult r;
    r.graph.n = nn;
    r.vertex_map = vmap;
    r.edge_map.assign(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
        if (contracted[e]) continue;
        int a = vmap[g.edges[e].a], b = vmap[g.edges[e].b];
        if (a == b) continue;  // loop: dropped
        r.edge_map[e] = r.graph.m();
        r.graph.add_edge(a, b);
    }
    return r;
}

// A minimal edge cut delta(S): both sides induce connected subgraphs.
struct Bond {
    std::vector<int> side;       // vertices of S, sorted
    std::vector<int> cut_edges;  // edge-ids of delta(S), sorted
};

inline std::vector<int> boundary_edges(const MultiGraph& g, const std::vector<char>& in_set) {
    std::vector<int> cut;
    for (int e = 0; e < g.m(); ++e)
        if (in_set[g.edges[e].a] != in_set[g.edges[e].b]) cut.push_back(e);
    return cut;
}

inline bool is_bond(const MultiGraph& g, const std::vector<char>& in_set) {
    int total = 0;
    for (char c : in_set) total += c;
    if (total == 0 || total == g.n) return false;
    std::vector<char> comp(g.n);
    for (int v = 0; v < g.n; ++v) comp[v] = !in_set[v];
    return subset_connected(g, in_set) && subset_connected(g, comp);
}

inline Bond make_bond(const MultiGraph& g, const std::vector<char>& in_set) {
    Bond b;
    for (int v = 0; v < g.n; ++v)
        if (in_set[v]) b.side.push_back(v);
    b.cut_edges = boundary_edges(g, in_set);
    return b;
}

// All bonds of a connected multigraph. Subset scan; intended for small hosts
// (contracted 2-factors and the like).
inline std::vector<Bond> all_bonds(const MultiGraph& g, int max_vertices_guard = 26) {
    if (g.n > max_vertices_guard)
        throw std::invalid_argument("all_bonds: host too large for subset scan");
    std::vector<Bond> bonds;
    if (g.n < 2) return bonds;
    // Fix vertex 0 on the complement side so each bond appears once.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (g.n - 1)); ++mask) {
        std::vector<char> in_set(g.n, 0);
        for (int v = 1; v < g.n; ++v)
            if (mask >> (v - 1) & 1) in_set[v] = 1;
        if (is_bond(g, in_set)) bonds.push_back(make_bond(g, in_set));
    }
    return bonds;
}

}  // namespace pmcuts

#endif
