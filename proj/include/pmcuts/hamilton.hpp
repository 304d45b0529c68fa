#ifndef PMCUTS_HAMILTON_HPP
#define PMCUTS_HAMILTON_HPP

#include <optional>
#include <vector>

#include "pmcuts/graph.hpp"
#include "pmcuts/matchings.hpp"

namespace pmcuts {

// Plain backtracking Hamiltonicity solver; returns the cycle as an edge-id
// set. Independent of the matching machinery, so it doubles as its oracle.
inline std::optional<std::vector<int>> hamiltonian_cycle_backtracking(const MultiGraph& g) {
    if (g.n == 0) return std::nullopt;
    if (g.n == 1) return std::nullopt;
    auto adj = g.adjacency();
    std::vector<char> visited(g.n, 0);
    std::vector<int> path_edges;
    visited[0] = 1;

    auto feasible = [&](int current) {
        // every unvisited vertex still needs two usable edge-ends; the
        // unvisited region (plus current and 0) must be connected
        std::vector<char> usable(g.n, 0);
        for (int v = 0; v < g.n; ++v) usable[v] = !visited[v];
        usable[current] = 1;
        usable[0] = 1;
        if (!subset_connected(g, usable)) return false;
        for (int v = 0; v < g.n; ++v) {
            if (visited[v]) continue;
            int free_deg = 0;
            for (auto [w, e] : adj[v])
                if (!visited[w] || w == current || w == 0) ++free_deg;
            if (free_deg < 2) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v, int count) -> bool {
        if (count == g.n) {
            for (auto [w, e] : adj[v])
                if (w == 0) {
                    path_edges.push_back(e);
                    return true;
                }
            return false;
        }
        if (!feasible(v)) return false;
        for (auto [w, e] : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            path_edges.push_back(e);
            if (self(self, w, count + 1)) return true;
            path_edges.pop_back();
            visited[w] = 0;
        }
        return false;
    };
    if (rec(rec, 0, 1)) {
        std::sort(path_edges.begin(), path_edges.end());
        return path_edges;
    }
    return std::nullopt;
}

// Hamiltonian cycle or nullopt. Cubic connected hosts go through the
// matching reformulation: a Hamiltonian cycle is exactly the complement of a
// perfect matching containing no cut.
inline std::optional<std::vector<int>> is_hamiltonian(const MultiGraph& g) {
    if (g.n < 3) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    if (is_cubic(g)) {
        std::optional<std::vector<int>> cycle;
        enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
            if (!matching_contains_cut(g, m)) {
                std::vector<char> in_m(g.m(), 0);
                for (int e : m) in_m[e] = 1;
                std::vector<int> c;
                for (int e = 0; e < g.m(); ++e)
                    if (!in_m[e]) c.push_back(e);
                cycle = std::move(c);
                return false;
            }
            return true;
        });
        return cycle;
    }
    return hamiltonian_cycle_backtracking(g);
}

inline bool edge_set_is_hamiltonian_cycle(const MultiGraph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.n) return false;
    std::vector<int> deg(g.n, 0);
    for (int e : cycle) {
        if (e < 0 || e >= g.m()) return false;
        ++deg[g.edges[e].a];
        ++deg[g.edges[e].b];
    }
    for (int d : deg)
        if (d != 2) return false;
    // connectivity of the cycle subgraph
    MultiGraph sub;
    sub.n = g.n;
    for (int e : cycle) sub.add_edge(g.edges[e].a, g.edges[e].b);
    return is_connected(sub);
}

}  // namespace pmcuts

#endif
