#ifndef PMCUTS_GENERATE_HPP
#define PMCUTS_GENERATE_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcuts/canonical.hpp"
#include "pmcuts/connectivity.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

struct CubicFilters {
    bool bipartite = false;
    int girth_min = 3;
    bool three_connected = false;
};

namespace detail {

// BFS distance between two vertices in the partial adjacency structure
inline int partial_distance(const std::vector<std::vector<int>>& adj, int s, int t) {
    if (s == t) return 0;
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (dist[w] != -1) continue;
            if (w == t) return dist[v] + 1;
            dist[w] = dist[v] + 1;
            q.push(w);
        }
    }
    return kInfinity;
}

}  // namespace detail

// Stream one representative per isomorphism class of connected cubic graphs
// on n vertices, filtered. Depth-first completion of the lowest deficient
// vertex with two symmetry breakers (partners in increasing order; an edge to
// an untouched vertex must take the smallest untouched one), then
// canonical-form rejection of the survivors. In bipartite mode the color
// classes are fixed to {0..n/2-1} and the rest, which loses no isomorphism
// class. Return false from the sink to stop early.
template <typename Sink>
void generate_cubic(int n, const CubicFilters& filters, Sink&& sink) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("generate_cubic: n must be positive and even");
    if (n > 20)
        throw std::invalid_argument(
            "generate_cubic: bound is n <= 20; ingest an external census (graph6) for larger "
            "hosts");

    std::set<std::string> seen;
    bool stop = false;
    auto emit = [&](const MultiGraph& g) {
        if (!is_connected(g)) return;
        if (girth(g) < filters.girth_min) return;
        if (filters.bipartite && !is_bipartite(g)) return;
        if (filters.three_connected && !is_three_connected(g)) return;
        auto key = canonical_form(g);
        if (!seen.insert(std::move(key)).second) return;
        if (!sink(g)) stop = true;
    };

    if (filters.bipartite) {
        // Enumerate 3-regular biadjacency matrices in doubly lexicographic
        // (nonincreasing rows and columns) form. Every 0-1 matrix has a
        // doubly lexical ordering, so no isomorphism class is lost; the mild
        // remaining overcount is removed by the canonical-form set.
        int h = n / 2;
        if (h < 3) return;  // simple 3-regular bipartite needs 3 columns
        std::vector<std::uint32_t> rowbits(h, 0);  // column 0 = high bit
        std::vector<int> colsum(h, 0);
        auto rec = [&](auto&& self, int r, const std::vector<char>& tight_in) -> void {
            if (stop) return;
            if (r == h) {
                std::vector<std::pair<int, int>> es;
                for (int i = 0; i < h; ++i)
                    for (int j = 0; j < h; ++j)
                        if (rowbits[i] >> (h - 1 - j) & 1) es.push_back({i, h + j});
                emit(from_sorted_edge_set(n, es));
                return;
            }
            // choose 3 columns for row r
            auto choose = [&](auto&& cself, int idx, int from, std::uint32_t bits) -> void {
                if (stop) return;
                if (idx == 3) {
                    if (r > 0 && bits > rowbits[r - 1]) return;  // row lex order
                    // column capacity feasibility for the remaining rows
                    for (int j = 0; j < h; ++j) {
                        int need = 3 - colsum[j] - (bits >> (h - 1 - j) & 1);
                        if (need < 0 || need > h - 1 - r) return;
                    }
                    // incremental column lex order
                    std::vector<char> tight = tight_in;
                    for (int j = 0; j + 1 < h; ++j) {
                        int bj = bits >> (h - 1 - j) & 1, bk = bits >> (h - 2 - j) & 1;
                        if (tight[j] && bj < bk) return;
                        if (bj != bk) tight[j] = 0;
                    }
                    rowbits[r] = bits;
                    for (int j = 0; j < h; ++j) colsum[j] += bits >> (h - 1 - j) & 1;
                    self(self, r + 1, tight);
                    for (int j = 0; j < h; ++j) colsum[j] -= bits >> (h - 1 - j) & 1;
                    rowbits[r] = 0;
                    return;
                }
                for (int c = from; c <= h - (3 - idx); ++c) {
                    if (colsum[c] >= 3) continue;
                    cself(cself, idx + 1, c + 1, bits | (1u << (h - 1 - c)));
                }
            };
            choose(choose, 0, 0, 0);
        };
        rec(rec, 0, std::vector<char>(h, 1));
        return;
    }

    std::vector<std::vector<int>> adj(n);
    std::vector<int> deg(n, 0);
    auto emit_adj = [&]() {
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < n; ++v)
            for (int w : adj[v])
                if (v < w) es.push_back({v, w});
        emit(from_sorted_edge_set(n, es));
    };

    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] < 3) {
                v = u;
                break;
            }
        if (v == -1) {
            emit_adj();
            return;
        }
        // all smaller vertices are complete; a fresh component here can never
        // rejoin them
        if (v > 0 && deg[v] == 0) return;

        int min_w = adj[v].empty() ? v + 1 : std::max(v + 1, adj[v].back() + 1);
        for (int w = min_w; w < n && !stop; ++w) {
            if (deg[w] >= 3) continue;
            if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) continue;
            if (deg[w] == 0) {
                // an edge to an untouched vertex must take the smallest one
                bool smallest = true;
                for (int u = v + 1; u < w; ++u)
                    if (deg[u] == 0) smallest = false;
                if (!smallest) continue;
            }
            if (filters.girth_min > 3 &&
                detail::partial_distance(adj, v, w) < filters.girth_min - 1)
                continue;
            adj[v].push_back(w);
            adj[w].push_back(v);
            ++deg[v];
            ++deg[w];
            self(self);
            --deg[v];
            --deg[w];
            adj[v].pop_back();
            adj[w].pop_back();
        }
    };
    rec(rec);
}

inline std::vector<MultiGraph> all_cubic_graphs(int n, const CubicFilters& filters = {}) {
    std::vector<MultiGraph> out;
    generate_cubic(n, filters, [&](const MultiGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

// Stream every full orientation of g with digirth at least digirth_min,
// optionally keeping only the lexicographically least member of each orbit
// under the automorphism group. Return false from the sink to stop early.
template <typename Sink>
void orientations(const MultiGraph& g, int digirth_min, bool up_to_automorphism, Sink&& sink) {
    if (g.m() > 24)
        throw std::invalid_argument("orientations: full sweep bound is m <= 24");

    // automorphisms as edge permutations (identity first)
    std::vector<std::vector<int>> edge_perms;
    if (up_to_automorphism) {
        auto edge_id = [&](int a, int b) {
            for (int e = 0; e < g.m(); ++e) {
                auto [x, y] = g.edges[e];
                if ((x == a && y == b) || (x == b && y == a)) return e;
            }
            return -1;
        };
        // close the generator set into the full group so orbit minimality is
        // exact
        std::vector<std::vector<int>> group = automorphisms(g);
        std::sort(group.begin(), group.end());
        auto gens = group;
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> add;
            for (const auto& a : group)
                for (const auto& b : gens) {
                    std::vector<int> c(a.size());
                    for (size_t v = 0; v < a.size(); ++v) c[v] = a[b[v]];
                    if (!std::binary_search(group.begin(), group.end(), c)) add.push_back(c);
                }
            if (!add.empty()) {
                grew = true;
                group.insert(group.end(), add.begin(), add.end());
                std::sort(group.begin(), group.end());
                group.erase(std::unique(group.begin(), group.end()), group.end());
            }
        }
        for (const auto& pi : group) {
            std::vector<int> per(g.m());
            std::vector<char> flip(g.m());
            bool ok = true;
            for (int e = 0; e < g.m() && ok; ++e) {
                auto [a, b] = g.edges[e];
                int f = edge_id(pi[a], pi[b]);
                if (f < 0) ok = false;
                per[e] = f;
                flip[e] = f >= 0 && g.edges[f].a != pi[a];
            }
            if (ok) {
                // pack flips into the high half so one vector carries both
                std::vector<int> packed(2 * g.m());
                for (int e = 0; e < g.m(); ++e) {
                    packed[e] = per[e];
                    packed[g.m() + e] = flip[e];
                }
                edge_perms.push_back(std::move(packed));
            }
        }
    }

    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << g.m()); ++bits) {
        if (up_to_automorphism) {
            bool least = true;
            for (const auto& packed : edge_perms) {
                std::uint32_t image = 0;
                for (int e = 0; e < g.m(); ++e) {
                    std::uint32_t bit = bits >> e & 1;
                    if (packed[g.m() + e]) bit ^= 1;
                    image |= bit << packed[e];
                }
                if (image < bits) {
                    least = false;
                    break;
                }
            }
            if (!least) continue;
        }
        PartialOrientation o(g.m());
        for (int e = 0; e < g.m(); ++e)
            o.dir[e] = (bits >> e & 1) ? EdgeDir::Backward : EdgeDir::Forward;
        if (digirth(g, o) < digirth_min) continue;
        if (!sink(o)) return;
    }
}

inline std::vector<PartialOrientation> all_orientations(const MultiGraph& g, int digirth_min = 0,
                                                        bool up_to_automorphism = false) {
    std::vector<PartialOrientation> out;
    orientations(g, digirth_min, up_to_automorphism, [&](const PartialOrientation& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

}  // namespace pmcuts

#endif
