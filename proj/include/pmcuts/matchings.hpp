#ifndef PMCUTS_MATCHINGS_HPP
#define PMCUTS_MATCHINGS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pmcuts/connectivity.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

// Edge-id set of a perfect matching, kept sorted ascending.
using PerfectMatching = std::vector<int>;

inline bool is_perfect_matching(const MultiGraph& g, const PerfectMatching& m) {
    std::vector<int> cover(g.n, 0);
    for (int e : m) {
        if (e < 0 || e >= g.m()) return false;
        ++cover[g.edges[e].a];
        ++cover[g.edges[e].b];
    }
    for (int c : cover)
        if (c != 1) return false;
    return true;
}

// Exhaustive, duplicate-free, in lexicographic order of the sorted edge-id
// sequences. Backtracking; a vertex left with one available edge forces it.
// The visitor may return false to stop early.
inline void enumerate_perfect_matchings(const MultiGraph& g,
                                        const std::function<bool(const PerfectMatching&)>& visit) {
    if (g.n % 2 != 0) return;  // odd order: empty stream
    auto adj = g.adjacency();
    std::vector<char> covered(g.n, 0);
    std::vector<int> chosen;
    bool stop = false;

    auto rec = [&](auto&& self, int last) -> void {
        if (stop) return;
        if (static_cast<int>(chosen.size()) * 2 == g.n) {
            if (!visit(chosen)) stop = true;
            return;
        }
        // Every uncovered vertex needs an edge with id > last and both ends
        // free; a vertex with exactly one such edge forces it.
        int forced = g.m();  // loop may not run past the smallest forced edge
        for (int v = 0; v < g.n; ++v) {
            if (covered[v]) continue;
            int avail = 0, only = -1;
            for (auto [w, e] : adj[v])
                if (e > last && !covered[w]) {
                    ++avail;
                    only = e;
                }
            if (avail == 0) return;
            if (avail == 1 && only < forced) forced = only;
        }
        for (int e = last + 1; e <= forced && e < g.m(); ++e) {
            int a = g.edges[e].a, b = g.edges[e].b;
            if (covered[a] || covered[b]) continue;
            covered[a] = covered[b] = 1;
            chosen.push_back(e);
            self(self, e);
            chosen.pop_back();
            covered[a] = covered[b] = 0;
            if (stop) return;
        }
    };
    rec(rec, -1);
}

inline std::vector<PerfectMatching> all_perfect_matchings(const MultiGraph& g) {
    std::vector<PerfectMatching> out;
    enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Independent counter: recursive deletion on the lowest uncovered vertex,
// memoized on the removed-vertex mask. Cross-checks the enumerator.
inline long long count_perfect_matchings(const MultiGraph& g) {
    if (g.n % 2 != 0) return 0;
    if (g.n > 62) throw std::invalid_argument("count_perfect_matchings: n > 62");
    auto adj = g.adjacency();
    std::unordered_map<std::uint64_t, long long> memo;
    auto rec = [&](auto&& self, std::uint64_t removed) -> long long {
        if (removed == (std::uint64_t{1} << g.n) - 1) return 1;
        auto it = memo.find(removed);
        if (it != memo.end()) return it->second;
        int v = 0;
        while (removed >> v & 1) ++v;
        long long total = 0;
        for (auto [w, e] : adj[v])
            if (!(removed >> w & 1)) total += self(self, removed | 1ULL << v | 1ULL << w);
        memo[removed] = total;
        return total;
    };
    return rec(rec, 0);
}

// Bonds of g contained in the perfect matching M, computed as the bonds of
// the multigraph obtained by contracting the 2-factor complement.
inline std::vector<Bond> bonds_within_matching(const MultiGraph& g, const PerfectMatching& m) {
    if (!is_cubic(g) || !is_connected(g))
        throw std::invalid_argument("bonds_within_matching: host must be cubic connected");
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("bonds_within_matching: not a perfect matching");
    std::vector<char> in_m(g.m(), 0);
    for (int e : m) in_m[e] = 1;
    std::vector<int> two_factor;
    for (int e = 0; e < g.m(); ++e)
        if (!in_m[e]) two_factor.push_back(e);
    ContractionResult c = contract(g, two_factor);
    std::vector<Bond> out;
    for (const Bond& hb : all_bonds(c.graph)) {
        std::vector<char> side(c.graph.n, 0);
        for (int v : hb.side) side[v] = 1;
        std::vector<char> orig_side(g.n, 0);
        for (int v = 0; v < g.n; ++v) orig_side[v] = side[c.vertex_map[v]];
        out.push_back(make_bond(g, orig_side));
    }
    return out;
}

// True iff the complementary 2-factor has at least two cycles.
inline bool matching_contains_cut(const MultiGraph& g, const PerfectMatching& m) {
    if (!is_cubic(g) || !is_connected(g))
        throw std::invalid_argument("matching_contains_cut: host must be cubic connected");
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("matching_contains_cut: not a perfect matching");
    std::vector<char> in_m(g.m(), 0);
    for (int e : m) in_m[e] = 1;
    std::vector<int> two_factor;
    for (int e = 0; e < g.m(); ++e)
        if (!in_m[e]) two_factor.push_back(e);
    return contract(g, two_factor).graph.n >= 2;
}

// A bond is directed when every cut edge is oriented consistently off one
// side; a single undirected edge disqualifies it.
inline bool bond_is_directed(const MultiGraph& g, const PartialOrientation& o, const Bond& b) {
    std::vector<char> side(g.n, 0);
    for (int v : b.side) side[v] = 1;
    bool all_out = true, all_in = true;
    for (int e : b.cut_edges) {
        if (o.dir[e] == EdgeDir::Undirected) return false;
        if (side[tail_of(g, o, e)])
            all_in = false;
        else
            all_out = false;
    }
    return all_out || all_in;
}

// First bond within M that sigma directs, in bond enumeration order.
inline std::optional<Bond> directed_cut_in_matching(const MultiGraph& g,
                                                    const PartialOrientation& o,
                                                    const PerfectMatching& m) {
    for (const Bond& b : bonds_within_matching(g, m))
        if (bond_is_directed(g, o, b)) return b;
    return std::nullopt;
}

struct MinCutInMatching {
    bool has_matching = false;
    int value = kInfinity;  // kInfinity: no matching contains a cut
};

inline MinCutInMatching min_cut_in_perfect_matching(const MultiGraph& g) {
    if (!is_cubic(g) || !is_connected(g))
        throw std::invalid_argument("min_cut_in_perfect_matching: host must be cubic connected");
    MinCutInMatching r;
    enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
        r.has_matching = true;
        for (const Bond& b : bonds_within_matching(g, m))
            r.value = std::min(r.value, static_cast<int>(b.cut_edges.size()));
        return true;
    });
    return r;
}

// ---- even / odd subgraphs --------------------------------------------------

inline std::vector<int> subset_degrees(const MultiGraph& g, const std::vector<int>& edge_set) {
    std::vector<int> deg(g.n, 0);
    for (int e : edge_set) {
        if (e < 0 || e >= g.m()) throw std::invalid_argument("unknown edge id in subgraph");
        ++deg[g.edges[e].a];
        ++deg[g.edges[e].b];
    }
    return deg;
}

inline bool is_even_subgraph(const MultiGraph& g, const std::vector<int>& edge_set) {
    for (int d : subset_degrees(g, edge_set))
        if (d % 2 != 0) return false;
    return true;
}

inline bool is_odd_subgraph(const MultiGraph& g, const std::vector<int>& edge_set) {
    for (int d : subset_degrees(g, edge_set))
        if (d % 2 != 1) return false;
    return true;
}

// ---- cycle space -----------------------------------------------------------

using EdgeSetMask = std::vector<std::uint64_t>;

inline EdgeSetMask empty_mask(int m) { return EdgeSetMask((m + 63) / 64, 0); }
inline void mask_set(EdgeSetMask& mk, int e) { mk[e / 64] |= std::uint64_t{1} << (e % 64); }
inline bool mask_get(const EdgeSetMask& mk, int e) { return mk[e / 64] >> (e % 64) & 1; }
inline void mask_xor(EdgeSetMask& a, const EdgeSetMask& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

inline std::vector<int> mask_to_edges(const EdgeSetMask& mk, int m) {
    std::vector<int> out;
    for (int e = 0; e < m; ++e)
        if (mask_get(mk, e)) out.push_back(e);
    return out;
}

// Fundamental cycles of a spanning forest; basis of the cycle space.
inline std::vector<EdgeSetMask> cycle_space_basis(const MultiGraph& g) {
    std::vector<int> parent_edge(g.n, -1), parent(g.n, -1);
    std::vector<char> seen(g.n, 0);
    std::vector<char> tree_edge(g.m(), 0);
    auto adj = g.adjacency();
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    parent_edge[w] = e;
                    tree_edge[e] = 1;
                    stack.push_back(w);
                }
        }
    }
    std::vector<EdgeSetMask> basis;
    std::vector<int> depth(g.n, 0);
    // depth via parent chain (n small)
    auto get_depth = [&](int v) {
        int d = 0;
        while (parent[v] != -1) {
            v = parent[v];
            ++d;
        }
        return d;
    };
    for (int v = 0; v < g.n; ++v) depth[v] = get_depth(v);
    for (int e = 0; e < g.m(); ++e) {
        if (tree_edge[e]) continue;
        EdgeSetMask mk = empty_mask(g.m());
        mask_set(mk, e);
        int a = g.edges[e].a, b = g.edges[e].b;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            mask_set(mk, parent_edge[a]);
            a = parent[a];
        }
        basis.push_back(mk);
    }
    return basis;
}

// D/E strong connectivity for an edge subset E of a fully oriented host.
inline bool contraction_strongly_connected(const MultiGraph& g, const PartialOrientation& o,
                                           const EdgeSetMask& even_set) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.m(); ++e)
        if (mask_get(even_set, e)) {
            int ra = find(g.edges[e].a), rb = find(g.edges[e].b);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::vector<int> label(g.n, -1);
    int nn = 0;
    for (int v = 0; v < g.n; ++v)
        if (find(v) == v) label[v] = nn++;
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < g.m(); ++e) {
        if (mask_get(even_set, e)) continue;
        int a = label[find(tail_of(g, o, e))], b = label[find(head_of(g, o, e))];
        if (a != b) arcs.push_back({a, b});
    }
    return digraph_strongly_connected(nn, arcs);
}

inline bool contraction_strongly_connected(const MultiGraph& g, const PartialOrientation& o,
                                           const std::vector<int>& edge_ids) {
    EdgeSetMask mk = empty_mask(g.m());
    for (int e : edge_ids) mask_set(mk, e);
    return contraction_strongly_connected(g, o, mk);
}

struct EvenSubgraphSearch {
    enum class Mode { Exhaustive, Sampling } mode = Mode::Exhaustive;
    int exhaustive_dim_bound = 25;
    long long samples = 100000;
    std::uint64_t seed = 1;
};

struct EvenSubgraphResult {
    enum class Kind { Witness, NoneExists, NotFound } kind;
    std::vector<int> witness;  // edge ids, when kind == Witness
};

// Search the cycle space of a fully oriented 3-edge-connected host for an
// even subgraph E with D/E strongly connected.
inline EvenSubgraphResult even_subgraph_with_strong_contraction(
    const MultiGraph& g, const PartialOrientation& o, EvenSubgraphSearch opts = {}) {
    if (!o.is_full())
        throw std::invalid_argument("even_subgraph_with_strong_contraction: orientation not full");
    if (!is_k_edge_connected(g, 3))
        throw std::invalid_argument(
            "even_subgraph_with_strong_contraction: host must be 3-edge-connected");
    auto basis = cycle_space_basis(g);
    int dim = static_cast<int>(basis.size());
    if (opts.mode == EvenSubgraphSearch::Mode::Exhaustive) {
        if (dim > opts.exhaustive_dim_bound)
            throw std::invalid_argument(
                "cycle space too large for exhaustive search; request sampling mode");
        EdgeSetMask cur = empty_mask(g.m());
        // Gray-code walk over all XOR combinations
        if (contraction_strongly_connected(g, o, cur))
            return {EvenSubgraphResult::Kind::Witness, {}};
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
            int bit = std::countr_zero(i);
            mask_xor(cur, basis[bit]);
            if (contraction_strongly_connected(g, o, cur))
                return {EvenSubgraphResult::Kind::Witness, mask_to_edges(cur, g.m())};
        }
        return {EvenSubgraphResult::Kind::NoneExists, {}};
    }
    std::mt19937_64 rng(opts.seed);
    for (long long i = 0; i < opts.samples; ++i) {
        EdgeSetMask cur = empty_mask(g.m());
        for (int b = 0; b < dim; ++b)
            if (rng() & 1) mask_xor(cur, basis[b]);
        if (contraction_strongly_connected(g, o, cur))
            return {EvenSubgraphResult::Kind::Witness, mask_to_edges(cur, g.m())};
    }
    return {EvenSubgraphResult::Kind::NotFound, {}};
}

}  // namespace pmcuts

#endif
