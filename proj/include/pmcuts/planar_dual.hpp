#ifndef PMCUTS_PLANAR_DUAL_HPP
#define PMCUTS_PLANAR_DUAL_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmcuts/connectivity.hpp"
#include "pmcuts/embedding.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/matchings.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

// Primal and dual share edge ids: dual edge e crosses primal edge e, oriented
// from the face on the left of the primal arc to the face on its right.
// "Left of the arc" is pinned by the face-tracing rule: the dart tail->head
// lies on the boundary walk of its left face.
struct DualPair {
    PlaneEmbedding primal;
    PartialOrientation primal_orientation;
    PlaneEmbedding dual;
    PartialOrientation dual_orientation;
    // arc bijection is the identity on edge ids; kept explicit so tests can
    // corrupt it as a negative control
    std::vector<int> edge_map;
};

inline DualPair directed_dual(const PlaneEmbedding& emb, const PartialOrientation& o) {
    const MultiGraph& g = emb.graph;
    if (static_cast<int>(o.dir.size()) != g.m())
        throw std::invalid_argument("directed_dual: orientation size mismatch");
    if (!is_connected(g)) throw std::invalid_argument("directed_dual: host must be connected");
    auto fs = faces(emb);

    // face id of each dart (dart = edge * 2 + side, side 0 when from == edge.a)
    std::vector<int> face_of(2 * g.m(), -1);
    auto dart_id = [&](const Dart& d) {
        return d.edge * 2 + (d.from == g.edges[d.edge].a ? 0 : 1);
    };
    for (size_t f = 0; f < fs.size(); ++f)
        for (const Dart& d : fs[f].walk) face_of[dart_id(d)] = static_cast<int>(f);

    DualPair dp;
    dp.primal = emb;
    dp.primal_orientation = o;
    dp.dual.graph.n = static_cast<int>(fs.size());
    dp.dual_orientation = PartialOrientation(g.m());
    dp.edge_map.resize(g.m());
    std::iota(dp.edge_map.begin(), dp.edge_map.end(), 0);
    for (int e = 0; e < g.m(); ++e) {
        // left face of the a->b dart first, so Forward in the dual means
        // left-of-(a->b) toward right-of-(a->b)
        int fa = face_of[e * 2], fb = face_of[e * 2 + 1];
        if (fa == fb)
            throw std::invalid_argument("directed_dual: bridge edge has no dual (loop)");
        dp.dual.graph.add_edge(fa, fb);
        if (o.dir[e] == EdgeDir::Forward) dp.dual_orientation.dir[e] = EdgeDir::Forward;
        if (o.dir[e] == EdgeDir::Backward) dp.dual_orientation.dir[e] = EdgeDir::Backward;
    }
    // dual rotation: edges in boundary-walk order around each face
    dp.dual.rotation.assign(fs.size(), {});
    for (size_t f = 0; f < fs.size(); ++f)
        for (const Dart& d : fs[f].walk) dp.dual.rotation[f].push_back(d.edge);
    return dp;
}

// Membership in the cut space: an edge set is a disjoint union of cuts iff it
// meets every cycle of a cycle basis in an even number of edges.
inline bool edge_set_is_cut_space_member(const MultiGraph& g, const std::vector<int>& edge_set) {
    std::vector<char> in(g.m(), 0);
    for (int e : edge_set) in[e] = 1;
    for (const auto& z : cycle_space_basis(g)) {
        int parity = 0;
        for (int e = 0; e < g.m(); ++e)
            if (in[e] && mask_get(z, e)) parity ^= 1;
        if (parity) return false;
    }
    return true;
}

struct DualityReport {
    bool strong_acyclic_ok = true;   // primal strongly connected <=> dual acyclic
    bool simple_3ec_ok = true;       // primal simple <=> dual 3-edge-connected
    bool cuts_even_ok = true;        // primal cut space <-> dual even sets, both ways
    bool deletion_contraction_ok = true;  // (primal minus A)* = dual / A
    std::vector<std::string> violations;
    bool all_ok() const {
        return strong_acyclic_ok && simple_3ec_ok && cuts_even_ok && deletion_contraction_ok;
    }
};

namespace detail {

// Remove an edge set from an embedding, keeping rotations; edge ids compact.
inline PlaneEmbedding delete_edges_embedded(const PlaneEmbedding& emb,
                                            const std::vector<int>& edge_set) {
    std::vector<char> drop(emb.graph.m(), 0);
    for (int e : edge_set) drop[e] = 1;
    std::vector<int> new_id(emb.graph.m(), -1);
    PlaneEmbedding out;
    out.graph.n = emb.graph.n;
    for (int e = 0; e < emb.graph.m(); ++e)
        if (!drop[e]) {
            new_id[e] = out.graph.m();
            out.graph.add_edge(emb.graph.edges[e].a, emb.graph.edges[e].b);
        }
    out.rotation.resize(emb.rotation.size());
    for (size_t v = 0; v < emb.rotation.size(); ++v)
        for (int e : emb.rotation[v])
            if (!drop[e]) out.rotation[v].push_back(new_id[e]);
    return out;
}

// brute-force multigraph isomorphism for small hosts (duals have parallels)
inline bool multigraphs_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    if (a.n > 9) throw std::invalid_argument("multigraph isomorphism guard: too many vertices");
    auto key = [](const MultiGraph& g, const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> es;
        for (const auto& e : g.edges) {
            int x = perm[e.a], y = perm[e.b];
            es.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    std::vector<int> id(b.n);
    std::iota(id.begin(), id.end(), 0);
    auto target = key(b, id);
    std::vector<int> perm = id;
    do {
        if (key(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace detail

// Verify the duality clauses on one instance. The strong/acyclic clause only
// fires when both orientations are full.
inline DualityReport duality_properties_check(const DualPair& dp, int samples = 32,
                                              unsigned seed = 1) {
    DualityReport rep;
    const MultiGraph& g = dp.primal.graph;
    const MultiGraph& h = dp.dual.graph;

    // clause 1
    if (dp.primal_orientation.is_full() && dp.dual_orientation.is_full()) {
        bool strong = is_strongly_connected(g, dp.primal_orientation);
        bool dual_acyclic = is_acyclic(h, dp.dual_orientation);
        if (strong != dual_acyclic) {
            rep.strong_acyclic_ok = false;
            rep.violations.push_back("strongly-connected/acyclic clause");
        }
    }

    // clause 2
    if (g.is_simple() != is_k_edge_connected(h, 3)) {
        rep.simple_3ec_ok = false;
        rep.violations.push_back("simple/3-edge-connected clause");
    }

    // clause 3: every primal bond maps to a dual even subgraph through the
    // arc bijection, and sampled dual even sets map back into the cut space
    auto mapped = [&](const std::vector<int>& es) {
        std::vector<int> out;
        for (int e : es) out.push_back(dp.edge_map[e]);
        return out;
    };
    for (const Bond& b : all_bonds(g))
        if (!is_even_subgraph(h, mapped(b.cut_edges))) {
            rep.cuts_even_ok = false;
            rep.violations.push_back("bond -> even subgraph clause");
            break;
        }
    auto basis = cycle_space_basis(h);
    std::mt19937 rng(seed);
    std::vector<int> inverse_map(dp.edge_map.size());
    for (size_t e = 0; e < dp.edge_map.size(); ++e) inverse_map[dp.edge_map[e]] = static_cast<int>(e);
    for (int s = 0; s < samples && rep.cuts_even_ok && !basis.empty(); ++s) {
        auto acc = empty_mask(h.m());
        for (const auto& z : basis)
            if (rng() & 1) mask_xor(acc, z);
        std::vector<int> back;
        for (int e : mask_to_edges(acc, h.m())) back.push_back(inverse_map[e]);
        if (!edge_set_is_cut_space_member(g, back)) {
            rep.cuts_even_ok = false;
            rep.violations.push_back("even subgraph -> cut space clause");
        }
    }

    // clause 4: deleting a sampled edge set from the primal equals
    // contracting its image in the dual, whenever the deletion keeps the
    // primal connected (so the dual contraction stays loop-free)
    for (int s = 0; s < samples && rep.deletion_contraction_ok; ++s) {
        std::vector<int> a_set;
        for (int e = 0; e < g.m(); ++e)
            if (rng() % 4 == 0) a_set.push_back(e);
        if (a_set.empty() || static_cast<int>(a_set.size()) >= g.m()) continue;
        auto del = detail::delete_edges_embedded(dp.primal, a_set);
        if (!is_connected(del.graph)) continue;
        // a bridge in the deleted primal would dualize to a loop, which the
        // edge model cannot hold; contraction drops those loops, so the
        // comparison is only meaningful on bridge-free samples
        if (!is_k_edge_connected(del.graph, 2)) continue;
        MultiGraph dual_of_deleted = directed_dual(del, PartialOrientation(del.graph.m())).dual.graph;
        MultiGraph contracted = contract(h, mapped(a_set)).graph;
        if (!detail::multigraphs_isomorphic(dual_of_deleted, contracted)) {
            rep.deletion_contraction_ok = false;
            rep.violations.push_back("deletion/contraction clause");
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Acyclic 2-partition (Neumann-Lara at two colors).

// Exhaustive vertex 2-coloring with incremental acyclicity pruning: assigning
// a vertex is rejected as soon as its color class contains a directed cycle.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> neumann_lara_partition(
    const MultiGraph& g, const PartialOrientation& o, int exhaustive_bound = 30) {
    if (!o.is_full()) throw std::invalid_argument("neumann_lara_partition: orientation not full");
    if (digirth(g, o) < 3)
        throw std::invalid_argument("neumann_lara_partition: digirth below 3 (not an oriented graph)");
    if (g.n > exhaustive_bound)
        throw std::invalid_argument("neumann_lara_partition: host above exhaustive bound");

    std::vector<int> color(g.n, -1);
    auto out_adj = out_adjacency(g, o);

    // does the sub-digraph induced by {w : color[w] == c} reach a directed
    // cycle from v? (any in-class cycle created by assigning v passes
    // through v, so searching from v is enough)
    auto cycle_through = [&](int v, int c) {
        std::vector<char> active(g.n, 0), done(g.n, 0);
        auto dfs = [&](auto&& self, int x) -> bool {
            active[x] = 1;
            for (int y : out_adj[x]) {
                if (color[y] != c) continue;
                if (active[y]) return true;
                if (!done[y] && self(self, y)) return true;
            }
            active[x] = 0;
            done[x] = 1;
            return false;
        };
        return dfs(dfs, v);
    };

    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        for (int c : {0, 1}) {
            color[v] = c;
            if (!cycle_through(v, c) && self(self, v + 1)) return true;
        }
        color[v] = -1;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

// The cut formulation of the same question: edges between the two acyclic
// classes, whose removal leaves the digraph acyclic.
inline std::optional<std::vector<int>> cut_complement_acyclic(const MultiGraph& g,
                                                              const PartialOrientation& o,
                                                              int exhaustive_bound = 30) {
    auto parts = neumann_lara_partition(g, o, exhaustive_bound);
    if (!parts) return std::nullopt;
    std::vector<char> in_x(g.n, 0);
    for (int v : parts->first) in_x[v] = 1;
    std::vector<int> cut;
    for (int e = 0; e < g.m(); ++e)
        if (in_x[g.edges[e].a] != in_x[g.edges[e].b]) cut.push_back(e);
    return cut;
}

struct CrosscheckReport {
    bool agree = false;
    bool primal_found = false;
    bool dual_found = false;
    std::vector<int> primal_cut;   // edges between the acyclic classes
    std::vector<int> dual_even;    // dual witness, same edge ids
    bool mapped_witness_ok = true; // primal cut verifies as a dual witness
};

// Run the acyclic-partition check on the primal and the even-subgraph /
// strong-contraction check on its dual; the two must agree.
inline CrosscheckReport nl_hochstaettler_crosscheck(const PlaneEmbedding& emb,
                                                    const PartialOrientation& o,
                                                    EvenSubgraphSearch params = {}) {
    if (!emb.graph.is_simple())
        throw std::invalid_argument("nl_hochstaettler_crosscheck: host must be simple");
    auto dp = directed_dual(emb, o);
    CrosscheckReport rep;
    auto cut = cut_complement_acyclic(emb.graph, o);
    rep.primal_found = cut.has_value();
    if (cut) rep.primal_cut = *cut;

    auto dual_res =
        even_subgraph_with_strong_contraction(dp.dual.graph, dp.dual_orientation, params);
    if (dual_res.kind == EvenSubgraphResult::Kind::NotFound)
        throw std::invalid_argument("nl_hochstaettler_crosscheck: sampling mode is inconclusive");
    rep.dual_found = dual_res.kind == EvenSubgraphResult::Kind::Witness;
    if (rep.dual_found) rep.dual_even = dual_res.witness;

    rep.agree = rep.primal_found == rep.dual_found;
    if (rep.primal_found) {
        std::vector<int> mapped;
        for (int e : rep.primal_cut) mapped.push_back(dp.edge_map[e]);
        rep.mapped_witness_ok =
            is_even_subgraph(dp.dual.graph, mapped) &&
            contraction_strongly_connected(dp.dual.graph, dp.dual_orientation, mapped);
    }
    return rep;
}

}  // namespace pmcuts

#endif
