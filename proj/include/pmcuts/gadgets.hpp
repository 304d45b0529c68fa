#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pmcuts/connectivity.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/matchings.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

// An oriented graph together with its orientation overlay; the basic currency
// of the construction pipeline.
struct OrientedGraph {
    MultiGraph graph;
    PartialOrientation orientation;
};

inline bool every_matching_has_directed_cut(const MultiGraph& g, const PartialOrientation& o) {
    bool ok = true;
    enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
        if (!directed_cut_in_matching(g, o, m)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Vertex split: u is replaced by three degree-1 pendants, one per former edge.

struct SplitGadget {
    MultiGraph graph;  // |V(host)| + 2 vertices; u keeps only its edge to v
    PartialOrientation orientation;
    int pendant_v = -1;  // the pendant on the (u,v) arc (reuses u's vertex id)
    int pendant_1 = -1, pendant_2 = -1;  // pendants toward u's two other neighbors
    MultiGraph host;
    PartialOrientation host_orientation;
    int host_u = -1, host_v = -1;
};

inline SplitGadget split_vertex(const MultiGraph& d, const PartialOrientation& o, int u, int v) {
    if (!is_cubic(d) || !is_three_connected(d))
        throw std::invalid_argument("split_vertex: host must be cubic 3-connected");
    int uv_edge = -1;
    for (int e = 0; e < d.m(); ++e) {
        auto [a, b] = std::pair{d.edges[e].a, d.edges[e].b};
        if ((a == u && b == v) || (a == v && b == u)) uv_edge = e;
    }
    if (uv_edge < 0 || tail_of(d, o, uv_edge) != u || head_of(d, o, uv_edge) != v)
        throw std::invalid_argument("split_vertex: (u,v) is not an arc of the host");
    for (int e = 0; e < d.m(); ++e) {
        if (e == uv_edge) continue;
        if ((d.edges[e].a == v || d.edges[e].b == v) && o.dir[e] != EdgeDir::Undirected)
            throw std::invalid_argument("split_vertex: v's other edges must be undirected");
    }

    SplitGadget sg;
    sg.host = d;
    sg.host_orientation = o;
    sg.host_u = u;
    sg.host_v = v;
    sg.pendant_v = u;
    sg.pendant_1 = d.n;
    sg.pendant_2 = d.n + 1;
    sg.graph.n = d.n + 2;
    sg.orientation = o;
    int next_pendant = d.n;
    // u's non-(u,v) edges move to fresh pendant vertices in edge-id order; the
    // a/b roles of every edge are preserved so the orientation carries as-is
    for (int e = 0; e < d.m(); ++e) {
        int a = d.edges[e].a, b = d.edges[e].b;
        if (e != uv_edge) {
            if (a == u) a = next_pendant++;
            if (b == u) b = next_pendant++;
        }
        sg.graph.add_edge(a, b);
    }
    return sg;
}

// Number of host vertices surviving as internal (degree-3) vertices of D'.
inline int split_internal_count(const SplitGadget& sg) { return sg.host.n - 1; }

// ---------------------------------------------------------------------------
// Hat construction: two copies of D' (second arc-reversed) joined by a
// 2-regular wiring on the six pendants.

// Pendant slots 0..5 = copy1 {pendant_v, pendant_1, pendant_2}, then copy2.
struct HatWiring {
    std::vector<std::pair<int, int>> edges;  // six slot pairs, 2-regular
    std::vector<EdgeDir> dir;                // per wiring edge, relative to pair order
};

inline OrientedGraph hat_construction(const SplitGadget& sg, const HatWiring& wiring) {
    const int np = sg.graph.n;
    std::array<int, 6> slot = {sg.pendant_v, sg.pendant_1, sg.pendant_2,
                               np + sg.pendant_v, np + sg.pendant_1, np + sg.pendant_2};
    // in the hat all three pendant arcs of the first copy point into the
    // copy, like the split arc itself; the second copy is arc-reversed
    PartialOrientation base = sg.orientation;
    for (int e = 0; e < sg.graph.m(); ++e) {
        int a = sg.graph.edges[e].a, b = sg.graph.edges[e].b;
        if (a == sg.pendant_1 || a == sg.pendant_2) base.dir[e] = EdgeDir::Forward;
        if (b == sg.pendant_1 || b == sg.pendant_2) base.dir[e] = EdgeDir::Backward;
    }
    OrientedGraph out;
    out.graph.n = 2 * np;
    out.orientation = PartialOrientation(2 * sg.graph.m() + 6);
    for (int e = 0; e < sg.graph.m(); ++e) {
        out.graph.add_edge(sg.graph.edges[e].a, sg.graph.edges[e].b);
        out.orientation.dir[e] = base.dir[e];
    }
    for (int e = 0; e < sg.graph.m(); ++e) {
        out.graph.add_edge(np + sg.graph.edges[e].a, np + sg.graph.edges[e].b);
        out.orientation.dir[sg.graph.m() + e] = reversed(base.dir[e]);
    }
    if (wiring.edges.size() != 6 || wiring.dir.size() != 6)
        throw std::invalid_argument("hat_construction: wiring must have six edges");
    std::array<int, 6> deg{};
    std::vector<std::pair<int, int>> used;
    for (int i = 0; i < 6; ++i) {
        auto [s, t] = wiring.edges[i];
        if (s < 0 || s >= 6 || t < 0 || t >= 6 || s == t)
            throw std::invalid_argument("hat_construction: bad wiring slot");
        ++deg[s], ++deg[t];
        auto key = std::minmax(s, t);
        if (std::find(used.begin(), used.end(), std::pair{key.first, key.second}) != used.end())
            throw std::invalid_argument("hat_construction: wiring collides (parallel edge)");
        used.push_back({key.first, key.second});
        out.graph.add_edge(slot[s], slot[t]);
        out.orientation.dir[2 * sg.graph.m() + i] = wiring.dir[i];
    }
    for (int i = 0; i < 6; ++i)
        if (deg[i] != 2) throw std::invalid_argument("hat_construction: wiring not 2-regular");
    return out;
}

// Search the 2-regular wiring patterns (and per-edge orientation states) for
// one whose hat graph is simple, cubic, 3-connected, and has every perfect
// matching containing a directed cut.  First hit in canonical order; none if
// the family contains no such graph (which is the verified outcome for the
// Petersen-derived gadget: no wiring admits any qualifying orientation).
inline std::optional<HatWiring> reconstruct_hat_wiring(const SplitGadget& sg) {
    // all simple 2-regular graphs on six labelled slots
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) pairs.push_back({a, b});
    std::vector<std::vector<std::pair<int, int>>> patterns;
    std::vector<int> pick;
    auto gen = [&](auto&& self, int from, std::array<int, 6> deg) -> void {
        if (pick.size() == 6) {
            for (int v = 0; v < 6; ++v)
                if (deg[v] != 2) return;
            std::vector<std::pair<int, int>> p;
            for (int i : pick) p.push_back(pairs[i]);
            patterns.push_back(p);
            return;
        }
        for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
            auto [a, b] = pairs[i];
            if (deg[a] >= 2 || deg[b] >= 2) continue;
            ++deg[a], ++deg[b];
            pick.push_back(i);
            self(self, i + 1, deg);
            pick.pop_back();
            --deg[a], --deg[b];
        }
    };
    gen(gen, 0, {});

    const std::array<EdgeDir, 3> states = {EdgeDir::Undirected, EdgeDir::Forward,
                                           EdgeDir::Backward};
    for (const auto& pattern : patterns) {
        HatWiring w;
        w.edges = pattern;
        w.dir.assign(6, EdgeDir::Undirected);
        std::array<int, 6> s{};
        for (;;) {
            for (int i = 0; i < 6; ++i) w.dir[i] = states[s[i]];
            auto hat = hat_construction(sg, w);
            if (!hat.graph.has_parallel_edges() && is_cubic(hat.graph) &&
                is_three_connected(hat.graph) &&
                every_matching_has_directed_cut(hat.graph, hat.orientation))
                return w;
            int i = 5;
            while (i >= 0 && s[i] == 2) s[i--] = 0;
            if (i < 0) break;
            ++s[i];
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tilde construction: three copies of D' grafted onto the cube graph.

struct TildeResult {
    MultiGraph graph;
    PartialOrientation orientation;
    int y = 0;                                // the identified vertex u_1=u_2=u_3
    std::array<int, 3> far_vertices{};        // the three unreplaced non-antipodal cube vertices
    int antipode = 4;
    std::array<std::vector<int>, 3> copy_map; // D' vertex -> tilde vertex, per copy
};

// Q3 with y = 000: the neighbors 100, 010, 001 are each replaced by a copy of
// D'; each copy's u-pendant is identified with y and its two other pendants
// with the two remaining cube neighbors of the replaced vertex.
inline TildeResult tilde_construction(const SplitGadget& sg) {
    TildeResult r;
    // fixed cube skeleton labels: y=0, 110->1, 101->2, 011->3, 111->4
    r.y = 0;
    r.far_vertices = {1, 2, 3};
    r.antipode = 4;
    const int internal = sg.graph.n - 3;  // non-pendant vertices per copy
    r.graph.n = 5 + 3 * internal;
    // replaced vertex 100 borders 110,101; 010 borders 110,011; 001 borders 101,011
    const std::array<std::pair<int, int>, 3> borders = {{{1, 2}, {1, 3}, {2, 3}}};

    std::vector<int> edge_dir_acc;
    for (int c = 0; c < 3; ++c) {
        std::vector<int>& map = r.copy_map[c];
        map.assign(sg.graph.n, -1);
        map[sg.pendant_v] = r.y;
        map[sg.pendant_1] = borders[c].first;
        map[sg.pendant_2] = borders[c].second;
        int next = 5 + c * internal;
        for (int v = 0; v < sg.graph.n; ++v)
            if (map[v] < 0) map[v] = next++;
        for (int e = 0; e < sg.graph.m(); ++e) {
            r.graph.add_edge(map[sg.graph.edges[e].a], map[sg.graph.edges[e].b]);
            edge_dir_acc.push_back(static_cast<int>(sg.orientation.dir[e]));
        }
    }
    for (int f : r.far_vertices) {
        r.graph.add_edge(f, r.antipode);
        edge_dir_acc.push_back(static_cast<int>(EdgeDir::Undirected));
    }
    r.orientation = PartialOrientation(r.graph.m());
    for (int e = 0; e < r.graph.m(); ++e)
        r.orientation.dir[e] = static_cast<EdgeDir>(edge_dir_acc[e]);
    return r;
}

// ---------------------------------------------------------------------------
// The 7-vertex replacement gadget and the D+ construction.

// Internal arcs of the replacement gadget, 0-based on v1..v7; suspension
// attachment points are v1 (out), v3 and v5 (in).  v7 is an internal source,
// v3 and v5 internal sinks.
inline const std::vector<std::pair<int, int>>& rv_internal_arcs() {
    static const std::vector<std::pair<int, int>> arcs = {
        {6, 5}, {6, 1}, {6, 3}, {3, 4}, {5, 4}, {0, 5}, {0, 1}, {1, 2}, {3, 2}};
    return arcs;
}

// D+: every vertex that is neither a sink nor a source becomes a 7-vertex
// gadget (arc-reversed when the vertex has out-degree 2).
inline OrientedGraph dplus(const MultiGraph& d, const PartialOrientation& o) {
    if (!is_cubic(d)) throw std::invalid_argument("dplus: host must be cubic");
    if (!o.is_full()) throw std::invalid_argument("dplus: host must be fully oriented");

    std::vector<int> outdeg(d.n, 0);
    for (int e = 0; e < d.m(); ++e) ++outdeg[tail_of(d, o, e)];

    // base[v]: first vertex id of v's block (1 vertex, or 7 for internal)
    std::vector<int> base(d.n), block(d.n);
    int next = 0;
    for (int v = 0; v < d.n; ++v) {
        base[v] = next;
        block[v] = (outdeg[v] == 0 || outdeg[v] == 3) ? 1 : 7;
        next += block[v];
    }
    OrientedGraph out;
    out.graph.n = next;
    std::vector<std::pair<int, int>> arcs;  // (tail, head) in new ids
    for (int v = 0; v < d.n; ++v) {
        if (block[v] == 1) continue;
        bool rev = outdeg[v] == 2;
        for (auto [t, h] : rv_internal_arcs())
            arcs.push_back(rev ? std::pair{base[v] + h, base[v] + t}
                               : std::pair{base[v] + t, base[v] + h});
    }
    // suspension arcs: attach at v1 on the out side, v3 then v5 on the in
    // side (v3/v5 swap roles in a reversed gadget)
    std::vector<int> in_seen(d.n, 0), out_seen(d.n, 0);
    auto attach = [&](int v, bool leaving) -> int {
        if (block[v] == 1) return base[v];
        bool rev = outdeg[v] == 2;
        if (leaving != rev) return base[v] + 0;                    // v1
        return base[v] + (in_seen[v]++ == 0 ? 2 : 4);              // v3 then v5
    };
    for (int e = 0; e < d.m(); ++e) {
        int t = tail_of(d, o, e), h = head_of(d, o, e);
        arcs.push_back({attach(t, true), attach(h, false)});
    }
    out.orientation = PartialOrientation(static_cast<int>(arcs.size()));
    for (size_t i = 0; i < arcs.size(); ++i) {
        out.graph.add_edge(arcs[i].first, arcs[i].second);
        out.orientation.dir[i] = EdgeDir::Forward;
    }
    return out;
}

inline int dplus_internal_count(const MultiGraph& d, const PartialOrientation& o) {
    std::vector<int> outdeg(d.n, 0);
    for (int e = 0; e < d.m(); ++e) ++outdeg[tail_of(d, o, e)];
    int c = 0;
    for (int v = 0; v < d.n; ++v)
        if (outdeg[v] == 1 || outdeg[v] == 2) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Complete a partial orientation minimizing the number of vertices that are
// neither sinks nor sources; branch and bound over the undirected edges.

struct ExtremalOrientation {
    PartialOrientation orientation;
    int internal_count = 0;  // achieved |{v : out-degree 1 or 2}|
};

inline ExtremalOrientation orient_extremal_sinks_sources(const MultiGraph& g,
                                                         const PartialOrientation& o) {
    if (!is_cubic(g)) throw std::invalid_argument("orient_extremal_sinks_sources: host not cubic");
    std::vector<int> undirected;
    for (int e = 0; e < g.m(); ++e)
        if (o.dir[e] == EdgeDir::Undirected) undirected.push_back(e);

    // decide edges sharing vertices close together so the bound bites early
    std::sort(undirected.begin(), undirected.end(), [&](int a, int b) {
        auto ka = std::minmax(g.edges[a].a, g.edges[a].b);
        auto kb = std::minmax(g.edges[b].a, g.edges[b].b);
        return ka < kb;
    });

    PartialOrientation cur = o;
    ExtremalOrientation best;
    best.internal_count = g.n + 1;

    std::vector<int> outd(g.n, 0), ind(g.n, 0);
    for (int e = 0; e < g.m(); ++e)
        if (cur.dir[e] != EdgeDir::Undirected) {
            ++outd[tail_of(g, cur, e)];
            ++ind[head_of(g, cur, e)];
        }

    // a vertex with both an out-arc and an in-arc can no longer be extremal
    auto doomed = [&]() {
        int c = 0;
        for (int v = 0; v < g.n; ++v)
            if (outd[v] > 0 && ind[v] > 0) ++c;
        return c;
    };

    auto rec = [&](auto&& self, size_t i) -> void {
        if (doomed() >= best.internal_count) return;
        if (i == undirected.size()) {
            int c = doomed();
            if (c < best.internal_count) {
                best.internal_count = c;
                best.orientation = cur;
            }
            return;
        }
        int e = undirected[i];
        for (EdgeDir d : {EdgeDir::Forward, EdgeDir::Backward}) {
            cur.dir[e] = d;
            int t = tail_of(g, cur, e), h = head_of(g, cur, e);
            ++outd[t], ++ind[h];
            self(self, i + 1);
            --outd[t], --ind[h];
        }
        cur.dir[e] = EdgeDir::Undirected;
    };
    rec(rec, 0);
    return best;
}

// ---------------------------------------------------------------------------
// Cubic expansion: every vertex becomes an undirected cycle of its degree.

inline OrientedGraph cubic_expansion(const MultiGraph& d, const PartialOrientation& o) {
    auto deg = d.degrees();
    for (int v = 0; v < d.n; ++v)
        if (deg[v] < 3) throw std::invalid_argument("cubic_expansion: vertex of degree < 3");
    std::vector<int> base(d.n);
    int next = 0;
    for (int v = 0; v < d.n; ++v) {
        base[v] = next;
        next += deg[v];
    }
    OrientedGraph out;
    out.graph.n = next;
    std::vector<EdgeDir> dirs;
    // former edges first, attaching at cycle positions in incident-edge order
    std::vector<int> used(d.n, 0);
    for (int e = 0; e < d.m(); ++e) {
        int a = d.edges[e].a, b = d.edges[e].b;
        out.graph.add_edge(base[a] + used[a]++, base[b] + used[b]++);
        dirs.push_back(o.dir[e]);
    }
    for (int v = 0; v < d.n; ++v)
        for (int k = 0; k < deg[v]; ++k) {
            out.graph.add_edge(base[v] + k, base[v] + (k + 1) % deg[v]);
            dirs.push_back(EdgeDir::Undirected);
        }
    out.orientation.dir = dirs;
    return out;
}

// ---------------------------------------------------------------------------
// Triangle contraction.

inline OrientedGraph contract_triangle(const MultiGraph& g, const PartialOrientation& o,
                                       const std::vector<int>& triangle_edges) {
    if (triangle_edges.size() != 3)
        throw std::invalid_argument("contract_triangle: need exactly three edges");
    std::vector<int> vs;
    for (int e : triangle_edges) {
        if (e < 0 || e >= g.m()) throw std::invalid_argument("contract_triangle: bad edge id");
        vs.push_back(g.edges[e].a);
        vs.push_back(g.edges[e].b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() != 3) throw std::invalid_argument("contract_triangle: edges are not a triangle");
    auto c = contract(g, triangle_edges);
    return {c.graph, carry_orientation(c, o)};
}

// All triangles of g as edge-id triples.
inline std::vector<std::vector<int>> find_triangles(const MultiGraph& g) {
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            for (int h = f + 1; h < g.m(); ++h) {
                std::vector<int> vs = {g.edges[e].a, g.edges[e].b, g.edges[f].a,
                                       g.edges[f].b, g.edges[h].a, g.edges[h].b};
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                if (vs.size() == 3) out.push_back({e, f, h});
            }
    return out;
}

// ---------------------------------------------------------------------------
// 4-cycle reduction for cubic bipartite hosts (two reduced graphs plus
// Hamiltonian-cycle lifting).

struct C4Reduced {
    MultiGraph graph;               // n-2 vertices
    std::vector<int> vertex_map;    // host vertex -> reduced vertex, -1 if deleted
    std::vector<int> edge_map;      // host edge -> reduced edge, -1 if dropped
    int new_edge_a = -1, new_edge_b = -1;  // the two replacement edges
    // host data needed to lift a Hamiltonian cycle back
    int del_c = -1, del_d = -1;      // deleted cycle vertices (c,d of cycle a,b,c,d)
    int e_ab = -1;                   // host edge {a,b}
    int e_bc = -1, e_cd = -1, e_da = -1;      // remaining cycle edges of the host
    int e_c_out = -1, e_d_out = -1;  // host edges {c,c'}, {d,d'}
};

namespace detail {

inline int edge_between(const MultiGraph& g, int u, int v) {
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = std::pair{g.edges[e].a, g.edges[e].b};
        if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return -1;
}

// reduce cycle (a,b,c,d): delete c and d, reattach d' to b and c' to a
inline C4Reduced c4_reduce_one(const MultiGraph& g, int a, int b, int c, int d) {
    int e_cd = edge_between(g, c, d);
    int e_bc = edge_between(g, b, c);
    int e_da = edge_between(g, d, a);
    int c_out = -1, d_out = -1, e_c_out = -1, e_d_out = -1;
    for (int e = 0; e < g.m(); ++e) {
        for (int end : {g.edges[e].a, g.edges[e].b}) {
            int oth = g.other(e, end);
            if (end == c && oth != b && oth != d) c_out = oth, e_c_out = e;
            if (end == d && oth != a && oth != c) d_out = oth, e_d_out = e;
        }
    }
    if (c_out == a || c_out == b || d_out == a || d_out == b || c_out == d_out)
        throw std::invalid_argument("c4_reduction: outside neighbours not distinct");
    if (edge_between(g, d_out, b) >= 0 || edge_between(g, c_out, a) >= 0)
        throw std::invalid_argument("c4_reduction: replacement edge would be parallel");

    C4Reduced r;
    r.del_c = c;
    r.del_d = d;
    r.e_ab = edge_between(g, a, b);
    r.e_bc = e_bc;
    r.e_cd = e_cd;
    r.e_da = e_da;
    r.e_c_out = e_c_out;
    r.e_d_out = e_d_out;
    r.vertex_map.assign(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (v != c && v != d) r.vertex_map[v] = next++;
    r.graph.n = g.n - 2;
    r.edge_map.assign(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
        int x = g.edges[e].a, y = g.edges[e].b;
        if (x == c || x == d || y == c || y == d) continue;
        r.edge_map[e] = r.graph.m();
        r.graph.add_edge(r.vertex_map[x], r.vertex_map[y]);
    }
    r.new_edge_a = r.graph.m();
    r.graph.add_edge(r.vertex_map[d_out], r.vertex_map[b]);  // {d', b}
    r.new_edge_b = r.graph.m();
    r.graph.add_edge(r.vertex_map[c_out], r.vertex_map[a]);  // {c', a}
    return r;
}

}  // namespace detail

struct C4Reduction {
    C4Reduced g_uv;  // cycle (u,v,w,x): deletes w,x
    C4Reduced g_vw;  // cycle (v,w,x,u): deletes x,u
};

inline C4Reduction c4_reduction(const MultiGraph& g, std::array<int, 4> cycle) {
    if (!is_cubic(g) || !is_bipartite(g) || !is_three_connected(g))
        throw std::invalid_argument("c4_reduction: host must be cubic bipartite 3-connected");
    auto [u, v, w, x] = cycle;
    for (auto [p, q] : {std::pair{u, v}, {v, w}, {w, x}, {x, u}})
        if (detail::edge_between(g, p, q) < 0)
            throw std::invalid_argument("c4_reduction: vertices are not a 4-cycle");
    if (detail::edge_between(g, u, w) >= 0 || detail::edge_between(g, v, x) >= 0)
        throw std::invalid_argument("c4_reduction: 4-cycle is not induced");
    return {detail::c4_reduce_one(g, u, v, w, x), detail::c4_reduce_one(g, v, w, x, u)};
}

// Lift a Hamiltonian cycle of a reduced graph back to the host.
inline std::vector<int> c4_lift_hamiltonian(const MultiGraph& g, const C4Reduced& r,
                                            const std::vector<int>& reduced_cycle) {
    std::vector<char> in(r.graph.m(), 0);
    for (int e : reduced_cycle) in[e] = 1;
    std::vector<int> out;
    for (int e = 0; e < g.m(); ++e)
        if (r.edge_map[e] >= 0 && in[r.edge_map[e]]) out.push_back(e);
    bool use_a = in[r.new_edge_a];  // {d', b}
    bool use_b = in[r.new_edge_b];  // {c', a}
    if (use_a && use_b) {
        // deleting the two replacement edges splits the cycle into two paths;
        // the endpoint pairing decides the reconnection (two subcases)
        int ra = r.vertex_map[g.edges[r.e_ab].a], rb = r.vertex_map[g.edges[r.e_ab].b];
        std::vector<std::vector<int>> cyc_adj(r.graph.n);
        for (int e : reduced_cycle) {
            if (e == r.new_edge_a || e == r.new_edge_b) continue;
            cyc_adj[r.graph.edges[e].a].push_back(r.graph.edges[e].b);
            cyc_adj[r.graph.edges[e].b].push_back(r.graph.edges[e].a);
        }
        std::vector<char> seen(r.graph.n, 0);
        std::vector<int> stack{ra};
        seen[ra] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : cyc_adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (seen[rb]) {
            // a and b end the same path: join d'-d-a and c'-c-b
            out.insert(out.end(), {r.e_d_out, r.e_da, r.e_c_out, r.e_bc});
        } else {
            // a pairs with c' and b with d': route d'-d-c-c' and close with {a,b}
            out.insert(out.end(), {r.e_d_out, r.e_cd, r.e_c_out, r.e_ab});
        }
    } else if (use_a) {
        out.insert(out.end(), {r.e_d_out, r.e_cd, r.e_bc});  // d'-d-c-b
    } else if (use_b) {
        out.insert(out.end(), {r.e_c_out, r.e_cd, r.e_da});  // c'-c-d-a
    } else {
        // the cycle must use {a,b}: reroute it through the deleted vertices
        out.erase(std::remove(out.begin(), out.end(), r.e_ab), out.end());
        out.insert(out.end(), {r.e_da, r.e_cd, r.e_bc});  // a-d-c-b
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Induced 4-cycles (u,v,w,x) with four distinct outside neighbours.
inline std::vector<std::array<int, 4>> reducible_c4s(const MultiGraph& g) {
    std::vector<std::array<int, 4>> out;
    auto adj = g.adjacency();
    for (int u = 0; u < g.n; ++u)
        for (auto [v, e1] : adj[u]) {
            if (v < u) continue;
            for (auto [w, e2] : adj[v]) {
                if (w == u) continue;
                for (auto [x, e3] : adj[w]) {
                    if (x == v || x <= u) continue;
                    if (detail::edge_between(g, x, u) < 0) continue;
                    if (detail::edge_between(g, u, w) >= 0 ||
                        detail::edge_between(g, v, x) >= 0)
                        continue;
                    std::array<int, 4> c = {u, v, w, x};
                    try {
                        (void)detail::c4_reduce_one(g, u, v, w, x);
                        (void)detail::c4_reduce_one(g, v, w, x, u);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    if (v < x) out.push_back(c);  // avoid the mirrored duplicate
                }
            }
        }
    return out;
}

}  // namespace pmcuts
