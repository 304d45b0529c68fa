#include "doctest.h"

#include <random>
#include <set>

#include "pmcuts/assets.hpp"
#include "pmcuts/matchings.hpp"
#include "pmcuts/orientation.hpp"

using namespace pmcuts;

namespace {

MultiGraph random_graph(std::mt19937& rng, int n, int density_pct = 50) {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (static_cast<int>(rng() % 100) < density_pct) es.push_back({a, b});
    return from_sorted_edge_set(n, es);
}

// subset-scan oracle for bonds inside a fixed perfect matching
std::vector<std::vector<int>> bonds_in_matching_oracle(const MultiGraph& g,
                                                       const PerfectMatching& pm) {
    std::set<int> pmset(pm.begin(), pm.end());
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 1; mask + 1 < (1ull << g.n); ++mask) {
        if (mask & 1) continue;  // fix vertex 0 outside
        std::vector<char> side(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) side[v] = 1;
        if (!is_bond(g, side)) continue;
        auto cut = boundary_edges(g, side);
        bool inside = true;
        for (int e : cut)
            if (!pmset.count(e)) inside = false;
        if (inside) {
            std::sort(cut.begin(), cut.end());
            out.push_back(cut);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// configuration-model cubic graph, rejection sampled to simple + connected
MultiGraph random_cubic_graph(std::mt19937& rng, int n) {
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> es;
        bool ok = true;
        std::set<std::pair<int, int>> seen;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            auto key = std::minmax(a, b);
            if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
            es.push_back({a, b});
        }
        if (!ok) continue;
        auto g = from_sorted_edge_set(n, es);
        if (is_connected(g)) return g;
    }
}

std::vector<char> side_mask(int n, const Bond& b) {
    std::vector<char> mask(n, 0);
    for (int v : b.side) mask[v] = 1;
    return mask;
}

}  // namespace

TEST_CASE("perfect matchings of the named graphs") {
    CHECK(all_perfect_matchings(assets::k4()).size() == 3);
    CHECK(all_perfect_matchings(assets::petersen()).size() == 6);
    CHECK(all_perfect_matchings(assets::q3()).size() == 9);
    CHECK(all_perfect_matchings(assets::k33()).size() == 6);
    CHECK(all_perfect_matchings(assets::triangle()).empty());

    auto pms = all_perfect_matchings(assets::petersen());
    for (const auto& pm : pms) {
        CHECK(is_perfect_matching(assets::petersen(), pm));
        CHECK(pm.size() == 5);
        CHECK(std::is_sorted(pm.begin(), pm.end()));
    }
    // lexicographic enumeration order
    CHECK(std::is_sorted(pms.begin(), pms.end()));
}

TEST_CASE("matching count agrees with the independent oracle") {
    std::mt19937 rng(31);
    for (int t = 0; t < 80; ++t) {
        int n = 2 + 2 * static_cast<int>(rng() % 5);
        auto g = random_graph(rng, n);
        CHECK(count_perfect_matchings(g) ==
              static_cast<std::int64_t>(all_perfect_matchings(g).size()));
    }
    // odd order: none
    CHECK(count_perfect_matchings(assets::triangle()) == 0);
    CHECK(count_perfect_matchings(assets::petersen()) == 6);
}

TEST_CASE("enumeration with early stop") {
    int seen = 0;
    enumerate_perfect_matchings(assets::petersen(), [&](const PerfectMatching&) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("bonds within a perfect matching match a subset-scan oracle") {
    std::mt19937 rng(37);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        int n = 4 + 2 * static_cast<int>(rng() % 4);
        auto g = random_cubic_graph(rng, n);
        auto pms = all_perfect_matchings(g);
        if (pms.empty()) continue;
        const auto& pm = pms[rng() % pms.size()];
        auto got = bonds_within_matching(g, pm);
        std::vector<std::vector<int>> got_cuts;
        for (auto& b : got) {
            auto c = b.cut_edges;
            std::sort(c.begin(), c.end());
            got_cuts.push_back(c);
        }
        std::sort(got_cuts.begin(), got_cuts.end());
        got_cuts.erase(std::unique(got_cuts.begin(), got_cuts.end()), got_cuts.end());
        CHECK(got_cuts == bonds_in_matching_oracle(g, pm));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("every Petersen perfect matching contains a cut candidate") {
    // Petersen: each perfect matching's complement is two 5-cycles,
    // so contracting the 2-factor leaves K2 with 5 parallel edges -> the
    // matching itself is (the edge set of) a bond.
    auto P = assets::petersen();
    for (const auto& pm : all_perfect_matchings(P)) {
        CHECK(matching_contains_cut(P, pm));
        auto bonds = bonds_within_matching(P, pm);
        REQUIRE(bonds.size() == 1);
        CHECK(bonds[0].cut_edges.size() == 5);
    }
    // K4 matchings never contain a cut: the complement 2-factor is a
    // hamiltonian cycle, contraction leaves a single vertex
    for (const auto& pm : all_perfect_matchings(assets::k4()))
        CHECK(!matching_contains_cut(assets::k4(), pm));
}

TEST_CASE("directed cuts in a matching") {
    auto P = assets::petersen();
    auto pms = all_perfect_matchings(P);
    const auto& pm = pms[0];
    auto bonds = bonds_within_matching(P, pm);
    REQUIRE(bonds.size() == 1);

    // orient all cut edges off the side -> directed cut
    auto mask = side_mask(P.n, bonds[0]);
    PartialOrientation o(P.m());
    for (int e : bonds[0].cut_edges)
        o.dir[e] = mask[P.edges[e].a] ? EdgeDir::Forward : EdgeDir::Backward;
    CHECK(bond_is_directed(P, o, bonds[0]));
    CHECK(directed_cut_in_matching(P, o, pm).has_value());

    // flip one edge: no longer directed
    o.dir[bonds[0].cut_edges[0]] =
        o.dir[bonds[0].cut_edges[0]] == EdgeDir::Forward ? EdgeDir::Backward
                                                         : EdgeDir::Forward;
    CHECK(!bond_is_directed(P, o, bonds[0]));
    CHECK(!directed_cut_in_matching(P, o, pm).has_value());

    // an undirected edge in the cut disqualifies it
    o.dir[bonds[0].cut_edges[0]] = EdgeDir::Undirected;
    CHECK(!bond_is_directed(P, o, bonds[0]));

    // monotonicity: a directed cut under a partial orientation stays
    // directed under any full extension
    PartialOrientation full(P.m());
    for (int e = 0; e < P.m(); ++e) full.dir[e] = EdgeDir::Forward;
    for (int e : bonds[0].cut_edges)
        full.dir[e] = mask[P.edges[e].a] ? EdgeDir::Forward : EdgeDir::Backward;
    CHECK(bond_is_directed(P, full, bonds[0]));
}

TEST_CASE("min cut value over perfect matchings") {
    auto r = min_cut_in_perfect_matching(assets::petersen());
    CHECK(r.has_matching);
    CHECK(r.value == 5);
    auto rk4 = min_cut_in_perfect_matching(assets::k4());
    CHECK(rk4.has_matching);
    CHECK(rk4.value == kInfinity);  // no matching contains a cut
    CHECK_THROWS(min_cut_in_perfect_matching(assets::triangle()));  // not cubic

    // cubic connected graph with no perfect matching: a hub vertex joined to
    // three copies of K4-with-one-edge-subdivided; removing the hub leaves
    // three odd components
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < 3; ++c) {
        int b = 1 + 5 * c;  // vertices b..b+4, b+4 is the subdivision vertex
        es.insert(es.end(), {{b, b + 1}, {b, b + 2}, {b + 1, b + 2},
                             {b + 1, b + 3}, {b + 2, b + 3},
                             {b, b + 4}, {b + 3, b + 4}, {0, b + 4}});
    }
    auto nomatch = from_sorted_edge_set(16, es);
    REQUIRE(is_cubic(nomatch));
    REQUIRE(is_connected(nomatch));
    auto rn = min_cut_in_perfect_matching(nomatch);
    CHECK(!rn.has_matching);
    CHECK(count_perfect_matchings(nomatch) == 0);
}

TEST_CASE("even and odd subgraphs") {
    auto P = assets::petersen();
    std::vector<int> empty_set;
    CHECK(is_even_subgraph(P, empty_set));
    // outer 5-cycle
    std::vector<int> outer;
    for (int e = 0; e < P.m(); ++e)
        if (P.edges[e].a < 5 && P.edges[e].b < 5) outer.push_back(e);
    CHECK(is_even_subgraph(P, outer));
    CHECK(!is_odd_subgraph(P, outer));

    // a perfect matching of a cubic graph is an odd subgraph
    auto pm = all_perfect_matchings(P)[0];
    std::vector<int> pmv(pm.begin(), pm.end());
    CHECK(is_odd_subgraph(P, pmv));
    CHECK(!is_even_subgraph(P, pmv));

    // in cubic graphs, complement of even is odd and vice versa
    std::vector<int> comp;
    for (int e = 0; e < P.m(); ++e)
        if (std::find(outer.begin(), outer.end(), e) == outer.end()) comp.push_back(e);
    CHECK(is_odd_subgraph(P, comp));
}

TEST_CASE("cycle space basis") {
    auto P = assets::petersen();
    auto basis = cycle_space_basis(P);
    CHECK(static_cast<int>(basis.size()) == P.m() - P.n + 1);  // connected
    for (const auto& cyc : basis) {
        std::vector<int> es;
        for (int e = 0; e < P.m(); ++e)
            if (mask_get(cyc, e)) es.push_back(e);
        CHECK(is_even_subgraph(P, es));
    }
}

TEST_CASE("even subgraph with strongly connected contraction") {
    auto P = assets::petersen();
    // orient each edge min -> max; the empty even subgraph contracts to the
    // whole digraph which is not strongly connected under this orientation,
    // so the search has real work to do
    PartialOrientation o(P.m());
    for (int e = 0; e < P.m(); ++e) o.dir[e] = EdgeDir::Forward;

    EvenSubgraphSearch cfg;
    cfg.mode = EvenSubgraphSearch::Mode::Exhaustive;
    auto res = even_subgraph_with_strong_contraction(P, o, cfg);
    // whatever the verdict, a witness must verify
    if (res.kind == EvenSubgraphResult::Kind::Witness) {
        CHECK(is_even_subgraph(P, res.witness));
        CHECK(contraction_strongly_connected(P, o, res.witness));
    } else {
        CHECK(res.kind == EvenSubgraphResult::Kind::NoneExists);
    }

    // sampling mode never reports NoneExists
    cfg.mode = EvenSubgraphSearch::Mode::Sampling;
    cfg.samples = 2000;
    auto res2 = even_subgraph_with_strong_contraction(P, o, cfg);
    CHECK(res2.kind != EvenSubgraphResult::Kind::NoneExists);
    if (res2.kind == EvenSubgraphResult::Kind::Witness) {
        CHECK(is_even_subgraph(P, res2.witness));
        CHECK(contraction_strongly_connected(P, o, res2.witness));
    }

    // exhaustive and sampling agree when a witness exists: cyclic triangle
    // inside K4 oriented so some even subgraph works
    auto K4 = assets::k4();
    PartialOrientation ok4(K4.m());
    for (int e = 0; e < K4.m(); ++e) ok4.dir[e] = EdgeDir::Forward;
    // edges of K4: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    ok4.dir[1] = EdgeDir::Backward;  // 2->0
    ok4.dir[3] = EdgeDir::Forward;   // 1->2
    // now 0->1->2->0 is a directed triangle
    EvenSubgraphSearch ex;
    ex.mode = EvenSubgraphSearch::Mode::Exhaustive;
    auto rk = even_subgraph_with_strong_contraction(K4, ok4, ex);
    REQUIRE(rk.kind == EvenSubgraphResult::Kind::Witness);
    CHECK(contraction_strongly_connected(K4, ok4, rk.witness));
}
