#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pmcuts/assets.hpp"
#include "pmcuts/canonical.hpp"
#include "pmcuts/generate.hpp"

using namespace pmcuts;

namespace {

// Labeled connected cubic graph count by unrestricted completion of the
// lowest deficient vertex (no symmetry breaking), as an independent oracle.
long long labeled_connected_cubic_count(int n) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    long long count = 0;
    auto connected = [&]() {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (adj[v][w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n;
    };
    auto rec = [&](auto&& self, int last_partner) -> void {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] < 3) {
                v = u;
                break;
            }
        if (v == -1) {
            if (connected()) ++count;
            return;
        }
        for (int w = std::max(v + 1, last_partner + 1); w < n; ++w) {
            if (deg[w] >= 3 || adj[v][w]) continue;
            adj[v][w] = adj[w][v] = 1;
            ++deg[v];
            ++deg[w];
            self(self, deg[v] < 3 ? w : 0);
            --deg[v];
            --deg[w];
            adj[v][w] = adj[w][v] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

std::set<std::string> canon_set(const std::vector<MultiGraph>& gs) {
    std::set<std::string> s;
    for (const auto& g : gs) s.insert(canonical_form(g));
    return s;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

TEST_CASE("smallest cubic censuses are exactly right") {
    auto g4 = all_cubic_graphs(4);
    REQUIRE(g4.size() == 1);
    CHECK(canonical_form(g4[0]) == canonical_form(assets::k4()));

    auto g6 = all_cubic_graphs(6);
    REQUIRE(g6.size() == 2);
    CHECK(canon_set(g6) ==
          canon_set({assets::k33(), assets::prism()}));
}

TEST_CASE("class counts match labeled enumeration divided by automorphisms" *
          doctest::timeout(600)) {
    for (int n : {4, 6, 8, 10}) {
        long long labeled = labeled_connected_cubic_count(n);
        long long recovered = 0;
        for (const auto& g : all_cubic_graphs(n)) recovered += factorial(n) / automorphism_count(g);
        CHECK(recovered == labeled);
    }
    CHECK(all_cubic_graphs(8).size() == 5);
    CHECK(all_cubic_graphs(10).size() == 19);
}

TEST_CASE("filters are honored and consistent with post-hoc filtering") {
    auto all8 = all_cubic_graphs(8);
    CubicFilters bip;
    bip.bipartite = true;
    CubicFilters g4f;
    g4f.girth_min = 4;
    CubicFilters tc;
    tc.three_connected = true;

    for (int n : {6, 8, 10}) {
        auto whole = all_cubic_graphs(n);
        for (auto [f, name] : std::vector<std::pair<CubicFilters, std::string>>{
                 {bip, "bipartite"}, {g4f, "girth4"}, {tc, "3conn"}}) {
            auto direct = all_cubic_graphs(n, f);
            std::vector<MultiGraph> post;
            for (const auto& g : whole) {
                if (f.bipartite && !is_bipartite(g)) continue;
                if (girth(g) < f.girth_min) continue;
                if (f.three_connected && !is_three_connected(g)) continue;
                post.push_back(g);
            }
            INFO(name << " n=" << n);
            CHECK(canon_set(direct) == canon_set(post));
            // every emitted graph passes its own filters
            for (const auto& g : direct) {
                CHECK(is_cubic(g));
                CHECK(is_connected(g));
                CHECK((!f.bipartite || is_bipartite(g).has_value()));
                CHECK(girth(g) >= f.girth_min);
                CHECK((!f.three_connected || is_three_connected(g)));
            }
            // no duplicate canonical forms
            CHECK(canon_set(direct).size() == direct.size());
        }
    }
    CHECK(all8.size() == 5);
}

TEST_CASE("the ten-vertex girth-five census is the Petersen graph alone") {
    CubicFilters f;
    f.three_connected = true;
    f.girth_min = 5;
    auto gs = all_cubic_graphs(10, f);
    REQUIRE(gs.size() == 1);
    CHECK(canonical_form(gs[0]) == canonical_form(assets::petersen()));
}

TEST_CASE("generation bounds and argument errors") {
    CHECK_THROWS(all_cubic_graphs(22));
    CHECK_THROWS(all_cubic_graphs(7));
    CHECK_THROWS(all_cubic_graphs(0));
}

TEST_CASE("orientation streams: counts, digirth filter, orbit reduction") {
    auto tri = assets::triangle();
    CHECK(all_orientations(tri).size() == 8);
    // no digons are possible in a simple host, so the digirth-3 filter keeps
    // everything: 2 cyclic orientations (digirth 3) and 6 acyclic ones
    // (digirth infinite)
    CHECK(all_orientations(tri, 3).size() == 8);
    int cyclic = 0;
    for (const auto& o : all_orientations(tri, 3))
        if (digirth(tri, o) == 3) ++cyclic;
    CHECK(cyclic == 2);
    // orbits under the six automorphisms: one cyclic, one acyclic
    CHECK(all_orientations(tri, 0, true).size() == 2);
    CHECK(all_orientations(tri, 3, true).size() == 2);

    // digons are the only thing the digirth-3 filter can reject: a doubled
    // edge oriented both ways
    MultiGraph dbl;
    dbl.n = 2;
    dbl.add_edge(0, 1);
    dbl.add_edge(0, 1);
    CHECK(all_orientations(dbl).size() == 4);
    CHECK(all_orientations(dbl, 3).size() == 2);  // parallel arcs only

    // a tree has no directed cycle at all
    MultiGraph path;
    path.n = 4;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(all_orientations(path, 3).size() == 8);

    // count law on a 15-edge host
    long long total = 0;
    orientations(assets::petersen(), 0, false, [&](const PartialOrientation&) {
        ++total;
        return true;
    });
    CHECK(total == (1 << 15));

    // orbit reduction partitions: orbit sizes under the full group sum back
    auto k4 = assets::k4();
    long long reduced = all_orientations(k4, 0, true).size();
    CHECK(reduced < (1 << 6));
    CHECK(reduced >= (1 << 6) / automorphism_count(k4));

    MultiGraph big;
    big.n = 26;
    for (int i = 0; i < 25; ++i) big.add_edge(i, i + 1);
    CHECK_THROWS(all_orientations(big));
}

TEST_CASE("early stop from the sink") {
    int seen = 0;
    generate_cubic(10, {}, [&](const MultiGraph&) { return ++seen < 3; });
    CHECK(seen == 3);
    int oseen = 0;
    orientations(assets::k4(), 0, false, [&](const PartialOrientation&) { return ++oseen < 5; });
    CHECK(oseen == 5);
}
