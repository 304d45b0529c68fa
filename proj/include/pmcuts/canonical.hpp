#ifndef PMCUTS_CANONICAL_HPP
#define PMCUTS_CANONICAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcuts/graph.hpp"

namespace pmcuts {

namespace detail {

struct CanonState {
    int n;
    std::vector<std::vector<std::uint8_t>> mult;  // edge multiplicities
    std::string best;                             // smallest leaf encoding so far
    std::vector<int> best_labeling;               // vertex -> canonical position
    std::vector<std::vector<int>> auto_gens;      // automorphisms found (as vertex maps)

    // color refinement until stable; colors stay order-comparable
    void refine(std::vector<int>& color) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s{color[v]};
                std::vector<std::pair<int, int>> nb;
                for (int w = 0; w < n; ++w)
                    if (mult[v][w]) nb.push_back({color[w], mult[v][w]});
                std::sort(nb.begin(), nb.end());
                for (auto [c, k] : nb) {
                    s.push_back(c);
                    s.push_back(k);
                }
                sig[v] = {std::move(s), v};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int c = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
                next[sorted[i].second] = c;
            }
            if (next == color) return;
            color = std::move(next);
        }
    }

    std::string encode(const std::vector<int>& labeling) const {
        // labeling: vertex -> position
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[labeling[v]] = v;
        std::string s;
        s.push_back(static_cast<char>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(static_cast<char>(mult[inv[i]][inv[j]]));
        return s;
    }

    void search(std::vector<int> color) {
        refine(color);
        // smallest non-singleton color class
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] > 1 && (target == -1 || count[c] < count[target])) target = c;
        if (target == -1) {
            // discrete: color IS the labeling
            std::string enc = encode(color);
            if (best.empty() || enc < best) {
                best = enc;
                best_labeling = color;
            } else if (enc == best) {
                // labeling composed with the inverse of the best one is an automorphism
                std::vector<int> inv_best(n), perm(n);
                for (int v = 0; v < n; ++v) inv_best[best_labeling[v]] = v;
                for (int v = 0; v < n; ++v) perm[v] = inv_best[color[v]];
                auto_gens.push_back(perm);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> child = color;
            // individualize: give v a color just below its class
            for (int w = 0; w < n; ++w)
                if (child[w] >= target && w != v) child[w] += 1;
            search(std::move(child));
        }
    }
};

inline CanonState canon_search(const MultiGraph& g, int max_n) {
    if (g.n > max_n)
        throw std::invalid_argument(
            "canonical_form: vertex bound exceeded; use an external canonicalizer");
    CanonState st;
    st.n = g.n;
    st.mult.assign(g.n, std::vector<std::uint8_t>(g.n, 0));
    for (const auto& e : g.edges) {
        ++st.mult[e.a][e.b];
        ++st.mult[e.b][e.a];
    }
    st.search(std::vector<int>(g.n, 0));
    return st;
}

}  // namespace detail

// Equal byte strings iff isomorphic (exact canonical labeling).
inline std::string canonical_form(const MultiGraph& g, int max_n = 20) {
    return detail::canon_search(g, max_n).best;
}

// Vertex maps generating (in fact listing a superset of generators of) the
// automorphism group; includes the identity.
inline std::vector<std::vector<int>> automorphisms(const MultiGraph& g, int max_n = 20) {
    auto st = detail::canon_search(g, max_n);
    std::vector<std::vector<int>> out = std::move(st.auto_gens);
    std::vector<int> id(g.n);
    for (int v = 0; v < g.n; ++v) id[v] = v;
    out.push_back(id);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// |Aut(g)| via closure of the collected maps.
inline long long automorphism_count(const MultiGraph& g, int max_n = 20) {
    auto gens = automorphisms(g, max_n);
    std::vector<std::vector<int>> group = gens;
    std::sort(group.begin(), group.end());
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
    return static_cast<long long>(group.size());
}

}  // namespace pmcuts

#endif
