#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcuts/canonical.hpp"
#include "pmcuts/matchings.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

struct SearchProblem {
    MultiGraph host;
    PartialOrientation fixed;        // pre-directed edges, may be empty
    std::optional<int> restrict_to_edge;  // only matchings containing this edge are constrained

    explicit SearchProblem(MultiGraph g)
        : host(std::move(g)), fixed(host.m()) {}
    SearchProblem(MultiGraph g, PartialOrientation f)
        : host(std::move(g)), fixed(std::move(f)) {
        if (static_cast<int>(fixed.dir.size()) != host.m())
            throw std::invalid_argument("SearchProblem: orientation size mismatch");
    }
};

struct Certificate {
    enum class Kind { OrientationFound, Refuted, GoodMatching };
    Kind kind = Kind::Refuted;
    PartialOrientation orientation;                          // when found
    std::vector<std::pair<PerfectMatching, Bond>> witnesses; // matching -> directed bond
    PerfectMatching good_matching;                           // sweep mode: a matching with no directed cut
    bool vacuous = false;  // no perfect matching existed: success by emptiness
    struct Stats {
        long long nodes_explored = 0;
        long long matchings_considered = 0;
    } stats;
};

namespace detail {

struct ConstrainedMatching {
    PerfectMatching matching;
    std::vector<Bond> bonds;  // bonds lying inside the matching, by ascending size then lex
};

inline std::vector<ConstrainedMatching> constrained_matchings(const SearchProblem& p) {
    std::vector<ConstrainedMatching> out;
    for (const auto& m : all_perfect_matchings(p.host)) {
        if (p.restrict_to_edge &&
            !std::binary_search(m.begin(), m.end(), *p.restrict_to_edge))
            continue;
        ConstrainedMatching cm{m, bonds_within_matching(p.host, m)};
        std::sort(cm.bonds.begin(), cm.bonds.end(), [](const Bond& x, const Bond& y) {
            if (x.cut_edges.size() != y.cut_edges.size())
                return x.cut_edges.size() < y.cut_edges.size();
            return x.cut_edges < y.cut_edges;
        });
        out.push_back(std::move(cm));
    }
    // fewest bonds first: single-bond matchings are forced moves
    std::stable_sort(out.begin(), out.end(),
                     [](const ConstrainedMatching& a, const ConstrainedMatching& b) {
                         if (a.bonds.size() != b.bonds.size())
                             return a.bonds.size() < b.bonds.size();
                         return a.matching < b.matching;
                     });
    return out;
}

// Directions a bond can take: all edges out of the side containing vertex 0's
// complement first (i.e. into Bond::side), then the reverse.
inline std::optional<std::vector<std::pair<int, EdgeDir>>> bond_direction_delta(
    const MultiGraph& g, const PartialOrientation& o, const Bond& b, bool into_side) {
    std::vector<char> in_side(g.n, 0);
    for (int v : b.side) in_side[v] = 1;
    std::vector<std::pair<int, EdgeDir>> delta;
    for (int e : b.cut_edges) {
        bool a_in = in_side[g.edges[e].a];
        // into_side: arcs point toward the side; otherwise away from it
        EdgeDir need = (a_in != into_side) ? EdgeDir::Forward : EdgeDir::Backward;
        if (o.dir[e] == need) continue;
        if (o.dir[e] != EdgeDir::Undirected) return std::nullopt;
        delta.push_back({e, need});
    }
    return delta;
}

}  // namespace detail

// Branching search: does some extension of p.fixed direct a bond inside every
// constrained perfect matching?
inline Certificate exists_orientation_all_pm_cut(const SearchProblem& p) {
    if (!is_cubic(p.host) || !is_connected(p.host))
        throw std::invalid_argument("exists_orientation_all_pm_cut: host must be cubic connected");
    if (p.restrict_to_edge && (*p.restrict_to_edge < 0 || *p.restrict_to_edge >= p.host.m()))
        throw std::invalid_argument("exists_orientation_all_pm_cut: restrict-to-edge not in host");

    Certificate cert;
    auto cms = detail::constrained_matchings(p);
    cert.stats.matchings_considered = static_cast<long long>(cms.size());
    if (cms.empty()) {
        cert.kind = Certificate::Kind::OrientationFound;
        cert.orientation = p.fixed;
        cert.vacuous = true;
        return cert;
    }

    PartialOrientation sigma = p.fixed;
    long long nodes = 0;

    auto covered = [&](const detail::ConstrainedMatching& cm) -> const Bond* {
        for (const Bond& b : cm.bonds)
            if (bond_is_directed(p.host, sigma, b)) return &b;
        return nullptr;
    };

    auto rec = [&](auto&& self) -> bool {
        ++nodes;
        const detail::ConstrainedMatching* open = nullptr;
        for (const auto& cm : cms)
            if (!covered(cm)) {
                open = &cm;
                break;
            }
        if (!open) return true;
        for (const Bond& b : open->bonds) {
            for (bool into_side : {true, false}) {
                auto delta = detail::bond_direction_delta(p.host, sigma, b, into_side);
                if (!delta) continue;
                for (auto [e, d] : *delta) sigma.dir[e] = d;
                if (self(self)) return true;
                for (auto [e, d] : *delta) sigma.dir[e] = EdgeDir::Undirected;
            }
        }
        return false;
    };

    if (rec(rec)) {
        cert.kind = Certificate::Kind::OrientationFound;
        cert.orientation = sigma;
        for (const auto& cm : cms) {
            const Bond* b = covered(cm);
            cert.witnesses.push_back({cm.matching, *b});
        }
    } else {
        cert.kind = Certificate::Kind::Refuted;
    }
    cert.stats.nodes_explored = nodes;
    return cert;
}

// a-arc test for edge e of g: can g be oriented so that every perfect matching
// through e contains a directed cut?  By reversal symmetry e is fixed
// min-endpoint -> max-endpoint when no other arcs are pre-directed.
inline Certificate can_edge_be_a_arc(const MultiGraph& g, int e,
                                     PartialOrientation fixed = {}) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("can_edge_be_a_arc: edge not in g");
    if (fixed.dir.empty()) fixed = PartialOrientation(g.m());
    SearchProblem p(g, std::move(fixed));
    p.restrict_to_edge = e;
    if (p.fixed.dir[e] == EdgeDir::Undirected) p.fixed.dir[e] = EdgeDir::Forward;
    return exists_orientation_all_pm_cut(p);
}

struct SweepReport {
    bool all_pass = true;
    long long checked = 0;
    long long passed = 0;
    std::optional<PartialOrientation> counterexample;  // first failing orientation
};

// Apply check to every full orientation of g (2^m states), optionally only one
// representative per automorphism orbit.
template <typename Check>
SweepReport sweep_all_orientations(const MultiGraph& g, Check&& check,
                                   bool up_to_symmetry = false) {
    if (g.m() > 24)
        throw std::invalid_argument(
            "sweep_all_orientations: more than 2^24 states; use symmetry mode on a smaller host");
    const int m = g.m();

    // automorphism action on orientation bitmasks: edge e maps to edge
    // image[e], flipping the bit when the endpoints map in reverse order
    std::vector<std::pair<std::vector<int>, std::uint32_t>> edge_perms;
    if (up_to_symmetry) {
        for (const auto& perm : automorphisms(g)) {
            std::vector<int> image(m);
            std::uint32_t flip = 0;
            for (int e = 0; e < m; ++e) {
                int a = perm[g.edges[e].a], b = perm[g.edges[e].b];
                int lo = std::min(a, b), hi = std::max(a, b);
                int img = -1;
                for (int f = 0; f < m; ++f)
                    if (g.edges[f].a == lo && g.edges[f].b == hi) {
                        img = f;
                        break;
                    }
                image[e] = img;
                if (a > b) flip |= 1u << img;
            }
            edge_perms.push_back({std::move(image), flip});
        }
    }

    SweepReport rep;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        if (up_to_symmetry) {
            bool minimal = true;
            for (const auto& [image, flip] : edge_perms) {
                std::uint32_t mapped = 0;
                for (int e = 0; e < m; ++e)
                    if (bits >> e & 1) mapped |= 1u << image[e];
                mapped ^= flip;
                if (mapped < bits) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
        }
        PartialOrientation o(m);
        for (int e = 0; e < m; ++e)
            o.dir[e] = (bits >> e & 1) ? EdgeDir::Backward : EdgeDir::Forward;
        ++rep.checked;
        if (check(o)) {
            ++rep.passed;
        } else {
            rep.all_pass = false;
            if (!rep.counterexample) rep.counterexample = o;
        }
    }
    return rep;
}

struct VerifyResult {
    bool ok = true;
    std::string reason;
};

// Independent re-check of a certificate; never trusts search internals.
inline VerifyResult verify_certificate(const Certificate& c, const SearchProblem& p) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };

    std::vector<PerfectMatching> constrained;
    for (const auto& m : all_perfect_matchings(p.host)) {
        if (p.restrict_to_edge &&
            !std::binary_search(m.begin(), m.end(), *p.restrict_to_edge))
            continue;
        constrained.push_back(m);
    }

    switch (c.kind) {
        case Certificate::Kind::Refuted:
            return {};  // negative claims carry no checkable witness
        case Certificate::Kind::GoodMatching: {
            if (!is_perfect_matching(p.host, c.good_matching))
                return fail("good-matching witness is not a perfect matching");
            if (!c.orientation.is_full())
                return fail("good-matching requires a full orientation");
            if (directed_cut_in_matching(p.host, c.orientation, c.good_matching))
                return fail("good-matching witness contains a directed cut");
            return {};
        }
        case Certificate::Kind::OrientationFound:
            break;
    }

    if (static_cast<int>(c.orientation.dir.size()) != p.host.m())
        return fail("orientation size mismatch");
    if (!c.orientation.extends(p.fixed)) return fail("orientation does not extend fixed arcs");
    if (c.vacuous) {
        if (!constrained.empty()) return fail("vacuous certificate but matchings exist");
        return {};
    }
    if (c.witnesses.size() != constrained.size())
        return fail("witnesses do not cover exactly the constrained matchings");
    std::vector<PerfectMatching> witnessed;
    for (const auto& [m, b] : c.witnesses) {
        witnessed.push_back(m);
        if (!is_perfect_matching(p.host, m)) return fail("witness matching invalid");
        std::vector<char> in_m(p.host.m(), 0);
        for (int e : m) in_m[e] = 1;
        for (int e : b.cut_edges)
            if (!in_m[e]) return fail("witness bond not contained in its matching");
        std::vector<char> side(p.host.n, 0);
        for (int v : b.side) side[v] = 1;
        if (!is_bond(p.host, side)) return fail("witness side is not a bond");
        auto cut = boundary_edges(p.host, side);
        std::sort(cut.begin(), cut.end());
        auto ce = b.cut_edges;
        std::sort(ce.begin(), ce.end());
        if (cut != ce) return fail("witness cut edges do not match the side boundary");
        if (!bond_is_directed(p.host, c.orientation, b))
            return fail("witness bond is not directed");
    }
    std::sort(witnessed.begin(), witnessed.end());
    auto sorted_constrained = constrained;
    std::sort(sorted_constrained.begin(), sorted_constrained.end());
    if (witnessed != sorted_constrained)
        return fail("witnesses do not cover exactly the constrained matchings");
    return {};
}

}  // namespace pmcuts
