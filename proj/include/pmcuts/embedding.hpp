#ifndef PMCUTS_EMBEDDING_HPP
#define PMCUTS_EMBEDDING_HPP

#include <stdexcept>
#include <vector>

#include "pmcuts/graph.hpp"

namespace pmcuts {

// Rotation system: for each vertex, the cyclic (counterclockwise) order of
// incident edge ids. Encodes a combinatorial embedding; for the planar
// instances in this project face tracing must satisfy Euler's relation.
struct PlaneEmbedding {
    MultiGraph graph;
    std::vector<std::vector<int>> rotation;
};

// A dart is a traversal of edge e out of vertex `from`.
struct Dart {
    int edge;
    int from;
    bool operator==(const Dart&) const = default;
};

// A face boundary walk as the dart sequence along it.
struct Face {
    std::vector<Dart> walk;
};

namespace detail {

inline int rotation_index(const PlaneEmbedding& emb, int v, int e) {
    const auto& rot = emb.rotation[v];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == e) return static_cast<int>(i);
    throw std::logic_error("edge missing from rotation");
}

// Face successor: arriving at w along e, leave along the rotation successor
// of e at w. With counterclockwise rotations this walks the face on the left
// of each dart.
inline Dart face_next(const PlaneEmbedding& emb, const Dart& d) {
    int w = emb.graph.other(d.edge, d.from);
    int idx = rotation_index(emb, w, d.edge);
    const auto& rot = emb.rotation[w];
    int nxt = rot[(idx + 1) % rot.size()];
    return {nxt, w};
}

}  // namespace detail

inline void validate_rotation(const PlaneEmbedding& emb) {
    const MultiGraph& g = emb.graph;
    if (static_cast<int>(emb.rotation.size()) != g.n)
        throw std::invalid_argument("rotation size does not match vertex count");
    std::vector<int> uses(g.m(), 0);
    for (int v = 0; v < g.n; ++v)
        for (int e : emb.rotation[v]) {
            if (e < 0 || e >= g.m()) throw std::invalid_argument("rotation mentions unknown edge");
            if (!g.incident(e, v))
                throw std::invalid_argument("rotation mentions non-incident edge");
            ++uses[e];
        }
    for (int e = 0; e < g.m(); ++e)
        if (uses[e] != 2) throw std::invalid_argument("each edge must appear in both rotations");
}

// Face tracing. Every dart lies on exactly one traced face; for connected
// hosts Euler's relation n - m + f = 2 is enforced.
inline std::vector<Face> faces(const PlaneEmbedding& emb, bool require_planar = true) {
    validate_rotation(emb);
    const MultiGraph& g = emb.graph;
    // dart index: edge * 2 + (0 if from == edge.a else 1)
    auto dart_id = [&](const Dart& d) { return d.edge * 2 + (d.from == g.edges[d.edge].a ? 0 : 1); };
    std::vector<char> seen(2 * g.m(), 0);
    std::vector<Face> out;
    for (int e = 0; e < g.m(); ++e)
        for (int side = 0; side < 2; ++side) {
            Dart start{e, side == 0 ? g.edges[e].a : g.edges[e].b};
            if (seen[dart_id(start)]) continue;
            Face f;
            Dart d = start;
            do {
                if (seen[dart_id(d)]) throw std::invalid_argument("face trace does not close");
                seen[dart_id(d)] = 1;
                f.walk.push_back(d);
                d = detail::face_next(emb, d);
            } while (!(d == start));
            out.push_back(std::move(f));
        }
    if (require_planar && is_connected(g)) {
        long long euler = static_cast<long long>(g.n) - g.m() + static_cast<long long>(out.size());
        if (euler != 2) throw std::invalid_argument("embedding is not planar (Euler check failed)");
    }
    return out;
}

inline int face_count(const PlaneEmbedding& emb) { return static_cast<int>(faces(emb).size()); }

}  // namespace pmcuts

#endif
