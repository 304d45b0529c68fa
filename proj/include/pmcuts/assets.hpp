#ifndef PMCUTS_ASSETS_HPP
#define PMCUTS_ASSETS_HPP

#include <cmath>
#include <vector>

#include "pmcuts/embedding.hpp"
#include "pmcuts/graph.hpp"

namespace pmcuts::assets {

inline MultiGraph k4() {
    return from_sorted_edge_set(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline MultiGraph k33() {
    return from_sorted_edge_set(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline MultiGraph triangle() { return from_sorted_edge_set(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MultiGraph prism() {
    return from_sorted_edge_set(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// 3-cube: outer square 0..3, inner square 4..7, spokes i -- i+4
inline MultiGraph q3() {
    return from_sorted_edge_set(8, {{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {0, 3},
                                    {4, 5},
                                    {5, 6},
                                    {6, 7},
                                    {4, 7},
                                    {0, 4},
                                    {1, 5},
                                    {2, 6},
                                    {3, 7}});
}

inline MultiGraph octahedron() {
    // all pairs except the antipodal ones (0,3), (1,4), (2,5)
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (b - a != 3) es.push_back({a, b});
    return from_sorted_edge_set(6, es);
}

// outer 5-cycle 0..4, spokes i -- i+5, inner pentagram step 2
inline MultiGraph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return from_sorted_edge_set(10, es);
}

// Three heptagons with chord steps 1, 2, 3 plus a seventh of hub vertices.
inline MultiGraph coxeter() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i) {
        es.push_back({i, (i + 1) % 7});            // step-1 cycle a
        es.push_back({7 + i, 7 + (i + 2) % 7});    // step-2 cycle b
        es.push_back({14 + i, 14 + (i + 3) % 7});  // step-3 cycle c
        es.push_back({21 + i, i});
        es.push_back({21 + i, 7 + i});
        es.push_back({21 + i, 14 + i});
    }
    return from_sorted_edge_set(28, es);
}

// Tutte's 46-vertex counterexample to Tait's conjecture.
inline MultiGraph tutte46() {
    return from_sorted_edge_set(
        46,
        {{0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 26},  {2, 10},  {2, 11},  {3, 18},
         {3, 19},  {4, 5},   {4, 33},  {5, 6},   {5, 29},  {6, 7},   {6, 27},  {7, 8},
         {7, 14},  {8, 9},   {8, 38},  {9, 10},  {9, 37},  {10, 39}, {11, 12}, {11, 39},
         {12, 13}, {12, 35}, {13, 14}, {13, 15}, {14, 34}, {15, 16}, {15, 22}, {16, 17},
         {16, 44}, {17, 18}, {17, 43}, {18, 45}, {19, 20}, {19, 45}, {20, 21}, {20, 41},
         {21, 22}, {21, 23}, {22, 40}, {23, 24}, {23, 27}, {24, 25}, {24, 32}, {25, 26},
         {25, 31}, {26, 33}, {27, 28}, {28, 29}, {28, 32}, {29, 30}, {30, 31}, {30, 33},
         {31, 32}, {34, 35}, {34, 38}, {35, 36}, {36, 37}, {36, 39}, {37, 38}, {40, 41},
         {40, 44}, {41, 42}, {42, 43}, {42, 45}, {43, 44}});
}

// Rotation system from a straight-line drawing: neighbors sorted by angle.
// The Euler check in faces() validates the drawing.
inline PlaneEmbedding embedding_from_coords(const MultiGraph& g,
                                            const std::vector<std::pair<double, double>>& xy) {
    PlaneEmbedding emb;
    emb.graph = g;
    emb.rotation.assign(g.n, {});
    auto adj = g.adjacency();
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<double, int>> by_angle;
        for (auto [w, e] : adj[v])
            by_angle.push_back({std::atan2(xy[w].second - xy[v].second,
                                           xy[w].first - xy[v].first),
                                e});
        std::sort(by_angle.begin(), by_angle.end());
        for (auto [ang, e] : by_angle) emb.rotation[v].push_back(e);
    }
    return emb;
}

inline PlaneEmbedding k4_embedded() {
    return embedding_from_coords(k4(), {{0, 0}, {4, 0}, {2, 3}, {2, 1}});
}

inline PlaneEmbedding triangle_embedded() {
    return embedding_from_coords(triangle(), {{0, 0}, {4, 0}, {2, 3}});
}

inline PlaneEmbedding prism_embedded() {
    return embedding_from_coords(
        prism(), {{0, 0}, {8, 0}, {4, 6}, {3, 1.5}, {5, 1.5}, {4, 3.5}});
}

inline PlaneEmbedding q3_embedded() {
    return embedding_from_coords(
        q3(), {{0, 0}, {8, 0}, {8, 8}, {0, 8}, {2, 2}, {6, 2}, {6, 6}, {2, 6}});
}

inline PlaneEmbedding octahedron_embedded() {
    return embedding_from_coords(octahedron(), {{0, 10},
                                                {-9, -5},
                                                {9, -5},
                                                {0, -2.2},
                                                {1.9, 1.1},
                                                {-1.9, 1.1}});
}

}  // namespace pmcuts::assets

#endif
