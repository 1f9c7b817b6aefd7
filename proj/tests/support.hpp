#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "precol/patch.hpp"

namespace precol::testing {

inline PartialColoring labels_on(int n, const std::vector<Vertex>& vs, const std::vector<int>& labels) {
    PartialColoring out(n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        out[vs[i]] = Color4::from_label(labels[i]);
    return out;
}

inline HuedPatch hued(const PlaneGraph& g) {
    Patch p = validate_patch(g);
    auto hue = compute_hues(p);
    return HuedPatch::make(std::move(p), std::move(hue));
}

/// Copy of g with vertex v renamed perm[v].
inline PlaneGraph relabel(const PlaneGraph& g, const std::vector<Vertex>& perm) {
    std::vector<std::vector<Vertex>> rot(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.rotation(v))
            rot[perm[v]].push_back(perm[w]);
    const Dart outer = g.outer_dart();
    return PlaneGraph(std::move(rot), Dart{perm[outer.from], perm[outer.to]});
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Every assignment of `colors` colors, checked edge by edge.
inline bool brute_force_extends(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& precolor, int colors) {
    std::vector<int> c(n, 0);
    for (;;) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = precolor[v] < 0 || precolor[v] == c[v];
        for (std::size_t e = 0; e < edges.size() && ok; ++e)
            ok = c[edges[e].first] != c[edges[e].second];
        if (ok)
            return true;
        int v = 0;
        while (v < n && ++c[v] == colors)
            c[v++] = 0;
        if (v == n)
            return false;
    }
}

} // namespace precol::testing
