#include "precol/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace precol {

std::optional<SingleHexagonCertificate> find_hexagon(std::span<const GridPoint> image) {
    if (image.empty())
        return std::nullopt;
    // Centres off the image's hues first: then no boundary vertex is pinned
    // to the central color.
    auto key = [&](GridPoint c) {
        const bool hue_on_image = std::any_of(image.begin(), image.end(),
                                              [&](GridPoint p) { return grid_hue(p) == grid_hue(c); });
        return std::pair{hue_on_image, c};
    };
    std::optional<GridPoint> best;
    for (GridPoint c : Hexagon{image.front()}.points()) {
        const Hexagon x{c};
        if (std::all_of(image.begin(), image.end(), [&](GridPoint p) { return x.contains(p); }))
            if (!best || key(c) < key(*best))
                best = c;
    }
    if (!best)
        return std::nullopt;
    return SingleHexagonCertificate{Hexagon{*best}, std::vector<GridPoint>(image.begin(), image.end())};
}

void check_boundary_precoloring(const HuedPatch& g, const PartialColoring& precoloring) {
    const PlaneGraph& graph = g.graph();
    const int n = graph.num_vertices();
    if (static_cast<int>(precoloring.size()) != n)
        throw Error(ErrorKind::Precondition, "precoloring has the wrong size");
    for (Vertex v = 0; v < n; ++v) {
        if (g.patch.on_boundary(v) && !precoloring[v])
            throw Error(ErrorKind::Precondition, "boundary vertex " + std::to_string(v) + " is uncolored");
        if (!g.patch.on_boundary(v) && precoloring[v])
            throw Error(ErrorKind::Precondition, "internal vertex " + std::to_string(v) + " is precolored");
    }
    for (Dart e : graph.edges())
        if (precoloring[e.from] && precoloring[e.to] && *precoloring[e.from] == *precoloring[e.to])
            throw Error(ErrorKind::ImproperColoring,
                        "edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + " has equal colors");
}

ThreeColoringInstance reduce_to_bipartite(const HuedPatch& g, const SingleHexagonCertificate& cert,
                                          const PartialColoring& precoloring) {
    const Hue c = cert.hexagon.central_hue();
    const Color4 k = cert.hexagon.central_color();
    const PlaneGraph& graph = g.graph();
    const int n = graph.num_vertices();

    ThreeColoringInstance inst;
    int slot = 0;
    for (int code = 0; code < 4; ++code)
        if (code != k.code)
            inst.palette[slot++] = Color4::from_code(code);

    std::vector<int> local(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        const auto& col = precoloring[v];
        if (g.hue[v] == c) {
            if (col && *col != k)
                throw Error(ErrorKind::InvalidCertificate,
                            "vertex " + std::to_string(v) + " has the central hue but not the central color");
            continue;
        }
        if (col && *col == k)
            throw Error(ErrorKind::InvalidCertificate,
                        "vertex " + std::to_string(v) + " has the central color but not the central hue");
        local[v] = static_cast<int>(inst.to_parent.size());
        inst.to_parent.push_back(v);
        int index = -1;
        if (col)
            for (int i = 0; i < 3; ++i)
                if (inst.palette[i] == *col)
                    index = i;
        inst.precolor.push_back(index);
    }
    inst.adj.resize(inst.to_parent.size());
    for (Dart e : graph.edges())
        if (local[e.from] >= 0 && local[e.to] >= 0) {
            inst.adj[local[e.from]].push_back(local[e.to]);
            inst.adj[local[e.to]].push_back(local[e.from]);
        }
    return inst;
}

namespace {

class ThreeColorSearch {
public:
    explicit ThreeColorSearch(const ThreeColoringInstance& inst) : inst_(inst), domain_(inst.num_vertices(), 7) {}

    std::optional<std::vector<int>> run() {
        std::vector<int> forced;
        for (int v = 0; v < inst_.num_vertices(); ++v)
            if (inst_.precolor[v] >= 0) {
                if (!(domain_[v] & (1 << inst_.precolor[v])))
                    return std::nullopt;
                domain_[v] = 1 << inst_.precolor[v];
                forced.push_back(v);
            }
        for (int v : forced)
            if (!propagate(v))
                return std::nullopt;
        if (!search())
            return std::nullopt;
        std::vector<int> out(inst_.num_vertices());
        for (int v = 0; v < inst_.num_vertices(); ++v)
            out[v] = std::countr_zero(static_cast<unsigned>(domain_[v]));
        return out;
    }

private:
    // Removes the fixed color of v from its neighbours, fixing any neighbour
    // left with a single color.
    bool propagate(int start) {
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const int bit = domain_[v];
            for (int w : inst_.adj[v]) {
                if (!(domain_[w] & bit))
                    continue;
                trail_.emplace_back(w, domain_[w]);
                domain_[w] &= ~bit;
                if (domain_[w] == 0)
                    return false;
                if (std::popcount(static_cast<unsigned>(domain_[w])) == 1)
                    stack.push_back(w);
            }
        }
        return true;
    }

    bool search() {
        int best = -1;
        int best_size = 4;
        for (int v = 0; v < inst_.num_vertices(); ++v) {
            const int size = std::popcount(static_cast<unsigned>(domain_[v]));
            if (size > 1 && size < best_size) {
                best = v;
                best_size = size;
            }
        }
        if (best < 0)
            return true;
        for (int color = 0; color < 3; ++color) {
            if (!(domain_[best] & (1 << color)))
                continue;
            const std::size_t mark = trail_.size();
            trail_.emplace_back(best, domain_[best]);
            domain_[best] = 1 << color;
            if (propagate(best) && search())
                return true;
            while (trail_.size() > mark) {
                domain_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }
        return false;
    }

    const ThreeColoringInstance& inst_;
    std::vector<int> domain_;
    std::vector<std::pair<int, int>> trail_;
};

} // namespace

std::optional<std::vector<int>> solve_3precoloring(const ThreeColoringInstance& inst) {
    return ThreeColorSearch(inst).run();
}

Coloring lift_coloring(const ThreeColoringInstance& inst, const std::vector<int>& solution,
                       const SingleHexagonCertificate& cert, const HuedPatch& g, const PartialColoring& precoloring) {
    const PlaneGraph& graph = g.graph();
    Coloring out(graph.num_vertices(), cert.hexagon.central_color());
    for (int i = 0; i < inst.num_vertices(); ++i)
        out[inst.to_parent[i]] = inst.palette[solution[i]];
    for (Dart e : graph.edges())
        if (out[e.from] == out[e.to])
            throw std::logic_error("lifted coloring is improper");
    for (Vertex v = 0; v < graph.num_vertices(); ++v)
        if (precoloring[v] && *precoloring[v] != out[v])
            throw std::logic_error("lifted coloring disagrees with the precoloring");
    return out;
}

const char* to_string(HexagonStage stage) {
    switch (stage) {
    case HexagonStage::Extends: return "Extends";
    case HexagonStage::NotViable: return "NotViable";
    case HexagonStage::NotSingleHexagon: return "NotSingleHexagon";
    case HexagonStage::No3Coloring: return "No3Coloring";
    }
    return "Unknown";
}

HexagonVerdict decide_single_hexagon(const HuedPatch& g, const PartialColoring& precoloring) {
    check_boundary_precoloring(g, precoloring);
    const auto& boundary = g.boundary();
    std::vector<Hue> hues;
    Coloring colors;
    for (Vertex v : boundary) {
        hues.push_back(g.hue[v]);
        colors.push_back(*precoloring[v]);
    }

    HexagonVerdict verdict;
    const auto image = check_viability_cycle(hues, colors);
    if (!image) {
        verdict.stage = HexagonStage::NotViable;
        return verdict;
    }
    verdict.boundary_image = *image;
    verdict.certificate = find_hexagon(*image);
    if (!verdict.certificate) {
        verdict.stage = HexagonStage::NotSingleHexagon;
        return verdict;
    }
    const ThreeColoringInstance inst = reduce_to_bipartite(g, *verdict.certificate, precoloring);
    const auto solution = solve_3precoloring(inst);
    if (!solution) {
        verdict.stage = HexagonStage::No3Coloring;
        return verdict;
    }
    verdict.coloring = lift_coloring(inst, *solution, *verdict.certificate, g, precoloring);
    verdict.stage = HexagonStage::Extends;
    return verdict;
}

} // namespace precol
