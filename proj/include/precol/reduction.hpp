#pragma once

#include <array>
#include <optional>
#include <vector>

#include "precol/patch.hpp"
#include "precol/tri_grid.hpp"

namespace precol {

/// A hexagon whose closed neighbourhood contains the boundary image.
struct SingleHexagonCertificate {
    Hexagon hexagon;
    std::vector<GridPoint> boundary_image;  // aligned with the boundary order
};

/// Centre whose closed neighbourhood holds every image point, preferring a
/// hue that no image point carries, then the lexicographically smallest;
/// empty when no hexagon contains them all.
std::optional<SingleHexagonCertificate> find_hexagon(std::span<const GridPoint> image);

/// 3-precoloring extension instance on the vertices whose hue differs from
/// the central hue. Vertex i of the instance is to_parent[i] in the patch.
struct ThreeColoringInstance {
    std::vector<std::vector<int>> adj;
    std::vector<Vertex> to_parent;
    std::vector<int> precolor;          // palette index or -1
    std::array<Color4, 3> palette{};

    int num_vertices() const { return static_cast<int>(adj.size()); }
};

/// Throws InvalidCertificate if a boundary vertex has the central color
/// without the central hue or vice versa.
ThreeColoringInstance reduce_to_bipartite(const HuedPatch& g, const SingleHexagonCertificate& cert,
                                          const PartialColoring& precoloring);

/// Exact search: unit propagation over palette bitmasks plus branching on a
/// smallest domain. Returns palette indices per instance vertex.
std::optional<std::vector<int>> solve_3precoloring(const ThreeColoringInstance& inst);

/// Central color on the central hue, palette colors elsewhere. Throws
/// std::logic_error if the result is improper or disagrees with the
/// precoloring.
Coloring lift_coloring(const ThreeColoringInstance& inst, const std::vector<int>& solution,
                       const SingleHexagonCertificate& cert, const HuedPatch& g, const PartialColoring& precoloring);

enum class HexagonStage { Extends, NotViable, NotSingleHexagon, No3Coloring };

const char* to_string(HexagonStage stage);

struct HexagonVerdict {
    HexagonStage stage = HexagonStage::NotViable;
    std::optional<Coloring> coloring;
    std::optional<SingleHexagonCertificate> certificate;
    std::optional<std::vector<GridPoint>> boundary_image;
};

/// Throws ImproperColoring if two adjacent precolored vertices share a color,
/// Precondition if the precoloring misses a boundary vertex or colors an
/// internal one.
HexagonVerdict decide_single_hexagon(const HuedPatch& g, const PartialColoring& precoloring);

/// Shared input check for boundary precolorings.
void check_boundary_precoloring(const HuedPatch& g, const PartialColoring& precoloring);

} // namespace precol
