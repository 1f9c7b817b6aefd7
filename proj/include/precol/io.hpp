#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "precol/patch.hpp"
#include "precol/tri_grid.hpp"

namespace precol {

/// Instance file:
///   {"vertices": n, "rotations": [[ccw neighbours]...], "outer": [u, v],
///    "hues": [...], "colors": [[b0, b1] | null ...],
///    "boundary_coloring": [[v, [b0, b1]]...], "seed": s}
/// hues, colors, boundary_coloring and seed are optional. A color [b0, b1]
/// is label 2*b0 + b1 + 1.
struct Instance {
    int vertices = 0;
    std::vector<std::vector<Vertex>> rotations;
    Dart outer;
    std::optional<std::vector<Hue>> hues;
    std::optional<PartialColoring> colors;
    std::vector<std::pair<Vertex, Color4>> boundary_coloring;
    std::optional<std::uint64_t> seed;

    PlaneGraph graph() const;
    /// colors merged with boundary_coloring; Parse error when they disagree.
    PartialColoring precoloring() const;
};

/// Throws Error(Parse) on a malformed document.
Instance parse_instance(const nlohmann::json& doc);
Instance read_instance(const std::string& path);

nlohmann::json to_json(const Instance& inst);
nlohmann::json color_json(Color4 c);
Color4 parse_color(const nlohmann::json& j);
nlohmann::json point_json(GridPoint p);
GridPoint parse_point(const nlohmann::json& j);

Instance instance_of(const PlaneGraph& g);

/// Boundary colorings listed in boundary order.
void set_boundary_coloring(Instance& inst, const std::vector<Vertex>& boundary, const PartialColoring& coloring);

} // namespace precol
