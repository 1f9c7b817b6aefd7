#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "precol/patch.hpp"

namespace precol {

struct GridStep {
    std::int64_t di = 0;
    std::int64_t dj = 0;

    constexpr GridStep operator-() const { return {-di, -dj}; }
    constexpr GridStep operator+(GridStep o) const { return {di + o.di, dj + o.dj}; }
    friend constexpr bool operator==(GridStep, GridStep) = default;
};

/// Vertex (i, j) of the dappled triangular grid.
struct GridPoint {
    std::int64_t i = 0;
    std::int64_t j = 0;

    constexpr GridPoint operator+(GridStep s) const { return {i + s.di, j + s.dj}; }
    constexpr GridPoint operator-(GridStep s) const { return {i - s.di, j - s.dj}; }
    constexpr GridStep operator-(GridPoint o) const { return {i - o.i, j - o.j}; }

    friend constexpr bool operator==(GridPoint, GridPoint) = default;
    friend constexpr auto operator<=>(GridPoint, GridPoint) = default;
};

/// The six unit steps in counterclockwise order when (i, j) are drawn as
/// plane coordinates.
inline constexpr std::array<GridStep, 6> kGridSteps{
    GridStep{1, 0}, GridStep{1, 1}, GridStep{0, 1}, GridStep{-1, 0}, GridStep{-1, -1}, GridStep{0, -1}};

Hue grid_hue(GridPoint p);
Color4 grid_color(GridPoint p);
bool grid_adjacent(GridPoint p, GridPoint q);
/// Graph distance in the grid.
std::int64_t grid_distance(GridPoint p, GridPoint q);

/// Image of a vertex-indexed graph in the grid.
using GridHom = std::vector<GridPoint>;

/// +1 when a == b + c (integer sum), -1 otherwise. a in {1,2}, bc nonzero.
int sigma(int a, Color4 bc);

/// Grid displacement forced along an edge from u to v. Throws ImproperColoring
/// when the hues or the colors of the endpoints agree.
GridStep edge_delta(Hue hue_u, Color4 color_u, Hue hue_v, Color4 color_v);

/// Sum of edge deltas along a vertex walk.
GridStep walk_delta(std::span<const Vertex> walk, std::span<const Hue> hue, std::span<const Color4> color);

/// f(v) = image + delta(anchor, v), extended along a BFS tree. Throws
/// Precondition when image does not carry the anchor's hue and color.
GridHom build_homomorphism(const DappledPatch& g, Vertex anchor, GridPoint image);

/// Edge, hue and color preservation on the listed edges and vertices.
bool is_grid_homomorphism(std::span<const Dart> edges, std::span<const Hue> hue, std::span<const Color4> color,
                          const GridHom& f);

/// Lexicographically smallest point of [0,5]^2 with the given hue and color.
GridPoint canonical_point(Hue h, Color4 k);

/// The neighbour of p with hue h and color k, if there is one.
std::optional<GridPoint> step_neighbor(GridPoint p, Hue h, Color4 k);

/// Homomorphism of the connected hued graph (num_vertices, edges) with
/// coloring `color`, anchored at vertex 0 on its canonical point; empty when
/// the coloring is not viable. Throws ImproperColoring.
std::optional<GridHom> check_viability(int num_vertices, std::span<const Dart> edges, std::span<const Hue> hue,
                                       std::span<const Color4> color);

/// Same for a cycle given by its hue and color sequence; the result is the
/// image of each cycle position.
std::optional<std::vector<GridPoint>> check_viability_cycle(std::span<const Hue> hue,
                                                            std::span<const Color4> color);

struct Hexagon {
    GridPoint center;

    Hue central_hue() const { return grid_hue(center); }
    Color4 central_color() const { return grid_color(center); }
    bool contains(GridPoint p) const { return p == center || grid_adjacent(p, center); }
    std::array<GridPoint, 7> points() const;
};

/// Retraction of the hued grid onto the hexagon: hue-preserving, edge-preserving
/// and the identity on the hexagon.
GridPoint hexagon_retraction(const Hexagon& x, GridPoint p);

/// Distance from (0,0) to q in the hue-{0,1} subgraph of the grid with the
/// edge (0,0)-(0,1) removed, searching only points inside [lo, hi]. Returns -1
/// when q is unreachable inside the box.
std::int64_t hex_lattice_distance(GridPoint q, GridPoint lo, GridPoint hi);

} // namespace precol
