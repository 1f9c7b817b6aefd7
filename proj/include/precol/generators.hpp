#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "precol/patch.hpp"
#include "precol/tri_grid.hpp"

namespace precol {

/// A sub-patch of the grid together with the grid point of every vertex.
struct GridWindow {
    DappledPatch patch;
    std::vector<GridPoint> points;
};

/// Triangle of the grid: up = (i,j),(i+1,j),(i+1,j+1); down = (i,j),(i+1,j+1),(i,j+1).
struct GridTriangle {
    std::int64_t i = 0;
    std::int64_t j = 0;
    bool up = true;

    std::array<GridPoint, 3> corners() const;
    std::array<GridTriangle, 3> neighbours() const;
    friend auto operator<=>(const GridTriangle&, const GridTriangle&) = default;
};

/// Builds the window spanned by the triangles; throws when they do not form
/// a disk bounded by a cycle.
GridWindow grid_window_from_triangles(std::span<const GridTriangle> triangles);

/// Random disk of about `triangles` grid triangles at a random offset in
/// [0,6)^2, grown one edge-adjacent triangle at a time.
GridWindow gen_grid_window(std::uint64_t seed, int triangles);

/// Random disk quadrangulation with `quads` internal faces, grown by gluing
/// quads onto one, two or three consecutive boundary edges.
PlaneGraph gen_near_quadrangulation(std::uint64_t seed, int quads);

/// Colors read off a random closed grid walk whose hues follow `hues`.
/// Empty after 10^4 failed attempts.
std::optional<Coloring> gen_viable_cycle_coloring(std::uint64_t seed, std::span<const Hue> hues);

/// Isomorphism invariant of a plane graph with its outer face: the least BFS
/// code over all roots on the outer face, in both orientations.
std::vector<int> canonical_form(const PlaneGraph& g);

/// Proper colorings of a cycle with labels in [0, colors). With
/// up_to_permutation only restricted-growth sequences are produced.
void for_each_cycle_coloring(int length, int colors, bool up_to_permutation,
                             const std::function<void(const std::vector<int>&)>& visit);

/// Every window spanned by edge-connected triangles inside the points
/// [0, size)^2 with at most max_vertices vertices that forms a disk; one per
/// isomorphism class.
void enumerate_grid_windows(int size, int max_vertices, const std::function<void(const GridWindow&)>& visit);

/// Every near-quadrangulation with at most max_quads internal faces, one per
/// isomorphism class.
void enumerate_near_quadrangulations(int max_quads, const std::function<void(const PlaneGraph&)>& visit);

struct SmallInstance {
    HuedPatch patch;
    PartialColoring precoloring;
    std::string family;
};

struct EnumerationOptions {
    int window = 5;               // grid points per side
    int max_vertices = 16;
    int max_quads = 5;
    int max_boundary = 1 << 30;
    int colors = 4;
    bool up_to_permutation = true;
    bool windows = true;
    bool quads = true;
};

/// Streams every enumerated patch with every boundary coloring. Colorings
/// are relabelled through one of the 24 color permutations, chosen by the
/// patch's index, so that all colors appear across the stream.
void enumerate_small_instances(const EnumerationOptions& options,
                               const std::function<void(const SmallInstance&)>& visit);

} // namespace precol
