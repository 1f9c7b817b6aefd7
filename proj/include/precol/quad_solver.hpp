#pragma once

#include <optional>
#include <span>
#include <vector>

#include "precol/patch.hpp"
#include "precol/tri_grid.hpp"

namespace precol {

enum class ChordClass { Shortcut, Tight, Slack };

const char* to_string(ChordClass c);

/// Shortest path between two boundary vertices whose inner vertices are all
/// internal, compared with the retract of the boundary image along `base`.
struct ShortcutReport {
    std::vector<Vertex> chord;   // x = chord.front(), y = chord.back()
    std::vector<Vertex> base;    // boundary arc from x to y in boundary order
    int retract_length = 0;
    int chord_length = 0;
    ChordClass classification = ChordClass::Slack;
};

struct ChordScan {
    std::optional<ShortcutReport> shortcut;  // first by endpoint pair
    std::optional<ShortcutReport> tight;     // smallest endpoint pair
    std::vector<ShortcutReport> reports;     // one per connected boundary pair
};

/// `boundary` is the outer walk of h and `image` its grid image, position by
/// position. Throws NotNullHomotopic when the image does not retract to a
/// point and std::logic_error on a chord one longer than its retract.
ChordScan find_shortcut(const PlaneGraph& h, std::span<const Vertex> boundary, std::span<const GridPoint> image);

/// Retract length of image[i..j] (forward, cyclic) for every position pair.
std::vector<std::vector<int>> boundary_retract_lengths(std::span<const GridPoint> image);

enum class QuadStage { Extends, NotViable, NotNullHomotopic, Shortcut };

const char* to_string(QuadStage s);

struct QuadVerdict {
    QuadStage stage = QuadStage::NotViable;
    std::optional<ShortcutReport> shortcut;
    std::vector<GridPoint> boundary_image;

    bool extends() const { return stage == QuadStage::Extends; }
};

/// `precoloring` is indexed by the vertices of h and colors exactly the outer
/// cycle. Hues are those of patch_extension(h). Throws NotNearQuadrangulation,
/// Precondition or ImproperColoring.
QuadVerdict decide_quad(const PlaneGraph& h, const PartialColoring& precoloring);

struct QuadStep {
    enum class Kind { Base, Tight, Cut };
    Kind kind = Kind::Base;
    std::vector<Vertex> vertices;  // Base: the quad then its face vertex; Tight: chord; Cut: u, v
    std::vector<Color4> colors;    // Base: face vertex; Tight: chord; Cut: v
};

const char* to_string(QuadStep::Kind k);

struct QuadExtension {
    QuadVerdict verdict;
    std::optional<Coloring> coloring;  // of patch_extension(h)
    std::vector<QuadStep> trace;
};

/// Coloring of patch_extension(h) extending the precoloring, built by
/// splitting along tight chords and cutting along edges until single quads
/// remain. Empty exactly when decide_quad is false.
QuadExtension extend_quad(const PlaneGraph& h, const PartialColoring& precoloring);

struct BuiltPatch {
    DappledPatch patch;
    std::vector<Vertex> cycle_vertices;  // position i of the cycle -> vertex
};

/// Dappled patch whose outer cycle reads `hue`/`color` at cycle_vertices.
/// A repeated grid point splits the cycle into two blocks that are built
/// separately, glued at the repeated point and closed off by a fan gadget.
/// Throws NotViable when `image` is not a closed grid walk matching the cycle.
BuiltPatch build_patch_from_cycle(std::span<const Hue> hue, std::span<const Color4> color,
                                  std::span<const GridPoint> image);

/// Same, with the image from check_viability_cycle.
BuiltPatch build_patch_from_cycle(std::span<const Hue> hue, std::span<const Color4> color);

} // namespace precol
