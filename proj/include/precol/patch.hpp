#pragma once

#include <vector>

#include "precol/plane_graph.hpp"

namespace precol {

/// Plane graph whose internal faces are triangles and whose outer face is
/// bounded by a cycle. `boundary` is the outer face in trace order.
struct Patch {
    PlaneGraph graph;
    std::vector<Vertex> boundary;

    bool on_boundary(Vertex v) const;
};

struct HuedPatch {
    Patch patch;
    std::vector<Hue> hue;

    /// Throws ImproperColoring unless `hue` is a proper 3-coloring.
    static HuedPatch make(Patch patch, std::vector<Hue> hue);

    const PlaneGraph& graph() const { return patch.graph; }
    const std::vector<Vertex>& boundary() const { return patch.boundary; }
};

struct DappledPatch {
    HuedPatch hued;
    Coloring color;

    /// Throws ImproperColoring unless `color` is a proper 4-coloring.
    static DappledPatch make(HuedPatch hued, Coloring color);

    const PlaneGraph& graph() const { return hued.patch.graph; }
};

/// Throws InternalFaceNotTriangle or OuterBoundaryNotCycle.
Patch validate_patch(const PlaneGraph& g);

bool is_near_eulerian(const Patch& p);

/// Proper 3-coloring by forced propagation through triangles, seeded with
/// hues (0, 1) on the lexicographically smallest edge. Throws NotNearEulerian.
std::vector<Hue> compute_hues(const Patch& p);

/// Adds a hue-2 vertex inside every internal face of a 2-connected bipartite
/// plane graph. Face vertices get ids n, n+1, ... in face-trace order; the
/// bipartition class of vertex 0 gets hue 0.
HuedPatch patch_extension(const PlaneGraph& b);

/// Ids of the face vertices in patch_extension(b), indexed like b.faces();
/// the outer face maps to -1.
std::vector<Vertex> extension_face_vertices(const PlaneGraph& b);

bool is_odd_patch(const HuedPatch& h);

bool is_near_quadrangulation(const PlaneGraph& g);

struct CutResult {
    PlaneGraph graph;
    std::vector<Vertex> boundary;   // outer face trace of the new graph
    std::vector<Vertex> to_original;
    Vertex u1 = 0;                  // keeps the id of u
    Vertex u2 = 0;                  // new vertex, id = old vertex count
};

/// Splits boundary vertex u along the edge uv towards the internal vertex v;
/// v becomes a boundary vertex and the outer face grows by two.
CutResult cut_along_edge(const PlaneGraph& h, Vertex u, Vertex v);

/// Number of edges not on the outer face boundary.
int internal_edge_count(const PlaneGraph& g);

} // namespace precol
