#pragma once

#include <span>
#include <vector>

#include "precol/core.hpp"

namespace precol {

struct Dart {
    Vertex from = 0;
    Vertex to = 0;

    friend constexpr bool operator==(Dart, Dart) = default;
    friend constexpr auto operator<=>(Dart, Dart) = default;
};

/// A face of a plane graph as the closed walk of its darts' tail vertices.
struct Face {
    std::vector<Vertex> walk;
    bool outer = false;
};

/// Connected simple plane graph given by a rotation system.
///
/// rotation(v) lists the neighbours of v in counterclockwise order. A face is
/// traced from dart (u -> v) by continuing with (v -> w), where w precedes u in
/// the rotation of v. With this rule internal faces come out counterclockwise
/// and the outer face clockwise. The outer face is the face of outer_dart().
///
/// Construction checks symmetry, simplicity, connectivity and Euler's formula;
/// a violation throws Error(Structural).
class PlaneGraph {
public:
    PlaneGraph(std::vector<std::vector<Vertex>> rotation, Dart outer);

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(twin_.size()) / 2; }
    int num_darts() const { return static_cast<int>(twin_.size()); }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

    std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
    Dart outer_dart() const { return outer_; }

    /// Index of u in the rotation of v, or -1.
    int position(Vertex v, Vertex u) const;
    bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }

    /// Dense dart id in [0, num_darts()).
    int dart_id(Dart d) const;
    Dart dart(int id) const;
    Dart next_in_face(Dart d) const;

    /// Edges as (min, max) pairs sorted lexicographically.
    std::vector<Dart> edges() const;

    /// Faces in dart-id discovery order; exactly one is flagged outer.
    const std::vector<Face>& faces() const { return faces_; }
    /// Index into faces() of the face containing dart id.
    int face_of(int dart_id) const { return dart_face_[dart_id]; }
    int outer_face_index() const { return outer_face_; }
    const std::vector<Vertex>& outer_walk() const { return faces_[outer_face_].walk; }

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<int> offset_;
    std::vector<int> twin_;  // twin_[id of (u->w)] = index of u in rotation(w)
    Dart outer_;
    std::vector<Face> faces_;
    std::vector<int> dart_face_;
    int outer_face_ = 0;
};

std::vector<Face> trace_faces(const PlaneGraph& g);

/// Builds a plane graph from the oriented internal faces of a disk. Each face
/// is a counterclockwise vertex cycle; darts used by no face form the outer face.
PlaneGraph plane_graph_from_faces(int num_vertices, std::span<const std::vector<Vertex>> faces);

/// Rotation system restricted to the darts of the chosen faces of g. The faces
/// must form a closed disk; vertices not on them are dropped. `to_parent` maps
/// new ids to ids of g.
struct SubGraph {
    PlaneGraph graph;
    std::vector<Vertex> to_parent;
};
SubGraph subgraph_of_faces(const PlaneGraph& g, std::span<const int> face_indices);

/// Subgraph on a set of edges; isolated vertices are dropped. The outer dart of
/// g must survive. Throws Structural when the result is disconnected.
SubGraph subgraph_of_edges(const PlaneGraph& g, std::span<const Dart> edges);

/// True when every face boundary is a cycle (for plane graphs this is
/// 2-connectivity).
bool is_two_connected(const PlaneGraph& g);

bool is_simple_cycle(std::span<const Vertex> walk);

/// Two-coloring by BFS from vertex 0 (class of vertex 0 is 0); empty when the
/// graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const PlaneGraph& g);

} // namespace precol
