#pragma once

#include "precol/plane_graph.hpp"

namespace precol {

/// Cycle 0, 1, ..., n-1 drawn counterclockwise.
PlaneGraph cycle_graph(int n);

/// Cycle 0..k-1 counterclockwise with hub k joined to every cycle vertex.
PlaneGraph wheel_graph(int k);

/// rows x cols block of unit squares; vertex (r, c) has id r * (cols + 1) + c.
PlaneGraph grid_quadrangulation(int rows, int cols);

/// Boundary 0, 1, 2, 3 with internal vertex 4 joined to 0 and 2: two quads.
PlaneGraph two_quad_strip();

} // namespace precol
