#include "precol/standard_graphs.hpp"

#include <vector>

namespace precol {

PlaneGraph cycle_graph(int n) {
    std::vector<std::vector<Vertex>> faces(1);
    for (int i = 0; i < n; ++i)
        faces[0].push_back(i);
    return plane_graph_from_faces(n, faces);
}

PlaneGraph wheel_graph(int k) {
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < k; ++i)
        faces.push_back({i, (i + 1) % k, k});
    return plane_graph_from_faces(k + 1, faces);
}

PlaneGraph grid_quadrangulation(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * (cols + 1) + c; };
    std::vector<std::vector<Vertex>> faces;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1), id(r + 1, c)});
    return plane_graph_from_faces((rows + 1) * (cols + 1), faces);
}

PlaneGraph two_quad_strip() {
    const std::vector<std::vector<Vertex>> faces{{0, 1, 2, 4}, {0, 4, 2, 3}};
    return plane_graph_from_faces(5, faces);
}

} // namespace precol
