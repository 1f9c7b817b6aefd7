#include "precol/tri_grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace precol {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

} // namespace

Hue grid_hue(GridPoint p) { return Hue(static_cast<int>(floor_mod(p.i + p.j, 3))); }

Color4 grid_color(GridPoint p) {
    return Color4::from_bits(static_cast<int>(floor_mod(p.i, 2)), static_cast<int>(floor_mod(p.j, 2)));
}

bool grid_adjacent(GridPoint p, GridPoint q) {
    const GridStep d = q - p;
    return std::find(kGridSteps.begin(), kGridSteps.end(), d) != kGridSteps.end();
}

std::int64_t grid_distance(GridPoint p, GridPoint q) {
    const GridStep d = q - p;
    if ((d.di >= 0) == (d.dj >= 0))
        return std::max(std::llabs(d.di), std::llabs(d.dj));
    return std::llabs(d.di) + std::llabs(d.dj);
}

int sigma(int a, Color4 bc) { return a == bc.b0() + bc.b1() ? 1 : -1; }

GridStep edge_delta(Hue hue_u, Color4 color_u, Hue hue_v, Color4 color_v) {
    const Hue a = hue_v - hue_u;
    const Color4 bc = color_v - color_u;
    if (a.value == 0)
        throw Error(ErrorKind::ImproperColoring, "adjacent vertices share a hue");
    if (bc.code == 0)
        throw Error(ErrorKind::ImproperColoring, "adjacent vertices share a color");
    const int s = sigma(a.value, bc);
    return GridStep{s * bc.b0(), s * bc.b1()};
}

GridStep walk_delta(std::span<const Vertex> walk, std::span<const Hue> hue, std::span<const Color4> color) {
    GridStep total;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        const Vertex u = walk[i - 1];
        const Vertex v = walk[i];
        total = total + edge_delta(hue[u], color[u], hue[v], color[v]);
    }
    return total;
}

GridHom build_homomorphism(const DappledPatch& g, Vertex anchor, GridPoint image) {
    const auto& hue = g.hued.hue;
    const auto& color = g.color;
    if (grid_hue(image) != hue[anchor] || grid_color(image) != color[anchor])
        throw Error(ErrorKind::Precondition, "anchor image has the wrong hue or color");
    const PlaneGraph& graph = g.graph();
    GridHom f(graph.num_vertices());
    std::vector<char> done(graph.num_vertices(), 0);
    std::queue<Vertex> queue;
    f[anchor] = image;
    done[anchor] = 1;
    queue.push(anchor);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : graph.rotation(v))
            if (!done[w]) {
                f[w] = f[v] + edge_delta(hue[v], color[v], hue[w], color[w]);
                done[w] = 1;
                queue.push(w);
            }
    }
    return f;
}

bool is_grid_homomorphism(std::span<const Dart> edges, std::span<const Hue> hue, std::span<const Color4> color,
                          const GridHom& f) {
    for (std::size_t v = 0; v < f.size(); ++v)
        if (grid_hue(f[v]) != hue[v] || grid_color(f[v]) != color[v])
            return false;
    return std::all_of(edges.begin(), edges.end(), [&](Dart e) { return grid_adjacent(f[e.from], f[e.to]); });
}

GridPoint canonical_point(Hue h, Color4 k) {
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t j = 0; j < 6; ++j) {
            const GridPoint p{i, j};
            if (grid_hue(p) == h && grid_color(p) == k)
                return p;
        }
    throw Error(ErrorKind::Structural, "no canonical point");  // unreachable: the grid is 6-periodic
}

std::optional<GridPoint> step_neighbor(GridPoint p, Hue h, Color4 k) {
    for (GridStep s : kGridSteps) {
        const GridPoint q = p + s;
        if (grid_hue(q) == h && grid_color(q) == k)
            return q;
    }
    return std::nullopt;
}

std::optional<GridHom> check_viability(int num_vertices, std::span<const Dart> edges, std::span<const Hue> hue,
                                       std::span<const Color4> color) {
    std::vector<std::vector<Vertex>> adj(num_vertices);
    for (Dart e : edges) {
        if (hue[e.from] == hue[e.to])
            throw Error(ErrorKind::ImproperColoring, "adjacent vertices share a hue");
        if (color[e.from] == color[e.to])
            throw Error(ErrorKind::ImproperColoring, "adjacent vertices share a color");
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    if (num_vertices == 0)
        return GridHom{};

    GridHom f(num_vertices);
    std::vector<char> done(num_vertices, 0);
    std::queue<Vertex> queue;
    f[0] = canonical_point(hue[0], color[0]);
    done[0] = 1;
    queue.push(0);
    int reached = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : adj[v]) {
            const GridPoint image = f[v] + edge_delta(hue[v], color[v], hue[w], color[w]);
            if (!done[w]) {
                f[w] = image;
                done[w] = 1;
                ++reached;
                queue.push(w);
            } else if (f[w] != image) {
                return std::nullopt;
            }
        }
    }
    if (reached != num_vertices)
        throw Error(ErrorKind::Precondition, "graph is disconnected");
    return f;
}

std::optional<std::vector<GridPoint>> check_viability_cycle(std::span<const Hue> hue, std::span<const Color4> color) {
    const int n = static_cast<int>(hue.size());
    std::vector<Dart> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(Dart{i, (i + 1) % n});
    return check_viability(n, edges, hue, color);
}

std::array<GridPoint, 7> Hexagon::points() const {
    std::array<GridPoint, 7> out{};
    out[0] = center;
    for (std::size_t k = 0; k < kGridSteps.size(); ++k)
        out[k + 1] = center + kGridSteps[k];
    return out;
}

std::int64_t hex_lattice_distance(GridPoint q, GridPoint lo, GridPoint hi) {
    auto inside = [&](GridPoint p) { return p.i >= lo.i && p.i <= hi.i && p.j >= lo.j && p.j <= hi.j; };
    const GridPoint origin{0, 0};
    if (!inside(q) || !inside(origin) || grid_hue(q).value == 2)
        return -1;
    const std::int64_t width = hi.j - lo.j + 1;
    auto index = [&](GridPoint p) { return (p.i - lo.i) * width + (p.j - lo.j); };
    std::vector<std::int64_t> dist(static_cast<std::size_t>((hi.i - lo.i + 1) * width), -1);
    std::queue<GridPoint> queue;
    dist[index(origin)] = 0;
    queue.push(origin);
    const GridPoint removed{0, 1};
    while (!queue.empty()) {
        const GridPoint p = queue.front();
        queue.pop();
        if (p == q)
            return dist[index(p)];
        for (GridStep s : kGridSteps) {
            const GridPoint r = p + s;
            if (!inside(r) || grid_hue(r).value == 2 || dist[index(r)] >= 0)
                continue;
            if ((p == origin && r == removed) || (p == removed && r == origin))
                continue;
            dist[index(r)] = dist[index(p)] + 1;
            queue.push(r);
        }
    }
    return -1;
}

GridPoint hexagon_retraction(const Hexagon& x, GridPoint p) {
    const GridPoint pivot{1, 1};
    const GridStep shift = pivot - x.center;
    const GridPoint q = p + shift;
    if (grid_hue(q).value == 2)
        return x.center;

    constexpr std::int64_t margin = 6;
    const GridPoint lo{std::min(q.i, pivot.i) - margin, std::min(q.j, pivot.j) - margin};
    const GridPoint hi{std::max(q.i, pivot.i) + margin, std::max(q.j, pivot.j) + margin};
    const std::int64_t m = hex_lattice_distance(q, lo, hi);

    GridPoint image;
    switch (m) {
    case 0: image = {0, 0}; break;
    case 1: image = {1, 0}; break;
    case 2: image = {2, 1}; break;
    case 3: image = {2, 2}; break;
    default: image = (m % 2 == 0) ? GridPoint{1, 2} : GridPoint{0, 1}; break;
    }
    return image - shift;
}

} // namespace precol
