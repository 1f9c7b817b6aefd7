#include "precol/patch.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace precol {

bool Patch::on_boundary(Vertex v) const {
    return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

HuedPatch HuedPatch::make(Patch patch, std::vector<Hue> hue) {
    const auto& g = patch.graph;
    if (static_cast<int>(hue.size()) != g.num_vertices())
        throw Error(ErrorKind::ImproperColoring, "hue vector has wrong size");
    for (Dart e : g.edges())
        if (hue[e.from] == hue[e.to])
            throw Error(ErrorKind::ImproperColoring,
                        "edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + " has equal hues");
    return HuedPatch{std::move(patch), std::move(hue)};
}

DappledPatch DappledPatch::make(HuedPatch hued, Coloring color) {
    const auto& g = hued.graph();
    if (static_cast<int>(color.size()) != g.num_vertices())
        throw Error(ErrorKind::ImproperColoring, "color vector has wrong size");
    for (Dart e : g.edges())
        if (color[e.from] == color[e.to])
            throw Error(ErrorKind::ImproperColoring,
                        "edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + " has equal colors");
    return DappledPatch{std::move(hued), std::move(color)};
}

Patch validate_patch(const PlaneGraph& g) {
    for (std::size_t i = 0; i < g.faces().size(); ++i) {
        const Face& f = g.faces()[i];
        if (!f.outer && f.walk.size() != 3)
            throw Error(ErrorKind::InternalFaceNotTriangle,
                        "face " + std::to_string(i) + " has length " + std::to_string(f.walk.size()));
    }
    const auto& outer = g.outer_walk();
    if (!is_simple_cycle(outer))
        throw Error(ErrorKind::OuterBoundaryNotCycle, "outer face walk repeats a vertex");
    return Patch{g, outer};
}

bool is_near_eulerian(const Patch& p) {
    for (Vertex v = 0; v < p.graph.num_vertices(); ++v)
        if (!p.on_boundary(v) && p.graph.degree(v) % 2 != 0)
            return false;
    return true;
}

std::vector<Hue> compute_hues(const Patch& p) {
    const PlaneGraph& g = p.graph;
    const int n = g.num_vertices();
    std::vector<int> hue(n, -1);

    std::vector<const Face*> triangles;
    std::vector<std::vector<int>> incident(n);
    for (const Face& f : g.faces())
        if (!f.outer) {
            for (Vertex v : f.walk)
                incident[v].push_back(static_cast<int>(triangles.size()));
            triangles.push_back(&f);
        }

    std::queue<int> pending;
    auto assign = [&](Vertex v, int h) {
        hue[v] = h;
        for (int t : incident[v])
            pending.push(t);
    };

    const auto edges = g.edges();
    for (;;) {
        // seed: smallest edge touching an unhued vertex
        auto seed = std::find_if(edges.begin(), edges.end(),
                                 [&](Dart e) { return hue[e.from] < 0 || hue[e.to] < 0; });
        if (seed == edges.end())
            break;
        if (hue[seed->from] < 0 && hue[seed->to] < 0) {
            assign(seed->from, 0);
            assign(seed->to, 1);
        } else if (hue[seed->from] < 0) {
            assign(seed->from, (hue[seed->to] + 1) % 3);
        } else {
            assign(seed->to, (hue[seed->from] + 1) % 3);
        }
        while (!pending.empty()) {
            const auto& walk = triangles[pending.front()]->walk;
            pending.pop();
            int known = 0;
            int seen_mask = 0;
            Vertex unknown = -1;
            for (Vertex v : walk) {
                if (hue[v] >= 0) {
                    ++known;
                    seen_mask |= 1 << hue[v];
                } else {
                    unknown = v;
                }
            }
            if (known == 2) {
                if (std::popcount(static_cast<unsigned>(seen_mask)) != 2)
                    throw Error(ErrorKind::NotNearEulerian, "triangle forced to repeat a hue");
                assign(unknown, std::countr_zero(static_cast<unsigned>(~seen_mask & 7)));
            } else if (known == 3) {
                if (hue[walk[0]] == hue[walk[1]] || hue[walk[1]] == hue[walk[2]] || hue[walk[0]] == hue[walk[2]])
                    throw Error(ErrorKind::NotNearEulerian, "hue propagation conflict");
            }
        }
    }

    std::vector<Hue> out(n);
    for (Vertex v = 0; v < n; ++v)
        out[v] = Hue(hue[v]);
    for (Dart e : edges)
        if (out[e.from] == out[e.to])
            throw Error(ErrorKind::NotNearEulerian, "hue propagation conflict");
    return out;
}

std::vector<Vertex> extension_face_vertices(const PlaneGraph& b) {
    std::vector<Vertex> ids(b.faces().size(), -1);
    Vertex next = b.num_vertices();
    for (std::size_t i = 0; i < b.faces().size(); ++i)
        if (!b.faces()[i].outer)
            ids[i] = next++;
    return ids;
}

HuedPatch patch_extension(const PlaneGraph& b) {
    const auto side = bipartition(b);
    if (!side)
        throw Error(ErrorKind::NotBipartite, "graph has an odd cycle");
    if (!is_two_connected(b))
        throw Error(ErrorKind::NotTwoConnected, "some face is not bounded by a cycle");

    const auto face_vertex = extension_face_vertices(b);
    const int n = b.num_vertices();
    const int total = n + static_cast<int>(b.faces().size()) - 1;

    std::vector<std::vector<Vertex>> rotation(total);
    for (Vertex v = 0; v < n; ++v) {
        const auto rot = b.rotation(v);
        for (Vertex w : rot) {
            rotation[v].push_back(w);
            const int f = b.face_of(b.dart_id(Dart{v, w}));
            if (face_vertex[f] >= 0)
                rotation[v].push_back(face_vertex[f]);
        }
    }
    for (std::size_t f = 0; f < b.faces().size(); ++f)
        if (face_vertex[f] >= 0)
            rotation[face_vertex[f]] = b.faces()[f].walk;

    std::vector<Hue> hue(total, Hue(2));
    for (Vertex v = 0; v < n; ++v)
        hue[v] = Hue((*side)[v]);

    PlaneGraph g(std::move(rotation), b.outer_dart());
    return HuedPatch::make(validate_patch(g), std::move(hue));
}

bool is_odd_patch(const HuedPatch& h) {
    const auto& g = h.graph();
    if (!is_simple_cycle(h.boundary()))
        return false;
    return std::all_of(h.boundary().begin(), h.boundary().end(), [&](Vertex v) { return g.degree(v) % 2 == 1; });
}

bool is_near_quadrangulation(const PlaneGraph& g) {
    if (!is_two_connected(g))
        return false;
    return std::all_of(g.faces().begin(), g.faces().end(),
                       [](const Face& f) { return f.outer || f.walk.size() == 4; });
}

int internal_edge_count(const PlaneGraph& g) {
    return g.num_edges() - static_cast<int>(g.outer_walk().size());
}

CutResult cut_along_edge(const PlaneGraph& h, Vertex u, Vertex v) {
    const auto& outer = h.outer_walk();
    const auto at = std::find(outer.begin(), outer.end(), u);
    if (at == outer.end())
        throw Error(ErrorKind::Precondition, "cut vertex is not on the outer face");
    if (std::find(outer.begin(), outer.end(), v) != outer.end())
        throw Error(ErrorKind::Precondition, "cut target is on the outer face");
    if (!h.adjacent(u, v))
        throw Error(ErrorKind::Precondition, "cut edge is not an edge");
    if (!is_simple_cycle(outer))
        throw Error(ErrorKind::Precondition, "outer face is not a cycle");

    const std::size_t k = static_cast<std::size_t>(at - outer.begin());
    const Vertex a = outer[(k + outer.size() - 1) % outer.size()];

    const int n = h.num_vertices();
    const Vertex u2 = n;
    std::vector<std::vector<Vertex>> rotation = h.rotations();
    rotation.emplace_back();

    // rotation of u read counterclockwise from a: a, ..., v, ..., b
    const auto rot_u = h.rotation(u);
    const int deg = static_cast<int>(rot_u.size());
    const int start = h.position(u, a);
    std::vector<Vertex> from_a;
    for (int i = 0; i < deg; ++i)
        from_a.push_back(rot_u[(start + i) % deg]);
    const auto split = std::find(from_a.begin(), from_a.end(), v);

    rotation[u].assign(from_a.begin(), split + 1);
    rotation[u2].assign(split, from_a.end());
    for (auto it = split + 1; it != from_a.end(); ++it) {
        auto& rot = rotation[*it];
        *std::find(rot.begin(), rot.end(), u) = u2;
    }
    auto& rot_v = rotation[v];
    rot_v.insert(std::find(rot_v.begin(), rot_v.end(), u), u2);

    std::vector<Vertex> to_original(n + 1);
    for (Vertex x = 0; x < n; ++x)
        to_original[x] = x;
    to_original[u2] = u;

    PlaneGraph g(std::move(rotation), Dart{a, u});
    std::vector<Vertex> boundary = g.outer_walk();
    return CutResult{std::move(g), std::move(boundary), std::move(to_original), u, u2};
}

} // namespace precol
