#include "precol/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace precol {

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation, Dart outer)
    : rotation_(std::move(rotation)), outer_(outer) {
    const int n = num_vertices();
    if (n == 0)
        throw Error(ErrorKind::Structural, "graph has no vertices");

    offset_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& rot = rotation_[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const Vertex w = rot[i];
            if (w < 0 || w >= n)
                throw Error(ErrorKind::Structural, "neighbour id out of range at vertex " + std::to_string(v));
            if (w == v)
                throw Error(ErrorKind::Structural, "self-loop at vertex " + std::to_string(v));
            for (std::size_t j = 0; j < i; ++j)
                if (rot[j] == w)
                    throw Error(ErrorKind::Structural, "parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        }
        offset_[v + 1] = offset_[v] + static_cast<int>(rot.size());
    }
    if (offset_[n] == 0)
        throw Error(ErrorKind::Structural, "graph has no edges");

    twin_.assign(offset_[n], -1);
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
            const Vertex w = rotation_[u][i];
            const int j = position(w, u);
            if (j < 0)
                throw Error(ErrorKind::Structural,
                            "asymmetric rotation: " + std::to_string(u) + " lists " + std::to_string(w));
            twin_[offset_[u] + static_cast<int>(i)] = j;
        }

    if (outer_.from < 0 || outer_.from >= n || position(outer_.from, outer_.to) < 0)
        throw Error(ErrorKind::Structural, "outer dart is not an edge");

    std::vector<char> seen(n, 0);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : rotation_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
    }
    if (reached != n)
        throw Error(ErrorKind::Structural, "graph is disconnected");

    dart_face_.assign(num_darts(), -1);
    for (int id = 0; id < num_darts(); ++id) {
        if (dart_face_[id] >= 0)
            continue;
        Face face;
        const int index = static_cast<int>(faces_.size());
        Dart d = dart(id);
        int cur = id;
        while (dart_face_[cur] < 0) {
            dart_face_[cur] = index;
            face.walk.push_back(d.from);
            d = next_in_face(d);
            cur = dart_id(d);
        }
        if (cur != id)
            throw Error(ErrorKind::Structural, "face tracing did not close");
        faces_.push_back(std::move(face));
    }
    outer_face_ = dart_face_[dart_id(outer_)];
    faces_[outer_face_].outer = true;

    if (n - num_edges() + static_cast<int>(faces_.size()) != 2)
        throw Error(ErrorKind::Structural, "Euler's formula fails; rotation system is not planar");
}

int PlaneGraph::position(Vertex v, Vertex u) const {
    if (v < 0 || v >= num_vertices())
        return -1;
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u)
            return static_cast<int>(i);
    return -1;
}

int PlaneGraph::dart_id(Dart d) const {
    const int i = position(d.from, d.to);
    if (i < 0)
        throw Error(ErrorKind::Structural, "no edge " + std::to_string(d.from) + "-" + std::to_string(d.to));
    return offset_[d.from] + i;
}

Dart PlaneGraph::dart(int id) const {
    const auto it = std::upper_bound(offset_.begin(), offset_.end(), id);
    const Vertex u = static_cast<Vertex>(it - offset_.begin()) - 1;
    return Dart{u, rotation_[u][id - offset_[u]]};
}

Dart PlaneGraph::next_in_face(Dart d) const {
    const int id = dart_id(d);
    const Vertex v = d.to;
    const int deg = degree(v);
    const int j = twin_[id];
    return Dart{v, rotation_[v][(j - 1 + deg) % deg]};
}

std::vector<Dart> PlaneGraph::edges() const {
    std::vector<Dart> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex w : rotation_[u])
            if (u < w)
                out.push_back(Dart{u, w});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

PlaneGraph plane_graph_from_faces(int num_vertices, std::span<const std::vector<Vertex>> faces) {
    // next[v][w] = neighbour following w counterclockwise around v
    std::vector<std::map<Vertex, Vertex>> next(num_vertices);
    std::set<std::pair<Vertex, Vertex>> face_darts;
    for (const auto& f : faces) {
        const int k = static_cast<int>(f.size());
        if (k < 3)
            throw Error(ErrorKind::Structural, "face shorter than three");
        for (int i = 0; i < k; ++i) {
            const Vertex v = f[i];
            const Vertex after = f[(i + 1) % k];
            const Vertex before = f[(i - 1 + k) % k];
            if (!next[v].emplace(after, before).second)
                throw Error(ErrorKind::Structural, "corner repeated at vertex " + std::to_string(v));
            if (!face_darts.emplace(v, after).second)
                throw Error(ErrorKind::Structural, "dart used by two faces");
        }
    }

    std::vector<std::vector<Vertex>> rotation(num_vertices);
    for (Vertex v = 0; v < num_vertices; ++v) {
        const auto& nx = next[v];
        if (nx.empty())
            continue;
        std::set<Vertex> nbrs;
        std::set<Vertex> has_pred;
        for (auto [a, b] : nx) {
            nbrs.insert(a);
            nbrs.insert(b);
            has_pred.insert(b);
        }
        std::vector<Vertex> starts;
        for (Vertex w : nbrs)
            if (!has_pred.count(w))
                starts.push_back(w);
        if (starts.size() > 1)
            throw Error(ErrorKind::Structural, "faces around vertex " + std::to_string(v) + " do not form a disk");
        Vertex cur = starts.empty() ? *nbrs.begin() : starts.front();
        auto& rot = rotation[v];
        for (;;) {
            rot.push_back(cur);
            auto it = nx.find(cur);
            if (it == nx.end() || it->second == rot.front())
                break;
            cur = it->second;
            if (rot.size() > nbrs.size())
                throw Error(ErrorKind::Structural, "rotation does not close at vertex " + std::to_string(v));
        }
        if (rot.size() != nbrs.size())
            throw Error(ErrorKind::Structural, "faces around vertex " + std::to_string(v) + " do not form a disk");
    }

    for (Vertex u = 0; u < num_vertices; ++u)
        for (Vertex w : rotation[u])
            if (!face_darts.count({u, w}))
                return PlaneGraph(std::move(rotation), Dart{u, w});
    throw Error(ErrorKind::Structural, "faces close up into a sphere; no outer face");
}

namespace {

SubGraph restrict_to_edges(const PlaneGraph& g, const std::set<std::pair<Vertex, Vertex>>& keep, Dart outer) {
    std::vector<Vertex> to_new(g.num_vertices(), -1);
    std::vector<Vertex> to_parent;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.rotation(v))
            if (keep.count({std::min(v, w), std::max(v, w)})) {
                to_new[v] = static_cast<Vertex>(to_parent.size());
                to_parent.push_back(v);
                break;
            }
    std::vector<std::vector<Vertex>> rotation(to_parent.size());
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        const Vertex v = to_parent[i];
        for (Vertex w : g.rotation(v))
            if (keep.count({std::min(v, w), std::max(v, w)}))
                rotation[i].push_back(to_new[w]);
    }
    if (to_new[outer.from] < 0 || to_new[outer.to] < 0)
        throw Error(ErrorKind::Structural, "outer dart not in subgraph");
    return SubGraph{PlaneGraph(std::move(rotation), Dart{to_new[outer.from], to_new[outer.to]}), std::move(to_parent)};
}

} // namespace

SubGraph subgraph_of_faces(const PlaneGraph& g, std::span<const int> face_indices) {
    std::set<std::pair<Vertex, Vertex>> keep;
    std::set<std::pair<Vertex, Vertex>> darts;
    for (int fi : face_indices) {
        const auto& walk = g.faces()[fi].walk;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const Vertex a = walk[i];
            const Vertex b = walk[(i + 1) % walk.size()];
            darts.emplace(a, b);
            keep.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (auto [a, b] : darts)
        if (!darts.count({b, a}))
            return restrict_to_edges(g, keep, Dart{b, a});
    throw Error(ErrorKind::Structural, "chosen faces have no boundary");
}

SubGraph subgraph_of_edges(const PlaneGraph& g, std::span<const Dart> edges) {
    std::set<std::pair<Vertex, Vertex>> keep;
    for (Dart e : edges) {
        if (!g.adjacent(e.from, e.to))
            throw Error(ErrorKind::Structural, "subgraph edge not in graph");
        keep.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
    }
    return restrict_to_edges(g, keep, g.outer_dart());
}

bool is_simple_cycle(std::span<const Vertex> walk) {
    if (walk.size() < 3)
        return false;
    std::vector<Vertex> sorted(walk.begin(), walk.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_two_connected(const PlaneGraph& g) {
    if (g.num_vertices() < 3)
        return false;
    for (const auto& f : g.faces())
        if (!is_simple_cycle(f.walk))
            return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const PlaneGraph& g) {
    std::vector<int> side(g.num_vertices(), -1);
    std::queue<Vertex> queue;
    side[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.rotation(v)) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                queue.push(w);
            } else if (side[w] == side[v]) {
                return std::nullopt;
            }
        }
    }
    return side;
}

} // namespace precol
