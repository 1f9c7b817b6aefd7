#include "precol/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace precol {

std::array<GridPoint, 3> GridTriangle::corners() const {
    if (up)
        return {GridPoint{i, j}, GridPoint{i + 1, j}, GridPoint{i + 1, j + 1}};
    return {GridPoint{i, j}, GridPoint{i + 1, j + 1}, GridPoint{i, j + 1}};
}

std::array<GridTriangle, 3> GridTriangle::neighbours() const {
    if (up)
        return {GridTriangle{i, j - 1, false}, GridTriangle{i + 1, j, false}, GridTriangle{i, j, false}};
    return {GridTriangle{i, j, true}, GridTriangle{i, j + 1, true}, GridTriangle{i - 1, j, true}};
}

GridWindow grid_window_from_triangles(std::span<const GridTriangle> triangles) {
    std::vector<GridPoint> points;
    for (const auto& t : triangles)
        for (GridPoint p : t.corners())
            points.push_back(p);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto id = [&](GridPoint p) {
        return static_cast<Vertex>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    std::vector<std::vector<Vertex>> faces;
    for (const auto& t : triangles) {
        const auto c = t.corners();
        faces.push_back({id(c[0]), id(c[1]), id(c[2])});
    }
    Patch patch = validate_patch(plane_graph_from_faces(static_cast<int>(points.size()), faces));
    std::vector<Hue> hue;
    Coloring color;
    for (GridPoint p : points) {
        hue.push_back(grid_hue(p));
        color.push_back(grid_color(p));
    }
    return GridWindow{DappledPatch::make(HuedPatch::make(std::move(patch), std::move(hue)), std::move(color)),
                      std::move(points)};
}

GridWindow gen_grid_window(std::uint64_t seed, int triangles) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> offset(0, 5);
    std::vector<GridTriangle> region{GridTriangle{offset(rng), offset(rng), (rng() & 1) != 0}};
    std::set<GridTriangle> members(region.begin(), region.end());
    GridWindow best = grid_window_from_triangles(region);
    const int attempts = 50 * std::max(triangles, 1);
    for (int a = 0; a < attempts && static_cast<int>(region.size()) < triangles; ++a) {
        const GridTriangle from = region[rng() % region.size()];
        const GridTriangle next = from.neighbours()[rng() % 3];
        if (members.count(next))
            continue;
        region.push_back(next);
        try {
            best = grid_window_from_triangles(region);
            members.insert(next);
        } catch (const Error&) {
            region.pop_back();
        }
    }
    return best;
}

PlaneGraph gen_near_quadrangulation(std::uint64_t seed, int quads) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> faces{{0, 1, 2, 3}};
    int n = 4;
    PlaneGraph g = plane_graph_from_faces(n, faces);
    const int attempts = 100 * std::max(quads, 1);
    for (int a = 0; a < attempts && static_cast<int>(faces.size()) < quads; ++a) {
        const auto& outer = g.outer_walk();
        const int len = static_cast<int>(outer.size());
        const int i = static_cast<int>(rng() % len);
        const int shared = 1 + static_cast<int>(rng() % 3);  // boundary edges covered by the new quad
        auto at = [&](int k) { return outer[(i + k) % len]; };
        std::vector<Vertex> face;
        int added = 0;
        if (shared == 1) {
            face = {at(0), at(1), n, n + 1};
            added = 2;
        } else if (shared == 2) {
            face = {at(0), at(1), at(2), n};
            added = 1;
        } else {
            if (len < 6 || g.adjacent(at(0), at(3)))
                continue;
            face = {at(0), at(1), at(2), at(3)};
        }
        faces.push_back(face);
        try {
            PlaneGraph next = plane_graph_from_faces(n + added, faces);
            if (!is_near_quadrangulation(next))
                throw Error(ErrorKind::NotNearQuadrangulation, "glued graph is not a near-quadrangulation");
            g = std::move(next);
            n += added;
        } catch (const Error&) {
            faces.pop_back();
        }
    }
    return g;
}

std::optional<Coloring> gen_viable_cycle_coloring(std::uint64_t seed, std::span<const Hue> hues) {
    const std::size_t n = hues.size();
    if (n < 3)
        return std::nullopt;
    std::mt19937_64 rng(seed);
    std::vector<GridPoint> starts;
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t j = 0; j < 6; ++j)
            if (grid_hue({i, j}) == hues[0])
                starts.push_back({i, j});

    constexpr int kAttempts = 10'000;
    std::vector<GridPoint> walk;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        walk.assign(1, starts[rng() % starts.size()]);
        bool ok = true;
        for (std::size_t t = 1; t < n && ok; ++t) {
            GridPoint options[6];
            int k = 0;
            for (GridStep s : kGridSteps) {
                const GridPoint q = walk.back() + s;
                if (grid_hue(q) == hues[t] && grid_distance(q, walk.front()) <= static_cast<std::int64_t>(n - t))
                    options[k++] = q;
            }
            if (k == 0)
                ok = false;
            else
                walk.push_back(options[rng() % k]);
        }
        if (!ok || !grid_adjacent(walk.back(), walk.front()))
            continue;
        Coloring out;
        for (GridPoint p : walk)
            out.push_back(grid_color(p));
        return out;
    }
    return std::nullopt;
}

namespace {

std::vector<int> bfs_code(const PlaneGraph& g, Dart root, bool mirror) {
    const int n = g.num_vertices();
    std::vector<int> label(n, -1);
    std::vector<int> code;
    std::queue<std::pair<Vertex, Vertex>> queue;  // vertex, reference neighbour
    label[root.from] = 0;
    int next = 1;
    queue.emplace(root.from, root.to);
    while (!queue.empty()) {
        const auto [v, ref] = queue.front();
        queue.pop();
        const auto rot = g.rotation(v);
        const int d = static_cast<int>(rot.size());
        const int start = g.position(v, ref);
        for (int k = 0; k < d; ++k) {
            const Vertex w = rot[((mirror ? start - k : start + k) % d + d) % d];
            if (label[w] < 0) {
                label[w] = next++;
                queue.emplace(w, v);
            }
            code.push_back(label[w]);
        }
        code.push_back(-1);
    }
    return code;
}

} // namespace

std::vector<int> canonical_form(const PlaneGraph& g) {
    const auto& outer = g.outer_walk();
    const std::size_t len = outer.size();
    std::vector<int> best;
    for (std::size_t s = 0; s < len; ++s) {
        for (bool mirror : {false, true}) {
            const Dart root = mirror ? Dart{outer[s], outer[(s + len - 1) % len]} : Dart{outer[s], outer[(s + 1) % len]};
            auto code = bfs_code(g, root, mirror);
            if (best.empty() || code < best)
                best = std::move(code);
        }
    }
    return best;
}

void for_each_cycle_coloring(int length, int colors, bool up_to_permutation,
                             const std::function<void(const std::vector<int>&)>& visit) {
    if (length < 2)
        return;
    std::vector<int> seq(length);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == length) {
            if (seq[length - 1] != seq[0])
                visit(seq);
            return;
        }
        const int limit = up_to_permutation ? std::min(colors, used + 1) : colors;
        for (int c = 0; c < limit; ++c) {
            if (pos > 0 && c == seq[pos - 1])
                continue;
            seq[pos] = c;
            self(self, pos + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
}

void enumerate_grid_windows(int size, int max_vertices, const std::function<void(const GridWindow&)>& visit) {
    const int cells = size - 1;
    std::vector<GridTriangle> tris;
    for (int i = 0; i < cells; ++i)
        for (int j = 0; j < cells; ++j) {
            tris.push_back(GridTriangle{i, j, true});
            tris.push_back(GridTriangle{i, j, false});
        }
    const int t = static_cast<int>(tris.size());
    std::vector<std::uint64_t> corner_mask(t, 0);
    std::vector<std::vector<int>> adj(t);
    for (int a = 0; a < t; ++a) {
        for (GridPoint p : tris[a].corners())
            corner_mask[a] |= std::uint64_t{1} << (p.i * size + p.j);
        for (const GridTriangle& nb : tris[a].neighbours()) {
            const auto it = std::find(tris.begin(), tris.end(), nb);
            if (it != tris.end())
                adj[a].push_back(static_cast<int>(it - tris.begin()));
        }
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    for (int a = 0; a < t; ++a) {
        seen.insert(std::uint64_t{1} << a);
        frontier.push_back(std::uint64_t{1} << a);
    }
    std::set<std::vector<int>> classes;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t set : frontier) {
            std::uint64_t points = 0;
            std::vector<GridTriangle> region;
            for (int a = 0; a < t; ++a)
                if (set >> a & 1) {
                    points |= corner_mask[a];
                    region.push_back(tris[a]);
                }
            try {
                GridWindow w = grid_window_from_triangles(region);
                if (classes.insert(canonical_form(w.patch.graph())).second)
                    visit(w);
            } catch (const Error&) {
            }
            for (int a = 0; a < t; ++a) {
                if (!(set >> a & 1))
                    continue;
                for (int b : adj[a]) {
                    const std::uint64_t grown = set | (std::uint64_t{1} << b);
                    if (grown == set || std::popcount(points | corner_mask[b]) > max_vertices)
                        continue;
                    if (seen.insert(grown).second)
                        next.push_back(grown);
                }
            }
        }
        frontier = std::move(next);
    }
}

void enumerate_near_quadrangulations(int max_quads, const std::function<void(const PlaneGraph&)>& visit) {
    struct State {
        std::vector<std::vector<Vertex>> faces;
        int n;
    };
    std::set<std::vector<int>> classes;
    std::vector<State> level{State{{{0, 1, 2, 3}}, 4}};
    {
        const PlaneGraph g = plane_graph_from_faces(4, level[0].faces);
        classes.insert(canonical_form(g));
        visit(g);
    }
    for (int q = 2; q <= max_quads; ++q) {
        std::vector<State> next;
        for (const State& st : level) {
            const PlaneGraph g = plane_graph_from_faces(st.n, st.faces);
            const auto& outer = g.outer_walk();
            const int len = static_cast<int>(outer.size());
            for (int i = 0; i < len; ++i) {
                auto at = [&](int k) { return outer[(i + k) % len]; };
                for (int shared = 1; shared <= 3; ++shared) {
                    State s = st;
                    if (shared == 1) {
                        s.faces.push_back({at(0), at(1), s.n, s.n + 1});
                        s.n += 2;
                    } else if (shared == 2) {
                        s.faces.push_back({at(0), at(1), at(2), s.n});
                        s.n += 1;
                    } else {
                        if (len < 6 || g.adjacent(at(0), at(3)))
                            continue;
                        s.faces.push_back({at(0), at(1), at(2), at(3)});
                    }
                    try {
                        const PlaneGraph h = plane_graph_from_faces(s.n, s.faces);
                        if (!is_near_quadrangulation(h))
                            continue;
                        if (!classes.insert(canonical_form(h)).second)
                            continue;
                        visit(h);
                        next.push_back(std::move(s));
                    } catch (const Error&) {
                    }
                }
            }
        }
        level = std::move(next);
    }
}

void enumerate_small_instances(const EnumerationOptions& options,
                               const std::function<void(const SmallInstance&)>& visit) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<std::array<int, 4>> perms;
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t index = 0;
    auto emit = [&](const HuedPatch& patch, const std::string& family) {
        const auto& boundary = patch.boundary();
        const int len = static_cast<int>(boundary.size());
        if (patch.graph().num_vertices() > options.max_vertices || len > options.max_boundary)
            return;
        const auto& p = perms[index++ % perms.size()];
        for_each_cycle_coloring(len, options.colors, options.up_to_permutation, [&](const std::vector<int>& seq) {
            PartialColoring phi(patch.graph().num_vertices());
            for (int i = 0; i < len; ++i)
                phi[boundary[i]] = Color4::from_code(p[seq[i]]);
            for (Dart e : patch.graph().edges())
                if (phi[e.from] && phi[e.to] && *phi[e.from] == *phi[e.to])
                    return;
            visit(SmallInstance{patch, std::move(phi), family});
        });
    };
    if (options.windows)
        enumerate_grid_windows(options.window, options.max_vertices,
                               [&](const GridWindow& w) { emit(w.patch.hued, "window"); });
    if (options.quads)
        enumerate_near_quadrangulations(options.max_quads,
                                        [&](const PlaneGraph& b) { emit(patch_extension(b), "quad-extension"); });
}

} // namespace precol
