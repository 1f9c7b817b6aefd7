#include "precol/quad_solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "precol/homotopy.hpp"

namespace precol {

const char* to_string(ChordClass c) {
    switch (c) {
    case ChordClass::Shortcut: return "Shortcut";
    case ChordClass::Tight: return "Tight";
    case ChordClass::Slack: return "Slack";
    }
    return "Unknown";
}

const char* to_string(QuadStage s) {
    switch (s) {
    case QuadStage::Extends: return "Extends";
    case QuadStage::NotViable: return "NotViable";
    case QuadStage::NotNullHomotopic: return "NotNullHomotopic";
    case QuadStage::Shortcut: return "Shortcut";
    }
    return "Unknown";
}

const char* to_string(QuadStep::Kind k) {
    switch (k) {
    case QuadStep::Kind::Base: return "base";
    case QuadStep::Kind::Tight: return "tight";
    case QuadStep::Kind::Cut: return "cut";
    }
    return "unknown";
}

std::vector<std::vector<int>> boundary_retract_lengths(std::span<const GridPoint> image) {
    const std::size_t len = image.size();
    std::vector<std::vector<int>> out(len, std::vector<int>(len, 0));
    std::vector<GridPoint> stack;
    for (std::size_t i = 0; i < len; ++i) {
        stack.clear();
        for (std::size_t t = 0; t < len; ++t) {
            const GridPoint p = image[(i + t) % len];
            if (stack.size() >= 2 && stack[stack.size() - 2] == p)
                stack.pop_back();
            else
                stack.push_back(p);
            out[i][(i + t) % len] = static_cast<int>(stack.size()) - 1;
        }
    }
    return out;
}

ChordScan find_shortcut(const PlaneGraph& h, std::span<const Vertex> boundary, std::span<const GridPoint> image) {
    if (!is_null_homotopic(ClosedWalk<GridPoint>(std::vector<GridPoint>(image.begin(), image.end()))))
        throw Error(ErrorKind::NotNullHomotopic, "boundary image does not retract to a point");
    const int n = h.num_vertices();
    const int len = static_cast<int>(boundary.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < len; ++i)
        pos[boundary[i]] = i;
    const auto retract = boundary_retract_lengths(image);

    ChordScan scan;
    auto pair_key = [](const ShortcutReport& r) {
        return std::pair{std::min(r.chord.front(), r.chord.back()), std::max(r.chord.front(), r.chord.back())};
    };
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (int i = 0; i < len; ++i) {
        const Vertex x = boundary[i];
        std::fill(dist.begin(), dist.end(), kInf);
        std::queue<Vertex> queue;
        for (Vertex w : h.rotation(x))
            if (pos[w] < 0 && dist[w] == kInf) {
                dist[w] = 1;
                parent[w] = x;
                queue.push(w);
            }
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            for (Vertex w : h.rotation(v))
                if (pos[w] < 0 && dist[w] == kInf) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                }
        }
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1)
                continue;  // consecutive around the cycle
            const Vertex y = boundary[j];
            ShortcutReport rep;
            if (h.adjacent(x, y)) {
                rep.chord = {x, y};
            } else {
                Vertex via = -1;
                for (Vertex w : h.rotation(y))
                    if (pos[w] < 0 && dist[w] != kInf && (via < 0 || dist[w] < dist[via]))
                        via = w;
                if (via < 0)
                    continue;
                std::vector<Vertex> path{y};
                for (Vertex v = via; v != x; v = parent[v])
                    path.push_back(v);
                path.push_back(x);
                rep.chord.assign(path.rbegin(), path.rend());
            }
            rep.chord_length = static_cast<int>(rep.chord.size()) - 1;
            rep.retract_length = retract[i][j];
            rep.base.assign(boundary.begin() + i, boundary.begin() + j + 1);
            const int d = rep.chord_length, r = rep.retract_length;
            if (d < r)
                rep.classification = ChordClass::Shortcut;
            else if (d == r)
                rep.classification = ChordClass::Tight;
            else if (d == r + 1)
                throw std::logic_error("chord length " + std::to_string(d) + " is one more than its retract");
            else
                rep.classification = ChordClass::Slack;

            if (rep.classification == ChordClass::Shortcut &&
                (!scan.shortcut || pair_key(rep) < pair_key(*scan.shortcut)))
                scan.shortcut = rep;
            if (rep.classification == ChordClass::Tight && (!scan.tight || pair_key(rep) < pair_key(*scan.tight)))
                scan.tight = rep;
            scan.reports.push_back(std::move(rep));
        }
    }
    return scan;
}

namespace {

struct QuadInput {
    HuedPatch extension;
    std::vector<Vertex> boundary;
    std::vector<Hue> hue;
    Coloring color;
};

QuadInput check_quad_input(const PlaneGraph& h, const PartialColoring& precoloring) {
    if (!is_near_quadrangulation(h))
        throw Error(ErrorKind::NotNearQuadrangulation, "graph is not 2-connected with all internal faces of length four");
    const int n = h.num_vertices();
    if (static_cast<int>(precoloring.size()) != n)
        throw Error(ErrorKind::Precondition, "precoloring has the wrong size");
    QuadInput in{patch_extension(h), h.outer_walk(), {}, {}};
    std::vector<bool> on(n, false);
    for (Vertex v : in.boundary)
        on[v] = true;
    for (Vertex v = 0; v < n; ++v) {
        if (on[v] && !precoloring[v])
            throw Error(ErrorKind::Precondition, "boundary vertex " + std::to_string(v) + " is uncolored");
        if (!on[v] && precoloring[v])
            throw Error(ErrorKind::Precondition, "internal vertex " + std::to_string(v) + " is precolored");
    }
    for (Dart e : h.edges())
        if (precoloring[e.from] && precoloring[e.to] && *precoloring[e.from] == *precoloring[e.to])
            throw Error(ErrorKind::ImproperColoring,
                        "edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + " has equal colors");
    for (Vertex v : in.boundary) {
        in.hue.push_back(in.extension.hue[v]);
        in.color.push_back(*precoloring[v]);
    }
    return in;
}

QuadVerdict decide(const PlaneGraph& h, const QuadInput& in) {
    QuadVerdict verdict;
    const auto image = check_viability_cycle(in.hue, in.color);
    if (!image) {
        verdict.stage = QuadStage::NotViable;
        return verdict;
    }
    verdict.boundary_image = *image;
    if (!is_null_homotopic(ClosedWalk<GridPoint>(*image))) {
        verdict.stage = QuadStage::NotNullHomotopic;
        return verdict;
    }
    auto scan = find_shortcut(h, in.boundary, *image);
    if (scan.shortcut) {
        verdict.stage = QuadStage::Shortcut;
        verdict.shortcut = std::move(scan.shortcut);
        return verdict;
    }
    verdict.stage = QuadStage::Extends;
    return verdict;
}

// A piece of h still to be colored. Its outer cycle is colored already.
struct QuadTask {
    PlaneGraph g;
    std::vector<Vertex> to_h;
};

std::array<Vertex, 4> quad_key(std::vector<Vertex> walk) {
    std::sort(walk.begin(), walk.end());
    return {walk[0], walk[1], walk[2], walk[3]};
}

// Internal faces of g on the side of `chord` that holds the boundary edge
// base[0]-base[1].
std::vector<int> faces_on_side(const PlaneGraph& g, const std::vector<Vertex>& chord, const std::vector<Vertex>& base) {
    std::set<std::pair<Vertex, Vertex>> cut;
    for (std::size_t t = 0; t + 1 < chord.size(); ++t)
        cut.insert(std::minmax(chord[t], chord[t + 1]));
    const auto& faces = g.faces();
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> by_edge;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        if (faces[fi].outer)
            continue;
        const auto& w = faces[fi].walk;
        for (std::size_t t = 0; t < w.size(); ++t)
            by_edge[std::minmax(w[t], w[(t + 1) % w.size()])].push_back(fi);
    }
    const auto& first = by_edge.at(std::minmax(base[0], base[1]));
    std::vector<bool> seen(faces.size(), false);
    std::vector<int> stack{first.front()};
    seen[first.front()] = true;
    std::vector<int> out;
    while (!stack.empty()) {
        const int fi = stack.back();
        stack.pop_back();
        out.push_back(fi);
        const auto& w = faces[fi].walk;
        for (std::size_t t = 0; t < w.size(); ++t) {
            const auto e = std::minmax(w[t], w[(t + 1) % w.size()]);
            if (cut.count(e))
                continue;
            for (int other : by_edge[e])
                if (!seen[other]) {
                    seen[other] = true;
                    stack.push_back(other);
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

QuadVerdict decide_quad(const PlaneGraph& h, const PartialColoring& precoloring) {
    return decide(h, check_quad_input(h, precoloring));
}

QuadExtension extend_quad(const PlaneGraph& h, const PartialColoring& precoloring) {
    const QuadInput in = check_quad_input(h, precoloring);
    QuadExtension out;
    out.verdict = decide(h, in);
    if (!out.verdict.extends())
        return out;

    const PlaneGraph& big = in.extension.graph();
    const auto& hue = in.extension.hue;
    PartialColoring color(big.num_vertices());
    for (Vertex v : in.boundary)
        color[v] = precoloring[v];

    std::map<std::array<Vertex, 4>, Vertex> face_vertex;
    {
        const auto ids = extension_face_vertices(h);
        for (std::size_t fi = 0; fi < h.faces().size(); ++fi)
            if (!h.faces()[fi].outer)
                face_vertex[quad_key(h.faces()[fi].walk)] = ids[fi];
    }

    std::vector<QuadTask> stack;
    {
        std::vector<Vertex> id(h.num_vertices());
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            id[v] = v;
        stack.push_back(QuadTask{h, std::move(id)});
    }
    while (!stack.empty()) {
        QuadTask task = std::move(stack.back());
        stack.pop_back();
        const PlaneGraph& g = task.g;
        const auto& to_h = task.to_h;
        const std::vector<Vertex> boundary = g.outer_walk();

        if (g.num_vertices() == 4 && g.faces().size() == 2) {
            std::vector<Vertex> quad;
            unsigned used = 0;
            for (Vertex v : boundary) {
                quad.push_back(to_h[v]);
                used |= 1u << color[to_h[v]]->code;
            }
            int code = 0;
            while (code < 4 && (used >> code & 1))
                ++code;
            if (code == 4)
                throw std::logic_error("quad uses all four colors");
            const Vertex fv = face_vertex.at(quad_key(quad));
            color[fv] = Color4::from_code(code);
            quad.push_back(fv);
            out.trace.push_back(QuadStep{QuadStep::Kind::Base, std::move(quad), {Color4::from_code(code)}});
            continue;
        }

        std::vector<Hue> bh;
        Coloring bc;
        for (Vertex v : boundary) {
            bh.push_back(hue[to_h[v]]);
            bc.push_back(*color[to_h[v]]);
        }
        const auto image = check_viability_cycle(bh, bc);
        if (!image)
            throw std::logic_error("sub-boundary lost viability");
        const ChordScan scan = find_shortcut(g, boundary, *image);
        if (scan.shortcut)
            throw std::logic_error("sub-problem has a shortcut");

        if (scan.tight) {
            const ShortcutReport& tight = *scan.tight;
            std::vector<GridPoint> along;
            const std::size_t start = std::find(boundary.begin(), boundary.end(), tight.base.front()) - boundary.begin();
            for (std::size_t t = 0; t < tight.base.size(); ++t)
                along.push_back((*image)[(start + t) % boundary.size()]);
            const Walk<GridPoint> r = topological_retract(along);
            if (r.size() != tight.chord.size())
                throw std::logic_error("tight chord does not match its retract");
            QuadStep step{QuadStep::Kind::Tight, {}, {}};
            for (std::size_t t = 0; t < r.size(); ++t) {
                const Vertex v = to_h[tight.chord[t]];
                if (grid_hue(r[t]) != hue[v])
                    throw std::logic_error("retract hue differs from chord hue");
                const Color4 c = grid_color(r[t]);
                if (color[v] && *color[v] != c)
                    throw std::logic_error("retract color differs at a chord end");
                color[v] = c;
                step.vertices.push_back(v);
                step.colors.push_back(c);
            }
            out.trace.push_back(std::move(step));

            std::vector<int> side = faces_on_side(g, tight.chord, tight.base);
            std::vector<int> other;
            for (int fi = 0; fi < static_cast<int>(g.faces().size()); ++fi)
                if (!g.faces()[fi].outer && !std::binary_search(side.begin(), side.end(), fi))
                    other.push_back(fi);
            for (const auto* part : {&other, &side}) {
                SubGraph sub = subgraph_of_faces(g, *part);
                std::vector<Vertex> ids;
                for (Vertex v : sub.to_parent)
                    ids.push_back(to_h[v]);
                stack.push_back(QuadTask{std::move(sub.graph), std::move(ids)});
            }
            continue;
        }

        // Every chord is slack: cut along the first boundary-to-interior edge.
        std::vector<bool> on(g.num_vertices(), false);
        for (Vertex v : boundary)
            on[v] = true;
        Vertex u = -1, v = -1;
        for (Vertex b : boundary) {
            const auto inner = std::find_if(g.rotation(b).begin(), g.rotation(b).end(), [&](Vertex w) { return !on[w]; });
            if (inner == g.rotation(b).end())
                continue;
            if (u < 0 || std::pair{to_h[b], b} < std::pair{to_h[u], u}) {
                u = b;
                v = *inner;
            }
        }
        if (u < 0)
            throw std::logic_error("no internal vertex next to the boundary");
        int code = 0;
        while (code == color[to_h[u]]->code)
            ++code;
        color[to_h[v]] = Color4::from_code(code);
        out.trace.push_back(QuadStep{QuadStep::Kind::Cut, {to_h[u], to_h[v]}, {Color4::from_code(code)}});
        CutResult cut = cut_along_edge(g, u, v);
        std::vector<Vertex> ids;
        for (Vertex x : cut.to_original)
            ids.push_back(to_h[x]);
        stack.push_back(QuadTask{std::move(cut.graph), std::move(ids)});
    }

    Coloring result;
    for (const auto& c : color) {
        if (!c)
            throw std::logic_error("extension left a vertex uncolored");
        result.push_back(*c);
    }
    for (Dart e : big.edges())
        if (result[e.from] == result[e.to])
            throw std::logic_error("extension is improper");
    out.coloring = std::move(result);
    return out;
}

namespace {

struct Piece {
    std::vector<Hue> hue;
    std::vector<Color4> color;
    std::vector<std::array<Vertex, 3>> faces;  // counterclockwise
    std::vector<Vertex> cycle;                 // interior on the left

    Vertex add(Hue h, Color4 c) {
        hue.push_back(h);
        color.push_back(c);
        return static_cast<Vertex>(hue.size()) - 1;
    }
};

// Point strictly inside the polygon; coordinates are scaled by 3 so that
// triangle centroids are integral and never level with a polygon vertex.
bool inside(std::int64_t x, std::int64_t y, const std::vector<GridPoint>& poly) {
    bool in = false;
    for (std::size_t a = 0, b = poly.size() - 1; a < poly.size(); b = a++) {
        const std::int64_t xa = 3 * poly[a].i, ya = 3 * poly[a].j;
        const std::int64_t xb = 3 * poly[b].i, yb = 3 * poly[b].j;
        if ((ya > y) == (yb > y))
            continue;
        // x-coordinate of the crossing compared without division
        const std::int64_t lhs = (x - xa) * (yb - ya);
        const std::int64_t rhs = (xb - xa) * (y - ya);
        if ((yb > ya) ? lhs < rhs : lhs > rhs)
            in = !in;
    }
    return in;
}

Piece injective_piece(const std::vector<GridPoint>& image) {
    Piece p;
    std::map<GridPoint, Vertex> id;
    for (GridPoint q : image) {
        id[q] = p.add(grid_hue(q), grid_color(q));
        p.cycle.push_back(id[q]);
    }
    std::int64_t area2 = 0;
    GridPoint lo = image.front(), hi = image.front();
    for (std::size_t a = 0; a < image.size(); ++a) {
        const GridPoint s = image[a], t = image[(a + 1) % image.size()];
        area2 += s.i * t.j - t.i * s.j;
        lo = {std::min(lo.i, s.i), std::min(lo.j, s.j)};
        hi = {std::max(hi.i, s.i), std::max(hi.j, s.j)};
    }
    auto vertex = [&](GridPoint q) {
        const auto it = id.find(q);
        if (it != id.end())
            return it->second;
        return id[q] = p.add(grid_hue(q), grid_color(q));
    };
    for (std::int64_t i = lo.i; i < hi.i; ++i)
        for (std::int64_t j = lo.j; j < hi.j; ++j) {
            // up (i,j),(i+1,j),(i+1,j+1) and down (i,j),(i+1,j+1),(i,j+1)
            if (inside(3 * i + 2, 3 * j + 1, image))
                p.faces.push_back({vertex({i, j}), vertex({i + 1, j}), vertex({i + 1, j + 1})});
            if (inside(3 * i + 1, 3 * j + 2, image))
                p.faces.push_back({vertex({i, j}), vertex({i + 1, j + 1}), vertex({i, j + 1})});
        }
    if (area2 < 0)
        for (auto& f : p.faces)
            std::swap(f[1], f[2]);
    return p;
}

Color4 smallest_color_except(std::initializer_list<Color4> used) {
    for (int code = 0; code < 4; ++code)
        if (std::none_of(used.begin(), used.end(), [&](Color4 c) { return c.code == code; }))
            return Color4::from_code(code);
    throw std::logic_error("no free color");
}

Piece build_piece(const std::vector<Hue>& hue, const std::vector<Color4>& color, const std::vector<GridPoint>& image) {
    const std::size_t len = image.size();
    if (len == 2) {
        Piece p;
        p.cycle = {p.add(hue[0], color[0]), p.add(hue[1], color[1])};
        return p;
    }
    std::size_t a = len, b = len;
    for (std::size_t s = 0; s < len && a == len; ++s)
        for (std::size_t t = s + 1; t < len; ++t)
            if (image[s] == image[t]) {
                a = s;
                b = t;
                break;
            }
    if (a == len)
        return injective_piece(image);

    auto slice = [&](std::size_t from, std::size_t count) {
        std::vector<Hue> h;
        std::vector<Color4> c;
        std::vector<GridPoint> f;
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t k = (from + t) % len;
            h.push_back(hue[k]);
            c.push_back(color[k]);
            f.push_back(image[k]);
        }
        return std::tuple{h, c, f};
    };
    const auto [h1, c1, f1] = slice(a, b - a);
    const auto [h2, c2, f2] = slice(b, len - (b - a));
    Piece p = build_piece(h1, c1, f1);
    const Piece q = build_piece(h2, c2, f2);

    // Glue q onto p at the repeated point z.
    const Vertex z = p.cycle.front();
    std::vector<Vertex> map(q.hue.size(), -1);
    map[q.cycle.front()] = z;
    for (Vertex v = 0; v < static_cast<Vertex>(q.hue.size()); ++v)
        if (map[v] < 0)
            map[v] = p.add(q.hue[v], q.color[v]);
    for (const auto& f : q.faces)
        p.faces.push_back({map[f[0]], map[f[1]], map[f[2]]});

    // Close the angle x z y at the second visit of z with a fan gadget whose
    // apex w copies z.
    const Vertex x = p.cycle.back();
    const Vertex y = map[q.cycle[1]];
    const Vertex w = p.add(p.hue[z], p.color[z]);
    std::vector<Vertex> path{x};
    if (p.hue[x] == p.hue[y]) {
        const Hue third(3 - p.hue[x].value - p.hue[z].value);
        path.push_back(p.add(third, smallest_color_except({p.color[z], p.color[x], p.color[y]})));
    } else {
        const Color4 c1 = smallest_color_except({p.color[z], p.color[x]});
        const Color4 c2 = smallest_color_except({p.color[z], p.color[y], c1});
        path.push_back(p.add(p.hue[y], c1));
        path.push_back(p.add(p.hue[x], c2));
    }
    path.push_back(y);
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        p.faces.push_back({path[t], w, path[t + 1]});
        p.faces.push_back({path[t], path[t + 1], z});
    }

    std::vector<Vertex> joined = p.cycle;
    joined.push_back(w);
    for (std::size_t t = 1; t < q.cycle.size(); ++t)
        joined.push_back(map[q.cycle[t]]);
    // Undo the rotation that put position a first.
    p.cycle.assign(len, -1);
    for (std::size_t t = 0; t < len; ++t)
        p.cycle[(a + t) % len] = joined[t];
    return p;
}

} // namespace

BuiltPatch build_patch_from_cycle(std::span<const Hue> hue, std::span<const Color4> color,
                                  std::span<const GridPoint> image) {
    const std::size_t len = hue.size();
    if (len < 3 || color.size() != len || image.size() != len)
        throw Error(ErrorKind::NotViable, "cycle and image sizes do not match");
    for (std::size_t i = 0; i < len; ++i) {
        if (grid_hue(image[i]) != hue[i] || grid_color(image[i]) != color[i])
            throw Error(ErrorKind::NotViable, "image point " + std::to_string(i) + " has the wrong hue or color");
        if (!grid_adjacent(image[i], image[(i + 1) % len]))
            throw Error(ErrorKind::NotViable, "image is not a closed grid walk");
    }
    const Piece p = build_piece(std::vector<Hue>(hue.begin(), hue.end()), std::vector<Color4>(color.begin(), color.end()),
                                std::vector<GridPoint>(image.begin(), image.end()));
    std::vector<std::vector<Vertex>> faces;
    for (const auto& f : p.faces)
        faces.push_back({f[0], f[1], f[2]});
    Patch patch = validate_patch(plane_graph_from_faces(static_cast<int>(p.hue.size()), faces));
    return BuiltPatch{DappledPatch::make(HuedPatch::make(std::move(patch), p.hue), p.color), p.cycle};
}

BuiltPatch build_patch_from_cycle(std::span<const Hue> hue, std::span<const Color4> color) {
    const auto image = check_viability_cycle(hue, color);
    if (!image)
        throw Error(ErrorKind::NotViable, "cycle coloring is not viable");
    return build_patch_from_cycle(hue, color, *image);
}

} // namespace precol
