#include "precol/homotopy.hpp"

#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace precol {

std::optional<ClosedWalk<GridPoint>> closed_walk_image(std::span<const Vertex> walk, std::span<const Hue> hue,
                                                       std::span<const Color4> color) {
    if (walk.empty())
        return ClosedWalk<GridPoint>();
    std::unordered_map<Vertex, int> local;
    std::vector<Vertex> members;
    for (Vertex v : walk)
        if (local.emplace(v, static_cast<int>(members.size())).second)
            members.push_back(v);
    std::vector<Hue> lhue;
    std::vector<Color4> lcolor;
    for (Vertex v : members) {
        lhue.push_back(hue[v]);
        lcolor.push_back(color[v]);
    }
    std::vector<Dart> edges;
    for (std::size_t i = 0; i < walk.size() && walk.size() > 1; ++i)
        edges.push_back(Dart{local[walk[i]], local[walk[(i + 1) % walk.size()]]});
    const auto f = check_viability(static_cast<int>(members.size()), edges, lhue, lcolor);
    if (!f)
        return std::nullopt;
    std::vector<GridPoint> image;
    for (Vertex v : walk)
        image.push_back((*f)[local[v]]);
    return ClosedWalk<GridPoint>(std::move(image));
}

bool null_homotopic_on(std::span<const Vertex> walk, std::span<const Hue> hue, std::span<const Color4> color) {
    const auto image = closed_walk_image(walk, hue, color);
    if (!image)
        throw Error(ErrorKind::NotViable, "coloring is not viable on the walk");
    return is_null_homotopic(*image);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

FaceCombination face_combination(const PlaneGraph& h) {
    if (!is_simple_cycle(h.outer_walk()))
        throw Error(ErrorKind::Precondition, "outer face is not bounded by a cycle");
    const auto& faces = h.faces();
    const int outer = h.outer_face_index();
    const int nf = static_cast<int>(faces.size());

    // dual spanning tree: internal merges first, then links to the outer face
    std::vector<std::vector<std::pair<int, Dart>>> tree(nf);
    UnionFind uf(nf);
    const auto edges = h.edges();
    auto try_link = [&](Dart e, bool touching_outer) {
        const int a = h.face_of(h.dart_id(e));
        const int b = h.face_of(h.dart_id(Dart{e.to, e.from}));
        if ((a == outer || b == outer) != touching_outer || a == b)
            return;
        if (uf.unite(a, b)) {
            tree[a].emplace_back(b, e);
            tree[b].emplace_back(a, e);
        }
    };
    for (Dart e : edges)
        try_link(e, false);
    for (Dart e : edges)
        try_link(e, true);

    FaceCombination out;
    std::vector<Vertex> z = h.outer_walk();
    std::vector<char> seen(nf, 0);
    std::queue<int> queue;
    seen[outer] = 1;
    queue.push(outer);
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop();
        for (const auto& [p, e] : tree[q]) {
            if (seen[p])
                continue;
            seen[p] = 1;
            queue.push(p);
            const Dart d = h.face_of(h.dart_id(e)) == q ? e : Dart{e.to, e.from};
            const Vertex x = d.from;
            const Vertex y = d.to;
            const std::size_t m = z.size();
            std::size_t t = m;
            for (std::size_t i = 0; i < m; ++i)
                if (z[i] == x && z[(i + 1) % m] == y) {
                    t = (i + 1) % m;
                    break;
                }
            const auto& w = faces[p].walk;
            const std::size_t k = w.size();
            std::size_t s = k;
            for (std::size_t i = 0; i < k; ++i)
                if (w[i] == y && w[(i + 1) % k] == x) {
                    s = i;
                    break;
                }
            if (t == m || s == k)
                throw std::logic_error("face_combination: shared dart not found");
            z = combine(z, ClosedWalk<Vertex>(w), t, s);
            out.splices.push_back(Splice{p, q, d});
        }
    }
    out.walk = ClosedWalk<Vertex>(std::move(z));
    return out;
}

Coloring boundary_colors(const std::vector<Vertex>& boundary, const PartialColoring& precoloring) {
    Coloring out;
    for (Vertex v : boundary) {
        if (v >= static_cast<Vertex>(precoloring.size()) || !precoloring[v])
            throw Error(ErrorKind::Precondition, "boundary vertex " + std::to_string(v) + " is uncolored");
        out.push_back(*precoloring[v]);
    }
    return out;
}

namespace {

Coloring dense_colors(const PartialColoring& precoloring, int n) {
    Coloring out(n);
    for (int v = 0; v < n && v < static_cast<int>(precoloring.size()); ++v)
        if (precoloring[v])
            out[v] = *precoloring[v];
    return out;
}

// Closed walks from `start` with the given hue sequence. same_as[i] < i forces
// position i onto the point already chosen for position same_as[i].
void enumerate_closed(GridPoint start, std::span<const Hue> hues, std::span<const int> same_as,
                      std::vector<std::vector<GridPoint>>& out) {
    const std::size_t k = hues.size();
    if (k == 0 || grid_hue(start) != hues[0])
        return;
    std::vector<GridPoint> pts{start};
    auto rec = [&](auto&& self) -> void {
        const std::size_t t = pts.size();
        if (t == k) {
            if (grid_adjacent(pts.back(), start))
                out.push_back(pts);
            return;
        }
        const std::int64_t remaining = static_cast<std::int64_t>(k - t);
        auto visit = [&](GridPoint q) {
            if (grid_distance(q, start) > remaining)
                return;
            pts.push_back(q);
            self(self);
            pts.pop_back();
        };
        if (same_as[t] < static_cast<int>(t)) {
            const GridPoint q = pts[same_as[t]];
            if (grid_adjacent(pts.back(), q))
                visit(q);
            return;
        }
        for (GridStep s : kGridSteps) {
            const GridPoint q = pts.back() + s;
            if (grid_hue(q) == hues[t])
                visit(q);
        }
    };
    rec(rec);
}

std::vector<int> first_occurrence(std::span<const Vertex> walk) {
    std::vector<int> out(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        out[i] = static_cast<int>(i);
        for (std::size_t j = 0; j < i; ++j)
            if (walk[j] == walk[i]) {
                out[i] = static_cast<int>(j);
                break;
            }
    }
    return out;
}

} // namespace

std::vector<std::vector<GridPoint>> closed_walks_with_hues(GridPoint start, std::span<const Hue> hues) {
    std::vector<int> same_as(hues.size());
    std::iota(same_as.begin(), same_as.end(), 0);
    std::vector<std::vector<GridPoint>> out;
    enumerate_closed(start, hues, same_as, out);
    return out;
}

bool necessary_condition_quad(const HuedPatch& g, const PartialColoring& precoloring) {
    const auto& boundary = g.boundary();
    boundary_colors(boundary, precoloring);
    const Coloring color = dense_colors(precoloring, g.graph().num_vertices());
    return null_homotopic_on(boundary, g.hue, color);
}

namespace {

struct FaceShapes {
    // shapes[r]: displacement sequences of the closed walks whose hue pattern
    // is the face walk rotated to start at position r
    std::vector<std::vector<std::vector<GridStep>>> shapes;
    std::vector<Hue> hues;
    bool null_only = true;
    bool empty = false;
};

FaceShapes face_shapes(std::span<const Vertex> walk, std::span<const Hue> hue) {
    FaceShapes fs;
    const std::size_t k = walk.size();
    for (Vertex v : walk)
        fs.hues.push_back(hue[v]);
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<Vertex> rot(k);
        std::vector<Hue> hs(k);
        for (std::size_t t = 0; t < k; ++t) {
            rot[t] = walk[(r + t) % k];
            hs[t] = fs.hues[(r + t) % k];
        }
        const auto same_as = first_occurrence(rot);
        const GridPoint origin{hs[0].value, 0};
        std::vector<std::vector<GridPoint>> walks;
        enumerate_closed(origin, hs, same_as, walks);
        std::vector<std::vector<GridStep>> rel;
        for (const auto& w : walks) {
            if (r == 0 && !is_null_homotopic(ClosedWalk<GridPoint>(w)))
                fs.null_only = false;
            std::vector<GridStep> d;
            for (const GridPoint& p : w)
                d.push_back(p - origin);
            rel.push_back(std::move(d));
        }
        if (r == 0 && rel.empty())
            fs.empty = true;
        fs.shapes.push_back(std::move(rel));
    }
    return fs;
}

struct PointVectorHash {
    std::size_t operator()(const std::pair<std::vector<GridPoint>, std::uint64_t>& key) const {
        std::size_t h = std::hash<std::uint64_t>{}(key.second);
        for (const GridPoint& p : key.first)
            h = h * 1000003u ^ std::hash<std::int64_t>{}(p.i * 7919 + p.j);
        return h;
    }
};

class CombinationSearch {
public:
    CombinationSearch(std::vector<FaceShapes> faces, std::size_t budget) : faces_(std::move(faces)), budget_(budget) {}

    bool run(std::vector<GridPoint> z0) {
        int remaining = 0;
        for (const auto& f : faces_)
            remaining += static_cast<int>(f.hues.size());
        return dfs(std::move(z0), 0, remaining);
    }

    bool aborted() const { return aborted_; }
    std::size_t nodes() const { return nodes_; }
    const std::vector<GridPoint>& witness() const { return witness_; }

private:
    bool dfs(const std::vector<GridPoint>& z, std::uint64_t used, int remaining) {
        if (aborted_)
            return false;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        const ClosedWalk<GridPoint> cz(z);
        const auto reduced = topological_retract(cz);
        if (remaining == 0) {
            if (reduced.empty()) {
                witness_ = z;
                return true;
            }
            return false;
        }
        // each added edge cancels at most one edge of the retract
        if (static_cast<int>(reduced.size()) > remaining)
            return false;
        if (!memo_.emplace(cz.canonical(), used).second)
            return false;

        for (std::size_t p = 0; p < faces_.size(); ++p) {
            if (used & (std::uint64_t{1} << p))
                continue;
            const auto& face = faces_[p];
            const int len = static_cast<int>(face.hues.size());
            for (std::size_t t = 0; t < z.size(); ++t) {
                const Hue h = grid_hue(z[t]);
                for (std::size_t r = 0; r < face.shapes.size(); ++r) {
                    if (face.hues[r] != h)
                        continue;
                    for (const auto& shape : face.shapes[r]) {
                        std::vector<GridPoint> next(z.begin(), z.begin() + t + 1);
                        for (std::size_t s = 1; s < shape.size(); ++s)
                            next.push_back(z[t] + shape[s]);
                        next.push_back(z[t]);
                        next.insert(next.end(), z.begin() + t + 1, z.end());
                        if (dfs(next, used | (std::uint64_t{1} << p), remaining - len))
                            return true;
                        if (aborted_)
                            return false;
                    }
                }
            }
        }
        return false;
    }

    std::vector<FaceShapes> faces_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<GridPoint> witness_;
    std::unordered_set<std::pair<std::vector<GridPoint>, std::uint64_t>, PointVectorHash> memo_;
};

} // namespace

NecessaryReport necessary_condition_general(const HuedPatch& g, std::span<const Dart> h_edges,
                                            const PartialColoring& precoloring, int search_bound,
                                            std::size_t node_budget) {
    const auto& boundary = g.boundary();
    const Coloring bcolors = boundary_colors(boundary, precoloring);
    std::vector<Hue> bhues;
    for (Vertex v : boundary)
        bhues.push_back(g.hue[v]);
    const auto cycle_image = check_viability_cycle(bhues, bcolors);
    if (!cycle_image)
        throw Error(ErrorKind::NotViable, "boundary coloring is not viable");

    const SubGraph h = subgraph_of_edges(g.graph(), h_edges);
    std::vector<Vertex> outer;
    for (Vertex v : h.graph.outer_walk())
        outer.push_back(h.to_parent[v]);
    if (!(ClosedWalk<Vertex>(outer) == ClosedWalk<Vertex>(boundary)))
        throw Error(ErrorKind::Precondition, "subgraph does not contain the boundary cycle");

    std::unordered_map<Vertex, GridPoint> image;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        image[boundary[i]] = (*cycle_image)[i];
    // the outer face trace runs against the boundary orientation, giving -f(C)
    std::vector<GridPoint> z0;
    for (Vertex v : outer)
        z0.push_back(image[v]);

    NecessaryReport report;
    std::vector<FaceShapes> faces;
    int total = static_cast<int>(z0.size());
    for (const Face& f : h.graph.faces()) {
        if (f.outer)
            continue;
        std::vector<Vertex> walk;
        for (Vertex v : f.walk)
            walk.push_back(h.to_parent[v]);
        total += static_cast<int>(walk.size());
        faces.push_back(face_shapes(walk, g.hue));
    }

    for (const auto& f : faces)
        if (f.empty) {
            report.verdict = NecessaryVerdict::ObstructionProven;
            report.reason = "some internal face has no closed walk with its hue sequence";
            return report;
        }

    const bool all_null = std::all_of(faces.begin(), faces.end(), [](const FaceShapes& f) { return f.null_only; });
    if (all_null) {
        // combining null-homotopic walks never changes null-homotopy
        const ClosedWalk<GridPoint> cz(z0);
        if (is_null_homotopic(cz)) {
            report.reason = "boundary image is null-homotopic and every face walk set is null-homotopic";
            report.witness = cz;
        } else {
            report.verdict = NecessaryVerdict::ObstructionProven;
            report.reason = "boundary image is not null-homotopic and every face walk set is null-homotopic";
        }
        return report;
    }

    if (total > search_bound) {
        report.reason = "combined walk length " + std::to_string(total) + " exceeds the search bound";
        return report;
    }
    if (faces.size() > 63) {
        report.reason = "too many faces for the exhaustive search";
        return report;
    }

    CombinationSearch search(std::move(faces), node_budget);
    const bool found = search.run(std::move(z0));
    report.nodes = search.nodes();
    if (found) {
        report.reason = "null-homotopic combination found";
        report.witness = ClosedWalk<GridPoint>(search.witness());
    } else if (search.aborted()) {
        report.reason = "node budget exhausted";
    } else {
        report.verdict = NecessaryVerdict::ObstructionProven;
        report.reason = "exhaustive search found no null-homotopic combination";
    }
    return report;
}

} // namespace precol
