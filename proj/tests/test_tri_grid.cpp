#include "doctest.h"

#include <map>
#include <set>

#include "precol/standard_graphs.hpp"
#include "precol/tri_grid.hpp"

using namespace precol;

namespace {

Color4 bits(int b0, int b1) { return Color4::from_bits(b0, b1); }

// Anchor enumeration over a window: tries every assignment of window points
// with the right hue and color, pruning on adjacency only.
bool cycle_maps_into_window(const std::vector<Hue>& hue, const std::vector<Color4>& color, int size) {
    const std::size_t n = hue.size();
    std::vector<std::vector<GridPoint>> candidates(n);
    for (std::size_t v = 0; v < n; ++v)
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                const GridPoint p{i, j};
                if ((i + j) % 3 == hue[v].value && bits(i % 2, j % 2) == color[v])
                    candidates[v].push_back(p);
            }
    std::vector<GridPoint> image(n);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == n)
            return grid_adjacent(image[n - 1], image[0]);
        for (GridPoint p : candidates[v]) {
            if (v > 0 && !grid_adjacent(image[v - 1], p))
                continue;
            image[v] = p;
            if (self(self, v + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<std::pair<GridPoint, GridPoint>> lattice_ball_edges(GridPoint c, int radius) {
    std::vector<std::pair<GridPoint, GridPoint>> out;
    for (std::int64_t i = c.i - radius; i <= c.i + radius; ++i)
        for (std::int64_t j = c.j - radius; j <= c.j + radius; ++j) {
            const GridPoint p{i, j};
            if (grid_distance(p, c) > radius)
                continue;
            for (GridStep s : kGridSteps) {
                const GridPoint q = p + s;
                if (grid_distance(q, c) <= radius && p < q)
                    out.emplace_back(p, q);
            }
        }
    return out;
}

} // namespace

TEST_CASE("grid_adjacent") {
    CHECK(grid_adjacent({0, 0}, {1, 1}));
    CHECK_FALSE(grid_adjacent({0, 0}, {1, -1}));
    CHECK_FALSE(grid_adjacent({3, 4}, {3, 4}));
    for (GridStep s : kGridSteps)
        CHECK(grid_adjacent({5, -2}, GridPoint{5, -2} + s));
}

TEST_CASE("grid attributes") {
    CHECK(grid_hue({0, 0}) == Hue(0));
    CHECK(grid_hue({-1, 0}) == Hue(2));
    CHECK(grid_color({-1, 2}) == bits(1, 0));
    CHECK(grid_distance({0, 0}, {2, 2}) == 2);
    CHECK(grid_distance({0, 0}, {2, -2}) == 4);
    // neighbours differ in hue and color from the point
    for (GridStep s : kGridSteps) {
        CHECK(grid_hue(GridPoint{0, 0} + s) != grid_hue({0, 0}));
        CHECK(grid_color(GridPoint{0, 0} + s) != grid_color({0, 0}));
    }
}

TEST_CASE("sigma") {
    CHECK(sigma(1, bits(0, 1)) == 1);
    CHECK(sigma(2, bits(1, 1)) == 1);
    CHECK(sigma(1, bits(1, 1)) == -1);
    CHECK(sigma(2, bits(1, 0)) == -1);
}

TEST_CASE("edge_delta") {
    const Hue h0(0);
    const Color4 c0 = bits(0, 0);
    CHECK(edge_delta(h0, c0, Hue(1), bits(0, 1)) == GridStep{0, 1});
    CHECK(edge_delta(h0, c0, Hue(2), bits(0, 1)) == GridStep{0, -1});
    CHECK(edge_delta(h0, c0, Hue(2), bits(1, 1)) == GridStep{1, 1});
    CHECK_THROWS_AS(edge_delta(h0, c0, h0, bits(0, 1)), Error);
    CHECK_THROWS_AS(edge_delta(h0, c0, Hue(1), c0), Error);

    // antisymmetry, and agreement with the grid itself
    for (int hu = 0; hu < 3; ++hu)
        for (int hv = 0; hv < 3; ++hv)
            for (int cu = 0; cu < 4; ++cu)
                for (int cv = 0; cv < 4; ++cv) {
                    if (hu == hv || cu == cv)
                        continue;
                    const GridStep d = edge_delta(Hue(hu), Color4::from_code(cu), Hue(hv), Color4::from_code(cv));
                    CHECK(d == -edge_delta(Hue(hv), Color4::from_code(cv), Hue(hu), Color4::from_code(cu)));
                }
    for (std::int64_t i = -3; i <= 3; ++i)
        for (std::int64_t j = -3; j <= 3; ++j)
            for (GridStep s : kGridSteps) {
                const GridPoint p{i, j};
                const GridPoint q = p + s;
                CHECK(edge_delta(grid_hue(p), grid_color(p), grid_hue(q), grid_color(q)) == s);
            }
}

TEST_CASE("walk_delta") {
    const std::vector<Hue> hue{Hue(0), Hue(1), Hue(2)};
    const std::vector<Color4> color{bits(0, 0), bits(1, 0), bits(1, 1)};
    const std::vector<Vertex> single{1};
    CHECK(walk_delta(single, hue, color) == GridStep{});
    const std::vector<Vertex> triangle{0, 1, 2, 0};
    CHECK(walk_delta(triangle, hue, color) == GridStep{});
    const std::vector<Vertex> back{0, 1, 0};
    CHECK(walk_delta(back, hue, color) == GridStep{});
}

TEST_CASE("build_homomorphism") {
    SUBCASE("grid triangle anchored at itself") {
        const PlaneGraph t = cycle_graph(3);
        const std::vector<GridPoint> pts{{0, 0}, {1, 0}, {1, 1}};
        std::vector<Hue> hue;
        Coloring color;
        for (auto p : pts) {
            hue.push_back(grid_hue(p));
            color.push_back(grid_color(p));
        }
        const auto dp = DappledPatch::make(HuedPatch::make(validate_patch(t), hue), color);
        const GridHom f = build_homomorphism(dp, 0, {0, 0});
        CHECK(f == pts);
        // shifts preserving hue and color are multiples of (6, 0), (0, 6), (2, 4)
        for (GridStep shift : {GridStep{6, 0}, GridStep{2, 4}, GridStep{-6, 12}}) {
            const GridHom g = build_homomorphism(dp, 0, GridPoint{0, 0} + shift);
            for (std::size_t v = 0; v < 3; ++v)
                CHECK(g[v] == pts[v] + shift);
        }
        CHECK_THROWS_AS(build_homomorphism(dp, 0, {1, 1}), Error);
        CHECK_THROWS_AS(build_homomorphism(dp, 0, {1, 0}), Error);
    }
    SUBCASE("folded 4-wheel reproduces its window") {
        // boundary 0..3, hub 4 on a hexagon centred at (1,1)
        const std::vector<GridPoint> pts{{2, 1}, {2, 2}, {2, 1}, {1, 0}, {1, 1}};
        std::vector<Hue> hue;
        Coloring color;
        for (auto p : pts) {
            hue.push_back(grid_hue(p));
            color.push_back(grid_color(p));
        }
        const Patch p = validate_patch(wheel_graph(4));
        CHECK(hue == compute_hues(p));
        const auto dp = DappledPatch::make(HuedPatch::make(p, hue), color);
        for (Vertex anchor = 0; anchor < 5; ++anchor)
            CHECK(build_homomorphism(dp, anchor, pts[anchor]) == pts);
        const auto edges = p.graph.edges();
        CHECK(is_grid_homomorphism(edges, hue, color, pts));
    }
}

TEST_CASE("step_neighbor") {
    CHECK(step_neighbor({0, 0}, Hue(1), bits(1, 0)) == GridPoint{1, 0});
    for (int c = 0; c < 4; ++c)
        CHECK_FALSE(step_neighbor({0, 0}, Hue(0), Color4::from_code(c)).has_value());
    std::set<std::pair<int, int>> pairs;
    for (GridStep s : kGridSteps) {
        const GridPoint q = GridPoint{1, 1} + s;
        pairs.emplace(grid_hue(q).value, grid_color(q).code);
        CHECK(step_neighbor({1, 1}, grid_hue(q), grid_color(q)) == q);
    }
    CHECK(pairs.size() == 6);
}

TEST_CASE("canonical_point") {
    for (int h = 0; h < 3; ++h)
        for (int c = 0; c < 4; ++c) {
            const GridPoint p = canonical_point(Hue(h), Color4::from_code(c));
            CHECK(grid_hue(p) == Hue(h));
            CHECK(grid_color(p) == Color4::from_code(c));
            CHECK(p.i >= 0);
            CHECK(p.i < 6);
        }
}

TEST_CASE("check_viability") {
    SUBCASE("dappled triangle") {
        const std::vector<Hue> hue{Hue(0), Hue(1), Hue(2)};
        const std::vector<Color4> color{bits(0, 0), bits(1, 0), bits(1, 1)};
        CHECK(check_viability_cycle(hue, color).has_value());
    }
    SUBCASE("wheel counterexample boundary") {
        const std::vector<Hue> hue{Hue(0), Hue(1), Hue(0), Hue(1), Hue(0), Hue(1)};
        std::vector<Color4> color;
        for (int label : {1, 2, 1, 3, 1, 4})
            color.push_back(Color4::from_label(label));
        const auto f = check_viability_cycle(hue, color);
        REQUIRE(f.has_value());
        CHECK(cycle_maps_into_window(hue, color, 12));
    }
    SUBCASE("C4 example against anchor enumeration") {
        const std::vector<Hue> hue{Hue(0), Hue(1), Hue(0), Hue(1)};
        const std::vector<Color4> color{bits(0, 0), bits(1, 0), bits(0, 0), bits(1, 1)};
        CHECK(check_viability_cycle(hue, color).has_value() == cycle_maps_into_window(hue, color, 12));
    }
    SUBCASE("every proper coloring of short hued cycles matches the window oracle") {
        int viable = 0, not_viable = 0;
        for (const auto& hue_seq : {std::vector<int>{0, 1, 0, 1}, std::vector<int>{0, 1, 2, 0, 1, 2},
                                    std::vector<int>{0, 1, 0, 2, 1, 2}, std::vector<int>{0, 1, 2}}) {
            const std::size_t n = hue_seq.size();
            std::vector<Hue> hue;
            for (int h : hue_seq)
                hue.emplace_back(h);
            std::size_t total = 1;
            for (std::size_t i = 0; i < n; ++i)
                total *= 4;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<Color4> color;
                std::size_t c = code;
                for (std::size_t i = 0; i < n; ++i, c /= 4)
                    color.push_back(Color4::from_code(static_cast<int>(c % 4)));
                bool proper = true;
                for (std::size_t i = 0; i < n; ++i)
                    proper = proper && color[i] != color[(i + 1) % n];
                if (!proper)
                    continue;
                const bool v = check_viability_cycle(hue, color).has_value();
                CHECK(v == cycle_maps_into_window(hue, color, 12));
                (v ? viable : not_viable)++;
            }
        }
        CHECK(viable > 0);
        CHECK(not_viable > 0);
    }
    SUBCASE("improper input") {
        const std::vector<Hue> hue{Hue(0), Hue(1), Hue(0), Hue(1)};
        const std::vector<Color4> color{bits(0, 0), bits(0, 0), bits(0, 1), bits(1, 1)};
        CHECK_THROWS_AS(check_viability_cycle(hue, color), Error);
    }
}

TEST_CASE("homomorphisms agreeing at one vertex agree everywhere") {
    const std::vector<GridPoint> pts{{2, 1}, {2, 2}, {2, 1}, {1, 0}, {1, 1}};
    std::vector<Hue> hue;
    Coloring color;
    for (auto p : pts) {
        hue.push_back(grid_hue(p));
        color.push_back(grid_color(p));
    }
    const auto dp = DappledPatch::make(HuedPatch::make(validate_patch(wheel_graph(4)), hue), color);
    const GridHom a = build_homomorphism(dp, 0, {2, 1});
    const GridHom b = build_homomorphism(dp, 3, a[3]);
    CHECK(a == b);
}

TEST_CASE("hexagon retraction") {
    SUBCASE("examples") {
        const Hexagon x{{1, 1}};
        CHECK(hexagon_retraction(x, {1, 1}) == GridPoint{1, 1});
        CHECK(hexagon_retraction(x, {0, 0}) == GridPoint{0, 0});
        // (3,1) has hue 1; its distance in the punctured hue-0/1 lattice decides the image
        const std::int64_t m = hex_lattice_distance({3, 1}, {-20, -20}, {20, 20});
        CHECK(m == 3);
        CHECK(hexagon_retraction(x, {3, 1}) == GridPoint{2, 2});
    }
    SUBCASE("box margin agrees with a wide window within radius 8") {
        for (std::int64_t i = -7; i <= 9; ++i)
            for (std::int64_t j = -7; j <= 9; ++j) {
                const GridPoint q{i, j};
                if (grid_distance(q, {1, 1}) > 8 || grid_hue(q).value == 2)
                    continue;
                const GridPoint lo{std::min<std::int64_t>(q.i, 1) - 6, std::min<std::int64_t>(q.j, 1) - 6};
                const GridPoint hi{std::max<std::int64_t>(q.i, 1) + 6, std::max<std::int64_t>(q.j, 1) + 6};
                CHECK(hex_lattice_distance(q, lo, hi) == hex_lattice_distance(q, {-20, -20}, {20, 20}));
            }
    }
    SUBCASE("retraction properties for centres of every hue and color") {
        for (const GridPoint c : {GridPoint{1, 1}, GridPoint{0, 0}, GridPoint{2, 1}, GridPoint{-3, 4},
                                  GridPoint{5, 5}, GridPoint{4, -1}}) {
            const Hexagon x{c};
            for (GridPoint p : x.points())
                CHECK(hexagon_retraction(x, p) == p);
            int violations = 0;
            for (auto [p, q] : lattice_ball_edges(c, 8)) {
                const GridPoint rp = hexagon_retraction(x, p);
                const GridPoint rq = hexagon_retraction(x, q);
                if (grid_hue(rp) != grid_hue(p) || !x.contains(rp) || !grid_adjacent(rp, rq))
                    ++violations;
            }
            CHECK(violations == 0);
        }
    }
}
