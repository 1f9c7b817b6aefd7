#include "doctest.h"

#include <random>

#include "precol/generators.hpp"
#include "precol/homotopy.hpp"
#include "precol/oracle.hpp"
#include "precol/quad_solver.hpp"
#include "precol/standard_graphs.hpp"
#include "support.hpp"

using namespace precol;
using testing::labels_on;

namespace {

PartialColoring on_boundary(const PlaneGraph& h, const std::vector<int>& codes) {
    PartialColoring phi(h.num_vertices());
    for (std::size_t i = 0; i < codes.size(); ++i)
        phi[h.outer_walk()[i]] = Color4::from_code(codes[i]);
    return phi;
}

bool proper_on(const PlaneGraph& h, const PartialColoring& phi) {
    for (Dart e : h.edges())
        if (phi[e.from] && phi[e.to] && *phi[e.from] == *phi[e.to])
            return false;
    return true;
}

// Oracle verdict on the patch extension, with the precoloring padded out.
bool oracle_extends(const PlaneGraph& h, const PartialColoring& phi) {
    const HuedPatch g = patch_extension(h);
    PartialColoring full(g.graph().num_vertices());
    std::copy(phi.begin(), phi.end(), full.begin());
    const auto r = oracle_extend_4(g, full);
    REQUIRE(r.status != OracleStatus::Timeout);
    return r.status == OracleStatus::Extends;
}

struct Tally {
    int total = 0, extends = 0, shortcut = 0, winding = 0, not_viable = 0;
};

void check_against_oracle(const PlaneGraph& h, const PartialColoring& phi, Tally& tally) {
    const QuadExtension ext = extend_quad(h, phi);
    const bool expected = oracle_extends(h, phi);
    ++tally.total;
    switch (ext.verdict.stage) {
    case QuadStage::Extends: ++tally.extends; break;
    case QuadStage::Shortcut: ++tally.shortcut; break;
    case QuadStage::NotNullHomotopic: ++tally.winding; break;
    case QuadStage::NotViable: ++tally.not_viable; break;
    }
    CHECK(ext.verdict.extends() == expected);
    CHECK(ext.coloring.has_value() == expected);
    CHECK(decide_quad(h, phi).stage == ext.verdict.stage);
    if (ext.coloring) {
        PartialColoring full(patch_extension(h).graph().num_vertices());
        std::copy(phi.begin(), phi.end(), full.begin());
        CHECK(verify_extension(patch_extension(h).graph(), *ext.coloring, full));
    }
    if (ext.verdict.stage != QuadStage::NotViable && ext.verdict.stage != QuadStage::NotNullHomotopic) {
        // Both bases of every boundary pair retract to the same length.
        const auto r = boundary_retract_lengths(ext.verdict.boundary_image);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j)
                CHECK(r[i][j] == r[j][i]);
        for (const auto& rep : find_shortcut(h, h.outer_walk(), ext.verdict.boundary_image).reports)
            CHECK(rep.chord_length != rep.retract_length + 1);
    }
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size())
        return false;
    const ClosedWalk<Vertex> x(a);
    return x == ClosedWalk<Vertex>(b) || x == ClosedWalk<Vertex>(b).reversed();
}

} // namespace

TEST_CASE("find_shortcut") {
    SUBCASE("C4 has no chords") {
        const PlaneGraph h = cycle_graph(4);
        const auto phi = on_boundary(h, {0, 1, 0, 2});
        const QuadVerdict v = decide_quad(h, phi);
        REQUIRE(v.extends());
        const auto scan = find_shortcut(h, h.outer_walk(), v.boundary_image);
        CHECK(scan.reports.empty());
        CHECK_FALSE(scan.shortcut);
        CHECK_FALSE(scan.tight);
    }
    SUBCASE("winding image is rejected") {
        const std::vector<GridPoint> image{{0, 0}, {1, 0}, {1, 1}};
        try {
            find_shortcut(cycle_graph(3), std::vector<Vertex>{0, 1, 2}, image);
            FAIL("accepted a winding image");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotNullHomotopic);
        }
    }
    SUBCASE("a boundary folded back on itself across the strip is short-cut") {
        // 1x3 strip: boundary of length 8; the middle rung is a chord of length 1.
        const PlaneGraph h = grid_quadrangulation(1, 3);
        int shortcuts = 0;
        for_each_cycle_coloring(8, 4, true, [&](const std::vector<int>& seq) {
            const auto phi = on_boundary(h, seq);
            if (!proper_on(h, phi))
                return;
            const QuadVerdict v = decide_quad(h, phi);
            if (v.stage != QuadStage::Shortcut)
                return;
            ++shortcuts;
            REQUIRE(v.shortcut);
            CHECK(v.shortcut->chord_length < v.shortcut->retract_length);
            CHECK_FALSE(oracle_extends(h, phi));
        });
        CHECK(shortcuts > 0);
    }
}

TEST_CASE("decide_quad") {
    SUBCASE("C4 with three colors") {
        CHECK(decide_quad(cycle_graph(4), labels_on(4, {0, 1, 2, 3}, {1, 2, 1, 3})).extends());
    }
    SUBCASE("C4 with four colors is not viable") {
        // Two-hue grid cycles have length at least six.
        CHECK(decide_quad(cycle_graph(4), labels_on(4, {0, 1, 2, 3}, {1, 2, 3, 4})).stage == QuadStage::NotViable);
    }
    SUBCASE("C6 is not a near-quadrangulation") {
        try {
            decide_quad(cycle_graph(6), labels_on(6, {0, 1, 2, 3, 4, 5}, {1, 2, 1, 3, 1, 4}));
            FAIL("accepted C6");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotNearQuadrangulation);
        }
    }
    SUBCASE("input checks") {
        const PlaneGraph h = grid_quadrangulation(2, 2);
        PartialColoring phi(h.num_vertices());
        CHECK_THROWS_AS(decide_quad(h, phi), Error);
        CHECK_THROWS_AS(decide_quad(h, PartialColoring(3)), Error);
    }
}

TEST_CASE("wheel counterexample needs the quadrangulation hypothesis") {
    const PlaneGraph h = cycle_graph(6);
    const auto phi = labels_on(6, {0, 1, 2, 3, 4, 5}, {1, 2, 1, 3, 1, 4});
    const HuedPatch g = patch_extension(h);
    std::vector<Hue> hue(g.hue.begin(), g.hue.begin() + 6);
    Coloring color;
    for (const auto& c : phi)
        color.push_back(*c);
    const auto image = check_viability_cycle(hue, color);
    REQUIRE(image);
    CHECK(is_null_homotopic(ClosedWalk<GridPoint>(*image)));
    CHECK(find_shortcut(h, h.outer_walk(), *image).reports.empty());
    CHECK_FALSE(oracle_extends(h, phi));
    CHECK_THROWS_AS(decide_quad(h, phi), Error);
}

TEST_CASE("extend_quad") {
    SUBCASE("C4 colored 1,2,1,3 gets 4 in the middle") {
        const PlaneGraph h = cycle_graph(4);
        const QuadExtension ext = extend_quad(h, labels_on(4, {0, 1, 2, 3}, {1, 2, 1, 3}));
        REQUIRE(ext.coloring);
        CHECK((*ext.coloring)[4].label() == 4);
        REQUIRE(ext.trace.size() == 1);
        CHECK(ext.trace[0].kind == QuadStep::Kind::Base);
    }
    SUBCASE("2x2 grid with the boundary of a known coloring") {
        const PlaneGraph h = grid_quadrangulation(2, 2);
        const HuedPatch g = patch_extension(h);
        const auto witness = oracle_extend_4(g, PartialColoring(g.graph().num_vertices()));
        REQUIRE(witness.coloring);
        PartialColoring phi(h.num_vertices());
        for (Vertex v : h.outer_walk())
            phi[v] = (*witness.coloring)[v];
        const QuadExtension ext = extend_quad(h, phi);
        REQUIRE(ext.coloring);
        PartialColoring full(g.graph().num_vertices());
        std::copy(phi.begin(), phi.end(), full.begin());
        CHECK(verify_extension(g.graph(), *ext.coloring, full));
        CHECK(ext.trace.size() >= 4);
    }
    SUBCASE("random interior colorings restrict to extendable boundaries") {
        std::mt19937_64 rng(5);
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const PlaneGraph h = gen_near_quadrangulation(seed, 2 + static_cast<int>(seed % 12));
            const HuedPatch g = patch_extension(h);
            // Random proper coloring of the extension by seeded search.
            PartialColoring start(g.graph().num_vertices());
            start[static_cast<Vertex>(rng() % h.num_vertices())] = Color4::from_code(static_cast<int>(rng() % 4));
            const auto witness = oracle_extend_4(g, start);
            REQUIRE(witness.coloring);
            PartialColoring phi(h.num_vertices());
            for (Vertex v : h.outer_walk())
                phi[v] = (*witness.coloring)[v];
            const QuadExtension ext = extend_quad(h, phi);
            CHECK(ext.verdict.extends());
            REQUIRE(ext.coloring);
            PartialColoring full(g.graph().num_vertices());
            std::copy(phi.begin(), phi.end(), full.begin());
            CHECK(verify_extension(g.graph(), *ext.coloring, full));
        }
    }
}

TEST_CASE("decide_quad and extend_quad agree with the oracle") {
    SUBCASE("every near-quadrangulation with at most four quads") {
        Tally tally;
        enumerate_near_quadrangulations(4, [&](const PlaneGraph& h) {
            for_each_cycle_coloring(static_cast<int>(h.outer_walk().size()), 4, true,
                                    [&](const std::vector<int>& seq) {
                                        const auto phi = on_boundary(h, seq);
                                        if (proper_on(h, phi))
                                            check_against_oracle(h, phi, tally);
                                    });
        });
        CHECK(tally.extends > 0);
        CHECK(tally.shortcut > 0);
        CHECK(tally.winding > 0);
    }
    SUBCASE("random quadrangulations up to ten quads") {
        std::mt19937_64 rng(9);
        Tally tally;
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            const PlaneGraph h = gen_near_quadrangulation(seed, 1 + static_cast<int>(seed % 10));
            const auto& c = h.outer_walk();
            std::vector<int> codes(c.size());
            codes[0] = static_cast<int>(rng() % 4);
            for (std::size_t i = 1; i < c.size(); ++i)
                codes[i] = (codes[i - 1] + 1 + static_cast<int>(rng() % 3)) % 4;
            const auto phi = on_boundary(h, codes);
            if (proper_on(h, phi))
                check_against_oracle(h, phi, tally);
        }
        CHECK(tally.total > 200);
    }
}

TEST_CASE("build_patch_from_cycle") {
    auto check_built = [](const std::vector<Hue>& hue, const Coloring& color, const BuiltPatch& b) {
        const auto& cv = b.cycle_vertices;
        REQUIRE(cv.size() == hue.size());
        CHECK(same_cycle(cv, b.patch.hued.boundary()));
        for (std::size_t i = 0; i < cv.size(); ++i) {
            CHECK(b.patch.hued.hue[cv[i]] == hue[i]);
            CHECK(b.patch.color[cv[i]] == color[i]);
        }
        CHECK_NOTHROW(validate_patch(b.patch.graph()));
    };
    SUBCASE("a grid triangle gives that triangle") {
        const std::vector<GridPoint> image{{0, 0}, {1, 0}, {1, 1}};
        std::vector<Hue> hue;
        Coloring color;
        for (GridPoint p : image) {
            hue.push_back(grid_hue(p));
            color.push_back(grid_color(p));
        }
        const BuiltPatch b = build_patch_from_cycle(hue, color, image);
        CHECK(b.patch.graph().num_vertices() == 3);
        CHECK(b.patch.graph().faces().size() == 2);
        check_built(hue, color, b);
    }
    SUBCASE("figure eight through one point") {
        const std::vector<GridPoint> image{{0, 0}, {1, 0}, {1, 1}, {0, 0}, {-1, -1}, {0, -1}};
        std::vector<Hue> hue;
        Coloring color;
        for (GridPoint p : image) {
            hue.push_back(grid_hue(p));
            color.push_back(grid_color(p));
        }
        const BuiltPatch b = build_patch_from_cycle(hue, color, image);
        // two triangles, a path of length three and the apex
        CHECK(b.patch.graph().num_vertices() == 8);
        CHECK(b.patch.graph().faces().size() == 1 + 2 + 6);
        check_built(hue, color, b);
    }
    SUBCASE("non-viable input") {
        const std::vector<Hue> hue{Hue(0), Hue(1), Hue(2)};
        const Coloring color{Color4::from_code(0), Color4::from_code(0), Color4::from_code(1)};
        CHECK_THROWS_AS(build_patch_from_cycle(hue, color), Error);
    }
    SUBCASE("random viable cycles") {
        std::mt19937_64 rng(2);
        int built = 0;
        for (std::uint64_t seed = 0; built < 200; ++seed) {
            const int n = 3 + static_cast<int>(rng() % 14);
            std::vector<Hue> hue{Hue(0)};
            while (static_cast<int>(hue.size()) < n)
                hue.push_back(Hue(hue.back().value + 1 + static_cast<int>(rng() % 2)));
            if (hue.back() == hue.front())
                continue;
            const auto color = gen_viable_cycle_coloring(seed, hue);
            if (!color)
                continue;
            ++built;
            check_built(hue, *color, build_patch_from_cycle(hue, *color));
        }
    }
}
