#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "precol/patch.hpp"
#include "precol/standard_graphs.hpp"

using namespace precol;

namespace {

int total_face_length(const PlaneGraph& g) {
    int sum = 0;
    for (const Face& f : g.faces())
        sum += static_cast<int>(f.walk.size());
    return sum;
}

void check_euler(const PlaneGraph& g) {
    CHECK(total_face_length(g) == 2 * g.num_edges());
    CHECK(g.num_vertices() - g.num_edges() + static_cast<int>(g.faces().size()) == 2);
}

bool same_cycle(std::vector<Vertex> a, std::vector<Vertex> b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::rotate(a.begin(), a.begin() + 1, a.end());
        if (a == b)
            return true;
    }
    return false;
}

int count_internal(const PlaneGraph& g) { return static_cast<int>(g.faces().size()) - 1; }

PlaneGraph k4_patch() {
    const std::vector<std::vector<Vertex>> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
    return plane_graph_from_faces(4, faces);
}

} // namespace

TEST_CASE("triangle traces into two faces of length three") {
    const PlaneGraph g = cycle_graph(3);
    REQUIRE(g.faces().size() == 2);
    int outer = 0;
    for (const Face& f : g.faces()) {
        CHECK(f.walk.size() == 3);
        outer += f.outer;
    }
    CHECK(outer == 1);
    check_euler(g);
}

TEST_CASE("face tracing follows the predecessor rule") {
    const PlaneGraph g = cycle_graph(3);
    const Face& inner = g.faces()[1 - g.outer_face_index()];
    CHECK(same_cycle(inner.walk, {0, 1, 2}));
    CHECK(same_cycle(g.outer_walk(), {2, 1, 0}));
    for (int id = 0; id < g.num_darts(); ++id) {
        const Dart d = g.dart(id);
        const Dart nx = g.next_in_face(d);
        CHECK(nx.from == d.to);
        const auto rot = g.rotation(d.to);
        const int pu = g.position(d.to, d.from);
        CHECK(rot[(pu + rot.size() - 1) % rot.size()] == nx.to);
    }
}

TEST_CASE("single edge has one face of length two") {
    const PlaneGraph g({{1}, {0}}, Dart{0, 1});
    REQUIRE(g.faces().size() == 1);
    CHECK(g.faces()[0].walk.size() == 2);
    CHECK(g.faces()[0].outer);
    check_euler(g);
}

TEST_CASE("4-wheel has a 4-cycle outer face and four triangles") {
    const PlaneGraph g = wheel_graph(4);
    CHECK(g.outer_walk().size() == 4);
    int triangles = 0;
    for (const Face& f : g.faces())
        if (!f.outer && f.walk.size() == 3)
            ++triangles;
    CHECK(triangles == 4);
    check_euler(g);
}

TEST_CASE("malformed rotations are structural errors") {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { PlaneGraph({{1}, {}}, Dart{0, 1}); }) == ErrorKind::Structural);
    CHECK(kind([] { PlaneGraph({{1, 1}, {0}}, Dart{0, 1}); }) == ErrorKind::Structural);
    CHECK(kind([] { PlaneGraph({{0}}, Dart{0, 0}); }) == ErrorKind::Structural);
    CHECK(kind([] { PlaneGraph({{1}, {0}, {3}, {2}}, Dart{0, 1}); }) == ErrorKind::Structural);
    CHECK(kind([] { PlaneGraph({{1}, {0}}, Dart{0, 2}); }) == ErrorKind::Structural);
    // K4 drawn with a crossing: rotations that violate Euler's formula
    CHECK(kind([] { PlaneGraph({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, Dart{0, 1}); }) ==
          ErrorKind::Structural);
}

TEST_CASE("validate_patch") {
    const Patch p = validate_patch(wheel_graph(4));
    CHECK(same_cycle(p.boundary, {3, 2, 1, 0}));
    CHECK(p.on_boundary(0));
    CHECK_FALSE(p.on_boundary(4));

    try {
        validate_patch(cycle_graph(6));
        FAIL("C6 accepted as a patch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InternalFaceNotTriangle);
    }

    const HuedPatch ext = patch_extension(grid_quadrangulation(2, 2));
    CHECK_NOTHROW(validate_patch(ext.graph()));
}

TEST_CASE("non-cycle outer boundary is rejected") {
    // two triangles sharing vertex 0
    const PlaneGraph g({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}}, Dart{1, 0});
    try {
        validate_patch(g);
        FAIL("bowtie accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OuterBoundaryNotCycle);
    }
}

TEST_CASE("is_near_eulerian") {
    CHECK(is_near_eulerian(validate_patch(wheel_graph(4))));
    CHECK_FALSE(is_near_eulerian(validate_patch(k4_patch())));
    CHECK(is_near_eulerian(validate_patch(wheel_graph(6))));
}

TEST_CASE("compute_hues") {
    SUBCASE("triangle") {
        const auto hue = compute_hues(validate_patch(cycle_graph(3)));
        CHECK(hue == std::vector<Hue>{Hue(0), Hue(1), Hue(2)});
    }
    SUBCASE("K4 is not near-Eulerian") {
        try {
            compute_hues(validate_patch(k4_patch()));
            FAIL("K4 got hues");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotNearEulerian);
        }
    }
    SUBCASE("4-wheel") {
        const auto hue = compute_hues(validate_patch(wheel_graph(4)));
        CHECK(hue == std::vector<Hue>{Hue(0), Hue(1), Hue(0), Hue(1), Hue(2)});
    }
    SUBCASE("5-wheel has an odd hub") {
        CHECK_THROWS_AS(compute_hues(validate_patch(wheel_graph(5))), Error);
    }
}

TEST_CASE("patch_extension") {
    SUBCASE("C4 gives the 4-wheel") {
        const HuedPatch h = patch_extension(cycle_graph(4));
        CHECK(h.graph().num_vertices() == 5);
        CHECK(h.hue[4] == Hue(2));
        CHECK(h.graph().degree(4) == 4);
        CHECK(h.hue == compute_hues(h.patch));
    }
    SUBCASE("C6 gives the 6-wheel") {
        const HuedPatch h = patch_extension(cycle_graph(6));
        CHECK(h.graph().num_vertices() == 7);
        CHECK(h.graph().degree(6) == 6);
        CHECK(h.boundary().size() == 6);
    }
    SUBCASE("2x2 grid") {
        const PlaneGraph b = grid_quadrangulation(2, 2);
        const HuedPatch h = patch_extension(b);
        CHECK(h.graph().num_vertices() == 9 + 4);
        CHECK(count_internal(h.graph()) == 16);
        CHECK(is_near_eulerian(h.patch));
        for (Vertex v = 0; v < b.num_vertices(); ++v)
            CHECK(h.graph().degree(v) == 2 * b.degree(v) - (h.patch.on_boundary(v) ? 1 : 0));
    }
    SUBCASE("errors") {
        try {
            patch_extension(cycle_graph(5));
            FAIL("odd cycle accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotBipartite);
        }
        try {
            patch_extension(PlaneGraph({{1}, {0, 2}, {1}}, Dart{0, 1}));
            FAIL("path accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotTwoConnected);
        }
    }
}

TEST_CASE("is_odd_patch") {
    const HuedPatch wheel = patch_extension(cycle_graph(4));
    CHECK(is_odd_patch(wheel));
    // rhombus: boundary vertices of degree 2 and 3
    const std::vector<std::vector<Vertex>> faces{{0, 1, 2}, {0, 2, 3}};
    const Patch rh = validate_patch(plane_graph_from_faces(4, faces));
    CHECK_FALSE(is_odd_patch(HuedPatch::make(rh, compute_hues(rh))));
}

TEST_CASE("is_near_quadrangulation") {
    CHECK(is_near_quadrangulation(cycle_graph(4)));
    CHECK_FALSE(is_near_quadrangulation(cycle_graph(6)));
    CHECK(is_near_quadrangulation(grid_quadrangulation(2, 3)));
    CHECK(is_near_quadrangulation(two_quad_strip()));
    CHECK_FALSE(is_near_quadrangulation(wheel_graph(4)));
}

TEST_CASE("cut_along_edge") {
    SUBCASE("two-quad strip") {
        const PlaneGraph h = two_quad_strip();
        const CutResult cut = cut_along_edge(h, 0, 4);
        CHECK(cut.boundary.size() == 6);
        CHECK(cut.to_original[cut.u2] == 0);
        CHECK(internal_edge_count(cut.graph) == internal_edge_count(h) - 1);
        CHECK(is_near_quadrangulation(cut.graph));
        CHECK(count_internal(cut.graph) == count_internal(h));
        check_euler(cut.graph);
    }
    SUBCASE("2x2 grid at its centre") {
        const PlaneGraph h = grid_quadrangulation(2, 2);
        const CutResult cut = cut_along_edge(h, 1, 4);
        CHECK(cut.boundary.size() == 10);
        CHECK(internal_edge_count(cut.graph) == internal_edge_count(h) - 1);
        CHECK(is_near_quadrangulation(cut.graph));
        // every internal face survives with original vertex labels
        std::vector<std::vector<Vertex>> before, after;
        for (const Face& f : h.faces())
            if (!f.outer)
                before.push_back(f.walk);
        for (const Face& f : cut.graph.faces())
            if (!f.outer) {
                std::vector<Vertex> w;
                for (Vertex v : f.walk)
                    w.push_back(cut.to_original[v]);
                after.push_back(w);
            }
        REQUIRE(before.size() == after.size());
        for (const auto& f : before)
            CHECK(std::any_of(after.begin(), after.end(), [&](const auto& g) { return same_cycle(f, g); }));
    }
    SUBCASE("preconditions") {
        const PlaneGraph h = grid_quadrangulation(2, 2);
        CHECK_THROWS_AS(cut_along_edge(h, 4, 1), Error);
        CHECK_THROWS_AS(cut_along_edge(h, 0, 4), Error);
        CHECK_THROWS_AS(cut_along_edge(h, 0, 1), Error);
    }
}
