#include "precol/io.hpp"

#include <fstream>

namespace precol {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::int64_t integer(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        bad(what + " must be an integer");
    return j.get<std::int64_t>();
}

Vertex vertex_id(const json& j, int n, const std::string& what) {
    const auto v = integer(j, what);
    if (v < 0 || v >= n)
        bad(what + " " + std::to_string(v) + " is out of range");
    return static_cast<Vertex>(v);
}

} // namespace

json color_json(Color4 c) { return json::array({c.code >> 1, c.code & 1}); }

Color4 parse_color(const json& j) {
    if (!j.is_array() || j.size() != 2)
        bad("color must be [b0, b1]");
    const auto b0 = integer(j[0], "color bit"), b1 = integer(j[1], "color bit");
    if ((b0 != 0 && b0 != 1) || (b1 != 0 && b1 != 1))
        bad("color bits must be 0 or 1");
    return Color4::from_bits(static_cast<int>(b0), static_cast<int>(b1));
}

json point_json(GridPoint p) { return json::array({p.i, p.j}); }

GridPoint parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2)
        bad("grid point must be [i, j]");
    return GridPoint{integer(j[0], "grid coordinate"), integer(j[1], "grid coordinate")};
}

PlaneGraph Instance::graph() const { return PlaneGraph(rotations, outer); }

PartialColoring Instance::precoloring() const {
    PartialColoring out = colors ? *colors : PartialColoring(vertices);
    for (const auto& [v, c] : boundary_coloring) {
        if (out[v] && *out[v] != c)
            bad("boundary_coloring disagrees with colors at vertex " + std::to_string(v));
        out[v] = c;
    }
    return out;
}

Instance parse_instance(const json& doc) {
    if (!doc.is_object())
        bad("instance must be a JSON object");
    for (const char* key : {"vertices", "rotations", "outer"})
        if (!doc.contains(key))
            bad(std::string("missing key \"") + key + "\"");
    Instance inst;
    const auto n = integer(doc["vertices"], "vertices");
    if (n <= 0)
        bad("vertices must be positive");
    inst.vertices = static_cast<int>(n);

    const json& rot = doc["rotations"];
    if (!rot.is_array() || static_cast<int>(rot.size()) != inst.vertices)
        bad("rotations must list one array per vertex");
    for (const json& r : rot) {
        if (!r.is_array())
            bad("rotation must be an array");
        std::vector<Vertex> nb;
        for (const json& w : r)
            nb.push_back(vertex_id(w, inst.vertices, "neighbour"));
        inst.rotations.push_back(std::move(nb));
    }

    const json& outer = doc["outer"];
    if (!outer.is_array() || outer.size() != 2)
        bad("outer must be [u, v]");
    inst.outer = Dart{vertex_id(outer[0], inst.vertices, "outer"), vertex_id(outer[1], inst.vertices, "outer")};

    if (doc.contains("hues") && !doc["hues"].is_null()) {
        const json& h = doc["hues"];
        if (!h.is_array() || static_cast<int>(h.size()) != inst.vertices)
            bad("hues must list one value per vertex");
        std::vector<Hue> hues;
        for (const json& x : h) {
            const auto v = integer(x, "hue");
            if (v < 0 || v > 2)
                bad("hue must be 0, 1 or 2");
            hues.emplace_back(static_cast<int>(v));
        }
        inst.hues = std::move(hues);
    }
    if (doc.contains("colors") && !doc["colors"].is_null()) {
        const json& c = doc["colors"];
        if (!c.is_array() || static_cast<int>(c.size()) != inst.vertices)
            bad("colors must list one entry per vertex");
        PartialColoring colors;
        for (const json& x : c)
            colors.push_back(x.is_null() ? std::nullopt : std::optional<Color4>(parse_color(x)));
        inst.colors = std::move(colors);
    }
    if (doc.contains("boundary_coloring")) {
        const json& b = doc["boundary_coloring"];
        if (!b.is_array())
            bad("boundary_coloring must be an array");
        for (const json& e : b) {
            if (!e.is_array() || e.size() != 2)
                bad("boundary_coloring entries must be [v, [b0, b1]]");
            inst.boundary_coloring.emplace_back(vertex_id(e[0], inst.vertices, "boundary vertex"), parse_color(e[1]));
        }
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned())
            bad("seed must be a non-negative integer");
        inst.seed = doc["seed"].get<std::uint64_t>();
    }
    return inst;
}

Instance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
    return parse_instance(doc);
}

json to_json(const Instance& inst) {
    json doc;
    doc["vertices"] = inst.vertices;
    doc["rotations"] = inst.rotations;
    doc["outer"] = json::array({inst.outer.from, inst.outer.to});
    if (inst.hues) {
        json h = json::array();
        for (Hue x : *inst.hues)
            h.push_back(x.value);
        doc["hues"] = std::move(h);
    }
    if (inst.colors) {
        json c = json::array();
        for (const auto& x : *inst.colors)
            c.push_back(x ? color_json(*x) : json());
        doc["colors"] = std::move(c);
    }
    if (!inst.boundary_coloring.empty()) {
        json b = json::array();
        for (const auto& [v, c] : inst.boundary_coloring)
            b.push_back(json::array({v, color_json(c)}));
        doc["boundary_coloring"] = std::move(b);
    }
    if (inst.seed)
        doc["seed"] = *inst.seed;
    return doc;
}

Instance instance_of(const PlaneGraph& g) {
    Instance inst;
    inst.vertices = g.num_vertices();
    inst.rotations = g.rotations();
    inst.outer = g.outer_dart();
    return inst;
}

void set_boundary_coloring(Instance& inst, const std::vector<Vertex>& boundary, const PartialColoring& coloring) {
    inst.boundary_coloring.clear();
    for (Vertex v : boundary)
        if (coloring[v])
            inst.boundary_coloring.emplace_back(v, *coloring[v]);
}

} // namespace precol
