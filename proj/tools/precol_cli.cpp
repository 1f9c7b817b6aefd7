// Command-line front end. Every invocation prints JSON lines on stdout.
// Exit codes: 0 yes, 1 no, 2 invalid input, 3 inconclusive, 4 internal error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "precol/generators.hpp"
#include "precol/homotopy.hpp"
#include "precol/io.hpp"
#include "precol/oracle.hpp"
#include "precol/quad_solver.hpp"
#include "precol/reduction.hpp"

using namespace precol;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kInvalid = 2, kInconclusive = 3, kInternal = 4 };

struct Options {
    bool witness = false;
    bool trace = false;
    std::string subgraph = "full";
    int bound = kDefaultSearchBound;
    double timeout = 0;
};

json colors_json(const Coloring& c) {
    json out = json::array();
    for (Color4 x : c)
        out.push_back(color_json(x));
    return out;
}

json points_json(std::span<const GridPoint> ps) {
    json out = json::array();
    for (GridPoint p : ps)
        out.push_back(point_json(p));
    return out;
}

HuedPatch hued_patch(const Instance& inst) {
    Patch p = validate_patch(inst.graph());
    std::vector<Hue> hue = inst.hues ? *inst.hues : compute_hues(p);
    return HuedPatch::make(std::move(p), std::move(hue));
}

// Hues for any supported graph: given, computed for a patch, or taken from
// the patch extension of a near-quadrangulation.
std::vector<Hue> hues_of(const Instance& inst, const PlaneGraph& g) {
    if (inst.hues)
        return *inst.hues;
    if (is_near_quadrangulation(g)) {
        auto h = patch_extension(g).hue;
        h.resize(g.num_vertices());
        return h;
    }
    return compute_hues(validate_patch(g));
}

int cmd_validate(const Instance& inst, const Options&, json& out) {
    const PlaneGraph g = inst.graph();
    bool patch = false, eulerian = false, odd = false;
    try {
        const Patch p = validate_patch(g);
        patch = true;
        eulerian = is_near_eulerian(p);
        if (eulerian)
            odd = is_odd_patch(HuedPatch::make(p, compute_hues(p)));
    } catch (const Error& e) {
        out["patch_error"] = to_string(e.kind());
    }
    const bool quad = is_near_quadrangulation(g);
    out["patch"] = patch;
    out["near_eulerian"] = eulerian;
    out["odd_patch"] = odd;
    out["near_quadrangulation"] = quad;
    out["valid"] = patch || quad;
    return patch || quad ? kYes : kInvalid;
}

int cmd_hues(const Instance& inst, const Options&, json& out) {
    const Patch p = validate_patch(inst.graph());
    Instance with = inst;
    std::vector<Hue> hue = compute_hues(p);
    json h = json::array();
    for (Hue x : hue)
        h.push_back(x.value);
    out["hues"] = h;
    with.hues = std::move(hue);
    out["instance"] = to_json(with);
    return kYes;
}

int cmd_viable(const Instance& inst, const Options& opt, json& out) {
    const PlaneGraph g = inst.graph();
    const auto hue = hues_of(inst, g);
    const auto phi = inst.precoloring();
    const auto& boundary = g.outer_walk();
    std::vector<Hue> bh;
    for (Vertex v : boundary)
        bh.push_back(hue[v]);
    const Coloring bc = boundary_colors(boundary, phi);
    const auto image = check_viability_cycle(bh, bc);
    out["viable"] = image.has_value();
    if (!image)
        return kNo;
    std::vector<Dart> edges;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        edges.push_back(Dart{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % boundary.size())});
    if (!is_grid_homomorphism(edges, bh, bc, *image))
        throw std::logic_error("viability witness failed verification");
    out["null_homotopic"] = is_null_homotopic(ClosedWalk<GridPoint>(*image));
    if (opt.witness) {
        out["boundary"] = boundary;
        out["image"] = points_json(*image);
    }
    return kYes;
}

int cmd_decide(const Instance& inst, const Options& opt, json& out) {
    const HuedPatch g = hued_patch(inst);
    const auto phi = inst.precoloring();
    const HexagonVerdict v = decide_single_hexagon(g, phi);
    out["stage"] = to_string(v.stage);
    if (v.certificate) {
        out["center"] = point_json(v.certificate->hexagon.center);
        out["central_hue"] = v.certificate->hexagon.central_hue().value;
        out["central_color"] = color_json(v.certificate->hexagon.central_color());
    }
    switch (v.stage) {
    case HexagonStage::Extends:
        if (!verify_extension(g.graph(), *v.coloring, phi))
            throw std::logic_error("extension failed verification");
        if (opt.witness)
            out["coloring"] = colors_json(*v.coloring);
        return kYes;
    case HexagonStage::NotSingleHexagon: return kInconclusive;
    default: return kNo;
    }
}

json report_json(const ShortcutReport& r) {
    return json{{"chord", r.chord},
                {"base", r.base},
                {"chord_length", r.chord_length},
                {"retract_length", r.retract_length},
                {"class", to_string(r.classification)}};
}

int cmd_quad_decide(const Instance& inst, const Options& opt, json& out) {
    const PlaneGraph h = inst.graph();
    const QuadVerdict v = decide_quad(h, inst.precoloring());
    out["stage"] = to_string(v.stage);
    out["extends"] = v.extends();
    if (v.shortcut)
        out["shortcut"] = report_json(*v.shortcut);
    if (opt.witness && !v.boundary_image.empty())
        out["image"] = points_json(v.boundary_image);
    return v.extends() ? kYes : kNo;
}

int cmd_quad_extend(const Instance& inst, const Options& opt, json& out) {
    const PlaneGraph h = inst.graph();
    const auto phi = inst.precoloring();
    const QuadExtension ext = extend_quad(h, phi);
    out["stage"] = to_string(ext.verdict.stage);
    out["extends"] = ext.coloring.has_value();
    if (ext.verdict.shortcut)
        out["shortcut"] = report_json(*ext.verdict.shortcut);
    if (!ext.coloring)
        return kNo;
    const HuedPatch g = patch_extension(h);
    PartialColoring full(g.graph().num_vertices());
    std::copy(phi.begin(), phi.end(), full.begin());
    if (!verify_extension(g.graph(), *ext.coloring, full))
        throw std::logic_error("extension failed verification");
    if (opt.witness) {
        out["coloring"] = colors_json(*ext.coloring);
        out["extension"] = to_json(instance_of(g.graph()));
    }
    if (opt.trace) {
        json steps = json::array();
        for (const QuadStep& s : ext.trace)
            steps.push_back(json{{"kind", to_string(s.kind)}, {"vertices", s.vertices}, {"colors", colors_json(s.colors)}});
        out["trace"] = std::move(steps);
    }
    return kYes;
}

int cmd_check_necessary(const Instance& inst, const Options& opt, json& out) {
    const HuedPatch g = hued_patch(inst);
    std::vector<Dart> edges;
    if (opt.subgraph == "boundary") {
        const auto& c = g.boundary();
        for (std::size_t i = 0; i < c.size(); ++i)
            edges.push_back(Dart{c[i], c[(i + 1) % c.size()]});
    } else if (opt.subgraph == "bipartite") {
        for (Dart e : g.graph().edges())
            if (g.hue[e.from].value != 2 && g.hue[e.to].value != 2)
                edges.push_back(e);
    } else if (opt.subgraph == "full") {
        edges = g.graph().edges();
    } else {
        throw Error(ErrorKind::Parse, "unknown subgraph " + opt.subgraph);
    }
    const NecessaryReport r = necessary_condition_general(g, edges, inst.precoloring(), opt.bound);
    out["verdict"] = r.verdict == NecessaryVerdict::ObstructionProven ? "ObstructionProven" : "Inconclusive";
    out["reason"] = r.reason;
    out["nodes"] = r.nodes;
    out["condition_holds"] = r.witness.has_value();
    if (opt.witness && r.witness)
        out["witness"] = points_json(r.witness->sequence());
    if (r.verdict == NecessaryVerdict::ObstructionProven)
        return kNo;
    return r.witness ? kYes : kInconclusive;
}

int cmd_oracle(const Instance& inst, const Options& opt, json& out) {
    const PlaneGraph g = inst.graph();
    const auto phi = inst.precoloring();
    Deadline deadline;
    if (opt.timeout > 0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opt.timeout));
    const OracleResult r = oracle_extend_4(g, phi, deadline);
    out["nodes"] = r.nodes;
    switch (r.status) {
    case OracleStatus::Extends:
        out["verdict"] = "Extends";
        if (!verify_extension(g, *r.coloring, phi))
            throw std::logic_error("oracle witness failed verification");
        if (opt.witness)
            out["coloring"] = colors_json(*r.coloring);
        return kYes;
    case OracleStatus::NoExtension: out["verdict"] = "NoExtension"; return kNo;
    case OracleStatus::Timeout: out["verdict"] = "Timeout"; return kInconclusive;
    }
    return kInternal;
}

int cmd_retract_walk(const json& doc, const Options& opt, json& out) {
    if (!doc.is_object() || !doc.contains("walk") || !doc["walk"].is_array())
        throw Error(ErrorKind::Parse, "expected {\"walk\": [...], \"closed\": bool}");
    const bool closed = doc.value("closed", false);
    auto run = [&](auto walk, auto emit) {
        if (closed) {
            using V = typename decltype(walk)::value_type;
            auto [r, steps] = retract_with_trace(ClosedWalk<V>(walk));
            out["retract"] = emit(r.sequence());
            out["null_homotopic"] = r.empty();
            if (opt.trace)
                out["steps"] = steps;
        } else {
            auto [r, steps] = retract_with_trace(walk);
            out["retract"] = emit(r);
            if (opt.trace)
                out["steps"] = steps;
        }
    };
    const json& w = doc["walk"];
    if (!w.empty() && w[0].is_array()) {
        std::vector<GridPoint> walk;
        for (const json& p : w)
            walk.push_back(parse_point(p));
        run(walk, [](const std::vector<GridPoint>& s) { return points_json(s); });
    } else {
        std::vector<Vertex> walk;
        for (const json& v : w) {
            if (!v.is_number_integer())
                throw Error(ErrorKind::Parse, "walk entries must be integers or [i, j] points");
            walk.push_back(v.get<Vertex>());
        }
        run(walk, [](const std::vector<Vertex>& s) { return json(s); });
    }
    return kYes;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("PRECOL_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 0;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, int size, json& out) {
    Instance inst;
    if (kind == "window") {
        const GridWindow w = gen_grid_window(seed, size);
        inst = instance_of(w.patch.graph());
        inst.hues = w.patch.hued.hue;
        PartialColoring c(w.patch.color.begin(), w.patch.color.end());
        set_boundary_coloring(inst, w.patch.hued.boundary(), c);
    } else if (kind == "quad") {
        const PlaneGraph h = gen_near_quadrangulation(seed, size);
        const HuedPatch g = patch_extension(h);
        std::mt19937_64 rng(seed);
        PartialColoring start(g.graph().num_vertices());
        start[static_cast<Vertex>(rng() % h.num_vertices())] = Color4::from_code(static_cast<int>(rng() % 4));
        const auto witness = oracle_extend_4(g, start);
        inst = instance_of(h);
        PartialColoring c(witness.coloring->begin(), witness.coloring->end());
        set_boundary_coloring(inst, h.outer_walk(), c);
    } else if (kind == "cycle") {
        if (size < 3)
            throw Error(ErrorKind::Precondition, "cycle length must be at least 3");
        std::mt19937_64 rng(seed);
        for (int attempt = 0;; ++attempt) {
            std::vector<Hue> hue{Hue(0)};
            while (static_cast<int>(hue.size()) < size)
                hue.push_back(Hue((hue.back().value + 1 + static_cast<int>(rng() % 2)) % 3));
            if (hue.back() == hue.front())
                continue;
            const auto color = gen_viable_cycle_coloring(rng(), hue);
            if (!color) {
                if (attempt > 1000)
                    throw Error(ErrorKind::NotViable, "no viable cycle coloring found");
                continue;
            }
            const BuiltPatch b = build_patch_from_cycle(hue, *color);
            inst = instance_of(b.patch.graph());
            inst.hues = b.patch.hued.hue;
            PartialColoring c(b.patch.color.begin(), b.patch.color.end());
            set_boundary_coloring(inst, b.cycle_vertices, c);
            break;
        }
    } else {
        throw Error(ErrorKind::Parse, "unknown kind " + kind);
    }
    inst.seed = seed;
    out = to_json(inst);
    return kYes;
}

using FileCommand = std::function<int(const std::string&, json&)>;

int guarded(const FileCommand& cmd, const std::string& path, json& out) {
    try {
        return cmd(path, out);
    } catch (const Error& e) {
        out["error"] = to_string(e.kind());
        out["message"] = e.what();
        return kInvalid;
    } catch (const std::exception& e) {
        out["error"] = "Internal";
        out["message"] = e.what();
        return kInternal;
    }
}

int run_files(const std::string& name, const FileCommand& cmd, const std::string& file, const std::string& batch,
              unsigned threads) {
    std::vector<std::string> paths;
    if (!batch.empty()) {
        for (const auto& entry : std::filesystem::directory_iterator(batch))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
    } else {
        paths.push_back(file);
    }
    std::vector<json> results(paths.size());
    std::vector<int> codes(paths.size(), kYes);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < paths.size(); i = next++) {
            results[i] = json{{"command", name}, {"file", paths[i]}};
            codes[i] = guarded(cmd, paths[i], results[i]);
            results[i]["exit"] = codes[i];
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(paths.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const json& r : results)
        std::cout << r.dump() << '\n';
    return paths.empty() ? kYes : *std::max_element(codes.begin(), codes.end());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Precoloring extension on dappled triangulated disks"};
    app.require_subcommand(1);
    Options opt;
    std::string file, batch;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    struct Entry {
        std::string name;
        std::string help;
        std::function<int(const Instance&, const Options&, json&)> run;
    };
    const std::vector<Entry> entries{
        {"validate", "report patch, near-Eulerian and near-quadrangulation status", cmd_validate},
        {"hues", "compute the hues of a near-Eulerian patch", cmd_hues},
        {"viable", "check viability of the boundary coloring", cmd_viable},
        {"decide", "single-hexagon decision pipeline", cmd_decide},
        {"quad-decide", "decide extension for a near-quadrangulation", cmd_quad_decide},
        {"quad-extend", "construct the extension for a near-quadrangulation", cmd_quad_extend},
        {"check-necessary", "bounded search for a null-homotopic face combination", cmd_check_necessary},
        {"oracle", "exhaustive 4-coloring extension search", cmd_oracle},
    };

    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "instance file");
        sub->add_option("--batch", batch, "run on every .json file in a directory");
        sub->add_option("--threads", threads, "worker threads for --batch");
        sub->add_flag("--witness", opt.witness, "include witnesses");
        sub->add_flag("--trace", opt.trace, "include construction traces");
    };
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common(sub);
        if (e.name == "check-necessary") {
            sub->add_option("--subgraph", opt.subgraph, "boundary | full | bipartite")
                ->check(CLI::IsMember({"boundary", "full", "bipartite"}));
            sub->add_option("--bound", opt.bound, "combined walk length bound");
        }
        if (e.name == "oracle")
            sub->add_option("--timeout", opt.timeout, "seconds; 0 means none");
        subs.emplace_back(sub, &e);
    }

    CLI::App* retract = app.add_subcommand("retract-walk", "topological retract of a walk");
    add_common(retract);

    std::string kind = "window";
    std::uint64_t seed = default_seed();
    int size = 8;
    CLI::App* generate = app.add_subcommand("generate", "emit a random instance");
    generate->add_option("--kind", kind, "window | quad | cycle")->check(CLI::IsMember({"window", "quad", "cycle"}));
    generate->add_option("--seed", seed, "seed (default $PRECOL_SEED or 0)");
    generate->add_option("--size", size, "triangles, quads or cycle length");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) {
        json out;
        const int code = guarded([&](const std::string&, json& o) { return cmd_generate(kind, seed, size, o); }, "",
                                 out);
        std::cout << out.dump() << '\n';
        return code;
    }
    if (file.empty() && batch.empty()) {
        std::cerr << "an instance file or --batch DIR is required\n";
        return kInvalid;
    }
    if (retract->parsed())
        return run_files("retract-walk", [&](const std::string& path, json& out) {
            std::ifstream in(path);
            if (!in)
                throw Error(ErrorKind::Parse, "cannot open " + path);
            json doc;
            try {
                in >> doc;
            } catch (const json::exception& e) {
                throw Error(ErrorKind::Parse, e.what());
            }
            return cmd_retract_walk(doc, opt, out);
        }, file, batch, threads);
    for (const auto& [sub, entry] : subs)
        if (sub->parsed())
            return run_files(entry->name, [&, entry = entry](const std::string& path, json& out) {
                return entry->run(read_instance(path), opt, out);
            }, file, batch, threads);
    return kInvalid;
}
