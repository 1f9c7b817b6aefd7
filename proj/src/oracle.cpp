#include "precol/oracle.hpp"

#include <array>
#include <string>

namespace precol {

namespace {

class Backtracker {
public:
    Backtracker(const PlaneGraph& g, Deadline deadline)
        : g_(g), deadline_(deadline), color_(g.num_vertices(), -1), blocked_(g.num_vertices(), {0, 0, 0, 0}) {}

    void fix(Vertex v, int c) {
        color_[v] = c;
        for (Vertex w : g_.rotation(v))
            ++blocked_[w][c];
    }

    void unfix(Vertex v) {
        const int c = color_[v];
        for (Vertex w : g_.rotation(v))
            --blocked_[w][c];
        color_[v] = -1;
    }

    int options(Vertex v) const {
        int k = 0;
        for (int c = 0; c < 4; ++c)
            k += blocked_[v][c] == 0;
        return k;
    }

    bool solve() {
        if (timed_out_)
            return false;
        ++nodes_;
        if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return false;
        }
        Vertex pick = -1;
        int fewest = 5;
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            if (color_[v] < 0) {
                const int k = options(v);
                if (k < fewest) {
                    fewest = k;
                    pick = v;
                }
            }
        if (pick < 0)
            return true;
        if (fewest == 0)
            return false;
        for (int c = 0; c < 4; ++c) {
            if (blocked_[pick][c])
                continue;
            fix(pick, c);
            bool dead = false;
            for (Vertex w : g_.rotation(pick))
                if (color_[w] < 0 && options(w) == 0) {
                    dead = true;
                    break;
                }
            if (!dead && solve())
                return true;
            unfix(pick);
            if (timed_out_)
                return false;
        }
        return false;
    }

    const std::vector<int>& colors() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }
    bool timed_out() const { return timed_out_; }

private:
    const PlaneGraph& g_;
    Deadline deadline_;
    std::vector<int> color_;
    std::vector<std::array<int, 4>> blocked_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

OracleResult oracle_extend_4(const PlaneGraph& g, const PartialColoring& precoloring, Deadline deadline) {
    const int n = g.num_vertices();
    if (static_cast<int>(precoloring.size()) != n)
        throw Error(ErrorKind::Precondition, "precoloring has the wrong size");
    for (Dart e : g.edges())
        if (precoloring[e.from] && precoloring[e.to] && *precoloring[e.from] == *precoloring[e.to])
            throw Error(ErrorKind::ImproperColoring,
                        "edge " + std::to_string(e.from) + "-" + std::to_string(e.to) + " has equal colors");

    Backtracker bt(g, deadline);
    for (Vertex v = 0; v < n; ++v)
        if (precoloring[v])
            bt.fix(v, precoloring[v]->code);

    OracleResult result;
    const bool found = bt.solve();
    result.nodes = bt.nodes();
    if (bt.timed_out()) {
        result.status = OracleStatus::Timeout;
    } else if (found) {
        result.status = OracleStatus::Extends;
        Coloring out;
        for (int c : bt.colors())
            out.push_back(Color4::from_code(c));
        result.coloring = std::move(out);
    }
    return result;
}

bool verify_extension(const PlaneGraph& g, const Coloring& coloring, const PartialColoring& precoloring) {
    if (static_cast<int>(coloring.size()) != g.num_vertices())
        return false;
    for (Dart e : g.edges())
        if (coloring[e.from] == coloring[e.to])
            return false;
    for (std::size_t v = 0; v < precoloring.size() && v < coloring.size(); ++v)
        if (precoloring[v] && *precoloring[v] != coloring[v])
            return false;
    return true;
}

} // namespace precol
