#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "precol/patch.hpp"
#include "precol/tri_grid.hpp"

namespace precol {

/// Walks are vertex sequences; V is a graph vertex id or a GridPoint.
template <class V>
using Walk = std::vector<V>;

/// Cyclic vertex sequence; equality is rotation equivalence. The empty closed
/// walk is a valid value.
template <class V>
class ClosedWalk {
public:
    ClosedWalk() = default;
    explicit ClosedWalk(std::vector<V> sequence) : seq_(std::move(sequence)) {}

    const std::vector<V>& sequence() const { return seq_; }
    std::size_t size() const { return seq_.size(); }
    bool empty() const { return seq_.empty(); }
    const V& operator[](std::size_t i) const { return seq_[i % seq_.size()]; }

    /// Lexicographically least rotation.
    std::vector<V> canonical() const {
        std::vector<V> best = seq_;
        std::vector<V> cand(seq_.size());
        for (std::size_t s = 1; s < seq_.size(); ++s) {
            std::rotate_copy(seq_.begin(), seq_.begin() + s, seq_.end(), cand.begin());
            if (cand < best)
                best = cand;
        }
        return best;
    }

    ClosedWalk reversed() const { return ClosedWalk(std::vector<V>(seq_.rbegin(), seq_.rend())); }

    friend bool operator==(const ClosedWalk& a, const ClosedWalk& b) {
        return a.size() == b.size() && a.canonical() == b.canonical();
    }

private:
    std::vector<V> seq_;
};

/// All openings, one per start position (rotations, not deduplicated).
template <class V>
std::vector<Walk<V>> openings(const ClosedWalk<V>& z) {
    std::vector<Walk<V>> out;
    const auto& s = z.sequence();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Walk<V> w(s.begin() + i, s.end());
        w.insert(w.end(), s.begin(), s.begin() + i);
        w.push_back(s[i]);
        out.push_back(std::move(w));
    }
    return out;
}

namespace detail {

// Opening of w2 starting at position `start`, without its first vertex.
template <class V>
std::vector<V> opening_tail(const ClosedWalk<V>& w2, std::size_t start) {
    const auto& s = w2.sequence();
    std::vector<V> tail;
    for (std::size_t t = 1; t <= s.size(); ++t)
        tail.push_back(s[(start + t) % s.size()]);
    return tail;
}

} // namespace detail

/// Splices the opening of w2 starting at `opening_start` into w1 right after
/// position `attach`. Throws AttachmentMismatch if the vertices differ.
template <class V>
Walk<V> combine(const Walk<V>& w1, const ClosedWalk<V>& w2, std::size_t attach, std::size_t opening_start) {
    if (w2.empty())
        return w1;
    if (attach >= w1.size() || opening_start >= w2.size() || !(w1[attach] == w2.sequence()[opening_start]))
        throw Error(ErrorKind::AttachmentMismatch, "opening does not start at the attachment vertex");
    Walk<V> out(w1.begin(), w1.begin() + attach + 1);
    const auto tail = detail::opening_tail(w2, opening_start);
    out.insert(out.end(), tail.begin(), tail.end());
    out.insert(out.end(), w1.begin() + attach + 1, w1.end());
    return out;
}

template <class V>
ClosedWalk<V> combine(const ClosedWalk<V>& w1, const ClosedWalk<V>& w2, std::size_t attach,
                      std::size_t opening_start) {
    if (w2.empty())
        return w1;
    if (w1.empty())
        throw Error(ErrorKind::AttachmentMismatch, "cannot attach to an empty closed walk");
    return ClosedWalk<V>(combine(w1.sequence(), w2, attach, opening_start));
}

/// Start indices i with w[i] == w[i+2].
template <class V>
std::vector<std::size_t> retractable_segments(const Walk<V>& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] == w[i + 2])
            out.push_back(i);
    return out;
}

/// Cyclic version; both segments of a closed walk of length two retract it to
/// the empty walk.
template <class V>
std::vector<std::size_t> retractable_segments(const ClosedWalk<V>& z) {
    const std::size_t m = z.size();
    if (m == 2)
        return {0, 1};
    std::vector<std::size_t> out;
    if (m < 3)
        return out;
    for (std::size_t i = 0; i < m; ++i)
        if (z[i] == z[i + 2])
            out.push_back(i);
    return out;
}

template <class V>
Walk<V> one_step_retraction(const Walk<V>& w, std::size_t i) {
    if (i + 2 >= w.size() || !(w[i] == w[i + 2]))
        throw Error(ErrorKind::Precondition, "segment is not retractable");
    Walk<V> out(w.begin(), w.begin() + i + 1);
    out.insert(out.end(), w.begin() + i + 3, w.end());
    return out;
}

template <class V>
ClosedWalk<V> one_step_retraction(const ClosedWalk<V>& z, std::size_t i) {
    const std::size_t m = z.size();
    if (m == 2 && i < 2)
        return ClosedWalk<V>();
    if (m < 3 || i >= m || !(z[i] == z[i + 2]))
        throw Error(ErrorKind::Precondition, "segment is not retractable");
    std::vector<V> out;
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t pos = (i + 3 + t) % m;
        if (t + 2 < m)
            out.push_back(z.sequence()[pos]);
    }
    // out now starts right after the removed pair and ends at z[i]
    return ClosedWalk<V>(std::move(out));
}

/// Fully reduced walk with the same ends (stack reduction).
template <class V>
Walk<V> topological_retract(const Walk<V>& w) {
    Walk<V> stack;
    for (const V& v : w) {
        if (stack.size() >= 2 && stack[stack.size() - 2] == v)
            stack.pop_back();
        else
            stack.push_back(v);
    }
    return stack;
}

template <class V>
ClosedWalk<V> topological_retract(const ClosedWalk<V>& z) {
    if (z.empty())
        return z;
    Walk<V> open = z.sequence();
    open.push_back(open.front());
    Walk<V> r = topological_retract(open);
    // trim backtracking across the seam
    std::size_t lo = 0;
    std::size_t hi = r.size() - 1;
    while (hi - lo >= 2 && r[lo + 1] == r[hi - 1]) {
        ++lo;
        --hi;
    }
    return ClosedWalk<V>(std::vector<V>(r.begin() + lo, r.begin() + hi));
}

/// Leftmost-first reduction recording the index of every one-step retraction
/// relative to the walk it was applied to.
template <class V>
ClosedWalk<V> topological_retract_closed(const ClosedWalk<V>& z) {
    return topological_retract(z);
}

template <class V>
std::pair<Walk<V>, std::vector<std::size_t>> retract_with_trace(Walk<V> w) {
    std::vector<std::size_t> steps;
    for (;;) {
        const auto segs = retractable_segments(w);
        if (segs.empty())
            break;
        steps.push_back(segs.front());
        w = one_step_retraction(w, segs.front());
    }
    return {std::move(w), std::move(steps)};
}

template <class V>
std::pair<ClosedWalk<V>, std::vector<std::size_t>> retract_with_trace(ClosedWalk<V> z) {
    std::vector<std::size_t> steps;
    for (;;) {
        const auto segs = retractable_segments(z);
        if (segs.empty())
            break;
        steps.push_back(segs.front());
        z = one_step_retraction(z, segs.front());
    }
    return {std::move(z), std::move(steps)};
}

template <class V>
bool is_null_homotopic(const ClosedWalk<V>& z) {
    return topological_retract(z).empty();
}

/// Compares the retracts of z[0..k] and z[0], z[m-1], ..., z[k].
template <class V>
bool split_retract_equal(const ClosedWalk<V>& z, std::size_t k) {
    if (z.empty())
        return true;
    const auto& s = z.sequence();
    const std::size_t m = s.size();
    k %= m;
    Walk<V> forward(s.begin(), s.begin() + k + 1);
    Walk<V> backward{s[0]};
    for (std::size_t t = m - 1; t >= k && t > 0; --t)
        backward.push_back(s[t]);
    if (k == 0)
        backward.push_back(s[0]);
    return topological_retract(forward) == topological_retract(backward);
}

template <class V>
ClosedWalk<V> reverse(const ClosedWalk<V>& z) {
    return z.reversed();
}

/// Image of a vertex walk under a homomorphism.
template <class V>
std::vector<GridPoint> image_of(const GridHom& f, const std::vector<V>& walk) {
    std::vector<GridPoint> out;
    out.reserve(walk.size());
    for (V v : walk)
        out.push_back(f[v]);
    return out;
}

/// Image of the closed walk `walk` in the hued graph (hue, color) under the
/// homomorphism of the traversed subgraph; null when that coloring is not
/// viable.
std::optional<ClosedWalk<GridPoint>> closed_walk_image(std::span<const Vertex> walk, std::span<const Hue> hue,
                                                       std::span<const Color4> color);

/// True when the coloring is null-homotopic on the closed walk. Throws
/// NotViable when the coloring of the traversed subgraph is not viable.
bool null_homotopic_on(std::span<const Vertex> walk, std::span<const Hue> hue, std::span<const Color4> color);

struct Splice {
    int face = 0;         // index into graph.faces()
    int parent = 0;       // face it was attached to
    Dart shared;          // dart of the parent; the child uses its reverse
};

struct FaceCombination {
    ClosedWalk<Vertex> walk;
    std::vector<Splice> splices;   // in attachment order
};

/// Null-homotopic combination of every internal face walk with the outer face
/// walk. Faces are merged along the smallest edge joining two distinct faces
/// (the outer face last, along its smallest edge), then spliced outward from
/// the outer face.
FaceCombination face_combination(const PlaneGraph& h);

/// Boundary colors of `g` as a vector aligned with g.boundary(). Throws
/// Precondition if a boundary vertex is uncolored.
Coloring boundary_colors(const std::vector<Vertex>& boundary, const PartialColoring& precoloring);

/// Null-homotopy of the boundary coloring (necessary for extension when g is
/// the patch extension of a near-quadrangulation). Throws NotViable.
bool necessary_condition_quad(const HuedPatch& g, const PartialColoring& precoloring);

enum class NecessaryVerdict { ObstructionProven, Inconclusive };

struct NecessaryReport {
    NecessaryVerdict verdict = NecessaryVerdict::Inconclusive;
    std::string reason;
    std::size_t nodes = 0;
    std::optional<ClosedWalk<GridPoint>> witness;  // null-homotopic member found
};

inline constexpr int kDefaultSearchBound = 24;
inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

/// Bounded search for a null-homotopic member of the combinations of the
/// reversed boundary image with members of W(p) for each internal face p of
/// the subgraph h (given by its edges, which must include the boundary).
/// ObstructionProven means the search was exhaustive and found none.
NecessaryReport necessary_condition_general(const HuedPatch& g, std::span<const Dart> h_edges,
                                            const PartialColoring& precoloring,
                                            int search_bound = kDefaultSearchBound,
                                            std::size_t node_budget = kDefaultNodeBudget);

/// All closed grid walks starting and ending at `start` whose i-th vertex has
/// hue hues[i] (hues[0] must be the hue of start). Returned as sequences
/// beginning with start, without repeating it at the end.
std::vector<std::vector<GridPoint>> closed_walks_with_hues(GridPoint start, std::span<const Hue> hues);

} // namespace precol
