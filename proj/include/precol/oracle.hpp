#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "precol/patch.hpp"

namespace precol {

enum class OracleStatus { Extends, NoExtension, Timeout };

struct OracleResult {
    OracleStatus status = OracleStatus::NoExtension;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Exhaustive 4-coloring search extending `precoloring` (any subset of
/// vertices). Throws ImproperColoring when two adjacent precolored vertices
/// share a color.
OracleResult oracle_extend_4(const PlaneGraph& g, const PartialColoring& precoloring, Deadline deadline = {});

inline OracleResult oracle_extend_4(const HuedPatch& g, const PartialColoring& precoloring, Deadline deadline = {}) {
    return oracle_extend_4(g.graph(), precoloring, deadline);
}

/// Proper on every edge and equal to the precoloring where it is defined.
bool verify_extension(const PlaneGraph& g, const Coloring& coloring, const PartialColoring& precoloring);

} // namespace precol
