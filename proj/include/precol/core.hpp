#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace precol {

using Vertex = int;

/// Element of Z_3 used as a vertex hue.
struct Hue {
    std::uint8_t value = 0;

    constexpr Hue() = default;
    constexpr explicit Hue(int v) : value(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr Hue operator+(Hue o) const { return Hue(value + o.value); }
    constexpr Hue operator-(Hue o) const { return Hue(value - o.value); }

    friend constexpr bool operator==(Hue, Hue) = default;
    friend constexpr auto operator<=>(Hue, Hue) = default;
};

/// Element of Z_2^2 used as a vertex color. `code` packs the pair as 2*b0 + b1,
/// so the file labels 1..4 are code + 1 and group subtraction is xor.
struct Color4 {
    std::uint8_t code = 0;

    static constexpr Color4 from_bits(int b0, int b1) {
        return Color4{static_cast<std::uint8_t>(((b0 & 1) << 1) | (b1 & 1))};
    }
    static constexpr Color4 from_label(int label) {
        return Color4{static_cast<std::uint8_t>((label - 1) & 3)};
    }
    static constexpr Color4 from_code(int code) { return Color4{static_cast<std::uint8_t>(code & 3)}; }

    constexpr int b0() const { return code >> 1; }
    constexpr int b1() const { return code & 1; }
    constexpr int label() const { return code + 1; }

    constexpr Color4 operator-(Color4 o) const { return Color4{static_cast<std::uint8_t>(code ^ o.code)}; }
    constexpr Color4 operator+(Color4 o) const { return Color4{static_cast<std::uint8_t>(code ^ o.code)}; }

    friend constexpr bool operator==(Color4, Color4) = default;
    friend constexpr auto operator<=>(Color4, Color4) = default;
};

using Coloring = std::vector<Color4>;
using PartialColoring = std::vector<std::optional<Color4>>;

enum class ErrorKind {
    Structural,
    InternalFaceNotTriangle,
    OuterBoundaryNotCycle,
    NotNearEulerian,
    NotBipartite,
    NotTwoConnected,
    NotNearQuadrangulation,
    Precondition,
    ImproperColoring,
    NotViable,
    NotNullHomotopic,
    InvalidCertificate,
    AttachmentMismatch,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Structural: return "Structural";
    case ErrorKind::InternalFaceNotTriangle: return "InternalFaceNotTriangle";
    case ErrorKind::OuterBoundaryNotCycle: return "OuterBoundaryNotCycle";
    case ErrorKind::NotNearEulerian: return "NotNearEulerian";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::NotNearQuadrangulation: return "NotNearQuadrangulation";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::NotViable: return "NotViable";
    case ErrorKind::NotNullHomotopic: return "NotNullHomotopic";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::AttachmentMismatch: return "AttachmentMismatch";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace precol
