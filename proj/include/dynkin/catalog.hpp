#pragma once

#include "dynkin/combination.hpp"
#include "dynkin/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dynkin {

enum class EllipticName { P8, X9, J10 };

enum class TriangleName { E12, E13, E14, Z11, Z12, Z13, Q10, Q11, Q12, W12, W13, S11, S12, U12 };

inline constexpr std::array kAllTriangles = {
    TriangleName::E12, TriangleName::E13, TriangleName::E14, TriangleName::Z11, TriangleName::Z12,
    TriangleName::Z13, TriangleName::Q10, TriangleName::Q11, TriangleName::Q12, TriangleName::W12,
    TriangleName::W13, TriangleName::S11, TriangleName::S12, TriangleName::U12,
};

/// The E, Z and Q rows: the classes that have an essential basic graph.
inline constexpr std::array kNineTriangles = {
    TriangleName::E12, TriangleName::E13, TriangleName::E14, TriangleName::Z11, TriangleName::Z12,
    TriangleName::Z13, TriangleName::Q10, TriangleName::Q11, TriangleName::Q12,
};

struct GabrielovType {
    int p = 0, q = 0, r = 0;
    friend bool operator==(const GabrielovType&, const GabrielovType&) = default;
};

/// A rational double point given by its ADE Dynkin graph.
struct RationalDoublePoint {
    Combination graph;
    friend bool operator==(const RationalDoublePoint&, const RationalDoublePoint&) = default;
};
struct SimpleElliptic {
    EllipticName name;
    friend bool operator==(const SimpleElliptic&, const SimpleElliptic&) = default;
};
/// Cusp of type (p,q,r): 2 <= p <= q <= r and 1/p + 1/q + 1/r < 1.
struct Cusp {
    GabrielovType type;
    friend bool operator==(const Cusp&, const Cusp&) = default;
};
struct Triangle {
    TriangleName name;
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

using SingularityClass = std::variant<RationalDoublePoint, SimpleElliptic, Cusp, Triangle>;

struct ClassData {
    std::optional<GabrielovType> gabrielov_type;
    std::optional<Combination> basic_graph;
    std::optional<Combination> essential_basic_graph;
    CombinationSet exceptions;
};

/// Throws std::invalid_argument unless 2 <= p <= q <= r and 1/p + 1/q + 1/r < 1.
Cusp make_cusp(int p, int q, int r);
RationalDoublePoint make_rdp(Combination graph);  // throws unless ADE-only

/// Three-armed star: a Long center plus paths of p-1, q-1 and r-1 Long vertices.
/// Vertex 0 is the center.
DecoratedGraph gabrielov_graph(int p, int q, int r);
DecoratedGraph gabrielov_graph(const GabrielovType& t);

ClassData class_data(const SingularityClass& c);

std::string_view triangle_name(TriangleName t);
std::string_view elliptic_name(EllipticName e);

/// "A4"/"D5+A1" (rational double point), "P8"/"X9"/"J10", "T(p,q,r)", or a triangle name.
std::string class_string(const SingularityClass& c);

/// Inverse of class_string. Throws std::invalid_argument for unrecognised selectors.
SingularityClass parse_class(std::string_view selector);

std::optional<TriangleName> parse_triangle(std::string_view name);

}  // namespace dynkin
