#include "dynkin/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace dynkin {

namespace {

struct TriangleRow {
    TriangleName name;
    std::string_view label;
    GabrielovType type;
};

// Gabrielov types of the fourteen exceptional unimodular classes.
constexpr TriangleRow kTriangleTable[] = {
    {TriangleName::E12, "E12", {2, 3, 7}}, {TriangleName::E13, "E13", {2, 3, 8}},
    {TriangleName::E14, "E14", {2, 3, 9}}, {TriangleName::Z11, "Z11", {2, 4, 5}},
    {TriangleName::Z12, "Z12", {2, 4, 6}}, {TriangleName::Z13, "Z13", {2, 4, 7}},
    {TriangleName::Q10, "Q10", {3, 3, 4}}, {TriangleName::Q11, "Q11", {3, 3, 5}},
    {TriangleName::Q12, "Q12", {3, 3, 6}}, {TriangleName::W12, "W12", {2, 5, 5}},
    {TriangleName::W13, "W13", {2, 5, 6}}, {TriangleName::S11, "S11", {3, 4, 4}},
    {TriangleName::S12, "S12", {3, 4, 5}}, {TriangleName::U12, "U12", {4, 4, 4}},
};

const TriangleRow& row(TriangleName t)
{
    for (const auto& r : kTriangleTable)
        if (r.name == t)
            return r;
    throw std::logic_error("unknown triangle class");
}

// Column of the E/Z/Q matrix: E -> E8, Z -> E7, Q -> E6.
// Row: first -> nothing else, second -> BC1, third -> G2.
std::optional<Combination> essential_basic_graph(TriangleName t)
{
    switch (t) {
    case TriangleName::E12: return Combination{ComponentKind::e(8)};
    case TriangleName::Z11: return Combination{ComponentKind::e(7)};
    case TriangleName::Q10: return Combination{ComponentKind::e(6)};
    case TriangleName::E13: return Combination{ComponentKind::e(8), ComponentKind::bc1()};
    case TriangleName::Z12: return Combination{ComponentKind::e(7), ComponentKind::bc1()};
    case TriangleName::Q11: return Combination{ComponentKind::e(6), ComponentKind::bc1()};
    case TriangleName::E14: return Combination{ComponentKind::e(8), ComponentKind::g2()};
    case TriangleName::Z13: return Combination{ComponentKind::e(7), ComponentKind::g2()};
    case TriangleName::Q12: return Combination{ComponentKind::e(6), ComponentKind::g2()};
    default: return std::nullopt;
    }
}

CombinationSet exceptions(TriangleName t)
{
    switch (t) {
    case TriangleName::Z13: return {parse_label("A7+A4")};
    case TriangleName::S11: return {parse_label("2A4+A1")};
    case TriangleName::U12:
        return {parse_label("2D4+A2"), parse_label("A6+A4"), parse_label("A5+A4+A1"), parse_label("2A4+A1")};
    default: return {};
    }
}

bool take_int(std::string_view& s, int& value)
{
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data())
        return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

bool take_char(std::string_view& s, char c)
{
    if (s.empty() || s.front() != c)
        return false;
    s.remove_prefix(1);
    return true;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Cusp make_cusp(int p, int q, int r)
{
    if (p < 2 || p > q || q > r)
        throw std::invalid_argument("cusp type must satisfy 2 <= p <= q <= r");
    // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
    long long lp = p, lq = q, lr = r;
    if (lq * lr + lp * lr + lp * lq >= lp * lq * lr)
        throw std::invalid_argument("cusp type must satisfy 1/p + 1/q + 1/r < 1");
    return Cusp{{p, q, r}};
}

RationalDoublePoint make_rdp(Combination graph)
{
    if (!graph.is_ade_only())
        throw std::invalid_argument("rational double point needs an ADE graph, got " + format_label(graph));
    return RationalDoublePoint{std::move(graph)};
}

DecoratedGraph gabrielov_graph(int p, int q, int r)
{
    auto cusp = make_cusp(p, q, r);
    DecoratedGraph g;
    auto center = g.add_vertex(RootNorm::Long);
    for (int arm : {cusp.type.p, cusp.type.q, cusp.type.r}) {
        auto prev = center;
        for (int i = 1; i < arm; ++i) {
            auto v = g.add_vertex(RootNorm::Long);
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

DecoratedGraph gabrielov_graph(const GabrielovType& t)
{
    return gabrielov_graph(t.p, t.q, t.r);
}

ClassData class_data(const SingularityClass& c)
{
    return std::visit(
        overloaded{
            [](const RationalDoublePoint& rdp) {
                ClassData d;
                d.basic_graph = rdp.graph;
                return d;
            },
            [](const SimpleElliptic& e) {
                ClassData d;
                switch (e.name) {
                case EllipticName::P8: d.basic_graph = Combination{ComponentKind::e(6)}; break;
                case EllipticName::X9: d.basic_graph = Combination{ComponentKind::e(7)}; break;
                case EllipticName::J10: d.basic_graph = Combination{ComponentKind::e(8)}; break;
                }
                return d;
            },
            [](const Cusp& cusp) {
                ClassData d;
                d.gabrielov_type = cusp.type;
                return d;
            },
            [](const Triangle& t) {
                ClassData d;
                d.gabrielov_type = row(t.name).type;
                d.essential_basic_graph = essential_basic_graph(t.name);
                d.exceptions = exceptions(t.name);
                return d;
            },
        },
        c);
}

std::string_view triangle_name(TriangleName t) { return row(t).label; }

std::string_view elliptic_name(EllipticName e)
{
    switch (e) {
    case EllipticName::P8: return "P8";
    case EllipticName::X9: return "X9";
    case EllipticName::J10: return "J10";
    }
    return "?";
}

std::optional<TriangleName> parse_triangle(std::string_view name)
{
    for (const auto& r : kTriangleTable)
        if (r.label == name)
            return r.name;
    return std::nullopt;
}

std::string class_string(const SingularityClass& c)
{
    return std::visit(
        overloaded{
            [](const RationalDoublePoint& rdp) { return format_label(rdp.graph); },
            [](const SimpleElliptic& e) { return std::string(elliptic_name(e.name)); },
            [](const Cusp& cusp) {
                return "T(" + std::to_string(cusp.type.p) + "," + std::to_string(cusp.type.q) + "," +
                       std::to_string(cusp.type.r) + ")";
            },
            [](const Triangle& t) { return std::string(triangle_name(t.name)); },
        },
        c);
}

SingularityClass parse_class(std::string_view selector)
{
    if (auto t = parse_triangle(selector))
        return Triangle{*t};
    for (auto e : {EllipticName::P8, EllipticName::X9, EllipticName::J10})
        if (elliptic_name(e) == selector)
            return SimpleElliptic{e};
    if (selector.starts_with("T(")) {
        std::string_view s = selector.substr(2);
        int p = 0, q = 0, r = 0;
        if (take_int(s, p) && take_char(s, ',') && take_int(s, q) && take_char(s, ',') && take_int(s, r) &&
            take_char(s, ')') && s.empty())
            return make_cusp(p, q, r);
        throw std::invalid_argument("malformed cusp selector '" + std::string(selector) + "'");
    }
    try {
        return make_rdp(parse_label(selector));
    } catch (const LabelError& e) {
        throw std::invalid_argument("unknown singularity class '" + std::string(selector) + "' (" + e.what() + ")");
    }
}

}  // namespace dynkin
