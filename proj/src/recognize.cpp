#include "dynkin/recognize.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace dynkin {

namespace {

using Vertex = DecoratedGraph::Vertex;

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

void add_path(DecoratedGraph& g, Vertex from, int length)
{
    Vertex prev = from;
    for (int i = 0; i < length; ++i) {
        Vertex v = g.add_vertex(RootNorm::Long);
        g.add_edge(prev, v);
        prev = v;
    }
}

int local_degree(const DecoratedGraph& g, Vertex v, VertexMask within)
{
    return std::popcount(g.neighbours(v) & within);
}

std::optional<ComponentKind> recognize_mask(const DecoratedGraph& g, VertexMask comp)
{
    const int n = std::popcount(comp);
    if (n == 1) {
        switch (g.norm(lowest(comp))) {
        case RootNorm::Long: return ComponentKind::a(1);
        case RootNorm::Half: return ComponentKind::bc1();
        case RootNorm::TwoThirds: return ComponentKind::g1();
        }
    }

    int long_count = 0;
    int two_thirds_count = 0;
    for (VertexMask m = comp; m; m &= m - 1) {
        auto norm = g.norm(lowest(m));
        long_count += norm == RootNorm::Long;
        two_thirds_count += norm == RootNorm::TwoThirds;
    }
    if (long_count != n) {
        // comp is connected, so two vertices are adjacent.
        if (n == 2 && long_count == 1 && two_thirds_count == 1)
            return ComponentKind::g2();
        return std::nullopt;
    }

    int twice_edges = 0;
    int branch_count = 0;
    Vertex center = 0;
    for (VertexMask m = comp; m; m &= m - 1) {
        Vertex v = lowest(m);
        int d = local_degree(g, v, comp);
        twice_edges += d;
        if (d > 3)
            return std::nullopt;
        if (d == 3) {
            ++branch_count;
            center = v;
        }
    }
    if (twice_edges != 2 * (n - 1) || branch_count > 1)
        return std::nullopt;
    if (branch_count == 0)
        return ComponentKind::a(n);

    std::array<int, 3> arms{};
    std::size_t arm = 0;
    for (VertexMask nb = g.neighbours(center) & comp; nb; nb &= nb - 1) {
        Vertex prev = center;
        Vertex cur = lowest(nb);
        int length = 1;
        while (local_degree(g, cur, comp) == 2) {
            VertexMask next = g.neighbours(cur) & comp & ~bit(prev);
            prev = cur;
            cur = lowest(next);
            ++length;
        }
        arms[arm++] = length;
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return ComponentKind::d(arms[2] + 3);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
        return ComponentKind::e(arms[2] + 4);
    return std::nullopt;
}

}  // namespace

DecoratedGraph build_component(ComponentKind kind)
{
    DecoratedGraph g;
    const int n = kind.vertex_count();
    switch (kind.family()) {
    case Family::A:
        g.add_vertex(RootNorm::Long);
        add_path(g, 0, n - 1);
        break;
    case Family::D:
        g.add_vertex(RootNorm::Long);
        add_path(g, 0, n - 2);
        g.add_edge(static_cast<Vertex>(n - 3), g.add_vertex(RootNorm::Long));
        break;
    case Family::E:
        g.add_vertex(RootNorm::Long);
        add_path(g, 0, 1);
        add_path(g, 0, 2);
        add_path(g, 0, n - 4);
        break;
    case Family::BC1:
        g.add_vertex(RootNorm::Half);
        break;
    case Family::G1:
        g.add_vertex(RootNorm::TwoThirds);
        break;
    case Family::G2:
        g.add_vertex(RootNorm::Long);
        g.add_edge(0, g.add_vertex(RootNorm::TwoThirds));
        break;
    }
    return g;
}

DecoratedGraph realize(const Combination& c)
{
    DecoratedGraph g;
    for (const auto& kind : c.components())
        g.append(build_component(kind));
    return g;
}

std::optional<ComponentKind> recognize_component(const DecoratedGraph& g)
{
    if (g.empty())
        throw ContractViolation("recognize_component: empty graph");
    if (g.components().size() != 1)
        throw ContractViolation("recognize_component: disconnected graph");
    return recognize_mask(g, g.all_vertices());
}

std::optional<Combination> classify(const DecoratedGraph& g, VertexMask within)
{
    std::vector<ComponentKind> kinds;
    for (VertexMask comp : g.components(within)) {
        auto kind = recognize_mask(g, comp);
        if (!kind)
            return std::nullopt;
        kinds.push_back(*kind);
    }
    return Combination(std::move(kinds));
}

std::optional<Combination> classify(const DecoratedGraph& g)
{
    return classify(g, g.all_vertices());
}

CombinationSet dynkin_subgraph_classes(const DecoratedGraph& g)
{
    constexpr std::size_t kMaxEnumerated = 30;
    if (g.size() > kMaxEnumerated)
        throw ContractViolation("dynkin_subgraph_classes: graph too large for subset enumeration");
    CombinationSet out;
    const VertexMask limit = bit(g.size());
    for (VertexMask subset = 0; subset < limit; ++subset) {
        auto c = classify(g, subset);
        if (c && c->is_ade_only())
            out.insert(std::move(*c));
    }
    return out;
}

}  // namespace dynkin
