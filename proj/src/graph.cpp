#include "dynkin/graph.hpp"

#include <bit>
#include <sstream>

namespace dynkin {

char norm_symbol(RootNorm norm)
{
    switch (norm) {
    case RootNorm::Long: return 'o';
    case RootNorm::Half: return 'x';
    case RootNorm::TwoThirds: return 'g';
    }
    return '?';
}

DecoratedGraph::Vertex DecoratedGraph::add_vertex(RootNorm norm)
{
    if (norms_.size() >= kMaxVertices)
        throw ContractViolation("DecoratedGraph: vertex limit exceeded");
    norms_.push_back(norm);
    adjacency_.push_back(0);
    return norms_.size() - 1;
}

void DecoratedGraph::add_edge(Vertex u, Vertex v)
{
    if (u >= size() || v >= size())
        throw ContractViolation("DecoratedGraph: edge endpoint out of range");
    if (u == v)
        throw ContractViolation("DecoratedGraph: self-loop");
    if (adjacent(u, v))
        throw ContractViolation("DecoratedGraph: parallel edge");
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
}

bool DecoratedGraph::adjacent(Vertex u, Vertex v) const
{
    return (adjacency_.at(u) & bit(v)) != 0;
}

std::size_t DecoratedGraph::degree(Vertex v) const
{
    return static_cast<std::size_t>(std::popcount(adjacency_.at(v)));
}

std::size_t DecoratedGraph::edge_count() const
{
    std::size_t twice = 0;
    for (auto m : adjacency_)
        twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::vector<std::pair<DecoratedGraph::Vertex, DecoratedGraph::Vertex>> DecoratedGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v = u + 1; v < size(); ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

VertexMask DecoratedGraph::all_vertices() const noexcept
{
    return size() == 64 ? ~VertexMask{0} : bit(size()) - 1;
}

DecoratedGraph DecoratedGraph::induced(VertexMask keep) const
{
    keep &= all_vertices();
    std::vector<Vertex> index(size(), 0);
    DecoratedGraph out;
    for (Vertex v = 0; v < size(); ++v)
        if (keep & bit(v))
            index[v] = out.add_vertex(norms_[v]);
    for (Vertex u = 0; u < size(); ++u) {
        if (!(keep & bit(u)))
            continue;
        VertexMask later = adjacency_[u] & keep & ~(bit(u + 1) - 1);
        while (later) {
            auto v = static_cast<Vertex>(std::countr_zero(later));
            later &= later - 1;
            out.adjacency_[index[u]] |= bit(index[v]);
            out.adjacency_[index[v]] |= bit(index[u]);
        }
    }
    return out;
}

std::vector<VertexMask> DecoratedGraph::components(VertexMask within) const
{
    within &= all_vertices();
    std::vector<VertexMask> out;
    while (within) {
        VertexMask comp = within & (~within + 1);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            VertexMask f = frontier;
            while (f) {
                auto v = static_cast<Vertex>(std::countr_zero(f));
                f &= f - 1;
                next |= adjacency_[v];
            }
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        within &= ~comp;
    }
    return out;
}

DecoratedGraph::Vertex DecoratedGraph::append(const DecoratedGraph& other)
{
    if (size() + other.size() > kMaxVertices)
        throw ContractViolation("DecoratedGraph: vertex limit exceeded");
    Vertex offset = size();
    norms_.insert(norms_.end(), other.norms_.begin(), other.norms_.end());
    for (auto m : other.adjacency_)
        adjacency_.push_back(m << offset);
    return offset;
}

DecoratedGraph DecoratedGraph::relabeled(std::span<const Vertex> perm) const
{
    if (perm.size() != size())
        throw ContractViolation("relabeled: permutation size mismatch");
    DecoratedGraph out;
    out.norms_.resize(size());
    out.adjacency_.assign(size(), 0);
    for (Vertex v = 0; v < size(); ++v)
        out.norms_.at(perm[v]) = norms_[v];
    for (auto [u, v] : edges()) {
        out.adjacency_[perm[u]] |= bit(perm[v]);
        out.adjacency_[perm[v]] |= bit(perm[u]);
    }
    return out;
}

std::string describe(const DecoratedGraph& g)
{
    std::ostringstream os;
    os << "vertices:";
    for (DecoratedGraph::Vertex v = 0; v < g.size(); ++v)
        os << ' ' << v << norm_symbol(g.norm(v));
    os << " edges:";
    for (auto [u, v] : g.edges())
        os << ' ' << u << '-' << v;
    return os.str();
}

}  // namespace dynkin
