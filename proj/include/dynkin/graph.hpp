#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynkin {

/// Square-length class of the root attached to a vertex.
///  Long      : alpha^2 = 2    (drawn as a white circle)
///  Half      : delta^2 = 1/2  (the BC1 vertex)
///  TwoThirds : gamma^2 = 2/3  (the short G2 / G1 vertex)
enum class RootNorm : std::uint8_t { Long, Half, TwoThirds };

char norm_symbol(RootNorm norm);

/// Thrown when an operation is called outside its contract.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown when an internal invariant of the enumeration breaks. Never expected.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using VertexMask = std::uint64_t;

/// Finite simple graph whose vertices carry a root norm. An edge means the two
/// roots have nonzero inner product.
///
/// Adjacency is stored as one bitmask per vertex, so graphs hold at most
/// kMaxVertices vertices. Every graph the library builds is far below that.
class DecoratedGraph {
public:
    using Vertex = std::size_t;
    static constexpr std::size_t kMaxVertices = 64;

    DecoratedGraph() = default;

    Vertex add_vertex(RootNorm norm);
    void add_edge(Vertex u, Vertex v);

    [[nodiscard]] std::size_t size() const noexcept { return norms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return norms_.empty(); }
    [[nodiscard]] RootNorm norm(Vertex v) const { return norms_.at(v); }
    [[nodiscard]] VertexMask neighbours(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;
    [[nodiscard]] VertexMask all_vertices() const noexcept;

    /// Subgraph induced by the vertices in `keep`, renumbered in increasing order.
    [[nodiscard]] DecoratedGraph induced(VertexMask keep) const;

    /// Vertex masks of the connected components of the subgraph induced by `within`.
    [[nodiscard]] std::vector<VertexMask> components(VertexMask within) const;
    [[nodiscard]] std::vector<VertexMask> components() const { return components(all_vertices()); }

    /// Appends `other` as new vertices; returns the id offset of its vertex 0.
    Vertex append(const DecoratedGraph& other);

    /// Same graph with vertices renamed: vertex v becomes perm[v].
    [[nodiscard]] DecoratedGraph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

private:
    std::vector<RootNorm> norms_;
    std::vector<VertexMask> adjacency_;
};

inline VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

std::string describe(const DecoratedGraph& g);

}  // namespace dynkin
