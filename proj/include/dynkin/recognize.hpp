#pragma once

#include "dynkin/combination.hpp"
#include "dynkin/graph.hpp"

#include <optional>

namespace dynkin {

/// Connected decorated graph of the given type.
///
/// Vertex layout (relied on by extend_component):
///  - A(n): path 0-1-...-(n-1).
///  - D(n): path 0-...-(n-2) plus vertex n-1 attached to n-3; long arm is 0..n-4.
///  - E(n): center 0, arm {1}, arm {2,3}, arm {4,...,n-1} (leaf last).
///  - BC1: one Half vertex. G1: one TwoThirds vertex. G2: Long 0 adjacent to TwoThirds 1.
DecoratedGraph build_component(ComponentKind kind);

/// Disjoint union of build_component over the members, in canonical order.
DecoratedGraph realize(const Combination& c);

/// Catalog type of a connected, nonempty graph, or nullopt when it is not in the catalog.
/// Throws ContractViolation for empty or disconnected input.
std::optional<ComponentKind> recognize_component(const DecoratedGraph& g);

/// Component-wise recognition of the subgraph induced by `within`; nullopt if any
/// component is outside the catalog.
std::optional<Combination> classify(const DecoratedGraph& g, VertexMask within);
std::optional<Combination> classify(const DecoratedGraph& g);

/// Isomorphism classes of all induced subgraphs whose components are all A, D or E.
/// Always contains the empty combination.
CombinationSet dynkin_subgraph_classes(const DecoratedGraph& g);

}  // namespace dynkin
