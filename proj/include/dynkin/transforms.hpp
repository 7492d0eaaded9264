#pragma once

#include "dynkin/combination.hpp"
#include "dynkin/graph.hpp"

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace dynkin {

/// Extended Dynkin graph of one component, with the coefficient of the maximal
/// root on every vertex. The added (affine) vertex has coefficient 1.
struct ExtendedComponent {
    ComponentKind kind;
    DecoratedGraph graph;
    DecoratedGraph::Vertex added_vertex;
    std::vector<int> coeff;
};

/// Vertices 0..rank-1 coincide with build_component(kind); the added vertex is last.
/// Extended A1 is drawn with one plain edge.
ExtendedComponent extend_component(ComponentKind kind);

enum class Transform { Elementary, Tie };

std::string_view transform_name(Transform op);
Transform parse_transform(std::string_view name);  // "elem" / "tie"

/// Every combination obtained by one elementary transformation: per component,
/// extend and delete a nonempty vertex set.
CombinationSet elementary_results(const Combination& c);

/// gcd(N, n_1, ..., n_l) == 1 with gcd(0, x) = x. Throws ContractViolation on an empty list.
bool gcd_condition(std::span<const int> coeffs_in_a, int n);

/// Vertex choice for a tie transformation on the extended graph of a combination.
struct TieChoice {
    VertexMask removed = 0;  // A
    VertexMask joined = 0;   // B
};

/// Disjoint union of the extended components of `c`, in canonical component order,
/// with per-vertex coefficients and the vertex range owned by each component.
struct ExtendedCombination {
    DecoratedGraph graph;
    std::vector<int> coeff;
    std::vector<VertexMask> component_vertices;
};

ExtendedCombination extend_combination(const Combination& c);

/// True when the choice satisfies A and B disjoint, at least one vertex of A per
/// component, #B <= 3 and the per-component gcd condition.
bool is_admissible(const ExtendedCombination& ext, const TieChoice& choice);

/// Graph produced by a tie choice: A deleted, one new Long vertex joined to every
/// vertex of B. The new vertex is the last vertex of the result.
DecoratedGraph apply_tie(const ExtendedCombination& ext, const TieChoice& choice);

/// Every Dynkin graph produced by an admissible tie choice. Choices whose result
/// is not a Dynkin graph are skipped. tie_results(0) = {A1}.
CombinationSet tie_results(const Combination& c);

CombinationSet step_results(const Combination& c, Transform op);
CombinationSet step_results(const CombinationSet& from, Transform op);

using TransformPair = std::pair<Transform, Transform>;

inline constexpr TransformPair kAllTransformPairs[] = {
    {Transform::Elementary, Transform::Elementary},
    {Transform::Tie, Transform::Tie},
    {Transform::Tie, Transform::Elementary},
    {Transform::Elementary, Transform::Tie},
};

/// Union over the pairs (first, second) of second(first(seed)). The intermediate
/// step keeps BC1/G1/G2 components.
CombinationSet two_step_closure(const Combination& seed, std::span<const TransformPair> pairs);

}  // namespace dynkin
