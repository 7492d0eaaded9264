#pragma once

#include "dynkin/catalog.hpp"
#include "dynkin/combination.hpp"
#include "dynkin/transforms.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dynkin {

/// Rule used to produce a PC set.
///  Rdp      : induced Dynkin subgraphs of the graph itself.
///  Elliptic : two elementary transformations from the basic graph.
///  Cusp     : one elementary transformation from a Dynkin subgraph of the Gabrielov graph.
///  Thm1     : one elementary or tie transformation from a Dynkin subgraph of the
///             Gabrielov graph, plus the tabulated exceptions.
///  Thm2     : two transformations (any mix) from the essential basic graph, ADE results only.
enum class Method { Rdp, Elliptic, Cusp, Thm1, Thm2 };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

/// Theorem-1 methods default to including the exception list.
struct PcOptions {
    bool include_exceptions = true;
    friend bool operator==(const PcOptions&, const PcOptions&) = default;
};

struct PcResult {
    SingularityClass cls;
    Method method;
    PcOptions options;
    CombinationSet members;
    friend bool operator==(const PcResult&, const PcResult&) = default;
};

PcResult pc_rational_double_point(const RationalDoublePoint& rdp);
PcResult pc_simple_elliptic(const SimpleElliptic& e);
PcResult pc_cusp(const Cusp& c);
PcResult pc_triangle_thm1(const Triangle& t, bool include_exceptions = true);
/// Throws std::invalid_argument for classes outside the E/Z/Q rows.
PcResult pc_nine_thm2(const Triangle& t);

/// The canonical method of a class: Rdp, Elliptic, Cusp, or Thm1 for triangles.
Method canonical_method(const SingularityClass& c);

/// Throws std::invalid_argument when `method` does not apply to the class.
PcResult compute_pc(const SingularityClass& c, Method method, PcOptions options = {});
PcResult compute_pc(const SingularityClass& c);

/// Theorem-1 set without exceptions: union of elementary and tie results over
/// the Dynkin subgraphs of the Gabrielov graph.
CombinationSet thm1_transform_reachable(const Triangle& t);

/// Derivation of a member.
///  - Subgraph: `start` is a Dynkin subgraph of the class graph (the RDP graph or
///    the Gabrielov graph), then `steps` are applied.
///  - BasicGraph: `start` is the basic or essential basic graph, then `steps`.
///  - Exception: the member is listed in the class exception table.
struct Witness {
    enum class Origin { Subgraph, BasicGraph, Exception };
    struct Step {
        Transform op;
        Combination result;
        friend bool operator==(const Step&, const Step&) = default;
    };
    Origin origin = Origin::Subgraph;
    Combination start;
    std::vector<Step> steps;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// First derivation in enumeration order (candidates visited in Combination order),
/// or nullopt for non-members.
std::optional<Witness> find_witness(const SingularityClass& c, Method method, const Combination& member);

/// Re-runs the witness through the transformations; returns the combination it
/// derives, or nullopt if some step is not reproducible.
std::optional<Combination> replay_witness(const SingularityClass& c, Method method, const Witness& w);

std::string format_witness(const Witness& w);

struct ConsistencyReport {
    TriangleName cls;
    CombinationSet only_thm1;
    CombinationSet only_thm2;
    [[nodiscard]] bool consistent() const { return only_thm1.empty() && only_thm2.empty(); }
};

/// Symmetric difference of Theorem 1 (with exceptions) and Theorem 2.
/// Throws std::invalid_argument for classes outside the E/Z/Q rows.
ConsistencyReport verify_consistency(const Triangle& t);

/// Induced Dynkin subgraph classes of members that are missing from the set.
/// Used as a diagnostic only.
CombinationSet subgraph_closure_gaps(const CombinationSet& members);

}  // namespace dynkin
