#include "dynkin/engine.hpp"

#include "dynkin/recognize.hpp"

#include <sstream>
#include <stdexcept>

namespace dynkin {

namespace {

Combination require_essential(const Triangle& t)
{
    auto essential = class_data(t).essential_basic_graph;
    if (!essential)
        throw std::invalid_argument(std::string(triangle_name(t.name)) +
                                    " has no essential basic graph (only E/Z/Q classes do)");
    return *essential;
}

// Graph whose Dynkin subgraphs seed the Subgraph-origin methods.
DecoratedGraph host_graph(const SingularityClass& c)
{
    if (auto* rdp = std::get_if<RationalDoublePoint>(&c))
        return realize(rdp->graph);
    auto type = class_data(c).gabrielov_type;
    if (!type)
        throw std::invalid_argument(class_string(c) + " has no host graph");
    return gabrielov_graph(*type);
}

CombinationSet ade_only(CombinationSet set)
{
    std::erase_if(set, [](const Combination& x) { return !x.is_ade_only(); });
    return set;
}

void check_method(const SingularityClass& c, Method method)
{
    bool ok = false;
    switch (method) {
    case Method::Rdp: ok = std::holds_alternative<RationalDoublePoint>(c); break;
    case Method::Elliptic: ok = std::holds_alternative<SimpleElliptic>(c); break;
    case Method::Cusp: ok = std::holds_alternative<Cusp>(c); break;
    case Method::Thm1: ok = std::holds_alternative<Triangle>(c); break;
    case Method::Thm2:
        ok = std::holds_alternative<Triangle>(c) && class_data(c).essential_basic_graph.has_value();
        break;
    }
    if (!ok)
        throw std::invalid_argument("method " + std::string(method_name(method)) + " does not apply to " +
                                    class_string(c));
}

}  // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::Rdp: return "RDP";
    case Method::Elliptic: return "ELLIPTIC";
    case Method::Cusp: return "CUSP";
    case Method::Thm1: return "THM1";
    case Method::Thm2: return "THM2";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    for (auto m : {Method::Rdp, Method::Elliptic, Method::Cusp, Method::Thm1, Method::Thm2})
        if (method_name(m) == name)
            return m;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

PcResult pc_rational_double_point(const RationalDoublePoint& rdp)
{
    if (!rdp.graph.is_ade_only())
        throw std::invalid_argument("rational double point needs an ADE graph");
    return {rdp, Method::Rdp, {}, dynkin_subgraph_classes(realize(rdp.graph))};
}

PcResult pc_simple_elliptic(const SimpleElliptic& e)
{
    auto basic = *class_data(e).basic_graph;
    return {e, Method::Elliptic, {}, step_results(elementary_results(basic), Transform::Elementary)};
}

PcResult pc_cusp(const Cusp& c)
{
    auto subgraphs = dynkin_subgraph_classes(gabrielov_graph(c.type));
    return {c, Method::Cusp, {}, step_results(subgraphs, Transform::Elementary)};
}

CombinationSet thm1_transform_reachable(const Triangle& t)
{
    auto subgraphs = dynkin_subgraph_classes(gabrielov_graph(*class_data(t).gabrielov_type));
    CombinationSet out = step_results(subgraphs, Transform::Elementary);
    for (auto& x : step_results(subgraphs, Transform::Tie)) {
        if (!x.is_ade_only())
            throw InvariantViolation("tie transformation of an ADE graph produced " + format_label(x));
        out.insert(std::move(x));
    }
    return out;
}

PcResult pc_triangle_thm1(const Triangle& t, bool include_exceptions)
{
    PcResult r{t, Method::Thm1, {include_exceptions}, thm1_transform_reachable(t)};
    if (include_exceptions) {
        auto extra = class_data(t).exceptions;
        r.members.merge(extra);
    }
    return r;
}

PcResult pc_nine_thm2(const Triangle& t)
{
    auto seed = require_essential(t);
    return {t, Method::Thm2, {}, ade_only(two_step_closure(seed, kAllTransformPairs))};
}

Method canonical_method(const SingularityClass& c)
{
    switch (c.index()) {
    case 0: return Method::Rdp;
    case 1: return Method::Elliptic;
    case 2: return Method::Cusp;
    default: return Method::Thm1;
    }
}

PcResult compute_pc(const SingularityClass& c, Method method, PcOptions options)
{
    check_method(c, method);
    switch (method) {
    case Method::Rdp: return pc_rational_double_point(std::get<RationalDoublePoint>(c));
    case Method::Elliptic: return pc_simple_elliptic(std::get<SimpleElliptic>(c));
    case Method::Cusp: return pc_cusp(std::get<Cusp>(c));
    case Method::Thm1: return pc_triangle_thm1(std::get<Triangle>(c), options.include_exceptions);
    case Method::Thm2: return pc_nine_thm2(std::get<Triangle>(c));
    }
    throw std::logic_error("unreachable");
}

PcResult compute_pc(const SingularityClass& c)
{
    return compute_pc(c, canonical_method(c));
}

std::optional<Witness> find_witness(const SingularityClass& c, Method method, const Combination& member)
{
    check_method(c, method);
    using Origin = Witness::Origin;

    switch (method) {
    case Method::Rdp: {
        if (dynkin_subgraph_classes(host_graph(c)).contains(member))
            return Witness{Origin::Subgraph, member, {}};
        return std::nullopt;
    }
    case Method::Elliptic: {
        auto basic = *class_data(c).basic_graph;
        for (const auto& mid : elementary_results(basic))
            if (elementary_results(mid).contains(member))
                return Witness{Origin::BasicGraph,
                               basic,
                               {{Transform::Elementary, mid}, {Transform::Elementary, member}}};
        return std::nullopt;
    }
    case Method::Cusp:
    case Method::Thm1: {
        const bool with_tie = method == Method::Thm1;
        for (const auto& sub : dynkin_subgraph_classes(host_graph(c))) {
            if (elementary_results(sub).contains(member))
                return Witness{Origin::Subgraph, sub, {{Transform::Elementary, member}}};
            if (with_tie && tie_results(sub).contains(member))
                return Witness{Origin::Subgraph, sub, {{Transform::Tie, member}}};
        }
        if (with_tie && class_data(c).exceptions.contains(member))
            return Witness{Origin::Exception, member, {}};
        return std::nullopt;
    }
    case Method::Thm2: {
        if (!member.is_ade_only())
            return std::nullopt;
        auto seed = require_essential(std::get<Triangle>(c));
        for (auto [first, second] : kAllTransformPairs)
            for (const auto& mid : step_results(seed, first))
                if (step_results(mid, second).contains(member))
                    return Witness{Origin::BasicGraph, seed, {{first, mid}, {second, member}}};
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::optional<Combination> replay_witness(const SingularityClass& c, Method method, const Witness& w)
{
    check_method(c, method);
    using Origin = Witness::Origin;
    switch (w.origin) {
    case Origin::Exception:
        if (method == Method::Thm1 && w.steps.empty() && class_data(c).exceptions.contains(w.start))
            return w.start;
        return std::nullopt;
    case Origin::Subgraph:
        if (method == Method::Elliptic || method == Method::Thm2)
            return std::nullopt;
        if (!dynkin_subgraph_classes(host_graph(c)).contains(w.start))
            return std::nullopt;
        break;
    case Origin::BasicGraph: {
        auto data = class_data(c);
        auto expected = method == Method::Thm2 ? data.essential_basic_graph : data.basic_graph;
        if (method != Method::Elliptic && method != Method::Thm2)
            return std::nullopt;
        if (!expected || *expected != w.start)
            return std::nullopt;
        break;
    }
    }

    std::size_t expected_steps = 0;
    switch (method) {
    case Method::Rdp: expected_steps = 0; break;
    case Method::Cusp:
    case Method::Thm1: expected_steps = 1; break;
    case Method::Elliptic:
    case Method::Thm2: expected_steps = 2; break;
    }
    if (w.steps.size() != expected_steps)
        return std::nullopt;

    Combination current = w.start;
    for (const auto& step : w.steps) {
        if (method != Method::Thm1 && method != Method::Thm2 && step.op != Transform::Elementary)
            return std::nullopt;
        if (!step_results(current, step.op).contains(step.result))
            return std::nullopt;
        current = step.result;
    }
    return current;
}

std::string format_witness(const Witness& w)
{
    std::ostringstream os;
    switch (w.origin) {
    case Witness::Origin::Exception: os << "EXCEPTION " << format_label(w.start); return os.str();
    case Witness::Origin::Subgraph: os << "subgraph " << format_label(w.start); break;
    case Witness::Origin::BasicGraph: os << "basic " << format_label(w.start); break;
    }
    for (const auto& step : w.steps)
        os << " --" << transform_name(step.op) << "--> " << format_label(step.result);
    return os.str();
}

ConsistencyReport verify_consistency(const Triangle& t)
{
    require_essential(t);
    auto thm1 = pc_triangle_thm1(t, true).members;
    auto thm2 = pc_nine_thm2(t).members;
    ConsistencyReport report{t.name, {}, {}};
    for (const auto& x : thm1)
        if (!thm2.contains(x))
            report.only_thm1.insert(x);
    for (const auto& x : thm2)
        if (!thm1.contains(x))
            report.only_thm2.insert(x);
    return report;
}

CombinationSet subgraph_closure_gaps(const CombinationSet& members)
{
    CombinationSet gaps;
    for (const auto& m : members)
        for (auto& sub : dynkin_subgraph_classes(realize(m)))
            if (!members.contains(sub))
                gaps.insert(std::move(sub));
    return gaps;
}

}  // namespace dynkin
