// dynkin-pc: enumerate PC sets of singularity classes and apply Dynkin graph
// transformations from the command line.
//
// Exit codes: 0 success / member / consistent, 1 non-member / inconsistent,
// 2 usage error, 3 internal invariant violation or unreadable cache.

#include "dynkin/cache.hpp"
#include "dynkin/catalog.hpp"
#include "dynkin/engine.hpp"
#include "dynkin/membership.hpp"
#include "dynkin/recognize.hpp"
#include "dynkin/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace dynkin;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr const char* kCacheEnv = "DYNKIN_PC_CACHE_DIR";

struct CliConfig {
    bool json = false;
    std::string cache_dir;
    std::string class_selector;
    std::string via;
    bool no_exceptions = false;
    bool witness = false;

    std::string label;
    std::string op;
    std::vector<int> pqr;
    std::string kind;
    std::string target;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<std::filesystem::path> resolve_cache_dir(const CliConfig& cfg)
{
    if (!cfg.cache_dir.empty())
        return std::filesystem::path(cfg.cache_dir);
    if (const char* env = std::getenv(kCacheEnv); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

Method resolve_method(const SingularityClass& cls, const CliConfig& cfg)
{
    if (cfg.via.empty())
        return canonical_method(cls);
    if (!std::holds_alternative<Triangle>(cls))
        throw UsageError("--via applies to triangle classes only");
    if (cfg.via == "thm1")
        return Method::Thm1;
    if (!class_data(cls).essential_basic_graph)
        throw UsageError("--via thm2 applies to E12..E14, Z11..Z13, Q10..Q12 only");
    return Method::Thm2;
}

void print_labels(const CombinationSet& set)
{
    for (const auto& label : sorted_labels(set))
        std::cout << label << '\n';
}

int cmd_pc(const CliConfig& cfg)
{
    auto cls = parse_class(cfg.class_selector);
    auto method = resolve_method(cls, cfg);
    auto result = cached_pc(cls, method, PcOptions{!cfg.no_exceptions}, resolve_cache_dir(cfg));
    if (cfg.json)
        std::cout << to_json(result).dump(2) << '\n';
    else
        print_labels(result.members);
    return kExitOk;
}

int cmd_check(const CliConfig& cfg)
{
    auto cls = parse_class(cfg.class_selector);
    auto method = resolve_method(cls, cfg);
    auto verdict = check_membership(cls, cfg.label, cfg.witness, method, PcOptions{!cfg.no_exceptions},
                                    resolve_cache_dir(cfg));
    if (cfg.json) {
        json doc{{"class", class_string(cls)},
                 {"method", std::string(method_name(method))},
                 {"label", format_label(verdict.graph)},
                 {"member", verdict.member}};
        doc["witness"] = verdict.witness ? json(format_witness(*verdict.witness)) : json(nullptr);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << (verdict.member ? "MEMBER" : "NON-MEMBER") << '\n';
        if (verdict.witness)
            std::cout << "witness: " << format_witness(*verdict.witness) << '\n';
    }
    return verdict.member ? kExitOk : kExitNegative;
}

int cmd_transform(const CliConfig& cfg)
{
    Transform op;
    try {
        op = parse_transform(cfg.op);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto input = parse_label(cfg.label);
    auto results = step_results(input, op);
    if (cfg.json)
        std::cout << json{{"op", std::string(transform_name(op))},
                          {"input", format_label(input)},
                          {"results", sorted_labels(results)}}
                         .dump(2)
                  << '\n';
    else
        print_labels(results);
    return kExitOk;
}

int cmd_subgraphs(const CliConfig& cfg)
{
    auto cusp = make_cusp(cfg.pqr.at(0), cfg.pqr.at(1), cfg.pqr.at(2));
    auto results = dynkin_subgraph_classes(gabrielov_graph(cusp.type));
    if (cfg.json)
        std::cout << json{{"type", cfg.pqr}, {"results", sorted_labels(results)}}.dump(2) << '\n';
    else
        print_labels(results);
    return kExitOk;
}

int cmd_extend(const CliConfig& cfg)
{
    auto c = parse_label(cfg.kind);
    if (c.component_count() != 1)
        throw UsageError("extend takes a single connected type, e.g. E8 or G2");
    auto ext = extend_component(c.components().front());
    if (cfg.json) {
        json vertices = json::array();
        for (std::size_t v = 0; v < ext.graph.size(); ++v)
            vertices.push_back({{"id", v},
                                {"norm", std::string(1, norm_symbol(ext.graph.norm(v)))},
                                {"coeff", ext.coeff[v]},
                                {"added", v == ext.added_vertex}});
        json edges = json::array();
        for (auto [u, v] : ext.graph.edges())
            edges.push_back({u, v});
        std::cout << json{{"kind", c.components().front().name()}, {"vertices", vertices}, {"edges", edges}}.dump(2)
                  << '\n';
        return kExitOk;
    }
    std::cout << "kind " << c.components().front().name() << '\n';
    for (std::size_t v = 0; v < ext.graph.size(); ++v) {
        std::cout << "vertex " << v << " norm " << norm_symbol(ext.graph.norm(v)) << " coeff " << ext.coeff[v];
        if (v == ext.added_vertex)
            std::cout << " added";
        std::cout << '\n';
    }
    std::cout << "edges";
    for (auto [u, v] : ext.graph.edges())
        std::cout << ' ' << u << '-' << v;
    std::cout << '\n';
    return kExitOk;
}

int cmd_consistency(const CliConfig& cfg)
{
    std::vector<Triangle> targets;
    if (cfg.target == "all9") {
        for (auto t : kNineTriangles)
            targets.push_back(Triangle{t});
    } else {
        auto t = parse_triangle(cfg.target);
        if (!t || !class_data(Triangle{*t}).essential_basic_graph)
            throw UsageError("consistency takes all9 or one of E12..E14, Z11..Z13, Q10..Q12");
        targets.push_back(Triangle{*t});
    }

    bool all_consistent = true;
    json reports = json::array();
    for (const auto& t : targets) {
        auto report = verify_consistency(t);
        all_consistent = all_consistent && report.consistent();
        if (cfg.json) {
            reports.push_back({{"class", std::string(triangle_name(t.name))},
                               {"only_thm1", sorted_labels(report.only_thm1)},
                               {"only_thm2", sorted_labels(report.only_thm2)}});
            continue;
        }
        std::cout << triangle_name(t.name) << ": " << (report.consistent() ? "consistent" : "INCONSISTENT") << '\n';
        for (const auto& label : sorted_labels(report.only_thm1))
            std::cout << "  only thm1: " << label << '\n';
        for (const auto& label : sorted_labels(report.only_thm2))
            std::cout << "  only thm2: " << label << '\n';
    }
    if (cfg.json)
        std::cout << json{{"consistent", all_consistent}, {"reports", reports}}.dump(2) << '\n';
    return all_consistent ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Possible combinations of rational double points on deformation fibers"};
    app.name("dynkin-pc");
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_flag("--json", cfg.json, "Machine-readable JSON output");
    app.add_option("--cache-dir", cfg.cache_dir,
                   std::string("Directory for cached PC sets (overrides $") + kCacheEnv + ")");

    auto add_class_flags = [&](CLI::App* sub) {
        sub->add_flag("--no-exceptions", cfg.no_exceptions, "Leave out tabulated exceptions (triangle classes)");
        sub->add_option("--via", cfg.via, "Theorem used for triangle classes")->check(CLI::IsMember({"thm1", "thm2"}));
    };

    auto* pc = app.add_subcommand("pc", "List the PC set of a singularity class");
    pc->add_option("class", cfg.class_selector, "A4, D5+A1, P8, X9, J10, T(p,q,r), E12 ... U12")->required();
    add_class_flags(pc);

    auto* check = app.add_subcommand("check", "Test whether a Dynkin graph is in a PC set");
    check->add_option("class", cfg.class_selector)->required();
    check->add_option("label", cfg.label, "Dynkin graph label, e.g. D4+3A1")->required();
    check->add_flag("--witness", cfg.witness, "Print a derivation of the member");
    add_class_flags(check);

    auto* transform = app.add_subcommand("transform", "Apply one elementary or tie transformation");
    transform->add_option("op", cfg.op, "elem or tie")->required();
    transform->add_option("label", cfg.label)->required();

    auto* subgraphs = app.add_subcommand("subgraphs", "Dynkin subgraphs of the Gabrielov graph T(p,q,r)");
    subgraphs->add_option("pqr", cfg.pqr, "p q r")->required()->expected(3);

    auto* extend = app.add_subcommand("extend", "Extended graph with maximal-root coefficients");
    extend->add_option("kind", cfg.kind, "A4, D5, E8, BC1, G1, G2, ...")->required();

    auto* consistency = app.add_subcommand("consistency", "Compare Theorem 1 and Theorem 2 PC sets");
    consistency->add_option("target", cfg.target, "all9 or a class name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*pc)
            return cmd_pc(cfg);
        if (*check)
            return cmd_check(cfg);
        if (*transform)
            return cmd_transform(cfg);
        if (*subgraphs)
            return cmd_subgraphs(cfg);
        if (*extend)
            return cmd_extend(cfg);
        if (*consistency)
            return cmd_consistency(cfg);
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const CacheCorruption& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
