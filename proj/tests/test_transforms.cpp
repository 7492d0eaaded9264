#include "dynkin/recognize.hpp"
#include "dynkin/transforms.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dynkin;

namespace {

std::vector<int> sorted_coeffs(const ExtendedComponent& ext)
{
    auto c = ext.coeff;
    std::sort(c.begin(), c.end());
    return c;
}

CombinationSet labels(std::initializer_list<const char*> list)
{
    CombinationSet out;
    for (auto l : list)
        out.insert(parse_label(l));
    return out;
}

}  // namespace

TEST_CASE("extended components")
{
    auto a1 = extend_component(ComponentKind::a(1));
    CHECK(a1.graph.size() == 2);
    CHECK(a1.graph.edge_count() == 1);
    CHECK(a1.coeff == std::vector<int>{1, 1});

    auto a2 = extend_component(ComponentKind::a(2));
    CHECK(a2.graph.size() == 3);
    CHECK(a2.graph.edge_count() == 3);
    CHECK(a2.coeff == std::vector<int>{1, 1, 1});

    auto d4 = extend_component(ComponentKind::d(4));
    CHECK(d4.graph.degree(1) == 4);
    CHECK(sorted_coeffs(d4) == std::vector<int>{1, 1, 1, 1, 2});

    auto e8 = extend_component(ComponentKind::e(8));
    CHECK(e8.graph.size() == 9);
    CHECK(sorted_coeffs(e8) == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});

    auto bc1 = extend_component(ComponentKind::bc1());
    CHECK(bc1.graph.size() == 2);
    CHECK(bc1.coeff[bc1.added_vertex] == 1);
    CHECK(sorted_coeffs(bc1) == std::vector<int>{1, 2});
    CHECK(bc1.graph.norm(bc1.added_vertex) == RootNorm::Long);

    auto g1 = extend_component(ComponentKind::g1());
    CHECK(g1.graph.norm(g1.added_vertex) == RootNorm::TwoThirds);
    CHECK(g1.coeff == std::vector<int>{1, 1});

    auto g2 = extend_component(ComponentKind::g2());
    CHECK(g2.coeff == std::vector<int>{2, 3, 1});
    CHECK(g2.graph.adjacent(g2.added_vertex, 0));
    CHECK_FALSE(g2.graph.adjacent(g2.added_vertex, 1));
}

TEST_CASE("extended shapes: arm lengths and size")
{
    for (auto kind : catalog_kinds(12)) {
        CAPTURE(kind.name());
        auto ext = extend_component(kind);
        CHECK(ext.graph.size() == static_cast<std::size_t>(kind.vertex_count()) + 1);
        CHECK(ext.coeff[ext.added_vertex] == 1);
        CHECK(ext.added_vertex == ext.graph.size() - 1);
        // removing the added vertex gives back the component itself
        auto base = ext.graph.induced(ext.graph.all_vertices() & ~bit(ext.added_vertex));
        CHECK(base == build_component(kind));
    }
    // E6 -> arms (2,2,2), E7 -> (1,3,3), E8 -> (1,2,5)
    auto arms = [](const ExtendedComponent& ext) {
        std::vector<std::size_t> lengths;
        auto rest = ext.graph.all_vertices() & ~bit(0);
        for (auto comp : ext.graph.components(rest))
            lengths.push_back(static_cast<std::size_t>(std::popcount(comp)));
        std::sort(lengths.begin(), lengths.end());
        return lengths;
    };
    CHECK(arms(extend_component(ComponentKind::e(6))) == std::vector<std::size_t>{2, 2, 2});
    CHECK(arms(extend_component(ComponentKind::e(7))) == std::vector<std::size_t>{1, 3, 3});
    CHECK(arms(extend_component(ComponentKind::e(8))) == std::vector<std::size_t>{1, 2, 5});
}

TEST_CASE("coefficients are the primitive kernel vector of the extended Cartan matrix")
{
    for (auto kind : catalog_kinds(14)) {
        CAPTURE(kind.name());
        auto ext = extend_component(kind);
        auto expected = oracle::maximal_root_coefficients(ext);
        REQUIRE(expected.has_value());
        std::vector<long long> stored(ext.coeff.begin(), ext.coeff.end());
        CHECK(stored == *expected);
    }
}

TEST_CASE("elementary transformation examples")
{
    CHECK(elementary_results(parse_label("E7")).contains(parse_label("D6+A1")));
    CHECK(elementary_results(parse_label("A1")) == labels({"A1", "0"}));
    CHECK(elementary_results(parse_label("E8+A2")).contains(parse_label("E6+2A2")));
    CHECK(elementary_results(parse_label("D6+A1")).contains(parse_label("D4+3A1")));
    CHECK(elementary_results(Combination{}) == labels({"0"}));
    CHECK(elementary_results(parse_label("BC1")) == labels({"BC1", "A1", "0"}));
    CHECK(elementary_results(parse_label("G2")) == labels({"G2", "A2", "A1+G1", "A1", "G1", "0"}));
}

TEST_CASE("elementary transformation matches whole-graph enumeration")
{
    for (auto label : {"E7", "D6+A1", "E8+A2", "A3+A2+A1", "E7+G2", "E6+BC1", "D5+G1+A1", "2A1+G2"}) {
        CAPTURE(label);
        auto c = parse_label(label);
        CHECK(elementary_results(c) == oracle::elementary_brute_force(c));
    }
}

TEST_CASE("gcd condition")
{
    CHECK(gcd_condition(std::vector<int>{4}, 1));
    CHECK_FALSE(gcd_condition(std::vector<int>{2}, 0));
    CHECK(gcd_condition(std::vector<int>{1, 1}, 5));
    CHECK_FALSE(gcd_condition(std::vector<int>{2, 4}, 6));
    CHECK(gcd_condition(std::vector<int>{2, 3}, 0));
    CHECK_THROWS_AS(gcd_condition(std::vector<int>{}, 1), ContractViolation);
}

TEST_CASE("tie transformation examples")
{
    CHECK(tie_results(parse_label("E8+A2")).contains(parse_label("A6+D5")));
    auto a1 = tie_results(parse_label("A1"));
    for (auto l : {"A1", "2A1", "A2"})
        CHECK(a1.contains(parse_label(l)));
    CHECK(tie_results(Combination{}) == labels({"A1"}));
}

TEST_CASE("tie choice of the worked E8+A2 example")
{
    // E8: remove the coefficient-4 vertex on the long arm, join the added vertex (N = 1).
    // A2: remove one cycle vertex, join another (n1 = 1, N = 1).
    auto ext = extend_combination(parse_label("E8+A2"));
    REQUIRE(ext.graph.size() == 12);
    TieChoice choice;
    choice.removed = bit(5) | bit(9);
    choice.joined = bit(8) | bit(10);
    CHECK(ext.coeff[5] == 4);
    CHECK(ext.coeff[8] == 1);
    REQUIRE(is_admissible(ext, choice));
    CHECK(classify(apply_tie(ext, choice)) == parse_label("A6+D5"));

    TieChoice bad = choice;
    bad.joined = 0;  // E8 side: gcd(4, 0) = 4
    CHECK_FALSE(is_admissible(ext, bad));
    TieChoice overlap = choice;
    overlap.joined |= bit(5);
    CHECK_FALSE(is_admissible(ext, overlap));
    TieChoice untouched = choice;
    untouched.removed = bit(5);  // no A vertex in the A2 component
    CHECK_FALSE(is_admissible(ext, untouched));
}

TEST_CASE("tie transformation matches direct enumeration of (A, B)")
{
    for (auto label : {"A1", "A2", "2A1", "A3", "D4", "A2+A1", "E6", "BC1", "G1", "G2", "A1+BC1", "A2+G2", "D5",
                       "E7", "3A1"}) {
        CAPTURE(label);
        auto c = parse_label(label);
        CHECK(tie_results(c) == oracle::tie_brute_force(c));
    }
}

TEST_CASE("step results and two-step closure")
{
    auto e7 = parse_label("E7");
    CHECK(step_results(e7, Transform::Elementary) == elementary_results(e7));
    CHECK(step_results(e7, Transform::Tie) == tie_results(e7));

    std::vector<TransformPair> elem_twice{{Transform::Elementary, Transform::Elementary}};
    auto twice = two_step_closure(e7, elem_twice);
    CHECK(twice.contains(parse_label("D4+3A1")));
    for (const auto& x : elementary_results(e7))
        CHECK(twice.contains(x));

    auto all = two_step_closure(parse_label("E7+G2"), kAllTransformPairs);
    CHECK(all.contains(parse_label("A7+A4")));
    // intermediate G components survive into the closure
    CHECK(all.contains(parse_label("E7+G2")));

    CHECK(parse_transform("elem") == Transform::Elementary);
    CHECK(parse_transform("tie") == Transform::Tie);
    CHECK_THROWS_AS(parse_transform("both"), std::invalid_argument);
}

TEST_CASE("property: transformation invariants on random combinations")
{
    std::mt19937 rng(31337);
    for (int i = 0; i < 120; ++i) {
        auto c = oracle::random_combination(rng, 9);
        CAPTURE(format_label(c));
        auto elem = elementary_results(c);
        CHECK(elem.contains(c));
        for (const auto& r : elem)
            CHECK(r.total_rank() <= c.total_rank());
        for (const auto& r : tie_results(c))
            CHECK(r.total_rank() <= c.total_rank() + 1);
        CHECK(elementary_results(c) == elem);
    }
}
