#include "dynkin/catalog.hpp"
#include "dynkin/recognize.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dynkin;

TEST_CASE("build_component shapes")
{
    auto a3 = build_component(ComponentKind::a(3));
    CHECK(a3.size() == 3);
    CHECK(a3.edge_count() == 2);
    CHECK(a3.adjacent(0, 1));
    CHECK(a3.adjacent(1, 2));

    auto bc1 = build_component(ComponentKind::bc1());
    REQUIRE(bc1.size() == 1);
    CHECK(bc1.norm(0) == RootNorm::Half);

    auto g1 = build_component(ComponentKind::g1());
    REQUIRE(g1.size() == 1);
    CHECK(g1.norm(0) == RootNorm::TwoThirds);

    auto g2 = build_component(ComponentKind::g2());
    REQUIRE(g2.size() == 2);
    CHECK(g2.norm(0) == RootNorm::Long);
    CHECK(g2.norm(1) == RootNorm::TwoThirds);
    CHECK(g2.adjacent(0, 1));

    auto d4 = build_component(ComponentKind::d(4));
    CHECK(d4.degree(1) == 3);
    auto e8 = build_component(ComponentKind::e(8));
    CHECK(e8.size() == 8);
    CHECK(e8.degree(0) == 3);
}

TEST_CASE("recognize_component")
{
    DecoratedGraph one;
    one.add_vertex(RootNorm::Long);
    CHECK(recognize_component(one) == ComponentKind::a(1));

    // arms (1,2,4) around a center
    DecoratedGraph tree;
    auto c = tree.add_vertex(RootNorm::Long);
    for (int arm : {1, 2, 4}) {
        auto prev = c;
        for (int i = 0; i < arm; ++i) {
            auto v = tree.add_vertex(RootNorm::Long);
            tree.add_edge(prev, v);
            prev = v;
        }
    }
    CHECK(recognize_component(tree) == ComponentKind::e(8));
    CHECK(oracle::isomorphic(tree, build_component(ComponentKind::e(8))));

    DecoratedGraph mixed;
    mixed.add_vertex(RootNorm::Long);
    mixed.add_edge(0, mixed.add_vertex(RootNorm::Half));
    CHECK_FALSE(recognize_component(mixed).has_value());

    DecoratedGraph two_thirds_pair;
    two_thirds_pair.add_vertex(RootNorm::TwoThirds);
    two_thirds_pair.add_edge(0, two_thirds_pair.add_vertex(RootNorm::TwoThirds));
    CHECK_FALSE(recognize_component(two_thirds_pair).has_value());

    CHECK_THROWS_AS(recognize_component(DecoratedGraph{}), ContractViolation);
    DecoratedGraph apart;
    apart.add_vertex(RootNorm::Long);
    apart.add_vertex(RootNorm::Long);
    CHECK_THROWS_AS(recognize_component(apart), ContractViolation);
}

TEST_CASE("round trip over the catalog")
{
    for (auto kind : catalog_kinds(16)) {
        CAPTURE(kind.name());
        CHECK(recognize_component(build_component(kind)) == kind);
    }
}

TEST_CASE("recognizer agrees with the isomorphism oracle on random small graphs")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size_dist(1, 7);
    std::uniform_int_distribution<int> norm_dist(0, 9);
    int checked = 0;
    while (checked < 600) {
        DecoratedGraph g;
        int n = size_dist(rng);
        for (int i = 0; i < n; ++i) {
            int r = norm_dist(rng);
            g.add_vertex(r == 0 ? RootNorm::Half : r == 1 ? RootNorm::TwoThirds : RootNorm::Long);
        }
        // random tree plus occasional extra edges
        for (int v = 1; v < n; ++v)
            g.add_edge(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, v - 1)(rng)),
                       static_cast<std::size_t>(v));
        if (n > 2 && norm_dist(rng) == 0) {
            auto u = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng));
            auto v = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng));
            if (u != v && !g.adjacent(u, v))
                g.add_edge(u, v);
        }
        CAPTURE(describe(g));
        CHECK(recognize_component(g) == oracle::recognize_by_isomorphism(g));
        ++checked;
    }
}

TEST_CASE("classify")
{
    CHECK(classify(DecoratedGraph{}) == Combination{});

    DecoratedGraph g = build_component(ComponentKind::d(4));
    for (int i = 0; i < 3; ++i)
        g.add_vertex(RootNorm::Long);
    CHECK(classify(g) == parse_label("D4+3A1"));

    DecoratedGraph square;
    for (int i = 0; i < 4; ++i)
        square.add_vertex(RootNorm::Long);
    square.add_edge(0, 1);
    square.add_edge(1, 2);
    square.add_edge(2, 3);
    square.add_edge(3, 0);
    CHECK_FALSE(classify(square).has_value());
    // no catalog entry of size 4 matches the cycle
    CHECK_FALSE(oracle::recognize_by_isomorphism(square).has_value());
}

TEST_CASE("property: classify is invariant under relabeling")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto c = oracle::random_combination(rng, 12);
        auto g = realize(c);
        auto perm = oracle::random_permutation(rng, g.size());
        CHECK(classify(g.relabeled(perm)) == c);
    }
}

TEST_CASE("dynkin subgraph classes")
{
    auto a2 = dynkin_subgraph_classes(build_component(ComponentKind::a(2)));
    CHECK(a2 == CombinationSet{parse_label("0"), parse_label("A1"), parse_label("A2")});
    CHECK(a2 == oracle::induced_subgraph_classes(build_component(ComponentKind::a(2))));

    auto w13 = dynkin_subgraph_classes(gabrielov_graph(2, 5, 6));
    CHECK(w13.contains(parse_label("E8+A2")));

    // T(2,3,7): center 0, arm {1}, arm {2,3}, arm {4..9}; the 3-arm and 7-arm form a 9-path.
    auto t237 = gabrielov_graph(2, 3, 7);
    VertexMask path = bit(3) | bit(2) | bit(0);
    for (std::size_t v = 4; v <= 9; ++v)
        path |= bit(v);
    CHECK(classify(t237, path) == parse_label("A9"));
    CHECK(dynkin_subgraph_classes(t237).contains(parse_label("A9")));
}

TEST_CASE("dynkin subgraph classes match the brute-force oracle")
{
    for (auto label : {"D4", "A4+A1", "E6", "D5+A2"}) {
        CAPTURE(label);
        auto g = realize(parse_label(label));
        CHECK(dynkin_subgraph_classes(g) == oracle::induced_subgraph_classes(g));
    }
    auto g = gabrielov_graph(3, 3, 4);
    CHECK(dynkin_subgraph_classes(g) == oracle::induced_subgraph_classes(g));
}

TEST_CASE("property: subgraph classes contain 0 and the graph itself, ranks bounded")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto c = oracle::random_ade(rng, 9);
        auto g = realize(c);
        auto subs = dynkin_subgraph_classes(g);
        CHECK(subs.contains(Combination{}));
        CHECK(subs.contains(c));
        for (const auto& s : subs)
            CHECK(s.total_rank() <= static_cast<int>(g.size()));
    }
}
