#include "dynkin/catalog.hpp"
#include "dynkin/recognize.hpp"

#include <doctest.h>

#include <bit>

using namespace dynkin;

TEST_CASE("gabrielov graphs")
{
    auto e12 = gabrielov_graph(2, 3, 7);
    CHECK(e12.size() == 10);
    CHECK(e12.degree(0) == 3);
    auto arms = e12.components(e12.all_vertices() & ~bit(0));
    std::vector<int> lengths;
    for (auto a : arms)
        lengths.push_back(std::popcount(a));
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{1, 2, 6});

    auto u12 = gabrielov_graph(4, 4, 4);
    CHECK(u12.size() == 10);
    CHECK(u12.degree(0) == 3);

    CHECK_THROWS_AS(gabrielov_graph(2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gabrielov_graph(2, 3, 6), std::invalid_argument);  // 1/2+1/3+1/6 = 1
    CHECK_THROWS_AS(gabrielov_graph(3, 2, 7), std::invalid_argument);  // unordered
    CHECK_THROWS_AS(gabrielov_graph(1, 5, 7), std::invalid_argument);
    CHECK(gabrielov_graph(3, 3, 4).size() == 8);
}

TEST_CASE("triangle class table")
{
    struct Row {
        TriangleName name;
        GabrielovType type;
    };
    const Row rows[] = {
        {TriangleName::E12, {2, 3, 7}}, {TriangleName::Z11, {2, 4, 5}}, {TriangleName::Q10, {3, 3, 4}},
        {TriangleName::E13, {2, 3, 8}}, {TriangleName::Z12, {2, 4, 6}}, {TriangleName::Q11, {3, 3, 5}},
        {TriangleName::E14, {2, 3, 9}}, {TriangleName::Z13, {2, 4, 7}}, {TriangleName::Q12, {3, 3, 6}},
        {TriangleName::W12, {2, 5, 5}}, {TriangleName::S11, {3, 4, 4}}, {TriangleName::W13, {2, 5, 6}},
        {TriangleName::S12, {3, 4, 5}}, {TriangleName::U12, {4, 4, 4}},
    };
    for (const auto& r : rows) {
        CAPTURE(triangle_name(r.name));
        CHECK(class_data(Triangle{r.name}).gabrielov_type == r.type);
    }
}

TEST_CASE("class data records")
{
    auto w13 = class_data(Triangle{TriangleName::W13});
    CHECK(w13.gabrielov_type == GabrielovType{2, 5, 6});
    CHECK_FALSE(w13.essential_basic_graph.has_value());
    CHECK(w13.exceptions.empty());

    auto z13 = class_data(Triangle{TriangleName::Z13});
    CHECK(z13.gabrielov_type == GabrielovType{2, 4, 7});
    CHECK(z13.essential_basic_graph == parse_label("E7+G2"));
    CHECK(z13.exceptions == CombinationSet{parse_label("A7+A4")});

    CHECK(class_data(Triangle{TriangleName::S11}).exceptions == CombinationSet{parse_label("2A4+A1")});
    CHECK(class_data(Triangle{TriangleName::U12}).exceptions ==
          CombinationSet{parse_label("2D4+A2"), parse_label("A6+A4"), parse_label("A5+A4+A1"), parse_label("2A4+A1")});

    CHECK(class_data(SimpleElliptic{EllipticName::J10}).basic_graph == parse_label("E8"));
    CHECK(class_data(SimpleElliptic{EllipticName::X9}).basic_graph == parse_label("E7"));
    CHECK(class_data(SimpleElliptic{EllipticName::P8}).basic_graph == parse_label("E6"));

    CHECK(class_data(Triangle{TriangleName::E13}).essential_basic_graph == parse_label("E8+BC1"));
    CHECK(class_data(Triangle{TriangleName::Q11}).essential_basic_graph == parse_label("E6+BC1"));
    CHECK(class_data(Triangle{TriangleName::E14}).essential_basic_graph == parse_label("E8+G2"));
}

TEST_CASE("catalog invariants")
{
    int with_essential = 0;
    for (auto t : kAllTriangles) {
        auto data = class_data(Triangle{t});
        CAPTURE(triangle_name(t));
        auto type = *data.gabrielov_type;
        auto g = gabrielov_graph(type);
        CHECK_FALSE(classify(g).has_value());
        CHECK(dynkin_subgraph_classes(g).size() > 1);
        for (const auto& e : data.exceptions) {
            CHECK(e.is_ade_only());
            CHECK(e.total_rank() <= type.p + type.q + type.r - 1);
        }
        if (data.essential_basic_graph) {
            ++with_essential;
            // E column -> E8, Z column -> E7, Q column -> E6, as for P8/X9/J10.
            auto main = data.essential_basic_graph->components().front();
            char column = triangle_name(t)[0];
            auto expected = column == 'E'   ? EllipticName::J10
                            : column == 'Z' ? EllipticName::X9
                                            : EllipticName::P8;
            CHECK(Combination{main} == class_data(SimpleElliptic{expected}).basic_graph);
        }
    }
    CHECK(with_essential == 9);
}

TEST_CASE("class selectors")
{
    CHECK(std::holds_alternative<Triangle>(parse_class("E12")));
    CHECK(std::holds_alternative<Triangle>(parse_class("U12")));
    CHECK(std::holds_alternative<SimpleElliptic>(parse_class("X9")));
    CHECK(std::get<Cusp>(parse_class("T(2,3,7)")).type == GabrielovType{2, 3, 7});
    CHECK(std::get<RationalDoublePoint>(parse_class("D5+A1")).graph == parse_label("D5+A1"));
    CHECK_THROWS_AS(parse_class("T(2,2,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("T(2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("E8+BC1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class("E15"), std::invalid_argument);
    for (auto s : {"A4", "D5+A1", "P8", "X9", "J10", "T(2,3,7)", "T(3,4,5)", "E12", "W13", "0"})
        CHECK(class_string(parse_class(s)) == s);
}
