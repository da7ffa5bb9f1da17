#include <gtest/gtest.h>

#include "dblcat/catalog.hpp"
#include "dblcat/gray_sq.hpp"
#include "dblcat/json_io.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/verify.hpp"

using namespace dblcat;

namespace {

std::vector<DblCatEntry> all_double_categories()
{
    auto all = double_category_catalog();
    all.push_back({"broken-interchange", broken_interchange()});
    return all;
}

}  // namespace

TEST(JsonIo, TwoCategoriesRoundTrip)
{
    for (const auto& [name, k] : two_category_catalog()) {
        const std::string text = dump(to_json(k));
        const FinTwoCategory back = two_category_from_json(Json::parse(text));
        EXPECT_EQ(dump(to_json(back)), text) << name;
        EXPECT_TRUE(check_axioms(back).ok()) << name;
        EXPECT_EQ(back.two_cell_count(), k.two_cell_count()) << name;
    }
}

TEST(JsonIo, DoubleCategoriesRoundTrip)
{
    for (const auto& [name, d] : all_double_categories()) {
        const std::string text = dump(to_json(d));
        const FinDoubleCategory back = double_category_from_json(Json::parse(text));
        EXPECT_EQ(dump(to_json(back)), text) << name;
        EXPECT_EQ(check_axioms(back).ok(), check_axioms(d).ok()) << name;
        for (std::uint32_t s = 0; s < d.square_count(); ++s)
            for (std::uint32_t t = 0; t < d.square_count(); ++t) {
                ASSERT_EQ(back.sq_hcomp(SquareId{s}, SquareId{t}), d.sq_hcomp(SquareId{s}, SquareId{t}));
                ASSERT_EQ(back.sq_vcomp(SquareId{s}, SquareId{t}), d.sq_vcomp(SquareId{s}, SquareId{t}));
            }
    }
}

TEST(JsonIo, BrokenInterchangeStaysBroken)
{
    const auto back = double_category_from_json(to_json(broken_interchange()));
    EXPECT_FALSE(check_axioms(back).ok());
}

TEST(JsonIo, NerveRoundTrip)
{
    const auto x = materialize(squares_dblcat(two_category_catalog()[1].category), Truncation{2, 2});
    const std::string text = dump(to_json(x));
    const auto back = bisimplicial_from_json(Json::parse(text));
    EXPECT_EQ(dump(to_json(back)), text);
    EXPECT_FALSE(check_identities(back).has_value());
    const auto id = identity_map(x);
    EXPECT_EQ(map_from_json(Json::parse(dump(to_json(id)))), id);
}

TEST(JsonIo, LeqShorthand)
{
    const Json j = Json::parse(R"({
      "kind": "2-category", "name": "galois",
      "objects": ["A", "B"],
      "one_cells": [{"name": "id_A", "source": 0, "target": 0}, {"name": "id_B", "source": 1, "target": 1},
                    {"name": "u", "source": 0, "target": 1}, {"name": "v", "source": 1, "target": 0},
                    {"name": "e", "source": 1, "target": 1}],
      "identities": [0, 1],
      "comp": [[0,0,0],[0,2,2],[1,1,1],[1,3,3],[1,4,4],[2,1,2],[2,3,0],[3,0,3],[3,2,4],[4,1,4],[4,4,4],
               [2,4,2],[4,3,3]],
      "leq": [[4, 1]]
    })");
    const auto k = two_category_from_json(j);
    EXPECT_TRUE(k.locally_posetal());
    EXPECT_TRUE(check_axioms(k).ok()) << check_axioms(k).summary();
    EXPECT_TRUE(k.leq(OneCellId{4}, OneCellId{1}));
    EXPECT_FALSE(k.leq(OneCellId{1}, OneCellId{4}));
    EXPECT_EQ(dump(to_json(k)), dump(to_json(galois_2cat())));
}

TEST(JsonIo, MalformedInput)
{
    EXPECT_THROW(two_category_from_json(Json::parse(R"({"name": "x"})")), ParseError);
    EXPECT_THROW(double_category_from_json(Json::parse(R"({"kind": "2-category"})")), ParseError);
    EXPECT_THROW(two_category_from_json(Json::parse(R"({"kind": "2-category", "name": 3})")), ParseError);
    EXPECT_THROW(read_json_file("fixtures/does-not-exist.json"), ParseError);

    Json j = to_json(free_square());
    j["squares"][0]["top"] = 99;
    EXPECT_THROW(double_category_from_json(j), InvalidInput);
    j = to_json(free_square());
    j["sq_hcomp"].push_back({0, 0, 1000});
    EXPECT_THROW(double_category_from_json(j), InvalidInput);
    j = to_json(free_square());
    j["h_identities"].erase(0);
    EXPECT_THROW(double_category_from_json(j), ParseError);
    j = to_json(galois_2cat());
    j.erase("two_cells");
    j["leq"] = Json::array({Json::array({2, 0})});
    EXPECT_THROW(two_category_from_json(j), InvalidInput);
}

TEST(JsonIo, FixturesMatchCatalog)
{
    const FixtureCatalog builtin = builtin_catalog();
    const FixtureCatalog shipped = load_catalog("fixtures");
    ASSERT_EQ(shipped.two.size(), builtin.two.size());
    ASSERT_EQ(shipped.dbl.size(), builtin.dbl.size());
    for (const auto& [stem, k] : builtin.two) {
        ASSERT_NE(shipped.find_two(stem), nullptr) << stem;
        EXPECT_EQ(dump(to_json(*shipped.find_two(stem))), dump(to_json(k))) << stem;
    }
    for (const auto& [stem, d] : builtin.dbl) {
        ASSERT_NE(shipped.find_dbl(stem), nullptr) << stem;
        EXPECT_EQ(dump(to_json(*shipped.find_dbl(stem))), dump(to_json(d))) << stem;
    }
    EXPECT_EQ(dump(read_json_file("fixtures/sq_poset1.json")), dump(to_json(squares_dblcat(chain(1)))));
}

TEST(JsonIo, FixtureStems)
{
    EXPECT_EQ(fixture_stem("terminal", true), "terminal_2cat");
    EXPECT_EQ(fixture_stem("terminal", false), "terminal");
    EXPECT_EQ(fixture_stem("chain1x1", true), "poset1x1");
    EXPECT_EQ(fixture_stem("sq-chain2", false), "sq_poset2");
    EXPECT_EQ(fixture_stem("free-v-arrow", false), "free_v_arrow");
    EXPECT_THROW(load_catalog("fixtures/missing"), ParseError);
}
