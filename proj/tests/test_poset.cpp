#include "fintop/poset.hpp"

#include "fintop/fixtures.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fintop;

namespace {

poset circle4()
{
    return poset::from_covers({"a", "b", "c", "d"},
                              {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}});
}

poset chain(int n)
{
    std::vector<std::string> e;
    std::vector<std::pair<std::string, std::string>> c;
    for (int i = 0; i < n; ++i)
        e.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        c.emplace_back(std::to_string(i), std::to_string(i + 1));
    return poset::from_covers(e, c);
}

element_set names(const poset& p, std::initializer_list<const char*> ids)
{
    element_set s;
    for (const char* id : ids)
        s.push_back(p.index_of(id));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("from_covers construction and validation")
{
    SECTION("singleton")
    {
        poset p = poset::from_covers({"a"}, {});
        CHECK(p.size() == 1);
        CHECK(p.leq(0, 0));
    }
    SECTION("circle model")
    {
        poset p = circle4();
        CHECK(p.leq(p.index_of("c"), p.index_of("a")));
        CHECK(p.leq(p.index_of("d"), p.index_of("b")));
        CHECK_FALSE(p.comparable(p.index_of("a"), p.index_of("b")));
        CHECK_FALSE(p.comparable(p.index_of("c"), p.index_of("d")));
    }
    SECTION("cycles are rejected")
    {
        CHECK_THROWS_AS(poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(poset::from_covers({"a"}, {{"a", "a"}}), std::invalid_argument);
    }
    SECTION("duplicates and unknown identifiers are rejected")
    {
        CHECK_THROWS_AS(poset::from_covers({"a", "a"}, {}), std::invalid_argument);
        CHECK_THROWS_AS(poset::from_covers({"a"}, {{"a", "z"}}), std::invalid_argument);
    }
    SECTION("empty poset needs the explicit flag")
    {
        CHECK_THROWS_AS(poset::from_covers({}, {}), std::invalid_argument);
        CHECK(poset::from_covers({}, {}, true).size() == 0);
    }
    SECTION("redundant covers are normalized to the transitive reduction")
    {
        poset p = poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
        std::vector<std::pair<std::string, std::string>> want{{"a", "b"}, {"b", "c"}};
        CHECK(p.cover_names() == want);
        CHECK(p.leq(0, 2));
    }
}

TEST_CASE("covers regenerate the order relation")
{
    std::mt19937 rng(555);
    for (int trial = 0; trial < 100; ++trial)
    {
        poset p = testsupport::random_poset(rng, 1 + trial % 7);
        auto closed = testsupport::closure_oracle(p.size(), p.cover_pairs());
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j)
                REQUIRE(p.leq(i, j) == (closed[static_cast<size_t>(i) * p.size() + j] != 0));
    }
}

TEST_CASE("minimal open sets and closures")
{
    poset p = circle4();
    CHECK(min_open(p, p.index_of("a")) == names(p, {"a", "c", "d"}));
    CHECK(closure(p, p.index_of("c")) == names(p, {"a", "b", "c"}));
    CHECK(min_open(poset::from_covers({"a"}, {}), 0) == element_set{0});

    CHECK(min_open_of_set(p, names(p, {"a"})) == names(p, {"a", "c", "d"}));
    CHECK(min_open_of_set(p, names(p, {"c", "d"})) == names(p, {"c", "d"}));
    CHECK(min_open_of_set(p, full_set(p)) == full_set(p));

    CHECK_THROWS_AS(min_open(p, 9), std::invalid_argument);
}

TEST_CASE("min_open in X equals closure in the opposite")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial)
    {
        poset p = testsupport::random_poset(rng, 1 + trial % 6);
        poset op = opposite(p);
        for (int x = 0; x < p.size(); ++x)
            REQUIRE(min_open(p, x) == closure(op, x));
    }
}

TEST_CASE("opposite")
{
    poset p = circle4();
    poset op = opposite(p);
    std::vector<std::pair<std::string, std::string>> want{
        {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
    CHECK(op.cover_names() == want);
    CHECK(opposite(op) == p);
    CHECK(opposite(poset::from_covers({"a"}, {})) == poset::from_covers({"a"}, {}));
}

TEST_CASE("products")
{
    poset single = poset::from_covers({"s"}, {});
    poset two = chain(2);
    SECTION("unit law up to naming")
    {
        poset p = product(single, two);
        REQUIRE(p.size() == 2);
        CHECK(p.leq(0, 1));
        CHECK(p.name(0) == "(s,0)");
    }
    SECTION("2x2 grid")
    {
        poset p = product(two, two);
        CHECK(p.size() == 4);
        int bot = p.index_of("(0,0)"), top = p.index_of("(1,1)");
        int l = p.index_of("(0,1)"), r = p.index_of("(1,0)");
        CHECK(p.leq(bot, top));
        CHECK(p.leq(bot, l));
        CHECK(p.leq(r, top));
        CHECK_FALSE(p.comparable(l, r));
    }
    SECTION("cardinality")
    {
        CHECK(product(circle4(), two).size() == 8);
    }
}

TEST_CASE("subposets")
{
    poset p = circle4();
    poset s = subposet(p, names(p, {"a", "b", "c"}));
    CHECK(s.size() == 3);
    CHECK(s.leq(s.index_of("c"), s.index_of("a")));
    CHECK(s.leq(s.index_of("c"), s.index_of("b")));
    CHECK_FALSE(s.comparable(s.index_of("a"), s.index_of("b")));
    CHECK(subposet(p, full_set(p)) == p);
    CHECK(subposet(p, {0}).size() == 1);
}

TEST_CASE("beat points")
{
    poset p = circle4();
    CHECK(beat_points(p).empty());
    poset s = subposet(p, names(p, {"a", "c", "d"}));
    CHECK(beat_points(s) == names(s, {"c", "d"}));
    poset two = chain(2);
    CHECK(beat_points(two) == element_set{0, 1});
}

TEST_CASE("cores and contractibility")
{
    poset p = circle4();
    CHECK(core(p) == p);
    CHECK_FALSE(is_contractible(p));

    poset s = subposet(p, names(p, {"a", "c", "d"}));
    CHECK(core(s).size() == 1);
    CHECK(is_contractible(s));

    poset single = poset::from_covers({"a"}, {});
    CHECK(core(single) == single);
}

TEST_CASE("monotone map enumeration")
{
    poset two = chain(2);
    auto res = monotone_maps(two, two, 100);
    REQUIRE(res.complete);
    REQUIRE(res.items.size() == 3);
    CHECK(res.items[0] == monotone_map{0, 0});
    CHECK(res.items[1] == monotone_map{0, 1});
    CHECK(res.items[2] == monotone_map{1, 1});

    poset single = poset::from_covers({"a"}, {});
    CHECK(monotone_maps(single, single, 10).items.size() == 1);

    poset p = circle4();
    monotone_map swap{1, 0, 3, 2};
    auto all = monotone_maps(p, p, 100000);
    REQUIRE(all.complete);
    CHECK(std::find(all.items.begin(), all.items.end(), swap) != all.items.end());
    CHECK(is_monotone(p, p, swap));

    SECTION("budget exhaustion reports partial output")
    {
        auto partial = monotone_maps(p, p, 5);
        CHECK_FALSE(partial.complete);
        CHECK(partial.items.size() == 5);
    }
}

TEST_CASE("enumeration agrees with the naive filter")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial)
    {
        poset x = testsupport::random_poset(rng, 1 + trial % 4);
        poset y = testsupport::random_poset(rng, 1 + (trial / 2) % 3);
        auto fast = monotone_maps(x, y, 1000000);
        auto slow = testsupport::naive_monotone_maps(x, y);
        REQUIRE(fast.complete);
        REQUIRE(fast.items.size() == slow.size());
        auto sorted = fast.items;
        std::sort(sorted.begin(), sorted.end());
        std::sort(slow.begin(), slow.end());
        REQUIRE(sorted == slow);
    }
}
