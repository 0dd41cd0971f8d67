#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fintop/catalog.hpp"
#include "fintop/isomorphism.hpp"
#include "fintop/poset.hpp"
#include "fintop/random.hpp"
#include "test_helpers.hpp"

using namespace fintop;
using th::by_labels;
using th::chain;

TEST_CASE("construction from covers") {
    FinitePoset x = generate("ex-easy");
    CHECK(x.size() == 5);
    CHECK(x.maximal() == by_labels(x, {"2", "3", "4"}));
    CHECK(x.minimal() == by_labels(x, {"0", "1"}));
    CHECK(x.covers().size() == 5);

    FinitePoset s = th::singleton();
    CHECK(s.size() == 1);
    CHECK(s.leq(0, 0));
    CHECK(s.covers().empty());
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(FinitePoset::from_covers({"0", "1"}, {{"0", "1"}, {"1", "0"}}), PosetError);
    CHECK_THROWS_AS(FinitePoset::from_covers({"a", "a"}, {}), PosetError);
    CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{"a", "b"}}), PosetError);
    CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{"a", "a"}}), PosetError);
}

TEST_CASE("relation rows are verified") {
    // not reflexive
    CHECK_THROWS_AS(FinitePoset::from_down_sets({"a", "b"}, {Bitset(2), Bitset::of(2, {1})}),
                    PosetError);
    // not antisymmetric
    CHECK_THROWS_AS(
        FinitePoset::from_down_sets({"a", "b"}, {Bitset::full(2), Bitset::full(2)}), PosetError);
    // not transitive: 0<1 and 1<2 without 0<2
    CHECK_THROWS_AS(FinitePoset::from_down_sets(
                        {"a", "b", "c"},
                        {Bitset::of(3, {0}), Bitset::of(3, {0, 1}), Bitset::of(3, {1, 2})}),
                    PosetError);
    FinitePoset ok = FinitePoset::from_down_sets(
        {"a", "b", "c"}, {Bitset::of(3, {0}), Bitset::of(3, {0, 1}), Bitset::of(3, {0, 1, 2})});
    CHECK(ok.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("redundant cover edges are dropped") {
    FinitePoset x = FinitePoset::from_covers({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
    CHECK(x.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("down and up sets") {
    FinitePoset x = generate("ex-easy");
    CHECK(x.down_set(x.index_of("3")) == by_labels(x, {"0", "1", "3"}));
    CHECK(x.strict_down(x.index_of("3")) == by_labels(x, {"0", "1"}));
    CHECK(x.up_set(x.index_of("0")) == by_labels(x, {"0", "2", "3", "4"}));

    FinitePoset s = th::singleton();
    CHECK(s.down_set(0) == Bitset::of(1, {0}));
    CHECK_THROWS_AS(s.down_set(3), PosetError);

    FinitePoset ex2 = generate("ex-2");
    CHECK(ex2.down_set(ex2.index_of("4")) == by_labels(ex2, {"0", "1", "2", "3", "4"}));
}

TEST_CASE("connected components") {
    FinitePoset x = generate("ex-easy");
    Bitset u3 = x.down_set(x.index_of("3"));
    Bitset u4 = x.down_set(x.index_of("4"));
    auto comps = x.components(u3 & u4);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == by_labels(x, {"0"}));
    CHECK(comps[1] == by_labels(x, {"1"}));

    CHECK(x.components(Bitset(x.size())).empty());

    FinitePoset nf = generate("ex-nonfunctorial");
    auto c2 = nf.components(by_labels(nf, {"0", "1", "2"}));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == by_labels(nf, {"0", "1"}));
    CHECK(c2[1] == by_labels(nf, {"2"}));

    FinitePoset fence = FinitePoset::from_covers({"0", "1", "2"}, {{"0", "1"}, {"2", "1"}});
    CHECK(fence.components(Bitset::full(3)).size() == 1);
}

TEST_CASE("opposite") {
    FinitePoset x = generate("ex-easy");
    CHECK(x.opposite().opposite() == x);
    CHECK(x.opposite().minimal() == by_labels(x, {"2", "3", "4"}));

    FinitePoset c = chain(3);
    FinitePoset oc = c.opposite();
    CHECK(oc.leq(2, 0));
    CHECK_FALSE(oc.leq(0, 2));
}

TEST_CASE("extremes") {
    FinitePoset s = th::singleton();
    CHECK(s.maximal() == Bitset::of(1, {0}));
    CHECK(s.minimal() == Bitset::of(1, {0}));

    FinitePoset x42 = make_xnk(4, 2);
    CHECK(x42.maximal() == by_labels(x42, {"a1", "a2", "a3"}));
    CHECK(x42.minimal() == by_labels(x42, {"c1", "c2", "c3", "c4"}));
}

TEST_CASE("induced subposet") {
    FinitePoset x = generate("ex-easy");
    FinitePoset sub = x.restrict(by_labels(x, {"0", "1", "3", "4"}));
    FinitePoset crown4 = make_crown(2);
    CHECK(isomorphic(sub, crown4));

    CHECK(x.restrict(Bitset::full(x.size())) == x);

    // transitivity collapse creates a new cover
    FinitePoset c = chain(3);
    FinitePoset sub2 = c.restrict(by_labels(c, {"0", "2"}));
    CHECK(sub2.covers() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(sub2.label(1) == "2");
}

TEST_CASE("isomorphism search") {
    FinitePoset x = generate("ex-easy");
    auto self = find_isomorphism(x, x);
    REQUIRE(self.has_value());
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            CHECK(x.leq(a, b) == x.leq((*self)[a], (*self)[b]));

    CHECK_FALSE(find_isomorphism(make_crown(2), make_crown(3)).has_value());
    CHECK_FALSE(find_isomorphism(chain(3), th::antichain(3)).has_value());

    // same size, same degree data, different posets
    FinitePoset a = FinitePoset::from_covers({"0", "1", "2", "3"}, {{"0", "1"}, {"2", "3"}});
    FinitePoset b = FinitePoset::from_covers({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "3"}});
    CHECK_FALSE(isomorphic(a, b));

    // relabeled copy
    FinitePoset r = FinitePoset::from_covers({"x", "y", "u", "v", "w"},
                                             {{"x", "u"}, {"x", "v"}, {"x", "w"}, {"y", "v"}, {"y", "w"}});
    auto iso = find_isomorphism(x, r);
    REQUIRE(iso.has_value());
    for (int e = 0; e < x.size(); ++e)
        for (int e2 = 0; e2 < x.size(); ++e2)
            CHECK(x.leq(e, e2) == r.leq((*iso)[e], (*iso)[e2]));
}

TEST_CASE("random posets: degenerate densities") {
    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        CHECK(random_poset(1, 0.5, seed).size() == 1);
        FinitePoset anti = random_poset(6, 0.0, seed);
        CHECK(anti.covers().empty());
        FinitePoset ch = random_poset(6, 1.0, seed);
        CHECK(ch.covers().size() == 5);
        CHECK(ch.maximum().has_value());
        CHECK(ch.minimum().has_value());
    }
    CHECK(random_poset(5, 0.4, 123) == random_poset(5, 0.4, 123));
}

TEST_CASE("random posets: properties") {
    for (int i = 0; i < 60; ++i) {
        FinitePoset x = random_poset(2 + i % 7, 0.1 + 0.1 * (i % 8), 1000 + i);

        // duality between down and up sets
        for (int a = 0; a < x.size(); ++a)
            for (int b = 0; b < x.size(); ++b)
                CHECK(x.down_set(a).test(b) == x.up_set(b).test(a));

        // opposite swaps the roles
        FinitePoset op = x.opposite();
        for (int a = 0; a < x.size(); ++a) CHECK(x.down_set(a) == op.up_set(a));

        // components partition; blocks are connected and non-extendable
        auto comps = x.components(Bitset::full(x.size()));
        Bitset all(x.size());
        for (const auto& c : comps) {
            CHECK_FALSE(all.intersects(c));
            all |= c;
            CHECK(x.components(c).size() == 1);
        }
        CHECK(all == Bitset::full(x.size()));
        for (std::size_t a = 0; a + 1 < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                CHECK(x.components(comps[a] | comps[b]).size() == 2);

        // round-trip through elements + covers
        CHECK(FinitePoset::from_covers(x.labels(), x.cover_labels()) == x);

        // isomorphism is symmetric
        FinitePoset y = random_poset(x.size(), 0.3, 5000 + i);
        CHECK(find_isomorphism(x, y).has_value() == find_isomorphism(y, x).has_value());
    }
}

TEST_CASE("monotone maps") {
    FinitePoset x = generate("ex-easy");
    auto id = MonotoneMap::identity(x);
    CHECK(id.has_fixed_point());
    CHECK(compose(id, id) == id);

    // non-monotone assignment rejected: send 0 above, 3 below
    std::vector<int> bad = {x.index_of("3"), 1, 2, x.index_of("0"), 4};
    CHECK_THROWS_AS(MonotoneMap(x, x, bad), PosetError);

    auto cst = MonotoneMap::constant(x, x, x.index_of("2"));
    CHECK(cst.image(Bitset::full(x.size())).count() == 1);
    CHECK(cst.leq(cst));
    CHECK(compose(cst, id) == cst);
}

TEST_CASE("maximum and minimum of subsets") {
    FinitePoset x = generate("ex-easy");
    CHECK(x.max_of(x.down_set(x.index_of("3"))) == x.index_of("3"));
    CHECK_FALSE(x.max_of(by_labels(x, {"0", "1"})).has_value());
    CHECK(x.min_of(by_labels(x, {"0", "2"})) == x.index_of("0"));
}
