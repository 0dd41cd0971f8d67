#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fintop/catalog.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/isomorphism.hpp"
#include "fintop/random.hpp"
#include "test_helpers.hpp"

using namespace fintop;
using th::by_labels;
using th::chain;

namespace {

// Oracle for the retract characterization: the set of subspaces reachable
// from X by removing one beat point of the given kind at a time, computed by
// explicit breadth-first search over subsets. Independent of the max(U_x
// cap A) formula used by the implementation.
std::set<std::vector<int>> reachable_by_removals(const FinitePoset& x, BeatKind kind) {
    std::set<std::vector<int>> seen;
    std::vector<Bitset> frontier{Bitset::full(x.size())};
    seen.insert(Bitset::full(x.size()).to_vector());
    while (!frontier.empty()) {
        std::vector<Bitset> next;
        for (const Bitset& s : frontier) {
            FinitePoset sub = x.restrict(s);
            std::vector<int> to_parent = s.to_vector();
            for (const BeatPoint& b : find_beat_points(sub)) {
                if (b.kind != kind) continue;
                Bitset smaller = s;
                smaller.reset(to_parent[static_cast<std::size_t>(b.element)]);
                if (seen.insert(smaller.to_vector()).second) next.push_back(smaller);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("beat points on the named spaces") {
    FinitePoset x = generate("ex-easy");
    auto bps = find_beat_points(x);
    REQUIRE(bps.size() == 1);
    CHECK(x.label(bps[0].element) == "2");
    CHECK(bps[0].kind == BeatKind::down);
    CHECK(x.label(bps[0].witness) == "0");

    CHECK(find_beat_points(make_crown(2)).empty());
    CHECK(find_beat_points(make_crown(4)).empty());

    FinitePoset c = chain(3);
    auto cb = find_beat_points(c);
    // 1 and 2 are down beat points, 0 and 1 up beat points
    std::set<std::pair<std::string, int>> got;
    for (const auto& b : cb) got.insert({c.label(b.element), b.kind == BeatKind::down ? 0 : 1});
    std::set<std::pair<std::string, int>> want = {{"1", 0}, {"2", 0}, {"0", 1}, {"1", 1}};
    CHECK(got == want);
}

TEST_CASE("core") {
    for (int n : {1, 2, 5, 9}) CHECK(core(chain(n)).size() == 1);
    for (int n : {2, 3, 4}) {
        FinitePoset cr = make_crown(n);
        CHECK(core(cr) == cr);
    }

    // the twelve-point space that c_space(P343_1) deformation-retracts onto:
    // its labeled point "a" is a down beat point with witness 4, and after
    // removing it the space is the 3/3/2/3 example
    FinitePoset step = FinitePoset::from_covers(
        {"0", "1", "2", "3", "4", "5", "9", "10", "a", "12", "13", "14"},
        {{"0", "3"}, {"0", "4"}, {"1", "3"}, {"1", "5"}, {"2", "4"}, {"2", "5"},
         {"3", "9"}, {"5", "9"}, {"3", "10"}, {"5", "10"}, {"4", "a"},
         {"9", "12"}, {"9", "13"}, {"10", "12"}, {"10", "14"}, {"a", "13"}, {"a", "14"}});
    bool found = false;
    for (const auto& b : find_beat_points(step))
        if (step.label(b.element) == "a" && b.kind == BeatKind::down && step.label(b.witness) == "4")
            found = true;
    CHECK(found);
    Bitset keep = Bitset::full(step.size());
    keep.reset(step.index_of("a"));
    CHECK(isomorphic(step.restrict(keep), generate("P3323")));
    CHECK(isomorphic(core(step), generate("P3323")));
}

TEST_CASE("contractibility") {
    CHECK(is_contractible(th::singleton()));
    CHECK(is_contractible(chain(4)));
    // anything with a maximum or minimum is contractible
    FinitePoset fan = FinitePoset::from_covers({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"0", "3"}});
    CHECK(is_contractible(fan));
    CHECK_FALSE(is_contractible(make_crown(2)));

    // the shaded region {0,1,2,4,5,6} of the 3/3/2/3 space is contractible
    FinitePoset p = generate("P3323");
    CHECK(is_contractible(p.restrict(by_labels(p, {"0", "1", "2", "4", "5", "6"}))));
    // the hexagonal region is not
    CHECK_FALSE(is_contractible(p.restrict(by_labels(p, {"0", "1", "2", "3", "4", "5"}))));
}

TEST_CASE("homotopy equivalence") {
    FinitePoset x = generate("ex-easy");
    CHECK(homotopy_equivalent(x, core(x)));
    CHECK_FALSE(homotopy_equivalent(make_crown(2), make_crown(3)));
    CHECK(homotopy_equivalent(chain(3), th::singleton()));
}

TEST_CASE("removing any beat point preserves the core") {
    for (int i = 0; i < 40; ++i) {
        FinitePoset x = random_poset(3 + i % 6, 0.2 + 0.1 * (i % 6), 900 + i);
        for (const auto& b : find_beat_points(x)) {
            Bitset keep = Bitset::full(x.size());
            keep.reset(b.element);
            CHECK(isomorphic(core(x), core(x.restrict(keep))));
        }
    }
}

TEST_CASE("core has no beat points") {
    for (int i = 0; i < 40; ++i) {
        FinitePoset x = random_poset(2 + i % 8, 0.15 + 0.1 * (i % 7), 4321 + i);
        CHECK(find_beat_points(core(x)).empty());
    }
}

TEST_CASE("dbp retraction basics") {
    FinitePoset x = generate("ex-easy");
    auto whole = dbp_retraction(x, Bitset::full(x.size()));
    REQUIRE(whole.has_value());
    CHECK(whole->retraction.assignment() == MonotoneMap::identity(x).assignment());

    FinitePoset c = chain(3);
    auto bottom = dbp_retraction(c, Bitset::of(3, {0}));
    REQUIRE(bottom.has_value());
    CHECK(bottom->retraction.assignment() == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(dbp_retraction(c, Bitset(3)), PosetError);

    // crown: no proper sub-retracts at all
    FinitePoset cr = make_crown(2);
    Bitset a = Bitset::full(cr.size());
    a.reset(0);
    CHECK_FALSE(dbp_retraction(cr, a).has_value());
}

TEST_CASE("retraction identities") {
    for (int i = 0; i < 25; ++i) {
        FinitePoset x = random_poset(3 + i % 5, 0.3, 777 + i, true);
        for (auto kind : {BeatKind::down, BeatKind::up}) {
            // remove one beat point of the kind, if any
            Bitset a = Bitset::full(x.size());
            bool have = false;
            for (const auto& b : find_beat_points(x))
                if (b.kind == kind && !have) {
                    a.reset(b.element);
                    have = true;
                }
            if (!have) continue;
            auto ret = kind == BeatKind::down ? dbp_retraction(x, a) : ubp_retraction(x, a);
            REQUIRE(ret.has_value());
            CHECK(compose(ret->retraction, ret->inclusion) ==
                  MonotoneMap::identity(ret->subspace));
            MonotoneMap ir = compose(ret->inclusion, ret->retraction);
            if (kind == BeatKind::down)
                CHECK(ir.leq(MonotoneMap::identity(x)));
            else
                CHECK(MonotoneMap::identity(x).leq(ir));
        }
    }
}

TEST_CASE("dbp characterization agrees with explicit removal search") {
    for (int i = 0; i < 12; ++i) {
        FinitePoset x = random_poset(2 + i % 6, 0.25 + 0.1 * (i % 5), 24680 + i);
        auto reachable = reachable_by_removals(x, BeatKind::down);
        // every nonempty subset: formula iff reachable
        const int n = x.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            Bitset a(n);
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) a.set(b);
            bool formula = is_dbp_retract(x, a);
            bool search = reachable.count(a.to_vector()) > 0;
            CHECK(formula == search);
            // dual route through opposites
            CHECK(is_ubp_retract(x.opposite(), a) == formula);
            if (formula) CHECK(x.minimal().is_subset_of(a));
        }
    }
}

TEST_CASE("ubp retract keeps maximal elements") {
    for (int i = 0; i < 20; ++i) {
        FinitePoset x = random_poset(3 + i % 6, 0.35, 1357 + i);
        const int n = x.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            Bitset a(n);
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) a.set(b);
            if (is_ubp_retract(x, a)) CHECK(x.maximal().is_subset_of(a));
        }
    }
}
