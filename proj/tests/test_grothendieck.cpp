#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fintop/catalog.hpp"
#include "fintop/grothendieck.hpp"
#include "fintop/isomorphism.hpp"
#include "fintop/random.hpp"
#include "test_helpers.hpp"

using namespace fintop;
using th::by_labels;
using th::chain;

TEST_CASE("integral poset sizes") {
    IntegralPoset s = build_integral(th::singleton());
    CHECK(s.poset.size() == 1);

    // five-point example: regions of sizes 2+3+3+1+1
    FinitePoset x = generate("ex-easy");
    IntegralPoset g = build_integral(x);
    CHECK(g.poset.size() == 10);
    int total = 0;
    for (const Region& r : g.base.regions) total += r.members.count();
    CHECK(total == 10);

    // one region only: the integral is a copy of the chain
    FinitePoset c = chain(3);
    IntegralPoset gc = build_integral(c);
    CHECK(gc.base.size() == 1);
    CHECK(isomorphic(gc.poset, c));
}

TEST_CASE("maximal points of the integral") {
    for (int i = 0; i < 30; ++i) {
        FinitePoset x = random_poset(2 + i % 7, 0.3 + 0.1 * (i % 5), 33 + i, true);
        IntegralPoset g = build_integral(x);
        CHECK(static_cast<int>(g.points.size()) == [&] {
            int t = 0;
            for (const Region& r : g.base.regions) t += r.members.count();
            return t;
        }());
        Bitset want(g.poset.size());
        Bitset mxl = x.maximal();
        for (int a = mxl.first(); a >= 0; a = mxl.next(a)) {
            int ri = g.base.index_of(Family::U, x.down_set(a));
            REQUIRE(ri >= 0);
            int pi = g.index_of(ri, a);
            REQUIRE(pi >= 0);
            want.set(pi);
        }
        CHECK(g.poset.maximal() == want);
    }
}

TEST_CASE("structure maps") {
    FinitePoset c = chain(3);
    IntegralPoset gc = build_integral(c);
    IntegralMaps mc = structure_maps(c, gc);
    // single region: all three maps are bijections
    CHECK(compose(mc.rho, mc.iota) == MonotoneMap::identity(c));
    CHECK(compose(mc.iota, mc.rho) == MonotoneMap::identity(gc.poset));

    FinitePoset x = generate("ex-easy");
    IntegralPoset g = build_integral(x);
    IntegralMaps m = structure_maps(x, g);
    // iota(0) = ({0}, 0) since the least region containing 0 is {0}
    int p0 = m.iota(x.index_of("0"));
    CHECK(g.points[static_cast<std::size_t>(p0)].second == x.index_of("0"));
    CHECK(g.base.region(g.points[static_cast<std::size_t>(p0)].first).members == by_labels(x, {"0"}));
    CHECK(compose(m.rho, m.iota) == MonotoneMap::identity(x));
    CHECK(compose(m.iota, m.rho).leq(MonotoneMap::identity(g.poset)));
    // q hits every region
    Bitset hit(g.base.size());
    for (int v : m.q.assignment()) hit.set(v);
    CHECK(hit.count() == g.base.size());
}

TEST_CASE("identity report on the named spaces") {
    for (const char* id : {"ex-easy", "ex-2", "ex-nonfunctorial", "P3323"}) {
        IntegralReport rep = verify_integral_identities(generate(id));
        CHECK(rep.retract_ok);
        CHECK(rep.u_iso_ok);
        CHECK(rep.tilde_ok);
        CHECK(rep.triangle_ok);
        CHECK(rep.homotopy_ok);
        CHECK(rep.quotient_ok);
        CHECK(rep.all());
    }
    IntegralReport rc = verify_integral_identities(chain(4));
    CHECK(rc.all());
}

TEST_CASE("identity report on random connected posets") {
    for (int i = 0; i < 40; ++i) {
        FinitePoset x = random_poset(2 + i % 6, 0.25 + 0.12 * (i % 5), 424242 + i, true);
        IntegralReport rep = verify_integral_identities(x);
        CHECK(rep.all());
        CHECK(rep.quotient_ok);
    }
}
