#pragma once

// End-to-end reproduction checks: every numbered check recomputes one of the
// library's headline results from scratch and compares against frozen
// expected values. The CLI subcommand `verify-paper` and the acceptance test
// binary both run this list.

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/catalog.hpp"
#include "fintop/cspace.hpp"
#include "fintop/fpp.hpp"
#include "fintop/grothendieck.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/io.hpp"
#include "fintop/isomorphism.hpp"
#include "fintop/poset.hpp"
#include "fintop/random.hpp"

namespace fintop::verify {

inline constexpr std::uint64_t kDefaultSeed = 20260808;
inline constexpr int kDefaultTrials = 500;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

struct Failures {
    std::vector<std::string> items;
    void add(std::string msg) {
        if (items.size() < 12) items.push_back(std::move(msg));
    }
    bool ok() const { return items.empty(); }
    std::string join() const {
        std::string out;
        for (const auto& s : items) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }
};

inline Bitset labeled(const FinitePoset& p, const std::vector<std::string>& labels) {
    Bitset b(p.size());
    for (const auto& l : labels) b.set(p.index_of(l));
    return b;
}

inline std::string members_string(const FinitePoset& p, const Bitset& b) {
    std::string s = "{";
    bool first = true;
    for (int e = b.first(); e >= 0; e = b.next(e)) {
        if (!first) s += ",";
        s += p.label(e);
        first = false;
    }
    return s + "}";
}

template <typename Fn>
CriterionResult timed(int id, std::string name, Fn&& fn) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    Failures f;
    std::string note;
    try {
        note = fn(f);
    } catch (const std::exception& e) {
        f.add(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = f.ok();
    r.detail = r.passed ? note : f.join();
    return r;
}

}  // namespace detail

// 1. The region space of the five-point example: nine regions with exactly
// the expected member sets and cover relations.
inline CriterionResult criterion_1() {
    return detail::timed(1, "region space of the five-point example matches exactly", [](detail::Failures& f) {
        FinitePoset x = generate("ex-easy");
        CSpace cs = c_space(x);
        const std::vector<std::pair<Family, std::vector<std::string>>> expected = {
            {Family::U, {"0", "2"}}, {Family::U, {"0", "1", "3"}}, {Family::U, {"0", "1", "4"}},
            {Family::U, {"0"}},      {Family::U, {"1"}},
            {Family::F, {"0", "2", "3", "4"}}, {Family::F, {"1", "3", "4"}},
            {Family::F, {"3"}},      {Family::F, {"4"}},
        };
        if (cs.size() != 9) f.add("expected 9 regions, got " + std::to_string(cs.size()));
        for (const auto& [tag, labels] : expected)
            if (cs.index_of(tag, detail::labeled(x, labels)) < 0)
                f.add("missing region " + std::string(tag == Family::U ? "U" : "F") +
                      detail::members_string(x, detail::labeled(x, labels)));
        std::vector<std::pair<std::string, std::string>> want_covers = {
            {"U{0}", "U{0,2}"},       {"U{0}", "U{0,1,3}"},     {"U{0}", "U{0,1,4}"},
            {"U{1}", "U{0,1,3}"},     {"U{1}", "U{0,1,4}"},
            {"F{0,2,3,4}", "F{3}"},   {"F{0,2,3,4}", "F{4}"},
            {"F{1,3,4}", "F{3}"},     {"F{1,3,4}", "F{4}"},
            {"F{0,2,3,4}", "U{0}"},   {"F{1,3,4}", "U{1}"},
            {"F{3}", "U{0,1,3}"},     {"F{4}", "U{0,1,4}"},
        };
        auto got = cs.order.cover_labels();
        std::sort(got.begin(), got.end());
        std::sort(want_covers.begin(), want_covers.end());
        if (got != want_covers) f.add("region order covers differ from the expected diagram");
        if (cs.families_overlap) f.add("families unexpectedly overlap");
        return "9 regions, 13 covers, exact match";
    });
}

// 2. Composites are not preserved: with the tabulated maps f and g,
// U(f)U(g)({2}) = {0,1,2,3} while U(fg)({2}) = {2}.
inline CriterionResult criterion_2() {
    return detail::timed(2, "induced maps are not functorial on the witness pair", [](detail::Failures& f) {
        FinitePoset x = generate("ex-nonfunctorial");
        auto idx = [&](const char* l) { return x.index_of(l); };
        std::vector<int> ft(5), gt(5, idx("0"));
        ft[static_cast<std::size_t>(idx("0"))] = idx("2");
        ft[static_cast<std::size_t>(idx("1"))] = idx("3");
        ft[static_cast<std::size_t>(idx("2"))] = idx("3");
        ft[static_cast<std::size_t>(idx("3"))] = idx("3");
        ft[static_cast<std::size_t>(idx("4"))] = idx("3");
        MonotoneMap fm(x, x, ft), gm(x, x, gt);
        CSpace u = u_family(x);
        MonotoneMap uf = induced_map(fm, Part::U, u, u);
        MonotoneMap ug = induced_map(gm, Part::U, u, u);
        MonotoneMap ufg = induced_map(compose(fm, gm), Part::U, u, u);
        int r2 = u.index_of(Family::U, detail::labeled(x, {"2"}));
        if (r2 < 0) {
            f.add("region {2} missing");
            return std::string{};
        }
        int via_composite = ufg(r2);
        int via_pair = uf(ug(r2));
        Bitset expect_pair = detail::labeled(x, {"0", "1", "2", "3"});
        if (!(u.region(via_pair).members == expect_pair))
            f.add("U(f)U(g)({2}) = " + detail::members_string(x, u.region(via_pair).members));
        if (!(u.region(via_composite).members == detail::labeled(x, {"2"})))
            f.add("U(fg)({2}) = " + detail::members_string(x, u.region(via_composite).members));
        if (via_composite == via_pair) f.add("composite and pairwise images agree unexpectedly");
        return std::string("U(f)U(g)({2}) = {0,1,2,3} != {2} = U(fg)({2})");
    });
}

// 3. The six-point swap example: three U-regions with a minimum; the swap is
// fixed-point-free downstairs yet both induced maps fix a region.
inline CriterionResult criterion_3() {
    return detail::timed(3, "six-point swap: fixed regions without fixed points", [](detail::Failures& f) {
        FinitePoset x = generate("ex-2");
        CSpace u = u_family(x);
        if (u.size() != 3) f.add("expected 3 U-regions, got " + std::to_string(u.size()));
        auto mn = u.order.minimum();
        if (!mn || !(u.region(*mn).members == detail::labeled(x, {"0", "1", "2", "3"})))
            f.add("U-space minimum is not {0,1,2,3}");
        std::vector<int> swp(6);
        auto idx = [&](const char* l) { return x.index_of(l); };
        swp[static_cast<std::size_t>(idx("0"))] = idx("1");
        swp[static_cast<std::size_t>(idx("1"))] = idx("0");
        swp[static_cast<std::size_t>(idx("2"))] = idx("3");
        swp[static_cast<std::size_t>(idx("3"))] = idx("2");
        swp[static_cast<std::size_t>(idx("4"))] = idx("5");
        swp[static_cast<std::size_t>(idx("5"))] = idx("4");
        MonotoneMap sm(x, x, swp);
        if (sm.has_fixed_point()) f.add("swap map unexpectedly has a fixed point");
        LiftingReport rep = check_fixed_point_lifting(x, sm);
        if (rep.u_fixed_regions.empty()) f.add("U(swap) has no fixed region");
        if (rep.f_fixed_regions.empty()) f.add("F(swap) has no fixed region");
        return std::string("3 U-regions, minimum fixed by the induced map");
    });
}

// 4. Exhaustive fixed-point-property verdicts for the whole catalog range.
inline CriterionResult criterion_4() {
    return detail::timed(4, "exhaustive search verdicts across the catalog", [](detail::Failures& f) {
        int checked = 0;
        auto expect_has = [&](const FinitePoset& p, const std::string& what) {
            FppCertificate c = has_fpp(p, FppMethod::brute);
            if (!c.has_fpp) f.add(what + ": expected the fixed point property");
            ++checked;
        };
        expect_has(generate("P3323"), "P3323");
        expect_has(generate("P343_1"), "P343_1");
        expect_has(generate("P343_2"), "P343_2");
        for (int n = 4; n <= 6; ++n)
            for (int k = 2; k <= n - 1; ++k)
                expect_has(make_xnk(n, k), "X(" + std::to_string(n) + "," + std::to_string(k) + ")");
        for (int n = 2; n <= 5; ++n) {
            FppCertificate c = has_fpp(make_crown(n), FppMethod::brute);
            if (c.has_fpp) f.add("crown n=" + std::to_string(n) + ": expected a witness");
            if (!c.witness || c.witness->has_fixed_point())
                f.add("crown n=" + std::to_string(n) + ": witness missing or invalid");
            ++checked;
        }
        return std::to_string(checked) + " spaces decided by exhaustive search";
    });
}

// 5. The region space of the first 3/4/3 example deformation-retracts onto
// the 3/3/2/3 space.
inline CriterionResult criterion_5() {
    return detail::timed(5, "C(P343_1) is homotopy equivalent to P3323", [](detail::Failures& f) {
        FinitePoset a = c_space(generate("P343_1")).order;
        FinitePoset b = generate("P3323");
        if (!homotopy_equivalent(a, b)) f.add("cores are not isomorphic");
        return "cores isomorphic (" + std::to_string(core(a).size()) + " points)";
    });
}

// 6. Both region families of P3323: sizes, extremes, and which regions are
// contractible as subspaces.
inline CriterionResult criterion_6() {
    return detail::timed(6, "region families of P3323 match the expected shading", [](detail::Failures& f) {
        FinitePoset x = generate("P3323");
        CSpace u = u_family(x);
        CSpace ff = f_family(x);
        if (u.size() != 7) f.add("expected 7 U-regions, got " + std::to_string(u.size()));
        if (ff.size() != 7) f.add("expected 7 F-regions, got " + std::to_string(ff.size()));
        auto mn = u.order.minimum();
        Bitset u_exception = detail::labeled(x, {"0", "1", "2", "3", "4", "5"});
        Bitset f_exception = detail::labeled(x, {"3", "6", "7", "8", "9", "10"});
        if (!mn || !(u.region(*mn).members == detail::labeled(x, {"0", "1", "2", "4", "5"})))
            f.add("U-space minimum is not {0,1,2,4,5}");
        auto mx = ff.order.maximum();
        if (!mx || !(ff.region(*mx).members == detail::labeled(x, {"6", "7", "8", "9", "10"})))
            f.add("F-space maximum is not {6,7,8,9,10}");
        for (const Region& r : u.regions) {
            bool want = !(r.members == u_exception);
            if (is_contractible(x.restrict(r.members)) != want)
                f.add("U-region " + detail::members_string(x, r.members) + " contractibility wrong");
        }
        for (const Region& r : ff.regions) {
            bool want = !(r.members == f_exception);
            if (is_contractible(x.restrict(r.members)) != want)
                f.add("F-region " + detail::members_string(x, r.members) + " contractibility wrong");
        }
        return std::string("7+7 regions; single non-contractible region per family");
    });
}

namespace detail {

// member sets of the six non-top regions of U(X(n,k)), straight from their
// closed-form description
struct XnkFormulas {
    Bitset A, B, C, D, E, F;
};

inline XnkFormulas xnk_region_formulas(const FinitePoset& x, int n, int k) {
    auto b = [&](int j) { return x.index_of("b" + std::to_string(j)); };
    auto c = [&](int j) { return x.index_of("c" + std::to_string(j)); };
    auto parity_of_n = [&](int j) { return (j % 2) == (n % 2); };
    XnkFormulas r{Bitset(x.size()), Bitset(x.size()), Bitset(x.size()),
                  Bitset(x.size()), Bitset(x.size()), Bitset(x.size())};
    for (int j = 1; j <= n - 2; ++j) r.A.set(b(j));
    for (int j = 1; j <= n - 1; ++j) r.A.set(c(j));
    for (int j = k; j <= n; ++j)
        if (!parity_of_n(j)) r.B.set(b(j));
    for (int j = k - 1; j <= n; ++j)
        if (parity_of_n(j)) r.B.set(c(j));
    for (int j = k; j <= n; ++j)
        if (parity_of_n(j)) r.C.set(b(j));
    for (int j = k - 1; j <= n; ++j)
        if (!parity_of_n(j)) r.C.set(c(j));
    r.C.set(c(n));
    for (int j = k; j <= n - 3; ++j)
        if (!parity_of_n(j)) r.D.set(b(j));
    for (int j = k - 1; j <= n - 2; ++j)
        if (parity_of_n(j)) r.D.set(c(j));
    for (int j = k; j <= n - 2; ++j)
        if (parity_of_n(j)) r.E.set(b(j));
    for (int j = k - 1; j <= n - 1; ++j)
        if (!parity_of_n(j)) r.E.set(c(j));
    r.F.set(c(n));
    return r;
}

inline FinitePoset xnk_expected_u_shape() {
    return FinitePoset::from_covers(
        {"D", "E", "F", "A", "B", "C", "U1", "U2", "U3"},
        {{"D", "A"}, {"D", "B"}, {"E", "A"}, {"E", "C"}, {"F", "B"}, {"F", "C"},
         {"A", "U1"}, {"A", "U2"}, {"B", "U1"}, {"B", "U3"}, {"C", "U2"}, {"C", "U3"}});
}

}  // namespace detail

// 7. U(X(n,k)) is the fixed nine-element poset and its six non-top regions
// have exactly the closed-form member sets.
inline CriterionResult criterion_7() {
    return detail::timed(7, "U(X(n,k)) has the expected nine-element shape and regions", [](detail::Failures& f) {
        const std::vector<std::pair<int, int>> pairs = {{4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 3}};
        FinitePoset shape = detail::xnk_expected_u_shape();
        for (auto [n, k] : pairs) {
            std::string tag = "X(" + std::to_string(n) + "," + std::to_string(k) + ")";
            FinitePoset x = make_xnk(n, k);
            CSpace u = u_family(x);
            if (u.size() != 9) {
                f.add(tag + ": expected 9 regions, got " + std::to_string(u.size()));
                continue;
            }
            if (!isomorphic(u.order, shape)) f.add(tag + ": U-space shape mismatch");
            auto fm = detail::xnk_region_formulas(x, n, k);
            std::vector<int> found;
            for (auto [name, members] :
                 std::vector<std::pair<const char*, const Bitset*>>{
                     {"A", &fm.A}, {"B", &fm.B}, {"C", &fm.C}, {"D", &fm.D}, {"E", &fm.E}, {"F", &fm.F}})
                if (int i = u.index_of(Family::U, *members); i < 0)
                    f.add(tag + ": formula region " + name + " missing");
                else
                    found.push_back(i);
            for (int i = 1; i <= 3; ++i)
                if (int j = u.index_of(Family::U, x.down_set(x.index_of("a" + std::to_string(i)))); j < 0)
                    f.add(tag + ": top region U_a" + std::to_string(i) + " missing");
                else
                    found.push_back(j);
            std::sort(found.begin(), found.end());
            if (std::unique(found.begin(), found.end()) != found.end() || found.size() != 9)
                f.add(tag + ": the nine regions are not accounted for exactly once");
        }
        return std::to_string(pairs.size()) + " parameter pairs matched";
    });
}

// 8. The cardinality gap that drives the fixed-point argument:
// #A = 2n-3 > n-k+2 >= #B across the generated range.
inline CriterionResult criterion_8() {
    return detail::timed(8, "cardinality gap #A = 2n-3 > n-k+2 >= #B", [](detail::Failures& f) {
        int pairs = 0;
        for (int n = 4; n <= 6; ++n) {
            for (int k = 2; k <= n - 1; ++k) {
                std::string tag = "X(" + std::to_string(n) + "," + std::to_string(k) + ")";
                FinitePoset x = make_xnk(n, k);
                CSpace u = u_family(x);
                auto fm = detail::xnk_region_formulas(x, n, k);
                int ia = u.index_of(Family::U, fm.A);
                int ib = u.index_of(Family::U, fm.B);
                if (ia < 0 || ib < 0) {
                    f.add(tag + ": formula regions missing");
                    continue;
                }
                int na = u.region(ia).members.count();
                int nb = u.region(ib).members.count();
                if (na != 2 * n - 3) f.add(tag + ": #A = " + std::to_string(na));
                if (!(na > n - k + 2)) f.add(tag + ": #A not above n-k+2");
                if (!(n - k + 2 >= nb)) f.add(tag + ": #B = " + std::to_string(nb) + " too large");
                ++pairs;
            }
        }
        return std::to_string(pairs) + " parameter pairs checked";
    });
}

// 9. Crown rigidity: non-bijective monotone self-maps of a crown always fix
// a point (exhaustive over all self-maps).
inline CriterionResult criterion_9() {
    return detail::timed(9, "non-bijective crown self-maps all have fixed points", [](detail::Failures& f) {
        std::uint64_t maps = 0;
        for (int n = 2; n <= 4; ++n) {
            CrownLemmaReport rep = check_crown_lemma(make_crown(n));
            if (rep.violations != 0)
                f.add("crown n=" + std::to_string(n) + ": " + std::to_string(rep.violations) + " violations");
            maps += rep.total_maps;
        }
        return std::to_string(maps) + " self-maps enumerated, zero violations";
    });
}

// 10. On both nine-point middle-rank spaces, every fixed-point-free self-map
// restricts to a permutation of {3,4,5}.
inline CriterionResult criterion_10() {
    return detail::timed(10, "fixed-point-free maps permute the middle rank", [](detail::Failures& f) {
        for (const char* id : {"lemma-A", "lemma-B"}) {
            FinitePoset x = generate(id);
            Bitset mid = detail::labeled(x, {"3", "4", "5"});
            std::uint64_t bad = 0, total = 0;
            enumerate_endomaps(x, /*fixed_point_free_only=*/true, [&](const std::vector<int>& fn) {
                ++total;
                Bitset img(x.size());
                for (int e = mid.first(); e >= 0; e = mid.next(e)) img.set(fn[static_cast<std::size_t>(e)]);
                if (!(img == mid)) ++bad;
                return true;
            });
            if (bad != 0)
                f.add(std::string(id) + ": " + std::to_string(bad) + " of " + std::to_string(total) +
                      " maps break the middle rank");
            if (total == 0) f.add(std::string(id) + ": no fixed-point-free maps found at all");
        }
        return std::string("both spaces: every fixed-point-free map maps {3,4,5} onto itself");
    });
}

namespace detail {

// --- property-suite checks over random posets -----------------------------

inline void check_c_duality(const FinitePoset& x, Failures& f) {
    CSpace cs = c_space(x);
    CSpace cop = c_space(x.opposite());
    if (cs.size() != cop.size()) {
        f.add("duality: region counts differ");
        return;
    }
    std::vector<int> match(static_cast<std::size_t>(cop.size()), -1);
    for (int i = 0; i < cop.size(); ++i) {
        const Region& r = cop.region(i);
        Family swapped = r.tag == Family::U ? Family::F : Family::U;
        match[static_cast<std::size_t>(i)] = cs.index_of(swapped, r.members);
        if (match[static_cast<std::size_t>(i)] < 0) {
            f.add("duality: region of C(X^op) missing from C(X)");
            return;
        }
    }
    for (int i = 0; i < cop.size(); ++i)
        for (int j = 0; j < cop.size(); ++j)
            if (cop.order.leq(i, j) !=
                cs.order.leq(match[static_cast<std::size_t>(j)], match[static_cast<std::size_t>(i)])) {
                f.add("duality: order of C(X^op) is not the reversed order of C(X)");
                return;
            }
}

inline void check_c_extremes(const FinitePoset& x, Failures& f) {
    CSpace cs = c_space(x);
    Bitset mxl = cs.order.maximal();
    Bitset mnl = cs.order.minimal();
    Bitset want_mxl(cs.size()), want_mnl(cs.size());
    for (int a = x.maximal().first(); a >= 0; a = x.maximal().next(a)) {
        int i = cs.index_of(Family::U, x.down_set(a));
        if (i < 0) {
            f.add("extremes: U_a missing");
            return;
        }
        want_mxl.set(i);
    }
    for (int a = x.minimal().first(); a >= 0; a = x.minimal().next(a)) {
        int i = cs.index_of(Family::F, x.up_set(a));
        if (i < 0) {
            f.add("extremes: F_a missing");
            return;
        }
        want_mnl.set(i);
    }
    if (!(mxl == want_mxl)) f.add("extremes: mxl[C(X)] != {U_a}");
    if (!(mnl == want_mnl)) f.add("extremes: mnl[C(X)] != {F_a}");
}

inline void check_regions_open_closed(const FinitePoset& x, Failures& f) {
    CSpace cs = c_space(x);
    for (const Region& r : cs.regions) {
        for (int e = r.members.first(); e >= 0; e = r.members.next(e)) {
            const Bitset& hull = r.tag == Family::U ? x.down_set(e) : x.up_set(e);
            if (!hull.is_subset_of(r.members)) {
                f.add("region not open/closed");
                return;
            }
        }
        Bitset idx = r.tag == Family::U ? sharp(x, r.members) : flat(x, r.members);
        if (idx.empty()) {
            f.add("region with empty sharp/flat");
            return;
        }
        Bitset hull = r.tag == Family::U ? min_open_intersection(x, idx) : closure_intersection(x, idx);
        bool found = false;
        for (const Bitset& c : x.components(hull))
            if (c == r.members) found = true;
        if (!found) {
            f.add("region is not a component of its own hull");
            return;
        }
    }
}

inline void check_map_monotonicity_laws(const FinitePoset& x, std::mt19937_64& rng, Failures& f) {
    CSpace u = u_family(x);
    CSpace ff = f_family(x);
    MonotoneMap g = random_monotone_map(x, x, rng);
    MonotoneMap fm = random_monotone_map_below(g, rng);
    if (!fm.leq(g)) {
        f.add("map sampler broke f <= g");
        return;
    }
    if (!induced_map(fm, Part::U, u, u).leq(induced_map(g, Part::U, u, u)))
        f.add("f <= g but U(f) !<= U(g)");
    if (!induced_map(fm, Part::F, ff, ff).leq(induced_map(g, Part::F, ff, ff)))
        f.add("f <= g but F(f) !<= F(g)");

    MonotoneMap h = random_monotone_map(x, x, rng);
    MonotoneMap hg = compose(h, g);
    if (!induced_map(hg, Part::U, u, u).leq(
            compose(induced_map(h, Part::U, u, u), induced_map(g, Part::U, u, u))))
        f.add("U(fg) !<= U(f)U(g)");
    if (!compose(induced_map(h, Part::F, ff, ff), induced_map(g, Part::F, ff, ff))
             .leq(induced_map(hg, Part::F, ff, ff)))
        f.add("F(fg) !>= F(f)F(g)");
}

inline void check_lifting(const FinitePoset& x, std::mt19937_64& rng, Failures& f) {
    MonotoneMap m = random_monotone_map(x, x, rng);
    if (!check_fixed_point_lifting(x, m).lifting_holds) f.add("fixed-point lifting failed");
}

inline void check_fpp_homotopy_invariance(const FinitePoset& x, Failures& f) {
    bool vx = has_fpp(x, FppMethod::brute).has_fpp;
    bool vc = has_fpp(core(x), FppMethod::brute).has_fpp;
    if (vx != vc) f.add("fixed point property not a homotopy invariant here");
}

inline void check_family_beat_points(const FinitePoset& x, Failures& f) {
    for (const BeatPoint& b : find_beat_points(u_family(x).order))
        if (b.kind == BeatKind::up) {
            f.add("U(X) has an up beat point");
            break;
        }
    for (const BeatPoint& b : find_beat_points(f_family(x).order))
        if (b.kind == BeatKind::down) {
            f.add("F(X) has a down beat point");
            break;
        }
}

inline void check_idempotence(const FinitePoset& x, Failures& f) {
    CSpace u = u_family(x);
    CSpace uu = u_family(u.order);
    if (uu.size() != u.size()) {
        f.add("idempotence: sizes differ");
        return;
    }
    // phi(D) = max D, psi(C) = down-set of C; mutually inverse isomorphisms
    std::vector<int> phi(static_cast<std::size_t>(uu.size()), -1);
    for (int d = 0; d < uu.size(); ++d) {
        auto m = u.order.max_of(uu.region(d).members);
        if (!m) {
            f.add("idempotence: a region of U(U(X)) has no maximum");
            return;
        }
        phi[static_cast<std::size_t>(d)] = *m;
    }
    for (int c = 0; c < u.size(); ++c) {
        int d = uu.index_of(Family::U, u.order.down_set(c));
        if (d < 0 || phi[static_cast<std::size_t>(d)] != c) {
            f.add("idempotence: psi is not inverse to phi");
            return;
        }
    }
    for (int d1 = 0; d1 < uu.size(); ++d1)
        for (int d2 = 0; d2 < uu.size(); ++d2)
            if (uu.order.leq(d1, d2) !=
                u.order.leq(phi[static_cast<std::size_t>(d1)], phi[static_cast<std::size_t>(d2)])) {
                f.add("idempotence: phi is not an order isomorphism");
                return;
            }
    if (!isomorphic(uu.order, u.order)) f.add("idempotence: no isomorphism found");
}

inline void check_integral(const FinitePoset& x, Failures& f) {
    IntegralReport rep = verify_integral_identities(x);
    if (!rep.retract_ok) f.add("integral: retract identities failed");
    if (!rep.u_iso_ok) f.add("integral: U(iota)/U(rho) not inverse");
    if (!rep.tilde_ok) f.add("integral: cylinder formula failed");
    if (!rep.triangle_ok) f.add("integral: triangle does not commute");
    if (!rep.homotopy_ok) f.add("integral: not homotopy equivalent to X");
    if (!rep.quotient_ok) f.add("integral: q is not a quotient map in the finite sense");
}

// remove beat points of one kind greedily, never touching `protect`;
// the result is a dbp-/ubp-retract by construction
inline Bitset shrink_by_beat_points(const FinitePoset& x, BeatKind kind, const Bitset& protect,
                                    std::mt19937_64& rng) {
    Bitset keep = Bitset::full(x.size());
    while (true) {
        FinitePoset sub = x.restrict(keep);
        std::vector<int> sub_to_parent = keep.to_vector();
        std::vector<int> removable;
        for (const BeatPoint& b : find_beat_points(sub)) {
            int parent = sub_to_parent[static_cast<std::size_t>(b.element)];
            if (b.kind == kind && !protect.test(parent)) removable.push_back(parent);
        }
        if (removable.empty()) break;
        keep.reset(removable[static_cast<std::size_t>(rng() % removable.size())]);
        if (rng() % 4 == 0) break;  // also exercise partial removals
    }
    return keep;
}

inline void check_bp_retract_props(const FinitePoset& x, std::mt19937_64& rng, Failures& f) {
    CSpace cs = c_space(x);
    CSpace u = u_family(x);
    CSpace ff = f_family(x);

    // dbp-retract keeping the maximal elements
    {
        Bitset a = shrink_by_beat_points(x, BeatKind::down, x.maximal(), rng);
        auto ret = dbp_retraction(x, a);
        if (!ret) {
            f.add("bp: stepwise dbp removal did not give a dbp-retract");
            return;
        }
        if (!x.minimal().is_subset_of(a)) f.add("bp: dbp-retract lost a minimal element");
        // r(C) = C cap A for every region of C(X)
        for (const Region& r : cs.regions) {
            Bitset img(x.size());
            for (int e = r.members.first(); e >= 0; e = r.members.next(e))
                img.set(ret->to_parent[static_cast<std::size_t>(ret->retraction(e))]);
            if (!(img == (r.members & a))) {
                f.add("bp: r(C) != C cap A for a dbp-retract");
                break;
            }
        }
        CSpace ua = u_family(ret->subspace);
        // C cap A is again a U-region of A
        for (const Region& r : u.regions) {
            Bitset got = r.members & a;
            Bitset sub_set(ret->subspace.size());
            for (std::size_t i = 0; i < ret->to_parent.size(); ++i)
                if (got.test(ret->to_parent[i])) sub_set.set(static_cast<int>(i));
            if (ua.index_of(Family::U, sub_set) < 0) {
                f.add("bp: C cap A is not a U-region of the dbp-retract");
                break;
            }
        }
        MonotoneMap ur = induced_map(ret->retraction, Part::U, u, ua);
        MonotoneMap ui = induced_map(ret->inclusion, Part::U, ua, u);
        // U(r) acts by restriction
        for (int i = 0; i < u.size(); ++i) {
            Bitset img(x.size());
            for (int e = u.region(i).members.first(); e >= 0; e = u.region(i).members.next(e))
                img.set(ret->to_parent[static_cast<std::size_t>(ret->retraction(e))]);
            Bitset region_parent(x.size());
            const Bitset& m = ua.region(ur(i)).members;
            for (int e = m.first(); e >= 0; e = m.next(e))
                region_parent.set(ret->to_parent[static_cast<std::size_t>(e)]);
            if (!(region_parent == img)) {
                f.add("bp: U(r) does not act by restriction on a dbp-retract");
                break;
            }
        }
        if (!(compose(ur, ui) == MonotoneMap::identity(ua.order)))
            f.add("bp: U(r)U(i) != id on a dbp-retract with maximal elements kept");
        if (!compose(ui, ur).leq(MonotoneMap::identity(u.order)))
            f.add("bp: U(i)U(r) !<= id on a dbp-retract with maximal elements kept");
        // F(r) is an isomorphism for any dbp-retract
        CSpace fa = f_family(ret->subspace);
        MonotoneMap fr = induced_map(ret->retraction, Part::F, ff, fa);
        if (!isomorphic(ff.order, fa.order) ||
            !(compose(induced_map(ret->inclusion, Part::F, fa, ff), fr).assignment() ==
              MonotoneMap::identity(ff.order).assignment()) ||
            !(compose(fr, induced_map(ret->inclusion, Part::F, fa, ff)).assignment() ==
              MonotoneMap::identity(fa.order).assignment()))
            f.add("bp: F(r) is not an isomorphism for a dbp-retract");
    }

    // ubp-retract keeping the minimal elements
    {
        Bitset a = shrink_by_beat_points(x, BeatKind::up, x.minimal(), rng);
        auto ret = ubp_retraction(x, a);
        if (!ret) {
            f.add("bp: stepwise ubp removal did not give an ubp-retract");
            return;
        }
        if (!x.maximal().is_subset_of(a)) f.add("bp: ubp-retract lost a maximal element");
        for (const Region& r : cs.regions) {
            Bitset img(x.size());
            for (int e = r.members.first(); e >= 0; e = r.members.next(e))
                img.set(ret->to_parent[static_cast<std::size_t>(ret->retraction(e))]);
            if (!(img == (r.members & a))) {
                f.add("bp: r(C) != C cap A for an ubp-retract");
                break;
            }
        }
        // U(r) is an isomorphism for any ubp-retract
        CSpace ua = u_family(ret->subspace);
        MonotoneMap ur = induced_map(ret->retraction, Part::U, u, ua);
        MonotoneMap ui = induced_map(ret->inclusion, Part::U, ua, u);
        if (!(compose(ur, ui) == MonotoneMap::identity(ua.order)) ||
            !(compose(ui, ur) == MonotoneMap::identity(u.order)))
            f.add("bp: U(r) is not an isomorphism for an ubp-retract");
        // dual statements for F
        CSpace fa = f_family(ret->subspace);
        MonotoneMap fr = induced_map(ret->retraction, Part::F, ff, fa);
        MonotoneMap fi = induced_map(ret->inclusion, Part::F, fa, ff);
        for (int i = 0; i < ff.size(); ++i) {
            Bitset img(x.size());
            for (int e = ff.region(i).members.first(); e >= 0; e = ff.region(i).members.next(e))
                img.set(ret->to_parent[static_cast<std::size_t>(ret->retraction(e))]);
            Bitset region_parent(x.size());
            const Bitset& m = fa.region(fr(i)).members;
            for (int e = m.first(); e >= 0; e = m.next(e))
                region_parent.set(ret->to_parent[static_cast<std::size_t>(e)]);
            if (!(region_parent == img)) {
                f.add("bp: F(r) does not act by restriction on an ubp-retract");
                break;
            }
        }
        if (!(compose(fr, fi) == MonotoneMap::identity(fa.order)))
            f.add("bp: F(r)F(i) != id on an ubp-retract with minimal elements kept");
        if (!MonotoneMap::identity(ff.order).leq(compose(fi, fr)))
            f.add("bp: F(i)F(r) !>= id on an ubp-retract with minimal elements kept");
    }
}

}  // namespace detail

// 11. Randomized law suite over connected posets.
inline CriterionResult criterion_11(std::uint64_t seed = kDefaultSeed, int trials = kDefaultTrials) {
    return detail::timed(11, "randomized law suite over " + std::to_string(trials) + " connected posets",
                         [seed, trials](detail::Failures& f) {
        int ran = 0;
        for (int i = 0; i < trials; ++i) {
            int n = 2 + i % 7;
            double density = 0.2 + 0.13 * (i % 6);
            std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            FinitePoset x = random_poset(n, density, s, /*connected_only=*/true);
            // redraw a few times when the largest component came out tiny
            for (std::uint64_t att = 1; att <= 3 && x.size() < n; ++att)
                x = random_poset(n, density, s + 1000000 * att, /*connected_only=*/true);
            std::mt19937_64 rng(seed * 31 + static_cast<std::uint64_t>(i));
            detail::Failures local;
            detail::check_c_duality(x, local);
            detail::check_c_extremes(x, local);
            detail::check_regions_open_closed(x, local);
            detail::check_map_monotonicity_laws(x, rng, local);
            detail::check_lifting(x, rng, local);
            detail::check_fpp_homotopy_invariance(x, local);
            detail::check_family_beat_points(x, local);
            detail::check_idempotence(x, local);
            detail::check_integral(x, local);
            detail::check_bp_retract_props(x, rng, local);
            ++ran;
            if (!local.ok()) {
                f.add("trial " + std::to_string(i) + " (n=" + std::to_string(x.size()) +
                      ", seed=" + std::to_string(seed + static_cast<std::uint64_t>(i)) + "): " + local.join());
                if (f.items.size() >= 5) break;
            }
        }
        return std::to_string(ran) + " posets, zero violations";
    });
}

// 12. The two counterexample spaces behave exactly as documented when the
// retract hypotheses are dropped.
inline CriterionResult criterion_12() {
    return detail::timed(12, "counterexamples: dropped hypotheses really do fail", [](detail::Failures& f) {
        {
            FinitePoset x = generate("ex-fig3");
            Bitset a = Bitset::full(x.size());
            a.reset(x.index_of("4"));
            auto ret = dbp_retraction(x, a);
            if (!ret) {
                f.add("fig3: X minus {4} is not a dbp-retract");
                return std::string{};
            }
            CSpace u = u_family(x);
            CSpace ua = u_family(ret->subspace);
            MonotoneMap ur = induced_map(ret->retraction, Part::U, u, ua);
            int i024 = u.index_of(Family::U, detail::labeled(x, {"0", "2", "4"}));
            if (i024 < 0) {
                f.add("fig3: region {0,2,4} missing");
                return std::string{};
            }
            Bitset got_parent(x.size());
            const Bitset& got = ua.region(ur(i024)).members;
            for (int e = got.first(); e >= 0; e = got.next(e))
                got_parent.set(ret->to_parent[static_cast<std::size_t>(e)]);
            if (!(got_parent == detail::labeled(x, {"0", "1", "2", "3"})))
                f.add("fig3: U(r)({0,2,4}) != {0,1,2,3}");
            Bitset r024(x.size());
            Bitset m024 = detail::labeled(x, {"0", "2", "4"});
            for (int e = m024.first(); e >= 0; e = m024.next(e))
                r024.set(ret->to_parent[static_cast<std::size_t>(ret->retraction(e))]);
            if (got_parent == r024) f.add("fig3: U(r) unexpectedly acts by restriction");
        }
        {
            FinitePoset x = generate("ex-fig4");
            Bitset a = Bitset::full(x.size());
            a.reset(x.index_of("1"));
            if (!is_dbp_retract(x, a)) f.add("fig4: X minus {1} is not a dbp-retract");
            if (isomorphic(u_family(x).order, u_family(x.restrict(a)).order))
                f.add("fig4: U(X) and U(X-{1}) are unexpectedly isomorphic");
        }
        return std::string("both counterexamples reproduced");
    });
}

inline std::vector<CriterionResult> run_paper_checks(std::uint64_t seed = kDefaultSeed,
                                                     int trials = kDefaultTrials) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_1());
    out.push_back(criterion_2());
    out.push_back(criterion_3());
    out.push_back(criterion_4());
    out.push_back(criterion_5());
    out.push_back(criterion_6());
    out.push_back(criterion_7());
    out.push_back(criterion_8());
    out.push_back(criterion_9());
    out.push_back(criterion_10());
    out.push_back(criterion_11(seed, trials));
    out.push_back(criterion_12());
    return out;
}

inline std::string format_result_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "[" << (r.id < 10 ? " " : "") << r.id << "] " << (r.passed ? "PASS" : "FAIL") << " ("
       << static_cast<int>(r.seconds * 1000) << " ms) " << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    return os.str();
}

}  // namespace fintop::verify
