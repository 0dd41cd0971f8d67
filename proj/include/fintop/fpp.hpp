#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fintop/cspace.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/poset.hpp"

namespace fintop {

struct EndomapStats {
    std::uint64_t nodes = 0;  // partial assignments tried
    std::uint64_t maps = 0;   // complete maps produced
};

// Enumerate order-preserving self-maps by backtracking over a linear
// extension: when f(x) is chosen, every element below x already has its
// image, so keeping the cover constraints f(lo) <= f(hi) is exactly
// monotonicity. With fixed_point_free_only, images are restricted up front
// to the elements incomparable with the source (a map with f(x) comparable
// to x always has a fixed point), which prunes hard.
//
// `visit` receives each complete assignment and returns false to stop the
// enumeration early. Deterministic order: images tried in increasing index
// along the fixed linear extension.
template <typename Fn>
EndomapStats enumerate_endomaps(const FinitePoset& x, bool fixed_point_free_only, Fn&& visit) {
    const int n = x.size();
    std::vector<int> order = x.topological_order();
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(n));
    for (auto [lo, hi] : x.covers()) lower[static_cast<std::size_t>(hi)].push_back(lo);
    std::vector<Bitset> allowed(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        Bitset a = Bitset::full(n);
        if (fixed_point_free_only) {
            a -= x.down_set(e);
            a -= x.up_set(e);
        }
        allowed[static_cast<std::size_t>(e)] = std::move(a);
    }
    EndomapStats stats;
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    bool stop = false;
    auto rec = [&](auto&& self, int pos) -> void {
        if (stop) return;
        if (pos == n) {
            ++stats.maps;
            if (!visit(static_cast<const std::vector<int>&>(f))) stop = true;
            return;
        }
        int e = order[static_cast<std::size_t>(pos)];
        Bitset cand = allowed[static_cast<std::size_t>(e)];
        for (int q : lower[static_cast<std::size_t>(e)]) cand &= x.up_set(f[static_cast<std::size_t>(q)]);
        for (int y = cand.first(); y >= 0 && !stop; y = cand.next(y)) {
            ++stats.nodes;
            f[static_cast<std::size_t>(e)] = y;
            self(self, pos + 1);
        }
        f[static_cast<std::size_t>(e)] = -1;
    };
    rec(rec, 0);
    return stats;
}

inline std::optional<std::vector<int>> find_fixed_point_free_map(const FinitePoset& x,
                                                                 EndomapStats* stats = nullptr) {
    std::optional<std::vector<int>> witness;
    EndomapStats st = enumerate_endomaps(x, /*fixed_point_free_only=*/true,
                                         [&](const std::vector<int>& f) {
                                             witness = f;
                                             return false;
                                         });
    if (stats) *stats = st;
    return witness;
}

inline std::uint64_t count_endomaps(const FinitePoset& x, bool fixed_point_free_only) {
    return enumerate_endomaps(x, fixed_point_free_only, [](const std::vector<int>&) { return true; })
        .maps;
}

enum class FppEvidence {
    witness,                 // fixed-point-free self-map found (verdict: lacks)
    max_or_min,              // maximum or minimum element present
    contractible,            // core is a point
    c_criterion,             // region space and all regions have the property
    brute_force_exhausted,   // search space empty of fixed-point-free maps
};

inline const char* to_string(FppEvidence e) {
    switch (e) {
        case FppEvidence::witness: return "fixed-point-free witness";
        case FppEvidence::max_or_min: return "maximum or minimum element";
        case FppEvidence::contractible: return "contractible";
        case FppEvidence::c_criterion: return "region-space criterion";
        case FppEvidence::brute_force_exhausted: return "exhaustive search";
    }
    return "?";
}

// Verdict plus the proof strategy that produced it. A lacks verdict always
// carries a witness map, validated fixed-point-free on construction. For the
// region-space criterion, sub_certificates[0] decides the region space
// itself and the rest decide each region as a subspace.
struct FppCertificate {
    bool has_fpp = false;
    FppEvidence evidence = FppEvidence::brute_force_exhausted;
    std::optional<MonotoneMap> witness;
    EndomapStats stats;
    Part criterion_part = Part::U;
    std::vector<std::string> sub_names;
    std::vector<FppCertificate> sub_certificates;
};

enum class FppMethod { automatic, brute, criterion };

namespace detail {

inline FppCertificate lacks_with_witness(const FinitePoset& x, std::vector<int> f,
                                         EndomapStats stats = {}) {
    FppCertificate c;
    c.has_fpp = false;
    c.evidence = FppEvidence::witness;
    c.witness = MonotoneMap(x, x, std::move(f));
    if (c.witness->has_fixed_point())
        throw std::logic_error("witness map has a fixed point");
    c.stats = stats;
    return c;
}

// Disconnected spaces never have the property: rotating the components by a
// constant map on each is monotone and fixed-point-free.
inline FppCertificate disconnected_witness(const FinitePoset& x,
                                           const std::vector<Bitset>& comps) {
    std::vector<int> f(static_cast<std::size_t>(x.size()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int target = comps[(c + 1) % comps.size()].first();
        for (int e = comps[c].first(); e >= 0; e = comps[c].next(e)) f[static_cast<std::size_t>(e)] = target;
    }
    return lacks_with_witness(x, std::move(f));
}

inline FppCertificate brute_force(const FinitePoset& x) {
    EndomapStats stats;
    auto witness = find_fixed_point_free_map(x, &stats);
    if (witness) return lacks_with_witness(x, std::move(*witness), stats);
    FppCertificate c;
    c.has_fpp = true;
    c.evidence = FppEvidence::brute_force_exhausted;
    c.stats = stats;
    return c;
}

// The cascade without the region-space criterion; used for the criterion's
// sub-decisions so the recursion stays depth one.
inline FppCertificate decide_basic(const FinitePoset& x) {
    auto comps = x.components(Bitset::full(x.size()));
    if (comps.size() > 1) return disconnected_witness(x, comps);
    if (x.maximum() || x.minimum()) {
        FppCertificate c;
        c.has_fpp = true;
        c.evidence = FppEvidence::max_or_min;
        return c;
    }
    if (is_contractible(x)) {
        FppCertificate c;
        c.has_fpp = true;
        c.evidence = FppEvidence::contractible;
        return c;
    }
    return brute_force(x);
}

}  // namespace detail

// Region-space criterion on one side: if the region space has the property
// and every region has it as a subspace, then so does the ambient space. The
// sub-decisions never use the criterion again. Returns nullopt when this
// side does not establish the property (which is not a lacks verdict).
inline std::optional<FppCertificate> try_c_criterion(const FinitePoset& x, Part part) {
    CSpace cs;
    switch (part) {
        case Part::U: cs = u_family(x); break;
        case Part::F: cs = f_family(x); break;
        case Part::C:
            cs = c_space(x);
            if (cs.families_overlap) return std::nullopt;
            break;
    }
    FppCertificate space_cert = detail::decide_basic(cs.order);
    if (!space_cert.has_fpp) return std::nullopt;
    FppCertificate cert;
    cert.has_fpp = true;
    cert.evidence = FppEvidence::c_criterion;
    cert.criterion_part = part;
    cert.sub_names.push_back("region space");
    cert.sub_certificates.push_back(std::move(space_cert));
    for (const Region& r : cs.regions) {
        FppCertificate rc = detail::decide_basic(x.restrict(r.members));
        if (!rc.has_fpp) return std::nullopt;
        cert.sub_names.push_back(region_label(x, r));
        cert.sub_certificates.push_back(std::move(rc));
    }
    return cert;
}

inline std::optional<FppCertificate> try_c_criterion(const FinitePoset& x) {
    for (Part part : {Part::U, Part::F, Part::C})
        if (auto c = try_c_criterion(x, part)) return c;
    return std::nullopt;
}

// Decide the fixed point property.
//
// automatic: disconnected -> lacks; maximum/minimum -> has; contractible ->
// has; region-space criterion on U, F, then C -> has; otherwise exhaustive
// search decides either way.
// brute: connectivity shortcut, then exhaustive search (the ground truth).
// criterion: the steps through the region-space criterion only; nullopt when
// they do not decide.
inline std::optional<FppCertificate> decide_fpp(const FinitePoset& x,
                                                FppMethod method = FppMethod::automatic) {
    auto comps = x.components(Bitset::full(x.size()));
    if (comps.size() > 1) return detail::disconnected_witness(x, comps);
    if (method == FppMethod::brute) return detail::brute_force(x);
    if (x.maximum() || x.minimum()) {
        FppCertificate c;
        c.has_fpp = true;
        c.evidence = FppEvidence::max_or_min;
        return c;
    }
    if (is_contractible(x)) {
        FppCertificate c;
        c.has_fpp = true;
        c.evidence = FppEvidence::contractible;
        return c;
    }
    if (auto crit = try_c_criterion(x)) return crit;
    if (method == FppMethod::criterion) return std::nullopt;
    return detail::brute_force(x);
}

// automatic and brute always decide
inline FppCertificate has_fpp(const FinitePoset& x, FppMethod method = FppMethod::automatic) {
    if (method == FppMethod::criterion)
        throw PosetError("has_fpp: use decide_fpp for the criterion-only method");
    return *decide_fpp(x, method);
}

// 2n-crown recognition: two levels, every element of degree exactly two in
// the Hasse diagram, single cycle. Returns n (>= 2), or nullopt.
inline std::optional<int> crown_order(const FinitePoset& x) {
    const int sz = x.size();
    if (sz < 4 || sz % 2 != 0) return std::nullopt;
    Bitset mxl = x.maximal();
    Bitset mnl = x.minimal();
    if (mxl.intersects(mnl)) return std::nullopt;        // isolated point
    if ((mxl | mnl).count() != sz) return std::nullopt;  // height must be one
    if (mxl.count() != mnl.count()) return std::nullopt;
    for (int e = 0; e < sz; ++e) {
        int deg = mnl.test(e) ? x.strict_up(e).count() : x.strict_down(e).count();
        if (deg != 2) return std::nullopt;
    }
    if (!x.is_connected()) return std::nullopt;
    // connected and 2-regular: the Hasse diagram is a single 2n-cycle
    return sz / 2;
}

struct CrownLemmaReport {
    int n = 0;
    std::uint64_t total_maps = 0;
    std::uint64_t bijective = 0;
    std::uint64_t non_bijective = 0;
    std::uint64_t violations = 0;  // non-bijective maps without a fixed point
};

// Exhaustive verification that every non-bijective monotone self-map of a
// crown has a fixed point.
inline CrownLemmaReport check_crown_lemma(const FinitePoset& x) {
    auto n = crown_order(x);
    if (!n) throw PosetError("check_crown_lemma: not a crown");
    CrownLemmaReport rep;
    rep.n = *n;
    enumerate_endomaps(x, false, [&](const std::vector<int>& f) {
        ++rep.total_maps;
        Bitset img(x.size());
        bool fixed = false;
        for (int e = 0; e < x.size(); ++e) {
            img.set(f[static_cast<std::size_t>(e)]);
            if (f[static_cast<std::size_t>(e)] == e) fixed = true;
        }
        bool bij = img.count() == x.size();
        if (bij)
            ++rep.bijective;
        else {
            ++rep.non_bijective;
            if (!fixed) ++rep.violations;
        }
        return true;
    });
    return rep;
}

struct LiftingReport {
    bool f_has_fixed_point = false;
    std::vector<int> fixed_points;
    std::vector<Region> u_fixed_regions;
    std::vector<Region> f_fixed_regions;
    bool lifting_holds = false;  // fixed point downstairs forces fixed regions
};

// A fixed point of f forces fixed regions of both induced maps (the
// converse fails; see the region spaces of the six-point swap example).
inline LiftingReport check_fixed_point_lifting(const FinitePoset& x, const MonotoneMap& f) {
    if (!(f.source() == x) || !f.is_self_map())
        throw PosetError("check_fixed_point_lifting requires a self-map of X");
    LiftingReport rep;
    rep.fixed_points = f.fixed_points();
    rep.f_has_fixed_point = !rep.fixed_points.empty();
    CSpace cu = u_family(x);
    CSpace cf = f_family(x);
    MonotoneMap uf = induced_map(f, Part::U, cu, cu);
    MonotoneMap ff = induced_map(f, Part::F, cf, cf);
    for (int i = 0; i < cu.size(); ++i)
        if (uf(i) == i) rep.u_fixed_regions.push_back(cu.region(i));
    for (int i = 0; i < cf.size(); ++i)
        if (ff(i) == i) rep.f_fixed_regions.push_back(cf.region(i));
    rep.lifting_holds =
        !rep.f_has_fixed_point || (!rep.u_fixed_regions.empty() && !rep.f_fixed_regions.empty());
    return rep;
}

}  // namespace fintop
