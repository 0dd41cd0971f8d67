#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fintop/cspace.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/poset.hpp"

namespace fintop {

// The Grothendieck construction over the inclusion diagram on U(X): points
// are pairs (C, x) with C a U-region and x in C, ordered by
// (C1,x1) <= (C2,x2) iff C1 is contained in C2 and x1 <= x2. Labels pair the
// canonical region name with the element label, so DOT output and
// isomorphism witnesses stay readable.
struct IntegralPoset {
    CSpace base;                              // U(X)
    std::vector<std::pair<int, int>> points;  // (region index, ambient element)
    FinitePoset poset;

    int index_of(int region, int element) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].first == region && points[i].second == element) return static_cast<int>(i);
        return -1;
    }
};

inline IntegralPoset build_integral(const FinitePoset& x) {
    IntegralPoset g;
    g.base = u_family(x);
    for (int ri = 0; ri < g.base.size(); ++ri) {
        const Bitset& m = g.base.region(ri).members;
        for (int e = m.first(); e >= 0; e = m.next(e)) g.points.emplace_back(ri, e);
    }
    const int n = static_cast<int>(g.points.size());
    std::vector<std::string> labels;
    labels.reserve(g.points.size());
    for (auto [ri, e] : g.points)
        labels.push_back("(" + g.base.order.label(ri) + "," + x.label(e) + ")");
    std::vector<Bitset> below(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i) {
        auto [r1, e1] = g.points[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            auto [r2, e2] = g.points[static_cast<std::size_t>(j)];
            if (g.base.region(r1).members.is_subset_of(g.base.region(r2).members) && x.leq(e1, e2))
                below[static_cast<std::size_t>(j)].set(i);
        }
    }
    g.poset = FinitePoset::from_down_sets(std::move(labels), std::move(below), /*verify=*/false);
    return g;
}

struct IntegralMaps {
    MonotoneMap rho;   // (C,x) -> x
    MonotoneMap iota;  // x -> (C_U(x), x)
    MonotoneMap q;     // (C,x) -> C
};

inline IntegralMaps structure_maps(const FinitePoset& x, const IntegralPoset& g) {
    const int n = static_cast<int>(g.points.size());
    std::vector<int> rho(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rho[static_cast<std::size_t>(i)] = g.points[static_cast<std::size_t>(i)].second;
        q[static_cast<std::size_t>(i)] = g.points[static_cast<std::size_t>(i)].first;
    }
    std::vector<int> iota(static_cast<std::size_t>(x.size()));
    for (int e = 0; e < x.size(); ++e) {
        Region c = min_region_at(x, e);
        int ri = g.base.index_of(Family::U, c.members);
        int pi = g.index_of(ri, e);
        if (ri < 0 || pi < 0) throw std::logic_error("structure_maps: missing integral point");
        iota[static_cast<std::size_t>(e)] = pi;
    }
    return IntegralMaps{MonotoneMap(g.poset, x, std::move(rho)),
                        MonotoneMap(x, g.poset, std::move(iota)),
                        MonotoneMap(g.poset, g.base.order, std::move(q))};
}

struct IntegralReport {
    int ambient_size = 0;
    int integral_size = 0;
    int base_size = 0;
    bool retract_ok = false;     // rho.iota = id, iota.rho <= id, iota(X) a dbp-retract
    bool u_iso_ok = false;       // U(iota) is an isomorphism with inverse U(rho)
    bool tilde_ok = false;       // U(iota)(C) = { (D,x) : D inside C }
    bool triangle_ok = false;    // (max -) . U(q) = U(rho)
    bool homotopy_ok = false;    // X homotopy equivalent to the integral
    bool quotient_ok = false;    // q surjective; base order = image of the point order

    bool all() const { return retract_ok && u_iso_ok && tilde_ok && triangle_ok && homotopy_ok; }
};

// Checks the structural identities of the construction on a given space.
// Everything here is self-verifying: each flag records a direct computation,
// not an assumption.
inline IntegralReport verify_integral_identities(const FinitePoset& x) {
    IntegralPoset g = build_integral(x);
    IntegralMaps maps = structure_maps(x, g);
    IntegralReport rep;
    rep.ambient_size = x.size();
    rep.integral_size = static_cast<int>(g.points.size());
    rep.base_size = g.base.size();

    // (i) section/retraction identities and the dbp-retract property
    Bitset image(g.poset.size());
    for (int v : maps.iota.assignment()) image.set(v);
    rep.retract_ok = compose(maps.rho, maps.iota) == MonotoneMap::identity(x) &&
                     compose(maps.iota, maps.rho).leq(MonotoneMap::identity(g.poset)) &&
                     is_dbp_retract(g.poset, image);

    // (ii) the induced maps between the two U-spaces invert each other
    CSpace ux = g.base;
    CSpace ug = u_family(g.poset);
    MonotoneMap u_iota = induced_map(maps.iota, Part::U, ux, ug);
    MonotoneMap u_rho = induced_map(maps.rho, Part::U, ug, ux);
    rep.u_iso_ok = compose(u_rho, u_iota) == MonotoneMap::identity(ux.order) &&
                   compose(u_iota, u_rho) == MonotoneMap::identity(ug.order);

    // (iii) U(iota) sends C to its cylinder { (D,x) : D inside C }
    rep.tilde_ok = true;
    for (int ci = 0; ci < ux.size(); ++ci) {
        Bitset tilde(g.poset.size());
        for (int p = 0; p < static_cast<int>(g.points.size()); ++p)
            if (g.base.region(g.points[static_cast<std::size_t>(p)].first)
                    .members.is_subset_of(ux.region(ci).members))
                tilde.set(p);
        if (!(ug.region(u_iota(ci)).members == tilde)) rep.tilde_ok = false;
    }

    // (iv) collapsing U(U(X)) by "take the maximum region" closes the
    // triangle with U(q) and U(rho)
    CSpace uux = u_family(ux.order);
    MonotoneMap u_q = induced_map(maps.q, Part::U, ug, uux);
    rep.triangle_ok = true;
    for (int ri = 0; ri < ug.size(); ++ri) {
        auto m = ux.order.max_of(uux.region(u_q(ri)).members);
        if (!m || *m != u_rho(ri)) rep.triangle_ok = false;
    }

    // (v)
    rep.homotopy_ok = homotopy_equivalent(x, g.poset);

    // q is a quotient map in the finite sense: surjective, and the base
    // order is exactly the relation carried by some pair of points
    rep.quotient_ok = true;
    Bitset hit(ux.size());
    for (int v : maps.q.assignment()) hit.set(v);
    if (hit.count() != ux.size()) rep.quotient_ok = false;
    for (int a = 0; a < ux.size(); ++a) {
        for (int b = 0; b < ux.size(); ++b) {
            bool base_leq = ux.order.leq(a, b);
            bool carried = false;
            for (int p = 0; p < static_cast<int>(g.points.size()) && !carried; ++p) {
                if (g.points[static_cast<std::size_t>(p)].first != a) continue;
                for (int q2 = 0; q2 < static_cast<int>(g.points.size()) && !carried; ++q2)
                    if (g.points[static_cast<std::size_t>(q2)].first == b && g.poset.leq(p, q2))
                        carried = true;
            }
            if (base_leq != carried) rep.quotient_ok = false;
        }
    }
    return rep;
}

}  // namespace fintop
