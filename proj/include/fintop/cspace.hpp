#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fintop/homotopy.hpp"
#include "fintop/poset.hpp"

namespace fintop {

// Which family a region belongs to: U-regions are open (down-closed),
// F-regions are closed (up-closed).
enum class Family { U, F };

// Which region space to work in: the open family U(X), the closed family
// F(X), or their union C(X).
enum class Part { U, F, C };

// A nonempty connected subset of an ambient space, tagged by family.
// U-regions are the connected components of the sets U_A (A a nonempty set
// of maximal elements); F-regions arise dually from minimal elements.
struct Region {
    Family tag;
    Bitset members;

    bool operator==(const Region&) const = default;
};

// U_A: intersection of the minimal open sets of the elements of A.
inline Bitset min_open_intersection(const FinitePoset& x, const Bitset& a) {
    if (a.empty()) throw PosetError("U_A requires a nonempty index set");
    Bitset r = Bitset::full(x.size());
    for (int e = a.first(); e >= 0; e = a.next(e)) r &= x.down_set(e);
    return r;
}

// F_A: intersection of closures, dually.
inline Bitset closure_intersection(const FinitePoset& x, const Bitset& a) {
    if (a.empty()) throw PosetError("F_A requires a nonempty index set");
    Bitset r = Bitset::full(x.size());
    for (int e = a.first(); e >= 0; e = a.next(e)) r &= x.up_set(e);
    return r;
}

// B-sharp: the maximal elements whose minimal open set contains B.
inline Bitset sharp(const FinitePoset& x, const Bitset& b) {
    if (b.empty()) throw PosetError("sharp requires a nonempty subset");
    Bitset out(x.size());
    Bitset mxl = x.maximal();
    for (int a = mxl.first(); a >= 0; a = mxl.next(a))
        if (b.is_subset_of(x.down_set(a))) out.set(a);
    return out;
}

// B-flat: the minimal elements whose closure contains B.
inline Bitset flat(const FinitePoset& x, const Bitset& b) {
    if (b.empty()) throw PosetError("flat requires a nonempty subset");
    Bitset out(x.size());
    Bitset mnl = x.minimal();
    for (int a = mnl.first(); a >= 0; a = mnl.next(a))
        if (b.is_subset_of(x.up_set(a))) out.set(a);
    return out;
}

namespace detail {

// All distinct nonempty intersections U_A over nonempty A inside the given
// generator set. DFS over include/exclude choices; once an intersection goes
// empty every superset of A is empty too, so that subtree is pruned.
inline std::vector<Bitset> nonempty_intersections(const FinitePoset& x, const Bitset& generators,
                                                  bool down) {
    std::vector<int> gen = generators.to_vector();
    if (gen.size() > 22)
        throw PosetError("region enumeration supports at most 22 extremal elements");
    std::vector<Bitset> out;
    auto rec = [&](auto&& self, std::size_t i, const Bitset& cur, bool chosen) -> void {
        if (i == gen.size()) {
            if (chosen) out.push_back(cur);
            return;
        }
        self(self, i + 1, cur, chosen);
        Bitset next = cur & (down ? x.down_set(gen[i]) : x.up_set(gen[i]));
        if (next.any()) self(self, i + 1, next, true);
    };
    rec(rec, 0, Bitset::full(x.size()), false);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Region> family_regions(const FinitePoset& x, Family fam) {
    Bitset gen = fam == Family::U ? x.maximal() : x.minimal();
    std::vector<Bitset> members;
    for (const Bitset& s : nonempty_intersections(x, gen, fam == Family::U))
        for (Bitset& c : x.components(s)) members.push_back(std::move(c));
    std::sort(members.begin(), members.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<Region> out;
    out.reserve(members.size());
    for (Bitset& m : members) out.push_back(Region{fam, std::move(m)});
    return out;
}

inline bool region_leq(const Region& a, const Region& b) {
    if (a.tag == Family::U && b.tag == Family::U) return a.members.is_subset_of(b.members);
    if (a.tag == Family::F && b.tag == Family::F) return b.members.is_subset_of(a.members);
    if (a.tag == Family::F && b.tag == Family::U) return a.members.intersects(b.members);
    return false;  // U-region below F-region: never
}

}  // namespace detail

inline std::string region_label(const FinitePoset& ambient, const Region& r) {
    std::string s = r.tag == Family::U ? "U{" : "F{";
    bool first = true;
    for (int e = r.members.first(); e >= 0; e = r.members.next(e)) {
        if (!first) s += ',';
        s += ambient.label(e);
        first = false;
    }
    s += '}';
    return s;
}

// The region space of an ambient poset: its regions in canonical order
// (U block before F block, lexicographic member lists within a block) and
// the induced order realized as a poset with canonical labels.
struct CSpace {
    FinitePoset ambient;
    Part part = Part::C;
    std::vector<Region> regions;
    FinitePoset order;
    // set only for part C: some U-region and F-region coincide as sets (the
    // degenerate situation where the induced map on C is left undefined)
    bool families_overlap = false;

    int index_of(Family tag, const Bitset& members) const {
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].tag == tag && regions[i].members == members) return static_cast<int>(i);
        return -1;
    }

    const Region& region(int i) const { return regions.at(static_cast<std::size_t>(i)); }
    int size() const { return static_cast<int>(regions.size()); }
};

namespace detail {

inline CSpace make_cspace(const FinitePoset& x, Part part, std::vector<Region> regions) {
    CSpace cs;
    cs.ambient = x;
    cs.part = part;
    cs.regions = std::move(regions);
    const int m = static_cast<int>(cs.regions.size());
    std::vector<std::string> labels;
    labels.reserve(cs.regions.size());
    for (const Region& r : cs.regions) labels.push_back(region_label(x, r));
    std::vector<Bitset> below(static_cast<std::size_t>(m), Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i == j || region_leq(cs.regions[static_cast<std::size_t>(i)], cs.regions[static_cast<std::size_t>(j)]))
                below[static_cast<std::size_t>(j)].set(i);
    // from_down_sets verifies the region order is a genuine partial order
    cs.order = FinitePoset::from_down_sets(std::move(labels), std::move(below));
    if (part == Part::C) {
        for (const Region& u : cs.regions) {
            if (u.tag != Family::U) continue;
            for (const Region& f : cs.regions)
                if (f.tag == Family::F && f.members == u.members) cs.families_overlap = true;
        }
    }
    return cs;
}

}  // namespace detail

// U(X): connected components of all nonempty U_A, A ranging over the
// nonempty subsets of the maximal elements; ordered by inclusion.
inline CSpace u_family(const FinitePoset& x) {
    return detail::make_cspace(x, Part::U, detail::family_regions(x, Family::U));
}

// F(X): dual family over minimal elements; ordered by reverse inclusion.
inline CSpace f_family(const FinitePoset& x) {
    return detail::make_cspace(x, Part::F, detail::family_regions(x, Family::F));
}

// C(X): disjoint union of the two families; F-regions sit below the
// U-regions they intersect. Regions equal as sets but differently tagged
// coexist; the overlap is flagged, not rejected.
inline CSpace c_space(const FinitePoset& x) {
    std::vector<Region> regions = detail::family_regions(x, Family::U);
    std::vector<Region> fs = detail::family_regions(x, Family::F);
    regions.insert(regions.end(), std::make_move_iterator(fs.begin()),
                   std::make_move_iterator(fs.end()));
    return detail::make_cspace(x, Part::C, std::move(regions));
}

// Minimum U-region containing a connected nonempty B (dually, maximum
// F-region): the connected component of U_{B-sharp} that contains B.
// Nullopt when no region of the family contains B.
inline std::optional<Region> min_containing(const FinitePoset& x, const Bitset& b, Family side) {
    if (b.empty()) throw PosetError("min_containing requires a nonempty subset");
    if (x.components(b).size() != 1) throw PosetError("min_containing requires a connected subset");
    Bitset idx = side == Family::U ? sharp(x, b) : flat(x, b);
    if (idx.empty()) return std::nullopt;
    Bitset hull = side == Family::U ? min_open_intersection(x, idx) : closure_intersection(x, idx);
    for (Bitset& c : x.components(hull))
        if (b.is_subset_of(c)) return Region{side, std::move(c)};
    throw std::logic_error("min_containing: B escaped its hull");
}

// C_U(x), the minimum U-region containing x; always exists.
inline Region min_region_at(const FinitePoset& x, int e, Family side = Family::U) {
    auto r = min_containing(x, Bitset::single(x.size(), e), side);
    if (!r) throw std::logic_error("every point lies in some region");
    return *r;
}

// The induced map between region spaces: a U-region C goes to the minimum
// U-region containing f(C), an F-region to the maximum F-region containing
// f(C). For part C the source families must not overlap as sets; the map is
// undefined in that degenerate case and this refuses to build it.
inline MonotoneMap induced_map(const MonotoneMap& f, Part part, const CSpace& cx, const CSpace& cy) {
    if (cx.part != part || cy.part != part)
        throw PosetError("induced_map: region spaces do not match the requested part");
    if (!(cx.ambient == f.source()) || !(cy.ambient == f.target()))
        throw PosetError("induced_map: region spaces do not match the map");
    if (part == Part::C && cx.families_overlap)
        throw PosetError("induced map on C is undefined: U(X) and F(X) overlap as sets");
    std::vector<int> asg(cx.regions.size(), -1);
    for (std::size_t i = 0; i < cx.regions.size(); ++i) {
        const Region& r = cx.regions[i];
        auto target = min_containing(cy.ambient, f.image(r.members), r.tag);
        if (!target) throw std::logic_error("induced region image has no containing region");
        int j = cy.index_of(r.tag, target->members);
        if (j < 0) throw std::logic_error("containing region missing from target space");
        asg[i] = j;
    }
    // the MonotoneMap constructor re-checks continuity
    return MonotoneMap(cx.order, cy.order, std::move(asg));
}

// X' = { max C : C in U(X) } when every U-region has a maximum, together
// with the mutually inverse isomorphisms U(X) <-> X' (region to its maximum,
// element z to U_z). X' is then an ubp-retract of X; `ubp_retract_verified`
// records the direct check.
struct XPrimeResult {
    Bitset elements;                  // X' inside the ambient poset
    FinitePoset subspace;             // induced poset on X'
    CSpace u;                         // U(X)
    std::vector<int> region_to_max;   // region index -> ambient element
    std::vector<int> element_to_region;  // subspace index -> region index
    bool ubp_retract_verified = false;
};

inline std::optional<XPrimeResult> x_prime(const FinitePoset& x) {
    XPrimeResult res;
    res.u = u_family(x);
    res.elements = Bitset(x.size());
    res.region_to_max.reserve(res.u.regions.size());
    for (const Region& r : res.u.regions) {
        auto m = x.max_of(r.members);
        if (!m) return std::nullopt;
        res.region_to_max.push_back(*m);
        res.elements.set(*m);
    }
    res.subspace = x.restrict(res.elements);
    std::vector<int> to_parent = res.elements.to_vector();
    res.element_to_region.assign(to_parent.size(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        int idx = res.u.index_of(Family::U, x.down_set(to_parent[i]));
        if (idx < 0) throw std::logic_error("x_prime: U_z is not a region");
        res.element_to_region[i] = idx;
    }
    res.ubp_retract_verified = is_ubp_retract(x, res.elements);
    return res;
}

// Comparison of X with the topology generated by U(X) as a basis: the
// Kolmogorov quotient of that coarser topology embeds into the U(X) poset
// via [x] -> C_U(x).
struct KolmogorovReport {
    CSpace u;
    std::vector<int> point_region;            // x -> index of C_U(x) in u
    std::vector<std::vector<int>> classes;    // partition of X by equal C_U
    std::vector<int> class_region;            // class -> region index
    bool injective = false;                    // distinct classes, distinct regions
    bool order_embedding = false;              // class order iff region containment
    bool basis_preorder_matches = false;       // C_U containment equals the
                                               // specialization preorder of the
                                               // generated topology
    bool onto_all_regions = false;
};

inline KolmogorovReport kolmogorov_comparison(const FinitePoset& x) {
    KolmogorovReport rep;
    rep.u = u_family(x);
    const int n = x.size();
    rep.point_region.assign(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        Region r = min_region_at(x, e);
        rep.point_region[static_cast<std::size_t>(e)] = rep.u.index_of(Family::U, r.members);
    }
    for (int e = 0; e < n; ++e) {
        int ri = rep.point_region[static_cast<std::size_t>(e)];
        int cls = -1;
        for (std::size_t c = 0; c < rep.class_region.size(); ++c)
            if (rep.class_region[c] == ri) cls = static_cast<int>(c);
        if (cls < 0) {
            cls = static_cast<int>(rep.class_region.size());
            rep.class_region.push_back(ri);
            rep.classes.emplace_back();
        }
        rep.classes[static_cast<std::size_t>(cls)].push_back(e);
    }
    // classes carry distinct regions by construction; the check below is the
    // substance: C_U containment must coincide with the specialization
    // preorder of the topology generated by the U(X) basis
    rep.injective = true;
    for (std::size_t a = 0; a < rep.class_region.size(); ++a)
        for (std::size_t b = a + 1; b < rep.class_region.size(); ++b)
            if (rep.class_region[a] == rep.class_region[b]) rep.injective = false;
    rep.basis_preorder_matches = true;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Bitset& ca = rep.u.region(rep.point_region[static_cast<std::size_t>(a)]).members;
            const Bitset& cb = rep.u.region(rep.point_region[static_cast<std::size_t>(b)]).members;
            bool by_region = ca.is_subset_of(cb);
            // a <= b in the generated topology iff every basic open set
            // containing b contains a
            bool by_basis = true;
            for (const Region& r : rep.u.regions)
                if (r.members.test(b) && !r.members.test(a)) by_basis = false;
            if (by_region != by_basis) rep.basis_preorder_matches = false;
        }
    }
    // the quotient order is the basis preorder on classes, so the embedding
    // property is exactly the agreement above
    rep.order_embedding = rep.basis_preorder_matches;
    rep.onto_all_regions = true;
    for (std::size_t ri = 0; ri < rep.u.regions.size(); ++ri) {
        bool hit = false;
        for (int cr : rep.class_region)
            if (cr == static_cast<int>(ri)) hit = true;
        if (!hit) rep.onto_all_regions = false;
    }
    return rep;
}

}  // namespace fintop
