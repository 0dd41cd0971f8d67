#pragma once

#include <optional>
#include <vector>

#include "fintop/isomorphism.hpp"
#include "fintop/poset.hpp"

namespace fintop {

enum class BeatKind { down, up };

// x is a down beat point when its punctured down-set has a maximum, an up
// beat point when its punctured up-set has a minimum; the extremum is the
// witness. Removing a beat point is a strong deformation retraction.
struct BeatPoint {
    int element;
    BeatKind kind;
    int witness;
};

inline std::vector<BeatPoint> find_beat_points(const FinitePoset& x) {
    std::vector<BeatPoint> out;
    for (int e = 0; e < x.size(); ++e) {
        Bitset d = x.strict_down(e);
        if (d.any())
            if (auto m = x.max_of(d)) out.push_back({e, BeatKind::down, *m});
        Bitset u = x.strict_up(e);
        if (u.any())
            if (auto m = x.min_of(u)) out.push_back({e, BeatKind::up, *m});
    }
    return out;
}

// Smallest-index beat point, preferring the down kind on a tie.
inline std::optional<BeatPoint> first_beat_point(const FinitePoset& x) {
    for (int e = 0; e < x.size(); ++e) {
        Bitset d = x.strict_down(e);
        if (d.any())
            if (auto m = x.max_of(d)) return BeatPoint{e, BeatKind::down, *m};
        Bitset u = x.strict_up(e);
        if (u.any())
            if (auto m = x.min_of(u)) return BeatPoint{e, BeatKind::up, *m};
    }
    return std::nullopt;
}

// Remove beat points one at a time until none remain. The removal order is
// fixed (lowest index first, down before up) so the output is reproducible;
// cores are unique up to isomorphism, so the choice does not affect the
// homotopy-level answers built on top of this.
inline FinitePoset core(FinitePoset x) {
    while (auto bp = first_beat_point(x)) {
        Bitset keep = Bitset::full(x.size());
        keep.reset(bp->element);
        x = x.restrict(keep);
    }
    return x;
}

inline bool is_contractible(const FinitePoset& x) { return core(x).size() == 1; }

// Decided on cores: X and Y are homotopy equivalent iff their cores are
// isomorphic (uniqueness of the core is a standard fact of finite-space
// theory, imported here without reproof).
inline bool homotopy_equivalent(const FinitePoset& x, const FinitePoset& y) {
    return isomorphic(core(x), core(y));
}

// A subspace reachable by removing down (resp. up) beat points one at a
// time, together with its comparison retraction.
struct Retract {
    FinitePoset subspace;          // induced poset on A, ambient labels kept
    std::vector<int> to_parent;    // subspace index -> ambient index
    MonotoneMap retraction;        // ambient -> subspace
    MonotoneMap inclusion;         // subspace -> ambient
};

namespace detail {

inline std::optional<Retract> bp_retraction(const FinitePoset& x, const Bitset& a, bool down) {
    if (a.universe() != x.size()) throw PosetError("retract: subset universe mismatch");
    if (a.empty()) throw PosetError("retract: subspace must be nonempty");
    // A is a dbp-retract iff max(U_z cap A) exists for every z, and the
    // retraction is forced: r(z) = max(U_z cap A). Dually for ubp.
    std::vector<int> r_parent(static_cast<std::size_t>(x.size()), -1);
    for (int z = 0; z < x.size(); ++z) {
        Bitset s = (down ? x.down_set(z) : x.up_set(z)) & a;
        auto m = down ? x.max_of(s) : x.min_of(s);
        if (!m) return std::nullopt;
        r_parent[static_cast<std::size_t>(z)] = *m;
    }
    FinitePoset sub = x.restrict(a);
    std::vector<int> to_parent = a.to_vector();
    std::vector<int> pos(static_cast<std::size_t>(x.size()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) pos[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);
    std::vector<int> r(static_cast<std::size_t>(x.size()));
    for (int z = 0; z < x.size(); ++z) r[static_cast<std::size_t>(z)] = pos[static_cast<std::size_t>(r_parent[static_cast<std::size_t>(z)])];
    std::vector<int> inc = to_parent;
    return Retract{sub, std::move(to_parent), MonotoneMap(x, sub, std::move(r)),
                   MonotoneMap(sub, x, std::move(inc))};
}

}  // namespace detail

// Retraction onto a dbp-retract, or nullopt when A is not one. The returned
// maps satisfy r . inc = id_A and inc . r <= id_X pointwise.
inline std::optional<Retract> dbp_retraction(const FinitePoset& x, const Bitset& a) {
    return detail::bp_retraction(x, a, /*down=*/true);
}

// Dual: r . inc = id_A and inc . r >= id_X pointwise.
inline std::optional<Retract> ubp_retraction(const FinitePoset& x, const Bitset& a) {
    return detail::bp_retraction(x, a, /*down=*/false);
}

inline bool is_dbp_retract(const FinitePoset& x, const Bitset& a) {
    return dbp_retraction(x, a).has_value();
}

inline bool is_ubp_retract(const FinitePoset& x, const Bitset& a) {
    return ubp_retraction(x, a).has_value();
}

}  // namespace fintop
