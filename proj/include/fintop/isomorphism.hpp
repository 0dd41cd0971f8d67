#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    return h ^ (h >> 33);
}

// Iterated degree/level refinement (Weisfeiler-Leman style on the Hasse
// diagram). Equal colors are necessary for two elements to correspond under
// an isomorphism; they partition the search space before backtracking.
inline std::vector<std::uint64_t> invariant_colors(const FinitePoset& p) {
    const int n = p.size();
    std::vector<int> h = p.heights();
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
    for (auto [lo, hi] : p.covers()) {
        up[static_cast<std::size_t>(lo)].push_back(hi);
        down[static_cast<std::size_t>(hi)].push_back(lo);
    }
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::uint64_t c = 0x5bd1e995;
        c = mix(c, static_cast<std::uint64_t>(p.down_set(x).count()));
        c = mix(c, static_cast<std::uint64_t>(p.up_set(x).count()));
        c = mix(c, static_cast<std::uint64_t>(up[static_cast<std::size_t>(x)].size()));
        c = mix(c, static_cast<std::uint64_t>(down[static_cast<std::size_t>(x)].size()));
        c = mix(c, static_cast<std::uint64_t>(h[static_cast<std::size_t>(x)]));
        color[static_cast<std::size_t>(x)] = c;
    }
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            std::vector<std::uint64_t> ups, downs;
            for (int y : up[static_cast<std::size_t>(x)]) ups.push_back(color[static_cast<std::size_t>(y)]);
            for (int y : down[static_cast<std::size_t>(x)]) downs.push_back(color[static_cast<std::size_t>(y)]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            std::uint64_t c = mix(color[static_cast<std::size_t>(x)], 0xc0ffee);
            for (auto v : ups) c = mix(c, v);
            c = mix(c, 0xdead);
            for (auto v : downs) c = mix(c, v);
            next[static_cast<std::size_t>(x)] = c;
        }
        color = std::move(next);
    }
    return color;
}

}  // namespace detail

// Order-isomorphism search. Returns a bijection (as a vector indexed by
// elements of x, valued in elements of y) that preserves and reflects the
// order, or nullopt. Deterministic for a given element ordering: elements are
// assigned most-constrained first, candidates tried in index order.
inline std::optional<std::vector<int>> find_isomorphism(const FinitePoset& x, const FinitePoset& y) {
    const int n = x.size();
    if (n != y.size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto cx = detail::invariant_colors(x);
    auto cy = detail::invariant_colors(y);
    {
        auto sx = cx, sy = cy;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }

    std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cx[static_cast<std::size_t>(a)] == cy[static_cast<std::size_t>(b)]) cands[static_cast<std::size_t>(a)].push_back(b);

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cands[static_cast<std::size_t>(a)].size() < cands[static_cast<std::size_t>(b)].size();
    });

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    Bitset used(n);

    auto consistent = [&](int a, int b, int depth) {
        for (int d = 0; d < depth; ++d) {
            int a2 = order[static_cast<std::size_t>(d)];
            int b2 = map[static_cast<std::size_t>(a2)];
            if (x.leq(a, a2) != y.leq(b, b2)) return false;
            if (x.leq(a2, a) != y.leq(b2, b)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int a = order[static_cast<std::size_t>(depth)];
        for (int b : cands[static_cast<std::size_t>(a)]) {
            if (used.test(b) || !consistent(a, b, depth)) continue;
            map[static_cast<std::size_t>(a)] = b;
            used.set(b);
            if (self(self, depth + 1)) return true;
            used.reset(b);
            map[static_cast<std::size_t>(a)] = -1;
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

inline bool isomorphic(const FinitePoset& x, const FinitePoset& y) {
    return find_isomorphism(x, y).has_value();
}

}  // namespace fintop
