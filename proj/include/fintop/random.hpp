#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

namespace detail {
// uniform double in [0,1) from the top 53 bits of the generator output;
// avoids std::uniform_real_distribution so that a seed yields the same poset
// on every standard library
inline double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

// Random poset sampler. Procedure, fixed for reproducibility:
//   1. seed a std::mt19937_64 with `seed`;
//   2. for each pair i < j in the linear order 0..n-1 (outer loop i, inner
//      loop j) draw u in [0,1) from the top 53 generator bits and add the
//      edge i < j iff u < density;
//   3. take the reflexive-transitive closure (always a partial order);
//   4. if connected_only, restrict to the largest connected component
//      (ties broken by smallest member).
// Labels are the decimal indices. density=0 gives an antichain, density=1 a
// chain. Seeds are stable within this implementation; equality across other
// implementations of the same sampler is not guaranteed.
inline FinitePoset random_poset(int n, double density, std::uint64_t seed,
                                bool connected_only = false) {
    if (n < 1) throw PosetError("random_poset: n must be at least 1");
    if (density < 0.0 || density > 1.0) throw PosetError("random_poset: density must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (detail::unit_interval(rng) < density) edges.emplace_back(i, j);
    FinitePoset p = FinitePoset::from_cover_indices(std::move(labels), std::move(edges));
    if (connected_only) {
        auto comps = p.components(Bitset::full(p.size()));
        const Bitset* best = &comps.front();
        for (const auto& c : comps)
            if (c.count() > best->count()) best = &c;
        if (best->count() != p.size()) p = p.restrict(*best);
    }
    return p;
}

// Random monotone map X -> Y: walk a linear extension of X, try the images
// that keep the partial assignment monotone in random order, and backtrack
// out of dead ends (a greedy choice can strand a later element whose lower
// covers were sent to points with no common upper bound). Constant maps are
// always available, so the search always completes.
inline MonotoneMap random_monotone_map(const FinitePoset& x, const FinitePoset& y,
                                       std::mt19937_64& rng) {
    const int n = x.size();
    std::vector<int> order = x.topological_order();
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(n));
    for (auto [lo, hi] : x.covers()) lower[static_cast<std::size_t>(hi)].push_back(lo);
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int e = order[static_cast<std::size_t>(pos)];
        Bitset cand = Bitset::full(y.size());
        for (int q : lower[static_cast<std::size_t>(e)]) cand &= y.up_set(f[static_cast<std::size_t>(q)]);
        auto v = cand.to_vector();
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
        for (int c : v) {
            f[static_cast<std::size_t>(e)] = c;
            if (self(self, pos + 1)) return true;
        }
        f[static_cast<std::size_t>(e)] = -1;
        return false;
    };
    if (!rec(rec, 0)) throw std::logic_error("random_monotone_map: search failed");
    return MonotoneMap(x, y, std::move(f));
}

// Random monotone map f with f <= g pointwise (g itself is always a valid
// choice at every step, so candidates are never empty).
inline MonotoneMap random_monotone_map_below(const MonotoneMap& g, std::mt19937_64& rng) {
    const FinitePoset& x = g.source();
    const FinitePoset& y = g.target();
    const int n = x.size();
    std::vector<int> order = x.topological_order();
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(n));
    for (auto [lo, hi] : x.covers()) lower[static_cast<std::size_t>(hi)].push_back(lo);
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    for (int e : order) {
        Bitset cand = y.down_set(g(e));
        for (int q : lower[static_cast<std::size_t>(e)]) cand &= y.up_set(f[static_cast<std::size_t>(q)]);
        auto v = cand.to_vector();
        f[static_cast<std::size_t>(e)] = v[static_cast<std::size_t>(rng() % v.size())];
    }
    return MonotoneMap(x, y, std::move(f));
}

}  // namespace fintop
