#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fintop/bitset.hpp"

namespace fintop {

struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite poset, which is the same thing as a finite T0-space: the minimal
// open set of x is its down-set and the closure of x is its up-set.
//
// Elements are indexed 0..n-1 in declaration order and carry unique string
// labels. The full order relation is stored as bitset rows (down_set/up_set),
// the Hasse diagram (transitive reduction) is kept as a sorted cover list.
class FinitePoset {
public:
    FinitePoset() = default;

    // Build from a Hasse-style cover list. The stored relation is the
    // reflexive-transitive closure; covers are re-derived as the transitive
    // reduction, so redundant input edges are dropped. Throws on duplicate
    // labels, unknown labels and cycles.
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& covers) {
        std::unordered_map<std::string, int> index;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!index.emplace(labels[i], static_cast<int>(i)).second)
                throw PosetError("duplicate element label: " + labels[i]);
        }
        std::vector<std::pair<int, int>> edges;
        edges.reserve(covers.size());
        for (const auto& [lo, hi] : covers) {
            auto a = index.find(lo);
            auto b = index.find(hi);
            if (a == index.end()) throw PosetError("unknown element in cover: " + lo);
            if (b == index.end()) throw PosetError("unknown element in cover: " + hi);
            edges.emplace_back(a->second, b->second);
        }
        return from_cover_indices(std::move(labels), std::move(edges));
    }

    static FinitePoset from_cover_indices(std::vector<std::string> labels,
                                          std::vector<std::pair<int, int>> edges) {
        const int n = static_cast<int>(labels.size());
        std::vector<std::vector<int>> up(n);
        std::vector<int> indeg(n, 0);
        for (auto& [lo, hi] : edges) {
            if (lo < 0 || lo >= n || hi < 0 || hi >= n)
                throw PosetError("cover index out of range");
            if (lo == hi) throw PosetError("cycle detected: element covers itself");
            up[lo].push_back(hi);
            ++indeg[hi];
        }
        // Kahn's algorithm; incomplete processing means the cover graph has a
        // cycle and the closure would not be antisymmetric.
        std::vector<int> order;
        order.reserve(n);
        std::vector<int> ready;
        for (int i = n - 1; i >= 0; --i)
            if (indeg[i] == 0) ready.push_back(i);
        std::vector<int> deg = indeg;
        while (!ready.empty()) {
            int x = ready.back();
            ready.pop_back();
            order.push_back(x);
            for (int y : up[x])
                if (--deg[y] == 0) ready.push_back(y);
        }
        if (static_cast<int>(order.size()) != n)
            throw PosetError("cycle detected: covers do not describe a partial order");

        std::vector<Bitset> below(n, Bitset(n));
        for (int x : order) {
            below[x].set(x);
            for (int y : up[x]) below[y] |= below[x];
        }
        return from_down_sets(std::move(labels), std::move(below), /*verify=*/false);
    }

    // Build directly from down-set rows; verifies the partial-order axioms.
    static FinitePoset from_down_sets(std::vector<std::string> labels,
                                      std::vector<Bitset> below, bool verify = true) {
        FinitePoset p;
        p.labels_ = std::move(labels);
        p.below_ = std::move(below);
        const int n = p.size();
        if (static_cast<int>(p.below_.size()) != n)
            throw PosetError("down-set row count does not match element count");
        for (std::size_t i = 0; i < p.labels_.size(); ++i) {
            if (!p.index_.emplace(p.labels_[i], static_cast<int>(i)).second)
                throw PosetError("duplicate element label: " + p.labels_[i]);
        }
        if (verify) {
            for (int x = 0; x < n; ++x) {
                if (!p.below_[x].test(x)) throw PosetError("relation is not reflexive");
                for (int y = p.below_[x].first(); y >= 0; y = p.below_[x].next(y)) {
                    if (y != x && p.below_[y].test(x))
                        throw PosetError("relation is not antisymmetric");
                    if (!p.below_[y].is_subset_of(p.below_[x]))
                        throw PosetError("relation is not transitive");
                }
            }
        }
        p.above_.assign(n, Bitset(n));
        for (int x = 0; x < n; ++x)
            for (int y = p.below_[x].first(); y >= 0; y = p.below_[x].next(y))
                p.above_[y].set(x);
        p.derive_covers();
        return p;
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }

    std::optional<int> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int index_of(std::string_view label) const {
        auto i = find(label);
        if (!i) throw PosetError("unknown element: " + std::string(label));
        return *i;
    }

    bool leq(int x, int y) const { return up_set(x).test(y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    // U_x, the minimal open set of x
    const Bitset& down_set(int x) const {
        bounds(x);
        return below_[static_cast<std::size_t>(x)];
    }

    // F_x, the closure of {x}
    const Bitset& up_set(int x) const {
        bounds(x);
        return above_[static_cast<std::size_t>(x)];
    }

    // punctured variants
    Bitset strict_down(int x) const {
        Bitset b = down_set(x);
        b.reset(x);
        return b;
    }
    Bitset strict_up(int x) const {
        Bitset b = up_set(x);
        b.reset(x);
        return b;
    }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    std::vector<std::pair<std::string, std::string>> cover_labels() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(covers_.size());
        for (auto [lo, hi] : covers_) out.emplace_back(label(lo), label(hi));
        return out;
    }

    Bitset maximal() const {
        Bitset b(size());
        for (int x = 0; x < size(); ++x)
            if (strict_up(x).empty()) b.set(x);
        return b;
    }

    Bitset minimal() const {
        Bitset b(size());
        for (int x = 0; x < size(); ++x)
            if (strict_down(x).empty()) b.set(x);
        return b;
    }

    std::optional<int> maximum() const { return max_of(Bitset::full(size())); }
    std::optional<int> minimum() const { return min_of(Bitset::full(size())); }

    // greatest element of s, if s has one
    std::optional<int> max_of(const Bitset& s) const {
        for (int x = s.first(); x >= 0; x = s.next(x))
            if (s.is_subset_of(down_set(x))) return x;
        return std::nullopt;
    }

    std::optional<int> min_of(const Bitset& s) const {
        for (int x = s.first(); x >= 0; x = s.next(x))
            if (s.is_subset_of(up_set(x))) return x;
        return std::nullopt;
    }

    // Connected components of the subspace s: maximal blocks connected under
    // zigzags of comparabilities inside s. Sorted by smallest member.
    std::vector<Bitset> components(const Bitset& s) const {
        if (s.universe() != size()) throw PosetError("components: subset universe mismatch");
        std::vector<Bitset> out;
        Bitset seen(size());
        for (int x = s.first(); x >= 0; x = s.next(x)) {
            if (seen.test(x)) continue;
            Bitset comp(size());
            Bitset frontier = Bitset::single(size(), x);
            while (frontier.any()) {
                comp |= frontier;
                Bitset nxt(size());
                for (int y = frontier.first(); y >= 0; y = frontier.next(y)) {
                    nxt |= down_set(y);
                    nxt |= up_set(y);
                }
                nxt &= s;
                nxt -= comp;
                frontier = nxt;
            }
            seen |= comp;
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool is_connected() const {
        return size() == 0 || components(Bitset::full(size())).size() == 1;
    }

    FinitePoset opposite() const {
        FinitePoset p;
        p.labels_ = labels_;
        p.index_ = index_;
        p.below_ = above_;
        p.above_ = below_;
        p.covers_.reserve(covers_.size());
        for (auto [lo, hi] : covers_) p.covers_.emplace_back(hi, lo);
        std::sort(p.covers_.begin(), p.covers_.end());
        return p;
    }

    // Induced subposet on s; labels are preserved, covers are recomputed
    // within s (subspace covers need not be covers of the ambient space).
    FinitePoset restrict(const Bitset& s) const {
        if (s.universe() != size()) throw PosetError("restrict: subset universe mismatch");
        std::vector<int> keep = s.to_vector();
        std::vector<int> pos(static_cast<std::size_t>(size()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        const int m = static_cast<int>(keep.size());
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        std::vector<Bitset> below(static_cast<std::size_t>(m), Bitset(m));
        for (int i = 0; i < m; ++i) {
            labels.push_back(label(keep[static_cast<std::size_t>(i)]));
            const Bitset& row = down_set(keep[static_cast<std::size_t>(i)]);
            for (int y = row.first(); y >= 0; y = row.next(y))
                if (s.test(y)) below[static_cast<std::size_t>(i)].set(pos[static_cast<std::size_t>(y)]);
        }
        return from_down_sets(std::move(labels), std::move(below), /*verify=*/false);
    }

    // height of x = longest chain below it (minimal elements have height 0)
    std::vector<int> heights() const {
        std::vector<int> h(static_cast<std::size_t>(size()), 0);
        for (int x : topological_order())
            for (auto [lo, hi] : covers_)
                if (lo == x) h[static_cast<std::size_t>(hi)] = std::max(h[static_cast<std::size_t>(hi)], h[static_cast<std::size_t>(x)] + 1);
        return h;
    }

    // A linear extension: every element is preceded by its whole down-set.
    // Deterministic (smallest available index first).
    std::vector<int> topological_order() const {
        const int n = size();
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n));
        Bitset placed(n);
        for (int step = 0; step < n; ++step) {
            for (int x = 0; x < n; ++x) {
                if (placed.test(x)) continue;
                if (strict_down(x).is_subset_of(placed)) {
                    order.push_back(x);
                    placed.set(x);
                    break;
                }
            }
        }
        return order;
    }

    bool operator==(const FinitePoset& o) const {
        return labels_ == o.labels_ && below_ == o.below_;
    }

private:
    void bounds(int x) const {
        if (x < 0 || x >= size()) throw PosetError("unknown element index");
    }

    void derive_covers() {
        covers_.clear();
        const int n = size();
        for (int y = 0; y < n; ++y) {
            Bitset lower = strict_down(y);
            for (int x = lower.first(); x >= 0; x = lower.next(x)) {
                // x is covered by y iff nothing lies strictly between
                if (!strict_up(x).intersects(lower)) covers_.emplace_back(x, y);
            }
        }
        std::sort(covers_.begin(), covers_.end());
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bitset> below_;  // below_[x] = U_x
    std::vector<Bitset> above_;  // above_[x] = F_x
    std::vector<std::pair<int, int>> covers_;
};

// An order-preserving (equivalently, continuous) map between finite posets.
// Source and target are held by value; posets are small immutable values here.
class MonotoneMap {
public:
    MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> assignment)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
        if (static_cast<int>(map_.size()) != source_.size())
            throw PosetError("map assignment size does not match source");
        for (int v : map_)
            if (v < 0 || v >= target_.size()) throw PosetError("map image out of range");
        for (auto [lo, hi] : source_.covers())
            if (!target_.leq(map_[static_cast<std::size_t>(lo)], map_[static_cast<std::size_t>(hi)]))
                throw PosetError("assignment is not order-preserving");
    }

    static MonotoneMap identity(const FinitePoset& p) {
        std::vector<int> id(static_cast<std::size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) id[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(p, p, std::move(id));
    }

    static MonotoneMap constant(const FinitePoset& source, const FinitePoset& target, int value) {
        return MonotoneMap(source, target,
                           std::vector<int>(static_cast<std::size_t>(source.size()), value));
    }

    const FinitePoset& source() const { return source_; }
    const FinitePoset& target() const { return target_; }
    const std::vector<int>& assignment() const { return map_; }

    int operator()(int x) const { return map_.at(static_cast<std::size_t>(x)); }

    Bitset image(const Bitset& s) const {
        Bitset out(target_.size());
        for (int x = s.first(); x >= 0; x = s.next(x)) out.set(map_[static_cast<std::size_t>(x)]);
        return out;
    }

    bool is_self_map() const { return source_ == target_; }

    std::vector<int> fixed_points() const {
        std::vector<int> out;
        for (int x = 0; x < source_.size(); ++x)
            if (map_[static_cast<std::size_t>(x)] == x) out.push_back(x);
        return out;
    }

    bool has_fixed_point() const { return !fixed_points().empty(); }

    // pointwise order on maps with equal source and target
    bool leq(const MonotoneMap& o) const {
        if (!(source_ == o.source_) || !(target_ == o.target_))
            throw PosetError("map comparison requires equal source and target");
        for (int x = 0; x < source_.size(); ++x)
            if (!target_.leq(map_[static_cast<std::size_t>(x)], o.map_[static_cast<std::size_t>(x)])) return false;
        return true;
    }

    bool operator==(const MonotoneMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && map_ == o.map_;
    }

    // f after g
    friend MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
        if (!(g.target_ == f.source_)) throw PosetError("compose: maps are not composable");
        std::vector<int> m(g.map_.size());
        for (std::size_t i = 0; i < g.map_.size(); ++i)
            m[i] = f.map_[static_cast<std::size_t>(g.map_[i])];
        return MonotoneMap(g.source_, f.target_, std::move(m));
    }

private:
    FinitePoset source_;
    FinitePoset target_;
    std::vector<int> map_;
};

}  // namespace fintop
