#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#include <bit>
#endif

namespace fintop {

// Fixed-universe bitset. Every subset handled by the library is a Bitset
// over the element indices 0..n-1 of some ambient poset; set operations on
// whole rows are single word-wise passes.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset single(int universe, int i) {
        Bitset b(universe);
        b.set(i);
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    static Bitset of(int universe, const std::vector<int>& bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check(i);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    // set difference
    Bitset& operator-=(const Bitset& o) {
        same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const = default;

    bool is_subset_of(const Bitset& o) const {
        same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // smallest member, or -1
    int first() const { return next(-1); }

    // smallest member > i, or -1
    int next(int i) const {
        for (int j = i + 1; j < n_;) {
            std::uint64_t w = w_[static_cast<std::size_t>(j) >> 6] >> (j & 63);
            if (w) return j + std::countr_zero(w);
            j = (j | 63) + 1;
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = first(); i >= 0; i = next(i)) fn(i);
    }

    // lexicographic on the index sequence; total order used for canonical sorting
    bool lex_less(const Bitset& o) const {
        same(o);
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Bitset: index out of range");
    }
    void same(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset: universe mismatch");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace fintop
