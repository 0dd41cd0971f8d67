#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

namespace detail {

using CoverList = std::vector<std::pair<std::string, std::string>>;

inline std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
    return v;
}

}  // namespace detail

// The height-one cyclic space on n+n points: bottoms 1..n, tops n+1..2n,
// top n+i above bottoms i and i+1 (cyclically). The minimal finite model of
// the circle; it lacks the fixed point property for every n >= 2.
inline FinitePoset make_crown(int n) {
    if (n < 2) throw PosetError("crown requires n >= 2");
    detail::CoverList covers;
    for (int i = 1; i <= n; ++i) {
        covers.emplace_back(std::to_string(i), std::to_string(n + i));
        covers.emplace_back(std::to_string(i % n + 1), std::to_string(n + i));
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 2 * n; ++i) labels.push_back(std::to_string(i));
    return FinitePoset::from_covers(std::move(labels), covers);
}

// The 2n+3 point family on {a1,a2,a3} over {b1..bn} over {c1..cn}: bj sits
// above c(j-1) and c(j+1) (b1 and bn close the fence at the ends), a1 covers
// b1..b(n-1), a2 covers every bj except b(n-1), a3 covers bk..bn. Defined
// for n >= 4 and 2 <= k <= n-1; has the fixed point property throughout the
// range even though the b/c part alone is a crown.
inline FinitePoset make_xnk(int n, int k) {
    if (n < 4 || k < 2 || k > n - 1) throw PosetError("Xnk requires n >= 4 and 2 <= k <= n-1");
    std::vector<std::string> labels;
    for (int i = 1; i <= 3; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));
    for (int j = 1; j <= n; ++j) labels.push_back("c" + std::to_string(j));
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto b = [](int j) { return "b" + std::to_string(j); };
    auto c = [](int j) { return "c" + std::to_string(j); };
    detail::CoverList covers;
    for (int j = 1; j <= n - 1; ++j) covers.emplace_back(b(j), a(1));
    for (int j = 1; j <= n; ++j)
        if (j != n - 1) covers.emplace_back(b(j), a(2));
    for (int j = k; j <= n; ++j) covers.emplace_back(b(j), a(3));
    covers.emplace_back(c(1), b(1));
    covers.emplace_back(c(2), b(1));
    for (int j = 2; j <= n - 1; ++j) {
        covers.emplace_back(c(j - 1), b(j));
        covers.emplace_back(c(j + 1), b(j));
    }
    covers.emplace_back(c(n - 1), b(n));
    covers.emplace_back(c(n), b(n));
    return FinitePoset::from_covers(std::move(labels), covers);
}

struct CatalogEntry {
    std::string id;
    std::string params;  // human hint, empty if none
    std::string summary;
};

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"ex-easy", "", "5 points, two minimal below three maximal; the running example"},
        {"ex-nonfunctorial", "", "5 points witnessing that the induced-map assignment is not functorial"},
        {"ex-2", "", "6 points with a fixed-point-free swap whose induced maps still have fixed regions"},
        {"ex-fig3", "", "5 points; removing its maximal down beat point breaks the induced-retraction formula"},
        {"ex-fig4", "", "5 points; removing its down beat point changes the U-space"},
        {"lemma-A", "", "9 points in three ranks; fixed-point-free self-maps permute the middle rank"},
        {"lemma-B", "", "9 points in three ranks, denser bottom; same middle-rank rigidity"},
        {"P3323", "", "11 points with the fixed point property (ranks 3/3/2/3)"},
        {"P343_1", "", "11 points with the fixed point property (ranks 3/4/3, first wiring)"},
        {"P343_2", "", "11 points with the fixed point property (ranks 3/4/3, second wiring)"},
        {"crown", "n", "2n-crown, the height-one cycle on n+n points (n >= 2)"},
        {"Xnk", "n k", "2n+3 point family with the fixed point property (n >= 4, 2 <= k <= n-1)"},
    };
    return entries;
}

// Build a catalog space by id. `params` feeds the parametric entries.
inline FinitePoset generate(const std::string& id, const std::vector<int>& params = {}) {
    auto fixed = [&](int n, detail::CoverList covers) {
        if (!params.empty()) throw PosetError("generator '" + id + "' takes no parameters");
        return FinitePoset::from_covers(detail::numeric_labels(n), covers);
    };
    if (id == "ex-easy")
        return fixed(5, {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"1", "3"}, {"1", "4"}});
    if (id == "ex-nonfunctorial")
        return fixed(5, {{"0", "1"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
    if (id == "ex-2")
        return fixed(6, {{"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"},
                         {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
    if (id == "ex-fig3")
        return fixed(5, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}, {"2", "4"}});
    if (id == "ex-fig4")
        return fixed(5, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"1", "4"}});
    if (id == "lemma-A")
        return fixed(9, {{"0", "3"}, {"0", "4"}, {"1", "3"}, {"1", "5"}, {"2", "4"}, {"2", "5"},
                         {"3", "6"}, {"3", "7"}, {"4", "6"}, {"4", "8"}, {"5", "7"}, {"5", "8"}});
    if (id == "lemma-B")
        return fixed(9, {{"0", "3"}, {"0", "4"}, {"0", "5"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                         {"2", "3"}, {"2", "5"},
                         {"3", "6"}, {"3", "7"}, {"4", "6"}, {"4", "8"}, {"5", "7"}, {"5", "8"}});
    if (id == "P3323")
        return fixed(11, {{"0", "3"}, {"0", "4"}, {"1", "3"}, {"1", "5"}, {"2", "4"}, {"2", "5"},
                          {"3", "8"}, {"3", "10"}, {"4", "6"}, {"4", "7"}, {"5", "6"}, {"5", "7"},
                          {"6", "8"}, {"6", "9"}, {"7", "9"}, {"7", "10"}});
    if (id == "P343_1")
        return fixed(11, {{"0", "3"}, {"0", "4"}, {"0", "5"},
                          {"1", "3"}, {"1", "4"}, {"1", "6"}, {"1", "7"},
                          {"2", "5"}, {"2", "6"}, {"2", "7"},
                          {"3", "8"}, {"4", "8"}, {"6", "8"}, {"7", "8"},
                          {"3", "9"}, {"5", "9"}, {"7", "9"},
                          {"4", "10"}, {"5", "10"}, {"6", "10"}});
    if (id == "P343_2")
        return fixed(11, {{"0", "3"}, {"0", "4"}, {"0", "5"},
                          {"1", "3"}, {"1", "4"}, {"1", "6"}, {"1", "7"},
                          {"2", "5"}, {"2", "6"}, {"2", "7"},
                          {"3", "8"}, {"4", "8"}, {"6", "8"},
                          {"3", "9"}, {"5", "9"}, {"6", "9"}, {"7", "9"},
                          {"4", "10"}, {"5", "10"}, {"7", "10"}});
    if (id == "crown") {
        if (params.size() != 1) throw PosetError("crown takes one parameter: n");
        return make_crown(params[0]);
    }
    if (id == "Xnk") {
        if (params.size() != 2) throw PosetError("Xnk takes two parameters: n k");
        return make_xnk(params[0], params[1]);
    }
    throw PosetError("unknown catalog id: " + id);
}

}  // namespace fintop
