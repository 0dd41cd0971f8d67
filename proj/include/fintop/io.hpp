#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fintop/cspace.hpp"
#include "fintop/poset.hpp"

namespace fintop {

struct ParseError : PosetError {
    using PosetError::PosetError;
};

// On-disk description of a poset. Text format, line oriented:
//
//   # optional comments; "# key: value" lines are kept as metadata
//   elements <label> <label> ...
//   <label> < <label>
//   ...
//
// Labels are whitespace-free tokens without '<'. Output is UTF-8 with LF
// line endings and round-trips exactly. A JSON mirror with fields name,
// elements, covers carries the same data.
struct PosetDocument {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<std::pair<std::string, std::string>> metadata;

    FinitePoset to_poset() const { return FinitePoset::from_covers(elements, covers); }

    static PosetDocument from_poset(const FinitePoset& p, std::string name = {}) {
        PosetDocument doc;
        doc.name = std::move(name);
        doc.elements = p.labels();
        doc.covers = p.cover_labels();
        return doc;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline void check_label(const std::string& l, int line) {
    if (l.empty() || l.find('<') != std::string::npos)
        throw ParseError("line " + std::to_string(line) + ": invalid label '" + l + "'");
}

}  // namespace detail

inline PosetDocument parse_poset(std::string_view text) {
    PosetDocument doc;
    bool have_elements = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
        if (trimmed.empty()) continue;
        if (trimmed.front() == '#') {
            trimmed.remove_prefix(1);
            auto colon = trimmed.find(':');
            if (colon != std::string_view::npos) {
                auto key = trimmed.substr(0, colon);
                auto value = trimmed.substr(colon + 1);
                auto strip = [](std::string_view v) {
                    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
                    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
                    return std::string(v);
                };
                std::string k = strip(key), v = strip(value);
                if (!k.empty() && k.find(' ') == std::string::npos) {
                    if (k == "name")
                        doc.name = v;
                    else
                        doc.metadata.emplace_back(k, v);
                }
            }
            continue;
        }
        auto tokens = detail::split_ws(trimmed);
        if (!have_elements) {
            if (tokens.empty() || tokens[0] != "elements")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'elements <label>...' before covers");
            if (tokens.size() < 2)
                throw ParseError("line " + std::to_string(line_no) + ": no elements listed");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                detail::check_label(tokens[i], line_no);
                doc.elements.push_back(tokens[i]);
            }
            have_elements = true;
            continue;
        }
        if (tokens.size() != 3 || tokens[1] != "<")
            throw ParseError("line " + std::to_string(line_no) + ": expected '<label> < <label>'");
        detail::check_label(tokens[0], line_no);
        detail::check_label(tokens[2], line_no);
        std::pair<std::string, std::string> cover{tokens[0], tokens[2]};
        if (std::find(doc.covers.begin(), doc.covers.end(), cover) == doc.covers.end())
            doc.covers.push_back(std::move(cover));
    }
    if (!have_elements) throw ParseError("line " + std::to_string(line_no) + ": missing 'elements' line");
    return doc;
}

inline std::string serialize_poset(const PosetDocument& doc) {
    std::string out;
    if (!doc.name.empty()) out += "# name: " + doc.name + "\n";
    for (const auto& [k, v] : doc.metadata) out += "# " + k + ": " + v + "\n";
    out += "elements";
    for (const auto& e : doc.elements) out += " " + e;
    out += "\n";
    for (const auto& [lo, hi] : doc.covers) out += lo + " < " + hi + "\n";
    return out;
}

inline PosetDocument parse_poset_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    PosetDocument doc;
    try {
        doc.name = j.value("name", std::string{});
        doc.elements = j.at("elements").get<std::vector<std::string>>();
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw ParseError("covers must be [lower, upper] pairs");
            doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
        if (j.contains("metadata"))
            for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
                doc.metadata.emplace_back(it.key(), it.value().get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid poset document: ") + e.what());
    }
    return doc;
}

inline std::string serialize_poset_json(const PosetDocument& doc) {
    nlohmann::json j;
    j["name"] = doc.name;
    j["elements"] = doc.elements;
    auto covers = nlohmann::json::array();
    for (const auto& [lo, hi] : doc.covers) covers.push_back({lo, hi});
    j["covers"] = covers;
    if (!doc.metadata.empty()) {
        auto m = nlohmann::json::object();
        for (const auto& [k, v] : doc.metadata) m[k] = v;
        j["metadata"] = m;
    }
    return j.dump(2) + "\n";
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

// Hasse diagram in DOT syntax: one node per element, one edge per cover
// (drawn upward), nodes grouped into ranks by height. Byte-deterministic.
inline std::string emit_dot(const FinitePoset& p, const std::string& graph_name = "poset") {
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    std::vector<int> h = p.heights();
    int max_h = 0;
    for (int v : h) max_h = std::max(max_h, v);
    for (int level = 0; level <= max_h; ++level) {
        bool any = false;
        for (int e = 0; e < p.size(); ++e)
            if (h[static_cast<std::size_t>(e)] == level) any = true;
        if (!any) continue;
        out << "  { rank=same;";
        for (int e = 0; e < p.size(); ++e)
            if (h[static_cast<std::size_t>(e)] == level) out << " " << detail::dot_quote(p.label(e)) << ";";
        out << " }\n";
    }
    for (auto [lo, hi] : p.covers())
        out << "  " << detail::dot_quote(p.label(lo)) << " -> " << detail::dot_quote(p.label(hi))
            << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string emit_dot(const CSpace& cs, const std::string& graph_name = "regions") {
    return emit_dot(cs.order, graph_name);
}

}  // namespace fintop
