#ifndef FLAGTUTTE_IO_HPP
#define FLAGTUTTE_IO_HPP

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "flag_matroid.hpp"
#include "matroid.hpp"
#include "rational.hpp"
#include "subset.hpp"

namespace flagtutte {

/// A parsed input document: always a flag, a bare matroid being a one-step flag.
struct ParsedInput {
    FlagMatroid flag;
    bool is_flag = false;
    /// Optional "diagram" field of a flag document ("flag" or "lv").
    std::string diagram = "flag";
    std::string hash;
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorCode::ParseError, where + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline int int_field(const nlohmann::json& j, const char* key, const std::string& where) {
    const auto& v = field(j, key, where);
    if (!v.is_number_integer()) fail(ErrorCode::ParseError, where + "." + key + ": expected an integer");
    return v.get<int>();
}

inline Subset parse_subset(const nlohmann::json& j, int n, const std::string& where) {
    if (!j.is_array()) fail(ErrorCode::ParseError, where + ": expected an array of elements");
    Subset s = 0;
    for (const auto& e : j) {
        if (!e.is_number_integer()) fail(ErrorCode::ParseError, where + ": elements must be integers");
        const int x = e.get<int>();
        if (x < 1 || x > n)
            fail(ErrorCode::InvalidInput, where + ": element " + std::to_string(x) + " outside 1.." + std::to_string(n));
        if (contains(s, x)) fail(ErrorCode::InvalidInput, where + ": repeated element " + std::to_string(x));
        s |= element(x);
    }
    return s;
}

inline Rational parse_entry(const nlohmann::json& e, const std::string& where) {
    if (e.is_string()) {
        try {
            return parse_rational(e.get<std::string>());
        } catch (const Error& err) {
            fail(ErrorCode::ParseError, where + ": " + err.what());
        }
    }
    if (e.is_number_integer()) return Rational(e.get<long>());
    fail(ErrorCode::ParseError, where + ": matrix entries must be strings \"p/q\" or integers");
}

}  // namespace detail

inline Matroid matroid_from_json(const nlohmann::json& j, const std::string& where = "$") {
    const std::string type = detail::field(j, "type", where).is_string() ? j.at("type").get<std::string>() : "";
    if (type == "uniform") {
        return uniform(detail::int_field(j, "r", where), detail::int_field(j, "n", where));
    }
    if (type == "bases") {
        const int n = detail::int_field(j, "n", where);
        if (n < 1 || n > kMaxGroundSet) fail(ErrorCode::GroundSetTooLarge, where + ".n: must be in 1..64");
        const auto& list = detail::field(j, "bases", where);
        if (!list.is_array()) fail(ErrorCode::ParseError, where + ".bases: expected an array");
        if (list.empty()) fail(ErrorCode::EmptyBases, where + ".bases: empty basis family");
        std::vector<Subset> bases;
        for (std::size_t i = 0; i < list.size(); ++i)
            bases.push_back(detail::parse_subset(list[i], n, where + ".bases[" + std::to_string(i) + "]"));
        const int r = card(bases.front());
        return Matroid::from_bases(n, r, std::move(bases));
    }
    if (type == "matrix") {
        const auto& rows = detail::field(j, "rows", where);
        if (!rows.is_array()) fail(ErrorCode::ParseError, where + ".rows: expected an array");
        RationalMatrix m;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string at = where + ".rows[" + std::to_string(i) + "]";
            if (!rows[i].is_array()) fail(ErrorCode::ParseError, at + ": expected an array");
            std::vector<Rational> row;
            for (std::size_t k = 0; k < rows[i].size(); ++k)
                row.push_back(detail::parse_entry(rows[i][k], at + "[" + std::to_string(k) + "]"));
            if (!m.empty() && row.size() != m.front().size())
                fail(ErrorCode::ParseError, at + ": ragged matrix");
            m.push_back(std::move(row));
        }
        return from_matrix(m);
    }
    if (type == "graphic") {
        const int v = detail::int_field(j, "vertices", where);
        const auto& list = detail::field(j, "edges", where);
        if (!list.is_array()) fail(ErrorCode::ParseError, where + ".edges: expected an array");
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& e = list[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                fail(ErrorCode::ParseError, where + ".edges[" + std::to_string(i) + "]: expected [a, b]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return graphic(v, edges);
    }
    fail(ErrorCode::ParseError, where + ".type: expected uniform, bases, matrix or graphic");
}

inline ParsedInput input_from_json(const nlohmann::json& j) {
    ParsedInput out;
    out.hash = [&] {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(j.dump()));
        return std::string(buf);
    }();
    if (j.is_object() && j.contains("type") && j.at("type") == "flag") {
        const auto& cs = detail::field(j, "constituents", "$");
        if (!cs.is_array() || cs.empty()) fail(ErrorCode::ParseError, "$.constituents: expected a nonempty array");
        std::vector<Matroid> ms;
        for (std::size_t i = 0; i < cs.size(); ++i)
            ms.push_back(matroid_from_json(cs[i], "$.constituents[" + std::to_string(i) + "]"));
        out.flag = flag(std::move(ms));
        out.is_flag = true;
        if (j.contains("diagram")) {
            if (!j.at("diagram").is_string()) fail(ErrorCode::ParseError, "$.diagram: expected a string");
            out.diagram = j.at("diagram").get<std::string>();
            if (out.diagram != "flag" && out.diagram != "lv")
                fail(ErrorCode::ParseError, "$.diagram: expected \"flag\" or \"lv\"");
        }
        return out;
    }
    out.flag = flag({matroid_from_json(j)});
    return out;
}

/// Parses a JSON document given inline or as a file path.
inline ParsedInput parse_input(const std::string& text_or_path) {
    std::string text = text_or_path;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::ifstream in(text_or_path);
        if (!in) fail(ErrorCode::ParseError, "cannot open input file " + text_or_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::ParseError, "JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return input_from_json(j);
}

inline nlohmann::json to_json(const Matroid& m) {
    nlohmann::json bases = nlohmann::json::array();
    for (Subset b : m.bases()) bases.push_back(elements(b));
    return {{"type", "bases"}, {"n", m.size()}, {"bases", bases}};
}

inline nlohmann::json to_json(const FlagMatroid& fm) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& m : fm.constituents()) cs.push_back(to_json(m));
    return {{"type", "flag"}, {"constituents", cs}};
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_IO_HPP
