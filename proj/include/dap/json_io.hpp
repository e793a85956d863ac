#pragma once

// JSON shapes shared by the CLI and the disk cache. Lives in its own header so
// the domain headers stay free of the JSON dependency.
//
// Wire contract:
//   path       {"steps": ["U","D2",...]}
//   word       {"steps": ["U","F","D"], "kind": "motzkin" | "grand"}
//   meander    {"letters": "LLRR"}
//   histogram  {"<value>": "<count>"}   counts as decimal strings (they outgrow 64 bits)
//   rational   ["<numerator>", "<denominator>"]
//   series     array of rationals; marked series nest one extra array level
//              per marker variable (y, then z)

#include <json.hpp>

#include <map>
#include <string>

#include "core.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "series.hpp"
#include "statistics.hpp"

namespace dap {

// ordered_json keeps insertion order, so histogram keys stay numerically
// sorted and cache files diff cleanly against regenerated output.
using json = nlohmann::ordered_json;

inline json path_to_json(const AirPocketPath& p) {
    json steps = json::array();
    for (Step s : p.steps()) steps.push_back(to_string(s));
    return json{{"steps", std::move(steps)}};
}

inline AirPocketPath path_from_json(const json& j) {
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
        throw parse_error("path JSON must be an object with a \"steps\" array");
    std::string text;
    for (const auto& s : j["steps"]) {
        if (!s.is_string()) throw parse_error("path step must be a string");
        text += s.get<std::string>();
    }
    return AirPocketPath::parse(text);
}

inline json word_to_json(const MotzkinWord& w) {
    json steps = json::array();
    for (MStep s : w.steps()) steps.push_back(std::string(1, letter(s)));
    return json{{"steps", std::move(steps)},
                {"kind", w.kind() == WordKind::motzkin ? "motzkin" : "grand"}};
}

inline MotzkinWord word_from_json(const json& j) {
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
        throw parse_error("word JSON must be an object with a \"steps\" array");
    std::string text;
    for (const auto& s : j["steps"]) {
        if (!s.is_string()) throw parse_error("word step must be a string");
        text += s.get<std::string>();
    }
    WordKind kind = WordKind::motzkin;
    if (j.contains("kind")) {
        std::string k = j["kind"].get<std::string>();
        if (k == "grand")
            kind = WordKind::grand;
        else if (k != "motzkin")
            throw parse_error("word kind must be \"motzkin\" or \"grand\"");
    }
    return MotzkinWord::parse(text, kind);
}

inline json meander_to_json(const MeanderWord& m) { return json{{"letters", m.to_string()}}; }

inline MeanderWord meander_from_json(const json& j) {
    if (!j.is_object() || !j.contains("letters") || !j["letters"].is_string())
        throw parse_error("meander JSON must be an object with a \"letters\" string");
    return MeanderWord::parse(j["letters"].get<std::string>());
}

// The histogram itself is the bare {value: count} object; callers wrap it with
// family/n/stat metadata when they need a self-describing record.
inline json histogram_to_json(const Histogram& h) {
    json out = json::object();
    for (const auto& [v, c] : h.entries) out[std::to_string(v)] = c.str();
    return out;
}

inline std::map<long, BigInt> histogram_entries_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("histogram JSON must be an object");
    std::map<long, BigInt> out;
    for (const auto& [k, v] : j.items()) {
        if (!v.is_string()) throw parse_error("histogram count must be a string");
        out[std::stol(k)] = BigInt(v.get<std::string>());
    }
    return out;
}

inline json rational_to_json(const Rational& q) {
    return json::array({numerator(q).str(), denominator(q).str()});
}

inline Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw parse_error("rational must be a [numerator, denominator] pair of strings");
    BigInt num(j[0].get<std::string>());
    BigInt den(j[1].get<std::string>());
    if (den == 0) throw parse_error("rational denominator must be nonzero");
    return Rational(num) / Rational(den);
}

inline json series_to_json(const Series<Rational>& s) {
    json out = json::array();
    for (int i = 0; i <= s.order; ++i) out.push_back(rational_to_json(s.c[i]));
    return out;
}

inline json series_to_json(const Series<Poly1>& s) {
    json out = json::array();
    for (int i = 0; i <= s.order; ++i) {
        json row = json::array();
        for (const Rational& q : s.c[i].c) row.push_back(rational_to_json(q));
        out.push_back(std::move(row));
    }
    return out;
}

inline json series_to_json(const Series<Poly2>& s) {
    json out = json::array();
    for (int i = 0; i <= s.order; ++i) {
        json rows = json::array();
        for (const auto& zrow : s.c[i].c) {
            json row = json::array();
            for (const Rational& q : zrow) row.push_back(rational_to_json(q));
            rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

inline Series<Rational> series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("series JSON must be a nonempty array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Series<Rational>(static_cast<int>(j.size()) - 1, std::move(c));
}

}  // namespace dap
