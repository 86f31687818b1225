#pragma once

// JSON formats for operators, partial functions, random variables and posets.
//   operator:          {"dim": n, "entries": [[[re, im], ...], ...]}  (a plain number is a real entry)
//   partial function:  {"universe": [...], "map": {"i": "v", ...}}
//   random variable:   {"values": [...]}
//   poset:             {"elements": [...], "le": [[x, y], ...], "zero": "0",
//                       "ortho": [[x, y], ...]}  or  "complement": [[x, x'], ...]

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lol/errors.hpp"
#include "lol/models.hpp"
#include "lol/numerics.hpp"
#include "lol/poset.hpp"

namespace lol {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

inline std::string label_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("labels must be strings or integers, got " + v.dump());
}

inline LabelPairs label_pairs(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
    LabelPairs out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError(std::string(what) + " entries must be pairs, got " + p.dump());
        out.emplace_back(label_of(p[0]), label_of(p[1]));
    }
    return out;
}

inline double clean(double v) { return std::abs(v) < 1e-14 ? 0.0 : v; }

}  // namespace detail

inline HermitianOperator operator_from_json(const json& j) {
    const json& entries = detail::field(j, "entries", "operator");
    if (!entries.is_array() || entries.empty()) throw ParseError("operator: \"entries\" must be a non-empty array of rows");
    const std::size_t n = entries.size();
    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned()) throw ParseError("operator: \"dim\" must be a positive integer");
        if (j["dim"].get<std::size_t>() != n) throw DimMismatch(j["dim"].get<std::size_t>(), n);
    }
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = entries[r];
        if (!row.is_array() || row.size() != n)
            throw DimMismatch("operator: row " + std::to_string(r) + " does not have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            const json& e = row[c];
            Complex z;
            if (e.is_number()) {
                z = Complex(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                z = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw ParseError("operator: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be a number or [re, im], got " + e.dump());
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
        }
    }
    return HermitianOperator(m);
}

inline ordered_json operator_to_json(const HermitianOperator& a) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < a.matrix().rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < a.matrix().cols(); ++c) {
            const Complex z = a.matrix()(r, c);
            row.push_back({detail::clean(z.real()), detail::clean(z.imag())});
        }
        rows.push_back(std::move(row));
    }
    ordered_json j;
    j["dim"] = a.dim();
    j["entries"] = std::move(rows);
    return j;
}

inline PartialFunction<std::string, std::string> pf_from_json(const json& j) {
    const json& u = detail::field(j, "universe", "partial function");
    if (!u.is_array()) throw ParseError("partial function: \"universe\" must be an array");
    std::vector<std::string> universe;
    for (const auto& x : u) universe.push_back(detail::label_of(x));
    std::map<std::string, std::string> m;
    if (j.contains("map")) {
        if (!j["map"].is_object()) throw ParseError("partial function: \"map\" must be an object");
        for (const auto& [k, v] : j["map"].items()) m.emplace(k, detail::label_of(v));
    }
    return PartialFunction<std::string, std::string>(std::move(universe), std::move(m));
}

inline ordered_json pf_to_json(const PartialFunction<std::string, std::string>& f) {
    ordered_json j;
    j["universe"] = f.universe();
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : f.mapping()) m[k] = v;
    j["map"] = std::move(m);
    return j;
}

inline RandomVariable<double> rv_from_json(const json& j) {
    const json& v = detail::field(j, "values", "random variable");
    if (!v.is_array()) throw ParseError("random variable: \"values\" must be an array");
    std::vector<double> values;
    for (const auto& x : v) {
        if (!x.is_number()) throw ParseError("random variable: values must be numbers, got " + x.dump());
        values.push_back(x.get<double>());
    }
    return RandomVariable<double>(std::move(values));
}

inline ordered_json rv_to_json(const RandomVariable<double>& f) {
    ordered_json j;
    j["values"] = f.values();
    return j;
}

inline FinitePoset poset_from_json(const json& j) {
    const json& e = detail::field(j, "elements", "poset");
    if (!e.is_array()) throw ParseError("poset: \"elements\" must be an array");
    std::vector<std::string> elements;
    for (const auto& x : e) elements.push_back(detail::label_of(x));
    const LabelPairs le = j.contains("le") ? detail::label_pairs(j["le"], "poset \"le\"") : LabelPairs{};
    const std::string zero = detail::label_of(detail::field(j, "zero", "poset"));
    std::optional<LabelPairs> ortho, complement;
    if (j.contains("ortho")) ortho = detail::label_pairs(j["ortho"], "poset \"ortho\"");
    if (j.contains("complement")) complement = detail::label_pairs(j["complement"], "poset \"complement\"");
    return FinitePoset(std::move(elements), le, zero, ortho, complement);
}

inline ordered_json poset_to_json(const FinitePoset& p) {
    ordered_json j;
    j["elements"] = p.labels();
    ordered_json le = ordered_json::array();
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (x != y && p.le(x, y)) le.push_back({p.label(x), p.label(y)});
    j["le"] = std::move(le);
    j["zero"] = p.label(p.zero());
    if (p.has_ortho()) {
        ordered_json o = ordered_json::array();
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y)
                if (p.ortho(x, y)) o.push_back({p.label(x), p.label(y)});
        j["ortho"] = std::move(o);
    }
    return j;
}

}  // namespace lol
