#pragma once

// Suite selection and report assembly behind `lol verify`.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "lol/axioms.hpp"
#include "lol/io.hpp"
#include "lol/matrix_model.hpp"
#include "lol/model_structures.hpp"
#include "lol/poset.hpp"

namespace lol {

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    std::size_t dim = 4;
    Tolerances tol;
    std::string output;  // empty: standard output
    std::string format = "json";
    std::size_t segment_tops = 20;

    void validate() const {
        tol.validate();
        if (samples == 0) throw InputError("--samples must be positive");
        if (dim == 0 || dim > tol.max_dim)
            throw InputError("--dim must be in [1, " + std::to_string(tol.max_dim) + "]");
        if (format != "json" && format != "table") throw InputError("--format must be json or table");
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"nearsemilattice", "absorption", "ortho", "qom", "goa",
                                                   "riesz",           "bck",        "skew",  "oml"};
    return names;
}

/// Comma-separated suite names, or "all".
inline std::vector<std::string> parse_suites(const std::string& selector) {
    if (selector == "all") return suite_names();
    std::vector<std::string> out;
    std::stringstream ss(selector);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
            throw InputError("unknown suite '" + item + "'");
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    if (out.empty()) throw InputError("empty suite selector");
    return out;
}

struct VerifyResult {
    ordered_json reports = ordered_json::array();
    bool ok = true;
};

namespace detail {

inline ordered_json skipped(const std::string& suite, const std::string& reason) {
    ordered_json j;
    j["suite"] = suite;
    j["axiom"] = suite;
    j["verdict"] = "informational";
    j["witnesses"] = ordered_json::array();
    j["stats"] = {{"mode", "skipped"}, {"tuples", 0}, {"failures", 0}};
    j["tolerance"] = nullptr;
    j["note"] = "suite skipped: " + reason;
    return j;
}

template <class T>
std::vector<AxiomReport<T>> run_suite(const Structure<T>& s, const std::string& suite, const CheckConfig& cc,
                                      const RunConfig& rc) {
    if (suite == "nearsemilattice") return check_nearsemilattice(s, cc);
    if (suite == "absorption") return check_absorption_and_distributivity(s, cc);
    if (suite == "ortho") return check_orthogonality(s, cc);
    if (suite == "qom") return check_quasi_orthomodular(s, cc);
    if (suite == "goa") return check_gen_orthoalgebra(s, cc);
    if (suite == "riesz") return check_riesz(s, cc);
    if (suite == "bck") return check_weak_bck(s, cc);
    if (suite == "skew") return check_overriding_and_skew(s, cc);
    if (suite == "oml") return check_initial_segments_oml(s, default_tops(s, cc, rc.segment_tops), cc);
    throw InputError("unknown suite '" + suite + "'");
}

// Why a suite cannot run on this structure, or empty if it can.
template <class T>
std::string unavailable(const Structure<T>& s, const std::string& suite) {
    const bool needs_ortho = suite == "ortho" || suite == "qom" || suite == "goa" || suite == "riesz" ||
                             suite == "skew" || suite == "oml";
    if (needs_ortho && !s.ortho) return "no orthogonality";
    if (suite == "riesz" && !s.finite()) return "decomposition search needs a finite carrier";
    if (suite == "bck" && !s.subtract) return "no subtraction";
    return {};
}

}  // namespace detail

template <class T>
VerifyResult verify_structure(const Structure<T>& s, const std::vector<std::string>& suites, bool all,
                              const RunConfig& rc) {
    rc.validate();
    const CheckConfig cc{rc.seed, rc.samples, 5};
    VerifyResult out;
    for (const auto& suite : suites) {
        if (all) {
            const std::string why = detail::unavailable(s, suite);
            if (!why.empty()) {
                out.reports.push_back(detail::skipped(suite, why));
                continue;
            }
        }
        for (const auto& r : detail::run_suite(s, suite, cc, rc)) {
            ordered_json j;
            j["suite"] = suite;
            const ordered_json body = to_json(r, s.show);
            for (const auto& [k, v] : body.items()) j[k] = v;
            if (r.verdict == Verdict::fail) out.ok = false;
            out.reports.push_back(std::move(j));
        }
    }
    return out;
}

/// `target` is "matrix", "rv", "pf", a built-in poset name, or a poset file.
inline VerifyResult run_verify(const std::string& target, const std::string& selector, const RunConfig& rc) {
    rc.validate();
    const auto suites = parse_suites(selector);
    const bool all = selector == "all";
    if (target == "matrix") return verify_structure(matrix_structure(rc.dim, rc.tol), suites, all, rc);
    if (target == "rv") return verify_structure(tabulate(rv_structure()), suites, all, rc);
    if (target == "pf") return verify_structure(tabulate(pf_structure()), suites, all, rc);
    if (std::filesystem::exists(target))
        return verify_structure(as_structure(poset_from_json(load_json_file(target)), target), suites, all, rc);
    if (auto p = fixtures::by_name(target)) return verify_structure(as_structure(*p, target), suites, all, rc);
    throw InputError("unknown model or file '" + target + "' (expected matrix, rv, pf, a built-in poset or a poset file)");
}

/// Plain-text rendering of a report array.
inline std::string reports_table(const ordered_json& reports) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "suite" << std::setw(22) << "axiom" << std::setw(15) << "verdict"
       << std::setw(10) << "tuples" << std::setw(10) << "failures"
       << "witness\n";
    for (const auto& r : reports) {
        std::string witness;
        if (!r["witnesses"].empty()) {
            witness = "(";
            bool first = true;
            for (const auto& x : r["witnesses"][0]) {
                witness += (first ? "" : ", ") + x.get<std::string>();
                first = false;
            }
            witness += ")";
        }
        // setw counts bytes; pad by code points so the columns line up.
        auto pad = [](const std::string& s, std::size_t width) {
            std::size_t cps = 0;
            for (unsigned char c : s)
                if ((c & 0xC0) != 0x80) ++cps;
            return s + std::string(cps < width ? width - cps : 1, ' ');
        };
        os << pad(r["suite"].get<std::string>(), 16) << pad(r["axiom"].get<std::string>(), 22)
           << pad(r["verdict"].get<std::string>(), 15) << pad(std::to_string(r["stats"]["tuples"].get<std::size_t>()), 10)
           << pad(std::to_string(r["stats"]["failures"].get<std::size_t>()), 10) << witness << "\n";
    }
    return os.str();
}

}  // namespace lol
