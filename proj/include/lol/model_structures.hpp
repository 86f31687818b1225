#pragma once

// The partial-function and random-variable models as harness structures.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lol/models.hpp"
#include "lol/structure.hpp"

namespace lol {

using Pf = PartialFunction<std::string, std::string>;
using IntRv = RandomVariable<long long>;

template <class K, class V>
std::string format_pf(const PartialFunction<K, V>& f) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : f.mapping()) {
        if (!first) s += ",";
        first = false;
        s += key_to_string(k) + "↦" + key_to_string(v);
    }
    return s + "}";
}

template <class S>
std::string format_rv(const RandomVariable<S>& f) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << ")";
    return os.str();
}

/// PF(I, V) with ∪, ∩, disjoint-domain orthogonality, graph difference as the
/// subtraction, and the skew intersection.
inline Structure<Pf> pf_structure(const std::vector<std::string>& universe = {"1", "2", "3"},
                                  const std::vector<std::string>& values = {"a", "b"}) {
    Structure<Pf> s(Pf::empty(universe));
    s.name = "pf";
    s.equal = [](const Pf& a, const Pf& b) { return a == b; };
    s.le = [](const Pf& a, const Pf& b) { return pf_le(a, b); };
    s.join = [](const Pf& a, const Pf& b) { return try_pf_union(a, b); };
    s.ortho = [](const Pf& a, const Pf& b) { return pf_perp(a, b); };
    s.osum = [](const Pf& a, const Pf& b) -> std::optional<Pf> {
        if (!pf_perp(a, b)) return std::nullopt;
        return pf_union(a, b);
    };
    s.meet = [](const Pf& a, const Pf& b) -> std::optional<Pf> { return pf_intersect(a, b); };
    s.subtract = [](const Pf& a, const Pf& b) { return pf_difference(a, b); };
    s.skew = [](const Pf& a, const Pf& b) { return pf_skew_intersect(a, b); };
    s.overridden = [](const Pf& a, const Pf& b) { return pf_overridden(a, b); };
    s.show = [](const Pf& f) { return format_pf(f); };
    s.carrier = all_partial_functions(universe, values);
    return s;
}

/// The PF model with the skew hook replaced by plain intersection.
inline Structure<Pf> pf_intersect_as_skew() {
    auto s = pf_structure();
    s.name = "pf-intersect-skew";
    s.skew = [](const Pf& a, const Pf& b) { return pf_intersect(a, b); };
    return s;
}

/// Random variables on an n-point space with integer values, exact arithmetic.
inline Structure<IntRv> rv_structure(std::size_t n = 3, const std::vector<long long>& values = {0, 1, 2}) {
    Structure<IntRv> s(IntRv::zero(n));
    s.name = "rv";
    s.equal = [](const IntRv& a, const IntRv& b) { return rv_equal(a, b); };
    s.le = [](const IntRv& a, const IntRv& b) { return rv_le(a, b); };
    s.join = [](const IntRv& a, const IntRv& b) { return rv_join(a, b); };
    s.ortho = [](const IntRv& a, const IntRv& b) { return rv_perp(a, b); };
    s.osum = [](const IntRv& a, const IntRv& b) { return try_rv_osum(a, b); };
    s.meet = [](const IntRv& a, const IntRv& b) -> std::optional<IntRv> { return rv_meet(a, b); };
    s.subtract = [](const IntRv& a, const IntRv& b) { return rv_bck(a, b); };
    s.skew = [](const IntRv& a, const IntRv& b) { return rv_skew_meet(a, b); };
    s.overridden = [](const IntRv& a, const IntRv& b) { return rv_overridden(a, b); };
    s.show = [](const IntRv& f) { return format_rv(f); };
    s.carrier = all_random_variables(n, values);
    return s;
}

}  // namespace lol
