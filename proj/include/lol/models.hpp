#pragma once

// The two commutative models of the logical order: partial functions ordered
// by graph inclusion, and real random variables on a finite sample space
// ordered by "f agrees with g on supp f". Both embed into the operator model.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lol/errors.hpp"
#include "lol/numerics.hpp"

namespace lol {

template <class Key>
std::string key_to_string(const Key& k) {
    if constexpr (std::is_convertible_v<Key, std::string>) {
        return std::string(k);
    } else if constexpr (std::is_arithmetic_v<Key>) {
        return std::to_string(k);
    } else {
        std::ostringstream os;
        os << k;
        return os.str();
    }
}

/// A finite partial map from an index universe I into a value set V.
template <class Key, class Value>
class PartialFunction {
public:
    using key_type = Key;
    using mapped_type = Value;

    PartialFunction(std::vector<Key> universe, std::map<Key, Value> mapping)
        : universe_(std::move(universe)), mapping_(std::move(mapping)) {
        std::sort(universe_.begin(), universe_.end());
        universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
        for (const auto& [k, v] : mapping_)
            if (!std::binary_search(universe_.begin(), universe_.end(), k))
                throw UnknownElement("index " + key_to_string(k) + " is not in the universe");
    }

    static PartialFunction empty(std::vector<Key> universe) { return PartialFunction(std::move(universe), {}); }

    const std::vector<Key>& universe() const { return universe_; }
    const std::map<Key, Value>& mapping() const { return mapping_; }
    std::size_t size() const { return mapping_.size(); }
    bool defined_at(const Key& k) const { return mapping_.count(k) != 0; }

    std::set<Key> domain() const {
        std::set<Key> d;
        for (const auto& kv : mapping_) d.insert(kv.first);
        return d;
    }

    friend bool operator==(const PartialFunction&, const PartialFunction&) = default;

private:
    std::vector<Key> universe_;
    std::map<Key, Value> mapping_;
};

namespace detail {

template <class K, class V>
void require_same_universe(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    if (a.universe() != b.universe()) throw UniverseMismatch("partial functions over different universes");
}

}  // namespace detail

/// φ ∪ ψ, defined iff φ and ψ agree on dom φ ∩ dom ψ.
template <class K, class V>
std::optional<PartialFunction<K, V>> try_pf_union(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    auto m = a.mapping();
    for (const auto& [k, v] : b.mapping()) {
        auto [it, inserted] = m.emplace(k, v);
        if (!inserted && !(it->second == v)) return std::nullopt;
    }
    return PartialFunction<K, V>(a.universe(), std::move(m));
}

template <class K, class V>
PartialFunction<K, V> pf_union(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    for (const auto& [k, v] : b.mapping()) {
        auto it = a.mapping().find(k);
        if (it != a.mapping().end() && !(it->second == v)) throw Conflict(key_to_string(k));
    }
    return *try_pf_union(a, b);
}

/// Intersection of graphs.
template <class K, class V>
PartialFunction<K, V> pf_intersect(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    std::map<K, V> m;
    for (const auto& [k, v] : a.mapping()) {
        auto it = b.mapping().find(k);
        if (it != b.mapping().end() && it->second == v) m.emplace(k, v);
    }
    return PartialFunction<K, V>(a.universe(), std::move(m));
}

template <class K, class V>
bool pf_perp(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    for (const auto& kv : a.mapping())
        if (b.defined_at(kv.first)) return false;
    return true;
}

/// Graph inclusion φ ⊆ ψ.
template <class K, class V>
bool pf_le(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    for (const auto& [k, v] : a.mapping()) {
        auto it = b.mapping().find(k);
        if (it == b.mapping().end() || !(it->second == v)) return false;
    }
    return true;
}

/// φ ⊑ ψ iff dom φ ⊆ dom ψ.
template <class K, class V>
bool pf_overridden(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    for (const auto& kv : a.mapping())
        if (!b.defined_at(kv.first)) return false;
    return true;
}

/// ψ restricted to dom φ ∩ dom ψ: the largest χ ⊆ ψ with dom χ ⊆ dom φ.
template <class K, class V>
PartialFunction<K, V> pf_skew_intersect(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    std::map<K, V> m;
    for (const auto& [k, v] : b.mapping())
        if (a.defined_at(k)) m.emplace(k, v);
    return PartialFunction<K, V>(a.universe(), std::move(m));
}

/// Graph difference φ \ ψ, the BCK subtraction of a functional nearlattice.
template <class K, class V>
PartialFunction<K, V> pf_difference(const PartialFunction<K, V>& a, const PartialFunction<K, V>& b) {
    detail::require_same_universe(a, b);
    std::map<K, V> m;
    for (const auto& [k, v] : a.mapping()) {
        auto it = b.mapping().find(k);
        if (it == b.mapping().end() || !(it->second == v)) m.emplace(k, v);
    }
    return PartialFunction<K, V>(a.universe(), std::move(m));
}

/// Every partial function from `universe` into `values`, in lexicographic
/// order of the choice per index (undefined first).
template <class K, class V>
std::vector<PartialFunction<K, V>> all_partial_functions(const std::vector<K>& universe, const std::vector<V>& values) {
    std::vector<K> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<PartialFunction<K, V>> out;
    std::vector<std::size_t> choice(u.size(), 0);
    const std::size_t base = values.size() + 1;
    while (true) {
        std::map<K, V> m;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (choice[i] > 0) m.emplace(u[i], values[choice[i] - 1]);
        out.emplace_back(u, std::move(m));
        std::size_t i = u.size();
        while (i > 0 && ++choice[i - 1] == base) choice[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Zero test for random-variable values: exact for integral scalars,
/// |v| <= 1e-12 for floating-point scalars.
template <class Scalar>
bool value_is_zero(Scalar v) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return std::abs(v) <= 1e-12;
    } else {
        return v == Scalar{0};
    }
}

/// A real-valued function on the finite sample space {0, ..., n-1}. The
/// measure plays no role in the order structure and is not represented.
template <class Scalar>
class RandomVariable {
public:
    using value_type = Scalar;

    explicit RandomVariable(std::vector<Scalar> values) : values_(std::move(values)) {
        if (values_.empty()) throw InputError("sample space must be non-empty");
        if constexpr (std::is_floating_point_v<Scalar>) {
            for (Scalar v : values_)
                if (!std::isfinite(v)) throw InputError("random variable has non-finite values");
        }
    }

    static RandomVariable zero(std::size_t n) { return RandomVariable(std::vector<Scalar>(n, Scalar{0})); }

    std::size_t size() const { return values_.size(); }
    const std::vector<Scalar>& values() const { return values_; }
    Scalar operator[](std::size_t i) const { return values_[i]; }
    bool in_support(std::size_t i) const { return !value_is_zero(values_[i]); }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (in_support(i)) s.push_back(i);
        return s;
    }

    friend bool operator==(const RandomVariable&, const RandomVariable&) = default;

private:
    std::vector<Scalar> values_;
};

namespace detail {

template <class S>
void require_same_omega(const RandomVariable<S>& a, const RandomVariable<S>& b) {
    if (a.size() != b.size()) throw DimMismatch(a.size(), b.size());
}

template <class S>
bool agree_at(const RandomVariable<S>& a, const RandomVariable<S>& b, std::size_t i) {
    return value_is_zero(static_cast<S>(a[i] - b[i]));
}

}  // namespace detail

/// Equality up to the zero test on differences.
template <class S>
bool rv_equal(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!detail::agree_at(f, g, i)) return false;
    return true;
}

/// f ⪯ g iff f = g·χ_{supp f}.
template <class S>
bool rv_le(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.in_support(i) && !detail::agree_at(f, g, i)) return false;
    return true;
}

/// g·χ over supp f ∩ supp g minus supp(f − g).
template <class S>
RandomVariable<S> rv_meet(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    std::vector<S> out(f.size(), S{0});
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.in_support(i) && g.in_support(i) && detail::agree_at(f, g, i)) out[i] = g[i];
    return RandomVariable<S>(std::move(out));
}

/// h·χ over supp f ∪ supp g, for a common upper bound h.
template <class S>
RandomVariable<S> rv_join_bounded(const RandomVariable<S>& f, const RandomVariable<S>& g, const RandomVariable<S>& h) {
    detail::require_same_omega(f, g);
    detail::require_same_omega(f, h);
    if (!rv_le(f, h)) throw NotUpperBound(0);
    if (!rv_le(g, h)) throw NotUpperBound(1);
    std::vector<S> out(f.size(), S{0});
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.in_support(i) || g.in_support(i)) out[i] = h[i];
    return RandomVariable<S>(std::move(out));
}

/// Join without a witness: defined iff f and g agree on supp f ∩ supp g,
/// which is exactly when a common upper bound exists.
template <class S>
std::optional<RandomVariable<S>> rv_join(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    std::vector<S> out(f.size(), S{0});
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.in_support(i) && g.in_support(i) && !detail::agree_at(f, g, i)) return std::nullopt;
        out[i] = f.in_support(i) ? f[i] : g[i];
    }
    return RandomVariable<S>(std::move(out));
}

/// f ⊥ g iff fg = 0 pointwise.
template <class S>
bool rv_perp(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.in_support(i) && g.in_support(i)) return false;
    return true;
}

template <class S>
std::optional<RandomVariable<S>> try_rv_osum(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    if (!rv_perp(f, g)) return std::nullopt;
    std::vector<S> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
    return RandomVariable<S>(std::move(out));
}

template <class S>
RandomVariable<S> rv_osum(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    auto s = try_rv_osum(f, g);
    if (!s) throw NotOrthogonal();
    return *std::move(s);
}

/// g ⊖ f = g·χ_{supp(f − g)}.
template <class S>
RandomVariable<S> rv_bck(const RandomVariable<S>& g, const RandomVariable<S>& f) {
    detail::require_same_omega(f, g);
    std::vector<S> out(g.size(), S{0});
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!detail::agree_at(f, g, i)) out[i] = g[i];
    return RandomVariable<S>(std::move(out));
}

/// f ⟓ g = g·χ_{supp f ∩ supp g}.
template <class S>
RandomVariable<S> rv_skew_meet(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    std::vector<S> out(g.size(), S{0});
    for (std::size_t i = 0; i < g.size(); ++i)
        if (f.in_support(i) && g.in_support(i)) out[i] = g[i];
    return RandomVariable<S>(std::move(out));
}

/// f ⊑ g iff supp f ⊆ supp g.
template <class S>
bool rv_overridden(const RandomVariable<S>& f, const RandomVariable<S>& g) {
    detail::require_same_omega(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.in_support(i) && !g.in_support(i)) return false;
    return true;
}

template <class S>
HermitianOperator rv_to_diagonal(const RandomVariable<S>& f) {
    std::vector<double> d(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) d[i] = static_cast<double>(f[i]);
    return HermitianOperator::diagonal(d);
}

/// Codomain restriction to the non-zero reals: {i ↦ f(i) : f(i) ≠ 0}.
template <class S>
PartialFunction<std::size_t, S> rv_to_partial_function(const RandomVariable<S>& f) {
    std::vector<std::size_t> universe(f.size());
    std::map<std::size_t, S> m;
    for (std::size_t i = 0; i < f.size(); ++i) {
        universe[i] = i;
        if (f.in_support(i)) m.emplace(i, f[i]);
    }
    return PartialFunction<std::size_t, S>(std::move(universe), std::move(m));
}

/// Every random variable on an n-point space with values from `values`.
template <class S>
std::vector<RandomVariable<S>> all_random_variables(std::size_t n, const std::vector<S>& values) {
    std::vector<RandomVariable<S>> out;
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        std::vector<S> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = values[choice[i]];
        out.emplace_back(std::move(v));
        std::size_t i = n;
        while (i > 0 && ++choice[i - 1] == values.size()) choice[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

}  // namespace lol
