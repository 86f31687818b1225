#pragma once

// Explicit finite posets with an optional orthogonality relation, the
// brute-force oracles on them (glb, lub, upper bound property, skew meet),
// and the built-in fixtures.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lol/errors.hpp"
#include "lol/structure.hpp"

namespace lol {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

class FinitePoset {
public:
    /// `le` is closed reflexively and transitively; antisymmetry and the
    /// minimum `zero` are checked. Orthogonality is either given directly
    /// (`ortho`, which must satisfy ⊥1–⊥3) or induced by an m-complementation
    /// (`complement`, listed once per pair) as x ⊥ y iff y ≤ x⁻.
    FinitePoset(std::vector<std::string> elements, const LabelPairs& le_pairs, const std::string& zero,
                const std::optional<LabelPairs>& ortho = std::nullopt,
                const std::optional<LabelPairs>& complement = std::nullopt)
        : labels_(std::move(elements)) {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (!index_.emplace(labels_[i], i).second) throw InvalidPoset("duplicate element '" + labels_[i] + "'");
        if (labels_.empty()) throw InvalidPoset("poset has no elements");
        const std::size_t n = labels_.size();
        le_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) le_[i * n + i] = 1;
        for (const auto& [a, b] : le_pairs) le_[index(a) * n + index(b)] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (le_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (le_[k * n + j]) le_[i * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (le_[i * n + j] && le_[j * n + i])
                    throw InvalidPoset("antisymmetry violated by '" + labels_[i] + "' and '" + labels_[j] + "'");
        zero_ = index(zero);
        for (std::size_t i = 0; i < n; ++i)
            if (!le_[zero_ * n + i]) throw InvalidPoset("zero '" + zero + "' is not below '" + labels_[i] + "'");

        if (ortho && complement) throw InvalidPoset("give either an orthogonality or a complementation, not both");
        if (complement) {
            complement_.assign(n, n);
            for (const auto& [a, b] : *complement) {
                const std::size_t i = index(a), j = index(b);
                for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                    if (complement_[x] != n && complement_[x] != y)
                        throw InvalidPoset("element '" + labels_[x] + "' has two complements");
                    complement_[x] = y;
                }
            }
            for (std::size_t i = 0; i < n; ++i)
                if (complement_[i] == n) throw InvalidPoset("element '" + labels_[i] + "' has no complement");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (le(i, j) && !le(complement_[j], complement_[i]))
                        throw InvalidPoset("complementation is not antitone at '" + labels_[i] + "' ≤ '" + labels_[j] + "'");
            ortho_.assign(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) ortho_[i * n + j] = le(j, complement_[i]);
        } else if (ortho) {
            ortho_.assign(n * n, 0);
            for (const auto& [a, b] : *ortho) ortho_[index(a) * n + index(b)] = 1;
        }
        if (!ortho_.empty()) validate_ortho();
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t zero() const { return zero_; }

    std::size_t index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw UnknownElement("unknown element '" + label + "'");
        return it->second;
    }

    bool le(std::size_t i, std::size_t j) const { return le_[i * size() + j] != 0; }
    bool has_ortho() const { return !ortho_.empty(); }
    bool ortho(std::size_t i, std::size_t j) const {
        if (!has_ortho()) throw OrthoMissing();
        return ortho_[i * size() + j] != 0;
    }
    bool has_complement() const { return !complement_.empty(); }
    std::size_t complement(std::size_t i) const { return complement_.at(i); }

    /// Maximum of {k : pred(k)}, if any.
    template <class Pred>
    std::optional<std::size_t> max_of(Pred pred) const {
        const std::size_t n = size();
        for (std::size_t m = 0; m < n; ++m) {
            if (!pred(m)) continue;
            bool top = true;
            for (std::size_t k = 0; k < n && top; ++k)
                if (pred(k) && !le(k, m)) top = false;
            if (top) return m;
        }
        return std::nullopt;
    }

    std::optional<std::size_t> glb(std::size_t x, std::size_t y) const {
        return max_of([&](std::size_t k) { return le(k, x) && le(k, y); });
    }

    std::optional<std::size_t> lub(std::size_t x, std::size_t y) const {
        const std::size_t n = size();
        for (std::size_t m = 0; m < n; ++m) {
            if (!le(x, m) || !le(y, m)) continue;
            bool least = true;
            for (std::size_t k = 0; k < n && least; ++k)
                if (le(x, k) && le(y, k) && !le(m, k)) least = false;
            if (least) return m;
        }
        return std::nullopt;
    }

    bool has_upper_bound(std::size_t x, std::size_t y) const {
        for (std::size_t k = 0; k < size(); ++k)
            if (le(x, k) && le(y, k)) return true;
        return false;
    }

    /// x ⊑ y: every z orthogonal to y is orthogonal to x.
    bool overridden(std::size_t x, std::size_t y) const {
        for (std::size_t z = 0; z < size(); ++z)
            if (ortho(z, y) && !ortho(z, x)) return false;
        return true;
    }

    std::optional<std::size_t> skew_meet(std::size_t x, std::size_t y) const {
        if (!has_ortho()) throw OrthoMissing();
        return max_of([&](std::size_t u) { return overridden(u, x) && le(u, y); });
    }

private:
    void validate_ortho() const {
        const std::size_t n = size();
        for (std::size_t x = 0; x < n; ++x) {
            if (!ortho(x, zero_)) throw InvalidPoset("orthogonality violates ⊥3 at '" + labels_[x] + "'");
            for (std::size_t y = 0; y < n; ++y) {
                if (ortho(x, y) && !ortho(y, x))
                    throw InvalidPoset("orthogonality violates ⊥1 at ('" + labels_[x] + "', '" + labels_[y] + "')");
                for (std::size_t z = 0; z < n; ++z)
                    if (le(x, y) && ortho(y, z) && !ortho(x, z))
                        throw InvalidPoset("orthogonality violates ⊥2 at ('" + labels_[x] + "', '" + labels_[y] +
                                           "', '" + labels_[z] + "')");
            }
        }
    }

    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<char> le_;
    std::vector<char> ortho_;
    std::vector<std::size_t> complement_;
    std::size_t zero_ = 0;
};

inline std::optional<std::string> brute_glb(const FinitePoset& p, const std::string& x, const std::string& y) {
    auto r = p.glb(p.index(x), p.index(y));
    if (!r) return std::nullopt;
    return p.label(*r);
}

inline std::optional<std::string> brute_lub(const FinitePoset& p, const std::string& x, const std::string& y) {
    auto r = p.lub(p.index(x), p.index(y));
    if (!r) return std::nullopt;
    return p.label(*r);
}

struct UbpResult {
    bool holds = true;
    std::optional<std::pair<std::string, std::string>> witness;
};

/// Upper bound property: every pair with a common upper bound has a lub.
inline UbpResult has_ubp(const FinitePoset& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = x + 1; y < p.size(); ++y)
            if (p.has_upper_bound(x, y) && !p.lub(x, y)) return {false, std::pair{p.label(x), p.label(y)}};
    return {};
}

inline std::optional<std::string> brute_skew_meet(const FinitePoset& p, const std::string& x, const std::string& y) {
    auto r = p.skew_meet(p.index(x), p.index(y));
    if (!r) return std::nullopt;
    return p.label(*r);
}

/// Relative complement of y in [0, x]: the unique z ≤ x with y ⊥ z and
/// y ∨ z = x, when y ≤ x.
inline std::optional<std::size_t> relative_complement(const FinitePoset& p, std::size_t y, std::size_t x) {
    std::optional<std::size_t> found;
    for (std::size_t z = 0; z < p.size(); ++z) {
        if (!p.le(z, x) || !p.ortho(y, z) || p.lub(y, z) != std::optional<std::size_t>(x)) continue;
        if (found) return std::nullopt;
        found = z;
    }
    return found;
}

/// Harness adapter: join = lub (defined iff a common upper bound exists and
/// the lub does), meet = glb, skew meet brute-forced by the harness, and a
/// subtraction x − y = x ⊖ (x ∧ y) when every such relative complement exists
/// and is unique.
inline Structure<std::size_t> as_structure(const FinitePoset& p, const std::string& name = "poset") {
    auto shared = std::make_shared<const FinitePoset>(p);
    Structure<std::size_t> s(p.zero());
    s.name = name;
    s.equal = [](const std::size_t& a, const std::size_t& b) { return a == b; };
    s.le = [shared](const std::size_t& a, const std::size_t& b) { return shared->le(a, b); };
    s.join = [shared](const std::size_t& a, const std::size_t& b) -> std::optional<std::size_t> {
        if (!shared->has_upper_bound(a, b)) return std::nullopt;
        return shared->lub(a, b);
    };
    s.meet = [shared](const std::size_t& a, const std::size_t& b) { return shared->glb(a, b); };
    if (p.has_ortho()) {
        s.ortho = [shared](const std::size_t& a, const std::size_t& b) { return shared->ortho(a, b); };
        const std::size_t n = p.size();
        auto table = std::make_shared<std::vector<std::size_t>>(n * n);
        bool total = true;
        for (std::size_t x = 0; x < n && total; ++x)
            for (std::size_t y = 0; y < n && total; ++y) {
                auto m = p.glb(x, y);
                auto d = m ? relative_complement(p, *m, x) : std::nullopt;
                if (!d) total = false;
                else (*table)[x * n + y] = *d;
            }
        if (total) s.subtract = [table, n](const std::size_t& x, const std::size_t& y) { return (*table)[x * n + y]; };
    }
    std::vector<std::size_t> carrier(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) carrier[i] = i;
    s.carrier = std::move(carrier);
    s.show = [shared](const std::size_t& i) { return shared->label(i); };
    return s;
}

// ---------------------------------------------------------------------------
// Fixtures.

namespace fixtures {

/// Subsets of {1..n}, labelled by their members ("0" for the empty set),
/// with set complementation.
inline FinitePoset boolean_cube(std::size_t n) {
    if (n > 4) throw InputError("boolean_cube supports n ≤ 4");
    const std::size_t m = std::size_t{1} << n;
    auto name = [n](std::size_t mask) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s += static_cast<char>('1' + i);
        return s.empty() ? std::string("0") : s;
    };
    std::vector<std::string> elems;
    LabelPairs le, comp;
    for (std::size_t a = 0; a < m; ++a) elems.push_back(name(a));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            if ((a & b) == a) le.emplace_back(name(a), name(b));
        if (a < (a ^ (m - 1))) comp.emplace_back(name(a), name(a ^ (m - 1)));
    }
    return FinitePoset(elems, le, "0", std::nullopt, comp);
}

/// 0 < a, a', b, b' < 1 with complements a ↔ a', b ↔ b'.
inline FinitePoset mo2() {
    return FinitePoset({"0", "a", "a'", "b", "b'", "1"},
                       {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                        {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
                       "0", std::nullopt, LabelPairs{{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
}

/// The hexagon 0 < a < b < 1, 0 < b' < a' < 1 with complements a ↔ a', b ↔ b'.
inline FinitePoset o6() {
    return FinitePoset({"0", "a", "b", "b'", "a'", "1"},
                       {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}},
                       "0", std::nullopt, LabelPairs{{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
}

/// {0, a, b} with a and b incomparable.
inline FinitePoset v_poset() {
    return FinitePoset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}, "0",
                       LabelPairs{{"0", "0"}, {"0", "a"}, {"a", "0"}, {"0", "b"}, {"b", "0"}, {"a", "b"}, {"b", "a"}});
}

/// 0 < a, b < c, d: a and b have two minimal upper bounds.
inline FinitePoset bowtie() {
    return FinitePoset({"0", "a", "b", "c", "d"},
                       {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}, "0");
}

inline FinitePoset single() { return FinitePoset({"0"}, {}, "0", LabelPairs{{"0", "0"}}); }

inline FinitePoset two_chain() { return FinitePoset({"0", "1"}, {{"0", "1"}}, "0", std::nullopt, LabelPairs{{"0", "1"}}); }

/// 0 < a < b < 1, 0 < c < 1, as a harness structure whose join table lacks
/// b ∨ c (and c ∨ b).
inline Structure<std::size_t> broken_pentagon() {
    const FinitePoset p({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}, "0");
    auto s = as_structure(p, "broken-pentagon");
    const std::size_t b = p.index("b"), c = p.index("c");
    auto join = s.join;
    s.join = [join, b, c](const std::size_t& x, const std::size_t& y) -> std::optional<std::size_t> {
        if ((x == b && y == c) || (x == c && y == b)) return std::nullopt;
        return join(x, y);
    };
    return s;
}

/// Two-chain whose orthogonality is x ⊥ y iff x = y.
inline Structure<std::size_t> equality_ortho_chain() {
    auto s = as_structure(two_chain(), "equality-ortho");
    s.ortho = [](const std::size_t& x, const std::size_t& y) { return x == y; };
    s.subtract = nullptr;
    return s;
}

/// Two-chain with x ⊕ x := x added to the orthogonal sums.
inline Structure<std::size_t> self_sum_chain() {
    auto s = as_structure(two_chain(), "self-sum");
    auto ortho = s.ortho;
    auto join = s.join;
    s.osum = [ortho, join](const std::size_t& x, const std::size_t& y) -> std::optional<std::size_t> {
        if (x == y) return x;
        if (!ortho(x, y)) return std::nullopt;
        return join(x, y);
    };
    return s;
}

/// Two-chain with the subtraction x − y := x.
inline Structure<std::size_t> left_projection_chain() {
    auto s = as_structure(two_chain(), "left-subtraction");
    s.subtract = [](const std::size_t& x, const std::size_t&) { return x; };
    return s;
}

/// Built-in posets by name.
inline std::optional<FinitePoset> by_name(const std::string& name) {
    if (name == "boolean2") return boolean_cube(2);
    if (name == "boolean3") return boolean_cube(3);
    if (name == "boolean4") return boolean_cube(4);
    if (name == "mo2") return mo2();
    if (name == "o6") return o6();
    if (name == "v") return v_poset();
    if (name == "bowtie") return bowtie();
    if (name == "single") return single();
    if (name == "chain2") return two_chain();
    return std::nullopt;
}

}  // namespace fixtures

}  // namespace lol
