#pragma once

// A structure handle exposes a carrier through hooks (equality, order,
// partial join, orthogonality, ...). Laws are predicates over tuples of
// carrier elements; running a law enumerates tuples exhaustively on finite
// carriers or draws them from the structure's sampler otherwise.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lol/errors.hpp"
#include "lol/numerics.hpp"
#include "lol/random.hpp"

namespace lol {

enum class Verdict { pass, fail, informational };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::informational: return "informational";
    }
    return "?";
}

struct CheckConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    std::size_t max_witnesses = 5;
};

template <class T>
struct Structure {
    using element_type = T;
    using Pred = std::function<bool(const T&, const T&)>;
    using PartialOp = std::function<std::optional<T>(const T&, const T&)>;
    using TotalOp = std::function<T(const T&, const T&)>;

    explicit Structure(T zero_element) : zero(std::move(zero_element)) {}

    std::string name;
    T zero;
    Pred equal;
    Pred le;  // empty: recovered from the join as x ≤ y iff x ∨ y = y
    PartialOp join;
    Pred ortho;
    PartialOp osum;  // empty: x ⊕ y := x ∨ y for x ⊥ y
    PartialOp meet;  // empty: brute-force glb on finite carriers
    TotalOp subtract;
    TotalOp skew;    // empty: brute-force max{u : u ⊑ x, u ≤ y} on finite carriers
    Pred overridden; // empty: from the definition via ⊥ on finite carriers
    std::function<std::string(const T&)> show;

    std::optional<std::vector<T>> carrier;
    std::function<std::vector<T>(Rng&, std::size_t)> sample;
    std::function<std::vector<T>(const T&)> below;

    // Witness constructors for existential clauses on sampled carriers.
    PartialOp relative_complement;  // x ≤ y  ->  z with x ⊥ z and x ∨ z = y
    PartialOp override_projection;  // x ⊑ y  ->  x' with x' ⊑ x ⊑ x' and x' ≤ y

    std::function<std::vector<T>(const T&)> segment;  // elements of [0, p]
    std::function<T(Rng&)> sample_top;
    std::function<bool(const T&)> tolerance_sensitive;

    std::set<std::string> informational;
    std::optional<Tolerances> tolerances;

    bool finite() const { return carrier.has_value(); }
};

/// Hook access with the derived fallbacks applied.
template <class T>
class Ops {
public:
    explicit Ops(std::shared_ptr<const Structure<T>> s) : s_(std::move(s)) {}

    const Structure<T>& structure() const { return *s_; }

    bool eq(const T& x, const T& y) const { return s_->equal(x, y); }

    std::optional<T> join(const T& x, const T& y) const { return s_->join(x, y); }
    bool comp(const T& x, const T& y) const { return s_->join(x, y).has_value(); }

    bool le(const T& x, const T& y) const {
        if (s_->le) return s_->le(x, y);
        auto j = s_->join(x, y);
        return j && eq(*j, y);
    }

    bool has_ortho() const { return static_cast<bool>(s_->ortho); }
    bool ortho(const T& x, const T& y) const {
        if (!s_->ortho) throw OrthogonalityUnavailable();
        return s_->ortho(x, y);
    }

    std::optional<T> osum(const T& x, const T& y) const {
        if (s_->osum) return s_->osum(x, y);
        if (!ortho(x, y)) return std::nullopt;
        return join(x, y);
    }

    const std::vector<T>& carrier() const {
        if (!s_->carrier) throw InfiniteCarrier();
        return *s_->carrier;
    }

    std::vector<T> below(const T& y) const {
        if (s_->below) return s_->below(y);
        std::vector<T> out;
        for (const T& x : carrier())
            if (le(x, y)) out.push_back(x);
        return out;
    }

    bool has_meet() const { return static_cast<bool>(s_->meet) || s_->finite(); }
    std::optional<T> meet(const T& x, const T& y) const {
        if (s_->meet) return s_->meet(x, y);
        if (!s_->finite()) throw MeetUnavailable();
        return brute_max([&](const T& z) { return le(z, x) && le(z, y); });
    }

    bool overridden_by_definition(const T& x, const T& y) const {
        for (const T& z : carrier())
            if (ortho(z, y) && !ortho(z, x)) return false;
        return true;
    }
    bool overridden(const T& x, const T& y) const {
        if (s_->overridden) return s_->overridden(x, y);
        return overridden_by_definition(x, y);
    }

    bool has_skew() const { return static_cast<bool>(s_->skew) || s_->finite(); }
    std::optional<T> brute_skew(const T& x, const T& y) const {
        return brute_max([&](const T& u) { return overridden(u, x) && le(u, y); });
    }
    std::optional<T> skew(const T& x, const T& y) const {
        if (s_->skew) return s_->skew(x, y);
        if (!s_->finite()) throw HookUnavailable("structure has no skew-meet hook and no finite carrier");
        return brute_skew(x, y);
    }

    bool has_subtract() const { return static_cast<bool>(s_->subtract); }
    T subtract(const T& x, const T& y) const {
        if (!s_->subtract) throw SubtractionUnavailable();
        return s_->subtract(x, y);
    }

    /// Maximum of the carrier elements satisfying `pred`, if it exists.
    template <class Pred>
    std::optional<T> brute_max(Pred pred) const {
        std::vector<T> cand;
        for (const T& z : carrier())
            if (pred(z)) cand.push_back(z);
        for (const T& m : cand) {
            bool top = true;
            for (const T& z : cand)
                if (!le(z, m)) {
                    top = false;
                    break;
                }
            if (top) return m;
        }
        return std::nullopt;
    }

private:
    std::shared_ptr<const Structure<T>> s_;
};

template <class T>
struct Law {
    std::string id;
    std::size_t arity = 1;
    std::function<bool(std::span<const T>)> holds;
    bool derived = false;
    bool informational = false;
    // False when an existential clause cannot be settled on a sampled carrier
    // (no witness constructor); the law is then reported without evaluation.
    bool decidable = true;
    std::string note;
};

struct ReportStats {
    std::string mode;  // "exhaustive" or "sampled"
    std::size_t tuples = 0;
    std::size_t failures = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> tolerance_sensitive;
    std::optional<std::size_t> segments;
};

template <class T>
struct AxiomReport {
    std::string axiom;
    Verdict verdict = Verdict::pass;
    bool derived = false;
    std::vector<std::vector<T>> witnesses;
    ReportStats stats;
    std::string note;
    std::optional<Tolerances> tolerances;
};

template <class T>
nlohmann::ordered_json to_json(const AxiomReport<T>& r, const std::function<std::string(const T&)>& show) {
    nlohmann::ordered_json j;
    j["axiom"] = r.axiom;
    j["verdict"] = to_string(r.verdict);
    if (r.derived) j["derived"] = true;
    auto w = nlohmann::ordered_json::array();
    for (const auto& tuple : r.witnesses) {
        auto t = nlohmann::ordered_json::array();
        for (const auto& x : tuple) t.push_back(show(x));
        w.push_back(std::move(t));
    }
    j["witnesses"] = std::move(w);
    nlohmann::ordered_json st;
    st["mode"] = r.stats.mode;
    st["tuples"] = r.stats.tuples;
    st["failures"] = r.stats.failures;
    if (r.stats.seed) st["seed"] = *r.stats.seed;
    if (r.stats.segments) st["segments"] = *r.stats.segments;
    if (r.stats.tolerance_sensitive) st["tolerance_sensitive"] = *r.stats.tolerance_sensitive;
    j["stats"] = std::move(st);
    if (r.tolerances) {
        j["tolerance"] = {{"rank_rel_tol", r.tolerances->rank_rel_tol}, {"eq_abs_tol", r.tolerances->eq_abs_tol}};
    } else {
        j["tolerance"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

namespace detail {

template <class T>
bool evaluate(const Law<T>& law, std::span<const T> tuple, std::string& error) {
    try {
        return law.holds(tuple);
    } catch (const HookUnavailable&) {
        throw;
    } catch (const Error& e) {
        if (error.empty()) error = e.what();
        return false;
    }
}

}  // namespace detail

/// Runs one law over every carrier tuple (finite) or `cfg.samples` sampled
/// tuples drawn with a seed derived from `cfg.seed` and the law id.
template <class T>
AxiomReport<T> run_law(const Structure<T>& s, const Law<T>& law, const CheckConfig& cfg) {
    AxiomReport<T> r;
    r.axiom = law.id;
    r.derived = law.derived;
    r.note = law.note;
    r.tolerances = s.tolerances;
    std::string error;
    std::size_t sensitive = 0;
    if (!law.decidable) {
        r.stats.mode = s.finite() ? "exhaustive" : "sampled";
        if (!s.finite()) r.stats.seed = cfg.seed;
        r.verdict = Verdict::informational;
        return r;
    }

    auto record = [&](std::vector<T> tuple) {
        ++r.stats.tuples;
        if (s.tolerance_sensitive) {
            for (const T& x : tuple)
                if (s.tolerance_sensitive(x)) {
                    ++sensitive;
                    break;
                }
        }
        if (!detail::evaluate(law, std::span<const T>(tuple), error)) {
            ++r.stats.failures;
            if (r.witnesses.size() < cfg.max_witnesses) r.witnesses.push_back(std::move(tuple));
        }
    };

    if (s.finite()) {
        r.stats.mode = "exhaustive";
        const auto& c = *s.carrier;
        const std::size_t n = c.size();
        std::vector<std::size_t> idx(law.arity, 0);
        if (n > 0 || law.arity == 0) {
            while (true) {
                std::vector<T> tuple;
                tuple.reserve(law.arity);
                for (std::size_t i : idx) tuple.push_back(c[i]);
                record(std::move(tuple));
                std::size_t k = law.arity;
                while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
                if (k == 0) break;
            }
        }
    } else {
        if (!s.sample) throw HookUnavailable("structure has neither a finite carrier nor a sampler");
        r.stats.mode = "sampled";
        r.stats.seed = cfg.seed;
        Rng rng(mix_seed(cfg.seed, law.id));
        for (std::size_t i = 0; i < cfg.samples; ++i) record(s.sample(rng, law.arity));
        if (s.tolerance_sensitive) r.stats.tolerance_sensitive = sensitive;
    }

    if (!error.empty()) r.note += (r.note.empty() ? "" : "; ") + std::string("evaluation error: ") + error;
    if (law.informational || s.informational.count(law.id)) {
        r.verdict = Verdict::informational;
        if (r.stats.failures > 0)
            r.note += (r.note.empty() ? "" : "; ") + std::to_string(r.stats.failures) + " counterexample(s) found";
    } else {
        r.verdict = r.stats.failures > 0 ? Verdict::fail : Verdict::pass;
    }
    return r;
}

template <class T>
std::vector<AxiomReport<T>> run_laws(const Structure<T>& s, const std::vector<Law<T>>& laws, const CheckConfig& cfg) {
    std::vector<AxiomReport<T>> out;
    out.reserve(laws.size());
    for (const auto& law : laws) out.push_back(run_law(s, law, cfg));
    return out;
}

/// Re-evaluates a recorded witness; true when the law still fails on it.
template <class T>
bool replay_fails(const Law<T>& law, const std::vector<T>& witness) {
    std::string error;
    return !detail::evaluate(law, std::span<const T>(witness), error);
}

/// Replaces a finite structure by an index-based copy whose hooks are table
/// lookups. Every hook result must be an element of the carrier.
template <class T>
Structure<std::size_t> tabulate(const Structure<T>& src) {
    if (!src.finite()) throw InfiniteCarrier();
    auto shared = std::make_shared<const Structure<T>>(src);
    const Ops<T> ops(shared);
    const auto& c = *src.carrier;
    const std::size_t n = c.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    auto index_of = [&](const T& x) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (src.equal(c[i], x)) return i;
        throw InputError("carrier of '" + src.name + "' is not closed: " + src.show(x));
    };
    auto table_bool = [&](auto&& f) {
        auto t = std::make_shared<std::vector<char>>(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) (*t)[i * n + j] = f(c[i], c[j]) ? 1 : 0;
        return t;
    };
    auto table_partial = [&](auto&& f) {
        auto t = std::make_shared<std::vector<std::size_t>>(n * n, none);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::optional<T> r = f(c[i], c[j]);
                if (r) (*t)[i * n + j] = index_of(*r);
            }
        return t;
    };
    auto bool_hook = [n](std::shared_ptr<std::vector<char>> t) {
        return [t, n](const std::size_t& i, const std::size_t& j) { return (*t)[i * n + j] != 0; };
    };
    auto partial_hook = [n](std::shared_ptr<std::vector<std::size_t>> t) {
        return [t, n](const std::size_t& i, const std::size_t& j) -> std::optional<std::size_t> {
            const std::size_t r = (*t)[i * n + j];
            if (r == static_cast<std::size_t>(-1)) return std::nullopt;
            return r;
        };
    };
    auto total_hook = [n](std::shared_ptr<std::vector<std::size_t>> t) {
        return [t, n](const std::size_t& i, const std::size_t& j) { return (*t)[i * n + j]; };
    };

    Structure<std::size_t> out(index_of(src.zero));
    out.name = src.name;
    out.equal = [](const std::size_t& i, const std::size_t& j) { return i == j; };
    out.join = partial_hook(table_partial([&](const T& x, const T& y) { return ops.join(x, y); }));
    auto le_table = table_bool([&](const T& x, const T& y) { return ops.le(x, y); });
    out.le = bool_hook(le_table);
    if (src.ortho) out.ortho = bool_hook(table_bool(src.ortho));
    if (src.osum) out.osum = partial_hook(table_partial(src.osum));
    if (src.meet) out.meet = partial_hook(table_partial(src.meet));
    if (src.subtract)
        out.subtract = total_hook(table_partial([&](const T& x, const T& y) { return std::optional<T>(src.subtract(x, y)); }));
    if (src.skew)
        out.skew = total_hook(table_partial([&](const T& x, const T& y) { return std::optional<T>(src.skew(x, y)); }));
    if (src.overridden) out.overridden = bool_hook(table_bool(src.overridden));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    out.carrier = idx;
    auto downsets = std::make_shared<std::vector<std::vector<std::size_t>>>(n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if ((*le_table)[x * n + y]) (*downsets)[y].push_back(x);
    out.below = [downsets](const std::size_t& y) { return (*downsets)[y]; };
    auto labels = std::make_shared<std::vector<std::string>>();
    for (const T& x : c) labels->push_back(src.show(x));
    out.show = [labels](const std::size_t& i) { return (*labels)[i]; };
    out.informational = src.informational;
    out.tolerances = src.tolerances;
    return out;
}

}  // namespace lol
