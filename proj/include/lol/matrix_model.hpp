#pragma once

// The self-adjoint operators under the logical order as a sampled harness
// structure.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lol/observables.hpp"
#include "lol/random.hpp"
#include "lol/structure.hpp"

namespace lol {

/// Join of A and B without a supplied upper bound. If any upper bound C
/// exists, the join is C·(P_A ∨ P_B), and on U = ran A + ran B it is fixed by
/// J·P_A = A and J·P_B = B. With M = P_A + P_B + (I − P_U), which is
/// invertible, J = (A + B)·M⁻¹. The candidate is accepted only if it is
/// self-adjoint and above both arguments; otherwise no upper bound exists.
inline std::optional<HermitianOperator> certified_join(const HermitianOperator& a, const HermitianOperator& b,
                                                       const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    const Projector pa = range_projector(a, tol);
    const Projector pb = range_projector(b, tol);
    const Projector pu = proj_join(pa, pb, tol);
    const auto n = static_cast<Eigen::Index>(a.dim());
    const Matrix m = pa.matrix() + pb.matrix() + Matrix::Identity(n, n) - pu.matrix();
    const Matrix j = (a.matrix() + b.matrix()) * m.inverse();
    if (!matrices_equal(j, j.adjoint(), tol)) return std::nullopt;
    HermitianOperator jh = HermitianOperator::symmetrized(0.5 * (j + j.adjoint()));
    if (!logical_le(a, jh, tol) || !logical_le(b, jh, tol)) return std::nullopt;
    return jh;
}

inline std::string format_complex(Complex z) {
    char buf[64];
    auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
    const double re = clean(z.real()), im = clean(z.imag());
    if (im == 0.0) std::snprintf(buf, sizeof buf, "%.6g", re);
    else std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    return buf;
}

inline std::string format_operator(const HermitianOperator& a) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < a.matrix().rows(); ++i) {
        s += i ? ",[" : "[";
        for (Eigen::Index j = 0; j < a.matrix().cols(); ++j) s += (j ? "," : "") + format_complex(a.matrix()(i, j));
        s += "]";
    }
    return s + "]";
}

namespace detail {

inline HermitianOperator random_segment_element(const HermitianOperator& c, Rng& rng) {
    const auto e = eigh(c);
    std::bernoulli_distribution coin(0.5);
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
        if (coin(rng)) cols.push_back(i);
    return compress(c, Projector::onto(eigen_subspace(e.vectors, cols)));
}

inline HermitianOperator random_generic(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> rank(0, n);
    return random_hermitian_of_rank(n, rank(rng), rng);
}

}  // namespace detail

/// Tuple sampler mixing four recipes. The shared C has its spectrum kept
/// away from 0 and from itself: ⊥ bounds the product AB, so two segment
/// elements sharing an eigenvalue ε pass as orthogonal once ε² is below the
/// equality threshold while ⪯ still sees ε, and such draws test the
/// tolerances rather than the laws.
///  40% all members C·P for random spectral projections P of one random C;
///  20% all members U·diag(v)·U* for one random U and v with entries in {0, ±1, 2};
///  20% independent operators of random rank;
///  20% each member drawn from {C·P, C, O, independent} for one random C.
inline std::vector<HermitianOperator> sample_operator_tuple(std::size_t n, std::size_t arity, Rng& rng) {
    std::uniform_int_distribution<int> recipe(0, 9);
    const int r = recipe(rng);
    std::vector<HermitianOperator> out;
    if (r < 4) {
        const HermitianOperator c = random_separated_hermitian(n, rng);
        for (std::size_t i = 0; i < arity; ++i) out.push_back(detail::random_segment_element(c, rng));
    } else if (r < 6) {
        const Matrix u = random_unitary(n, rng);
        std::uniform_int_distribution<int> pick(0, 3);
        const double levels[] = {0.0, 1.0, -1.0, 2.0};
        for (std::size_t i = 0; i < arity; ++i) {
            RealVector v(static_cast<Eigen::Index>(n));
            for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = levels[pick(rng)];
            out.push_back(HermitianOperator::symmetrized(u * v.cast<Complex>().asDiagonal() * u.adjoint()));
        }
    } else if (r < 8) {
        for (std::size_t i = 0; i < arity; ++i) out.push_back(detail::random_generic(n, rng));
    } else {
        const HermitianOperator c = random_separated_hermitian(n, rng);
        std::uniform_int_distribution<int> pick(0, 3);
        for (std::size_t i = 0; i < arity; ++i) {
            switch (pick(rng)) {
                case 0: out.push_back(detail::random_segment_element(c, rng)); break;
                case 1: out.push_back(c); break;
                case 2: out.push_back(HermitianOperator::zero(n)); break;
                default: out.push_back(detail::random_generic(n, rng)); break;
            }
        }
    }
    return out;
}

/// Tuples whose members all lie below one random C (the bounded-family recipe).
inline std::vector<HermitianOperator> sample_bounded_tuple(std::size_t n, std::size_t arity, Rng& rng) {
    const HermitianOperator c = random_separated_hermitian(n, rng);
    std::vector<HermitianOperator> out;
    for (std::size_t i = 0; i < arity; ++i) out.push_back(detail::random_segment_element(c, rng));
    return out;
}

/// S(ℂⁿ) as a sampled structure. ⊑5 and skew-meet associativity are
/// informational: both fail on non-commuting inputs.
inline Structure<HermitianOperator> matrix_structure(std::size_t dim, const Tolerances& tol = {}) {
    tol.validate();
    if (dim == 0 || dim > tol.max_dim) throw InputError("dim must be in [1, max_dim]");
    Structure<HermitianOperator> s(HermitianOperator::zero(dim));
    s.name = "matrix";
    s.equal = [tol](const HermitianOperator& a, const HermitianOperator& b) { return op_equal(a, b, tol); };
    s.le = [tol](const HermitianOperator& a, const HermitianOperator& b) { return logical_le(a, b, tol); };
    s.join = [tol](const HermitianOperator& a, const HermitianOperator& b) { return certified_join(a, b, tol); };
    s.ortho = [tol](const HermitianOperator& a, const HermitianOperator& b) { return orthogonal(a, b, tol); };
    s.osum = [tol](const HermitianOperator& a, const HermitianOperator& b) { return try_osum(a, b, tol); };
    s.meet = [tol](const HermitianOperator& a, const HermitianOperator& b) -> std::optional<HermitianOperator> {
        return meet(a, b, tol);
    };
    s.subtract = [tol](const HermitianOperator& a, const HermitianOperator& b) { return bck_subtract(a, b, tol); };
    s.skew = [tol](const HermitianOperator& a, const HermitianOperator& b) { return skew_meet(a, b, tol); };
    s.overridden = [tol](const HermitianOperator& a, const HermitianOperator& b) { return overridden(a, b, tol); };
    s.show = [](const HermitianOperator& a) { return format_operator(a); };
    s.sample = [dim](Rng& rng, std::size_t arity) { return sample_operator_tuple(dim, arity, rng); };
    s.relative_complement = [tol](const HermitianOperator& x,
                                  const HermitianOperator& y) -> std::optional<HermitianOperator> {
        if (!logical_le(x, y, tol)) return std::nullopt;
        return segment_complement(x, y, tol);
    };
    s.override_projection = [tol](const HermitianOperator& x,
                                  const HermitianOperator& y) -> std::optional<HermitianOperator> {
        return compress(y, range_projector(x, tol), tol);
    };
    s.segment = [tol](const HermitianOperator& p) { return spectral_segment(p, tol); };
    s.sample_top = [dim](Rng& rng) { return detail::random_generic(dim, rng); };
    s.tolerance_sensitive = [tol](const HermitianOperator& a) { return rank_tolerance_sensitive(a, tol); };
    s.informational = {"⊑5", "associative"};
    s.tolerances = tol;
    return s;
}

}  // namespace lol
