#pragma once

// The logical order on self-adjoint operators, A ⪯ B iff A = B·P_A, and the
// operations it induces: orthogonal sums, meets, bounded joins, BCK
// subtraction, segment complements, overriding and skew meets.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lol/errors.hpp"
#include "lol/numerics.hpp"

namespace lol {

inline bool logical_le(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    const Projector pa = range_projector(a, tol);
    return matrices_equal(a.matrix(), b.matrix() * pa.matrix(), tol);
}

/// A ⊥ B iff AB = O. The relation is symmetric for self-adjoint operands
/// since (AB)* = BA.
inline bool orthogonal(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    return (a.matrix() * b.matrix()).norm() <= tol.eq_abs_tol * std::max(1.0, a.norm() * b.norm());
}

inline std::optional<HermitianOperator> try_osum(const HermitianOperator& a, const HermitianOperator& b,
                                                 const Tolerances& tol = {}) {
    if (!orthogonal(a, b, tol)) return std::nullopt;
    return a + b;
}

/// A ⊕ B = A + B, defined only for orthogonal operands.
inline HermitianOperator osum(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    auto s = try_osum(a, b, tol);
    if (!s) throw NotOrthogonal();
    return *std::move(s);
}

/// Projector P* onto the largest B-invariant subspace of
/// ran A ∩ ran B ∩ ker(A − B). Any P below ker(A − B) satisfies AP = BP, so
/// commuting with B already forces commuting with A, and P* is the maximum
/// of {P_C : C ⪯ A, C ⪯ B}.
inline Projector meet_support(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    const double scale = std::max(spectral_norm(a), spectral_norm(b));
    const Projector kernel = range_projector(a - b, tol, scale).complement();
    const Projector s0 = proj_meet(proj_meet(range_projector(a, tol), range_projector(b, tol), tol), kernel, tol);
    return Projector::onto(largest_invariant_subspace(b, s0.range(), tol));
}

/// Greatest lower bound of A and B in the logical order. Always defined.
inline HermitianOperator meet(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    return compress(b, meet_support(a, b, tol), tol);
}

namespace detail {

inline void require_bounded_family(std::span<const HermitianOperator> family, const HermitianOperator& bound,
                                   const Tolerances& tol) {
    if (family.empty()) throw InputError("family must be non-empty");
    for (std::size_t i = 0; i < family.size(); ++i) {
        HermitianOperator::require_same_dim(family[i].dim(), bound.dim());
        if (!logical_le(family[i], bound, tol)) throw NotUpperBound(i);
    }
}

}  // namespace detail

/// Least upper bound C·(⋁ P_Ai) of a family with upper bound C.
inline HermitianOperator join_bounded(std::span<const HermitianOperator> family, const HermitianOperator& bound,
                                      const Tolerances& tol = {}) {
    detail::require_bounded_family(family, bound, tol);
    Projector p = range_projector(family[0], tol);
    for (std::size_t i = 1; i < family.size(); ++i) p = proj_join(p, range_projector(family[i], tol), tol);
    return compress(bound, p, tol);
}

/// Greatest lower bound C·(⋀ P_Ai) of a family with upper bound C.
inline HermitianOperator meet_bounded(std::span<const HermitianOperator> family, const HermitianOperator& bound,
                                      const Tolerances& tol = {}) {
    detail::require_bounded_family(family, bound, tol);
    Projector p = range_projector(family[0], tol);
    for (std::size_t i = 1; i < family.size(); ++i) p = proj_meet(p, range_projector(family[i], tol), tol);
    return compress(bound, p, tol);
}

/// B ⊖ A = B·(I − P_{A ⋏ B}).
inline HermitianOperator bck_subtract(const HermitianOperator& b, const HermitianOperator& a,
                                      const Tolerances& tol = {}) {
    const HermitianOperator m = meet(a, b, tol);
    return compress(b, range_projector(m, tol).complement(), tol);
}

/// B − A, the complement of A in the segment [O, B]. Since P_A reduces B this
/// is B·(I − P_A); compressing keeps the rank exact, so A = B gives O rather
/// than round-off.
inline HermitianOperator segment_complement(const HermitianOperator& a, const HermitianOperator& b,
                                            const Tolerances& tol = {}) {
    if (!logical_le(a, b, tol)) throw NotLess();
    return compress(b, range_projector(a, tol).complement(), tol);
}

/// A ⊑ B: every operator orthogonal to B is orthogonal to A, i.e. ran A ⊆ ran B.
inline bool overridden(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    return proj_le(range_projector(a, tol), range_projector(b, tol), tol);
}

/// A ⟓ B = max{U : U ⊑ A and U ⪯ B}: B compressed to the largest B-invariant
/// subspace of ran A ∩ ran B.
inline HermitianOperator skew_meet(const HermitianOperator& a, const HermitianOperator& b,
                                   const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    const Projector s0 = proj_meet(range_projector(a, tol), range_projector(b, tol), tol);
    return compress(b, Projector::onto(largest_invariant_subspace(b, s0.range(), tol)), tol);
}

/// Projectors onto the eigenspaces of B for its non-zero eigenvalues.
/// Eigenvalues closer than rank_rel_tol * |B| are merged into one eigenspace.
inline std::vector<Projector> spectral_atoms(const HermitianOperator& b, const Tolerances& tol = {}) {
    const auto e = eigh(b);
    const double scale = e.values.cwiseAbs().maxCoeff();
    std::vector<Projector> atoms;
    if (scale == 0.0) return atoms;
    const double cutoff = tol.rank_rel_tol * scale;
    std::vector<Eigen::Index> cluster;
    auto flush = [&] {
        if (!cluster.empty()) atoms.push_back(Projector::onto(eigen_subspace(e.vectors, cluster)));
        cluster.clear();
    };
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        const double l = e.values(i);
        if (std::abs(l) <= cutoff) {
            flush();
            continue;
        }
        if (!cluster.empty() && std::abs(l - e.values(cluster.back())) > cutoff) flush();
        cluster.push_back(i);
    }
    flush();
    return atoms;
}

/// The elements B·P of [O, B] for P ranging over sums of spectral atoms,
/// indexed by the bitmask of atoms used.
inline std::vector<HermitianOperator> spectral_segment(const HermitianOperator& b, const Tolerances& tol = {}) {
    const auto atoms = spectral_atoms(b, tol);
    if (atoms.size() > 20) throw InputError("segment too large to enumerate");
    const auto n = static_cast<Eigen::Index>(b.dim());
    std::vector<HermitianOperator> out;
    out.reserve(std::size_t{1} << atoms.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
        Matrix p = Matrix::Zero(n, n);
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (mask & (std::size_t{1} << j)) p += atoms[j].matrix();
        out.push_back(HermitianOperator::symmetrized(p * b.matrix() * p));
    }
    return out;
}

}  // namespace lol
