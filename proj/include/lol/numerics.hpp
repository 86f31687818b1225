#pragma once

// Dense linear algebra for self-adjoint operators on C^n: the operator and
// projector value types, range projections, the projection lattice, and the
// largest invariant subspace of a subspace under a self-adjoint map.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lol/errors.hpp"

namespace lol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every operation in the library.
///
/// `rank_rel_tol` is relative to the largest eigenvalue magnitude of the
/// operator whose range is taken. `eq_abs_tol` is the operator-equality
/// threshold: two operators are equal when the Frobenius norm of their
/// difference is at most `eq_abs_tol * max(1, |A|, |B|)`.
struct Tolerances {
    double rank_rel_tol = 1e-9;
    double eq_abs_tol = 1e-8;
    std::size_t max_dim = 64;

    void validate() const {
        if (!(rank_rel_tol > 0.0) || !std::isfinite(rank_rel_tol))
            throw InputError("rank_rel_tol must be strictly positive");
        if (!(eq_abs_tol > 0.0) || !std::isfinite(eq_abs_tol))
            throw InputError("eq_abs_tol must be strictly positive");
        if (max_dim == 0) throw InputError("max_dim must be strictly positive");
    }
};

/// Maximum symmetrization defect accepted by HermitianOperator, relative to |M|_F.
inline constexpr double kHermitianDefectRel = 1e-10;

/// An n x n complex self-adjoint matrix. Construction symmetrizes the input
/// and rejects matrices whose anti-Hermitian part is not negligible.
class HermitianOperator {
public:
    explicit HermitianOperator(const Matrix& m) {
        check_shape(m);
        const double scale = m.norm();
        defect_ = 0.5 * (m - m.adjoint()).norm();
        if (defect_ > kHermitianDefectRel * scale)
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, "matrix is not self-adjoint: defect %.3g exceeds %.3g * |M|", defect_,
                          kHermitianDefectRel);
            throw NotHermitian(buf);
        }
        m_ = 0.5 * (m + m.adjoint());
    }

    /// Symmetrizes without the defect check; for internal results whose
    /// self-adjointness was established by the caller.
    static HermitianOperator symmetrized(const Matrix& m) {
        check_shape(m);
        HermitianOperator h;
        h.defect_ = 0.5 * (m - m.adjoint()).norm();
        h.m_ = 0.5 * (m + m.adjoint());
        return h;
    }

    static HermitianOperator zero(std::size_t n) {
        return symmetrized(Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    }
    static HermitianOperator identity(std::size_t n) {
        return symmetrized(Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    }
    static HermitianOperator diagonal(std::span<const double> d) {
        Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
        return symmetrized(m);
    }
    static HermitianOperator diagonal(std::initializer_list<double> d) {
        return diagonal(std::span<const double>(d.begin(), d.size()));
    }
    /// Real symmetric matrix given row by row.
    static HermitianOperator real(std::initializer_list<std::initializer_list<double>> rows) {
        const auto n = static_cast<Eigen::Index>(rows.size());
        Matrix m(n, n);
        Eigen::Index i = 0;
        for (const auto& row : rows) {
            if (static_cast<Eigen::Index>(row.size()) != n) throw DimMismatch("ragged matrix rows");
            Eigen::Index j = 0;
            for (double v : row) m(i, j++) = v;
            ++i;
        }
        return HermitianOperator(m);
    }

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    double norm() const { return m_.norm(); }
    double symmetrization_defect() const { return defect_; }

    HermitianOperator operator-() const { return symmetrized(-m_); }
    friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
        require_same_dim(a.dim(), b.dim());
        return symmetrized(a.m_ + b.m_);
    }
    friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
        require_same_dim(a.dim(), b.dim());
        return symmetrized(a.m_ - b.m_);
    }
    friend HermitianOperator operator*(double c, const HermitianOperator& a) { return symmetrized(c * a.m_); }

    static void require_same_dim(std::size_t a, std::size_t b) {
        if (a != b) throw DimMismatch(a, b);
    }

private:
    HermitianOperator() = default;

    static void check_shape(const Matrix& m) {
        if (m.rows() == 0 || m.rows() != m.cols())
            throw DimMismatch("operator must be a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
        if (!m.allFinite()) throw InputError("operator has non-finite entries");
    }

    Matrix m_;
    double defect_ = 0.0;
};

class Projector;

/// A subspace of C^n held as a matrix with orthonormal columns (possibly none).
class Subspace {
public:
    /// Validates orthonormality of the columns within 1e-10.
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
        if (basis_.rows() == 0) throw InvalidSubspace("ambient dimension must be positive");
        const auto k = basis_.cols();
        if (k > basis_.rows()) throw InvalidSubspace("more basis vectors than the ambient dimension");
        if (k > 0) {
            const double err = (basis_.adjoint() * basis_ - Matrix::Identity(k, k)).norm();
            if (err > 1e-10) throw InvalidSubspace("basis is not orthonormal: error " + std::to_string(err));
        }
    }

    static Subspace zero(std::size_t n) { return Subspace(Matrix(static_cast<Eigen::Index>(n), 0), Trusted{}); }
    static Subspace full(std::size_t n) {
        const auto m = static_cast<Eigen::Index>(n);
        return Subspace(Matrix::Identity(m, m), Trusted{});
    }

    std::size_t dim() const { return static_cast<std::size_t>(basis_.rows()); }
    std::size_t rank() const { return static_cast<std::size_t>(basis_.cols()); }
    const Matrix& basis() const { return basis_; }

    Matrix projector_matrix() const { return basis_ * basis_.adjoint(); }

private:
    struct Trusted {};
    Subspace(Matrix basis, Trusted) : basis_(std::move(basis)) {}

    Matrix basis_;

    friend Subspace orthonormal_span(const Matrix& columns, std::size_t n, double rel_tol);
    friend Subspace eigen_subspace(const Matrix& vectors, const std::vector<Eigen::Index>& cols);
    friend Subspace largest_invariant_subspace(const HermitianOperator&, const Subspace&, const Tolerances&);
};

/// Orthonormal basis of the column span of `columns`, discarding singular
/// directions below `rel_tol` times the largest singular value.
inline Subspace orthonormal_span(const Matrix& columns, std::size_t n, double rel_tol) {
    if (columns.cols() == 0) return Subspace::zero(n);
    Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
    const RealVector& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return Subspace::zero(n);
    const double cutoff = rel_tol * s(0);
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > cutoff) ++r;
    return Subspace(Matrix(svd.matrixU().leftCols(r)), Subspace::Trusted{});
}

inline Subspace eigen_subspace(const Matrix& vectors, const std::vector<Eigen::Index>& cols) {
    Matrix b(vectors.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) b.col(static_cast<Eigen::Index>(j)) = vectors.col(cols[j]);
    return Subspace(std::move(b), Subspace::Trusted{});
}

/// Idempotent self-adjoint operator. Every Projector satisfies
/// |P^2 - P|_F <= 1e-9 * dim and has eigenvalues within 1e-9 of {0, 1}.
class Projector {
public:
    explicit Projector(const Matrix& m) {
        if (m.rows() == 0 || m.rows() != m.cols()) throw InvalidProjector("projector must be square and non-empty");
        const double n = static_cast<double>(m.rows());
        if ((m - m.adjoint()).norm() > 1e-9 * n) throw InvalidProjector("projector is not self-adjoint");
        Matrix h = 0.5 * (m + m.adjoint());
        if ((h * h - h).norm() > 1e-9 * n) throw InvalidProjector("projector is not idempotent");
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        if (es.info() != Eigen::Success) throw ConvergenceFailure("eigensolver failed while validating projector");
        std::vector<Eigen::Index> ones;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double l = es.eigenvalues()(i);
            if (std::abs(l) > 1e-9 && std::abs(l - 1.0) > 1e-9)
                throw InvalidProjector("projector eigenvalue " + std::to_string(l) + " is not in {0,1}");
            if (l > 0.5) ones.push_back(i);
        }
        range_ = eigen_subspace(es.eigenvectors(), ones);
        m_ = range_.projector_matrix();
    }

    static Projector onto(const Subspace& s) { return Projector(s); }
    static Projector zero(std::size_t n) { return Projector(Subspace::zero(n)); }
    static Projector identity(std::size_t n) { return Projector(Subspace::full(n)); }

    std::size_t dim() const { return range_.dim(); }
    std::size_t rank() const { return range_.rank(); }
    const Matrix& matrix() const { return m_; }
    const Subspace& range() const { return range_; }
    HermitianOperator as_operator() const { return HermitianOperator::symmetrized(m_); }

    /// I - P, the projector onto the orthogonal complement of the range.
    Projector complement() const {
        const auto n = static_cast<Eigen::Index>(dim());
        if (rank() == 0) return identity(dim());
        if (rank() == dim()) return zero(dim());
        Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Matrix::Identity(n, n) - m_));
        std::vector<Eigen::Index> ones;
        for (Eigen::Index i = 0; i < n; ++i)
            if (es.eigenvalues()(i) > 0.5) ones.push_back(i);
        return Projector(eigen_subspace(es.eigenvectors(), ones));
    }

private:
    explicit Projector(const Subspace& s) : m_(s.projector_matrix()), range_(s) {}

    Matrix m_;
    Subspace range_ = Subspace::zero(1);
};

/// |A - B|_F <= eq_abs_tol * max(1, |A|_F, |B|_F). This is the operator
/// equality used throughout the library.
inline bool matrices_equal(const Matrix& a, const Matrix& b, const Tolerances& tol = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimMismatch(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.rows()));
    return (a - b).norm() <= tol.eq_abs_tol * std::max({1.0, a.norm(), b.norm()});
}

inline bool op_equal(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    return matrices_equal(a.matrix(), b.matrix(), tol);
}

inline bool op_equal(const Projector& a, const Projector& b, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(a.dim(), b.dim());
    return matrices_equal(a.matrix(), b.matrix(), tol);
}

/// |AB - BA|_F <= eq_abs_tol * max(1, |A|_F |B|_F).
inline bool commutes(const Matrix& a, const Matrix& b, const Tolerances& tol = {}) {
    if (a.rows() != b.rows()) throw DimMismatch(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.rows()));
    return (a * b - b * a).norm() <= tol.eq_abs_tol * std::max(1.0, a.norm() * b.norm());
}

inline bool commutes(const HermitianOperator& a, const HermitianOperator& b, const Tolerances& tol = {}) {
    return commutes(a.matrix(), b.matrix(), tol);
}

struct Eigendecomposition {
    RealVector values;  // ascending
    Matrix vectors;     // unitary, columns are eigenvectors
};

inline Eigendecomposition eigh(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
    if (es.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

/// Largest eigenvalue magnitude (the operator 2-norm).
inline double spectral_norm(const HermitianOperator& a) {
    const auto e = eigh(a);
    return e.values.size() == 0 ? 0.0 : e.values.cwiseAbs().maxCoeff();
}

/// Range of `a`: eigenvectors whose eigenvalue magnitude exceeds
/// rank_rel_tol * max(max|lambda|, reference_scale). A positive
/// `reference_scale` lets a difference of two operators be cut relative to
/// the operands rather than to itself.
inline Subspace range_subspace(const HermitianOperator& a, const Tolerances& tol = {}, double reference_scale = 0.0) {
    const auto e = eigh(a);
    const double scale = std::max(e.values.cwiseAbs().maxCoeff(), reference_scale);
    if (scale == 0.0) return Subspace::zero(a.dim());
    const double cutoff = tol.rank_rel_tol * scale;
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
        if (std::abs(e.values(i)) > cutoff) cols.push_back(i);
    return eigen_subspace(e.vectors, cols);
}

inline Projector range_projector(const HermitianOperator& a, const Tolerances& tol = {}, double reference_scale = 0.0) {
    return Projector::onto(range_subspace(a, tol, reference_scale));
}

inline std::size_t numerical_rank(const HermitianOperator& a, const Tolerances& tol = {}) {
    return range_subspace(a, tol).rank();
}

/// True when scaling rank_rel_tol by 10 or 1/10 changes the numerical rank.
inline bool rank_tolerance_sensitive(const HermitianOperator& a, const Tolerances& tol = {}) {
    const auto e = eigh(a);
    const double scale = e.values.cwiseAbs().maxCoeff();
    if (scale == 0.0) return false;
    auto count = [&](double rel) {
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < e.values.size(); ++i)
            if (std::abs(e.values(i)) > rel * scale) ++r;
        return r;
    };
    const std::size_t nominal = count(tol.rank_rel_tol);
    return count(tol.rank_rel_tol * 10.0) != nominal || count(tol.rank_rel_tol / 10.0) != nominal;
}

/// R <= S in the projector order: RS = R.
inline bool proj_le(const Projector& r, const Projector& s, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(r.dim(), s.dim());
    return matrices_equal(r.matrix() * s.matrix(), r.matrix(), tol);
}

/// Projector onto ran P + ran Q. Directions of the two bases that agree to
/// within eq_abs_tol are the same direction: subspaces computed from nearby
/// eigenproblems differ by round-off amplified by the spectral gap.
inline Projector proj_join(const Projector& p, const Projector& q, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(p.dim(), q.dim());
    Matrix stacked(static_cast<Eigen::Index>(p.dim()), static_cast<Eigen::Index>(p.rank() + q.rank()));
    stacked << p.range().basis(), q.range().basis();
    return Projector::onto(orthonormal_span(stacked, p.dim(), tol.eq_abs_tol));
}

/// Projector onto ran P ∩ ran Q, the complement of the span of both complements.
inline Projector proj_meet(const Projector& p, const Projector& q, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(p.dim(), q.dim());
    return proj_join(p.complement(), q.complement(), tol).complement();
}

/// P B P, assembled as V·K·V* from the block K = V* B V over an orthonormal
/// basis V of ran P. Eigenvalues of K at or below rank_rel_tol·|B| are
/// dropped, so the rank of the result is decided against B's own scale and a
/// block that is pure round-off comes back as O. When P reduces B this is B·P.
inline HermitianOperator compress(const HermitianOperator& b, const Projector& p, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(b.dim(), p.dim());
    const auto n = static_cast<Eigen::Index>(b.dim());
    const Matrix& v = p.range().basis();
    if (v.cols() == 0) return HermitianOperator::zero(b.dim());
    const Matrix k = v.adjoint() * b.matrix() * v;
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (k + k.adjoint())));
    if (es.info() != Eigen::Success) throw ConvergenceFailure("eigensolver failed in compress");
    const double cutoff = tol.rank_rel_tol * spectral_norm(b);
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double l = es.eigenvalues()(i);
        if (std::abs(l) <= cutoff) continue;
        const Matrix w = v * es.eigenvectors().col(i);
        out += l * (w * w.adjoint());
    }
    return HermitianOperator::symmetrized(out);
}

/// Largest subspace S of `s0` with B·S ⊆ S. Iterates
/// S_{k+1} = {x in S_k : (I - P_k) B x = 0} until the dimension stops
/// dropping; at most dim(s0) + 1 passes.
inline Subspace largest_invariant_subspace(const HermitianOperator& b, const Subspace& s0, const Tolerances& tol = {}) {
    HermitianOperator::require_same_dim(b.dim(), s0.dim());
    const double scale = spectral_norm(b);
    Matrix u = s0.basis();
    if (scale == 0.0 || u.cols() == 0) return s0;
    const double cutoff = tol.rank_rel_tol * scale;
    const Matrix& bm = b.matrix();
    for (std::size_t pass = 0; pass <= s0.rank() && u.cols() > 0; ++pass) {
        const Matrix bu = bm * u;
        const Matrix residual = bu - u * (u.adjoint() * bu);
        Eigen::JacobiSVD<Matrix> svd(residual, Eigen::ComputeFullV);
        const RealVector& s = svd.singularValues();
        const Eigen::Index k = u.cols();
        Eigen::Index kept = 0;
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) <= cutoff) ++kept;
        if (kept == k) break;
        u = Matrix(u * svd.matrixV().rightCols(kept));
    }
    return Subspace(std::move(u), Subspace::Trusted{});
}

}  // namespace lol
