#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace lol;
using lt::diag;
using lt::proj;
using lt::same_op;
using lt::same_proj;

namespace {

const Complex I1(0.0, 1.0);

HermitianOperator ones2() { return HermitianOperator::real({{1, 1}, {1, 1}}); }
HermitianOperator swap2() { return HermitianOperator::real({{0, 1}, {1, 0}}); }

Projector line(double x, double y) {
    Matrix v(2, 1);
    const double n = std::hypot(x, y);
    v << x / n, y / n;
    return Projector::onto(Subspace(v));
}

}  // namespace

// ---- construction -------------------------------------------------------

TEST(Hermitian, RejectsNonSelfAdjoint) {
    Matrix m(2, 2);
    m << 1, 2, 0, 1;
    EXPECT_THROW(HermitianOperator{m}, NotHermitian);
}

TEST(Hermitian, SymmetrizesRoundOff) {
    Matrix m(2, 2);
    m << 1, Complex(2, 1e-13), Complex(2, -1e-13 + 1e-15), 3;
    const HermitianOperator a(m);
    EXPECT_EQ(a.matrix(), a.matrix().adjoint());
}

TEST(Hermitian, RejectsBadShape) {
    EXPECT_THROW(HermitianOperator{Matrix(2, 3)}, InputError);
    EXPECT_THROW(HermitianOperator{Matrix(0, 0)}, InputError);
}

TEST(Hermitian, DimMismatchOnArithmetic) {
    EXPECT_THROW(diag({1, 2}) + diag({1, 2, 3}), DimMismatch);
    EXPECT_THROW(op_equal(diag({1}), diag({1, 2})), DimMismatch);
}

TEST(Tolerances, Validation) {
    Tolerances t;
    EXPECT_NO_THROW(t.validate());
    t.rank_rel_tol = 0;
    EXPECT_THROW(t.validate(), InputError);
    t = {};
    t.eq_abs_tol = -1;
    EXPECT_THROW(t.validate(), InputError);
    t = {};
    EXPECT_DOUBLE_EQ(t.rank_rel_tol, 1e-9);
    EXPECT_DOUBLE_EQ(t.eq_abs_tol, 1e-8);
    EXPECT_EQ(t.max_dim, 64u);
}

// ---- eigh ---------------------------------------------------------------

TEST(Eigh, Zero) {
    const auto e = eigh(HermitianOperator::zero(2));
    EXPECT_EQ(e.values(0), 0.0);
    EXPECT_EQ(e.values(1), 0.0);
}

TEST(Eigh, Identity) {
    const auto e = eigh(HermitianOperator::identity(3));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.values(i), 1.0, 1e-12);
}

TEST(Eigh, AllOnes2x2) {
    const auto a = ones2();
    const auto e = eigh(a);
    EXPECT_NEAR(e.values(0), 0.0, 1e-12);
    EXPECT_NEAR(e.values(1), 2.0, 1e-12);
    for (int i = 0; i < 2; ++i)
        EXPECT_LT((a.matrix() * e.vectors.col(i) - e.values(i) * e.vectors.col(i)).norm(), 1e-12);
    // the kernel vector is (1, -1)/√2 up to phase
    EXPECT_NEAR(std::abs(e.vectors(0, 0) + e.vectors(1, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(e.vectors(0, 0)), 1 / std::sqrt(2.0), 1e-12);
}

TEST(Eigh, ReconstructsRandom) {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto a = random_hermitian(5, rng);
        const auto e = eigh(a);
        const Matrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LT((back - a.matrix()).norm(), 1e-9 * std::max(1.0, a.norm()));
        EXPECT_LT((e.vectors.adjoint() * e.vectors - Matrix::Identity(5, 5)).norm(), 1e-10);
        for (int i = 1; i < 5; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
    }
}

// ---- range projector ----------------------------------------------------

TEST(RangeProjector, Diagonal) { EXPECT_TRUE(same_proj(range_projector(diag({1, 2, 0})), proj({1, 1, 0}))); }

TEST(RangeProjector, Zero) { EXPECT_EQ(range_projector(HermitianOperator::zero(3)).rank(), 0u); }

TEST(RangeProjector, AllOnes) {
    const auto p = range_projector(ones2());
    EXPECT_TRUE(same_op(p.as_operator(), 0.5 * ones2()));
    EXPECT_TRUE(matrices_equal(p.matrix() * p.matrix(), p.matrix()));
    EXPECT_TRUE(matrices_equal(ones2().matrix() * p.matrix(), ones2().matrix()));
}

TEST(RangeProjector, CutoffIsRelative) {
    // 1e-12 next to 1 is dropped; alone it is the whole range.
    EXPECT_EQ(range_projector(diag({1, 1e-12})).rank(), 1u);
    EXPECT_EQ(range_projector(diag({1e-12, 0})).rank(), 1u);
}

TEST(RangeProjector, ReferenceScale) {
    EXPECT_EQ(range_projector(diag({1e-12, 0}), {}, 1.0).rank(), 0u);
}

TEST(RangeProjector, PropertiesOnRandomOperators) {
    Rng rng(3);
    const Tolerances tol;
    for (int k = 0; k < 200; ++k) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> rk(0, n);
        const auto a = random_hermitian_of_rank(n, rk(rng), rng);
        const auto p = range_projector(a, tol);
        const Matrix& m = p.matrix();
        EXPECT_TRUE(matrices_equal(m * m, m, tol));
        EXPECT_TRUE(matrices_equal(m, m.adjoint(), tol));
        EXPECT_LE((a.matrix() * m - a.matrix()).norm(), tol.eq_abs_tol * std::max(1.0, a.norm()));
        EXPECT_LE((m * a.matrix() - a.matrix()).norm(), tol.eq_abs_tol * std::max(1.0, a.norm()));
    }
}

TEST(RangeProjector, ScaleInvariant) {
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        std::uniform_int_distribution<std::size_t> rk(0, 4);
        const auto a = random_hermitian_of_rank(4, rk(rng), rng);
        const auto p = range_projector(a);
        for (double c : {-2.0, 0.5, 3.0}) EXPECT_TRUE(same_proj(range_projector(c * a), p));
    }
}

TEST(RangeProjector, ToleranceSensitivity) {
    EXPECT_TRUE(rank_tolerance_sensitive(diag({1, 3e-9})));
    EXPECT_FALSE(rank_tolerance_sensitive(diag({1, 1e-3, 0})));
    EXPECT_FALSE(rank_tolerance_sensitive(HermitianOperator::zero(2)));
}

// ---- subspaces and projectors ------------------------------------------

TEST(Subspace, RejectsNonOrthonormal) {
    Matrix v(2, 1);
    v << 1, 1;
    EXPECT_THROW(Subspace{v}, InvalidSubspace);
}

TEST(Subspace, RoundTrip) {
    Rng rng(8);
    for (int k = 0; k < 50; ++k) {
        std::uniform_int_distribution<std::size_t> rk(0, 5);
        const auto s = random_subspace(5, rk(rng), rng);
        const Projector p = Projector::onto(s);
        const Projector q(p.matrix());
        EXPECT_EQ(q.rank(), s.rank());
        EXPECT_LT((q.range().projector_matrix() - s.projector_matrix()).norm(), 1e-9);
    }
}

TEST(Projector, RejectsNonIdempotent) {
    Matrix m(2, 2);
    m << 0.5, 0, 0, 1;
    EXPECT_THROW(Projector{m}, InvalidProjector);
}

TEST(Projector, Complement) {
    EXPECT_TRUE(same_proj(proj({1, 0, 0}).complement(), proj({0, 1, 1})));
    EXPECT_EQ(Projector::identity(3).complement().rank(), 0u);
    EXPECT_EQ(Projector::zero(3).complement().rank(), 3u);
}

TEST(ProjMeet, Examples) {
    EXPECT_TRUE(same_proj(proj_meet(proj({1, 1, 0}), proj({0, 1, 1})), proj({0, 1, 0})));
    const Projector p = proj({1, 0, 1});
    EXPECT_TRUE(same_proj(proj_meet(p, Projector::identity(3)), p));
    EXPECT_EQ(proj_meet(line(1, 0), line(1, 1)).rank(), 0u);
}

TEST(ProjJoin, Examples) {
    EXPECT_TRUE(same_proj(proj_join(proj({1, 0, 0}), proj({0, 1, 0})), proj({1, 1, 0})));
    const Projector p = proj({0, 1, 1});
    EXPECT_TRUE(same_proj(proj_join(p, Projector::zero(3)), p));
    EXPECT_EQ(proj_join(line(1, 0), line(1, 1)).rank(), 2u);
}

TEST(ProjLattice, LawsOnRandomTriples) {
    Rng rng(21);
    for (int k = 0; k < 150; ++k) {
        const auto p = lt::random_projector(4, rng);
        const auto q = lt::random_projector(4, rng);
        const auto r = lt::random_projector(4, rng);
        EXPECT_TRUE(same_proj(proj_meet(p, q), proj_meet(q, p)));
        EXPECT_TRUE(same_proj(proj_join(p, q), proj_join(q, p)));
        EXPECT_TRUE(same_proj(proj_meet(p, p), p));
        EXPECT_TRUE(same_proj(proj_join(p, p), p));
        EXPECT_TRUE(same_proj(proj_meet(proj_meet(p, q), r), proj_meet(p, proj_meet(q, r))));
        EXPECT_TRUE(same_proj(proj_join(proj_join(p, q), r), proj_join(p, proj_join(q, r))));
        EXPECT_TRUE(same_proj(proj_meet(p, proj_join(p, q)), p));
        EXPECT_TRUE(same_proj(proj_join(p, proj_meet(p, q)), p));
    }
}

TEST(ProjLattice, MeetIsGreatestJoinIsLeast) {
    Rng rng(22);
    for (int k = 0; k < 40; ++k) {
        // P and Q share a random common part so the meet is usually non-zero.
        const Matrix u = random_unitary(5, rng);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<Eigen::Index> pc, qc, common;
        for (Eigen::Index i = 0; i < 5; ++i) {
            const bool inp = coin(rng), inq = coin(rng);
            if (inp) pc.push_back(i);
            if (inq) qc.push_back(i);
            if (inp && inq) common.push_back(i);
        }
        const auto p = Projector::onto(eigen_subspace(u, pc));
        const auto q = Projector::onto(eigen_subspace(u, qc));
        const auto m = proj_meet(p, q);
        const auto j = proj_join(p, q);
        EXPECT_TRUE(proj_le(m, p) && proj_le(m, q));
        EXPECT_TRUE(proj_le(p, j) && proj_le(q, j));
        for (int t = 0; t < 20; ++t) {
            // R ≤ P, Q: random subspaces of the common part; R ≥ P, Q: the join plus extra.
            std::vector<Eigen::Index> rc, sc;
            for (auto i : common)
                if (coin(rng)) rc.push_back(i);
            for (Eigen::Index i = 0; i < 5; ++i) {
                const bool in_j = std::count(pc.begin(), pc.end(), i) || std::count(qc.begin(), qc.end(), i);
                if (in_j || coin(rng)) sc.push_back(i);
            }
            EXPECT_TRUE(proj_le(Projector::onto(eigen_subspace(u, rc)), m));
            EXPECT_TRUE(proj_le(j, Projector::onto(eigen_subspace(u, sc))));
        }
    }
}

// ---- equality and commutation -------------------------------------------

TEST(OpEqual, Examples) {
    const auto a = HermitianOperator::real({{1, 2}, {2, -1}});
    EXPECT_TRUE(op_equal(a, a));
    EXPECT_FALSE(op_equal(diag({1, 0}), diag({0, 1})));
    EXPECT_TRUE(op_equal(a, a + 1e-12 * HermitianOperator::identity(2)));
    EXPECT_FALSE(op_equal(a, a + 1e-6 * HermitianOperator::identity(2)));
}

TEST(Commutes, Examples) {
    EXPECT_TRUE(commutes(diag({1, 2, 3}), diag({4, 0, -1})));
    EXPECT_FALSE(commutes(diag({1, 2}), swap2()));
    const auto a = HermitianOperator::real({{1, 2}, {2, -1}});
    EXPECT_TRUE(commutes(a, HermitianOperator::identity(2)));
}

TEST(ComplexEntries, Supported) {
    Matrix m(2, 2);
    m << 1, -I1, I1, 1;
    const HermitianOperator a(m);
    EXPECT_EQ(numerical_rank(a), 1u);
    EXPECT_TRUE(matrices_equal(a.matrix() * range_projector(a).matrix(), a.matrix()));
}

// ---- invariant subspaces -----------------------------------------------

TEST(InvariantSubspace, Eigenvector) {
    Matrix e1 = Matrix::Zero(3, 1);
    e1(0, 0) = 1;
    const auto s = largest_invariant_subspace(diag({1, 5, 7}), Subspace(e1));
    EXPECT_EQ(s.rank(), 1u);
}

TEST(InvariantSubspace, FullSpace) {
    Rng rng(1);
    const auto b = random_hermitian(4, rng);
    EXPECT_EQ(largest_invariant_subspace(b, Subspace::full(4)).rank(), 4u);
}

TEST(InvariantSubspace, SwapHasNoInvariantLine) {
    Matrix e1 = Matrix::Zero(2, 1);
    e1(0, 0) = 1;
    EXPECT_EQ(largest_invariant_subspace(swap2(), Subspace(e1)).rank(), 0u);
}

TEST(InvariantSubspace, PropertiesOnRandomInputs) {
    Rng rng(17);
    const Tolerances tol;
    for (int k = 0; k < 100; ++k) {
        const auto b = random_separated_hermitian(5, rng);
        // S0 = a random spectral subspace of B plus a random extra direction,
        // so the answer is known to contain the spectral part.
        const auto e = eigh(b);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<Eigen::Index> cols;
        for (Eigen::Index i = 0; i < 5; ++i)
            if (coin(rng)) cols.push_back(i);
        Matrix stacked(5, static_cast<Eigen::Index>(cols.size()) + 1);
        for (std::size_t j = 0; j < cols.size(); ++j) stacked.col(static_cast<Eigen::Index>(j)) = e.vectors.col(cols[j]);
        stacked.col(stacked.cols() - 1) = gaussian_matrix(5, 1, rng);
        const Subspace s0 = orthonormal_span(stacked, 5, 1e-9);
        const Subspace s = largest_invariant_subspace(b, s0, tol);
        const Projector ps = Projector::onto(s), p0 = Projector::onto(s0);
        EXPECT_TRUE(proj_le(ps, p0, tol));
        const auto n = static_cast<Eigen::Index>(5);
        EXPECT_LE(((Matrix::Identity(n, n) - ps.matrix()) * b.matrix() * ps.matrix()).norm(),
                  tol.eq_abs_tol * std::max(1.0, b.norm()));
        EXPECT_TRUE(commutes(ps.matrix(), b.matrix(), tol));
        const Projector known = Projector::onto(eigen_subspace(e.vectors, cols));
        EXPECT_TRUE(proj_le(known, ps, tol));
    }
}

// ---- compress -----------------------------------------------------------

TEST(Compress, ReducingProjectorGivesBP) {
    const auto b = diag({1, 5, 7});
    EXPECT_TRUE(same_op(compress(b, proj({1, 0, 1})), diag({1, 0, 7})));
}

TEST(Compress, RoundOffBlockIsZero) {
    Rng rng(4);
    const auto b = random_hermitian(4, rng);
    const auto p = range_projector(b);
    const auto z = compress(b, p.complement());
    EXPECT_EQ(z.norm(), 0.0);
}

// ---- seeding ------------------------------------------------------------

TEST(Random, SeedMixingIsDeterministicAndTagged) {
    EXPECT_EQ(mix_seed(7, "a"), mix_seed(7, "a"));
    EXPECT_NE(mix_seed(7, "a"), mix_seed(7, "b"));
    EXPECT_NE(mix_seed(7, "a"), mix_seed(8, "a"));
    Rng r1(1), r2(1);
    EXPECT_TRUE(op_equal(random_hermitian(3, r1), random_hermitian(3, r2)));
}

TEST(Random, SeparatedSpectrum) {
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        const auto l = eigh(random_separated_hermitian(6, rng)).values;
        const double s = l.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < l.size(); ++i) {
            EXPECT_GE(std::abs(l(i)), 1e-2 * s);
            if (i) {
                EXPECT_GE(l(i) - l(i - 1), 1e-2 * s);
            }
        }
    }
}
