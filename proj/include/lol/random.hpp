#pragma once

// Seeded generators for operators, unitaries and subspaces.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "lol/numerics.hpp"

namespace lol {

using Rng = std::mt19937_64;

/// Deterministic 64-bit seed mixing (splitmix64 finalizer over FNV-1a of the tag).
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const double re = g(rng);
            const double im = g(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

/// (G + G*)/2 for a complex Gaussian G.
inline HermitianOperator random_hermitian(std::size_t n, Rng& rng) {
    const Matrix g = gaussian_matrix(n, n, rng);
    return HermitianOperator::symmetrized(0.5 * (g + g.adjoint()));
}

/// random_hermitian redrawn until every eigenvalue, and every gap between
/// neighbouring eigenvalues, is at least `sep` times the spectral norm.
inline HermitianOperator random_separated_hermitian(std::size_t n, Rng& rng, double sep = 1e-2) {
    for (;;) {
        HermitianOperator c = random_hermitian(n, rng);
        const RealVector l = eigh(c).values;
        const double scale = l.cwiseAbs().maxCoeff();
        bool ok = scale > 0.0;
        for (Eigen::Index i = 0; ok && i < l.size(); ++i) {
            if (std::abs(l(i)) < sep * scale) ok = false;
            if (i > 0 && l(i) - l(i - 1) < sep * scale) ok = false;
        }
        if (ok) return c;
    }
}

/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
inline Matrix random_unitary(std::size_t n, Rng& rng) {
    const Matrix g = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
}

/// U·diag(values)·U* for a random unitary U.
inline HermitianOperator random_with_spectrum(const RealVector& values, Rng& rng) {
    const Matrix u = random_unitary(static_cast<std::size_t>(values.size()), rng);
    return HermitianOperator::symmetrized(u * values.cast<Complex>().asDiagonal() * u.adjoint());
}

/// Random operator of exact rank `rank` with Gaussian non-zero eigenvalues
/// bounded away from zero.
inline HermitianOperator random_hermitian_of_rank(std::size_t n, std::size_t rank, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    RealVector values = RealVector::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < rank && i < n; ++i) {
        double v = g(rng);
        v += v < 0 ? -0.25 : 0.25;
        values(static_cast<Eigen::Index>(i)) = v;
    }
    return random_with_spectrum(values, rng);
}

inline Subspace random_subspace(std::size_t n, std::size_t k, Rng& rng) {
    const Matrix u = random_unitary(n, rng);
    return Subspace(Matrix(u.leftCols(static_cast<Eigen::Index>(k))));
}

}  // namespace lol
