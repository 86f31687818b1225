#pragma once

// Shared helpers for the unit tests: operator comparison with a readable
// failure message and a few seeded generators.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lol/lol.hpp"

namespace lt {

using lol::HermitianOperator;
using lol::Projector;
using lol::Rng;

inline HermitianOperator diag(std::initializer_list<double> d) { return HermitianOperator::diagonal(d); }

inline Projector proj(std::initializer_list<double> d) { return lol::range_projector(diag(d)); }

inline ::testing::AssertionResult same_op(const HermitianOperator& a, const HermitianOperator& b,
                                          const lol::Tolerances& tol = {}) {
    if (lol::op_equal(a, b, tol)) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << lol::format_operator(a) << " != " << lol::format_operator(b);
}

inline ::testing::AssertionResult same_proj(const Projector& a, const Projector& b, const lol::Tolerances& tol = {}) {
    return same_op(a.as_operator(), b.as_operator(), tol);
}

/// Random projector of random rank.
inline Projector random_projector(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> k(0, n);
    return Projector::onto(lol::random_subspace(n, k(rng), rng));
}

/// A random element C·P of the segment below C.
inline HermitianOperator below(const HermitianOperator& c, Rng& rng) {
    return lol::detail::random_segment_element(c, rng);
}

/// Every sum of C's non-zero eigenspace projectors, including O.
inline std::vector<Projector> spectral_projectors(const HermitianOperator& c) {
    const auto atoms = lol::spectral_atoms(c);
    std::vector<Projector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
        Projector p = Projector::zero(c.dim());
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (mask & (std::size_t{1} << j)) p = lol::proj_join(p, atoms[j]);
        out.push_back(p);
    }
    return out;
}

}  // namespace lt
