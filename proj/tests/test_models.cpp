#include <gtest/gtest.h>

#include "support.hpp"

using namespace lol;

namespace {

const std::vector<std::string> U = {"1", "2", "3"};

Pf pf(std::map<std::string, std::string> m) { return Pf(U, std::move(m)); }

IntRv rv(std::vector<long long> v) { return IntRv(std::move(v)); }

using Rvd = RandomVariable<double>;

}  // namespace

// ---- partial functions --------------------------------------------------------

TEST(PfUnion, Examples) {
    EXPECT_EQ(pf_union(pf({{"1", "a"}}), pf({{"2", "b"}})), pf({{"1", "a"}, {"2", "b"}}));
    const auto phi = pf({{"1", "a"}, {"3", "b"}});
    EXPECT_EQ(pf_union(phi, Pf::empty(U)), phi);
    try {
        pf_union(pf({{"1", "a"}}), pf({{"1", "b"}, {"2", "c"}}));
        FAIL() << "expected Conflict";
    } catch (const Conflict& e) {
        EXPECT_EQ(e.key(), "1");
    }
    EXPECT_FALSE(try_pf_union(pf({{"1", "a"}}), pf({{"1", "b"}})).has_value());
}

TEST(PfUnion, DomainIsUnion) {
    const auto all = all_partial_functions(U, std::vector<std::string>{"a", "b"});
    for (const auto& f : all)
        for (const auto& g : all) {
            auto u = try_pf_union(f, g);
            if (!u) continue;
            auto d = f.domain();
            const auto dg = g.domain();
            d.insert(dg.begin(), dg.end());
            EXPECT_EQ(u->domain(), d);
        }
}

TEST(PfIntersect, Examples) {
    EXPECT_EQ(pf_intersect(pf({{"1", "a"}, {"2", "b"}}), pf({{"1", "a"}, {"3", "c"}})), pf({{"1", "a"}}));
    const auto phi = pf({{"2", "b"}});
    EXPECT_EQ(pf_intersect(phi, phi), phi);
    EXPECT_EQ(pf_intersect(pf({{"1", "a"}}), pf({{"1", "b"}})), Pf::empty(U));
}

TEST(PfIntersect, DomainInclusionCanBeStrict) {
    const auto f = pf({{"1", "a"}}), g = pf({{"1", "b"}});
    EXPECT_TRUE(pf_intersect(f, g).domain().empty());
    EXPECT_EQ(f.domain().size(), 1u);  // dom f ∩ dom g = {1} ⊋ dom(f ∩ g)
}

TEST(PfPerp, Examples) {
    EXPECT_TRUE(pf_perp(pf({{"1", "a"}}), pf({{"2", "b"}})));
    EXPECT_TRUE(pf_perp(pf({{"1", "a"}}), Pf::empty(U)));
    EXPECT_FALSE(pf_perp(pf({{"1", "a"}}), pf({{"1", "a"}})));
}

TEST(PfSkew, Examples) {
    EXPECT_EQ(pf_skew_intersect(pf({{"1", "a"}, {"2", "b"}}), pf({{"1", "a"}, {"3", "c"}})), pf({{"1", "a"}}));
    const auto phi = pf({{"1", "a"}, {"3", "b"}});
    EXPECT_EQ(pf_skew_intersect(phi, phi), phi);
    // ψ restricted to the common domain keeps ψ's value
    EXPECT_EQ(pf_skew_intersect(pf({{"1", "a"}}), pf({{"1", "b"}})), pf({{"1", "b"}}));
}

TEST(PfSkew, Characterisations) {
    const auto all = all_partial_functions(U, std::vector<std::string>{"a", "b"});
    for (const auto& x : all)
        for (const auto& y : all) {
            const auto s = pf_skew_intersect(x, y);
            EXPECT_EQ(pf_le(x, y), s == x);
            EXPECT_EQ(pf_perp(x, y), s == Pf::empty(U));
            EXPECT_EQ(pf_overridden(y, x), s == y);
        }
}

TEST(Pf, UniverseChecks) {
    EXPECT_THROW(Pf(U, {{"4", "a"}}), UnknownElement);
    const Pf other(std::vector<std::string>{"1", "2"}, {});
    EXPECT_THROW(pf_union(pf({}), other), UniverseMismatch);
}

TEST(Pf, CarrierSize) {
    EXPECT_EQ(all_partial_functions(U, std::vector<std::string>{"a", "b"}).size(), 27u);
}

// ---- random variables -------------------------------------------------------

TEST(RvLe, Examples) {
    EXPECT_TRUE(rv_le(rv({0, 0, 0}), rv({3, 1, 2})));
    EXPECT_TRUE(rv_le(rv({1, 2, 0}), rv({1, 2, 7})));
    EXPECT_FALSE(rv_le(rv({1, 2, 0}), rv({1, 5, 7})));
}

TEST(RvMeet, Examples) {
    EXPECT_EQ(rv_meet(rv({1, 2, 0}), rv({1, 5, 7})).values(), (std::vector<long long>{1, 0, 0}));
    const auto f = rv({2, 0, 1});
    EXPECT_TRUE(rv_equal(rv_meet(f, f), f));
    EXPECT_EQ(rv_meet(IntRv({1, 0}), IntRv({0, 2})).values(), (std::vector<long long>{0, 0}));
}

TEST(RvMeet, IsGlbOverSupportRestrictions) {
    const auto f = rv({1, 2, 0}), g = rv({1, 5, 7});
    const auto m = rv_meet(f, g);
    for (const auto& base : {f, g})
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<long long> v(3, 0);
            for (int i = 0; i < 3; ++i)
                if (mask & (1 << i)) v[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
            const IntRv d(v);
            if (rv_le(d, f) && rv_le(d, g)) {
                EXPECT_TRUE(rv_le(d, m));
            }
        }
}

TEST(RvJoinBounded, Examples) {
    EXPECT_EQ(rv_join_bounded(rv({1, 0, 0}), rv({0, 5, 0}), rv({1, 5, 7})).values(),
              (std::vector<long long>{1, 5, 0}));
    const auto f = rv({1, 2, 0});
    EXPECT_TRUE(rv_equal(rv_join_bounded(f, f, f), f));
    EXPECT_THROW(rv_join_bounded(rv({1, 0, 0}), rv({2, 0, 0}), rv({2, 0, 0})), NotUpperBound);
}

TEST(RvOsum, Examples) {
    EXPECT_TRUE(rv_perp(IntRv({1, 0}), IntRv({0, 2})));
    EXPECT_EQ(rv_osum(IntRv({1, 0}), IntRv({0, 2})).values(), (std::vector<long long>{1, 2}));
    const auto f = rv({1, 0, 2});
    EXPECT_TRUE(rv_equal(rv_osum(f, IntRv::zero(3)), f));
    EXPECT_THROW(rv_osum(IntRv({1, 1}), IntRv({0, 2})), NotOrthogonal);
}

TEST(RvBck, Examples) {
    EXPECT_EQ(rv_bck(rv({1, 5, 7}), rv({1, 2, 0})).values(), (std::vector<long long>{0, 5, 7}));
    const auto g = rv({2, 1, 0});
    EXPECT_TRUE(rv_equal(rv_bck(g, IntRv::zero(3)), g));
    EXPECT_TRUE(rv_equal(rv_bck(g, g), IntRv::zero(3)));
}

TEST(RvBck, IsGMinusMeet) {
    const auto all = all_random_variables<long long>(3, {0, 1, 2});
    for (const auto& g : all)
        for (const auto& f : all) {
            const auto m = rv_meet(f, g);
            const auto d = rv_bck(g, f);
            for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(d[i], g[i] - m[i]);
        }
}

TEST(RvSkew, Examples) {
    EXPECT_EQ(rv_skew_meet(rv({1, 2, 0}), rv({1, 5, 7})).values(), (std::vector<long long>{1, 5, 0}));
    const auto f = rv({0, 2, 1});
    EXPECT_TRUE(rv_equal(rv_skew_meet(f, f), f));
    EXPECT_TRUE(rv_equal(rv_skew_meet(IntRv::zero(3), rv({1, 2, 3})), IntRv::zero(3)));
}

TEST(Rv, FloatModeUsesThreshold) {
    const Rvd f({1.0, 1e-13, 0.0});
    EXPECT_EQ(f.support().size(), 1u);
    EXPECT_THROW(Rvd({1.0, std::nan("")}), InputError);
    EXPECT_THROW(Rvd(std::vector<double>{}), InputError);
}

// ---- embeddings -----------------------------------------------------------

TEST(Embedding, Diagonal) {
    EXPECT_TRUE(lt::same_op(rv_to_diagonal(rv({1, 2, 0})), lt::diag({1, 2, 0})));
    EXPECT_EQ(rv_to_diagonal(IntRv::zero(3)).norm(), 0.0);
    EXPECT_TRUE(lt::same_op(rv_to_diagonal(rv_meet(rv({1, 2, 0}), rv({1, 5, 7}))),
                            meet(rv_to_diagonal(rv({1, 2, 0})), rv_to_diagonal(rv({1, 5, 7})))));
}

TEST(Embedding, PartialFunction) {
    const auto p = rv_to_partial_function(rv({1, 0, 7}));
    EXPECT_EQ(p.mapping(), (std::map<std::size_t, long long>{{0, 1}, {2, 7}}));
    EXPECT_TRUE(rv_to_partial_function(IntRv::zero(3)).mapping().empty());
    const auto f = rv({1, 0, 0}), g = rv({0, 5, 0});
    auto u = try_pf_union(rv_to_partial_function(f), rv_to_partial_function(g));
    auto j = rv_join(f, g);
    ASSERT_TRUE(u && j);
    EXPECT_EQ(*u, rv_to_partial_function(*j));
}

TEST(Embedding, OrderEmbeddings) {
    const auto all = all_random_variables<long long>(3, {0, 1, 2});
    for (const auto& f : all)
        for (const auto& g : all) {
            EXPECT_EQ(rv_le(f, g), logical_le(rv_to_diagonal(f), rv_to_diagonal(g)));
            EXPECT_EQ(rv_le(f, g), pf_le(rv_to_partial_function(f), rv_to_partial_function(g)));
            EXPECT_EQ(rv_perp(f, g), orthogonal(rv_to_diagonal(f), rv_to_diagonal(g)));
            EXPECT_EQ(rv_perp(f, g), pf_perp(rv_to_partial_function(f), rv_to_partial_function(g)));
            EXPECT_EQ(rv_overridden(f, g), overridden(rv_to_diagonal(f), rv_to_diagonal(g)));
        }
}

// ---- harness structures ------------------------------------------------------

TEST(ModelStructures, Formatting) {
    EXPECT_EQ(format_pf(pf({{"1", "a"}, {"2", "b"}})), "{1↦a,2↦b}");
    EXPECT_EQ(format_rv(rv({1, 2, 0})), "(1,2,0)");
    EXPECT_EQ(pf_structure().carrier->size(), 27u);
    EXPECT_EQ(rv_structure().carrier->size(), 27u);
}
