#include "conicpos/poly.hpp"

#include "support/instances.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace conicpos;
using conicpos::testing::Rng;
using Q = Rational;

namespace {

Poly linear(const Q& root) { return Poly({-root, Q(1)}); }

Poly power(const Poly& p, int k)
{
    Poly r = Poly::constant(1);
    for (int i = 0; i < k; ++i)
        r = r * p;
    return r;
}

} // namespace

TEST(Poly, Arithmetic)
{
    const Poly p({Q(1), Q(2), Q(1)}); // (x+1)^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Q(-1)), 0);
    EXPECT_EQ(p(Q(2)), 9);
    EXPECT_EQ(p.derivative(), Poly({Q(2), Q(2)}));
    EXPECT_EQ(p * linear(3), Poly({Q(-3), Q(-5), Q(-1), Q(1)}));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p + (-p)).degree(), -1);
    EXPECT_EQ(Poly({Q(2), Q(4)}).monic(), Poly({Q(1, 2), Q(1)}));
}

TEST(Poly, DivisionReconstructs)
{
    Rng rng(60);
    for (int i = 0; i < 500; ++i) {
        std::vector<Q> a(static_cast<std::size_t>(rng.uniform(1, 7))), b(static_cast<std::size_t>(rng.uniform(1, 4)));
        for (Q& x : a)
            x = rng.small(-5, 5);
        for (Q& x : b)
            x = rng.small(-5, 5);
        b.back() = rng.positive();
        const Poly pa(a), pb(b);
        const auto [q, r] = divmod(pa, pb);
        ASSERT_EQ(q * pb + r, pa);
        ASSERT_LT(r.degree(), pb.degree());
    }
}

TEST(Poly, GcdOfSharedFactors)
{
    const Poly g = linear(Q(1, 2)) * Poly({Q(-2), Q(0), Q(1)});
    const Poly a = g * linear(3), b = g * linear(-7) * linear(5);
    EXPECT_EQ(gcd(a, b), g.monic());
    EXPECT_EQ(gcd(linear(1), linear(2)).degree(), 0);
}

TEST(Poly, SquarefreeDecomposition)
{
    const Poly p = linear(1) * power(linear(2), 2) * power(Poly({Q(-2), Q(0), Q(1)}), 3);
    const auto parts = squarefree_decomposition(p * Poly::constant(-3));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0], linear(1));
    EXPECT_EQ(parts[1], linear(2));
    EXPECT_EQ(parts[2], Poly({Q(-2), Q(0), Q(1)}));
}

TEST(RealRoots, MixedRationalAndIrrational)
{
    // -3 triple, -sqrt 2, 1 double, sqrt 2
    const Poly p = power(linear(-3), 3) * Poly({Q(-2), Q(0), Q(1)}) * power(linear(1), 2);
    const auto roots = real_roots(p);
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_TRUE(roots[0].exact());
    EXPECT_EQ(roots[0].lo, -3);
    EXPECT_EQ(roots[0].multiplicity, 3);
    EXPECT_EQ(roots[1].multiplicity, 1);
    EXPECT_NEAR(roots[1].approx(), -std::sqrt(2.0), 1e-9);
    EXPECT_EQ(compare(roots[1], Q(-1)), -1);
    EXPECT_EQ(compare(roots[1], Q(-2)), 1);
    EXPECT_EQ(roots[2].multiplicity, 2);
    EXPECT_EQ(compare(roots[2], Q(1)), 0);
    EXPECT_NEAR(roots[3].approx(), std::sqrt(2.0), 1e-9);
    EXPECT_EQ(compare(roots[1], roots[3]), -1);
    EXPECT_EQ(compare(roots[3], roots[3]), 0);
    EXPECT_EQ(distinct_root_count(p), 4);
}

TEST(RealRoots, NoRealRoots)
{
    EXPECT_TRUE(real_roots(Poly({Q(1), Q(0), Q(1)})).empty());
    EXPECT_TRUE(real_roots(Poly::constant(5)).empty());
}

TEST(RealRoots, CloseRootsSeparated)
{
    const Poly p = linear(Q(1, 1000000)) * linear(Q(2, 1000000)) * Poly({Q(-3), Q(0), Q(1)});
    const auto roots = real_roots(p);
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_EQ(compare(roots[1], Q(1, 1000000)), 0);
    EXPECT_EQ(compare(roots[2], Q(2, 1000000)), 0);
}

TEST(RealRoots, ConstructedRootsRecovered)
{
    // products of linear factors and irreducible quadratics with known
    // discriminant signs; the count and multiplicities are known in advance
    Rng rng(61);
    for (int trial = 0; trial < 1000; ++trial) {
        std::map<Q, int> want;
        Poly p = Poly::constant(conicpos::testing::random_factor(rng));
        const int linear_count = rng.uniform(0, 4);
        for (int i = 0; i < linear_count; ++i) {
            const Q r = rng.small(-3, 3, {1, 2, 3});
            ++want[r];
            p = p * linear(r);
        }
        int irrational = 0;
        if (rng.coin()) {
            // x^2 - k with k not a square: two irrational roots
            const Q k = rng.pick(std::vector<Q>{Q(2), Q(3), Q(5), Q(1, 2)});
            p = p * Poly({-k, Q(0), Q(1)});
            irrational = 2;
        }
        if (rng.coin())
            p = p * Poly({Q(1), Q(1), Q(1)}); // no real roots
        if (p.degree() < 1)
            continue;
        const auto roots = real_roots(p);
        int rational_seen = 0, irrational_seen = 0;
        for (const auto& r : roots) {
            if (r.exact()) {
                ASSERT_EQ(want.count(r.lo), 1u);
                ASSERT_EQ(r.multiplicity, want[r.lo]);
                ++rational_seen;
            } else {
                ASSERT_EQ(r.multiplicity, 1);
                ++irrational_seen;
            }
        }
        ASSERT_EQ(rational_seen, static_cast<int>(want.size()));
        ASSERT_EQ(irrational_seen, irrational);
        for (std::size_t i = 1; i < roots.size(); ++i)
            ASSERT_EQ(compare(roots[i - 1], roots[i]), -1);
    }
}

TEST(RealRoots, SimplestBetween)
{
    EXPECT_EQ(simplest_between(Q(-1, 2), Q(3, 2)), 0);
    EXPECT_EQ(simplest_between(Q(7, 3), Q(11, 3)), 3);
    const Q x = simplest_between(Q(1, 3), Q(1, 2));
    EXPECT_GT(x, Q(1, 3));
    EXPECT_LT(x, Q(1, 2));
}
