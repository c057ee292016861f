#include "conicpos/conic.hpp"

#include "support/instances.hpp"

#include <gtest/gtest.h>

using namespace conicpos;
using conicpos::testing::Rng;
using Q = Rational;

namespace {

Conic<Q> diag(Q a, Q b, Q c) { return Conic<Q>{a, 0, 0, b, 0, c}; }

} // namespace

TEST(ConicFromEquation, Examples)
{
    EXPECT_EQ(conic_from_equation<Q>(1, 0, 1, 0, 0, -1), diag(1, 1, -1));
    const Conic<Q> p = conic_from_equation<Q>(1, 0, 0, 0, -2, 0);
    EXPECT_EQ(p, (Conic<Q>{1, 0, 0, 0, -1, 0}));
    EXPECT_EQ(conic_from_equation<Q>(0, 2, 0, 0, 0, 0), (Conic<Q>{0, 1, 0, 0, 0, 0}));
}

TEST(ConicFromEquation, AllZeroRejected)
{
    try {
        conic_from_equation<Q>(0, 0, 0, 0, 0, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AllZero);
    }
}

TEST(ConicFromEquation, EvaluatesLikeThePolynomial)
{
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<Q, 6> k;
        for (Q& x : k)
            x = rng.small(-9, 9, {1, 2, 5});
        if (std::all_of(k.begin(), k.end(), [](const Q& x) { return sgn(x) == 0; }))
            k[0] = 1;
        const Conic<Q> c = conic_from_equation(k[0], k[1], k[2], k[3], k[4], k[5]);
        EXPECT_EQ(equation_of(c), k);
        for (int i = 0; i < 100; ++i) {
            const Q x = rng.small(-20, 20, {1, 3, 7}), y = rng.small(-20, 20, {1, 3, 7});
            const Q poly = k[0] * x * x + k[1] * x * y + k[2] * y * y + k[3] * x + k[4] * y + k[5];
            ASSERT_EQ(evaluate(c, x, y), poly);
        }
    }
}

TEST(ClassifyType, Examples)
{
    EXPECT_EQ(classify_type(diag(1, 1, -1)), ConicClass::RealEllipse);
    EXPECT_EQ(classify_type(diag(1, 1, 1)), ConicClass::ImaginaryEllipse);
    EXPECT_EQ(classify_type(Conic<Q>{1, 0, 0, 0, -1, 0}), ConicClass::Parabola);
    EXPECT_EQ(classify_type(diag(1, -1, 1)), ConicClass::Hyperbola);
}

TEST(ClassifyType, Degenerate)
{
    EXPECT_EQ(classify_type(diag(1, -1, 0)), ConicClass::Degenerate); // two lines
    EXPECT_EQ(classify_type(diag(1, 1, 0)), ConicClass::Degenerate);  // a point
    EXPECT_EQ(classify_type(diag(1, 0, -1)), ConicClass::Degenerate); // parallel lines
}

TEST(ClassifyType, InvariantUnderScaling)
{
    const std::vector<Conic<Q>> conics{diag(1, 1, -1), diag(1, 1, 1), Conic<Q>{1, 0, 0, 0, -1, 0}, diag(1, -1, 1),
                                       diag(1, -1, 0), Conic<Q>{2, 1, 3, 5, -1, -7}};
    for (const auto& c : conics)
        for (const Q k : {Q(-3), Q(-1), Q(1, 2), Q(7)})
            EXPECT_EQ(classify_type(scaled(c, k)), classify_type(c)) << c << " k=" << k;
}

TEST(ClassifyType, FloatBelowToleranceIsIndeterminate)
{
    // x^2 - 2y with a 1e-14 xy perturbation: the quadratic determinant is noise
    const Conic<ApproxScalar> c{ApproxScalar(1.0), ApproxScalar(1e-14), ApproxScalar(0.0),
                                ApproxScalar(1e-28), ApproxScalar(-1.0), ApproxScalar(0.0)};
    try {
        classify_type(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IndeterminateSign);
    }
    // in the parabola role the same conic is accepted
    EXPECT_NO_THROW(normalize(c, ConicClass::Parabola));
}

TEST(Normalize, Examples)
{
    EXPECT_EQ(normalize(diag(-1, -1, 1), ConicClass::RealEllipse), diag(1, 1, -1));
    const Conic<Q> p{1, 0, 0, 0, -1, 0};
    EXPECT_LT(sgn(det(p)), 0);
    EXPECT_EQ(normalize(p, ConicClass::Parabola), p);
    EXPECT_EQ(normalize(diag(-1, 1, -1), ConicClass::Hyperbola), diag(1, -1, 1));
}

TEST(Normalize, Idempotent)
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto inst = conicpos::testing::random_hyperbola(rng);
        const auto [h, c] = inst.conics();
        const Q k = conicpos::testing::random_factor(rng);
        const Conic<Q> nh = normalize(scaled(h, k), ConicClass::Hyperbola);
        const Conic<Q> nc = normalize(scaled(c, k), ConicClass::RealEllipse);
        EXPECT_EQ(normalize(nh, ConicClass::Hyperbola), nh);
        EXPECT_EQ(normalize(nc, ConicClass::RealEllipse), nc);
        EXPECT_LT(sgn(det(nh)), 0);
        EXPECT_GT(sgn(nc.m11), 0);
        EXPECT_LT(sgn(det(nc)), 0);
    }
}

TEST(Normalize, RoleMismatch)
{
    for (const auto& [c, role] : std::vector<std::pair<Conic<Q>, ConicClass>>{
             {diag(1, 1, -1), ConicClass::Parabola},
             {diag(1, -1, 1), ConicClass::RealEllipse},
             {diag(1, 1, 1), ConicClass::RealEllipse},
             {diag(1, 1, -1), ConicClass::Degenerate}}) {
        try {
            normalize(c, role);
            ADD_FAILURE() << c;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::RoleMismatch);
        }
    }
}
