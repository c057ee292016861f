#include "conicpos/numeric.hpp"

#include "support/instances.hpp"

#include <gtest/gtest.h>

using namespace conicpos;
using conicpos::testing::Rng;
using Q = Rational;

namespace {

[[maybe_unused]] const bool wide_precision = (mpf_set_default_prec(256), true);

// sqrt(d) to 256 bits, the reference for the exact sign routines
mpf_class wide_sqrt(const Q& d)
{
    mpf_class x(d, 256);
    return sqrt(x);
}

mpf_class wide(const Q& q) { return mpf_class(q, 256); }

mpf_class wide(const QuadExt& x) { return wide(x.p()) + wide(x.q()) * wide_sqrt(x.d()); }

} // namespace

TEST(SignRational, Examples)
{
    EXPECT_EQ(sign_rational(Q(0)), Sign::Zero);
    EXPECT_EQ(sign_rational(Q(-3, 7)), Sign::Negative);
    EXPECT_EQ(sign_rational(Q(22, 7)), Sign::Positive);
}

TEST(SignQuadExt, Examples)
{
    EXPECT_EQ(sign_quadext(QuadExt(1, -1, 2)), Sign::Negative);
    EXPECT_EQ(sign_quadext(QuadExt(3, -2, 2)), Sign::Positive);
    EXPECT_EQ(sign_quadext(QuadExt(-2, 1, 4)), Sign::Zero);
}

TEST(SignQuadExt, PerfectSquareRadicandFolds)
{
    const QuadExt x(Q(1, 2), Q(3), Q(9, 4));
    EXPECT_TRUE(x.is_rational());
    EXPECT_EQ(x.p(), Q(5));
}

TEST(SignQuadExt, NegativeRadicandThrows)
{
    try {
        QuadExt(1, 1, -2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
    }
}

TEST(SignQuadExt, MatchesWideFloat)
{
    Rng rng(1);
    static const std::vector<Q> radicands{Q(2), Q(3), Q(5), Q(6), Q(7), Q(1, 2), Q(10, 3), Q(11)};
    int compared = 0;
    for (int i = 0; i < 100000; ++i) {
        const Q d = rng.pick(radicands);
        const Q p = rng.small(-30, 30, {1, 2, 3, 5, 7});
        const Q q = rng.small(-30, 30, {1, 2, 3, 5, 7});
        const QuadExt x(p, q, d);
        const double approx = p.get_d() + q.get_d() * std::sqrt(d.get_d());
        const double mag = std::fabs(p.get_d()) + std::fabs(q.get_d()) * std::sqrt(d.get_d());
        if (std::fabs(approx) <= 1e-6 * mag)
            continue;
        ++compared;
        ASSERT_EQ(sign_quadext(x), approx > 0 ? Sign::Positive : Sign::Negative) << p << " " << q << " " << d;
    }
    EXPECT_GT(compared, 90000);
}

TEST(SignQuadExt, NearCancellationAgainstWideFloat)
{
    // convergents of sqrt(2): p - q sqrt(2) is tiny but never zero
    Q p = 1, q = 1;
    for (int i = 0; i < 30; ++i) {
        const QuadExt x(p, -q, Q(2));
        const int wide_sign = sgn(wide(x));
        ASSERT_NE(wide_sign, 0);
        EXPECT_EQ(sign_quadext(x), wide_sign > 0 ? Sign::Positive : Sign::Negative);
        const Q np = p + 2 * q, nq = p + q;
        p = np;
        q = nq;
    }
}

TEST(SignSqrtMinus, Examples)
{
    EXPECT_EQ(sign_sqrt_minus(QuadExt(4), QuadExt(2)), Sign::Zero);
    EXPECT_EQ(sign_sqrt_minus(QuadExt(2), QuadExt(-1)), Sign::Positive);
    EXPECT_EQ(sign_sqrt_minus(QuadExt(2), QuadExt(Q(3, 2))), Sign::Negative);
}

TEST(SignSqrtMinus, MatchesWideFloat)
{
    Rng rng(2);
    static const std::vector<Q> radicands{Q(2), Q(3), Q(5), Q(7, 3)};
    int compared = 0;
    for (int i = 0; i < 10000; ++i) {
        const Q d = rng.pick(radicands);
        QuadExt a(rng.small(0, 20, {1, 2, 3}), rng.small(-3, 3, {1, 2}), d);
        if (sign_quadext(a) == Sign::Negative)
            a = -a;
        // half of the time B is a rounded square root of A, so the result is small
        QuadExt b(rng.small(-5, 5, {1, 2, 3}), rng.small(-2, 2, {1, 2}), d);
        if (rng.coin()) {
            const mpf_class root = sqrt(wide(a));
            const Q approx(root.get_d());
            b = QuadExt(approx + rng.small(-1, 1, {1000, 997}) / 1000);
        }
        const mpf_class ref = sqrt(wide(a)) - wide(b);
        if (abs(ref) <= 1e-10)
            continue;
        ++compared;
        ASSERT_EQ(sign_sqrt_minus(a, b), sgn(ref) > 0 ? Sign::Positive : Sign::Negative) << a << " " << b;
    }
    EXPECT_GT(compared, 9000);
}

TEST(SignSqrtMinus, NegativeRadicandThrows)
{
    EXPECT_THROW(sign_sqrt_minus(QuadExt(-1), QuadExt(1)), Error);
}

TEST(QuadExtArithmetic, RingLawsExactly)
{
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto draw = [&] { return QuadExt(rng.small(-9, 9), rng.small(-9, 9), Q(3)); };
        const QuadExt x = draw(), y = draw(), z = draw();
        ASSERT_EQ((x + y) * z, x * z + y * z);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x + y, y + x);
        if (sign_quadext(y) != Sign::Zero)
            ASSERT_EQ((x / y) * y, x);
    }
}

TEST(QuadExtArithmetic, MixedRadicandsRejected)
{
    try {
        (void)(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
    // a rational operand joins any field
    EXPECT_EQ(QuadExt::sqrt_of(2) * QuadExt::sqrt_of(2), QuadExt(2));
}

TEST(QuadExtArithmetic, DivisionByZeroThrows)
{
    EXPECT_THROW(QuadExt(1) / QuadExt(0), Error);
}

TEST(SignApprox, Examples)
{
    EXPECT_EQ(sign_approx(ApproxScalar(1e-18, 1e-12), 1.0), Sign::Unknown);
    EXPECT_EQ(sign_approx(ApproxScalar(-0.5, 1e-12), 1.0), Sign::Negative);
    EXPECT_EQ(sign_approx(ApproxScalar(1e-3, 1e-12), 1.0), Sign::Positive);
}

TEST(SignApprox, NonFiniteThrows)
{
    EXPECT_THROW(sign_approx(ApproxScalar(std::nan(""), 1e-12), 1.0), Error);
}

TEST(SignApprox, CancellationIsUnknown)
{
    // 0.1 + 0.2 - 0.3 is a rounding residue, not a sign
    const ApproxScalar x = ApproxScalar(0.1) + ApproxScalar(0.2) - ApproxScalar(0.3);
    EXPECT_NE(x.value, 0.0);
    EXPECT_EQ(sign_of(x), Sign::Unknown);
}

TEST(SignAlgebra, ProductAndNegation)
{
    EXPECT_EQ(Sign::Negative * Sign::Negative, Sign::Positive);
    EXPECT_EQ(Sign::Zero * Sign::Negative, Sign::Zero);
    EXPECT_EQ(Sign::Unknown * Sign::Positive, Sign::Unknown);
    EXPECT_EQ(negate(Sign::Negative), Sign::Positive);
}

TEST(ParseRational, Forms)
{
    EXPECT_EQ(parse_rational("3"), Q(3));
    EXPECT_EQ(parse_rational("-7/14"), Q(-1, 2));
    EXPECT_EQ(parse_rational("0.125"), Q(1, 8));
    EXPECT_EQ(parse_rational("-2.5e-1"), Q(-1, 4));
    EXPECT_EQ(parse_rational("+4"), Q(4));
    for (const char* bad : {"", "1/0", "abc", "1//2", "1.2.3", "--1", "1e"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}
