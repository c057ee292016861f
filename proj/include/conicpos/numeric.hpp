#pragma once

// Sign-decidable scalars: GMP rationals, the quadratic extension Q(sqrt d),
// and a magnitude-tracking double for the float path.

#include "conicpos/error.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace conicpos {

using Rational = mpq_class;

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1, Unknown = 2 };

constexpr Sign negate(Sign s) noexcept
{
    switch (s) {
    case Sign::Negative: return Sign::Positive;
    case Sign::Positive: return Sign::Negative;
    default: return s;
    }
}

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    if (a == Sign::Unknown || b == Sign::Unknown)
        return Sign::Unknown;
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr char sign_char(Sign s) noexcept
{
    switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
    case Sign::Unknown: return '?';
    }
    return '?';
}

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << sign_char(s); }

inline Sign sign_rational(const Rational& x) noexcept
{
    const int s = sgn(x);
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign sign_of(const Rational& x) noexcept { return sign_rational(x); }

namespace detail {

inline bool is_perfect_square(const Rational& x)
{
    if (sgn(x) < 0)
        return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

inline Rational exact_sqrt(const Rational& x)
{
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace detail

/// p + q*sqrt(d) with rational p, q and d >= 0.
///
/// Values with q = 0 are plain rationals and combine with any radicand.
/// Perfect-square radicands are folded into p on construction, so a nonzero
/// q always means sqrt(d) is irrational and p + q*sqrt(d) = 0 iff p = q = 0.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int p) : p_(p) {}
    QuadExt(Rational p) : p_(std::move(p)) {}
    QuadExt(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d))
    {
        if (sgn(d_) < 0)
            throw Error(ErrorCode::NegativeRadicand, "QuadExt radicand " + d_.get_str());
        fold();
    }

    /// sqrt(d) as an element of Q(sqrt d).
    static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& p() const noexcept { return p_; }
    const Rational& q() const noexcept { return q_; }
    const Rational& d() const noexcept { return d_; }
    bool is_rational() const noexcept { return sgn(q_) == 0; }

    QuadExt conjugate() const { return QuadExt(p_, -q_, d_); }
    /// p^2 - q^2 d
    Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

    double to_double() const { return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d()); }

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b)
    {
        return QuadExt(a.p_ + b.p_, a.q_ + b.q_, common_radicand(a, b));
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b)
    {
        return QuadExt(a.p_ - b.p_, a.q_ - b.q_, common_radicand(a, b));
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b)
    {
        const Rational d = common_radicand(a, b);
        return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b)
    {
        const Rational n = b.norm();
        if (sgn(n) == 0)
            throw Error(ErrorCode::DivisionByZero, "QuadExt division by zero");
        const QuadExt num = a * b.conjugate();
        return QuadExt(num.p_ / n, num.q_ / n, num.d_);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b)
    {
        return a.p_ == b.p_ && a.q_ == b.q_ && (sgn(a.q_) == 0 || a.d_ == b.d_);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x)
    {
        os << x.p_;
        if (!x.is_rational())
            os << (sgn(x.q_) < 0 ? " - " : " + ") << abs(x.q_) << "*sqrt(" << x.d_ << ")";
        return os;
    }

private:
    static const Rational& common_radicand(const QuadExt& a, const QuadExt& b)
    {
        if (a.is_rational())
            return b.d_;
        if (b.is_rational() || a.d_ == b.d_)
            return a.d_;
        throw Error(ErrorCode::FieldMismatch,
                    "sqrt(" + a.d_.get_str() + ") vs sqrt(" + b.d_.get_str() + ")");
    }

    void fold()
    {
        if (sgn(q_) == 0 || sgn(d_) == 0) {
            q_ = 0;
            d_ = 0;
        } else if (detail::is_perfect_square(d_)) {
            p_ += q_ * detail::exact_sqrt(d_);
            q_ = 0;
            d_ = 0;
        }
    }

    Rational p_{0};
    Rational q_{0};
    Rational d_{0};
};

/// Exact sign of p + q*sqrt(d): compares p^2 with q^2 d when p and q disagree.
inline Sign sign_quadext(const QuadExt& x)
{
    if (sgn(x.d()) < 0)
        throw Error(ErrorCode::NegativeRadicand, "sign_quadext");
    const Sign sp = sign_rational(x.p());
    const Sign sq = sign_rational(x.q());
    if (sq == Sign::Zero)
        return sp;
    if (sp == Sign::Zero || sp == sq)
        return sq;
    const int cmp = ::cmp(x.p() * x.p(), x.q() * x.q() * x.d());
    if (cmp == 0)
        return Sign::Zero;
    return cmp > 0 ? sp : sq;
}

inline Sign sign_of(const QuadExt& x) { return sign_quadext(x); }

/// Float value with a zero-threshold `tol` relative to `scale`, a running
/// bound on the magnitudes that were combined to produce `value`.
struct ApproxScalar {
    double value = 0.0;
    double tol = 1e-10;
    double scale = 0.0;

    ApproxScalar() = default;
    // integer literals are exact constants and carry no tolerance of their own
    ApproxScalar(int v) : value(v), tol(0.0), scale(std::fabs(double(v))) {}
    ApproxScalar(double v, double t = 1e-10) : value(v), tol(t), scale(std::fabs(v)) {}
    ApproxScalar(double v, double t, double s) : value(v), tol(t), scale(s) {}

    ApproxScalar operator-() const { return {-value, tol, scale}; }

    friend ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b)
    {
        return {a.value + b.value, std::max(a.tol, b.tol), a.scale + b.scale};
    }
    friend ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b)
    {
        return {a.value - b.value, std::max(a.tol, b.tol), a.scale + b.scale};
    }
    friend ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b)
    {
        return {a.value * b.value, std::max(a.tol, b.tol), a.scale * b.scale};
    }
    friend ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b)
    {
        const double den = std::fabs(b.value);
        return {a.value / b.value, std::max(a.tol, b.tol),
                a.scale / den + std::fabs(a.value) * b.scale / (den * den)};
    }
    ApproxScalar& operator+=(const ApproxScalar& o) { return *this = *this + o; }
    ApproxScalar& operator-=(const ApproxScalar& o) { return *this = *this - o; }
    ApproxScalar& operator*=(const ApproxScalar& o) { return *this = *this * o; }
    ApproxScalar& operator/=(const ApproxScalar& o) { return *this = *this / o; }

    double to_double() const { return value; }

    friend bool operator==(const ApproxScalar& a, const ApproxScalar& b) { return a.value == b.value; }
};

inline ApproxScalar sqrt(const ApproxScalar& x)
{
    return {std::sqrt(std::max(x.value, 0.0)), x.tol, std::sqrt(x.scale)};
}

/// Unknown when |value| <= tol*scale; never Zero.
inline Sign sign_approx(const ApproxScalar& x, double scale)
{
    if (!std::isfinite(x.value))
        throw Error(ErrorCode::NotFinite, "sign_approx on " + std::to_string(x.value));
    if (std::fabs(x.value) <= x.tol * scale)
        return Sign::Unknown;
    return x.value < 0 ? Sign::Negative : Sign::Positive;
}

inline Sign sign_of(const ApproxScalar& x) { return sign_approx(x, x.scale); }

/// Sign of sqrt(A) - B without forming the nested radical.
template <class S>
Sign sign_sqrt_minus(const S& a, const S& b)
{
    const Sign sa = sign_of(a);
    if (sa == Sign::Negative)
        throw Error(ErrorCode::NegativeRadicand, "sign_sqrt_minus");
    const Sign sb = sign_of(b);
    if (sb == Sign::Negative)
        return Sign::Positive;
    if (sb == Sign::Zero)
        return sa;
    if (sb == Sign::Unknown)
        return Sign::Unknown;
    // both sides nonnegative: compare A against B^2
    return sign_of(a - b * b);
}

/// The field obtained by adjoining one square root to S: Q(sqrt d) for
/// rationals, S itself for floats.
template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
    using ext_type = QuadExt;
    static ext_type embed(const Rational& x) { return QuadExt(x); }
    static ext_type sqrt(const Rational& d) { return QuadExt::sqrt_of(d); }
};

template <>
struct field_traits<ApproxScalar> {
    using ext_type = ApproxScalar;
    static ext_type embed(const ApproxScalar& x) { return x; }
    static ext_type sqrt(const ApproxScalar& d) { return conicpos::sqrt(d); }
};

template <class S>
using ext_t = typename field_traits<S>::ext_type;

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const QuadExt& x) { return x.to_double(); }
inline double to_double(const ApproxScalar& x) { return x.value; }

/// Parses "p/q", integers, and decimals with optional exponent exactly.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'"); };
    if (text.empty())
        fail();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (sgn(den) == 0)
            fail();
        return num / den;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point)
                ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit)
        fail();
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E')
            fail();
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i == text.size())
            fail();
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9' || exponent > 100000)
                fail();
            exponent = exponent * 10 + (text[i] - '0');
        }
        if (exp_negative)
            exponent = -exponent;
    }
    exponent -= frac_digits;
    mpz_class mantissa(digits, 10);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace conicpos
