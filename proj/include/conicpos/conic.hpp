#pragma once

#include "conicpos/numeric.hpp"

#include <array>
#include <ostream>
#include <string_view>

namespace conicpos {

/// Conic x M x^t = 0 with x = (x, y, 1); only the upper triangle of the
/// symmetric matrix M is stored.
template <class S>
struct Conic {
    S m11{0}, m12{0}, m13{0}, m22{0}, m23{0}, m33{0};

    friend bool operator==(const Conic&, const Conic&) = default;
};

enum class ConicClass { RealEllipse, ImaginaryEllipse, Parabola, Hyperbola, Degenerate };

constexpr std::string_view to_string(ConicClass c) noexcept
{
    switch (c) {
    case ConicClass::RealEllipse: return "RealEllipse";
    case ConicClass::ImaginaryEllipse: return "ImaginaryEllipse";
    case ConicClass::Parabola: return "Parabola";
    case ConicClass::Hyperbola: return "Hyperbola";
    case ConicClass::Degenerate: return "Degenerate";
    }
    return "?";
}

/// Maps A x^2 + B xy + C y^2 + D x + E y + F = 0 to its symmetric matrix.
template <class S>
Conic<S> conic_from_equation(const S& a, const S& b, const S& c, const S& d, const S& e, const S& f)
{
    const S zero(0);
    if (a == zero && b == zero && c == zero && d == zero && e == zero && f == zero)
        throw Error(ErrorCode::AllZero, "every conic coefficient is zero");
    const S half = S(1) / S(2);
    return Conic<S>{a, b * half, d * half, c, e * half, f};
}

/// Coefficients (A, B, C, D, E, F) of the implicit equation.
template <class S>
std::array<S, 6> equation_of(const Conic<S>& c)
{
    return {c.m11, S(2) * c.m12, c.m22, S(2) * c.m13, S(2) * c.m23, c.m33};
}

template <class S>
S det(const Conic<S>& c)
{
    return c.m11 * (c.m22 * c.m33 - c.m23 * c.m23) - c.m12 * (c.m12 * c.m33 - c.m23 * c.m13) +
           c.m13 * (c.m12 * c.m23 - c.m22 * c.m13);
}

/// Determinant of the leading 2x2 block (the quadratic part).
template <class S>
S quadratic_det(const Conic<S>& c)
{
    return c.m11 * c.m22 - c.m12 * c.m12;
}

template <class S>
S evaluate(const Conic<S>& c, const S& x, const S& y)
{
    return c.m11 * x * x + S(2) * c.m12 * x * y + c.m22 * y * y + S(2) * c.m13 * x + S(2) * c.m23 * y + c.m33;
}

template <class S>
Conic<S> scaled(const Conic<S>& c, const S& k)
{
    return Conic<S>{c.m11 * k, c.m12 * k, c.m13 * k, c.m22 * k, c.m23 * k, c.m33 * k};
}

template <class S>
Conic<S> negated(const Conic<S>& c)
{
    return Conic<S>{-c.m11, -c.m12, -c.m13, -c.m22, -c.m23, -c.m33};
}

template <class To, class From, class Fn>
Conic<To> convert(const Conic<From>& c, Fn&& fn)
{
    return Conic<To>{fn(c.m11), fn(c.m12), fn(c.m13), fn(c.m22), fn(c.m23), fn(c.m33)};
}

namespace detail {

inline void require_known(Sign s, std::string_view what)
{
    if (s == Sign::Unknown)
        throw Error(ErrorCode::IndeterminateSign, std::string(what) + " is below tolerance");
}

} // namespace detail

/// Type test from the signs of the quadratic-part determinant, det M, and
/// (m11 + m22) det M. Float inputs whose deciding signs fall under tolerance
/// raise IndeterminateSign.
template <class S>
ConicClass classify_type(const Conic<S>& c)
{
    const Sign sd = sign_of(det(c));
    detail::require_known(sd, "det");
    if (sd == Sign::Zero)
        return ConicClass::Degenerate;
    const Sign s2 = sign_of(quadratic_det(c));
    detail::require_known(s2, "quadratic determinant");
    if (s2 == Sign::Zero)
        return ConicClass::Parabola;
    if (s2 == Sign::Negative)
        return ConicClass::Hyperbola;
    const Sign st = sign_of(c.m11 + c.m22) * sd;
    return st == Sign::Negative ? ConicClass::RealEllipse : ConicClass::ImaginaryEllipse;
}

/// Flips the overall sign so that a real ellipse has m11 > 0 and det < 0, and
/// a parabola or hyperbola has det < 0. In float mode a conic whose quadratic
/// determinant is below tolerance is accepted in the parabola role.
template <class S>
Conic<S> normalize(const Conic<S>& c, ConicClass role)
{
    if (role == ConicClass::Degenerate || role == ConicClass::ImaginaryEllipse)
        throw Error(ErrorCode::RoleMismatch, "cannot normalize to " + std::string(to_string(role)));
    // a float parabola is only ever a parabola up to tolerance
    const bool near_parabola = role == ConicClass::Parabola && sign_of(quadratic_det(c)) == Sign::Unknown &&
                               sign_of(det(c)) != Sign::Unknown && sign_of(det(c)) != Sign::Zero;
    const ConicClass actual = near_parabola ? ConicClass::Parabola : classify_type(c);
    if (actual != role)
        throw Error(ErrorCode::RoleMismatch,
                    "expected " + std::string(to_string(role)) + ", got " + std::string(to_string(actual)));
    const bool flip = role == ConicClass::RealEllipse ? sign_of(c.m11) == Sign::Negative
                                                      : sign_of(det(c)) == Sign::Positive;
    return flip ? negated(c) : c;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Conic<S>& c)
{
    return os << "[" << c.m11 << " " << c.m12 << " " << c.m13 << "; " << c.m22 << " " << c.m23 << "; " << c.m33
              << "]";
}

} // namespace conicpos
