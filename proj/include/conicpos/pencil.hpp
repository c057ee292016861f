#pragma once

// Characteristic cubic det(lambda N + M) of a conic pair and its invariants.

#include "conicpos/conic.hpp"

#include <optional>
#include <span>
#include <vector>

namespace conicpos {

/// c3 l^3 + c2 l^2 + c1 l + c0, descending powers.
template <class S>
struct Cubic {
    S c3{0}, c2{0}, c1{0}, c0{0};

    S operator()(const S& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }

    friend bool operator==(const Cubic&, const Cubic&) = default;
};

template <class S>
struct PencilInvariants {
    S L0, L1, L2, L3;
    S T1, T2, T;
    S Delta, DeltaPrime;
};

namespace detail {

// Cofactor matrix of a symmetric 3x3; cof[i][j] for i <= j is enough.
template <class S>
struct SymCofactors {
    S c11, c12, c13, c22, c23, c33;
};

template <class S>
SymCofactors<S> cofactors(const Conic<S>& a)
{
    return {a.m22 * a.m33 - a.m23 * a.m23, a.m13 * a.m23 - a.m12 * a.m33, a.m12 * a.m23 - a.m13 * a.m22,
            a.m11 * a.m33 - a.m13 * a.m13, a.m12 * a.m13 - a.m11 * a.m23, a.m11 * a.m22 - a.m12 * a.m12};
}

// trace(adj(A) B) for symmetric A, B.
template <class S>
S adj_trace(const Conic<S>& a, const Conic<S>& b)
{
    const SymCofactors<S> k = cofactors(a);
    return k.c11 * b.m11 + k.c22 * b.m22 + k.c33 * b.m33 + S(2) * (k.c12 * b.m12 + k.c13 * b.m13 + k.c23 * b.m23);
}

} // namespace detail

/// Coefficients of det(lambda N + M): (det N, tr(adj N M), tr(adj M N), det M).
template <class S>
Cubic<S> char_poly(const Conic<S>& m, const Conic<S>& n)
{
    return Cubic<S>{det(n), detail::adj_trace(n, m), detail::adj_trace(m, n), det(m)};
}

/// Cubic discriminant in the coefficients of a3 T^3 + a2 T^2 + a1 T + a0.
template <class S>
S discriminant(const Cubic<S>& f)
{
    if (sign_of(f.c3) == Sign::Zero)
        throw Error(ErrorCode::LeadingZero, "discriminant of a cubic with zero leading coefficient");
    const S& a3 = f.c3;
    const S& a2 = f.c2;
    const S& a1 = f.c1;
    const S& a0 = f.c0;
    return S(-27) * a0 * a0 * a3 * a3 + S(18) * a0 * a1 * a2 * a3 - S(4) * a0 * a2 * a2 * a2 -
           S(4) * a1 * a1 * a1 * a3 + a1 * a1 * a2 * a2;
}

/// Discriminant of the derivative, 4 c2^2 - 12 c3 c1.
template <class S>
S derivative_discriminant(const Cubic<S>& f)
{
    return S(4) * f.c2 * f.c2 - S(12) * f.c3 * f.c1;
}

/// Coefficients of f(lambda + h).
template <class S>
Cubic<S> shift(const Cubic<S>& f, const S& h)
{
    return Cubic<S>{f.c3, S(3) * f.c3 * h + f.c2, S(3) * f.c3 * h * h + S(2) * f.c2 * h + f.c1, f(h)};
}

template <class S>
PencilInvariants<S> invariants(const Conic<S>& m, const Conic<S>& n)
{
    const Cubic<S> f = char_poly(m, n);
    PencilInvariants<S> inv{f.c3, f.c2, f.c1, f.c0,
                            quadratic_det(m), quadratic_det(n),
                            m.m22 * n.m11 - S(2) * m.m12 * n.m12 + m.m11 * n.m22,
                            S(0), S(0)};
    inv.Delta = sign_of(f.c3) == Sign::Zero ? S(0) : discriminant(f);
    inv.DeltaPrime = derivative_discriminant(f);
    return inv;
}

/// Sign changes after dropping zeros; nullopt when any entry is Unknown.
inline std::optional<int> sign_variations(std::span<const Sign> seq)
{
    int changes = 0;
    Sign last = Sign::Zero;
    for (Sign s : seq) {
        if (s == Sign::Unknown)
            return std::nullopt;
        if (s == Sign::Zero)
            continue;
        if (last != Sign::Zero && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

inline std::optional<int> sign_variations(std::initializer_list<Sign> seq)
{
    return sign_variations(std::span<const Sign>(seq.begin(), seq.size()));
}

template <class S>
std::optional<int> sign_variations(const Cubic<S>& f)
{
    return sign_variations({sign_of(f.c3), sign_of(f.c2), sign_of(f.c1), sign_of(f.c0)});
}

} // namespace conicpos
