#pragma once

// Affine reduction of a (parabola | hyperbola, ellipse) pair to the canonical
// configuration "canonical curve + circle".
//
// The canonical parameters are computed exactly from the pencil invariants;
// they live in one quadratic extension (Q(sqrt a^4) for the parabola path,
// Q(sqrt(T^2 - 4 T1 T2)) for the hyperbola path). The affine map itself
// involves nested radicals and is reported in double precision.

#include "conicpos/pencil.hpp"

#include <array>
#include <cmath>

namespace conicpos {

using Matrix3d = std::array<std::array<double, 3>, 3>;
using Matrix2d = std::array<std::array<double, 2>, 2>;

/// Parabola x^2/a^2 - 2y = 0 and circle (x-xc)^2 + (y-yc)^2 = delta^2.
/// The centre abscissa only enters squared, so xc is kept as xc^2.
template <class S>
struct CanonicalParabolaCircle {
    S aSq, xcSq, yc, deltaSq;
};

/// Hyperbola x^2/a^2 - y^2/b^2 + 1 = 0 and circle (x-xc)^2 + (y-yc)^2 = delta^2.
template <class S>
struct CanonicalHyperbolaCircle {
    S aSq, bSq, xcSq, ycSq, deltaSq;
};

template <class S>
CanonicalParabolaCircle<S> parabola_circle(const S& aSq, const S& xc, const S& yc, const S& deltaSq)
{
    return {aSq, xc * xc, yc, deltaSq};
}

template <class S>
CanonicalHyperbolaCircle<S> hyperbola_circle(const S& aSq, const S& bSq, const S& xc, const S& yc, const S& deltaSq)
{
    return {aSq, bSq, xc * xc, yc * yc, deltaSq};
}

/// Matrices of the canonical pair (curve, circle) for a rational centre.
template <class S>
std::pair<Conic<S>, Conic<S>> canonical_conics(const S& aSq, const S& xc, const S& yc, const S& deltaSq)
{
    const Conic<S> parabola{S(1) / aSq, S(0), S(0), S(0), S(-1), S(0)};
    const Conic<S> circle{S(1), S(0), -xc, S(1), -yc, xc * xc + yc * yc - deltaSq};
    return {parabola, circle};
}

template <class S>
std::pair<Conic<S>, Conic<S>> canonical_conics(const S& aSq, const S& bSq, const S& xc, const S& yc,
                                               const S& deltaSq)
{
    const Conic<S> hyperbola{S(1) / aSq, S(0), S(0), S(-1) / bSq, S(0), S(1)};
    const Conic<S> circle{S(1), S(0), -xc, S(1), -yc, xc * xc + yc * yc - deltaSq};
    return {hyperbola, circle};
}

template <class E>
struct ReductionData {
    E b0{0}, b2{0};   // eigenvalues of the ellipse's quadratic part, b0 >= b2
    E nu{0};          // (a11 - a22)^2 + 4 a12^2
    E E1{0}, E2{0};   // parabola path
    E H0{0}, H2{0}, H5{0}; // hyperbola path
    Matrix3d transform{}; // homogeneous map (x, y, 1)^t -> canonical coordinates
};

struct Eigen2 {
    double b0, b2;
    Matrix2d rotation; // columns are unit eigenvectors for b0, b2
};

namespace detail {

inline Matrix3d identity3()
{
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

inline Matrix3d mul(const Matrix3d& a, const Matrix3d& b)
{
    Matrix3d r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Matrix3d transpose(const Matrix3d& a)
{
    Matrix3d r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[j][i];
    return r;
}

// Inverse of an affine map [[A, t], [0, 0, 1]].
inline Matrix3d affine_inverse(const Matrix3d& m)
{
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double i00 = m[1][1] / det, i01 = -m[0][1] / det, i10 = -m[1][0] / det, i11 = m[0][0] / det;
    return {{{i00, i01, -(i00 * m[0][2] + i01 * m[1][2])},
             {i10, i11, -(i10 * m[0][2] + i11 * m[1][2])},
             {0, 0, 1}}};
}

template <class S>
Matrix3d to_matrix(const Conic<S>& c)
{
    const double a = to_double(c.m11), b = to_double(c.m12), d = to_double(c.m13);
    const double e = to_double(c.m22), f = to_double(c.m23), g = to_double(c.m33);
    return {{{a, b, d}, {b, e, f}, {d, f, g}}};
}

inline Conic<double> from_matrix(const Matrix3d& m)
{
    return Conic<double>{m[0][0], 0.5 * (m[0][1] + m[1][0]), 0.5 * (m[0][2] + m[2][0]),
                         m[1][1], 0.5 * (m[1][2] + m[2][1]), m[2][2]};
}

// first nonzero component positive
inline void orient(double& x, double& y)
{
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
}

// Unit eigenvector of a symmetric 2x2 for eigenvalue lambda.
inline std::array<double, 2> eigenvector(double a11, double a12, double a22, double lambda)
{
    double x1 = a12, y1 = lambda - a11;
    double x2 = lambda - a22, y2 = a12;
    const double n1 = std::hypot(x1, y1), n2 = std::hypot(x2, y2);
    double x = n1 >= n2 ? x1 : x2, y = n1 >= n2 ? y1 : y2;
    const double n = std::max(n1, n2);
    if (n == 0)
        return {1, 0};
    x /= n;
    y /= n;
    orient(x, y);
    return {x, y};
}

} // namespace detail

/// Eigen-decomposition of a symmetric 2x2 [[a11, a12], [a12, a22]].
inline Eigen2 eigen_2x2(double a11, double a12, double a22)
{
    const double tr = a11 + a22;
    const double nu = (a11 - a22) * (a11 - a22) + 4 * a12 * a12;
    const double root = std::sqrt(nu);
    const double b0 = (tr + root) / 2, b2 = (tr - root) / 2;
    if (nu == 0)
        return {b0, b2, {{{1, 0}, {0, 1}}}};
    auto v0 = detail::eigenvector(a11, a12, a22, b0);
    double wx = -v0[1], wy = v0[0];
    detail::orient(wx, wy);
    return {b0, b2, {{{v0[0], wx}, {v0[1], wy}}}};
}

/// Exact eigenvalues (b0, b2, nu) of the quadratic part, b0 >= b2.
template <class S>
std::array<ext_t<S>, 3> eigenvalues_2x2(const S& a11, const S& a12, const S& a22)
{
    using Tr = field_traits<S>;
    const S nu = (a11 - a22) * (a11 - a22) + S(4) * a12 * a12;
    const ext_t<S> root = Tr::sqrt(nu);
    const ext_t<S> tr = Tr::embed(a11 + a22);
    const ext_t<S> half = Tr::embed(S(1) / S(2));
    return {(tr + root) * half, (tr - root) * half, Tr::embed(nu)};
}

namespace detail {

// S1 = diag(sqrt b0, sqrt b2, 1) * (P^t (+) 1): sends the ellipse to a circle.
template <class S>
Matrix3d circle_map(const Conic<S>& m)
{
    const Eigen2 e = eigen_2x2(to_double(m.m11), to_double(m.m12), to_double(m.m22));
    const double s0 = std::sqrt(e.b0), s2 = std::sqrt(e.b2);
    const Matrix2d& p = e.rotation;
    return {{{s0 * p[0][0], s0 * p[1][0], 0}, {s2 * p[0][1], s2 * p[1][1], 0}, {0, 0, 1}}};
}

// Conic matrix in the coordinates y = S x.
inline Matrix3d pushforward(const Matrix3d& conic, const Matrix3d& map)
{
    const Matrix3d inv = affine_inverse(map);
    return mul(transpose(inv), mul(conic, inv));
}

inline Matrix3d affine(const Matrix2d& r, double tx, double ty)
{
    return {{{r[0][0], r[0][1], tx}, {r[1][0], r[1][1], ty}, {0, 0, 1}}};
}

} // namespace detail

/// Reduces a normalized parabola `n` and real ellipse `m` to a canonical
/// parabola/circle pair.
template <class S>
std::pair<CanonicalParabolaCircle<ext_t<S>>, ReductionData<ext_t<S>>> reduce_parabola_pair(const Conic<S>& n_in,
                                                                                           const Conic<S>& m_in)
{
    using E = ext_t<S>;
    using Tr = field_traits<S>;
    const Conic<S> n = normalize(n_in, ConicClass::Parabola);
    const Conic<S> m = normalize(m_in, ConicClass::RealEllipse);
    const PencilInvariants<S> inv = invariants(m, n);

    // a^4 = -L0 T1^2 / T^3, the canonical cubic is F(l / E2) / T1
    const S aFourth = -inv.L0 * inv.T1 * inv.T1 / (inv.T * inv.T * inv.T);
    const E aSq = Tr::sqrt(aFourth);
    const S E1 = inv.T / inv.T1;
    const E E2 = aSq * Tr::embed(E1);
    const S deltaSq = -inv.L3 / inv.T1;
    const S c1 = -inv.L1 * inv.T / (inv.T1 * inv.L0);
    const E yc = -(Tr::embed(c1 + S(1))) * aSq / Tr::embed(S(2));
    const E c2 = Tr::embed(inv.L2) / (aSq * Tr::embed(inv.T));
    const E xcSq = c2 * aSq + Tr::embed(S(2)) * aSq * yc + Tr::embed(deltaSq);

    ReductionData<E> data;
    const auto [b0, b2, nu] = eigenvalues_2x2(m.m11, m.m12, m.m22);
    data.b0 = b0;
    data.b2 = b2;
    data.nu = nu;
    data.E1 = Tr::embed(E1);
    data.E2 = E2;

    // S2: rigid motion putting N1 = S1-image of n into E1 x^2 - 2 E2 y = 0
    const Matrix3d s1 = detail::circle_map(m);
    const Matrix3d n1 = detail::pushforward(detail::to_matrix(n), s1);
    const double d11 = n1[0][0], d12 = n1[0][1], d22 = n1[1][1];
    const double e1 = d11 + d22;
    auto u = detail::eigenvector(d11, d12, d22, e1);
    std::array<double, 2> w{-u[1], u[0]};
    const double g1 = u[0] * n1[0][2] + u[1] * n1[1][2];
    double g2 = w[0] * n1[0][2] + w[1] * n1[1][2];
    if (g2 > 0) {
        w = {-w[0], -w[1]};
        g2 = -g2;
    }
    const double h = n1[2][2];
    const Matrix2d rot{{{u[0], u[1]}, {w[0], w[1]}}};
    const Matrix3d s2 = detail::affine(rot, g1 / e1, (h - g1 * g1 / e1) / (2 * g2));
    data.transform = detail::mul(s2, s1);

    return {CanonicalParabolaCircle<E>{aSq, xcSq, yc, Tr::embed(deltaSq)}, data};
}

/// Reduces a normalized hyperbola `nh` and real ellipse `m` to a canonical
/// hyperbola/circle pair.
template <class S>
std::pair<CanonicalHyperbolaCircle<ext_t<S>>, ReductionData<ext_t<S>>>
reduce_hyperbola_pair(const Conic<S>& nh_in, const Conic<S>& m_in)
{
    using E = ext_t<S>;
    using Tr = field_traits<S>;
    const Conic<S> nh = normalize(nh_in, ConicClass::Hyperbola);
    const Conic<S> m = normalize(m_in, ConicClass::RealEllipse);
    const PencilInvariants<S> inv = invariants(m, nh);

    const E root = Tr::sqrt(inv.T * inv.T - S(4) * inv.T1 * inv.T2);
    const E T = Tr::embed(inv.T);
    const E twoT1 = Tr::embed(S(2) * inv.T1);
    const E H0 = (T + root) / twoT1;
    const E H2 = (T - root) / twoT1;
    const E H5 = Tr::embed(inv.L0 / inv.T2);

    const E aSq = H5 / H0;
    const E bSq = -H5 / H2;
    const E deltaSq = Tr::embed(-inv.L3 / inv.T1);
    // canonical cubic coefficients a2, a1 (divided by T1 and powers of H5)
    const E T1 = Tr::embed(inv.T1);
    const E a2 = Tr::embed(inv.L1) / (T1 * H5 * H5);
    const E a1 = Tr::embed(inv.L2) / (T1 * H5);
    const E ab = aSq * bSq;
    const E sumSq = -a2 * ab - aSq + bSq + deltaSq;                // xc^2 + yc^2
    const E mixed = a1 * ab - ab - aSq * deltaSq + bSq * deltaSq;  // b^2 xc^2 - a^2 yc^2
    const E xcSq = (aSq * sumSq + mixed) / (aSq + bSq);
    const E ycSq = (bSq * sumSq - mixed) / (aSq + bSq);

    ReductionData<E> data;
    const auto [b0, b2, nu] = eigenvalues_2x2(m.m11, m.m12, m.m22);
    data.b0 = b0;
    data.b2 = b2;
    data.nu = nu;
    data.H0 = H0;
    data.H2 = H2;
    data.H5 = H5;

    const Matrix3d s1 = detail::circle_map(m);
    const Matrix3d n1 = detail::pushforward(detail::to_matrix(nh), s1);
    const double d11 = n1[0][0], d12 = n1[0][1], d22 = n1[1][1];
    const double tr = d11 + d22, dt = d11 * d22 - d12 * d12;
    const double h0 = 0.5 * (tr + std::sqrt(tr * tr - 4 * dt));
    auto u = detail::eigenvector(d11, d12, d22, h0);
    const std::array<double, 2> w{-u[1], u[0]};
    // centre of the hyperbola: Q c = -g
    const double cx = (-n1[0][2] * d22 + n1[1][2] * d12) / dt;
    const double cy = (-n1[1][2] * d11 + n1[0][2] * d12) / dt;
    const Matrix2d rot{{{u[0], u[1]}, {w[0], w[1]}}};
    const Matrix3d s2 =
        detail::affine(rot, -(rot[0][0] * cx + rot[0][1] * cy), -(rot[1][0] * cx + rot[1][1] * cy));
    data.transform = detail::mul(s2, s1);

    return {CanonicalHyperbolaCircle<E>{aSq, bSq, xcSq, ycSq, deltaSq}, data};
}

/// Applies `transform` to a conic: the returned matrix describes the same
/// curve in the transformed coordinates.
template <class S>
Conic<double> transform_conic(const Conic<S>& c, const Matrix3d& transform)
{
    return detail::from_matrix(detail::pushforward(detail::to_matrix(c), transform));
}

} // namespace conicpos
