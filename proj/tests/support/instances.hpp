#pragma once

// Instance generators shared by the unit tests and the acceptance runner.
//
// Tangency-rich circles are built from the intersection parameters: a circle
// x^2 + y^2 + d1 x + d2 y + d3 = 0 meets the rationally parameterized curve
// in the roots of a quartic whose coefficients are linear in d1, d2, d3, so
// prescribing the quartic (with repeated roots) prescribes the contacts.

#include "conicpos/oracle.hpp"

#include <random>

namespace conicpos::testing {

using Q = Rational;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    /// Rational in [lo, hi] with a small denominator.
    Q small(int lo, int hi, std::initializer_list<int> dens = {1, 2, 3, 4})
    {
        const std::vector<int> d(dens);
        const int den = pick(d);
        Q r(uniform(lo * den, hi * den), den);
        r.canonicalize();
        return r;
    }

    /// Positive rational p/q with p, q in [1, hi].
    Q positive(int hi = 9)
    {
        Q r(uniform(1, hi), uniform(1, hi));
        r.canonicalize();
        return r;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline Conic<Q> circle(const Q& xc, const Q& yc, const Q& r2)
{
    return Conic<Q>{1, 0, -xc, 1, -yc, xc * xc + yc * yc - r2};
}

/// Canonical parabola/circle instance with its rational centre kept.
struct ParabolaInstance {
    Q aSq, xc, yc, deltaSq;

    CanonicalParabolaCircle<Q> canonical() const { return parabola_circle(aSq, xc, yc, deltaSq); }
    std::pair<Conic<Q>, Conic<Q>> conics() const { return canonical_conics(aSq, xc, yc, deltaSq); }
};

struct HyperbolaInstance {
    Q aSq, bSq, xc, yc, deltaSq;

    CanonicalHyperbolaCircle<Q> canonical() const { return hyperbola_circle(aSq, bSq, xc, yc, deltaSq); }
    std::pair<Conic<Q>, Conic<Q>> conics() const { return canonical_conics(aSq, bSq, xc, yc, deltaSq); }
};

// Monic quartic from its root structure: real rational roots and monic real
// quadratic factors t^2 + p t + q.
struct Quartic {
    std::vector<Q> roots;
    std::vector<std::pair<Q, Q>> quadratics;

    Poly poly() const
    {
        Poly f = Poly::constant(1);
        for (const Q& r : roots)
            f = f * Poly({-r, Q(1)});
        for (const auto& [p, q] : quadratics)
            f = f * Poly({q, p, Q(1)});
        return f;
    }
};

/// Circle meeting x^2/a^2 = 2y at the parameters x = t given by `roots` of the
/// monic quartic (the t^3 coefficient must vanish). nullopt if the circle is
/// not real.
inline std::optional<ParabolaInstance> parabola_circle_through(const Q& aSq, const Poly& quartic)
{
    // 4a^4 (x^2 + y^2 + d1 x + d2 y + d3) with x = t, y = t^2/(2a^2)
    //   = t^4 + (4a^4 + 2a^2 d2) t^2 + 4a^4 d1 t + 4a^4 d3
    const Q a4 = aSq * aSq;
    const Q d1 = quartic[1] / (Q(4) * a4);
    const Q d2 = (quartic[2] - Q(4) * a4) / (Q(2) * aSq);
    const Q d3 = quartic[0] / (Q(4) * a4);
    const Q xc = -d1 / 2, yc = -d2 / 2;
    const Q r2 = xc * xc + yc * yc - d3;
    if (sgn(r2) <= 0)
        return std::nullopt;
    return ParabolaInstance{aSq, xc, yc, r2};
}

/// Circle meeting x^2/a^2 - y^2/b^2 + 1 = 0 at the parameters of
/// x = a(t^2-1)/(2t), y = b(t^2+1)/(2t) given by the monic quartic (constant
/// term 1). Needs rational a, b.
inline std::optional<HyperbolaInstance> hyperbola_circle_through(const Q& a, const Q& b, const Poly& quartic)
{
    // (2t)^2 (x^2 + y^2 + d1 x + d2 y + d3) / (a^2 + b^2) is the monic quartic
    const Q s = a * a + b * b;
    const Q e1 = -quartic[3], e2 = quartic[2], e3 = -quartic[1];
    const Q d1 = -s * (e1 - e3) / (Q(4) * a);
    const Q d2 = -s * (e1 + e3) / (Q(4) * b);
    const Q d3 = (s * e2 + Q(2) * a * a - Q(2) * b * b) / 4;
    const Q xc = -d1 / 2, yc = -d2 / 2;
    const Q r2 = xc * xc + yc * yc - d3;
    if (sgn(r2) <= 0)
        return std::nullopt;
    return HyperbolaInstance{a * a, b * b, xc, yc, r2};
}

namespace detail {

inline std::pair<Q, Q> complex_pair(Rng& rng)
{
    // t^2 + p t + q with q > p^2 / 4
    const Q p = rng.small(-3, 3);
    const Q q = p * p / 4 + rng.positive(4);
    return {p, q};
}

// Root pool with few values so that repeated roots are common.
inline Q pooled_root(Rng& rng)
{
    static const std::vector<Q> pool{Q(-3), Q(-2), Q(-1), Q(-1, 2), Q(1, 2), Q(1), Q(3, 2), Q(2), Q(3), Q(1, 3)};
    return rng.pick(pool);
}

} // namespace detail

/// Random quartic for the parabola construction (roots sum to zero).
inline Quartic parabola_quartic(Rng& rng)
{
    Quartic q;
    switch (rng.uniform(0, 5)) {
    case 0: { // two double roots
        const Q u = detail::pooled_root(rng);
        q.roots = {u, u, -u, -u};
        break;
    }
    case 1: { // triple root
        const Q u = detail::pooled_root(rng);
        q.roots = {u, u, u, Q(-3) * u};
        break;
    }
    case 2: { // one real root and a complex pair
        const auto pq = detail::complex_pair(rng);
        const Q r = detail::pooled_root(rng);
        q.roots = {r, pq.first - r};
        q.quadratics = {pq};
        break;
    }
    case 3: { // two complex pairs
        const auto pq = detail::complex_pair(rng);
        q.quadratics = {pq, {-pq.first, pq.first * pq.first / 4 + rng.positive(4)}};
        break;
    }
    default: { // three free roots, repeats likely
        const Q r1 = detail::pooled_root(rng), r2 = rng.coin() ? r1 : detail::pooled_root(rng),
                r3 = detail::pooled_root(rng);
        q.roots = {r1, r2, r3, -(r1 + r2 + r3)};
        break;
    }
    }
    return q;
}

/// Random quartic for the hyperbola construction (roots multiply to one).
inline Quartic hyperbola_quartic(Rng& rng)
{
    Quartic q;
    switch (rng.uniform(0, 6)) {
    case 0: { // two double roots
        const Q u = detail::pooled_root(rng);
        const Q v = rng.coin() ? Q(1) / u : Q(-1) / u;
        q.roots = {u, u, v, v};
        break;
    }
    case 1: { // triple root
        const Q u = detail::pooled_root(rng);
        q.roots = {u, u, u, Q(1) / (u * u * u)};
        break;
    }
    case 2: { // quadruple contact at a vertex
        const Q u = rng.coin() ? Q(1) : Q(-1);
        q.roots = {u, u, u, u};
        break;
    }
    case 3: {
        const auto pq = detail::complex_pair(rng);
        const Q r = detail::pooled_root(rng);
        q.roots = {r, Q(1) / (r * pq.second)};
        q.quadratics = {pq};
        break;
    }
    case 4: {
        const auto pq = detail::complex_pair(rng);
        const Q p2 = rng.small(-3, 3);
        const Q q2 = Q(1) / pq.second;
        if (p2 * p2 / 4 < q2)
            q.quadratics = {pq, {p2, q2}};
        else
            q.quadratics = {pq, {Q(0), q2}};
        break;
    }
    default: {
        const Q r1 = detail::pooled_root(rng), r2 = rng.coin() ? r1 : detail::pooled_root(rng),
                r3 = detail::pooled_root(rng);
        q.roots = {r1, r2, r3, Q(1) / (r1 * r2 * r3)};
        break;
    }
    }
    return q;
}

inline const std::vector<Q>& square_params()
{
    static const std::vector<Q> v{Q(1), Q(4), Q(1, 4), Q(9), Q(9, 4), Q(16), Q(1, 9), Q(4, 9)};
    return v;
}

/// Free random canonical parabola instance.
inline ParabolaInstance random_parabola(Rng& rng)
{
    static const std::vector<Q> aSqs{Q(1), Q(2), Q(4), Q(1, 4), Q(9), Q(9, 4), Q(1, 9), Q(3)};
    static const std::vector<Q> dSqs{Q(1), Q(2), Q(4), Q(1, 4), Q(9), Q(9, 4), Q(3), Q(3, 4), Q(16), Q(16, 9), Q(81)};
    const Q xc = rng.coin(0.2) ? Q(0) : rng.small(-3, 3);
    return ParabolaInstance{rng.pick(aSqs), xc, rng.small(-3, 8), rng.pick(dSqs)};
}

/// Parabola instance with prescribed contacts; retries until the circle is real.
inline ParabolaInstance constructed_parabola(Rng& rng)
{
    static const std::vector<Q> aSqs{Q(1), Q(2), Q(4), Q(1, 4), Q(1, 2), Q(3)};
    for (;;) {
        const Q aSq = rng.pick(aSqs);
        if (auto inst = parabola_circle_through(aSq, parabola_quartic(rng).poly()))
            return *inst;
    }
}

inline HyperbolaInstance random_hyperbola(Rng& rng)
{
    static const std::vector<Q> extra{Q(2), Q(3), Q(1, 2)};
    auto param = [&] { return rng.coin(0.8) ? rng.pick(square_params()) : rng.pick(extra); };
    const Q xc = rng.coin(0.2) ? Q(0) : rng.small(-3, 3);
    const Q yc = rng.coin(0.2) ? Q(0) : rng.small(-4, 4);
    return HyperbolaInstance{param(), param(), xc, yc, param()};
}

inline HyperbolaInstance constructed_hyperbola(Rng& rng)
{
    static const std::vector<Q> axes{Q(1), Q(2), Q(1, 2), Q(3), Q(3, 2), Q(2, 3)};
    for (;;) {
        const Q a = rng.pick(axes), b = rng.pick(axes);
        if (auto inst = hyperbola_circle_through(a, b, hyperbola_quartic(rng).poly()))
            return *inst;
    }
}

// ---------------------------------------------------------------------------
// Affine maps x_old = A x_new + t acting on conic matrices by H^T M H.

struct Affine {
    Q a11, a12, a21, a22, t1, t2;
};

inline Conic<Q> pull_back(const Conic<Q>& m, const Affine& h)
{
    // columns of H: (a11, a21, 0), (a12, a22, 0), (t1, t2, 1)
    const Q H[3][3] = {{h.a11, h.a12, h.t1}, {h.a21, h.a22, h.t2}, {Q(0), Q(0), Q(1)}};
    const Q M[3][3] = {{m.m11, m.m12, m.m13}, {m.m12, m.m22, m.m23}, {m.m13, m.m23, m.m33}};
    Q MH[3][3], R[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            MH[i][j] = 0;
            for (int k = 0; k < 3; ++k)
                MH[i][j] += M[i][k] * H[k][j];
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            R[i][j] = 0;
            for (int k = 0; k < 3; ++k)
                R[i][j] += H[k][i] * MH[k][j];
        }
    return Conic<Q>{R[0][0], R[0][1], R[0][2], R[1][1], R[1][2], R[2][2]};
}

/// Rotation with rational cosine/sine from a Pythagorean parameterization.
inline Affine rational_rotation(Rng& rng, const Q& t1, const Q& t2)
{
    const int p = rng.uniform(1, 6), q = rng.uniform(0, 6);
    const Q n(p * p + q * q);
    const Q c = Q(p * p - q * q) / n, s = Q(2 * p * q) / n;
    return {c, -s, s, c, t1, t2};
}

/// Rotation + translation, optionally with uniform scaling, shear or
/// nonuniform scaling.
inline Affine random_affine(Rng& rng, bool rigid_only = false)
{
    Affine r = rational_rotation(rng, rng.small(-3, 3), rng.small(-3, 3));
    if (rigid_only)
        return r;
    switch (rng.uniform(0, 3)) {
    case 0: break;
    case 1: { // uniform scaling
        const Q k = rng.positive(5);
        r = {r.a11 * k, r.a12 * k, r.a21 * k, r.a22 * k, r.t1, r.t2};
        break;
    }
    case 2: { // shear after rotation
        const Q sh = rng.small(-2, 2);
        r = {r.a11, r.a11 * sh + r.a12, r.a21, r.a21 * sh + r.a22, r.t1, r.t2};
        break;
    }
    default: { // nonuniform scaling
        const Q kx = rng.positive(4), ky = rng.positive(4);
        r = {r.a11 * kx, r.a12 * ky, r.a21 * kx, r.a22 * ky, r.t1, r.t2};
        break;
    }
    }
    return r;
}

/// Random nonzero rational factor, negative half of the time.
inline Q random_factor(Rng& rng)
{
    const Q k = rng.positive(7);
    return rng.coin() ? k : Q(-k);
}

/// Any rational conic to float with relative noise of size `noise`.
inline Conic<ApproxScalar> perturbed(const Conic<Q>& c, Rng& rng, double noise, double tol)
{
    return convert<ApproxScalar>(c, [&](const Q& x) {
        const double v = x.get_d() * (1 + noise * rng.real(-1, 1));
        return ApproxScalar(v, tol, std::fabs(v));
    });
}

inline Conic<ApproxScalar> to_float(const Conic<Q>& c, double tol)
{
    return convert<ApproxScalar>(c, [&](const Q& x) {
        const double v = x.get_d();
        return ApproxScalar(v, tol, std::fabs(v));
    });
}

} // namespace conicpos::testing
