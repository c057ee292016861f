#pragma once

// Independent checks for the sign-condition classifiers:
//  - a root-pattern classifier that reads the case off the isolated roots of
//    the canonical characteristic cubic;
//  - a geometric oracle that intersects the two conics by elimination.

#include "conicpos/classify_hyperbola.hpp"
#include "conicpos/classify_parabola.hpp"
#include "conicpos/poly.hpp"

#include <sstream>

namespace conicpos {

struct RootPattern {
    std::vector<RealRoot> realRoots; // ascending
    int complexPairCount = 0;

    /// Roots listed with repetition, ascending.
    std::vector<const RealRoot*> expanded() const
    {
        std::vector<const RealRoot*> out;
        for (const RealRoot& r : realRoots)
            for (int i = 0; i < r.multiplicity; ++i)
                out.push_back(&r);
        return out;
    }
};

inline Poly to_poly(const Cubic<Rational>& f)
{
    return Poly({f.c0, f.c1, f.c2, f.c3});
}

inline RootPattern isolate_cubic_roots(const Cubic<Rational>& f)
{
    if (sgn(f.c3) == 0)
        throw Error(ErrorCode::LeadingZero, "isolate_cubic_roots");
    RootPattern p;
    p.realRoots = real_roots(to_poly(f));
    int total = 0;
    for (const RealRoot& r : p.realRoots)
        total += r.multiplicity;
    p.complexPairCount = (3 - total) / 2;
    return p;
}

namespace detail {

// Shape of a cubic's real roots: 3 simple, 1 simple + complex pair,
// double + simple, triple.
struct CubicShape {
    int real_count = 0;
    const RealRoot* double_root = nullptr;
    const RealRoot* simple_root = nullptr; // the simple root next to a double one
    const RealRoot* triple_root = nullptr;
};

inline CubicShape shape_of(const RootPattern& p)
{
    CubicShape s;
    s.real_count = static_cast<int>(p.realRoots.size());
    for (const RealRoot& r : p.realRoots) {
        if (r.multiplicity == 2)
            s.double_root = &r;
        else if (r.multiplicity == 3)
            s.triple_root = &r;
    }
    if (s.double_root)
        for (const RealRoot& r : p.realRoots)
            if (r.multiplicity == 1)
                s.simple_root = &r;
    return s;
}

inline std::string describe(const RootPattern& p)
{
    std::ostringstream os;
    os << "roots:";
    for (const RealRoot& r : p.realRoots)
        os << " " << r.approx() << "^" << r.multiplicity;
    os << " complex pairs: " << p.complexPairCount;
    return os.str();
}

[[noreturn]] inline void unmatched(const RootPattern& p, std::string_view what)
{
    throw Error(ErrorCode::PatternUnmatched, std::string(what) + " " + describe(p));
}

} // namespace detail

/// Reads the parabola/circle case off the roots of the canonical cubic.
inline ParabolaEllipsePosition root_pattern_classify_parabola(const CanonicalParabolaCircle<Rational>& c)
{
    using P = ParabolaEllipsePosition;
    parabola::validate(c);
    const RootPattern p = isolate_cubic_roots(parabola::canonical_cubic(c));
    const detail::CubicShape s = detail::shape_of(p);
    const Rational s0 = -c.aSq;
    const int aVsDelta = cmp(c.aSq * c.aSq, c.deltaSq); // a^2 vs delta via squares

    if (p.complexPairCount == 1)
        return P::TwoIntersections;
    if (s.triple_root) {
        const int t = compare(*s.triple_root, s0);
        if (t == 0)
            return P::OneInnerTangent;
        if (t < 0)
            return P::OneIntersectionAndInnerTangent;
        detail::unmatched(p, "parabola triple root above -a^2");
    }
    if (s.double_root) {
        const RealRoot& d = *s.double_root;
        const RealRoot& e = *s.simple_root;
        if (compare(d, Rational(0)) > 0)
            return P::ExternallyTangent;
        const int ds = compare(d, s0);
        if (ds > 0)
            return P::OneInnerTangent;
        if (ds == 0) {
            if (aVsDelta > 0)
                return P::EllipseInsideParabola;
            if (aVsDelta < 0)
                return P::TwoInnerTangents;
            detail::unmatched(p, "parabola double root -a^2 with a^2 = delta");
        }
        if (compare(e, s0) <= 0 && aVsDelta <= 0)
            return P::TwoIntersectionsAndInnerTangent;
        detail::unmatched(p, "parabola double root below -a^2");
    }
    // three distinct real roots
    const RealRoot& r1 = p.realRoots[0];
    const RealRoot& r2 = p.realRoots[1];
    const RealRoot& r3 = p.realRoots[2];
    if (compare(r2, Rational(0)) > 0)
        return P::Separated;
    if (compare(r3, Rational(0)) < 0) {
        if (compare(r3, s0) <= 0)
            return P::FourIntersections;
        if (compare(r1, s0) < 0 && compare(r2, s0) >= 0)
            return P::EllipseInsideParabola;
        // circle centred on the axis: -a^2 itself is the smallest root
        if (compare(r1, s0) == 0)
            return P::EllipseInsideParabola;
    }
    detail::unmatched(p, "parabola simple roots");
}

/// Reads the hyperbola/circle case off the roots of the canonical cubic.
inline HyperbolaEllipsePosition root_pattern_classify_hyperbola(const CanonicalHyperbolaCircle<Rational>& c)
{
    using H = HyperbolaEllipsePosition;
    hyperbola::validate(c);
    const RootPattern p = isolate_cubic_roots(hyperbola::canonical_cubic(c));
    const detail::CubicShape s = detail::shape_of(p);
    const Rational s0 = -c.aSq;
    const Rational& t0 = c.bSq;
    const int aVsBDelta = cmp(c.aSq * c.aSq, c.bSq * c.deltaSq); // a^2 vs b*delta
    const int bVsDelta = cmp(c.bSq, c.deltaSq);                 // b vs delta

    if (p.complexPairCount == 1)
        return H::TwoIntersections;
    if (s.triple_root) {
        const int t = compare(*s.triple_root, s0);
        if (t == 0)
            return H::OneInnerTangent; // -a^2 = -b delta
        if (t < 0)
            return H::OneIntersectionAndInnerTangent;
        detail::unmatched(p, "hyperbola triple root above -a^2");
    }
    if (s.double_root) {
        const RealRoot& d = *s.double_root;
        const RealRoot& e = *s.simple_root;
        if (compare(d, Rational(0)) > 0) {
            const int dt = compare(d, t0);
            if (dt < 0)
                return H::OneOuterTangent;
            if (dt == 0 && bVsDelta <= 0)
                return H::TwoOuterTangents;
            if (dt > 0 && bVsDelta < 0)
                return H::TwoIntersectionsAndOuterTangent;
            detail::unmatched(p, "hyperbola positive double root");
        }
        const int ds = compare(d, s0);
        const int es = compare(e, s0);
        if (ds > 0 && es < 0)
            return H::OneInnerTangent;
        if (ds > 0 && es == 0 && aVsBDelta >= 0)
            return H::OneInnerTangent;
        if (ds == 0 && es < 0 && aVsBDelta < 0)
            return H::TwoInnerTangents;
        if (ds == 0 && es > 0 && aVsBDelta > 0)
            return H::EllipseInsideHyperbola;
        if (ds < 0 && es <= 0 && aVsBDelta < 0)
            return H::TwoIntersectionsAndInnerTangent;
        detail::unmatched(p, "hyperbola negative double root");
    }
    const RealRoot& r1 = p.realRoots[0];
    const RealRoot& r2 = p.realRoots[1];
    const RealRoot& r3 = p.realRoots[2];
    if (compare(r1, Rational(0)) < 0 && compare(r2, Rational(0)) > 0) {
        if (compare(r3, t0) <= 0)
            return H::Separated;
        if (compare(r2, t0) >= 0 && bVsDelta < 0)
            return H::FourIntersections;
        detail::unmatched(p, "hyperbola positive roots around b^2");
    }
    if (compare(r3, Rational(0)) < 0) {
        if (compare(r3, s0) <= 0 && aVsBDelta < 0)
            return H::FourIntersections;
        const int c1 = compare(r1, s0), c2 = compare(r2, s0);
        if ((c1 < 0 && c2 >= 0) || (c1 <= 0 && c2 > 0))
            return H::EllipseInsideHyperbola;
    }
    detail::unmatched(p, "hyperbola simple roots");
}

// ---------------------------------------------------------------------------
// Geometric oracle

struct IntersectionPoint {
    double x = 0, y = 0;
    int multiplicity = 1;
    RealRoot u; // isolating interval of the sheared abscissa u = x - k y
};

struct IntersectionSummary {
    int realPointCount = 0;
    std::vector<IntersectionPoint> points;
    std::vector<int> multiplicities; // ascending
    int complexMultiplicity = 0;     // 4 minus the real multiplicities
    Rational shear = 0;
};

namespace detail {

// Substitutes x = u + k y.
inline Conic<Rational> sheared(const Conic<Rational>& c, const Rational& k)
{
    Conic<Rational> r;
    r.m11 = c.m11;
    r.m12 = c.m12 + k * c.m11;
    r.m22 = c.m22 + Rational(2) * k * c.m12 + k * k * c.m11;
    r.m13 = c.m13;
    r.m23 = c.m23 + k * c.m13;
    r.m33 = c.m33;
    return r;
}

// c as a2 y^2 + a1(u) y + a0(u)
struct InY {
    Poly a2, a1, a0;
};

inline InY in_y(const Conic<Rational>& c)
{
    return {Poly::constant(c.m22), Poly({Rational(2) * c.m23, Rational(2) * c.m12}),
            Poly({c.m33, Rational(2) * c.m13, c.m11})};
}

inline Poly resultant_in_y(const InY& p, const InY& q)
{
    const Poly e20 = p.a2 * q.a0 - p.a0 * q.a2;
    const Poly e21 = p.a2 * q.a1 - p.a1 * q.a2;
    const Poly e10 = p.a1 * q.a0 - p.a0 * q.a1;
    return e20 * e20 - e21 * e10;
}

} // namespace detail

/// Real intersection points of two conics with their multiplicities.
inline IntersectionSummary intersect_conics(const Conic<Rational>& c1, const Conic<Rational>& c2)
{
    static const Rational shears[] = {Rational(0),    Rational(1),     Rational(-1),   Rational(1, 2),
                                      Rational(2),    Rational(-1, 3), Rational(3, 7), Rational(-5, 2),
                                      Rational(7, 11), Rational(13, 3)};
    // Prefer the projection with the most distinct roots on which y is
    // recoverable linearly, i.e. the y-linear combination has no common root
    // with the resultant.
    Poly best;
    Rational k_best = 0;
    int best_score = -1;
    for (const Rational& k : shears) {
        const Conic<Rational> s1 = detail::sheared(c1, k), s2 = detail::sheared(c2, k);
        if (sgn(s1.m22) == 0 || sgn(s2.m22) == 0)
            continue;
        const detail::InY p = detail::in_y(s1), q = detail::in_y(s2);
        const Poly r = detail::resultant_in_y(p, q);
        if (r.is_zero())
            throw Error(ErrorCode::CommonComponent, "resultant vanishes identically");
        if (r.degree() != 4)
            continue;
        const Poly ylin = p.a2 * q.a1 - p.a1 * q.a2;
        const bool separable = !ylin.is_zero() && gcd(r, ylin).degree() == 0;
        const int distinct = distinct_root_count(r);
        const int score = 2 * distinct + (separable ? 1 : 0);
        if (score > best_score) {
            best_score = score;
            best = r;
            k_best = k;
        }
        if (distinct == 4 && separable)
            break;
    }
    if (best_score < 0)
        throw Error(ErrorCode::DegenerateInput, "no admissible projection for the intersection");

    IntersectionSummary out;
    out.shear = k_best;
    const detail::InY p = detail::in_y(detail::sheared(c1, k_best));
    const detail::InY q = detail::in_y(detail::sheared(c2, k_best));
    // y from the y^2-free combination: (a2 b1 - a1 b2) y + (a2 b0 - a0 b2) = 0
    const Poly ylin = p.a2 * q.a1 - p.a1 * q.a2;
    const Poly ycon = p.a2 * q.a0 - p.a0 * q.a2;
    int real_mult = 0;
    for (RealRoot& r : real_roots(best)) {
        while (!r.exact() && Rational(r.hi - r.lo) > Rational(1, 1 << 30))
            detail::refine_once(r);
        const double u = r.approx();
        auto at = [u](const Poly& f) {
            double v = 0;
            for (int i = f.degree(); i >= 0; --i)
                v = v * u + f[i].get_d();
            return v;
        };
        const double y = -at(ycon) / at(ylin);
        out.points.push_back({u + k_best.get_d() * y, y, r.multiplicity, r});
        out.multiplicities.push_back(r.multiplicity);
        real_mult += r.multiplicity;
    }
    std::sort(out.multiplicities.begin(), out.multiplicities.end());
    out.realPointCount = static_cast<int>(out.points.size());
    out.complexMultiplicity = 4 - real_mult;
    return out;
}

/// Coarse geometric description of a (curve, ellipse) pair.
struct CoarseClass {
    int realPointCount = 0;
    std::vector<int> multiplicities; // ascending
    bool centreInside = false;       // ellipse centre in the region bounded by the curve
    std::vector<bool> innerTangency; // per point with multiplicity >= 2, in point order
};

namespace detail {

// Which side of the common tangent line the curve bends toward, relative to
// the unit normal n: sign of -t^T Q t / (grad . n).
inline double bend(const Conic<Rational>& c, double x, double y, double tx, double ty, double nx, double ny)
{
    const double a = c.m11.get_d(), b = c.m12.get_d(), d = c.m13.get_d();
    const double e = c.m22.get_d(), f = c.m23.get_d();
    const double gx = 2 * (a * x + b * y + d), gy = 2 * (b * x + e * y + f);
    const double q = a * tx * tx + 2 * b * tx * ty + e * ty * ty;
    return -q / (gx * nx + gy * ny);
}

} // namespace detail

/// `curve` is the parabola or hyperbola, `ellipse` the real ellipse.
inline CoarseClass coarse_class(const IntersectionSummary& s, const Conic<Rational>& curve,
                                const Conic<Rational>& ellipse)
{
    CoarseClass c;
    c.realPointCount = s.realPointCount;
    c.multiplicities = s.multiplicities;
    const Conic<Rational> n = normalize(curve, classify_type(curve));
    const Rational d = quadratic_det(ellipse);
    const Rational cx = (-ellipse.m13 * ellipse.m22 + ellipse.m23 * ellipse.m12) / d;
    const Rational cy = (-ellipse.m23 * ellipse.m11 + ellipse.m13 * ellipse.m12) / d;
    c.centreInside = sgn(evaluate(n, cx, cy)) < 0;
    for (const IntersectionPoint& p : s.points) {
        if (p.multiplicity < 2)
            continue;
        const double gx = 2 * (n.m11.get_d() * p.x + n.m12.get_d() * p.y + n.m13.get_d());
        const double gy = 2 * (n.m12.get_d() * p.x + n.m22.get_d() * p.y + n.m23.get_d());
        const double len = std::hypot(gx, gy);
        const double nx = gx / len, ny = gy / len;
        const double w1 = detail::bend(curve, p.x, p.y, -ny, nx, nx, ny);
        const double w2 = detail::bend(ellipse, p.x, p.y, -ny, nx, nx, ny);
        c.innerTangency.push_back((w1 > 0) == (w2 > 0));
    }
    return c;
}

/// What the case name says about the real intersection pattern.
struct CoarseExpectation {
    std::vector<std::vector<int>> multiplicities; // accepted multisets, ascending
    std::optional<bool> centreInside;             // checked when set
    std::optional<bool> inner;                    // tangency side, when set
};

inline CoarseExpectation expected_coarse(ParabolaEllipsePosition pos)
{
    using P = ParabolaEllipsePosition;
    switch (pos) {
    case P::Separated: return {{{}}, false, std::nullopt};
    case P::ExternallyTangent: return {{{2}}, false, false};
    case P::EllipseInsideParabola: return {{{}}, true, std::nullopt};
    case P::TwoIntersections: return {{{1, 1}}, std::nullopt, std::nullopt};
    case P::FourIntersections: return {{{1, 1, 1, 1}}, std::nullopt, std::nullopt};
    case P::TwoIntersectionsAndInnerTangent: return {{{1, 1, 2}}, std::nullopt, true};
    case P::OneInnerTangent: return {{{2}, {4}}, true, true};
    case P::TwoInnerTangents: return {{{2, 2}}, true, true};
    case P::OneIntersectionAndInnerTangent: return {{{1, 3}}, std::nullopt, true};
    case P::Indeterminate: break;
    }
    return {};
}

inline CoarseExpectation expected_coarse(HyperbolaEllipsePosition pos)
{
    using H = HyperbolaEllipsePosition;
    switch (pos) {
    case H::Separated: return {{{}}, false, std::nullopt};
    case H::TwoIntersections: return {{{1, 1}}, std::nullopt, std::nullopt};
    case H::OneInnerTangent: return {{{2}, {4}}, true, true};
    case H::TwoInnerTangents: return {{{2, 2}}, true, true};
    case H::TwoIntersectionsAndInnerTangent: return {{{1, 1, 2}}, std::nullopt, true};
    case H::OneOuterTangent: return {{{2}}, false, false};
    case H::TwoOuterTangents: return {{{2, 2}}, false, false};
    case H::TwoIntersectionsAndOuterTangent: return {{{1, 1, 2}}, std::nullopt, false};
    case H::FourIntersections: return {{{1, 1, 1, 1}}, std::nullopt, std::nullopt};
    case H::EllipseInsideHyperbola: return {{{}}, true, std::nullopt};
    case H::OneIntersectionAndInnerTangent: return {{{1, 3}}, std::nullopt, true};
    case H::Indeterminate: break;
    }
    return {};
}

/// Empty when the coarse picture agrees with the expectation, otherwise a
/// description of the first disagreement.
inline std::string coarse_mismatch(const CoarseExpectation& want, const CoarseClass& got)
{
    bool counts = false;
    for (const auto& m : want.multiplicities)
        counts = counts || m == got.multiplicities;
    std::ostringstream os;
    if (!counts) {
        os << "multiplicities {";
        for (int m : got.multiplicities)
            os << " " << m;
        os << " }";
        return os.str();
    }
    if (want.centreInside && *want.centreInside != got.centreInside)
        return got.centreInside ? "centre inside" : "centre outside";
    if (want.inner)
        for (bool inner : got.innerTangency)
            if (inner != *want.inner)
                return inner ? "inner tangency" : "outer tangency";
    return {};
}

} // namespace conicpos
