#pragma once

// Parabola/ellipse relative position from sign conditions on the
// characteristic cubic.

#include "conicpos/position.hpp"
#include "conicpos/reduce.hpp"

namespace conicpos::parabola {

using Position = ParabolaEllipsePosition;

struct SignData {
    Sign Delta, DeltaPrime;
    Sign L1, L2;
    Sign I2, I3, I4, I5;
};

template <class S>
SignData sign_data(const PencilInvariants<S>& v)
{
    const S T2 = v.T * v.T;
    const S T3 = T2 * v.T;
    const S T1sq = v.T1 * v.T1;
    const S T1cu = T1sq * v.T1;
    SignData d;
    d.Delta = sign_of(v.Delta);
    d.DeltaPrime = sign_of(v.DeltaPrime);
    d.L1 = sign_of(v.L1);
    d.L2 = sign_of(v.L2);
    d.I5 = sign_of(S(-3) * v.L0 * v.T1 + v.L1 * v.T);
    d.I4 = sign_of(S(3) * v.L0 * T1sq - S(2) * v.L1 * v.T * v.T1 + v.L2 * T2);
    d.I3 = sign_of(-v.L0 * T1cu + v.L1 * v.T * T1sq - v.L2 * T2 * v.T1 + v.L3 * T3);
    d.I2 = sign_of(-T1cu * v.L0 + v.L3 * T3);
    return d;
}

inline std::vector<SignEntry> trace_of(const SignData& d)
{
    return {{"Delta", d.Delta}, {"DeltaPrime", d.DeltaPrime}, {"L1", d.L1}, {"L2", d.L2},
            {"I2", d.I2},       {"I3", d.I3},                 {"I4", d.I4}, {"I5", d.I5}};
}

/// The nine condition sets on general sign data, in case order.
inline std::vector<Truth> condition_sets(const SignData& d)
{
    using namespace cond;
    const Truth dpos = gt0(d.Delta), dzero = eq0(d.Delta);
    const Truth l1neg = lt0(d.L1), l2neg = lt0(d.L2);
    const Truth either_pos = gt0(d.L1) || gt0(d.L2);
    const Truth inner3 = eq0(d.I3) && eq0(d.I4);
    return {
        dpos && either_pos,
        dzero && either_pos,
        (dpos && l1neg && l2neg && gt0(d.I4)) ||
            (dpos && l1neg && l2neg && ge0(d.I5) && le0(d.I4) && lt0(d.I3)) || (inner3 && gt0(d.I5)) ||
            // circle centred on the axis and strictly inside: -a^2 is a simple root
            (dpos && l1neg && l2neg && eq0(d.I3) && lt0(d.I4) && gt0(d.I5)),
        lt0(d.Delta),
        dpos && lt0(d.I4) && lt0(d.I5),
        le0(d.I2) && dzero && ne0(d.DeltaPrime) && lt0(d.I4) && lt0(d.I5),
        (dzero && l1neg && l2neg && lt0(d.I3) && (gt0(d.I4) || gt0(d.I5))) ||
            (dzero && l1neg && l2neg && eq0(d.I3) && gt0(d.I5) && lt0(d.I4)) || (inner3 && eq0(d.I5)),
        inner3 && lt0(d.I5),
        dzero && eq0(d.DeltaPrime) && lt0(d.I3) && lt0(d.I5),
    };
}

/// Full verdict for a parabola `n` and a real ellipse `m` given in any sign
/// normalization.
template <class S>
Verdict<Position> analyze_general(const Conic<S>& n, const Conic<S>& m)
{
    const Conic<S> nn = normalize(n, ConicClass::Parabola);
    const Conic<S> mm = normalize(m, ConicClass::RealEllipse);
    const SignData d = sign_data(invariants(mm, nn));
    Verdict<Position> v;
    v.trace = trace_of(d);
    detail::resolve(v, condition_sets(d), "parabola/ellipse general");
    return v;
}

template <class S>
Position classify_general(const Conic<S>& n, const Conic<S>& m)
{
    return analyze_general(n, m).position;
}

/// Descending coefficients of the canonical characteristic cubic
/// c0 l^3 + c1 l^2 + c2 l + c3.
template <class S>
Cubic<S> canonical_cubic(const CanonicalParabolaCircle<S>& p)
{
    const S& a2 = p.aSq;
    return Cubic<S>{S(-1) / a2, -(a2 + S(2) * p.yc) / a2,
                    -(S(2) * a2 * p.yc + p.deltaSq - p.xcSq) / a2, -p.deltaSq};
}

template <class S>
void validate(const CanonicalParabolaCircle<S>& p)
{
    if (sign_of(p.aSq) == Sign::Negative || sign_of(p.aSq) == Sign::Zero)
        throw Error(ErrorCode::InvalidParams, "aSq must be positive");
    if (sign_of(p.deltaSq) == Sign::Negative || sign_of(p.deltaSq) == Sign::Zero)
        throw Error(ErrorCode::InvalidParams, "deltaSq must be positive");
    if (sign_of(p.xcSq) == Sign::Negative)
        throw Error(ErrorCode::InvalidParams, "xc^2 must be nonnegative");
}

template <class S>
Verdict<Position> analyze_canonical(const CanonicalParabolaCircle<S>& p)
{
    validate(p);
    const Cubic<S> f = canonical_cubic(p);
    const Cubic<S> g = shift(f, S(-p.aSq));
    const Sign Delta = sign_of(discriminant(f));
    const Sign DeltaPrime = sign_of(derivative_discriminant(f));
    const Sign c1 = sign_of(f.c2), c2 = sign_of(f.c1);
    const Sign g1 = sign_of(g.c2), g2 = sign_of(g.c1), g3 = sign_of(g.c0);
    const Sign A = sign_of(p.aSq * p.aSq - p.deltaSq);
    const std::optional<int> var = sign_variations({negate(sign_of(f.c3)), g1, negate(g2), g3});

    Verdict<Position> v;
    v.trace = {{"Delta", Delta}, {"DeltaPrime", DeltaPrime}, {"c1", c1},  {"c2", c2},
               {"c1'", g1},      {"c2'", g2},                {"c3'", g3}, {"a^4-delta^2", A}};

    using namespace cond;
    const Truth dpos = gt0(Delta), dzero = eq0(Delta);
    const Truth neg12 = lt0(c1) && lt0(c2);
    const Truth either_pos = gt0(c1) || gt0(c2);
    const std::vector<Truth> sets{
        dpos && either_pos,
        dzero && either_pos,
        (dpos && neg12 && var_is(var, 1)) || (eq0(g3) && eq0(g2) && gt0(A)) ||
            (dpos && neg12 && eq0(g3) && gt0(g1) && lt0(g2)),
        lt0(Delta),
        dpos && lt0(g2) && lt0(g1),
        le0(A) && dzero && ne0(DeltaPrime) && lt0(g2) && lt0(g1),
        (dzero && neg12 && lt0(g3) && (gt0(g2) || gt0(g1))) || (dzero && neg12 && eq0(g3) && gt0(g1) && lt0(g2)) ||
            (eq0(g1) && eq0(g2) && eq0(g3)),
        lt0(A) && eq0(g3) && eq0(g2),
        dzero && eq0(DeltaPrime) && lt0(g1) && lt0(g3),
    };
    detail::resolve(v, sets, "parabola/circle canonical");
    return v;
}

template <class S>
Position classify_canonical(const CanonicalParabolaCircle<S>& p)
{
    return analyze_canonical(p).position;
}

} // namespace conicpos::parabola
