#pragma once

// Hyperbola/ellipse relative position. The general classifier works in the
// quadratic field generated by the hyperbola's principal curvatures relative
// to the ellipse, sqrt(T^2 - 4 T1 T2).

#include "conicpos/position.hpp"
#include "conicpos/reduce.hpp"

namespace conicpos::hyperbola {

using Position = HyperbolaEllipsePosition;

struct SignData {
    Sign Delta, DeltaPrime;
    std::optional<int> VarF, VarG, VarQ, VarG3;
    Sign J3, J4, J5, K3, K4, K5, J1;
};

/// Sign data for a normalized (hyperbola, ellipse) invariant record.
template <class S>
SignData sign_data(const PencilInvariants<S>& v)
{
    using E = ext_t<S>;
    using Tr = field_traits<S>;
    const E L0 = Tr::embed(v.L0), L1 = Tr::embed(v.L1), L2 = Tr::embed(v.L2), L3 = Tr::embed(v.L3);
    const E T1 = Tr::embed(v.T1);
    const E root = Tr::sqrt(v.T * v.T - S(4) * v.T1 * v.T2);
    const E T = Tr::embed(v.T);
    const E H0 = (T + root) / (E(2) * T1);
    const E H2 = (T - root) / (E(2) * T1);
    const E H5 = Tr::embed(v.L0 / v.T2);

    SignData d;
    d.Delta = sign_of(v.Delta);
    d.DeltaPrime = sign_of(v.DeltaPrime);
    const Sign s0 = sign_of(v.L0);
    d.J5 = sign_of(E(-3) * L0 + L1 * H0);
    d.J4 = sign_of(E(3) * L0 - E(2) * L1 * H0 + L2 * H0 * H0);
    d.J3 = sign_of(-L0 + L1 * H0 - L2 * H0 * H0 + L3 * H0 * H0 * H0);
    // -3 L0 / H2 + L1 with the division by H2 < 0 removed
    d.K5 = negate(sign_of(E(-3) * L0 + L1 * H2));
    d.K4 = sign_of(E(3) * L0 - E(2) * H2 * L1 + H2 * H2 * L2);
    d.K3 = sign_of(L0 - L1 * H2 + L2 * H2 * H2 - L3 * H2 * H2 * H2);
    const E a = L3 * H5 / (H2 * T1);
    const E b = H5 * (H0 * L1 - L0) / (E(2) * H0 * L0);
    d.J1 = sign_sqrt_minus(a, b);
    d.VarF = sign_variations({s0, sign_of(v.L1), sign_of(v.L2), sign_of(v.L3)});
    d.VarG = sign_variations({s0, d.J5, d.J4, d.J3});
    d.VarQ = sign_variations({s0, d.K5, d.K4, d.K3});
    d.VarG3 = sign_variations({s0, d.J5, d.J4});
    return d;
}

namespace detail {

inline Sign var_sign(const std::optional<int>& v)
{
    if (!v)
        return Sign::Unknown;
    return *v == 0 ? Sign::Zero : Sign::Positive;
}

} // namespace detail

inline std::vector<SignEntry> trace_of(const SignData& d)
{
    auto count = [](const char* name, const std::optional<int>& v) {
        return SignEntry{std::string(name) + "=" + (v ? std::to_string(*v) : "?"), detail::var_sign(v)};
    };
    return {{"Delta", d.Delta}, {"DeltaPrime", d.DeltaPrime}, count("VarF", d.VarF), count("VarG", d.VarG),
            count("VarQ", d.VarQ), count("VarG3", d.VarG3), {"J1", d.J1}, {"J3", d.J3}, {"J4", d.J4},
            {"J5", d.J5}, {"K3", d.K3}, {"K4", d.K4}, {"K5", d.K5}};
}

inline std::vector<Truth> condition_sets(const SignData& d)
{
    using namespace cond;
    const Truth dpos = gt0(d.Delta), dzero = eq0(d.Delta);
    const Truth j34 = eq0(d.J3) && eq0(d.J4);
    return {
        dpos && var_is(d.VarF, 2) && var_is(d.VarQ, 0),
        lt0(d.Delta),
        (dzero && var_is(d.VarF, 0) && ne0(d.J3) && var_is(d.VarG, 2)) || (j34 && eq0(d.J5)) ||
            (eq0(d.J1) && eq0(d.J3) && ne0(d.J4) && gt0(d.J5)),
        j34 && lt0(d.J5),
        (dzero && ne0(d.DeltaPrime) && var_is(d.VarG, 0) && ne0(d.J3)) ||
            (dzero && var_is(d.VarG3, 0) && eq0(d.J3) && lt0(d.J5) && eq0(d.J1)),
        dzero && var_is(d.VarF, 2) && var_is(d.VarQ, 0) && ne0(d.K3),
        eq0(d.K3) && eq0(d.K4),
        dzero && var_is(d.VarQ, 2) && ne0(d.K3),
        (dpos && var_is(d.VarG, 0)) || (dpos && var_gt(d.VarQ, 0)),
        (dpos && var_is(d.VarF, 0) && ne0(d.J3) && var_is(d.VarG, 2)) ||
            (dpos && var_is(d.VarF, 0) && eq0(d.J3) && ne0(d.J4) && var_gt(d.VarG3, 0)) || (j34 && gt0(d.J5)),
        dzero && eq0(d.DeltaPrime) && lt0(d.J3) && lt0(d.J5),
    };
}

/// Full verdict for a hyperbola `nh` and a real ellipse `m` given in any
/// sign normalization.
template <class S>
Verdict<Position> analyze_general(const Conic<S>& nh, const Conic<S>& m)
{
    const Conic<S> hh = normalize(nh, ConicClass::Hyperbola);
    const Conic<S> mm = normalize(m, ConicClass::RealEllipse);
    const SignData d = sign_data(invariants(mm, hh));
    Verdict<Position> v;
    v.trace = trace_of(d);
    conicpos::detail::resolve(v, condition_sets(d), "hyperbola/ellipse general");
    return v;
}

template <class S>
Position classify_general(const Conic<S>& nh, const Conic<S>& m)
{
    return analyze_general(nh, m).position;
}

/// Descending coefficients a3 l^3 + a2 l^2 + a1 l + a0 of the canonical
/// characteristic cubic.
template <class S>
Cubic<S> canonical_cubic(const CanonicalHyperbolaCircle<S>& h)
{
    const S ab = h.aSq * h.bSq;
    return Cubic<S>{S(-1) / ab, -(h.aSq - h.bSq - h.deltaSq + h.xcSq + h.ycSq) / ab,
                    (ab + h.aSq * h.deltaSq - h.aSq * h.ycSq - h.bSq * h.deltaSq + h.bSq * h.xcSq) / ab,
                    -h.deltaSq};
}

template <class S>
void validate(const CanonicalHyperbolaCircle<S>& h)
{
    auto positive = [](const S& x, const char* what) {
        const Sign s = sign_of(x);
        if (s == Sign::Negative || s == Sign::Zero)
            throw Error(ErrorCode::InvalidParams, std::string(what) + " must be positive");
    };
    positive(h.aSq, "aSq");
    positive(h.bSq, "bSq");
    positive(h.deltaSq, "deltaSq");
    if (sign_of(h.xcSq) == Sign::Negative || sign_of(h.ycSq) == Sign::Negative)
        throw Error(ErrorCode::InvalidParams, "squared centre coordinates must be nonnegative");
}

template <class S>
Verdict<Position> analyze_canonical(const CanonicalHyperbolaCircle<S>& h)
{
    validate(h);
    const Cubic<S> f = canonical_cubic(h);
    const Cubic<S> g = shift(f, S(-h.aSq));
    const Cubic<S> q = shift(f, h.bSq);
    const Sign Delta = sign_of(discriminant(f));
    const Sign DeltaPrime = sign_of(derivative_discriminant(f));
    const std::optional<int> vf = sign_variations(f), vg = sign_variations(g), vq = sign_variations(q);
    const Sign a0p = sign_of(g.c0), a1p = sign_of(g.c1), a2p = sign_of(g.c2);
    const Sign a0pp = sign_of(q.c0), a1pp = sign_of(q.c1);
    const Sign yc = sign_of(h.ycSq);
    // |yc| = b + delta, i.e. yc^2 - b^2 - delta^2 = sqrt(4 b^2 delta^2)
    const Sign yb = sign_sqrt_minus<S>(S(4) * h.bSq * h.deltaSq, S(h.ycSq - h.bSq - h.deltaSq));

    Verdict<Position> v;
    v.trace = {{"Delta", Delta},
               {"DeltaPrime", DeltaPrime},
               {"Var(f)=" + (vf ? std::to_string(*vf) : "?"), detail::var_sign(vf)},
               {"Var(g)=" + (vg ? std::to_string(*vg) : "?"), detail::var_sign(vg)},
               {"Var(q)=" + (vq ? std::to_string(*vq) : "?"), detail::var_sign(vq)},
               {"a0'", a0p},
               {"a1'", a1p},
               {"a2'", a2p},
               {"a0''", a0pp},
               {"a1''", a1pp},
               {"yc^2", yc},
               {"2b*delta-(yc^2-b^2-delta^2)", yb}};

    using namespace cond;
    const Truth dpos = gt0(Delta), dzero = eq0(Delta);
    const Truth on_vertex = eq0(yb);
    const std::vector<Truth> sets{
        dpos && var_is(vf, 2) && var_is(vq, 0),
        lt0(Delta),
        (dzero && var_is(vf, 0) && var_is(vg, 2) && ne0(a0p)) || (eq0(a0p) && ge0(a2p) && on_vertex),
        eq0(a0p) && eq0(a1p) && lt0(a2p),
        (dzero && ne0(DeltaPrime) && var_is(vg, 0) && ne0(a0p)) || (eq0(a0p) && on_vertex && lt0(a2p)),
        dzero && var_is(vf, 2) && var_is(vq, 0) && ne0(yc),
        eq0(a0pp) && eq0(a1pp),
        dzero && var_is(vq, 2) && ne0(a0pp),
        dpos && (var_is(vg, 0) || var_gt(vq, 0)),
        var_is(vf, 0) && ((dpos && ne0(a0p) && var_is(vg, 2)) || (dpos && eq0(a0p) && ne0(a1p) && var_gt(vg, 0)) ||
                          (eq0(a0p) && eq0(a1p) && gt0(a2p))),
        dzero && eq0(DeltaPrime) && lt0(a0p) && lt0(a2p),
    };
    conicpos::detail::resolve(v, sets, "hyperbola/circle canonical");
    return v;
}

template <class S>
Position classify_canonical(const CanonicalHyperbolaCircle<S>& h)
{
    return analyze_canonical(h).position;
}

} // namespace conicpos::hyperbola
