#pragma once

// Dense univariate polynomials over Q with exact real root isolation
// (square-free decomposition + Sturm sequences + bisection).

#include "conicpos/numeric.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace conicpos {

/// Coefficients in ascending powers; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly constant(const Rational& k) { return Poly({k}); }
    static Poly monomial(const Rational& k, int degree)
    {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        c.back() = k;
        return Poly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const
    {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * static_cast<long>(i);
        return Poly(std::move(d));
    }

    Poly monic() const
    {
        if (is_zero())
            return {};
        std::vector<Rational> m(c_);
        const Rational lc = c_.back();
        for (Rational& x : m)
            x /= lc;
        return Poly(std::move(m));
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a)
    {
        std::vector<Rational> r(a.c_);
        for (Rational& x : r)
            x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree())
            return {Poly(), a};
        std::vector<Rational> rem(a.c_);
        std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            const Rational t = rem[k + b.degree()] / b.leading();
            quo[k] = t;
            for (int j = 0; j <= b.degree(); ++j)
                rem[k + j] -= t * b.c_[j];
        }
        rem.resize(static_cast<std::size_t>(b.degree()));
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
inline Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's algorithm: returns (p1, p2, ...) with p = lc * prod p_i^i, each p_i
/// monic and square-free; trailing entries are nonconstant or 1.
inline std::vector<Poly> squarefree_decomposition(const Poly& p)
{
    std::vector<Poly> out;
    if (p.degree() < 1)
        return out;
    const Poly dp = p.derivative();
    Poly a = gcd(p, dp);
    Poly b = divmod(p, a).first;
    Poly c = divmod(dp, a).first;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        a = gcd(b, d);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() < 1)
        out.pop_back();
    return out;
}

/// Simplest rational strictly between lo and hi (lo < hi).
inline Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (sgn(lo) < 0 && sgn(hi) > 0)
        return 0;
    if (sgn(hi) <= 0)
        return -simplest_between(-hi, -lo);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    const Rational next(fl + 1);
    if (next < hi)
        return next;
    // lo and hi share the integer part fl
    const Rational base(fl);
    const Rational lo_frac = lo - base;
    const Rational hi_frac = hi - base;
    if (sgn(lo_frac) == 0) {
        // (fl, hi): the simplest is fl + 1/n with the smallest n > 1/hi_frac
        const Rational inv = Rational(1) / hi_frac;
        mpz_class n;
        mpz_fdiv_q(n.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        Rational r = base + Rational(1) / Rational(n + 1);
        r.canonicalize();
        return r;
    }
    Rational r = base + Rational(1) / simplest_between(Rational(1) / hi_frac, Rational(1) / lo_frac);
    r.canonicalize();
    return r;
}

/// A real root of a square-free factor: either exact (lo == hi) or the unique
/// root of `factor` in the open interval (lo, hi), with factor(hi) != 0.
struct RealRoot {
    Rational lo, hi;
    int multiplicity = 1;
    Poly factor;

    bool exact() const { return lo == hi; }
    double approx() const { return exact() ? lo.get_d() : Rational((lo + hi) / 2).get_d(); }
};

namespace detail {

inline std::vector<Poly> sturm_chain(const Poly& p)
{
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_changes(const std::vector<Poly>& chain, const Rational& x)
{
    int changes = 0, last = 0;
    for (const Poly& q : chain) {
        const int s = sgn(q(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// Roots in the half-open interval (lo, hi].
inline int roots_in(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi)
{
    return sturm_changes(chain, lo) - sturm_changes(chain, hi);
}

inline Rational root_bound(const Poly& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = abs(p[i] / p.leading());
        if (r > m)
            m = r;
    }
    return m + 1;
}

inline void refine_once(RealRoot& r)
{
    if (r.exact())
        return;
    const Rational mid = (r.lo + r.hi) / 2;
    const int sm = sgn(r.factor(mid));
    if (sm == 0) {
        r.lo = r.hi = mid;
        return;
    }
    if (sm == sgn(r.factor(r.hi)))
        r.hi = mid;
    else
        r.lo = mid;
}

inline const Rational& isolation_width()
{
    static const Rational w(mpz_class(1), mpz_class(1) << 40);
    return w;
}

// Tries to snap a narrow interval to a rational root of small height.
inline void snap_rational(RealRoot& r)
{
    if (r.exact())
        return;
    const Rational cand = simplest_between(r.lo, r.hi);
    if (sgn(r.factor(cand)) == 0)
        r.lo = r.hi = cand;
}

inline void isolate_squarefree(const Poly& p, int multiplicity, std::vector<RealRoot>& out)
{
    if (p.degree() == 1) {
        const Rational x = -p[0] / p[1];
        out.push_back({x, x, multiplicity, p});
        return;
    }
    const std::vector<Poly> chain = sturm_chain(p);
    const Rational bound = root_bound(p);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int n = roots_in(chain, lo, hi);
        if (n == 0)
            continue;
        if (n == 1) {
            RealRoot r{lo, hi, multiplicity, p};
            if (sgn(p(hi)) == 0) {
                r.lo = hi;
            } else {
                while (!r.exact() && Rational(r.hi - r.lo) >= isolation_width())
                    refine_once(r);
                snap_rational(r);
            }
            out.push_back(std::move(r));
            continue;
        }
        const Rational mid = (lo + hi) / 2;
        stack.push_back({mid, hi});
        stack.push_back({lo, mid});
    }
}

} // namespace detail

/// Exact comparison of a real root with a rational: -1, 0 or 1.
inline int compare(const RealRoot& r, const Rational& x)
{
    if (r.exact())
        return cmp(r.lo, x);
    if (x <= r.lo)
        return 1;
    if (x >= r.hi)
        return -1;
    const int sx = sgn(r.factor(x));
    if (sx == 0)
        return 0;
    // the factor keeps the sign it has at hi on (root, hi]
    return sx == sgn(r.factor(r.hi)) ? -1 : 1;
}

/// Exact comparison of two real roots whose factors are equal or coprime
/// (e.g. distinct parts of one square-free decomposition).
inline int compare(RealRoot a, RealRoot b)
{
    if (a.factor == b.factor && !a.exact() && !b.exact())
        return cmp(a.lo, b.lo);
    for (;;) {
        if (a.exact())
            return -compare(b, a.lo);
        if (b.exact())
            return compare(a, b.lo);
        if (a.hi <= b.lo)
            return -1;
        if (b.hi <= a.lo)
            return 1;
        detail::refine_once(a);
        detail::refine_once(b);
    }
}

/// All real roots of p with multiplicities, ascending.
inline std::vector<RealRoot> real_roots(const Poly& p)
{
    std::vector<RealRoot> out;
    const std::vector<Poly> parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() > 0)
            detail::isolate_squarefree(parts[i], static_cast<int>(i) + 1, out);
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return compare(a, b) < 0; });
    return out;
}

/// Degree of the square-free part: the number of distinct complex roots.
inline int distinct_root_count(const Poly& p)
{
    if (p.degree() < 1)
        return 0;
    return p.degree() - gcd(p, p.derivative()).degree();
}

} // namespace conicpos
