#ifndef LEFSURF_ELLIPTIC_HPP
#define LEFSURF_ELLIPTIC_HPP

#include <optional>
#include <vector>

#include "lefsurf/poly.hpp"
#include "lefsurf/util.hpp"

namespace lefsurf {

// Scale x by an integer using double-and-add (works in any ring, keeps
// context-carrying coefficient types attached).
template <class R>
R ring_mul_int(const R& x, long n)
{
    if (n == 0) return R{};
    bool neg = n < 0;
    unsigned long m = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    R acc{};
    R base = x;
    bool acc_set = false;
    while (m) {
        if (m & 1) {
            acc = acc_set ? acc + base : base;
            acc_set = true;
        }
        m >>= 1;
        if (m) base = base + base;
    }
    return neg ? -acc : acc;
}

// y^2 = x^3 + a4 x + a6 over an exact field F.
template <class F>
struct EllipticCurve {
    F a4, a6;

    EllipticCurve(F a4_, F a6_) : a4(std::move(a4_)), a6(std::move(a6_))
    {
        F d = discriminant_value();
        if (is_zero(d)) fail(ErrorCode::NotNodal, "singular Weierstrass equation");
    }

    F discriminant_value() const
    {
        // -16 (4 a^3 + 27 b^2)
        F a3 = a4 * a4;
        a3 = a3 * a4;
        F b2 = a6 * a6;
        F t = ring_mul_int(a3, 4) + ring_mul_int(b2, 27);
        return ring_mul_int(t, -16);
    }

    F rhs(const F& x) const
    {
        F x2 = x * x;
        F x3 = x2 * x;
        return x3 + a4 * x + a6;
    }

    bool on_curve(const F& x, const F& y) const { return is_zero(y * y - rhs(x)); }
};

template <class F>
struct ECPoint {
    bool infinity = true;
    F x{}, y{};

    ECPoint() = default;
    ECPoint(F x_, F y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}

    static ECPoint O() { return ECPoint(); }

    bool operator==(const ECPoint& o) const
    {
        if (infinity || o.infinity) return infinity == o.infinity;
        return is_zero(x - o.x) && is_zero(y - o.y);
    }
    bool operator!=(const ECPoint& o) const { return !(*this == o); }
};

template <class F>
ECPoint<F> ec_neg(const ECPoint<F>& p)
{
    if (p.infinity) return p;
    return ECPoint<F>(p.x, -p.y);
}

template <class F>
ECPoint<F> ec_add(const EllipticCurve<F>& E, const ECPoint<F>& p, const ECPoint<F>& q)
{
    if (p.infinity) return q;
    if (q.infinity) return p;
    F dx = p.x - q.x;
    F lambda{};
    if (is_zero(dx)) {
        F sy = p.y + q.y;
        if (is_zero(sy)) return ECPoint<F>::O(); // q = -p (covers y = 0)
        // tangent: (3x^2 + a) / (2y)
        F xx = p.x * p.x;
        F num = ring_mul_int(xx, 3) + E.a4;
        F den = ring_mul_int(p.y, 2);
        lambda = num * ring_inv(den);
    } else {
        F dy = q.y - p.y;
        lambda = dy * ring_inv(F(q.x - p.x));
    }
    F l2 = lambda * lambda;
    F x3 = l2 - p.x - q.x;
    F y3 = lambda * (p.x - x3) - p.y;
    return ECPoint<F>(std::move(x3), std::move(y3));
}

template <class F>
ECPoint<F> ec_scalar_mul(const EllipticCurve<F>& E, const Int& n, const ECPoint<F>& p)
{
    Int m = n;
    ECPoint<F> base = p;
    if (m < 0) {
        base = ec_neg(base);
        m = -m;
    }
    ECPoint<F> acc = ECPoint<F>::O();
    std::size_t bits = m == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = ec_add(E, acc, acc);
        if (mpz_tstbit(m.get_mpz_t(), i)) acc = ec_add(E, acc, base);
    }
    return acc;
}

// Division polynomials for y^2 = x^3 + a x + b over a commutative ring R
// with invertible 2: psi_n = P_n(x) for n odd, psi_n = y * P_n(x) for n even.
// Requires a hook halve(R) (division by 2).
template <class R, class Halve>
std::vector<Poly<R>> division_poly_table(const R& a, const R& b, long n_max, Halve&& halve)
{
    using P = Poly<R>;
    // build the unit of R from a or b (one of them may be zero)
    R unit{};
    if (!is_zero(a))
        unit = ring_unit(a);
    else if (!is_zero(b))
        unit = ring_unit(b);
    else
        fail(ErrorCode::NotNodal, "a = b = 0 is singular");

    P cpoly(std::vector<R>{b, a, R{}, unit}); // x^3 + a x + b
    P csq = cpoly * cpoly;

    std::vector<P> T(static_cast<std::size_t>(std::max(5L, n_max + 1)));
    T[0] = P();                                   // 0
    T[1] = P(unit);                               // 1
    T[2] = P(ring_mul_int(unit, 2));              // 2   (psi_2 = 2y)
    R aa = a * a;
    R bb = b * b;
    R ab = a * b;
    R aaa = aa * a;
    {
        // psi_3 = 3x^4 + 6a x^2 + 12b x - a^2
        std::vector<R> v{-aa, ring_mul_int(b, 12), ring_mul_int(a, 6), R{},
                         ring_mul_int(unit, 3)};
        T[3] = P(std::move(v));
    }
    {
        // psi_4 = 4y (x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - 8b^2 - a^3)
        std::vector<R> v{ring_mul_int(bb, -8) - aaa, ring_mul_int(ab, -4),
                         ring_mul_int(aa, -5), ring_mul_int(b, 20), ring_mul_int(a, 5),
                         R{}, unit};
        T[4] = P(std::move(v)) * ring_mul_int(unit, 4);
    }
    for (long n = 5; n <= n_max; ++n) {
        std::size_t un = static_cast<std::size_t>(n);
        if (n % 2 == 1) {
            long m = (n - 1) / 2;
            std::size_t um = static_cast<std::size_t>(m);
            P t1 = T[um + 2] * T[um] * T[um] * T[um];
            P t2 = T[um - 1] * T[um + 1] * T[um + 1] * T[um + 1];
            // psi parity: for m even the first term carries y^4 = csq
            if (m % 2 == 0)
                T[un] = csq * t1 - t2;
            else
                T[un] = t1 - csq * t2;
        } else {
            long m = n / 2;
            std::size_t um = static_cast<std::size_t>(m);
            P t1 = T[um + 2] * T[um - 1] * T[um - 1];
            P t2 = T[um - 2] * T[um + 1] * T[um + 1];
            P prod = T[um] * (t1 - t2);
            // divide by 2 coefficientwise
            std::vector<R> v(prod.coeffs());
            for (auto& cv : v) cv = halve(cv);
            T[un] = P(std::move(v));
        }
    }
    T.resize(static_cast<std::size_t>(n_max + 1));
    return T;
}

template <class R, class Halve>
Poly<R> division_polynomial(const R& a, const R& b, long ell, Halve&& halve)
{
    if (ell < 1) fail(ErrorCode::InternalError, "division polynomial index");
    auto T = division_poly_table(a, b, std::max(4L, ell), halve);
    return T[static_cast<std::size_t>(ell)];
}

inline QPoly division_polynomial_q(const Rat& a, const Rat& b, long ell)
{
    return division_polynomial(a, b, ell, [](const Rat& c) { return c / 2; });
}

// For a pencil y^2 = x^3 + a(t) x + b(t): psi_ell as a bivariate polynomial
// (outer variable x, inner t).
inline QQPoly division_polynomial_pencil(const QPoly& a, const QPoly& b, long ell)
{
    return division_polynomial(a, b, ell,
                               [](const QPoly& c) { return c * Rat(1, 2); });
}

} // namespace lefsurf

#endif
