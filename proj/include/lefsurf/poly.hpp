#ifndef LEFSURF_POLY_HPP
#define LEFSURF_POLY_HPP

#include <algorithm>
#include <vector>

#include "lefsurf/rational.hpp"
#include "lefsurf/util.hpp"

namespace lefsurf {

// Multiplicative inverse hooks for the coefficient fields we use.
inline Rat ring_inv(const Rat& x)
{
    if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "1/0 in Q");
    return Rat(1) / x;
}
inline QQi ring_inv(const QQi& x) { return x.inverse(); }

// Multiplicative unit of the ring, derived from a sample value so that
// context-carrying types (finite field elements) stay attached.
inline Rat ring_unit(const Rat&) { return Rat(1); }
inline QQi ring_unit(const QQi&) { return QQi(Rat(1)); }

// Dense univariate polynomial over a commutative ring R.
// Coefficients stored low -> high; no trailing zeros (zero poly = empty).
// R needs: default ctor = 0, + - * unary-, ==, free is_zero(R).
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(const R& c)
    {
        if (!is_zero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const R& c, std::size_t k)
    {
        if (is_zero(c)) return Poly();
        std::vector<R> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    const R& operator[](std::size_t i) const
    {
        static const R zero{};
        return i < c_.size() ? c_[i] : zero;
    }

    const R& lead() const
    {
        if (zero()) fail(ErrorCode::InternalError, "lead of zero polynomial");
        return c_.back();
    }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const
    {
        std::vector<R> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const
    {
        std::vector<R> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
        return Poly(std::move(v));
    }

    Poly operator*(const Poly& o) const
    {
        if (zero() || o.zero()) return Poly();
        std::vector<R> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }

    Poly operator*(const R& s) const
    {
        if (is_zero(s)) return Poly();
        Poly r(*this);
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const
    {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Multiply by x^k.
    Poly shifted(std::size_t k) const
    {
        if (zero()) return Poly();
        std::vector<R> v(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
        return Poly(std::move(v));
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            R m = c_[i];
            for (std::size_t k = 1; k < i; ++k) m = m + c_[i]; // i * c_i without ring_one
            v[i - 1] = m;
        }
        return Poly(std::move(v));
    }

    template <class S>
    S eval(const S& x) const
    {
        S acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
        return acc;
    }

    // Horner with an explicit coefficient embedding R -> S.
    template <class S, class Map>
    S eval_map(const S& x, Map&& embed) const
    {
        S acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
        return acc;
    }

    // f(x + a)
    Poly taylor_shift(const R& a) const
    {
        if (is_zero(a) || zero()) return *this;
        Poly res;
        for (std::size_t i = c_.size(); i-- > 0;) {
            res = res * Poly(std::vector<R>{a, unit_from(a)});
            res += Poly(c_[i]);
        }
        return res;
    }

    // f(s * x)
    Poly scale_arg(const R& s) const
    {
        Poly r(*this);
        R p = s;
        for (std::size_t i = 1; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] * p;
            p = p * s;
        }
        r.trim();
        return r;
    }

    // x^deg * f(1/x)
    Poly reversed() const
    {
        Poly r(*this);
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

private:
    // A multiplicative unit compatible with a; for context-carrying
    // coefficient types (finite fields etc.) derive it from a itself.
    static R unit_from(const R& a)
    {
        if constexpr (requires(const R& x) { x.one(); })
            return a.one();
        else
            return R(1);
    }

    void trim()
    {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) { return p.zero(); }

template <class R>
Poly<R> ring_unit(const Poly<R>& sample)
{
    if (sample.zero()) fail(ErrorCode::InternalError, "ring_unit of zero polynomial");
    return Poly<R>(ring_unit(sample.lead()));
}

// Division with remainder over a coefficient field.
template <class R>
void divmod(const Poly<R>& a, const Poly<R>& b, Poly<R>& q, Poly<R>& r)
{
    if (b.zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    q = Poly<R>();
    r = a;
    R inv_lb = ring_inv(b.lead());
    while (!r.zero() && r.degree() >= b.degree()) {
        R c = r.lead() * inv_lb;
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        Poly<R> t = Poly<R>::monomial(c, k);
        q += t;
        r -= t * b;
    }
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b)
{
    Poly<R> q, r;
    divmod(a, b, q, r);
    return r;
}

template <class R>
Poly<R> operator/(const Poly<R>& a, const Poly<R>& b)
{
    Poly<R> q, r;
    divmod(a, b, q, r);
    return q;
}

template <class R>
Poly<R> make_monic(const Poly<R>& f)
{
    if (f.zero()) return f;
    return f * ring_inv(f.lead());
}

// Monic gcd over a field.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b)
{
    while (!b.zero()) {
        Poly<R> r = a % b;
        a = b;
        b = r;
    }
    if (a.zero()) return a;
    return make_monic(a);
}

// Extended gcd: returns g monic with u*a + v*b = g.
template <class R>
Poly<R> poly_xgcd(const Poly<R>& a, const Poly<R>& b, Poly<R>& u, Poly<R>& v)
{
    Poly<R> r0 = a, r1 = b;
    Poly<R> u0(std::vector<R>{}), v0, u1, v1;
    // u0=1, v0=0, u1=0, v1=1, with unit taken from the inputs
    R one{};
    if (!a.zero())
        one = ring_inv(a.lead()) * a.lead();
    else if (!b.zero())
        one = ring_inv(b.lead()) * b.lead();
    else
        fail(ErrorCode::DivisionByZero, "xgcd(0,0)");
    u0 = Poly<R>(one);
    v1 = Poly<R>(one);
    while (!r1.zero()) {
        Poly<R> q, r;
        divmod(r0, r1, q, r);
        Poly<R> u2 = u0 - q * u1;
        Poly<R> v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    R lc = ring_inv(r0.lead());
    u = u0 * lc;
    v = v0 * lc;
    return r0 * lc;
}

// f / gcd(f, f') (monic), over a field of characteristic zero or large.
template <class R>
Poly<R> squarefree_part(const Poly<R>& f)
{
    if (f.zero() || f.degree() == 0) return f;
    Poly<R> g = poly_gcd(f, f.derivative());
    if (g.degree() <= 0) return make_monic(f);
    return make_monic(f / g);
}

// Yun's squarefree decomposition in characteristic zero:
// f = lc * prod g_i^i with the g_i squarefree, pairwise coprime, monic.
template <class R>
std::vector<std::pair<Poly<R>, int>> squarefree_decomposition(const Poly<R>& f)
{
    std::vector<std::pair<Poly<R>, int>> out;
    if (f.zero() || f.degree() < 1) return out;
    Poly<R> a = make_monic(f);
    Poly<R> g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly<R> w = a / g;
    Poly<R> y = a.derivative() / g;
    Poly<R> z = y - w.derivative();
    int i = 1;
    while (!z.zero() || w.degree() > 0) {
        Poly<R> gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        if (gi.degree() == 0 && w.degree() == 0) break;
        w = w / gi;
        y = z / gi;
        z = y - w.derivative();
        ++i;
        if (i > f.degree() + 1) fail(ErrorCode::InternalError, "Yun did not terminate");
    }
    return out;
}

// Resultant over a coefficient field via the Euclidean PRS, using
//   res(f,g) = (-1)^(deg f * deg g) res(g,f)
//   res(g,f) = lc(g)^(deg f - deg(f mod g)) res(g, f mod g).
template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b)
{
    if (a.zero() || b.zero()) return R{};
    R one = ring_inv(a.lead()) * a.lead();
    R acc = one;
    bool negate = false;
    Poly<R> f = a, g = b;
    if (f.degree() < g.degree()) {
        if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
        std::swap(f, g);
    }
    while (true) {
        if (g.degree() == 0) {
            for (long i = 0; i < f.degree(); ++i) acc = acc * g.lead();
            return negate ? -acc : acc;
        }
        Poly<R> r = f % g;
        if (r.zero()) return R{}; // deg g >= 1 divides f: common root
        if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
        for (long i = 0; i < f.degree() - r.degree(); ++i) acc = acc * g.lead();
        f = g;
        g = r;
    }
}

// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f)
template <class R>
R discriminant(const Poly<R>& f)
{
    if (f.degree() < 1) fail(ErrorCode::InternalError, "discriminant needs deg >= 1");
    R res = resultant(f, f.derivative());
    R d = res * ring_inv(f.lead());
    long deg = f.degree();
    if (((deg * (deg - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

// Lagrange interpolation through (xs[i], ys[i]) over a field.
template <class R>
Poly<R> interpolate(const std::vector<R>& xs, const std::vector<R>& ys)
{
    Poly<R> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        R denom{};
        bool first = true;
        Poly<R> numer;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            R d = xs[i] - xs[j];
            if (first) {
                denom = d;
                numer = Poly<R>(std::vector<R>{-xs[j], ring_inv(d) * d});
                first = false;
            } else {
                denom = denom * d;
                numer *= Poly<R>(std::vector<R>{-xs[j], ring_inv(d) * d});
            }
        }
        if (first) return Poly<R>(ys[i]); // single node
        acc += numer * (ys[i] * ring_inv(denom));
    }
    return acc;
}

using QPoly = Poly<Rat>;
using QiPoly = Poly<QQi>;
using QQPoly = Poly<QPoly>; // bivariate: outer variable x, inner t

// Content (gcd of numerators / lcm of denominators) and primitive part.
inline Rat content(const QPoly& f)
{
    if (f.zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        if (sgn(c) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return sgn(f.lead()) < 0 ? Rat(-c) : c;
}

// Integer-coefficient primitive form: f / content(f), positive lead.
inline QPoly primitive_part(const QPoly& f)
{
    if (f.zero()) return f;
    return f * ring_inv(content(f));
}

// Naive height: max |coefficient| of the primitive integer form.
inline Int poly_height(const QPoly& f)
{
    QPoly p = primitive_part(f);
    Int h = 0;
    for (const auto& c : p.coeffs()) {
        Int a = abs(c.get_num());
        if (a > h) h = a;
    }
    return h;
}

// deg_t bound for Res_x(f,g) of bivariate polynomials.
inline long resultant_degree_bound(const QQPoly& f, const QQPoly& g)
{
    auto tdeg = [](const QQPoly& p) {
        long d = 0;
        for (const auto& c : p.coeffs()) d = std::max(d, c.zero() ? 0 : c.degree());
        return d;
    };
    return f.degree() * tdeg(g) + g.degree() * tdeg(f);
}

// Res_x over Q[t] by evaluation at t = 0,1,2,... and interpolation.
// Rejects evaluation points where either leading coefficient drops.
inline QPoly resultant_bivariate(const QQPoly& f, const QQPoly& g)
{
    if (f.zero() || g.zero()) return QPoly();
    long bound = resultant_degree_bound(f, g);
    std::vector<Rat> xs, ys;
    Rat t(0);
    while (static_cast<long>(xs.size()) < bound + 1) {
        Rat lf = f.lead().eval(t);
        Rat lg = g.lead().eval(t);
        if (sgn(lf) != 0 && sgn(lg) != 0) {
            std::vector<Rat> fc, gc;
            for (const auto& c : f.coeffs()) fc.push_back(c.eval(t));
            for (const auto& c : g.coeffs()) gc.push_back(c.eval(t));
            xs.push_back(t);
            ys.push_back(resultant(QPoly(std::move(fc)), QPoly(std::move(gc))));
        }
        t += 1;
    }
    return interpolate(xs, ys);
}

inline QPoly discriminant_bivariate_in_x(const QQPoly& f)
{
    QQPoly fx;
    {
        // d/dx with rational coefficients
        std::vector<QPoly> v;
        for (long i = 1; i <= f.degree(); ++i)
            v.push_back(f[static_cast<std::size_t>(i)] * Rat(i));
        fx = QQPoly(std::move(v));
    }
    QPoly res = resultant_bivariate(f, fx);
    // divide by lc_x(f); exactness: lc divides res in Q[t]
    QPoly q, r;
    divmod(res, f.lead(), q, r);
    if (!r.zero()) fail(ErrorCode::InternalError, "discriminant division not exact");
    long d = f.degree();
    if (((d * (d - 1)) / 2) % 2 != 0) q = -q;
    return q;
}

inline std::string poly_str(const QPoly& f, const std::string& var = "x")
{
    if (f.zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; --i) {
        const Rat& c = f[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) s += "-";
        Rat a = abs(c);
        bool unit = (a == 1) && i > 0;
        if (!unit) s += a.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace lefsurf

#endif
