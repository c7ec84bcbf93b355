#include "lefsurf/algebraic.hpp"

#include <algorithm>
#include <cmath>

namespace lefsurf {

namespace {

// Plain complex point at explicit precision (no radius tracking); used
// only inside the Aberth iteration, whose output is certified afterwards.
struct CPt {
    Real re, im;
    explicit CPt(long p) : re(p), im(p) {}
};

CPt cadd(const CPt& a, const CPt& b)
{
    CPt r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

CPt csub(const CPt& a, const CPt& b)
{
    CPt r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

CPt cmul(const CPt& a, const CPt& b)
{
    CPt r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

CPt cdiv(const CPt& a, const CPt& b)
{
    long p = std::max(a.re.prec(), b.re.prec());
    CPt r(p);
    Real n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) {
        // caller perturbs on collision; return a large dummy
        r.re = Real::from_long(1, p);
        r.im = Real::from_long(0, p);
        return r;
    }
    r.re = (a.re * b.re + a.im * b.im) / n;
    r.im = (a.im * b.re - a.re * b.im) / n;
    return r;
}

double cabs_d(const CPt& a)
{
    double x = a.re.to_double(), y = a.im.to_double();
    return std::hypot(x, y);
}

} // namespace

CBall eval_qpoly(const QPoly& f, const CBall& x, long prec)
{
    CBall acc = CBall::exact_rat(Rat(0), prec);
    for (long i = f.degree(); i >= 0; --i)
        acc = acc * x + CBall::exact_rat(f[static_cast<std::size_t>(i)], prec);
    return acc;
}

CBall eval_qipoly(const QiPoly& f, const CBall& x, long prec)
{
    CBall acc = CBall::exact_rat(Rat(0), prec);
    for (long i = f.degree(); i >= 0; --i)
        acc = acc * x + CBall::exact_qqi(f[static_cast<std::size_t>(i)], prec);
    return acc;
}

Mag min_pairwise_gap(const std::vector<CBall>& disks)
{
    Mag best;
    bool first = true;
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            Mag d = disks[i].dist_lower(disks[j]);
            if (first || d < best) {
                best = d;
                first = false;
            }
        }
    return best;
}

std::vector<CBall> isolate_roots(long degree,
                                 const std::function<std::vector<CBall>(long)>& coeffs_at,
                                 long start_prec, long prec_cap)
{
    if (degree < 0) fail(ErrorCode::InternalError, "isolate_roots: negative degree");
    if (degree == 0) return {};

    long p = std::max(start_prec, 64L);
    std::vector<CPt> z;
    bool warm = false;

    for (; p <= prec_cap; p *= 2) {
        std::vector<CBall> C = coeffs_at(p);
        if (static_cast<long>(C.size()) != degree + 1 || C.back().contains_zero())
            fail(ErrorCode::InternalError, "isolate_roots: bad coefficient vector");

        // point copies of the coefficients for the iteration
        std::vector<CPt> c;
        c.reserve(C.size());
        for (const auto& cb : C) {
            CPt w(p);
            w.re = cb.re();
            w.im = cb.im();
            c.push_back(std::move(w));
        }

        if (!warm) {
            // Cauchy-style initial radius 1 + max |a_i / a_n|
            double lc = cabs_d(c.back());
            double m = 0;
            for (long i = 0; i < degree; ++i)
                m = std::max(m, cabs_d(c[static_cast<std::size_t>(i)]) / lc);
            double R = 1.0 + m;
            if (!std::isfinite(R) || R <= 0) R = 2.0;
            z.clear();
            for (long i = 0; i < degree; ++i) {
                double ang = 2.0 * 3.14159265358979323846 * (double(i) + 0.354) /
                             double(degree);
                CPt w(p);
                w.re = Real::from_double(R * std::cos(ang), p);
                w.im = Real::from_double(R * std::sin(ang), p);
                z.push_back(std::move(w));
            }
            warm = true;
        } else {
            for (auto& w : z) {
                Real re(p), im(p);
                mpfr_set(re.raw(), w.re.raw(), MPFR_RNDN);
                mpfr_set(im.raw(), w.im.raw(), MPFR_RNDN);
                w.re = std::move(re);
                w.im = std::move(im);
            }
        }

        auto horner = [&](const CPt& x, CPt& val, CPt& der) {
            CPt v(p), d(p);
            for (long i = degree; i >= 0; --i) {
                if (i < degree) {
                    d = cadd(cmul(d, x), v);
                }
                v = cadd(cmul(v, x), c[static_cast<std::size_t>(i)]);
            }
            val = v;
            der = d;
        };

        long iters = 40 + 4 * degree;
        for (long it = 0; it < iters; ++it) {
            double worst = 0;
            for (long i = 0; i < degree; ++i) {
                CPt val(p), der(p);
                horner(z[static_cast<std::size_t>(i)], val, der);
                CPt n = cdiv(val, der);
                CPt s(p);
                for (long j = 0; j < degree; ++j) {
                    if (j == i) continue;
                    CPt d = csub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
                    if (d.re.is_zero() && d.im.is_zero()) {
                        // nudge coincident approximations apart
                        z[static_cast<std::size_t>(j)].re =
                            z[static_cast<std::size_t>(j)].re +
                            Real::from_double(1e-6 * (j + 1), p);
                        d = csub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
                    }
                    CPt one(p);
                    one.re = Real::from_long(1, p);
                    s = cadd(s, cdiv(one, d));
                }
                CPt denom(p);
                denom.re = Real::from_long(1, p);
                denom = csub(denom, cmul(n, s));
                CPt w = cdiv(n, denom);
                z[static_cast<std::size_t>(i)] = csub(z[static_cast<std::size_t>(i)], w);
                double zi = cabs_d(z[static_cast<std::size_t>(i)]);
                double step = cabs_d(w) / (zi > 1 ? zi : 1.0);
                worst = std::max(worst, step);
            }
            if (worst < std::ldexp(1.0, static_cast<int>(-(p / 2)))) break;
        }

        // Weierstrass certification with ball arithmetic over the exact
        // coefficient enclosures: disks D(z_i, n*|W_i|) with
        // W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j)).
        std::vector<CBall> disks;
        disks.reserve(static_cast<std::size_t>(degree));
        bool ok = true;
        for (long i = 0; i < degree && ok; ++i) {
            CBall zi(z[static_cast<std::size_t>(i)].re, z[static_cast<std::size_t>(i)].im, Mag());
            CBall val = CBall::exact_rat(Rat(0), p);
            for (long k = degree; k >= 0; --k)
                val = val * zi + C[static_cast<std::size_t>(k)];
            CBall den = C.back();
            for (long j = 0; j < degree; ++j) {
                if (j == i) continue;
                CBall zj(z[static_cast<std::size_t>(j)].re, z[static_cast<std::size_t>(j)].im, Mag());
                den = den * (zi - zj);
            }
            if (den.contains_zero()) {
                ok = false;
                break;
            }
            CBall w = val / den;
            Mag radius = w.abs_upper() * Mag(double(degree));
            disks.emplace_back(zi.re(), zi.im(), radius);
        }
        if (ok) {
            for (std::size_t i = 0; i < disks.size() && ok; ++i)
                for (std::size_t j = i + 1; j < disks.size() && ok; ++j)
                    if (!disks[i].disjoint(disks[j])) ok = false;
        }
        if (ok) {
            std::sort(disks.begin(), disks.end(), [](const CBall& a, const CBall& b) {
                int cr = mpfr_cmp(a.re().raw(), b.re().raw());
                if (cr != 0) return cr < 0;
                return mpfr_cmp(a.im().raw(), b.im().raw()) < 0;
            });
            return disks;
        }
    }
    fail(ErrorCode::PrecisionExhausted, "root isolation exceeded precision cap");
}

std::vector<CBall> isolate_roots(const QPoly& squarefree, long prec_cap)
{
    return isolate_roots(
        squarefree.degree(),
        [&](long p) {
            std::vector<CBall> v;
            for (long i = 0; i <= squarefree.degree(); ++i)
                v.push_back(CBall::exact_rat(squarefree[static_cast<std::size_t>(i)], p));
            return v;
        },
        64, prec_cap);
}

std::vector<CBall> isolate_roots(const QiPoly& squarefree, long prec_cap)
{
    return isolate_roots(
        squarefree.degree(),
        [&](long p) {
            std::vector<CBall> v;
            for (long i = 0; i <= squarefree.degree(); ++i)
                v.push_back(CBall::exact_qqi(squarefree[static_cast<std::size_t>(i)], p));
            return v;
        },
        64, prec_cap);
}

// ------------------------------------------------------- AlgebraicNumber

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(from_rat(Rat(0))) {}

AlgebraicNumber AlgebraicNumber::from_rat(const Rat& q)
{
    AlgebraicNumber a(QPoly(std::vector<Rat>{-q, Rat(1)}), CBall::exact_rat(q, 64));
    a.rat_ = q;
    a.gauss_ = QQi(q);
    return a;
}

AlgebraicNumber AlgebraicNumber::from_qqi(const QQi& z)
{
    if (z.is_real()) return from_rat(z.re);
    // (x - z)(x - conj z) = x^2 - 2 Re(z) x + |z|^2
    QPoly p(std::vector<Rat>{z.norm(), Rat(-2) * z.re, Rat(1)});
    AlgebraicNumber a(std::move(p), CBall::exact_qqi(z, 64));
    a.gauss_ = z;
    return a;
}

AlgebraicNumber::AlgebraicNumber(QPoly poly, CBall isolating)
    : poly_(primitive_part(poly)), ball_(std::move(isolating))
{
    if (poly_.zero()) fail(ErrorCode::InternalError, "algebraic number needs nonzero polynomial");
    if (poly_.degree() == 1) {
        rat_ = -poly_[0] / poly_[1];
        gauss_ = QQi(*rat_);
        ball_ = CBall::exact_rat(*rat_, 64);
    }
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const QPoly& squarefree, long prec_cap)
{
    std::vector<AlgebraicNumber> out;
    for (auto& d : isolate_roots(squarefree, prec_cap))
        out.emplace_back(squarefree, d);
    return out;
}

void AlgebraicNumber::refine(const Mag& target, long prec_cap) const
{
    if (rat_ || gauss_) {
        long p = std::max<long>(64, ball_.prec());
        while (true) {
            ball_ = gauss_ ? CBall::exact_qqi(*gauss_, p) : CBall::exact_rat(*rat_, p);
            if (ball_.rad() <= target || (ball_.rad().is_zero())) return;
            p *= 2;
            if (p > prec_cap) fail(ErrorCode::PrecisionExhausted, "refine (exact value)");
        }
    }
    if (ball_.rad() <= target) return;

    long p = std::max<long>(64, ball_.prec());
    while (p <= prec_cap) {
        // interval Newton: N = m - f(m)/f'(B)
        CBall m(ball_.re(), ball_.im(), Mag());
        CBall fm = eval_qpoly(poly_, m, p);
        QPoly der = poly_.derivative();
        CBall fB = eval_qpoly(der, ball_, p);
        if (!fB.contains_zero()) {
            CBall N = m - fm / fB;
            // valid contraction if N subset of B
            Mag shift = N.dist_upper(CBall(ball_.re(), ball_.im(), Mag()));
            Mag needed = shift + N.rad();
            if (needed <= ball_.rad() || N.rad() < ball_.rad()) {
                ball_ = N;
                if (ball_.rad() <= target) return;
            }
        }
        p *= 2;
        // stall re-isolation: find our disk again at higher precision
        if (ball_.rad() <= target) return;
        if (p > prec_cap) break;
        if (fB.contains_zero() || ball_.rad().to_double() > 0.5) {
            auto disks = isolate_roots(poly_, prec_cap);
            for (auto& d : disks)
                if (!d.disjoint(ball_)) {
                    ball_ = d;
                    break;
                }
        }
    }
    if (ball_.rad() <= target) return;
    fail(ErrorCode::PrecisionExhausted, "refine_enclosure hit precision cap");
}

void AlgebraicNumber::refine_bits(long bits, long prec_cap) const
{
    refine(Mag::two_pow(-bits), prec_cap);
}

CBall AlgebraicNumber::ball_at(long prec, long prec_cap) const
{
    refine_bits(prec, prec_cap);
    return ball_;
}

bool AlgebraicNumber::is_zero_certified() const
{
    if (rat_) return sgn(*rat_) == 0;
    if (gauss_) return is_zero(*gauss_);
    // 0 is a root of poly_ iff the constant term vanishes; each isolated
    // disk holds exactly one root, so after refining below the gap our
    // disk matches the zero-root disk iff this number is 0.
    if (sgn(poly_[0]) != 0) return false;
    auto disks = isolate_roots(poly_);
    Mag gap = min_pairwise_gap(disks);
    AlgebraicNumber x(*this);
    if (disks.size() > 1) x.refine(gap.mul_2si(-3));
    for (auto& d : disks)
        if (!d.disjoint(x.ball_)) return d.contains_zero();
    return false;
}

bool AlgebraicNumber::equals(const AlgebraicNumber& o, long prec_cap) const
{
    if (rat_ && o.rat_) return *rat_ == *o.rat_;
    if (gauss_ && o.gauss_) return *gauss_ == *o.gauss_;
    QPoly a = poly_, b = o.poly_;
    if (a != b && a != -b) {
        // different squarefree polynomials may still share this root; decide
        // via the gcd, which collects exactly the common roots.
        QPoly g = poly_gcd(a, b);
        if (g.degree() < 1) return false;
        AlgebraicNumber x(*this), y(o);
        auto disks = isolate_roots(primitive_part(g), prec_cap);
        Mag gap = min_pairwise_gap(disks);
        if (disks.size() > 1) {
            x.refine(gap.mul_2si(-3), prec_cap);
            y.refine(gap.mul_2si(-3), prec_cap);
        } else {
            x.refine_bits(128, prec_cap);
            y.refine_bits(128, prec_cap);
        }
        std::optional<std::size_t> ix, iy;
        for (std::size_t i = 0; i < disks.size(); ++i) {
            if (!disks[i].disjoint(x.ball_)) ix = i;
            if (!disks[i].disjoint(y.ball_)) iy = i;
        }
        return ix && iy && *ix == *iy;
    }
    auto disks = isolate_roots(poly_, prec_cap);
    Mag gap = min_pairwise_gap(disks);
    AlgebraicNumber x(*this), y(o);
    if (disks.size() > 1) {
        x.refine(gap.mul_2si(-3), prec_cap);
        y.refine(gap.mul_2si(-3), prec_cap);
    }
    return !x.ball_.disjoint(y.ball_);
}

bool AlgebraicNumber::is_real(long prec_cap) const
{
    if (rat_) return true;
    if (gauss_) return gauss_->is_real();
    auto disks = isolate_roots(poly_, prec_cap);
    Mag gap = min_pairwise_gap(disks);
    AlgebraicNumber x(*this);
    if (disks.size() > 1) x.refine(gap.mul_2si(-3), prec_cap);
    else x.refine_bits(96, prec_cap);
    return !x.ball_.disjoint(x.ball_.conj());
}

std::string AlgebraicNumber::str() const
{
    if (rat_) return rat_->get_str();
    return "root of " + poly_str(poly_) + " near " + ball_.str();
}

namespace {

// exact dyadic value of an mpfr number
Rat mpfr_to_rat(mpfr_srcptr x)
{
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat q(m);
    if (e >= 0) {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= Rat(shift);
    } else {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= Rat(shift);
    }
    return q;
}

// simplest rational in the closed interval [lo, hi] (Stern-Brocot walk)
Rat simplest_rational(Rat lo, Rat hi, int depth = 0)
{
    if (depth > 128) return lo;
    if (lo > hi) std::swap(lo, hi);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) return -simplest_rational(-hi, -lo, depth + 1);
    // now 0 < lo <= hi
    Int fl = lo.get_num() / lo.get_den(); // floor for positive lo
    if (Rat(fl) + 1 <= hi) {
        // an integer lies in the interval
        Rat cand(fl + (Rat(fl) >= lo ? 0 : 1));
        if (cand < lo) cand += 1;
        return cand;
    }
    Rat frac_lo = lo - Rat(fl), frac_hi = hi - Rat(fl);
    if (sgn(frac_lo) == 0) return Rat(fl);
    Rat inner = simplest_rational(Rat(1) / frac_hi, Rat(1) / frac_lo, depth + 1);
    return Rat(fl) + Rat(1) / inner;
}

} // namespace

std::vector<AlgebraicNumber> roots_with_rational_detection(const QPoly& squarefree,
                                                           long prec_cap)
{
    std::vector<AlgebraicNumber> out;
    QPoly f = primitive_part(squarefree);
    auto disks = isolate_roots(f, prec_cap);
    for (auto& d : disks) {
        AlgebraicNumber a(f, d);
        bool rational = false;
        for (long bits : {96L, 192L}) {
            a.refine_bits(bits, prec_cap);
            const CBall& b = a.enclosure();
            // rational roots are real; skip disks certified off the real axis
            Real im_abs(b.prec());
            mpfr_abs(im_abs.raw(), b.im().raw(), MPFR_RNDD);
            if (mpfr_cmp(im_abs.raw(), b.rad().raw()) > 0) break;
            Real lo(b.prec()), hi(b.prec());
            mpfr_sub(lo.raw(), b.re().raw(), b.rad().raw(), MPFR_RNDD);
            mpfr_add(hi.raw(), b.re().raw(), b.rad().raw(), MPFR_RNDU);
            Rat cand = simplest_rational(mpfr_to_rat(lo.raw()), mpfr_to_rat(hi.raw()));
            if (sgn(f.eval(cand)) == 0) {
                out.push_back(AlgebraicNumber::from_rat(cand));
                rational = true;
                break;
            }
        }
        if (!rational) out.push_back(std::move(a));
    }
    return out;
}

bool vanishes_at(const QPoly& h, const AlgebraicNumber& z, long prec_cap)
{
    if (h.zero()) return true;
    if (z.is_gaussian()) {
        QQi v{};
        for (long i = h.degree(); i >= 0; --i)
            v = v * z.gaussian_value() + QQi(h[static_cast<std::size_t>(i)]);
        return is_zero(v);
    }
    QPoly g = poly_gcd(make_monic(h), make_monic(z.minpoly()));
    if (g.degree() < 1) return false;
    if (g == make_monic(z.minpoly())) return true;
    // z is a root of g iff its refined disk matches one of g's root disks
    auto gdisks = isolate_roots(primitive_part(g), prec_cap);
    auto zdisks = isolate_roots(z.minpoly(), prec_cap);
    Mag gap = min_pairwise_gap(zdisks);
    AlgebraicNumber zz(z);
    if (zdisks.size() > 1) zz.refine(gap.mul_2si(-3), prec_cap);
    else zz.refine_bits(128, prec_cap);
    for (auto& d : gdisks) {
        // shrink the g-root disk well below the z-root separation, then
        // overlap decides membership
        AlgebraicNumber w(primitive_part(g), d);
        if (zdisks.size() > 1) w.refine(gap.mul_2si(-3), prec_cap);
        else w.refine_bits(128, prec_cap);
        if (!w.enclosure().disjoint(zz.enclosure())) return true;
    }
    return false;
}

int root_multiplicity(const QPoly& f, const AlgebraicNumber& z)
{
    if (!vanishes_at(f, z)) return 0;
    auto dec = squarefree_decomposition(f);
    for (auto& [g, m] : dec)
        if (vanishes_at(g, z)) return m;
    fail(ErrorCode::InternalError, "vanishing root missing from decomposition");
}

bool algebraic_order_before(const AlgebraicNumber& a, const AlgebraicNumber& b)
{
    AlgebraicNumber x(a), y(b);
    x.refine_bits(96);
    y.refine_bits(96);
    const CBall &ba = x.enclosure(), &bb = y.enclosure();
    // centers are certified far apart relative to radii after refinement,
    // except for genuinely equal coordinates (conjugate pairs)
    Real ra = ba.re() - bb.re();
    Mag rr = ba.rad() + bb.rad();
    Real rabs(ra.prec());
    mpfr_abs(rabs.raw(), ra.raw(), MPFR_RNDD);
    if (mpfr_cmp(rabs.raw(), rr.raw()) > 0) return ra.sign() < 0;
    Real ia = ba.im() - bb.im();
    return ia.sign() < 0;
}

} // namespace lefsurf
