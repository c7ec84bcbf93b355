#include "lefsurf/ball.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace lefsurf {

// ---------------------------------------------------------------- Real

Real::Real(long prec)
{
    mpfr_init2(x_, prec < 2 ? 2 : prec);
    mpfr_set_zero(x_, 1);
}

Real::Real(const Real& o)
{
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(x_, 2);
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::from_long(long v, long prec)
{
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::from_rat(const Rat& q, long prec)
{
    Real r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_rat_up(const Rat& q, long prec)
{
    Real r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Real Real::from_rat_down(const Rat& q, long prec)
{
    Real r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDD);
    return r;
}

Real Real::from_double(double v, long prec)
{
    Real r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const
{
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, x_);
    return std::string(buf);
}

static long max_prec(const Real& a, const Real& b)
{
    return std::max(a.prec(), b.prec());
}

Real Real::operator-() const
{
    Real r(prec());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

Real Real::operator+(const Real& o) const
{
    Real r(max_prec(*this, o));
    mpfr_add(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}

Real Real::operator-(const Real& o) const
{
    Real r(max_prec(*this, o));
    mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}

Real Real::operator*(const Real& o) const
{
    Real r(max_prec(*this, o));
    mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}

Real Real::operator/(const Real& o) const
{
    Real r(max_prec(*this, o));
    mpfr_div(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- Mag

Mag::Mag()
{
    mpfr_init2(x_, kPrec);
    mpfr_set_zero(x_, 1);
}

Mag::Mag(double v)
{
    mpfr_init2(x_, kPrec);
    mpfr_set_d(x_, v < 0 ? -v : v, MPFR_RNDU);
}

Mag::Mag(const Mag& o)
{
    mpfr_init2(x_, kPrec);
    mpfr_set(x_, o.x_, MPFR_RNDU);
}

Mag::Mag(Mag&& o) noexcept
{
    mpfr_init2(x_, kPrec);
    mpfr_swap(x_, o.x_);
}

Mag& Mag::operator=(const Mag& o)
{
    if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDU);
    return *this;
}

Mag& Mag::operator=(Mag&& o) noexcept
{
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

Mag::~Mag() { mpfr_clear(x_); }

Mag Mag::from_real_abs(const Real& r)
{
    Mag m;
    mpfr_abs(m.x_, r.raw(), MPFR_RNDU);
    return m;
}

Mag Mag::from_rat_abs(const Rat& q)
{
    Mag m;
    mpfr_set_q(m.x_, q.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(m.x_, m.x_, MPFR_RNDU);
    return m;
}

Mag Mag::two_pow(long e)
{
    Mag m;
    mpfr_set_ui_2exp(m.x_, 1, e, MPFR_RNDU);
    return m;
}

std::string Mag::str() const
{
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.5Rg", x_);
    return std::string(buf);
}

Mag Mag::operator+(const Mag& o) const
{
    Mag m;
    mpfr_add(m.x_, x_, o.x_, MPFR_RNDU);
    return m;
}

Mag Mag::operator*(const Mag& o) const
{
    Mag m;
    mpfr_mul(m.x_, x_, o.x_, MPFR_RNDU);
    return m;
}

Mag Mag::mul_2si(long e) const
{
    Mag m;
    mpfr_mul_2si(m.x_, x_, e, MPFR_RNDU);
    return m;
}

// Half-ulp cover for a round-to-nearest result: |m| * 2^(1-prec).
static Mag eps_of(const Real& m)
{
    if (m.is_zero()) return Mag();
    return Mag::from_real_abs(m).mul_2si(1 - m.prec());
}

// Upper bound of 1/x for a certified positive lower bound x.
static Mag inv_upper(const Real& lower_bound)
{
    Mag m;
    mpfr_ui_div(m.raw(), 1, lower_bound.raw(), MPFR_RNDU);
    return m;
}

// ---------------------------------------------------------------- RBall

RBall RBall::exact_rat(const Rat& q, long prec)
{
    Real m(prec);
    int ternary = mpfr_set_q(m.raw(), q.get_mpq_t(), MPFR_RNDN);
    Mag r = (ternary == 0) ? Mag() : eps_of(m);
    return RBall(std::move(m), std::move(r));
}

RBall RBall::exact_long(long v, long prec)
{
    return RBall(Real::from_long(v, prec), Mag());
}

RBall RBall::from_interval(const Real& lo, const Real& hi)
{
    long p = std::max(lo.prec(), hi.prec());
    Real mid(p);
    mpfr_add(mid.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
    mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
    // rad >= max(hi - mid, mid - lo)
    Mag r1, r2;
    mpfr_sub(r1.raw(), hi.raw(), mid.raw(), MPFR_RNDU);
    mpfr_sub(r2.raw(), mid.raw(), lo.raw(), MPFR_RNDU);
    if (mpfr_sgn(r1.raw()) < 0) mpfr_set_zero(r1.raw(), 1);
    if (mpfr_sgn(r2.raw()) < 0) mpfr_set_zero(r2.raw(), 1);
    Mag rad = mpfr_cmp(r1.raw(), r2.raw()) >= 0 ? r1 : r2;
    Mag total = rad + eps_of(mid);
    return RBall(std::move(mid), std::move(total));
}

RBall RBall::pi(long prec)
{
    Real lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return from_interval(lo, hi);
}

Real RBall::lower() const
{
    Real r(prec());
    mpfr_sub(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDD);
    return r;
}

Real RBall::upper() const
{
    Real r(prec());
    mpfr_add(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDU);
    return r;
}

RBall RBall::operator-() const { return RBall(-mid_, rad_); }

RBall RBall::operator+(const RBall& o) const
{
    Real m = mid_ + o.mid_;
    Mag r = rad_ + o.rad_ + eps_of(m);
    return RBall(std::move(m), std::move(r));
}

RBall RBall::operator-(const RBall& o) const
{
    Real m = mid_ - o.mid_;
    Mag r = rad_ + o.rad_ + eps_of(m);
    return RBall(std::move(m), std::move(r));
}

RBall RBall::operator*(const RBall& o) const
{
    Real m = mid_ * o.mid_;
    Mag r = Mag::from_real_abs(mid_) * o.rad_ + Mag::from_real_abs(o.mid_) * rad_ +
            rad_ * o.rad_ + eps_of(m);
    return RBall(std::move(m), std::move(r));
}

RBall RBall::operator/(const RBall& o) const
{
    // |x/y - a/b| <= (|a| rb + |b| ra) / (|b| (|b| - rb))
    Real babs(o.prec());
    mpfr_abs(babs.raw(), o.mid_.raw(), MPFR_RNDD);
    Real denom_lo(o.prec());
    mpfr_sub(denom_lo.raw(), babs.raw(), o.rad_.raw(), MPFR_RNDD);
    if (mpfr_sgn(denom_lo.raw()) <= 0)
        fail(ErrorCode::DivisionByZero, "interval division by interval containing 0");
    Real m = mid_ / o.mid_;
    Mag num = Mag::from_real_abs(mid_) * o.rad_ + Mag::from_real_abs(o.mid_) * rad_;
    Mag r = num * inv_upper(babs) * inv_upper(denom_lo) + eps_of(m);
    return RBall(std::move(m), std::move(r));
}

RBall RBall::sqrt() const
{
    Real lo = lower(), hi = upper();
    if (mpfr_sgn(hi.raw()) < 0)
        fail(ErrorCode::InternalError, "sqrt of negative interval");
    if (mpfr_sgn(lo.raw()) < 0) mpfr_set_zero(lo.raw(), 1);
    Real slo(prec()), shi(prec());
    mpfr_sqrt(slo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_sqrt(shi.raw(), hi.raw(), MPFR_RNDU);
    return from_interval(slo, shi);
}

RBall RBall::log() const
{
    Real lo = lower(), hi = upper();
    if (mpfr_sgn(lo.raw()) <= 0)
        fail(ErrorCode::InternalError, "log of interval touching 0");
    Real llo(prec()), lhi(prec());
    mpfr_log(llo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_log(lhi.raw(), hi.raw(), MPFR_RNDU);
    return from_interval(llo, lhi);
}

RBall RBall::exp() const
{
    Real lo = lower(), hi = upper();
    Real elo(prec()), ehi(prec());
    mpfr_exp(elo.raw(), lo.raw(), MPFR_RNDD);
    mpfr_exp(ehi.raw(), hi.raw(), MPFR_RNDU);
    return from_interval(elo, ehi);
}

RBall RBall::abs() const
{
    if (!contains_zero()) {
        Real m(prec());
        mpfr_abs(m.raw(), mid_.raw(), MPFR_RNDN);
        return RBall(std::move(m), rad_);
    }
    // interval straddles 0: |x| in [0, max(|lo|,|hi|)]
    Real lo = lower(), hi = upper();
    mpfr_abs(lo.raw(), lo.raw(), MPFR_RNDU);
    mpfr_abs(hi.raw(), hi.raw(), MPFR_RNDU);
    Real top = mpfr_cmp(lo.raw(), hi.raw()) >= 0 ? lo : hi;
    Real zero(prec());
    return from_interval(zero, top);
}

bool RBall::contains_zero() const
{
    Real amid(prec());
    mpfr_abs(amid.raw(), mid_.raw(), MPFR_RNDD);
    return mpfr_cmp(amid.raw(), rad_.raw()) <= 0;
}

bool RBall::is_positive() const { return mpfr_sgn(lower().raw()) > 0; }
bool RBall::is_negative() const { return mpfr_sgn(upper().raw()) < 0; }

bool RBall::certainly_lt(const RBall& o) const
{
    return mpfr_cmp(upper().raw(), o.lower().raw()) < 0;
}

Mag RBall::abs_upper() const
{
    return Mag::from_real_abs(mid_) + rad_;
}

Mag RBall::abs_lower_mag() const
{
    Real amid(prec());
    mpfr_abs(amid.raw(), mid_.raw(), MPFR_RNDD);
    Mag m;
    mpfr_sub(m.raw(), amid.raw(), rad_.raw(), MPFR_RNDD);
    if (mpfr_sgn(m.raw()) < 0) mpfr_set_zero(m.raw(), 1);
    return m;
}

std::string RBall::str() const
{
    return mid_.str() + " +/- " + rad_.str();
}

// ---------------------------------------------------------------- CBall

CBall CBall::exact_rat(const Rat& q, long prec)
{
    RBall r = RBall::exact_rat(q, prec);
    return CBall(r.mid(), Real(prec), r.rad());
}

CBall CBall::exact_qqi(const QQi& z, long prec)
{
    RBall re = RBall::exact_rat(z.re, prec);
    RBall im = RBall::exact_rat(z.im, prec);
    return CBall(re.mid(), im.mid(), re.rad() + im.rad());
}

CBall CBall::from_doubles(double re, double im, double rad, long prec)
{
    return CBall(Real::from_double(re, prec), Real::from_double(im, prec), Mag(rad));
}

CBall CBall::from_rballs(const RBall& re, const RBall& im)
{
    return CBall(re.mid(), im.mid(), re.rad() + im.rad());
}

CBall CBall::root_of_unity(long k, long n, long prec)
{
    if (n <= 0) fail(ErrorCode::InternalError, "root_of_unity order");
    long kk = ((k % n) + n) % n;
    // theta in [t_lo, t_hi], 2*pi*kk/n with directed rounding
    Real t_lo(prec + 16), t_hi(prec + 16);
    mpfr_const_pi(t_lo.raw(), MPFR_RNDD);
    mpfr_mul_si(t_lo.raw(), t_lo.raw(), 2 * kk, MPFR_RNDD);
    mpfr_div_si(t_lo.raw(), t_lo.raw(), n, MPFR_RNDD);
    mpfr_const_pi(t_hi.raw(), MPFR_RNDU);
    mpfr_mul_si(t_hi.raw(), t_hi.raw(), 2 * kk, MPFR_RNDU);
    mpfr_div_si(t_hi.raw(), t_hi.raw(), n, MPFR_RNDU);

    Real tm(prec);
    mpfr_add(tm.raw(), t_lo.raw(), t_hi.raw(), MPFR_RNDN);
    mpfr_div_2ui(tm.raw(), tm.raw(), 1, MPFR_RNDN);
    Mag theta_rad;
    mpfr_sub(theta_rad.raw(), t_hi.raw(), t_lo.raw(), MPFR_RNDU);

    Real c(prec), s(prec);
    mpfr_sin_cos(s.raw(), c.raw(), tm.raw(), MPFR_RNDN);
    // |cos|,|sin| <= 1: rounding <= 2^(1-prec); argument slack is Lipschitz-1.
    Mag rad = theta_rad + theta_rad + Mag::two_pow(2 - prec);
    return CBall(std::move(c), std::move(s), std::move(rad));
}

CBall CBall::operator-() const { return CBall(-re_, -im_, rad_); }

CBall CBall::operator+(const CBall& o) const
{
    Real r = re_ + o.re_, i = im_ + o.im_;
    Mag rad = rad_ + o.rad_ + eps_of(r) + eps_of(i);
    return CBall(std::move(r), std::move(i), std::move(rad));
}

CBall CBall::operator-(const CBall& o) const
{
    Real r = re_ - o.re_, i = im_ - o.im_;
    Mag rad = rad_ + o.rad_ + eps_of(r) + eps_of(i);
    return CBall(std::move(r), std::move(i), std::move(rad));
}

static Mag center_abs_upper(const Real& re, const Real& im)
{
    Mag m;
    mpfr_hypot(m.raw(), re.raw(), im.raw(), MPFR_RNDU);
    return m;
}

static Real center_abs_lower(const Real& re, const Real& im)
{
    Real r(std::max(re.prec(), im.prec()));
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDD);
    return r;
}

CBall CBall::operator*(const CBall& o) const
{
    long p = std::max(prec(), o.prec());
    Real t1(p), t2(p), r(p), i(p);
    mpfr_mul(t1.raw(), re_.raw(), o.re_.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
    mpfr_sub(r.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    Mag err = eps_of(t1) + eps_of(t2) + eps_of(r);
    mpfr_mul(t1.raw(), re_.raw(), o.im_.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), im_.raw(), o.re_.raw(), MPFR_RNDN);
    mpfr_add(i.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    err = err + eps_of(t1) + eps_of(t2) + eps_of(i);

    Mag a1 = center_abs_upper(re_, im_);
    Mag a2 = center_abs_upper(o.re_, o.im_);
    Mag rad = a1 * o.rad_ + a2 * rad_ + rad_ * o.rad_ + err;
    return CBall(std::move(r), std::move(i), std::move(rad));
}

CBall CBall::inverse() const
{
    Real L = center_abs_lower(re_, im_);
    Real gap(prec());
    mpfr_sub(gap.raw(), L.raw(), rad_.raw(), MPFR_RNDD);
    if (mpfr_sgn(gap.raw()) <= 0)
        fail(ErrorCode::DivisionByZero, "inverse of complex ball containing 0");
    long p = prec();
    Real n(p), r(p), i(p), t(p);
    mpfr_mul(n.raw(), re_.raw(), re_.raw(), MPFR_RNDN);
    mpfr_mul(t.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
    mpfr_add(n.raw(), n.raw(), t.raw(), MPFR_RNDN);
    mpfr_div(r.raw(), re_.raw(), n.raw(), MPFR_RNDN);
    mpfr_div(i.raw(), im_.raw(), n.raw(), MPFR_RNDN);
    mpfr_neg(i.raw(), i.raw(), MPFR_RNDN);
    // exact-center error r/(|c|(|c|-r)), plus generous slack for the
    // rounding of the 5 center operations
    Mag rad = rad_ * inv_upper(L) * inv_upper(gap);
    Mag center_mag = inv_upper(gap); // >= |1/c| when gap <= |c|
    rad = rad + center_mag.mul_2si(3 - p);
    return CBall(std::move(r), std::move(i), std::move(rad));
}

CBall CBall::conj() const { return CBall(re_, -im_, rad_); }

CBall CBall::pow_ui(unsigned long k) const
{
    CBall base = *this;
    CBall acc = CBall::exact_rat(Rat(1), prec());
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

RBall CBall::abs_ball() const
{
    Real lo = center_abs_lower(re_, im_);
    mpfr_sub(lo.raw(), lo.raw(), rad_.raw(), MPFR_RNDD);
    if (mpfr_sgn(lo.raw()) < 0) mpfr_set_zero(lo.raw(), 1);
    Real hi(prec());
    Mag up = center_abs_upper(re_, im_) + rad_;
    mpfr_set(hi.raw(), up.raw(), MPFR_RNDU);
    return RBall::from_interval(lo, hi);
}

Mag CBall::abs_upper() const { return center_abs_upper(re_, im_) + rad_; }

bool CBall::contains_zero() const
{
    Real L = center_abs_lower(re_, im_);
    return mpfr_cmp(L.raw(), rad_.raw()) <= 0;
}

bool CBall::disjoint(const CBall& o) const
{
    Real dre = re_ - o.re_, dim = im_ - o.im_;
    Real d = center_abs_lower(dre, dim);
    Mag rr = rad_ + o.rad_;
    return mpfr_cmp(d.raw(), rr.raw()) > 0;
}

Mag CBall::dist_upper(const CBall& o) const
{
    Real dre = re_ - o.re_, dim = im_ - o.im_;
    // center distance rounded up + both radii + rounding slack of the subs
    Mag d = center_abs_upper(dre, dim) + rad_ + o.rad_ + eps_of(dre) + eps_of(dim);
    return d;
}

Mag CBall::dist_lower(const CBall& o) const
{
    Real dre = re_ - o.re_, dim = im_ - o.im_;
    Real d = center_abs_lower(dre, dim);
    Mag sub = rad_ + o.rad_ + eps_of(dre) + eps_of(dim);
    Mag out;
    mpfr_sub(out.raw(), d.raw(), sub.raw(), MPFR_RNDD);
    if (mpfr_sgn(out.raw()) < 0) mpfr_set_zero(out.raw(), 1);
    return out;
}

// Enclosure of arg(center) as an interval of width <= 2*(Lipschitz slack),
// in (-pi, pi].
static bool arg_interval(const CBall& z, RBall& out)
{
    Real L = center_abs_lower(z.re(), z.im());
    Real gap(z.prec());
    mpfr_sub(gap.raw(), L.raw(), z.rad().raw(), MPFR_RNDD);
    if (mpfr_sgn(gap.raw()) <= 0) return false; // contains 0: no argument
    Real theta(z.prec());
    mpfr_atan2(theta.raw(), z.im().raw(), z.re().raw(), MPFR_RNDN);
    // |d arg| <= 1/|w| <= 1/gap on the disk
    Mag slack = z.rad() * inv_upper(gap) + eps_of(theta) + Mag::two_pow(2 - z.prec());
    out = RBall(theta, slack);
    return true;
}

bool CBall::nth_root_principal(unsigned long e, CBall& out) const
{
    if (e == 0) fail(ErrorCode::InternalError, "0th root");
    RBall theta{Real(prec()), Mag()};
    if (!arg_interval(*this, theta)) return false;
    // Principal branch uses theta in [0, 2*pi): lift atan2's (-pi, pi].
    // A disk whose argument interval straddles 0 (the cut boundary) is
    // ambiguous and rejected; callers resolve the side exactly.
    RBall pi_ball = RBall::pi(prec());
    bool negative_side = theta.upper().sign() < 0;
    bool positive_side = theta.lower().sign() > 0;
    if (!negative_side && !positive_side) {
        // contains argument 0: only safe if it contains no negative-im points
        // cannot certify here
        return false;
    }
    RBall lifted = negative_side ? theta + pi_ball + pi_ball : theta;
    RBall phi = lifted * RBall::exact_rat(Rat(1, static_cast<long>(e)), prec());
    RBall rho = abs_ball();
    if (!rho.is_positive()) return false;
    // rho^(1/e) by endpoint roots
    Real rlo(prec()), rhi(prec());
    mpfr_rootn_ui(rlo.raw(), rho.lower().raw(), e, MPFR_RNDD);
    mpfr_rootn_ui(rhi.raw(), rho.upper().raw(), e, MPFR_RNDU);
    RBall rr = RBall::from_interval(rlo, rhi);
    // cos/sin of the phi interval via midpoint + Lipschitz-1 slack
    Real c(prec()), s(prec());
    mpfr_sin_cos(s.raw(), c.raw(), phi.mid().raw(), MPFR_RNDN);
    Mag trig_rad = phi.rad() + Mag::two_pow(2 - prec());
    CBall unit(std::move(c), std::move(s), trig_rad + trig_rad);
    out = unit * CBall(rr.mid(), Real(prec()), rr.rad());
    return true;
}

bool CBall::sqrt_principal(CBall& out) const { return nth_root_principal(2, out); }

bool CBall::sqrt_near(const CBall& near_val, CBall& out) const
{
    // Newton iterate s <- (s + w/s)/2 on the center, then certify:
    // if eta = |s^2 - w| (over the whole input disk) and |s| >= kappa with
    // eta <= kappa^2 / 2, the square root branch nearest s lies within
    // eta / kappa of s.
    long p = std::max(prec(), near_val.prec()) + 32;
    Real sr(p), si(p);
    mpfr_set(sr.raw(), near_val.re().raw(), MPFR_RNDN);
    mpfr_set(si.raw(), near_val.im().raw(), MPFR_RNDN);
    if (mpfr_zero_p(sr.raw()) && mpfr_zero_p(si.raw())) return false;
    CBall w_center(re_, im_, Mag());
    for (int it = 0; it < 64; ++it) {
        CBall s(sr, si, Mag());
        if (s.contains_zero()) return false;
        CBall nxt = (s + w_center * s.inverse()) *
                    CBall::exact_rat(Rat(1, 2), p);
        Real dr = nxt.re() - sr, di = nxt.im() - si;
        mpfr_set(sr.raw(), nxt.re().raw(), MPFR_RNDN);
        mpfr_set(si.raw(), nxt.im().raw(), MPFR_RNDN);
        Mag step = center_abs_upper(dr, di);
        Mag scale = center_abs_upper(sr, si).mul_2si(8 - p);
        if (mpfr_cmp(step.raw(), scale.raw()) <= 0) break;
    }
    CBall s(sr, si, Mag());
    CBall resid = s * s - *this;
    Mag eta = resid.abs_upper();
    Real kappa = center_abs_lower(sr, si);
    if (mpfr_sgn(kappa.raw()) <= 0) return false;
    // check eta <= kappa^2 / 2
    Real k2(p);
    mpfr_mul(k2.raw(), kappa.raw(), kappa.raw(), MPFR_RNDD);
    mpfr_div_2ui(k2.raw(), k2.raw(), 1, MPFR_RNDD);
    if (mpfr_cmp(eta.raw(), k2.raw()) > 0) return false;
    Mag rad = eta * inv_upper(kappa);
    out = CBall(std::move(sr), std::move(si), std::move(rad));
    return true;
}

std::string CBall::str() const
{
    return "(" + re_.str() + (im_.sign() >= 0 ? " + " : " - ") +
           (im_.sign() >= 0 ? im_.str() : (-im_).str()) + "i) +/- " + rad_.str();
}

} // namespace lefsurf
