#ifndef LEFSURF_BALL_HPP
#define LEFSURF_BALL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "lefsurf/rational.hpp"
#include "lefsurf/util.hpp"

namespace lefsurf {

// Arbitrary-precision floating point number (RAII over mpfr_t).
// Precision is a property of the value; binary ops compute at the
// larger operand precision, round-to-nearest unless stated otherwise.
class Real {
public:
    explicit Real(long prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_long(long v, long prec = 64);
    static Real from_rat(const Rat& q, long prec);      // round to nearest
    static Real from_rat_up(const Rat& q, long prec);   // round toward +inf
    static Real from_rat_down(const Rat& q, long prec); // round toward -inf
    static Real from_double(double v, long prec = 64);

    long prec() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    Real operator-() const;
    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    bool operator<(const Real& o) const { return mpfr_cmp(x_, o.x_) < 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(x_, o.x_) <= 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(x_, o.x_) > 0; }
    bool operator>=(const Real& o) const { return mpfr_cmp(x_, o.x_) >= 0; }
    bool operator==(const Real& o) const { return mpfr_cmp(x_, o.x_) == 0; }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

// Upward-rounded non-negative magnitudes for radius bookkeeping.
// All Mag arithmetic rounds toward +infinity at a small fixed precision,
// so every derived radius is a certified upper bound.
class Mag {
public:
    static constexpr long kPrec = 32;

    Mag();            // zero
    explicit Mag(double v);
    Mag(const Mag& o);
    Mag(Mag&& o) noexcept;
    Mag& operator=(const Mag& o);
    Mag& operator=(Mag&& o) noexcept;
    ~Mag();

    static Mag from_real_abs(const Real& r);          // >= |r|
    static Mag from_rat_abs(const Rat& q);            // >= |q|
    static Mag two_pow(long e);                       // 2^e exactly
    static Mag zero() { return Mag(); }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDU); }
    std::string str() const;

    Mag operator+(const Mag& o) const;
    Mag operator*(const Mag& o) const;
    Mag mul_2si(long e) const; // exact scaling by 2^e
    bool operator<(const Mag& o) const { return mpfr_cmp(x_, o.x_) < 0; }
    bool operator<=(const Mag& o) const { return mpfr_cmp(x_, o.x_) <= 0; }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

// Real interval as midpoint +/- radius.  All operations produce
// enclosures of the exact image.
class RBall {
public:
    RBall() : mid_(64), rad_() {}
    RBall(Real mid, Mag rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}

    static RBall exact_rat(const Rat& q, long prec);
    static RBall exact_long(long v, long prec = 64);
    static RBall from_interval(const Real& lo, const Real& hi); // enclosure of [lo,hi]
    static RBall pi(long prec);

    const Real& mid() const { return mid_; }
    const Mag& rad() const { return rad_; }
    long prec() const { return mid_.prec(); }

    Real lower() const; // certified lower bound of the interval
    Real upper() const; // certified upper bound

    RBall operator-() const;
    RBall operator+(const RBall& o) const;
    RBall operator-(const RBall& o) const;
    RBall operator*(const RBall& o) const;
    RBall operator/(const RBall& o) const; // requires o excludes 0
    RBall sqrt() const;                    // requires interval >= 0 (clamped at 0)
    RBall log() const;                     // requires interval > 0
    RBall exp() const;
    RBall abs() const;

    bool contains_zero() const;
    bool is_positive() const; // certified > 0
    bool is_negative() const;
    // certified |this| <= |o| as intervals: upper(|this|) <= lower(|o|)
    bool certainly_lt(const RBall& o) const;

    Mag abs_upper() const; // >= sup |interval|
    Mag abs_lower_mag() const; // <= inf |interval| (0 if contains 0), as Mag lower bound stored upward-safe

    std::string str() const;

private:
    Real mid_;
    Mag rad_;
};

// Complex disk: center +/- radius.
class CBall {
public:
    CBall() : re_(64), im_(64), rad_() {}
    CBall(Real re, Real im, Mag rad)
        : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {}

    static CBall exact_rat(const Rat& q, long prec);
    static CBall exact_qqi(const QQi& z, long prec);
    static CBall from_doubles(double re, double im, double rad, long prec = 64);
    static CBall from_rballs(const RBall& re, const RBall& im);
    // exp(2*pi*i*k/n), certified
    static CBall root_of_unity(long k, long n, long prec);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const Mag& rad() const { return rad_; }
    long prec() const { return re_.prec(); }

    CBall operator-() const;
    CBall operator+(const CBall& o) const;
    CBall operator-(const CBall& o) const;
    CBall operator*(const CBall& o) const;
    CBall inverse() const; // requires excludes 0
    CBall operator/(const CBall& o) const { return *this * o.inverse(); }
    CBall conj() const;
    CBall pow_ui(unsigned long k) const;

    // Principal square root; fails (returns false) if the disk meets the
    // branch cut (-inf, 0].
    bool sqrt_principal(CBall& out) const;
    // Square root branch closest to `near` (used for continuous tracking);
    // requires the disk to exclude 0 and the two branches to be separated.
    bool sqrt_near(const CBall& near_val, CBall& out) const;
    // Principal e-th root via polar form with argument in [0, 2*pi);
    // fails if the disk meets the cut (the non-negative real axis is the
    // cut boundary: disks straddling argument 0/2*pi are rejected) or 0.
    bool nth_root_principal(unsigned long e, CBall& out) const;

    RBall abs_ball() const;    // |z| as a real enclosure
    Mag abs_upper() const;     // >= sup |disk|
    bool contains_zero() const;
    bool nonzero() const { return !contains_zero(); }
    // certified: disks are disjoint
    bool disjoint(const CBall& o) const;
    // certified: the exact values (if points) differ by less than eps? ->
    // distance upper bound
    Mag dist_upper(const CBall& o) const;
    // certified lower bound on distance between the two disks (0 if overlap)
    Mag dist_lower(const CBall& o) const;
    bool overlaps(const CBall& o) const { return !disjoint(o); }

    std::string str() const;

private:
    Real re_, im_;
    Mag rad_;
};

inline bool is_zero(const CBall&) = delete; // balls are never exactly testable

} // namespace lefsurf

#endif
