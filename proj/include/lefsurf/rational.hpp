#ifndef LEFSURF_RATIONAL_HPP
#define LEFSURF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lefsurf/util.hpp"

namespace lefsurf {

using Int = mpz_class;
using Rat = mpq_class; // canonicalised: gcd(|num|,den)=1, den>0

inline Rat make_rat(long num, long den = 1)
{
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// max(|num|, den), the naive height of a rational.
inline Int rat_height(const Rat& q)
{
    Int n = abs(q.get_num());
    return n > q.get_den() ? n : Int(q.get_den());
}

// Gaussian rationals Q(i).  Field; used for complex base points and
// dyadic path centers.
struct QQi {
    Rat re, im;

    QQi() : re(0), im(0) {}
    QQi(const Rat& r) : re(r), im(0) {}
    QQi(const Rat& r, const Rat& i) : re(r), im(i) {}
    QQi(long r) : re(r), im(0) {}

    bool is_real() const { return sgn(im) == 0; }

    QQi operator-() const { return QQi(-re, -im); }
    QQi operator+(const QQi& o) const { return QQi(re + o.re, im + o.im); }
    QQi operator-(const QQi& o) const { return QQi(re - o.re, im - o.im); }
    QQi operator*(const QQi& o) const
    {
        return QQi(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    QQi conj() const { return QQi(re, -im); }
    Rat norm() const { return re * re + im * im; } // |z|^2

    QQi inverse() const
    {
        Rat n = norm();
        if (sgn(n) == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in Q(i)");
        return QQi(re / n, -im / n);
    }
    QQi operator/(const QQi& o) const { return *this * o.inverse(); }

    QQi& operator+=(const QQi& o) { re += o.re; im += o.im; return *this; }
    QQi& operator-=(const QQi& o) { re -= o.re; im -= o.im; return *this; }
    QQi& operator*=(const QQi& o) { *this = *this * o; return *this; }

    bool operator==(const QQi& o) const { return re == o.re && im == o.im; }
    bool operator!=(const QQi& o) const { return !(*this == o); }

    std::string str() const
    {
        if (is_real()) return re.get_str();
        return re.get_str() + (sgn(im) >= 0 ? "+" : "") + im.get_str() + "*i";
    }
};

inline bool is_zero(const QQi& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

} // namespace lefsurf

#endif
