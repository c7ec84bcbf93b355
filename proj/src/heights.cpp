#include "lefsurf/heights.hpp"

namespace lefsurf {

RBall weil_height_rational(const std::vector<Rat>& coords, long prec)
{
    bool any = false;
    for (auto& c : coords) any = any || sgn(c) != 0;
    if (!any) fail(ErrorCode::UsageError, "height of the zero vector");
    // scale to a coprime integer vector
    Int den_lcm = 1, num_gcd = 0;
    for (auto& c : coords) {
        if (sgn(c) == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Int best = 0;
    for (auto& c : coords) {
        Rat scaled = c * Rat(den_lcm, num_gcd);
        scaled.canonicalize();
        Int n = abs(scaled.get_num());
        if (n > best) best = n;
    }
    return RBall::exact_rat(Rat(best), prec).log();
}

RBall weil_height_algebraic(const AlgebraicNumber& alpha, long prec)
{
    if (alpha.is_rational()) {
        const Rat& q = alpha.rat_value();
        if (sgn(q) == 0) return RBall::exact_long(0, prec);
        return weil_height_rational({q, Rat(1)}, prec);
    }
    const QPoly& f = alpha.minpoly();
    long d = f.degree();
    auto disks = isolate_roots(f);
    RBall acc = RBall::exact_rat(abs(f.lead() * Rat(f.lead().get_den())), prec).log();
    // lc of the primitive integer form
    {
        QPoly p = primitive_part(f);
        acc = RBall::exact_rat(abs(p.lead()), prec).log();
    }
    for (auto& dk : disks) {
        RBall m = dk.abs_ball();
        // log^+ |root|: clamp the interval at 1 from below
        Real lo = m.lower(), hi = m.upper();
        if (mpfr_cmp_ui(hi.raw(), 1) <= 0) continue; // log^+ = 0
        if (mpfr_cmp_ui(lo.raw(), 1) < 0) mpfr_set_ui(lo.raw(), 1, MPFR_RNDN);
        RBall clamped = RBall::from_interval(lo, hi);
        acc = acc + clamped.log();
    }
    return acc * RBall::exact_rat(Rat(1, d), prec);
}

} // namespace lefsurf
