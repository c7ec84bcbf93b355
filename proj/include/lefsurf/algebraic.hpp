#ifndef LEFSURF_ALGEBRAIC_HPP
#define LEFSURF_ALGEBRAIC_HPP

#include <functional>
#include <optional>
#include <vector>

#include "lefsurf/ball.hpp"
#include "lefsurf/poly.hpp"

namespace lefsurf {

// Certified isolation of all roots of a squarefree polynomial given by
// ball coefficients re-computable at any precision (low -> high degree,
// exactly degree+1 entries, leading coefficient bounded away from 0).
// Returns pairwise disjoint disks, one root each, sorted by (Re, Im) of
// the centers.  Throws PrecisionExhausted past prec_cap.
std::vector<CBall> isolate_roots(long degree,
                                 const std::function<std::vector<CBall>(long)>& coeffs_at,
                                 long start_prec, long prec_cap);

std::vector<CBall> isolate_roots(const QPoly& squarefree, long prec_cap = 1L << 20);
std::vector<CBall> isolate_roots(const QiPoly& squarefree, long prec_cap = 1L << 20);

CBall eval_qpoly(const QPoly& f, const CBall& x, long prec);
CBall eval_qipoly(const QiPoly& f, const CBall& x, long prec);

// Certified lower bound on the minimum pairwise distance of the disks.
Mag min_pairwise_gap(const std::vector<CBall>& disks);

// Exact algebraic number: a primitive squarefree integer polynomial
// together with a certified complex disk isolating exactly one of its
// roots.  The polynomial need not be irreducible (factorisation over Q
// is out of scope); equality testing refines below the isolation gap.
class AlgebraicNumber {
public:
    AlgebraicNumber(); // zero
    static AlgebraicNumber from_rat(const Rat& q);
    static AlgebraicNumber from_qqi(const QQi& z);
    // `poly` squarefree over Q; `isolating` must contain exactly one root.
    AlgebraicNumber(QPoly poly, CBall isolating);

    // All roots of a squarefree rational polynomial as algebraic numbers.
    static std::vector<AlgebraicNumber> roots_of(const QPoly& squarefree,
                                                 long prec_cap = 1L << 20);

    const QPoly& minpoly() const { return poly_; }
    const CBall& enclosure() const { return ball_; }
    bool is_rational() const { return rat_.has_value(); }
    bool is_gaussian() const { return gauss_.has_value(); }
    const Rat& rat_value() const { return *rat_; }
    const QQi& gaussian_value() const { return *gauss_; }
    long degree_bound() const { return poly_.degree(); }

    // Shrink the enclosure below `target` (interval Newton; re-isolates on
    // stall).  No-op if already smaller.
    void refine(const Mag& target, long prec_cap = 1L << 20) const;
    void refine_bits(long bits, long prec_cap = 1L << 20) const;

    // Enclosure at >= prec bits of working precision.
    CBall ball_at(long prec, long prec_cap = 1L << 20) const;

    bool is_zero_certified() const;
    // Same algebraic number: same squarefree polynomial up to scaling and
    // enclosures that keep overlapping below the isolation gap.
    bool equals(const AlgebraicNumber& o, long prec_cap = 1L << 20) const;

    // Certified real test (pairs the enclosure against its conjugate).
    bool is_real(long prec_cap = 1L << 20) const;

    std::string str() const;

private:
    QPoly poly_;                 // primitive, squarefree, positive lead
    mutable CBall ball_;
    std::optional<Rat> rat_;     // exact value when degree 1
    std::optional<QQi> gauss_;   // exact value when in Q(i)
};

// Deterministic (Re, Im) ordering helper for points of one squarefree
// polynomial; `gap` is a certified lower bound on pairwise distances.
// Conjugate-looking ties order by imaginary part.
bool algebraic_order_before(const AlgebraicNumber& a, const AlgebraicNumber& b);

// Exact decision of h(z) = 0 for h over Q: via gcd with the defining
// polynomial of z and certified disk matching.
bool vanishes_at(const QPoly& h, const AlgebraicNumber& z, long prec_cap = 1L << 20);

// Roots of a squarefree rational polynomial with rational roots recognised
// exactly (simplest-rational probe inside each disk, verified by exact
// evaluation; heights up to the probe depth).  Order matches isolate_roots.
std::vector<AlgebraicNumber> roots_with_rational_detection(const QPoly& squarefree,
                                                           long prec_cap = 1L << 20);

// Multiplicity of z as a root of f (0 when f(z) != 0).
int root_multiplicity(const QPoly& f, const AlgebraicNumber& z);

} // namespace lefsurf

#endif
