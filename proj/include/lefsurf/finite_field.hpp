#ifndef LEFSURF_FINITE_FIELD_HPP
#define LEFSURF_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lefsurf/poly.hpp"
#include "lefsurf/rational.hpp"
#include "lefsurf/util.hpp"

namespace lefsurf {

class FF;
using FFPtr = std::shared_ptr<const FF>;

// Element of F_{p^k}: reduced coefficient vector over F_p, little-endian.
// A default-constructed element is an "unattached" zero that adopts the
// field of the other operand; this lets generic polynomial code use R{}.
class FFElem {
public:
    FFElem() = default;
    FFElem(FFPtr field, std::vector<std::uint64_t> coeffs);

    bool attached() const { return static_cast<bool>(field_); }
    const FFPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    FFElem one() const; // multiplicative unit of the same field

    FFElem operator-() const;
    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem inverse() const;
    FFElem pow(const Int& e) const;
    bool is_square() const;
    // deterministic square root: the lexicographically smaller of the two
    FFElem sqrt() const;

    // lexicographic order on reduced coefficient vectors (c_0, c_1, ...)
    bool lex_less(const FFElem& o) const;

    std::string str() const;

private:
    friend class FF;
    FFPtr field_;
    std::vector<std::uint64_t> c_; // size k when attached
};

inline bool is_zero(const FFElem& x) { return x.is_zero(); }
inline FFElem ring_inv(const FFElem& x) { return x.inverse(); }
inline FFElem ring_unit(const FFElem& x) { return x.one(); }

// Field context F_{p^k} = F_p[w]/(m(w)) with m the canonical monic
// irreducible: the first irreducible in the odometer order of the lower
// coefficient vector (c_0, c_1, ..., c_{k-1}).
class FF : public std::enable_shared_from_this<FF> {
public:
    static FFPtr prime_field(std::uint64_t p);
    static FFPtr extension(std::uint64_t p, unsigned k);
    // extension with an explicitly given monic modulus (degree k)
    static FFPtr with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const Int& q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    FFElem zero() const;
    FFElem onev() const;
    FFElem from_int(const Int& n) const;
    FFElem from_rat(const Rat& r) const; // denominator invertible mod p
    FFElem gen() const;                  // the class of w (k >= 2), else 1
    // element with given little-endian digits (reduced mod p)
    FFElem from_coeffs(std::vector<std::uint64_t> c) const;
    // n-th element in the deterministic enumeration (base-p digits of n)
    FFElem element(const Int& n) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv_mod_p(std::uint64_t a) const;

    bool is_irreducible(const std::vector<std::uint64_t>& monic) const;

private:
    FF(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod);
    friend class FFElem;

    std::vector<std::uint64_t> poly_mulmod(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) const;

    std::uint64_t p_;
    unsigned k_;
    Int q_;
    std::vector<std::uint64_t> mod_; // monic, degree k, little-endian, size k+1
};

// Polynomials over F_q.
using FPoly = Poly<FFElem>;

FPoly fpoly_from_qpoly(const QPoly& f, const FFPtr& field);

// x^e mod f by binary powering (e as mpz).
FPoly fpoly_powmod_x(const Int& e, const FPoly& f);
FPoly fpoly_powmod(const FPoly& base, const Int& e, const FPoly& f);

} // namespace lefsurf

#endif
