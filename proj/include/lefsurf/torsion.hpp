#ifndef LEFSURF_TORSION_HPP
#define LEFSURF_TORSION_HPP

#include <functional>
#include <vector>

#include "lefsurf/ball.hpp"
#include "lefsurf/elliptic.hpp"
#include "lefsurf/ff_factor.hpp"
#include "lefsurf/finite_field.hpp"

namespace lefsurf {

// Ring homomorphism F_{p^j} -> F_{p^k} for j | k: sends the generator to
// the first root (enumeration order) of the small modulus in the big field.
std::function<FFElem(const FFElem&)> embed_field(const FFPtr& small_field,
                                                 const FFPtr& big_field);

// The multiplicative unit of F, derived from the curve data (context-
// carrying coefficient types have no default unit).
template <class F>
F unit_of(const EllipticCurve<F>& E, const ECPoint<F>& P)
{
    for (const F* s : {&P.y, &P.x, &E.a4, &E.a6})
        if (!is_zero(*s)) return ring_unit(*s);
    fail(ErrorCode::InternalError, "cannot derive unit");
}

// Value of the Miller function f_{n,P} (divisor n(P) - ([n]P) - (n-1)(O))
// at a finite point X.  Throws DegenerateDivisorSupport when a line
// function vanishes at X (caller re-randomises the auxiliary shift).
template <class F>
F miller_eval(const EllipticCurve<F>& E, const ECPoint<F>& P, long n, const ECPoint<F>& X)
{
    if (P.infinity || X.infinity)
        fail(ErrorCode::DegenerateDivisorSupport, "miller at infinity");

    auto line_value = [&](const ECPoint<F>& A, const ECPoint<F>& B) -> F {
        // value at X of l_{A,B}/v_{A+B}; handles tangent (A=B) and the
        // vertical case A+B = O
        if (is_zero(A.x - B.x) && is_zero(A.y + B.y)) {
            // vertical line through A, -A
            F v = X.x - A.x;
            if (is_zero(v)) fail(ErrorCode::DegenerateDivisorSupport, "vertical hits X");
            return v;
        }
        F lambda{};
        F dx = A.x - B.x;
        if (is_zero(dx)) {
            F xx = A.x * A.x;
            F nm = ring_mul_int(xx, 3) + E.a4;
            F dn = ring_mul_int(A.y, 2);
            lambda = nm * ring_inv(dn);
        } else {
            F dy = B.y - A.y;
            lambda = dy * ring_inv(F(B.x - A.x));
        }
        F num = X.y - A.y - lambda * (X.x - A.x);
        ECPoint<F> C = ec_add(E, A, B);
        if (C.infinity) fail(ErrorCode::InternalError, "line case mismatch");
        F den = X.x - C.x;
        if (is_zero(num) || is_zero(den))
            fail(ErrorCode::DegenerateDivisorSupport, "line through X");
        return num * ring_inv(den);
    };

    F f = unit_of(E, P);
    ECPoint<F> V = P;
    // bits of n, high to low, skipping the leading bit
    int top = 63;
    while (top > 0 && !((n >> top) & 1)) --top;
    for (int i = top - 1; i >= 0; --i) {
        f = f * f * line_value(V, V);
        V = ec_add(E, V, V);
        if ((n >> i) & 1) {
            f = f * line_value(V, P);
            V = ec_add(E, V, P);
        }
    }
    if (!V.infinity) fail(ErrorCode::InternalError, "miller: point order does not divide n");
    return f;
}

// Weil pairing e_n(P, Q) via Miller's symmetric construction with an
// auxiliary shift S: e = [f_P(Q+S)/f_P(S)] / [f_Q(P-S)/f_Q(-S)].
// `sample` must return random finite points on E.
template <class F>
F weil_pairing(const EllipticCurve<F>& E, const ECPoint<F>& P, const ECPoint<F>& Q, long n,
               const std::function<ECPoint<F>()>& sample, int max_retries = 64)
{
    if (P.infinity || Q.infinity) fail(ErrorCode::InternalError, "pairing with O");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ECPoint<F> S = sample();
        if (S.infinity) continue;
        try {
            ECPoint<F> QS = ec_add(E, Q, S);
            ECPoint<F> mS = ec_neg(S);
            ECPoint<F> PmS = ec_add(E, P, mS);
            if (QS.infinity || PmS.infinity) continue;
            F num = miller_eval(E, P, n, QS) * ring_inv(miller_eval(E, P, n, S));
            F den = miller_eval(E, Q, n, PmS) * ring_inv(miller_eval(E, Q, n, mS));
            return num * ring_inv(den);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateDivisorSupport &&
                e.code() != ErrorCode::DivisionByZero)
                throw;
        }
    }
    fail(ErrorCode::DegenerateDivisorSupport, "pairing retries exhausted");
}

// ---- torsion over finite fields -----------------------------------------

struct TorsionBasisFq {
    long ell = 0;
    FFPtr base_field;             // field of definition of the curve
    FFPtr field;                  // splitting field of E[ell]
    EllipticCurve<FFElem> curve;  // base-changed to `field`
    ECPoint<FFElem> P, Q;
    FFElem zeta;                  // <P, Q>, exact order ell
};

// Factor psi_ell, build the splitting field, lift two independent
// ell-torsion points, and certify the pairing value has order ell.
TorsionBasisFq torsion_basis_fq(const FFPtr& field, const FFElem& a4, const FFElem& a6,
                                long ell, std::uint64_t seed);

// All points of E(F_q) by enumeration (for small q; tests and oracles).
std::vector<ECPoint<FFElem>> ec_all_points(const FFPtr& field, const FFElem& a4,
                                           const FFElem& a6);

// ---- nodal fibres --------------------------------------------------------

// Torsion of the smooth part of the nodal cubic y^2 = (x - xi)^2 (x - nu),
// parametrised by u = (y - s(x-xi))/(y + s(x-xi)) with s^2 = xi - nu.
// Returns the ell points u = zeta^k (k = 1..ell-1) plus the identity O.
template <class F>
struct NodalTorsion {
    F node_x;       // xi
    F slope;        // s
    bool split;     // s lives in the base field (informational)
    std::vector<ECPoint<F>> points; // identity first, then zeta^k order
};

template <class F>
NodalTorsion<F> nodal_torsion_core(const F& xi, const F& c, const F& s,
                                   const std::vector<F>& zetas, bool split)
{
    // cubic (x-xi)^2 (x-xi+c) shifted: points from u-parameter zeta:
    //   m = s (1+zeta)/(1-zeta),  x = xi + m^2 - c,  y = m (m^2 - c)
    NodalTorsion<F> out{xi, s, split, {}};
    out.points.push_back(ECPoint<F>::O());
    for (const F& z : zetas) {
        F one = z * ring_inv(z); // zetas are nonzero
        if (is_zero(one - z)) fail(ErrorCode::InternalError, "zeta = 1 not allowed");
        F m = s * (one + z) * ring_inv(one - z);
        F x = xi + m * m - c;
        F y = m * (m * m - c);
        out.points.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

// Nodal torsion over a finite field containing both the branch slope and
// a primitive ell-th root of unity; errors NotNodal when the cubic does
// not have a node.
NodalTorsion<FFElem> nodal_torsion_fq(const FFPtr& field, const FFElem& a4,
                                      const FFElem& a6, long ell);

// Multiplicative parameter of a smooth point on the nodal cubic.
template <class F>
F nodal_parameter(const F& xi, const F& s, const ECPoint<F>& p)
{
    if (p.infinity) return s * ring_inv(s); // 1
    F num = p.y - s * (p.x - xi);
    F den = p.y + s * (p.x - xi);
    if (is_zero(den)) fail(ErrorCode::DivisionByZero, "parameter at the node");
    return num * ring_inv(den);
}

// ---- closed-form bound calculators --------------------------------------

struct ZarhinManin {
    RBall c1, c2;
};

// c1 = (2^(2g-1)/3 + 1) h + (2^(2g-2) + 67/12) g log2
// c2 = (2^(2g) - 1) h + (2^(2g+1) - 1/3) g log2
ZarhinManin zarhin_manin_constants(long g, const Rat& h_theta, long prec = 128);

// a = 6 + log(13*10^6 * A * (4AB)^(45 A^3 2^(A-2) A!))
RBall javanpeykar_exponent(long A, long B, long prec = 128);

} // namespace lefsurf

#endif
