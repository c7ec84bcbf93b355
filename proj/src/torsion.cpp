#include "lefsurf/torsion.hpp"

#include <numeric>

namespace lefsurf {

std::function<FFElem(const FFElem&)> embed_field(const FFPtr& small_field,
                                                 const FFPtr& big_field)
{
    if (small_field->p() != big_field->p())
        fail(ErrorCode::InternalError, "embedding across characteristics");
    if (big_field->k() % small_field->k() != 0)
        fail(ErrorCode::InternalError, "no embedding: degree does not divide");
    if (small_field->k() == big_field->k() && small_field->modulus() == big_field->modulus()) {
        FFPtr big = big_field;
        return [big](const FFElem& x) {
            return x.attached() ? big->from_coeffs(x.coeffs()) : FFElem();
        };
    }
    if (small_field->k() == 1) {
        return [big_field](const FFElem& x) {
            if (!x.attached()) return FFElem();
            return big_field->from_int(Int(static_cast<unsigned long>(x.coeffs()[0])));
        };
    }
    // image of the small generator: the first root of the small modulus
    std::vector<FFElem> mod_coeffs;
    for (auto c : small_field->modulus())
        mod_coeffs.push_back(big_field->from_int(Int(static_cast<unsigned long>(c))));
    FPoly modulus(std::move(mod_coeffs));
    auto roots = ff_roots(modulus, 0);
    if (roots.empty()) fail(ErrorCode::InternalError, "modulus has no root in big field");
    FFElem gen_image = roots.front();
    return [big_field, gen_image](const FFElem& x) {
        if (!x.attached()) return FFElem();
        FFElem acc = big_field->zero();
        for (std::size_t i = x.coeffs().size(); i-- > 0;) {
            acc = acc * gen_image +
                  big_field->from_int(Int(static_cast<unsigned long>(x.coeffs()[i])));
        }
        return acc;
    };
}

std::vector<ECPoint<FFElem>> ec_all_points(const FFPtr& field, const FFElem& a4,
                                           const FFElem& a6)
{
    EllipticCurve<FFElem> E(a4, a6);
    std::vector<ECPoint<FFElem>> pts;
    pts.push_back(ECPoint<FFElem>::O());
    for (Int i = 0; i < field->q(); ++i) {
        FFElem x = field->element(i);
        FFElem r = E.rhs(x);
        if (r.is_zero()) {
            pts.emplace_back(x, field->zero());
        } else if (r.is_square()) {
            FFElem y = r.sqrt();
            pts.emplace_back(x, y);
            pts.emplace_back(x, -y);
        }
    }
    return pts;
}

TorsionBasisFq torsion_basis_fq(const FFPtr& field, const FFElem& a4, const FFElem& a6,
                                long ell, std::uint64_t seed)
{
    if (ell < 2) fail(ErrorCode::InternalError, "ell must be a prime >= 2");
    if (static_cast<std::uint64_t>(ell) == field->p())
        fail(ErrorCode::BadPrime, "ell equals the characteristic");

    EllipticCurve<FFElem> E0(a4, a6);
    FPoly psi;
    if (ell == 2) {
        psi = FPoly(std::vector<FFElem>{a6, a4, field->zero(), field->onev()});
    } else {
        psi = division_polynomial(a4, a6, ell, [&](const FFElem& c) {
            return c * field->from_int(2).inverse();
        });
    }
    auto factors = factor_univariate_ff(psi, seed);
    if (factors.empty()) fail(ErrorCode::InternalError, "empty division polynomial");

    // splitting degree for x-coordinates, then ensure the y's exist
    unsigned long n = 1;
    for (auto& f : factors)
        n = std::lcm(n, static_cast<unsigned long>(f.factor.degree()));
    auto build = [&](unsigned long deg_mult) {
        return FF::extension(field->p(), field->k() * static_cast<unsigned>(deg_mult));
    };
    FFPtr big = build(n);
    auto emb = embed_field(field, big);
    FFElem A = emb(a4), B = emb(a6);
    EllipticCurve<FFElem> E(A, B);

    std::vector<FFElem> psi_big;
    for (long i = 0; i <= psi.degree(); ++i)
        psi_big.push_back(emb(psi[static_cast<std::size_t>(i)]));
    FPoly psi_b(std::move(psi_big));
    auto xs = ff_roots(psi_b, seed ^ 0x9e37ULL);
    bool all_squares = true;
    for (auto& x : xs)
        if (!E.rhs(x).is_square()) {
            all_squares = false;
            break;
        }
    if (!all_squares) {
        big = build(2 * n);
        emb = embed_field(field, big);
        A = emb(a4);
        B = emb(a6);
        E = EllipticCurve<FFElem>(A, B);
        std::vector<FFElem> psi_big2;
        for (long i = 0; i <= psi.degree(); ++i)
            psi_big2.push_back(emb(psi[static_cast<std::size_t>(i)]));
        psi_b = FPoly(std::move(psi_big2));
        xs = ff_roots(psi_b, seed ^ 0x9e37ULL);
    }
    if (static_cast<long>(xs.size()) != psi_b.degree())
        fail(ErrorCode::InternalError, "division polynomial did not split");

    auto lift = [&](const FFElem& x) {
        FFElem r = E.rhs(x);
        FFElem y = r.sqrt();
        return ECPoint<FFElem>(x, y);
    };

    Rng rng(seed ^ 0xabcddcbaULL);
    auto sampler = [&]() {
        for (int tries = 0; tries < 4096; ++tries) {
            Int ix(static_cast<unsigned long>(rng.next() & 0x7fffffffULL));
            FFElem x = big->element(ix % big->q());
            FFElem r = E.rhs(x);
            if (r.is_zero()) return ECPoint<FFElem>(x, big->zero());
            if (r.is_square()) {
                FFElem y = r.sqrt();
                // alternate the sign deterministically
                return (rng.next() & 1) ? ECPoint<FFElem>(x, y) : ECPoint<FFElem>(x, -y);
            }
        }
        fail(ErrorCode::InternalError, "no curve point found for sampling");
    };

    ECPoint<FFElem> P = lift(xs.front());
    if (!ec_scalar_mul(E, Int(ell), P).infinity)
        fail(ErrorCode::InternalError, "torsion point of wrong order");

    std::function<ECPoint<FFElem>()> sample_fn = sampler;
    for (auto& x : xs) {
        ECPoint<FFElem> Qc = lift(x);
        FFElem zeta = weil_pairing(E, P, Qc, ell, sample_fn);
        if (!zeta.is_one()) {
            // certify the order is exactly ell (prime): zeta^ell = 1
            if (!zeta.pow(Int(ell)).is_one())
                fail(ErrorCode::InternalError, "pairing value of wrong order");
            TorsionBasisFq out{ell, field, big, E, P, Qc, zeta};
            return out;
        }
    }
    fail(ErrorCode::InternalError, "no independent torsion point found");
}

NodalTorsion<FFElem> nodal_torsion_fq(const FFPtr& field, const FFElem& a4,
                                      const FFElem& a6, long ell)
{
    // locate the node: double root xi of x^3 + a x + b, i.e. a = -3 xi^2,
    // b = 2 xi^3; xi = -3b/(2a) when a != 0
    FFElem three = field->from_int(3), two = field->from_int(2);
    if (a4.is_zero()) fail(ErrorCode::NotNodal, "cusp or smooth (a = 0)");
    FFElem disc = ring_mul_int(a4 * a4 * a4, 4) + ring_mul_int(a6 * a6, 27);
    if (!disc.is_zero()) fail(ErrorCode::NotNodal, "fibre is smooth");
    FFElem xi = -(three * a6) * (two * a4).inverse();
    // check double-not-triple: c = 3 xi (distance to the third root) nonzero
    FFElem c = three * xi;
    if (c.is_zero()) fail(ErrorCode::NotNodal, "cuspidal fibre");
    bool split = c.is_square();
    FFPtr work = field;
    FFElem xiw = xi, cw = c;
    if (!split) {
        work = FF::extension(field->p(), field->k() * 2);
        auto emb = embed_field(field, work);
        xiw = emb(xi);
        cw = emb(c);
    }
    FFElem s = cw.sqrt();
    // primitive ell-th root of unity needs the order of q^k mod ell
    unsigned d = 1;
    {
        Int qmod = work->q() % static_cast<unsigned long>(ell);
        if (qmod == 0) fail(ErrorCode::BadPrime, "ell divides q");
        Int acc = qmod;
        while (acc != 1) {
            acc = (acc * qmod) % static_cast<unsigned long>(ell);
            ++d;
            if (d > static_cast<unsigned>(ell)) fail(ErrorCode::InternalError, "order search");
        }
    }
    if (d > 1) {
        FFPtr bigger = FF::extension(work->p(), work->k() * d);
        auto emb2 = embed_field(work, bigger);
        cw = emb2(cw);
        s = emb2(s);
        xiw = emb2(xiw);
        work = bigger;
    }
    xi = xiw;
    Int cof = (work->q() - 1) / static_cast<unsigned long>(ell);
    FFElem zeta = work->onev();
    for (Int idx = 2;; ++idx) {
        FFElem cand = work->element(idx).pow(cof);
        if (!cand.is_zero() && !cand.is_one()) {
            zeta = cand;
            break;
        }
        if (idx > work->q()) fail(ErrorCode::InternalError, "no primitive root found");
    }
    std::vector<FFElem> zetas;
    FFElem zk = zeta;
    for (long k = 1; k < ell; ++k) {
        zetas.push_back(zk);
        zk = zk * zeta;
    }
    return nodal_torsion_core(xi, cw, s, zetas, split);
}

ZarhinManin zarhin_manin_constants(long g, const Rat& h_theta, long prec)
{
    if (g < 1) fail(ErrorCode::InternalError, "genus must be >= 1");
    Rat p2g1 = Rat(Int(1) << static_cast<unsigned>(2 * g - 1));
    Rat p2g2 = Rat(Int(1) << static_cast<unsigned>(2 * g - 2));
    Rat p2g = Rat(Int(1) << static_cast<unsigned>(2 * g));
    Rat p2g_1 = Rat(Int(1) << static_cast<unsigned>(2 * g + 1));
    RBall log2 = RBall::exact_rat(Rat(2), prec).log();
    RBall h = RBall::exact_rat(h_theta, prec);
    RBall gq = RBall::exact_rat(Rat(g), prec);
    ZarhinManin out{
        RBall::exact_rat(p2g1 / 3 + 1, prec) * h +
            RBall::exact_rat(p2g2 + Rat(67, 12), prec) * gq * log2,
        RBall::exact_rat(p2g - 1, prec) * h +
            RBall::exact_rat(p2g_1 - Rat(1, 3), prec) * gq * log2};
    return out;
}

RBall javanpeykar_exponent(long A, long B, long prec)
{
    if (A < 1 || B < 1) fail(ErrorCode::InternalError, "A, B >= 1");
    // e = 45 A^3 2^(A-2) A!
    Rat e(45);
    e *= Rat(A) * Rat(A) * Rat(A);
    Rat pow2 = A >= 2 ? Rat(Int(1) << static_cast<unsigned>(A - 2)) : Rat(1, 2);
    e *= pow2;
    Rat fact(1);
    for (long i = 2; i <= A; ++i) fact *= i;
    e *= fact;
    // a = 6 + log(13e6 A) + e log(4AB)
    RBall t1 = RBall::exact_rat(Rat(13000000) * Rat(A), prec).log();
    RBall t2 = RBall::exact_rat(Rat(4) * Rat(A) * Rat(B), prec).log();
    return RBall::exact_long(6, prec) + t1 + RBall::exact_rat(e, prec) * t2;
}

} // namespace lefsurf
