#include "lefsurf/ff_factor.hpp"

#include <algorithm>

#include "lefsurf/util.hpp"

namespace lefsurf {

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p:
// sum c_j x^(pj) -> sum c_j^(q/p) x^j.
FPoly pth_root(const FPoly& f)
{
    const FFPtr& field = f.lead().field();
    std::uint64_t p = field->p();
    Int e = field->q() / static_cast<unsigned long>(p);
    std::vector<FFElem> out;
    for (long i = 0; i <= f.degree(); i += static_cast<long>(p)) {
        FFElem c = f[static_cast<std::size_t>(i)];
        out.push_back(c.attached() ? c.pow(e) : c);
    }
    return FPoly(std::move(out));
}

void sqfree_decompose(const FPoly& f_in, int outer_mult, std::vector<std::pair<FPoly, int>>& out)
{
    FPoly f = make_monic(f_in);
    if (f.degree() <= 0) return;
    std::uint64_t p = f.lead().field()->p();
    FPoly fd = f.derivative();
    if (fd.zero()) {
        sqfree_decompose(pth_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    FPoly c = poly_gcd(f, fd);
    FPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FPoly y = poly_gcd(w, c);
        FPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(make_monic(z), outer_mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    // leftover c is exactly the part with p | multiplicity, itself a p-th
    // power; the derivative-zero path of the recursion supplies the factor p
    if (c.degree() > 0) sqfree_decompose(c, outer_mult, out);
}

// Distinct-degree decomposition of a squarefree monic g: list of
// (product-of-irreducibles-of-degree-d, d).
std::vector<std::pair<FPoly, long>> ddf(const FPoly& g_in)
{
    FPoly g = g_in;
    const FFPtr& field = g.lead().field();
    std::vector<std::pair<FPoly, long>> out;
    FPoly x = FPoly::monomial(field->onev(), 1);
    FPoly h = x;
    long d = 0;
    while (g.degree() > 0 && g.degree() >= 2 * (d + 1)) {
        ++d;
        h = fpoly_powmod(h, field->q(), g);
        FPoly f_d = poly_gcd(g, h - x);
        if (f_d.degree() > 0) {
            out.emplace_back(f_d, d);
            g = g / f_d;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

FPoly random_poly_below(const FFPtr& field, long deg_bound, Rng& rng)
{
    std::vector<FFElem> c;
    for (long i = 0; i < deg_bound; ++i) {
        Int idx(static_cast<unsigned long>(rng.next() & 0xffffffffULL));
        c.push_back(field->element(idx % field->q()));
    }
    return FPoly(std::move(c));
}

void edf(const FPoly& h, long d, Rng& rng, std::vector<FPoly>& out)
{
    if (h.degree() == d) {
        out.push_back(make_monic(h));
        return;
    }
    const FFPtr& field = h.lead().field();
    if (field->p() == 2) fail(ErrorCode::Unsupported, "equal-degree splitting needs odd q");
    Int m = 1;
    for (long i = 0; i < d; ++i) m *= field->q();
    m = (m - 1) / 2;
    for (int tries = 0; tries < 256; ++tries) {
        FPoly r = random_poly_below(field, h.degree(), rng);
        if (r.degree() < 1) continue;
        FPoly s = fpoly_powmod(r, m, h) - FPoly(field->onev());
        FPoly g = poly_gcd(h, s);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            edf(g, d, rng, out);
            edf(h / g, d, rng, out);
            return;
        }
    }
    fail(ErrorCode::InternalError, "equal-degree splitting did not converge");
}

bool fpoly_lex_less(const FPoly& a, const FPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = 0; i <= a.degree(); ++i) {
        const FFElem &x = a[static_cast<std::size_t>(i)], &y = b[static_cast<std::size_t>(i)];
        if (x != y) return x.lex_less(y);
    }
    return false;
}

} // namespace

std::vector<FFFactor> factor_univariate_ff(const FPoly& f, std::uint64_t seed)
{
    if (f.zero()) fail(ErrorCode::InternalError, "factor of zero polynomial");
    std::vector<FFFactor> result;
    if (f.degree() == 0) return result;
    Rng rng(seed ^ 0xabcdef0123456789ULL);
    std::vector<std::pair<FPoly, int>> sqf;
    sqfree_decompose(f, 1, sqf);
    for (auto& [part, mult] : sqf) {
        for (auto& [block, d] : ddf(part)) {
            std::vector<FPoly> irreducibles;
            edf(block, d, rng, irreducibles);
            for (auto& irr : irreducibles) result.push_back({irr, mult});
        }
    }
    std::sort(result.begin(), result.end(), [](const FFFactor& a, const FFFactor& b) {
        return fpoly_lex_less(a.factor, b.factor);
    });
    return result;
}

std::vector<FFElem> ff_roots(const FPoly& f, std::uint64_t seed)
{
    std::vector<FFElem> roots;
    for (auto& fac : factor_univariate_ff(f, seed)) {
        if (fac.factor.degree() == 1) {
            // x + c -> root -c (factor is monic)
            roots.push_back(-fac.factor[0]);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const FFElem& a, const FFElem& b) {
        return a.lex_less(b);
    });
    return roots;
}

} // namespace lefsurf
