#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefsurf/ff_factor.hpp"
#include "lefsurf/finite_field.hpp"

using namespace lefsurf;

TEST_CASE("prime field basics")
{
    FFPtr F7 = FF::prime_field(7);
    FFElem three = F7->from_int(3);
    CHECK((three * three.inverse()).is_one());
    CHECK(three.inverse() == F7->from_int(5)); // 3*5 = 15 = 1 mod 7
    CHECK(three.pow(Int(0)).is_one());
    // sqrt(2) in F_7 -> 3 (deterministic least of {3,4})
    FFElem r = F7->from_int(2).sqrt();
    CHECK(r == F7->from_int(3));
    CHECK_THROWS_AS(F7->from_int(3).sqrt(), Error); // 3 is a non-residue mod 7
}

TEST_CASE("field axioms on random samples")
{
    for (std::uint64_t p : {3ULL, 5ULL, 101ULL}) {
        FFPtr F = FF::prime_field(p);
        Rng rng(42 + p);
        for (int t = 0; t < 60; ++t) {
            FFElem a = F->element(Int(static_cast<unsigned long>(rng.below(p))));
            FFElem b = F->element(Int(static_cast<unsigned long>(rng.below(p))));
            FFElem c = F->element(Int(static_cast<unsigned long>(rng.below(p))));
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("extension fields")
{
    FFPtr F49 = FF::extension(7, 2);
    CHECK(F49->q() == 49);
    FFElem w = F49->gen();
    // w is a proper degree-2 element: fixed by Frobenius^2 but not Frobenius
    CHECK(w.pow(Int(49)) == w);
    CHECK(w.pow(Int(7)) != w);
    // every nonzero square has exactly two roots; sqrt returns the lex-least
    FFElem a = w * w + F49->from_int(3);
    if (a.is_square() && !a.is_zero()) {
        FFElem s = a.sqrt();
        CHECK(s * s == a);
        CHECK((s.lex_less(-s) || s == -s));
    }
    // canonical modulus is stable across construction
    FFPtr F49b = FF::extension(7, 2);
    CHECK(F49->modulus() == F49b->modulus());
}

TEST_CASE("factorisation canonical examples")
{
    FFPtr F5 = FF::prime_field(5);
    // x^2 + 1 over F_5 = (x+2)(x+3)
    FPoly f(std::vector<FFElem>{F5->from_int(1), F5->zero(), F5->from_int(1)});
    auto fac = factor_univariate_ff(f, 0);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].factor.degree() == 1);
    CHECK(fac[0].multiplicity == 1);
    CHECK(fac[0].factor[0] == F5->from_int(2));
    CHECK(fac[1].factor[0] == F5->from_int(3));

    // x^2 + 1 over F_3 is irreducible
    FFPtr F3 = FF::prime_field(3);
    FPoly g(std::vector<FFElem>{F3->from_int(1), F3->zero(), F3->from_int(1)});
    auto fac3 = factor_univariate_ff(g, 0);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].factor.degree() == 2);
    CHECK(fac3[0].multiplicity == 1);

    // x^2 over F_7 = x^2
    FFPtr F7 = FF::prime_field(7);
    FPoly h(std::vector<FFElem>{F7->zero(), F7->zero(), F7->from_int(1)});
    auto fac7 = factor_univariate_ff(h, 0);
    REQUIRE(fac7.size() == 1);
    CHECK(fac7[0].factor.degree() == 1);
    CHECK(fac7[0].multiplicity == 2);
}

TEST_CASE("factorisation round trip on seeded random polynomials")
{
    int count = 0;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 101ULL}) {
        FFPtr F = FF::prime_field(p);
        Rng rng(1234 + p);
        for (int t = 0; t < 125; ++t) {
            long deg = 1 + static_cast<long>(rng.below(20));
            std::vector<FFElem> c;
            for (long i = 0; i < deg; ++i)
                c.push_back(F->element(Int(static_cast<unsigned long>(rng.below(p)))));
            c.push_back(F->element(Int(1 + static_cast<unsigned long>(rng.below(p - 1))))); // nonzero lead
            FPoly f(std::move(c));
            if (f.degree() < 1) continue;
            auto fac = factor_univariate_ff(f, rng.next());
            FPoly prod(f.lead().one());
            for (auto& [g, m] : fac)
                for (int i = 0; i < m; ++i) prod *= g;
            CHECK(prod == make_monic(f));
            ++count;
        }
    }
    CHECK(count >= 490);
}

TEST_CASE("roots helper")
{
    FFPtr F7 = FF::prime_field(7);
    // x^3 + 1 has roots 3, 5, 6 in F_7
    FPoly f(std::vector<FFElem>{F7->from_int(1), F7->zero(), F7->zero(), F7->from_int(1)});
    auto roots = ff_roots(f, 0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == F7->from_int(3));
    CHECK(roots[1] == F7->from_int(5));
    CHECK(roots[2] == F7->from_int(6));
}
