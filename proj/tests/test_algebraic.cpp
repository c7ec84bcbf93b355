#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefsurf/algebraic.hpp"

using namespace lefsurf;

static QPoly qp(std::initializer_list<long> coeffs)
{
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

TEST_CASE("isolate roots of x^2 - 2")
{
    auto disks = isolate_roots(qp({-2, 0, 1}));
    REQUIRE(disks.size() == 2);
    CHECK(disks[0].re().to_double() == doctest::Approx(-1.41421356237));
    CHECK(disks[1].re().to_double() == doctest::Approx(1.41421356237));
    CHECK(disks[0].disjoint(disks[1]));
}

TEST_CASE("isolate complex roots and ordering")
{
    // x^4 - 1: roots -1, -i, i, 1 ordered by (Re, Im)
    auto disks = isolate_roots(qp({-1, 0, 0, 0, 1}));
    REQUIRE(disks.size() == 4);
    CHECK(disks[0].re().to_double() == doctest::Approx(-1.0));
    CHECK(disks[1].im().to_double() == doctest::Approx(-1.0));
    CHECK(disks[2].im().to_double() == doctest::Approx(1.0));
    CHECK(disks[3].re().to_double() == doctest::Approx(1.0));
}

TEST_CASE("refinement reaches tiny radii and keeps the root")
{
    AlgebraicNumber sqrt2(qp({-2, 0, 1}), isolate_roots(qp({-2, 0, 1}))[1]);
    sqrt2.refine_bits(100);
    CHECK(sqrt2.enclosure().rad() <= Mag::two_pow(-100));
    // the enclosure still contains sqrt(2): f(ball) contains 0
    CBall v = eval_qpoly(sqrt2.minpoly(), sqrt2.enclosure(), 256);
    CHECK(v.contains_zero());
    // idempotence: refining to a coarser target leaves it small
    Mag before = sqrt2.enclosure().rad();
    sqrt2.refine(Mag(0.1));
    CHECK(sqrt2.enclosure().rad() <= before);
}

TEST_CASE("rational algebraic numbers are exact")
{
    AlgebraicNumber q = AlgebraicNumber::from_rat(Rat(22, 7));
    CHECK(q.is_rational());
    CHECK(q.enclosure().rad().is_zero() == false); // 22/7 not dyadic: tiny nonzero
    q.refine(Mag::two_pow(-200));
    CHECK(q.enclosure().rad() <= Mag::two_pow(-200));
    AlgebraicNumber half = AlgebraicNumber::from_rat(Rat(1, 2));
    half.refine(Mag::two_pow(-10));
    CHECK(half.enclosure().rad().is_zero()); // dyadic: exactly representable
}

TEST_CASE("equality by refinement")
{
    QPoly f = qp({-2, 0, 1});
    auto roots = AlgebraicNumber::roots_of(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].equals(roots[0]));
    CHECK(!roots[0].equals(roots[1]));
    // same root through a different (non-minimal) squarefree polynomial
    QPoly g = f * qp({-3, 1}); // (x^2-2)(x-3)
    auto roots_g = AlgebraicNumber::roots_of(g);
    REQUIRE(roots_g.size() == 3);
    int matches = 0;
    for (auto& r : roots_g)
        if (r.equals(roots[1])) ++matches;
    CHECK(matches == 1);
}

TEST_CASE("realness")
{
    auto roots = AlgebraicNumber::roots_of(qp({1, 0, 1})); // x^2+1
    REQUIRE(roots.size() == 2);
    CHECK(!roots[0].is_real());
    auto roots2 = AlgebraicNumber::roots_of(qp({-2, 0, 1}));
    CHECK(roots2[0].is_real());
}

TEST_CASE("ordering helper")
{
    auto roots = AlgebraicNumber::roots_of(qp({1, 0, 0, 0, 1})); // x^4+1
    REQUIRE(roots.size() == 4);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        CHECK(algebraic_order_before(roots[i], roots[i + 1]));
}
