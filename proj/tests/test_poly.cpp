#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefsurf/poly.hpp"

using namespace lefsurf;

static QPoly qp(std::initializer_list<long> coeffs)
{
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

TEST_CASE("arithmetic and division")
{
    QPoly f = qp({-1, 0, 1}); // x^2 - 1
    QPoly g = qp({1, 1});     // x + 1
    QPoly q, r;
    divmod(f, g, q, r);
    CHECK(q == qp({-1, 1}));
    CHECK(r.zero());
    CHECK(f == q * g + r);

    CHECK((f + g) == qp({0, 1, 1}));
    CHECK((f * g).degree() == 3);
    CHECK(f.eval(Rat(3)) == Rat(8));
}

TEST_CASE("gcd and squarefree part")
{
    QPoly f = qp({1, 1}) * qp({1, 1}) * qp({-2, 1}); // (x+1)^2 (x-2)
    QPoly g = poly_gcd(f, f.derivative());
    CHECK(g == qp({1, 1}));
    QPoly sf = squarefree_part(f);
    CHECK(sf == make_monic(qp({1, 1}) * qp({-2, 1})));
}

TEST_CASE("resultant and discriminant closed forms")
{
    // discriminant(x^2 + bx + c) = b^2 - 4c
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c) {
            QPoly f = qp({c, b, 1});
            CHECK(discriminant(f) == Rat(b * b - 4 * c));
        }
    // resultant(f, 1) = 1
    CHECK(resultant(qp({2, 5, 1}), qp({1})) == Rat(1));
    // multiplicativity on small random inputs
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto rnd = [&](int deg) {
            std::vector<Rat> v;
            for (int i = 0; i <= deg; ++i) v.emplace_back(rng.centered(4));
            QPoly p(std::move(v));
            return p.zero() ? qp({1}) : p;
        };
        QPoly f = rnd(2), g = rnd(2), h = rnd(3);
        if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("bivariate discriminant of the Legendre-type cubic")
{
    // x(x-1)(x-t) = x^3 - (1+t)x^2 + t x; disc in t is t^2(t-1)^2 up to constant
    QPoly one = qp({1});
    QPoly t = qp({0, 1});
    QQPoly f(std::vector<QPoly>{QPoly(), t, -(one + t), one});
    QPoly d = discriminant_bivariate_in_x(f);
    QPoly expected = qp({0, 0, 1}) * qp({1, -2, 1}); // t^2 (t-1)^2
    // equal up to a nonzero constant
    REQUIRE(d.degree() == 4);
    Rat scale = d[2] / expected[2];
    CHECK(d == expected * scale);
    CHECK(sgn(scale) != 0);
}

TEST_CASE("interpolation round trip")
{
    QPoly f = qp({3, -2, 0, 1});
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= 3; ++i) {
        xs.emplace_back(i);
        ys.push_back(f.eval(Rat(i)));
    }
    CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("taylor shift and scaling")
{
    QPoly f = qp({1, 2, 1}); // (x+1)^2
    CHECK(f.taylor_shift(Rat(-1)) == qp({0, 0, 1}));
    CHECK(f.scale_arg(Rat(2)) == qp({1, 4, 4}));
    CHECK(qp({1, 2, 3}).reversed() == qp({3, 2, 1}));
}

TEST_CASE("content and height")
{
    QPoly f = qp({2, 4, 6}) * Rat(1, 3);
    QPoly p = primitive_part(f);
    CHECK(p == qp({1, 2, 3}));
    CHECK(poly_height(f) == 3);
}
