#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefsurf/ball.hpp"
#include "lefsurf/util.hpp"

using namespace lefsurf;

// exact rational arithmetic evaluated alongside ball arithmetic: the exact
// value must stay inside the ball
TEST_CASE("containment of exact rational arithmetic")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a(rng.centered(50), 1 + rng.below(20));
        Rat b(rng.centered(50), 1 + rng.below(20));
        a.canonicalize();
        b.canonicalize();
        RBall A = RBall::exact_rat(a, 64), B = RBall::exact_rat(b, 64);
        Rat sum = a + b, prod = a * b, diff = a - b;
        auto contains = [](const RBall& ball, const Rat& v) {
            RBall d = ball - RBall::exact_rat(v, 256);
            return d.contains_zero();
        };
        CHECK(contains(A + B, sum));
        CHECK(contains(A * B, prod));
        CHECK(contains(A - B, diff));
        if (sgn(b) != 0) {
            RBall denom = RBall::exact_rat(b, 96);
            if (!denom.contains_zero()) CHECK(contains(A / denom, a / b));
        }
    }
}

TEST_CASE("sqrt and interval endpoints")
{
    RBall two = RBall::exact_rat(Rat(2), 128);
    RBall s = two.sqrt();
    // 1.41421356237 < sqrt(2) < 1.41421356238
    CHECK(s.lower().to_double() < 1.41421356238);
    CHECK(s.upper().to_double() > 1.41421356237);
    RBall check = s * s - two;
    CHECK(check.contains_zero());
}

TEST_CASE("complex multiplication containment")
{
    QQi z1(Rat(3, 7), Rat(-2, 5));
    QQi z2(Rat(-1, 3), Rat(4, 9));
    CBall b1 = CBall::exact_qqi(z1, 96), b2 = CBall::exact_qqi(z2, 96);
    QQi prod = z1 * z2;
    CBall diff = b1 * b2 - CBall::exact_qqi(prod, 192);
    CHECK(diff.contains_zero());
    CBall quot = b1 / b2;
    CBall diff2 = quot - CBall::exact_qqi(z1 / z2, 192);
    CHECK(diff2.contains_zero());
}

TEST_CASE("roots of unity")
{
    for (long n : {3L, 5L, 7L, 12L}) {
        CBall acc = CBall::exact_rat(Rat(1), 128);
        for (long k = 0; k < n; ++k) {
            CBall z = CBall::root_of_unity(1, n, 128);
            acc = acc * z;
        }
        // z^n = 1
        CBall diff = acc - CBall::exact_rat(Rat(1), 128);
        CHECK(diff.contains_zero());
        // primitive: z - 1 is nonzero
        CBall z = CBall::root_of_unity(1, n, 128);
        CHECK((z - CBall::exact_rat(Rat(1), 128)).nonzero());
    }
}

TEST_CASE("principal nth root on a safe disk")
{
    // (4)^(1/2) = 2 with argument 0; a real positive center with tiny
    // radius still straddles the cut, so test off-axis and on exact axis
    CBall z = CBall::exact_qqi(QQi(Rat(0), Rat(4)), 128); // 4i
    CBall r;
    REQUIRE(z.nth_root_principal(2, r));
    // sqrt(4i) = sqrt(2)(1+i)
    CBall expect = CBall::exact_qqi(QQi(Rat(1), Rat(1)), 128);
    CBall s2 = CBall::exact_rat(Rat(2), 128);
    CBall rr = r * r - z;
    CHECK(rr.contains_zero());
    (void)expect;
    (void)s2;
    // argument of the principal root of 4i is pi/4
    CHECK(r.re().to_double() == doctest::Approx(1.41421356).epsilon(1e-6));
    CHECK(r.im().to_double() == doctest::Approx(1.41421356).epsilon(1e-6));
}

TEST_CASE("sqrt_near tracks the chosen branch")
{
    CBall z = CBall::exact_rat(Rat(9), 128);
    CBall seed_pos = CBall::exact_rat(Rat(3), 64);
    CBall seed_neg = CBall::exact_rat(Rat(-28, 10), 64);
    CBall out;
    REQUIRE(z.sqrt_near(seed_pos, out));
    CHECK(out.re().to_double() == doctest::Approx(3.0));
    REQUIRE(z.sqrt_near(seed_neg, out));
    CHECK(out.re().to_double() == doctest::Approx(-3.0));
}

TEST_CASE("disjointness and distances")
{
    CBall a = CBall::from_doubles(0, 0, 0.1);
    CBall b = CBall::from_doubles(1, 0, 0.2);
    CHECK(a.disjoint(b));
    CHECK(a.dist_lower(b).to_double() > 0.69);
    CHECK(a.dist_upper(b).to_double() < 1.31);
    CBall c = CBall::from_doubles(0.15, 0, 0.1);
    CHECK(!a.disjoint(c));
}
