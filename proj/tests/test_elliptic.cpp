// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "torsion6/elliptic.hpp"
#include "torsion6/util.hpp"

using torsion6::add;
using torsion6::curve_from_j;
using torsion6::EllipticCurve;
using torsion6::is_on_curve;
using torsion6::mul;
using torsion6::negate;
using torsion6::Point;
using torsion6::point_order_bounded;
using torsion6::quadratic_twist;
using torsion6::reduced_model_from_j;
using torsion6::SplitMix64;

namespace {

EllipticCurve E(long a, long b) { return EllipticCurve(mpq_class(a), mpq_class(b)); }

Point P(long x, long y) { return Point(mpq_class(x), mpq_class(y)); }

}  // namespace

TEST_CASE("curve construction and invariants") {
    EllipticCurve e = E(0, 1);
    CHECK(e.discriminant() == mpq_class(-432));
    CHECK(e.j_invariant() == 0);
    EllipticCurve f = E(1, 0);
    CHECK(f.discriminant() == mpq_class(-64));
    CHECK(f.j_invariant() == 1728);
    EllipticCurve g = E(-1, 0);
    CHECK(g.discriminant() == mpq_class(64));
    CHECK(g.j_invariant() == 1728);
    CHECK(E(1, 1).j_invariant() == mpq_class(6912, 31));  // 1728*4/(4+27)
    CHECK_THROWS(E(0, 0));
    CHECK_THROWS(E(-3, 2));  // 4*(-27) + 27*4 = 0
    CHECK(e.is_integral());
    CHECK_FALSE(EllipticCurve(mpq_class(1, 2), mpq_class(1)).is_integral());
}

TEST_CASE("point arithmetic on y^2 = x^3 + 1") {
    EllipticCurve e = E(0, 1);
    Point p = P(2, 3);
    REQUIRE(is_on_curve(e, p));
    Point p2 = add(e, p, p);
    CHECK(p2 == P(0, 1));
    Point p3 = add(e, p2, p);
    CHECK(p3 == P(-1, 0));
    CHECK(mul(e, 4, p) == P(0, -1));
    CHECK(mul(e, 5, p) == P(2, -3));
    CHECK(mul(e, 6, p) == Point::at_infinity());
    CHECK(mul(e, -1, p) == negate(p));
    CHECK(mul(e, 0, p) == Point::at_infinity());
    auto ord = point_order_bounded(e, p, 12);
    REQUIRE(ord.has_value());
    CHECK(*ord == 6);
    CHECK(point_order_bounded(e, p, 5) == std::nullopt);
    CHECK_FALSE(is_on_curve(e, P(2, 4)));
    CHECK(is_on_curve(e, Point::at_infinity()));
}

TEST_CASE("group laws on random curves") {
    SplitMix64 rng(31337);
    int checked = 0;
    while (checked < 25) {
        long x1 = static_cast<long>(rng.below(11)) - 5;
        long y1 = static_cast<long>(rng.below(11)) - 5;
        long x2 = static_cast<long>(rng.below(11)) - 5;
        long y2 = static_cast<long>(rng.below(11)) - 5;
        if (x1 == x2) continue;
        // Curve through both points: solve y^2 = x^3 + a x + b exactly.
        long num = y1 * y1 - y2 * y2 - (x1 * x1 * x1 - x2 * x2 * x2);
        mpq_class a(num, x1 - x2);
        a.canonicalize();
        mpq_class b = mpq_class(y1 * y1) - x1 * x1 * x1 - a * x1;
        if (4 * a * a * a + 27 * b * b == 0) continue;
        EllipticCurve e(a, b);
        Point p{mpq_class(x1), mpq_class(y1)};
        Point q{mpq_class(x2), mpq_class(y2)};
        REQUIRE(is_on_curve(e, p));
        REQUIRE(is_on_curve(e, q));
        Point s = add(e, p, q);
        CHECK(is_on_curve(e, s));
        CHECK(s == add(e, q, p));
        CHECK(add(e, p, negate(p)) == Point::at_infinity());
        Point t = add(e, s, p);           // (p+q)+p
        Point u = add(e, add(e, p, p), q);  // (p+p)+q
        CHECK(t == u);
        CHECK(mul(e, 5, p) == add(e, mul(e, 3, p), mul(e, 2, p)));
        ++checked;
    }
}

TEST_CASE("curves from j and twists") {
    CHECK(curve_from_j(mpq_class(0)) == E(0, 1));
    CHECK(curve_from_j(mpq_class(1728)) == E(1, 0));
    for (mpq_class j : {mpq_class(-140625, 8), mpq_class(3375, 2), mpq_class(54000),
                        mpq_class(-121945, 32), mpq_class(287496)}) {
        EllipticCurve e = curve_from_j(j);
        CHECK(e.j_invariant() == j);
        CHECK(quadratic_twist(e, mpq_class(5)).j_invariant() == j);
        CHECK(quadratic_twist(e, mpq_class(-7, 3)).j_invariant() == j);
    }
    EllipticCurve e = E(-75, -262);
    CHECK(quadratic_twist(quadratic_twist(e, mpq_class(6)), mpq_class(6)) ==
          quadratic_twist(e, mpq_class(36)));
    CHECK_THROWS(quadratic_twist(e, mpq_class(0)));
}

TEST_CASE("reduced integral models from j") {
    struct Fixture {
        mpq_class j;
        long a, b;
    };
    // Frozen minimal twist representatives used by the sieve computations.
    std::vector<Fixture> fixtures = {
        {mpq_class(-140625, 8), -75, -262},
        {mpq_class(3375, 2), 45, 18},
        {mpq_class(-121945, 32), -435, -4210},
        {mpq_class(46969655, 32768), 3165, 31070},
        {mpq_class(-189613868625, 128), -17235, -870894},
    };
    for (const auto& fx : fixtures) {
        EllipticCurve e = reduced_model_from_j(fx.j);
        INFO("j = " << fx.j);
        CHECK(e.a() == mpq_class(fx.a));
        CHECK(e.b() == mpq_class(fx.b));
        CHECK(e.j_invariant() == fx.j);
    }
    SECTION("big numerator stays reduced and integral") {
        mpq_class j(mpz_class("3477265875"), mpz_class(2097152));
        EllipticCurve e = reduced_model_from_j(j);
        CHECK(e.is_integral());
        CHECK(e.j_invariant() == j);
        mpz_class a = e.a().get_num(), b = e.b().get_num();
        for (const auto& [q, unused] : torsion6::factorize(mpz_class(gcd(a, b)))) {
            (void)unused;
            mpz_class q2 = q * q, q3 = q2 * q;
            bool strippable = mpz_divisible_p(a.get_mpz_t(), q2.get_mpz_t()) &&
                              mpz_divisible_p(b.get_mpz_t(), q3.get_mpz_t());
            CHECK_FALSE(strippable);
        }
    }
    SECTION("special j values") {
        CHECK(reduced_model_from_j(mpq_class(0)) == E(0, 1));
        CHECK(reduced_model_from_j(mpq_class(1728)) == E(1, 0));
    }
    SECTION("all isogeny-15 j-invariants are below 1728") {
        for (mpq_class j : {mpq_class(-25, 2), mpq_class(-349938025, 8),
                            mpq_class(-121945, 32), mpq_class(46969655, 32768)}) {
            CHECK(j < 1728);
        }
    }
}

TEST_CASE("curve and point JSON round trips") {
    EllipticCurve e(mpq_class(-75), mpq_class(-262));
    torsion6::json j = e.to_json();
    CHECK(j.at("a").at(0) == "-75");
    CHECK(j.at("a").at(1) == "1");
    CHECK(j.contains("delta"));
    CHECK(j.contains("j"));
    CHECK(EllipticCurve::from_json(j) == e);
    Point p(mpq_class(1, 2), mpq_class(-3, 4));
    torsion6::json pj = p.to_json();
    CHECK(Point::from_json(pj) == p);
    torsion6::json inf = Point::at_infinity().to_json();
    CHECK(inf == torsion6::json("infinity"));
    CHECK(Point::from_json(inf).infinity);
}
