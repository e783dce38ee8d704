// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "torsion6/lutz_nagell.hpp"

using torsion6::add;
using torsion6::EllipticCurve;
using torsion6::is_on_curve;
using torsion6::Point;
using torsion6::rational_torsion;
using torsion6::TorsionGroup;

namespace {

EllipticCurve E(long a, long b) { return EllipticCurve(mpq_class(a), mpq_class(b)); }

Point P(long x, long y) { return Point(mpq_class(x), mpq_class(y)); }

std::set<Point> point_set(const TorsionGroup& t) {
    return std::set<Point>(t.points.begin(), t.points.end());
}

}  // namespace

TEST_CASE("torsion of y^2 = x^3 + 729") {
    TorsionGroup t = rational_torsion(E(0, 729));
    CHECK(t.order == 6);
    CHECK(t.invariants == std::vector<int>{6});
    CHECK(t.structure() == "C6");
    std::set<Point> expect = {Point::at_infinity(), P(-9, 0), P(0, 27),
                              P(0, -27), P(18, 81), P(18, -81)};
    CHECK(point_set(t) == expect);
}

TEST_CASE("torsion of the j = 0 quadratic twists") {
    CHECK(point_set(rational_torsion(E(0, 27))) ==
          std::set<Point>{Point::at_infinity(), P(-3, 0)});
    CHECK(rational_torsion(E(0, 27)).structure() == "C2");
    CHECK(point_set(rational_torsion(E(0, -27))) ==
          std::set<Point>{Point::at_infinity(), P(3, 0)});
    CHECK(point_set(rational_torsion(E(0, -1728))) ==
          std::set<Point>{Point::at_infinity(), P(12, 0)});
    TorsionGroup t = rational_torsion(E(0, 1));
    CHECK(t.order == 6);
    CHECK(point_set(t) == std::set<Point>{Point::at_infinity(), P(-1, 0), P(0, 1),
                                          P(0, -1), P(2, 3), P(2, -3)});
}

TEST_CASE("full two-torsion and odd torsion") {
    TorsionGroup t = rational_torsion(E(-1, 0));
    CHECK(t.order == 4);
    CHECK(t.invariants == std::vector<int>{2, 2});
    CHECK(t.structure() == "C2xC2");
    CHECK(point_set(t) ==
          std::set<Point>{Point::at_infinity(), P(-1, 0), P(0, 0), P(1, 0)});

    TorsionGroup c3 = rational_torsion(E(0, 4));
    CHECK(c3.order == 3);
    CHECK(c3.invariants == std::vector<int>{3});
    CHECK(point_set(c3) == std::set<Point>{Point::at_infinity(), P(0, 2), P(0, -2)});

    TorsionGroup c3b = rational_torsion(E(0, -432));
    CHECK(c3b.order == 3);
    CHECK(point_set(c3b) ==
          std::set<Point>{Point::at_infinity(), P(12, 36), P(12, -36)});

    // x^3 + x + 1 has no rational root and the only integral candidate (0, 1)
    // fails the order bound, so the torsion is trivial.
    TorsionGroup trivial = rational_torsion(E(1, 1));
    CHECK(trivial.order == 1);
    CHECK(trivial.invariants.empty());
    CHECK(trivial.structure() == "trivial");
    CHECK(point_set(trivial) == std::set<Point>{Point::at_infinity()});
}

TEST_CASE("larger torsion structures") {
    // y^2 = x^3 - 43x + 166 has a rational point of order seven.
    TorsionGroup c7 = rational_torsion(E(-43, 166));
    CHECK(c7.order == 7);
    CHECK(c7.invariants == std::vector<int>{7});
    CHECK(point_set(c7).count(P(3, 8)) == 1);

    // y^2 = x^3 - 219x + 1654 has a point of order nine at (3, 32).
    TorsionGroup c9 = rational_torsion(E(-219, 1654));
    CHECK(c9.order == 9);
    CHECK(c9.invariants == std::vector<int>{9});
    CHECK(point_set(c9).count(P(3, 32)) == 1);
    CHECK(point_set(c9).count(P(35, 192)) == 1);

    // Full two-torsion at x in {-177, 66, 111} plus the order-three point (147, 972).
    TorsionGroup t26 = rational_torsion(E(-24003, 1296702));
    CHECK(t26.order == 12);
    CHECK(t26.invariants == std::vector<int>{2, 6});
    CHECK(t26.structure() == "C2xC6");
    std::set<Point> pts26 = point_set(t26);
    CHECK(pts26.count(P(147, 972)) == 1);
    CHECK(pts26.count(P(-177, 0)) == 1);
    CHECK(pts26.count(P(66, 0)) == 1);
    CHECK(pts26.count(P(111, 0)) == 1);
}

TEST_CASE("torsion subgroup is closed and every point has the stated order") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{
             {0, 729}, {0, 1}, {-1, 0}, {-43, 166}, {-24003, 1296702}, {1, 2}}) {
        EllipticCurve e = E(a, b);
        TorsionGroup t = rational_torsion(e);
        INFO("a=" << a << " b=" << b);
        CHECK(t.order == static_cast<int>(t.points.size()));
        int invariant_product = 1;
        for (int m : t.invariants) invariant_product *= m;
        CHECK(invariant_product == t.order);
        std::set<Point> pts = point_set(t);
        for (const Point& p : t.points) {
            CHECK(is_on_curve(e, p));
            auto ord = torsion6::point_order_bounded(e, p, 12);
            REQUIRE(ord.has_value());
            CHECK(t.order % *ord == 0);
            for (const Point& q : t.points) CHECK(pts.count(add(e, p, q)) == 1);
        }
    }
}

TEST_CASE("torsion JSON report") {
    torsion6::json j = rational_torsion(E(0, 729)).to_json();
    CHECK(j.at("order") == 6);
    CHECK(j.at("structure") == "C6");
    CHECK(j.at("points").size() == 6);
    CHECK(j.at("invariants") == torsion6::json::array({6}));
}

TEST_CASE("rational torsion requires an integral model") {
    CHECK_THROWS_AS(rational_torsion(EllipticCurve(mpq_class(1, 4), mpq_class(1))),
                    std::domain_error);
}
