// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "torsion6/division_poly.hpp"
#include "torsion6/elliptic.hpp"
#include "torsion6/factor.hpp"
#include "torsion6/util.hpp"

using torsion6::division_poly;
using torsion6::division_poly_table;
using torsion6::EllipticCurve;
using torsion6::IntPoly;
using torsion6::mul;
using torsion6::Point;
using torsion6::primitive_division_poly;
using torsion6::primitive_division_poly_degree;
using torsion6::SplitMix64;

namespace {

IntPoly P(std::vector<long> c) {
    std::vector<mpz_class> z(c.begin(), c.end());
    return IntPoly(z);
}

EllipticCurve E(long a, long b) { return EllipticCurve(mpq_class(a), mpq_class(b)); }

}  // namespace

TEST_CASE("division polynomial base cases") {
    EllipticCurve e = E(-1, 0);  // y^2 = x^3 - x
    CHECK(division_poly(e, 0).is_zero());
    CHECK(division_poly(e, 1) == P({1}));
    CHECK(division_poly(e, 2) == P({1}));
    // psi_3 = 3x^4 + 6ax^2 + 12bx - a^2
    CHECK(division_poly(e, 3) == P({-1, 0, -6, 0, 3}));
    // psi_4/2y = 2(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)
    CHECK(division_poly(e, 4) == P({2, 0, -10, 0, -10, 0, 2}));
    EllipticCurve f = E(0, 1);
    CHECK(division_poly(f, 3) == P({0, 12, 0, 0, 3}));
    CHECK(division_poly(f, 4) == P({-16, 0, 0, 40, 0, 0, 2}));
}

TEST_CASE("frozen division polynomials for y^2 = x^3 + 1") {
    EllipticCurve e = E(0, 1);
    CHECK(division_poly(e, 5) ==
          P({-256, 0, 0, -1600, 0, 0, -240, 0, 0, 380, 0, 0, 5}));
    CHECK(division_poly(e, 6) ==
          P({0, -6144, 0, 0, -5376, 0, 0, -22272, 0, 0, -2688, 0, 0, 672, 0, 0, 3}));
    CHECK(division_poly(e, 7) ==
          P({65536, 0, 0, -802816, 0, 0, -2809856, 0, 0, -1555456, 0, 0, -928256, 0,
             0, -829696, 0, 0, -42896, 0, 0, 3944, 0, 0, 7}));
}

TEST_CASE("degree and leading coefficient conventions up to n = 12") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 6; ++trial) {
        long a = static_cast<long>(rng.below(19)) - 9;
        long b = static_cast<long>(rng.below(19)) - 9;
        if (4 * a * a * a + 27 * b * b == 0) continue;
        EllipticCurve e = E(a, b);
        auto table = division_poly_table(e, 12);
        for (int n = 2; n <= 12; ++n) {
            INFO("a=" << a << " b=" << b << " n=" << n);
            const IntPoly& psi = table[static_cast<size_t>(n)];
            if (n % 2 == 1) {
                CHECK(psi.degree() == (n * n - 1) / 2);
                CHECK(psi.lc() == n);
            } else {
                CHECK(psi.degree() == (n * n - 4) / 2);
                CHECK(psi.lc() == n / 2);
            }
        }
    }
}

TEST_CASE("primitive division polynomials") {
    EllipticCurve e = E(0, 1);
    CHECK(primitive_division_poly(e, 1) == P({1}));
    CHECK(primitive_division_poly(e, 2) == P({1, 0, 0, 1}));  // x^3 + ax + b
    CHECK(primitive_division_poly(e, 3) == division_poly(e, 3));
    CHECK(primitive_division_poly(e, 5) == division_poly(e, 5));

    SECTION("psi_6 = f_3 * f_6 and the frozen f_6") {
        IntPoly f6 = primitive_division_poly(e, 6);
        CHECK(f6.degree() == 12);
        CHECK(primitive_division_poly(e, 3) * f6 == division_poly(e, 6));
        // The curve has a rational point of exact order six at x = 2.
        auto roots = torsion6::rational_roots(torsion6::RatPoly(f6));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == 2);
    }
    SECTION("divisor product reconstructs the division polynomial") {
        EllipticCurve g = E(-7, 10);
        for (int n : {4, 6, 8, 9, 10, 12}) {
            INFO("n=" << n);
            IntPoly prod = P({1});
            for (unsigned long d = 3; d <= static_cast<unsigned long>(n); ++d) {
                if (static_cast<unsigned long>(n) % d == 0)
                    prod = prod * primitive_division_poly(g, static_cast<int>(d));
            }
            CHECK(prod == division_poly(g, n));
        }
    }
    SECTION("degree formula") {
        CHECK(primitive_division_poly_degree(2) == 3);
        CHECK(primitive_division_poly_degree(6) == 12);
        CHECK(primitive_division_poly_degree(9) == 36);
        CHECK(primitive_division_poly_degree(15) == 96);
        CHECK(primitive_division_poly_degree(21) == 192);
        CHECK(primitive_division_poly_degree(25) == 300);
        CHECK(primitive_division_poly_degree(30) == 288);
        CHECK(primitive_division_poly_degree(42) == 576);
        CHECK(primitive_division_poly_degree(45) == 864);
        CHECK(primitive_division_poly_degree(63) == 1728);
        for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
            EllipticCurve g = E(2, 3);
            CHECK(primitive_division_poly(g, n).degree() == primitive_division_poly_degree(n));
        }
    }
}

TEST_CASE("two-torsion polynomial is coprime to even division polynomials") {
    // Even with full rational two-torsion the x-only polynomials share no root,
    // because a point cannot have order two and order > two at once.
    for (auto [a, b] : std::vector<std::pair<long, long>>{
             {-1, 0}, {0, 1}, {-75, -262}, {5, -3}, {-436, 2680}}) {
        EllipticCurve e = E(a, b);
        IntPoly f2 = primitive_division_poly(e, 2);
        for (int n : {4, 6, 8, 10, 12}) {
            INFO("a=" << a << " b=" << b << " n=" << n);
            CHECK(IntPoly::gcd(division_poly(e, n), f2) == P({1}));
        }
    }
    // Explicit numeric cross-check on y^2 = x^3 - x with 2-torsion x in {-1,0,1}.
    EllipticCurve e = E(-1, 0);
    IntPoly psi6 = division_poly(e, 6);
    for (long r : {-1L, 0L, 1L}) CHECK(psi6.eval(mpz_class(r)) != 0);
}

TEST_CASE("vanishing characterizes torsion") {
    SECTION("order-six point on y^2 = x^3 + 1") {
        EllipticCurve e = E(0, 1);
        Point p(mpq_class(2), mpq_class(3));
        auto table = division_poly_table(e, 12);
        for (int n = 2; n <= 12; ++n) {
            bool killed = mul(e, n, p).infinity;
            bool vanishes = table[static_cast<size_t>(n)].eval(mpz_class(2)) == 0;
            INFO("n=" << n);
            CHECK(killed == (n % 6 == 0));
            CHECK(vanishes == killed);
        }
    }
    SECTION("random integral points are generically non-torsion") {
        SplitMix64 rng(99);
        int checked = 0;
        while (checked < 20) {
            long x0 = static_cast<long>(rng.below(15)) - 7;
            long y0 = static_cast<long>(rng.below(15)) - 7;
            long a = static_cast<long>(rng.below(15)) - 7;
            long b = y0 * y0 - x0 * x0 * x0 - a * x0;
            if (4 * a * a * a + 27 * b * b == 0) continue;
            if (y0 == 0) continue;
            EllipticCurve e = E(a, b);
            Point p{mpq_class(x0), mpq_class(y0)};
            REQUIRE(torsion6::is_on_curve(e, p));
            auto table = division_poly_table(e, 12);
            for (int n = 2; n <= 12; ++n) {
                bool killed = mul(e, n, p).infinity;
                bool vanishes = table[static_cast<size_t>(n)].eval(mpz_class(x0)) == 0;
                INFO("x0=" << x0 << " y0=" << y0 << " a=" << a << " n=" << n);
                CHECK(vanishes == killed);
            }
            ++checked;
        }
    }
}

TEST_CASE("primitive factor degrees are twist invariant") {
    EllipticCurve e = E(0, 1);
    EllipticCurve t = torsion6::quadratic_twist(e, mpq_class(2));
    REQUIRE(t.is_integral());
    auto degrees = [](const IntPoly& f) {
        std::vector<int> out;
        for (const auto& fac : torsion6::full_factor(f)) out.push_back(fac.degree());
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int n : {3, 4, 5, 6}) {
        INFO("n=" << n);
        CHECK(degrees(primitive_division_poly(e, n)) == degrees(primitive_division_poly(t, n)));
    }
}

TEST_CASE("division polynomial error handling") {
    EllipticCurve bad(mpq_class(1, 2), mpq_class(1));
    CHECK_THROWS_AS(division_poly(bad, 3), std::domain_error);
    EllipticCurve e = E(0, 1);
    CHECK_THROWS_AS(division_poly(e, -1), std::invalid_argument);
    CHECK_THROWS_AS(primitive_division_poly(e, 0), std::invalid_argument);
}
