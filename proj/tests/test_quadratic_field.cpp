// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "torsion6/quadratic_field.hpp"
#include "torsion6/rat_poly.hpp"
#include "torsion6/util.hpp"

using torsion6::eval_quad;
using torsion6::is_rational_times_square;
using torsion6::is_square;
using torsion6::QuadElement;
using torsion6::RatPoly;
using torsion6::roots_in_field;
using torsion6::SplitMix64;

namespace {

QuadElement el(long a, long b, long d) {
    return QuadElement(mpq_class(a), mpq_class(b), mpz_class(d));
}

QuadElement elq(mpq_class a, mpq_class b, long d) {
    return QuadElement(std::move(a), std::move(b), mpz_class(d));
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
    QuadElement x = el(1, 2, -3);   // 1 + 2*sqrt(-3)
    QuadElement y = el(4, -1, -3);  // 4 - sqrt(-3)
    CHECK((x + y) == el(5, 1, -3));
    CHECK((x - y) == el(-3, 3, -3));
    // (1 + 2w)(4 - w) = 4 - w + 8w - 2w^2 = 4 + 7w + 6 = 10 + 7w, w^2 = -3.
    CHECK((x * y) == el(10, 7, -3));
    CHECK((-x) == el(-1, -2, -3));
    CHECK(x.conjugate() == el(1, -2, -3));
    CHECK(x.norm() == mpq_class(13));  // 1 - (-3)*4
    CHECK(x.trace() == mpq_class(2));
    CHECK((x / y) == (x * y.conjugate()) / el(19, 0, -3));
    CHECK(((x / y) * y) == x);
    CHECK(x.to_string() == "1 + 2*sqrt(-3)");
    CHECK(x.conjugate().to_string() == "1 - 2*sqrt(-3)");
    CHECK(el(5, 0, -3).to_string() == "5");
    CHECK_THROWS(x / el(0, 0, -3));
    CHECK_THROWS(x + el(1, 1, 5));
    SECTION("invalid field discriminants") {
        CHECK_THROWS(el(1, 1, 0));
        CHECK_THROWS(el(1, 1, 1));
        CHECK_THROWS(el(1, 1, 12));  // not squarefree
        CHECK_NOTHROW(el(1, 1, -1));
        CHECK_NOTHROW(el(1, 1, 6));
    }
}

TEST_CASE("squares in a quadratic field") {
    SECTION("rational elements") {
        CHECK(is_square(el(9, 0, 5)));
        CHECK(is_square(el(0, 0, 5)));
        CHECK(is_square(el(5, 0, 5)));        // (sqrt 5)^2
        CHECK(is_square(el(20, 0, 5)));       // (2 sqrt 5)^2
        CHECK_FALSE(is_square(el(3, 0, 5)));
        CHECK_FALSE(is_square(el(-1, 0, 5)));
        CHECK(is_square(el(-1, 0, -1)));      // i^2
        CHECK(is_square(el(-3, 0, -3)));
        CHECK_FALSE(is_square(el(3, 0, -3)));
        CHECK(is_square(elq(mpq_class(9, 4), mpq_class(0), 5)));
    }
    SECTION("proper elements, constructed squares") {
        SplitMix64 rng(99);
        for (long d : {-3L, -1L, 2L, 5L, -7L, 10L}) {
            for (int iter = 0; iter < 25; ++iter) {
                mpq_class a(static_cast<long>(rng.below(13)) - 6,
                            1 + static_cast<long>(rng.below(4)));
                mpq_class b(static_cast<long>(rng.below(13)) - 6,
                            1 + static_cast<long>(rng.below(4)));
                a.canonicalize();
                b.canonicalize();
                QuadElement beta = elq(a, b, d);
                CHECK(is_square(beta * beta));
            }
        }
    }
    SECTION("proper non-squares") {
        // 1 + sqrt(5): norm = -4, not a rational square.
        CHECK_FALSE(is_square(el(1, 1, 5)));
        // 3 + 2*sqrt(2) = (1 + sqrt 2)^2 is a square; 3 + sqrt(2) is not.
        CHECK(is_square(el(3, 2, 2)));
        CHECK_FALSE(is_square(el(3, 1, 2)));
        // norm square but halves fail: 2 + sqrt(2): norm 2, not square.
        CHECK_FALSE(is_square(el(2, 1, 2)));
        // -2 + 2*sqrt(-3): square of (1 + sqrt(-3)).
        CHECK(is_square(el(-2, 2, -3)));
        CHECK_FALSE(is_square(el(2, 2, -3)));
    }
}

TEST_CASE("rational-times-square classes") {
    SECTION("rationals always qualify") {
        CHECK(is_rational_times_square(el(7, 0, -3)));
        CHECK(is_rational_times_square(el(-2, 0, 5)));
    }
    SECTION("norm-square criterion") {
        // q * beta^2 has square norm, and conversely.
        SplitMix64 rng(123);
        for (long d : {-3L, 2L, 5L}) {
            for (int iter = 0; iter < 25; ++iter) {
                long q = static_cast<long>(rng.below(21)) - 10;
                if (q == 0) q = 3;
                mpq_class a(static_cast<long>(rng.below(13)) - 6,
                            1 + static_cast<long>(rng.below(4)));
                mpq_class b(static_cast<long>(rng.below(13)) - 6,
                            1 + static_cast<long>(rng.below(4)));
                a.canonicalize();
                b.canonicalize();
                QuadElement beta = elq(a, b, d);
                if (beta.is_zero()) continue;
                QuadElement alpha = elq(mpq_class(q), mpq_class(0), d) * beta * beta;
                CHECK(is_rational_times_square(alpha));
            }
        }
        // 1 + sqrt(5) has norm -4: not a rational times a square.
        CHECK_FALSE(is_rational_times_square(el(1, 1, 5)));
        // 1 + sqrt(2) has norm -1: not in the class over a real field.
        CHECK_FALSE(is_rational_times_square(el(1, 1, 2)));
        // 2 + sqrt(2): norm 2, not a square.
        CHECK_FALSE(is_rational_times_square(el(2, 1, 2)));
        // 1 + sqrt(-3): norm 4 = 2^2.
        CHECK(is_rational_times_square(el(1, 1, -3)));
        CHECK_THROWS(is_rational_times_square(el(0, 0, 5)));
    }
}

TEST_CASE("polynomial evaluation over a quadratic field") {
    RatPoly f({mpq_class(1), mpq_class(0), mpq_class(1)});  // x^2 + 1
    QuadElement i = el(0, 1, -1);
    CHECK(eval_quad(f, i).is_zero());
    RatPoly g({mpq_class(-2), mpq_class(1)});  // x - 2
    CHECK(eval_quad(g, el(5, 1, -1)) == el(3, 1, -1));
    RatPoly cubic({mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)});
    QuadElement w = el(1, 1, -3);
    CHECK(eval_quad(cubic, w) == (w * w * w));
}

TEST_CASE("roots of small polynomials inside the field") {
    SECTION("linear") {
        auto r = roots_in_field(RatPoly({mpq_class(3), mpq_class(2)}), mpz_class(-3));
        REQUIRE(r.size() == 1);
        CHECK(r[0] == elq(mpq_class(-3, 2), mpq_class(0), -3));
    }
    SECTION("rational quadratic roots") {
        auto r = roots_in_field(RatPoly({mpq_class(-6), mpq_class(1), mpq_class(1)}), mpz_class(5));
        REQUIRE(r.size() == 2);
        CHECK(r[0] == el(2, 0, 5));
        CHECK(r[1] == el(-3, 0, 5));
    }
    SECTION("irrational roots present exactly when disc matches d") {
        RatPoly f({mpq_class(1), mpq_class(-1), mpq_class(1)});  // x^2 - x + 1, disc -3
        auto in = roots_in_field(f, mpz_class(-3));
        REQUIRE(in.size() == 2);
        for (const auto& root : in) CHECK(eval_quad(f, root).is_zero());
        CHECK(roots_in_field(f, mpz_class(-1)).empty());
        CHECK(roots_in_field(f, mpz_class(3)).empty());
    }
    SECTION("double root") {
        RatPoly f({mpq_class(1), mpq_class(2), mpq_class(1)});
        auto r = roots_in_field(f, mpz_class(2));
        REQUIRE(r.size() == 1);
        CHECK(r[0] == el(-1, 0, 2));
    }
    SECTION("degree limit") {
        CHECK_THROWS(roots_in_field(RatPoly({mpq_class(1), mpq_class(0), mpq_class(0), mpq_class(1)}),
                                    mpz_class(5)));
        CHECK(roots_in_field(RatPoly({mpq_class(3)}), mpz_class(5)).empty());
    }
}
