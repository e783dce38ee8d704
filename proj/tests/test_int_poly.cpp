// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "torsion6/int_poly.hpp"
#include "torsion6/rat_poly.hpp"
#include "torsion6/util.hpp"

using torsion6::IntPoly;
using torsion6::RatPoly;
using torsion6::SplitMix64;

namespace {

IntPoly P(std::vector<long> cs) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}

IntPoly random_poly(SplitMix64& rng, int deg, int bits) {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
    for (auto& z : c) {
        mpz_class v = 0;
        for (int b = 0; b < bits; b += 32) {
            v <<= 32;
            v += static_cast<unsigned long>(rng.next() & 0xffffffffULL);
        }
        if (rng.next() & 1) v = -v;
        z = v;
    }
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("construction normalizes trailing zeros") {
    CHECK(IntPoly(std::vector<mpz_class>{1, 2, 0, 0}).degree() == 1);
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly::zero() == IntPoly());
    CHECK(IntPoly::one().degree() == 0);
    CHECK(IntPoly::x().degree() == 1);
    CHECK(IntPoly::monomial(5, 7).degree() == 7);
    CHECK(IntPoly::monomial(5, 7).lc() == 5);
    CHECK(P({0, 0, 0}).is_zero());
}

TEST_CASE("parse accepts standard forms") {
    CHECK(IntPoly::parse("3*x^4 + 6*x^2 + 12*x - 4") == P({-4, 12, 6, 0, 3}));
    CHECK(IntPoly::parse("x") == IntPoly::x());
    CHECK(IntPoly::parse("-x^2+1") == P({1, 0, -1}));
    CHECK(IntPoly::parse("5") == P({5}));
    CHECK(IntPoly::parse("0") == IntPoly::zero());
    CHECK(IntPoly::parse("x*x") == P({0, 0, 1}));
    CHECK(IntPoly::parse("2*x*x + x") == P({0, 1, 2}));
    CHECK(IntPoly::parse("  - 3 * x ^ 2  ") == P({0, 0, -3}));
    CHECK(IntPoly::parse("x^2 - x - x") == P({0, -2, 1}));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(IntPoly::parse("x^"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("1 + + 2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("x + y"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("3..5"), std::invalid_argument);
    CHECK_THROWS_WITH(IntPoly::parse("x^"),
                      Catch::Matchers::ContainsSubstring("parse error"));
}

TEST_CASE("to_string round-trips through parse") {
    SplitMix64 rng(torsion6::kDefaultSeed);
    for (int i = 0; i < 50; ++i) {
        IntPoly f = random_poly(rng, static_cast<int>(rng.below(9)), 40);
        CHECK(IntPoly::parse(f.to_string()) == f);
    }
    CHECK(IntPoly::zero().to_string() == "0");
}

TEST_CASE("ring arithmetic identities") {
    IntPoly xp1 = P({1, 1}), xm1 = P({-1, 1});
    CHECK(xp1 * xm1 == P({-1, 0, 1}));
    CHECK(xp1.pow(5) == P({1, 5, 10, 10, 5, 1}));
    CHECK(xp1 + xm1 == P({0, 2}));
    CHECK(xp1 - xp1 == IntPoly::zero());
    CHECK(-xp1 == P({-1, -1}));
    CHECK(P({1, 1}) * mpz_class(3) == P({3, 3}));
    CHECK(P({1, 2}).shifted(2) == P({0, 0, 1, 2}));
    CHECK(P({0, 0, 1, 2}).shifted(-2) == P({1, 2}));
    CHECK(P({0, 7}).shifted(-1) == P({7}));
    CHECK(P({3, 7}).shifted(-1) == P({7}));  // low coefficients are discarded
    CHECK(P({5}).shifted(-1).is_zero());
    CHECK(P({5}).shifted(-3).is_zero());
    CHECK(IntPoly{}.shifted(-1).is_zero());
    CHECK(P({1, 2, 3}).shifted(0) == P({1, 2, 3}));
    CHECK(P({1, 1}).pow(0) == IntPoly::one());

    SplitMix64 rng(7);
    IntPoly f = random_poly(rng, 6, 64);
    IntPoly g = random_poly(rng, 5, 64);
    IntPoly h = random_poly(rng, 4, 64);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
}

TEST_CASE("kronecker multiplication path agrees with evaluation") {
    SplitMix64 rng(42);
    // Degrees large enough that na*nb > 4096 forces the Kronecker path.
    IntPoly f = random_poly(rng, 120, 300);
    IntPoly g = random_poly(rng, 90, 300);
    IntPoly h = f * g;
    CHECK(h.degree() == 210);
    for (int i = 0; i < 3; ++i) {
        mpz_class t;
        mpz_class seed(static_cast<unsigned long>(rng.next()));
        t = seed * seed + 3;  // ~128-bit evaluation point
        mpz_class nt = -t;
        CHECK(h.eval(t) == f.eval(t) * g.eval(t));
        CHECK(h.eval(nt) == f.eval(nt) * g.eval(nt));
    }
    // Mixed-size product exercising both paths must distribute.
    IntPoly s = random_poly(rng, 3, 32);
    CHECK((f + s) * g == h + s * g);
}

TEST_CASE("derivative, translate, scale, reverse") {
    IntPoly f = IntPoly::parse("x^3 + 2*x + 7");
    CHECK(f.derivative() == P({2, 0, 3}));
    CHECK(P({0, 0, 1}).translated(1) == P({1, 2, 1}));  // (x+1)^2
    CHECK(IntPoly::parse("x^3 + x").scaled_arg(2) == P({0, 2, 0, 8}));
    CHECK(P({1, 2, 3}).reversed() == P({3, 2, 1}));
    CHECK(IntPoly::zero().derivative().is_zero());
    // translated is a ring homomorphism in the argument
    IntPoly g = IntPoly::parse("x^2 - 5");
    CHECK((f * g).translated(-3) == f.translated(-3) * g.translated(-3));
}

TEST_CASE("evaluation") {
    IntPoly f = IntPoly::parse("x^2 + 3*x + 2");
    CHECK(f.eval(mpz_class(2)) == 12);
    CHECK(f.eval(mpq_class(-1)) == 0);
    CHECK(f.eval(mpq_class(1, 2)) == mpq_class(15, 4));
}

TEST_CASE("content and primitive part keep sign of leading coefficient") {
    IntPoly f = P({4, 6});
    CHECK(f.content() == 2);
    CHECK(f.primitive_part() == P({2, 3}));
    IntPoly g = P({-4, -6});
    CHECK(g.content() == 2);
    CHECK(g.primitive_part() == P({-2, -3}));
    CHECK(IntPoly::zero().content() == 0);
}

TEST_CASE("exact division and its failure modes") {
    IntPoly f = P({-1, 0, 1});
    CHECK(f.divide_exact(P({-1, 1})) == P({1, 1}));
    CHECK(f.try_divide(P({1, 1})).has_value());
    CHECK_FALSE(f.try_divide(P({2, 1})).has_value());
    CHECK_FALSE(P({1, 0, 2}).try_divide(P({0, 2})).has_value());  // 2x divides nothing here
    CHECK_THROWS_WITH(f.divide_exact(P({2, 1})),
                      Catch::Matchers::ContainsSubstring("inexact"));
}

TEST_CASE("subresultant gcd matches oracle") {
    // gcd(6(x^2-1)(x^2+x+1), 4(x-1)(x^2+x+1)) = 2(x^3-1)
    IntPoly F = P({-6, -6, 0, 6, 6});
    IntPoly G = P({-4, 0, 0, 4});
    CHECK(IntPoly::gcd(F, G) == P({-2, 0, 0, 2}));
    CHECK(IntPoly::gcd(F, IntPoly::zero()) == F);
    CHECK(IntPoly::gcd(IntPoly::zero(), G) == P({-1, 0, 0, 1}) * mpz_class(4));
    // gcd of coprime polynomials is a constant
    CHECK(IntPoly::gcd(P({1, 0, 1}), P({-2, 1})).degree() == 0);

    SplitMix64 rng(99);
    for (int i = 0; i < 25; ++i) {
        IntPoly a = random_poly(rng, 2 + static_cast<int>(rng.below(4)), 48);
        IntPoly b = random_poly(rng, 2 + static_cast<int>(rng.below(4)), 48);
        IntPoly c = random_poly(rng, 1 + static_cast<int>(rng.below(3)), 32);
        IntPoly g = IntPoly::gcd(a * c, b * c);
        // the common factor divides the gcd, and the gcd divides both products
        CHECK(g.try_divide(c.primitive_part()).has_value());
        CHECK((a * c).try_divide(g).has_value());
        CHECK((b * c).try_divide(g).has_value());
        CHECK(g.lc() > 0);
    }
}

TEST_CASE("resultant matches oracle and is multiplicative") {
    IntPoly f = IntPoly::parse("x^3 + 2*x + 7");
    IntPoly g = IntPoly::parse("x^2 + 3*x + 1");
    CHECK(IntPoly::resultant(f, g) == -100);
    CHECK(IntPoly::resultant(g, f) == -100);  // (-1)^(3*2) = 1

    SplitMix64 rng(1234);
    for (int i = 0; i < 15; ++i) {
        IntPoly a = random_poly(rng, 1 + static_cast<int>(rng.below(3)), 24);
        IntPoly b = random_poly(rng, 1 + static_cast<int>(rng.below(3)), 24);
        IntPoly c = random_poly(rng, 1 + static_cast<int>(rng.below(3)), 24);
        CHECK(IntPoly::resultant(a, b * c) ==
              IntPoly::resultant(a, b) * IntPoly::resultant(a, c));
    }
    // shared root => resultant 0
    CHECK(IntPoly::resultant(P({-1, 1}) * P({1, 0, 1}), P({-1, 1}) * P({3, 1})) == 0);
}

TEST_CASE("discriminant matches oracle") {
    CHECK(IntPoly::discriminant(IntPoly::parse("x^3 - 3*x + 1")) == 81);
    CHECK(IntPoly::discriminant(IntPoly::parse("3*x^4 + 12*x^2 + 36*x - 4")) ==
          mpz_class("-522720000"));
    SplitMix64 rng(5);
    for (int i = 0; i < 20; ++i) {
        mpz_class A(static_cast<long>(rng.below(41)) - 20);
        mpz_class B(static_cast<long>(rng.below(41)) - 20);
        IntPoly f = IntPoly(std::vector<mpz_class>{B, A, 0, 1});
        if (f.degree() != 3) continue;
        CHECK(IntPoly::discriminant(f) == -4 * A * A * A - 27 * B * B);
    }
}

TEST_CASE("pseudo-remainder agrees with rational remainder") {
    SplitMix64 rng(77);
    for (int i = 0; i < 20; ++i) {
        IntPoly f = random_poly(rng, 4 + static_cast<int>(rng.below(3)), 32);
        IntPoly g = random_poly(rng, 2 + static_cast<int>(rng.below(2)), 32);
        IntPoly r = IntPoly::prem(f, g);
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), g.lc().get_mpz_t(),
                   static_cast<unsigned long>(f.degree() - g.degree() + 1));
        RatPoly lhs = RatPoly(f * scale);
        auto [q, rem] = RatPoly::divmod(lhs, RatPoly(g));
        CHECK(RatPoly(r) == rem);
    }
}

TEST_CASE("coefficient norms") {
    CHECK(P({3, 4}).l2_norm_ceil() == 5);
    CHECK(P({1, 1, 1}).l2_norm_ceil() == 2);
    CHECK(P({-7, 2}).max_abs_coeff() == 7);
}

TEST_CASE("hash distinguishes nearby polynomials") {
    CHECK(IntPoly::x().hash() != P({1, 1}).hash());
    CHECK(P({2, 1}).hash() == P({2, 1}).hash());
    CHECK(P({-2, 1}).hash() != P({2, 1}).hash());
}
