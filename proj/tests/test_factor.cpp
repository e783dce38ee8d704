// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "torsion6/factor.hpp"
#include "torsion6/int_poly.hpp"
#include "torsion6/rat_poly.hpp"
#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"
#include "torsion6/zp_poly.hpp"

using torsion6::factor_mod_p;
using torsion6::FactorCertificate;
using torsion6::full_factor;
using torsion6::IntPoly;
using torsion6::low_degree_factors;
using torsion6::ModFactor;
using torsion6::poly_identity_check;
using torsion6::rational_roots;
using torsion6::RatPoly;
using torsion6::SplitMix64;
using torsion6::splitting_degree_exceeds;
using torsion6::squarefree_part;
using torsion6::ZpPoly;

namespace {

IntPoly P(std::vector<long> cs) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}

// x-only 5-division values of y^2 = x^3 + 1 (irreducible of degree 12).
IntPoly psi5_curve01() {
    return P({-256, 0, 0, -1600, 0, 0, -240, 0, 0, 380, 0, 0, 5});
}

// Primitive 6-division polynomial of y^2 = x^3 + 1 (degree 12, factors as
// linear * quadratic * cubic * sextic).
IntPoly prim6_curve01() {
    return P({-512, 0, 0, -320, 0, 0, -1776, 0, 0, 220, 0, 0, 1});
}

std::vector<std::uint64_t> zc(const ZpPoly& f) {
    std::vector<std::uint64_t> v;
    for (int i = 0; i <= f.degree(); ++i) v.push_back(f.coeff(i));
    return v;
}

IntPoly random_poly(SplitMix64& rng, int deg, long amp) {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * amp))) - amp;
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("factor_mod_p on frozen fixtures") {
    SECTION("x^9 - x^3 mod 3: three linear factors of multiplicity 3") {
        IntPoly f = P({0, 0, 0, -1, 0, 0, 0, 0, 0, 1});
        auto fs = factor_mod_p(f, 3);
        REQUIRE(fs.size() == 3);
        CHECK(zc(fs[0].factor) == std::vector<std::uint64_t>{0, 1});
        CHECK(zc(fs[1].factor) == std::vector<std::uint64_t>{1, 1});
        CHECK(zc(fs[2].factor) == std::vector<std::uint64_t>{2, 1});
        for (const auto& mf : fs) CHECK(mf.multiplicity == 3);
    }
    SECTION("5-division values mod 11: six monic quadratics") {
        auto fs = factor_mod_p(psi5_curve01(), 11);
        REQUIRE(fs.size() == 6);
        std::vector<std::vector<std::uint64_t>> got;
        for (const auto& mf : fs) {
            CHECK(mf.multiplicity == 1);
            got.push_back(zc(mf.factor));
        }
        std::vector<std::vector<std::uint64_t>> want = {
            {1, 0, 1}, {8, 1, 1}, {8, 3, 1}, {1, 5, 1}, {1, 6, 1}, {8, 7, 1}};
        CHECK(got == want);
    }
    SECTION("char 2, radical of a perfect square") {
        IntPoly f = P({1, 0, 1, 0, 1});  // (x^2+x+1)^2 mod 2
        auto fs = factor_mod_p(f, 2);
        REQUIRE(fs.size() == 1);
        CHECK(zc(fs[0].factor) == std::vector<std::uint64_t>{1, 1, 1});
        CHECK(fs[0].multiplicity == 2);
    }
    SECTION("mixed multiplicities") {
        IntPoly f = P({2, -3, 0, 1});  // (x-1)^2 (x+2)
        auto fs = factor_mod_p(f, 7);
        REQUIRE(fs.size() == 2);
        CHECK(zc(fs[0].factor) == std::vector<std::uint64_t>{2, 1});
        CHECK(fs[0].multiplicity == 1);
        CHECK(zc(fs[1].factor) == std::vector<std::uint64_t>{6, 1});
        CHECK(fs[1].multiplicity == 2);
    }
    SECTION("errors") {
        CHECK_THROWS_WITH(factor_mod_p(P({1, 1}), 6), Catch::Matchers::ContainsSubstring("not prime"));
        CHECK_THROWS_WITH(factor_mod_p(IntPoly{}, 5), Catch::Matchers::ContainsSubstring("zero"));
        CHECK_THROWS_WITH(factor_mod_p(P({0, 1, 5}), 5),
                          Catch::Matchers::ContainsSubstring("leading coefficient"));
    }
    SECTION("seed independence (output is sorted and exact)") {
        auto a = factor_mod_p(psi5_curve01(), 11, 1);
        auto b = factor_mod_p(psi5_curve01(), 11, 999);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(zc(a[i].factor) == zc(b[i].factor));
            CHECK(a[i].multiplicity == b[i].multiplicity);
        }
    }
}

TEST_CASE("factor_mod_p product identity on random inputs") {
    SplitMix64 rng(20260815);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        int bad = 0;
        for (int iter = 0; iter < 120; ++iter) {
            int deg = 1 + static_cast<int>(rng.below(20));
            IntPoly f = random_poly(rng, deg, 50);
            if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
            auto fs = factor_mod_p(f, p, rng.next());
            ZpPoly prod = ZpPoly::constant(p, 1);
            int degsum = 0;
            for (const auto& mf : fs) {
                REQUIRE(mf.multiplicity >= 1);
                degsum += mf.factor.degree() * mf.multiplicity;
                for (int k = 0; k < mf.multiplicity; ++k) prod = prod * mf.factor;
            }
            ZpPoly want = ZpPoly::from_int_poly(f, p).monic();
            if (!(prod == want) || degsum != f.degree()) ++bad;
        }
        INFO("p = " << p);
        CHECK(bad == 0);
    }
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(P({1, -1, -1, 1})) == P({-1, 0, 1}));  // (x-1)^2(x+1)
    CHECK(squarefree_part(P({0, 0, 0, 0, 0, 1})) == P({0, 1}));  // x^5
    CHECK(squarefree_part(P({-1, 0, 1})) == P({-1, 0, 1}));
    CHECK(squarefree_part(P({42})) == P({1}));
    CHECK_THROWS(squarefree_part(IntPoly{}));
}

TEST_CASE("full_factor on frozen fixtures") {
    SECTION("x^4 - 1") {
        auto fs = full_factor(P({-1, 0, 0, 0, 1}));
        REQUIRE(fs.size() == 3);
        CHECK(fs[0] == P({-1, 1}));
        CHECK(fs[1] == P({1, 1}));
        CHECK(fs[2] == P({1, 0, 1}));
    }
    SECTION("x^6 + 27") {
        auto fs = full_factor(P({27, 0, 0, 0, 0, 0, 1}));
        REQUIRE(fs.size() == 3);
        CHECK(fs[0] == P({3, -3, 1}));
        CHECK(fs[1] == P({3, 0, 1}));
        CHECK(fs[2] == P({3, 3, 1}));
    }
    SECTION("irreducible degree 12 stays whole") {
        auto fs = full_factor(psi5_curve01());
        REQUIRE(fs.size() == 1);
        CHECK(fs[0] == psi5_curve01());
    }
    SECTION("primitive 6-division values of y^2 = x^3 + 1") {
        auto fs = full_factor(prim6_curve01());
        REQUIRE(fs.size() == 4);
        CHECK(fs[0] == P({-2, 1}));
        CHECK(fs[1] == P({4, 2, 1}));
        CHECK(fs[2] == P({4, 0, 6, 1}));
        CHECK(fs[3] == P({16, 0, -24, 8, 36, -6, 1}));
    }
    SECTION("multiplicities repeat factors") {
        IntPoly f = P({1, -2, 1});        // (x-1)^2
        IntPoly g = P({2, 1});            // x+2
        auto fs = full_factor(f * f * g);  // (x-1)^4 (x+2)
        REQUIRE(fs.size() == 5);
        CHECK(fs[0] == P({-1, 1}));
        CHECK(fs[3] == P({-1, 1}));
        CHECK(fs[4] == P({2, 1}));
    }
    SECTION("non-monic and sign handling") {
        auto fs = full_factor(P({1, -5, 6}));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] == P({-1, 2}));
        CHECK(fs[1] == P({-1, 3}));
        auto neg = full_factor(P({-1, 5, -6}));
        REQUIRE(neg.size() == 2);
        IntPoly prod = neg[0] * neg[1];
        CHECK(prod == P({-1, 5, -6}));
        // Content is stripped: result multiplies to the primitive part.
        auto scaled = full_factor(P({5, -25, 30}));
        IntPoly sp = scaled[0] * scaled[1];
        CHECK(sp == P({1, -5, 6}));
    }
    SECTION("powers of x") {
        auto fs = full_factor(P({0, 0, 0, 0, 0, 1}));
        REQUIRE(fs.size() == 5);
        for (const auto& q : fs) CHECK(q == P({0, 1}));
    }
    SECTION("constants and errors") {
        CHECK(full_factor(P({7})).empty());
        CHECK_THROWS(full_factor(IntPoly{}));
        std::vector<mpz_class> big(66, mpz_class(0));
        big[0] = -1;
        big[65] = 1;
        CHECK_THROWS_WITH(full_factor(IntPoly(std::move(big))),
                          Catch::Matchers::ContainsSubstring("ceiling"));
    }
}

TEST_CASE("full_factor product identity on random inputs") {
    SplitMix64 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly f = random_poly(rng, 1 + static_cast<int>(rng.below(4)), 8);
        IntPoly g = random_poly(rng, 1 + static_cast<int>(rng.below(4)), 8);
        IntPoly h = f * g;
        auto fs = full_factor(h);
        IntPoly prod = P({1});
        for (const auto& q : fs) {
            REQUIRE(q.degree() >= 1);
            prod = prod * q;
        }
        CHECK(prod == h.primitive_part());
    }
}

TEST_CASE("low_degree_factors certificates") {
    SECTION("linear times irreducible quartic, bound 3") {
        IntPoly f = P({-1, 1}) * P({1, 1, 0, 0, 1});  // (x-1)(x^4+x+1)
        FactorCertificate c = low_degree_factors(f, 3);
        CHECK(c.kind == "factor-list");
        REQUIRE(c.factors.size() == 1);
        CHECK(c.factors[0] == P({-1, 1}));
        REQUIRE(c.witness_primes.size() == 8);
        for (std::uint64_t p : c.witness_primes) {
            CHECK(p > 100);
            CHECK(torsion6::is_prime_u64(p));
        }
        CHECK(std::set<std::uint64_t>(c.witness_primes.begin(), c.witness_primes.end()).size() == 8);
        CHECK(c.patterns.size() == 8);
        CHECK(c.bound == 3);
    }
    SECTION("primitive 6-division fixture, bounds 3 and 6") {
        FactorCertificate c3 = low_degree_factors(prim6_curve01(), 3);
        CHECK(c3.kind == "factor-list");
        REQUIRE(c3.factors.size() == 3);
        CHECK(c3.factors[0] == P({-2, 1}));
        CHECK(c3.factors[1] == P({4, 2, 1}));
        CHECK(c3.factors[2] == P({4, 0, 6, 1}));
        FactorCertificate c6 = low_degree_factors(prim6_curve01(), 6);
        CHECK(c6.kind == "factor-list");
        REQUIRE(c6.factors.size() == 4);
        CHECK(c6.factors[3] == P({16, 0, -24, 8, 36, -6, 1}));
    }
    SECTION("irreducible degree 12, bound 6: certified no factor") {
        FactorCertificate c = low_degree_factors(psi5_curve01(), 6);
        CHECK(c.kind == "no-factor-below");
        CHECK(c.factors.empty());
    }
    SECTION("quadratic times cubic at tight bounds") {
        IntPoly f = P({1, 1, 1}) * P({2, 2, 0, 1});  // (x^2+x+1)(x^3+2x+2)
        CHECK(low_degree_factors(f, 1).kind == "no-factor-below");
        FactorCertificate c2 = low_degree_factors(f, 2);
        REQUIRE(c2.factors.size() == 1);
        CHECK(c2.factors[0] == P({1, 1, 1}));
        FactorCertificate c4 = low_degree_factors(f, 4);
        REQUIRE(c4.factors.size() == 2);
        CHECK(c4.factors[1] == P({2, 2, 0, 1}));
    }
    SECTION("degenerate bound runs a full factorization") {
        FactorCertificate c = low_degree_factors(P({-1, 0, 1}), 2);
        CHECK(c.kind == "factor-list");
        REQUIRE(c.factors.size() == 2);
        CHECK(c.factors[0] == P({-1, 1}));
        CHECK(c.factors[1] == P({1, 1}));
    }
    SECTION("negative leading coefficient") {
        FactorCertificate c = low_degree_factors(-prim6_curve01(), 3);
        CHECK(c.kind == "factor-list");
        REQUIRE(c.factors.size() == 3);
        CHECK(c.factors[0] == P({-2, 1}));
    }
    SECTION("errors") {
        CHECK_THROWS(low_degree_factors(IntPoly{}, 3));
        CHECK_THROWS(low_degree_factors(P({-1, 0, 1}), 0));
        CHECK_THROWS_WITH(low_degree_factors(P({1, -2, 1}), 1),
                          Catch::Matchers::ContainsSubstring("squarefree"));
    }
    SECTION("replay with extra witness primes never contradicts") {
        for (int bound : {3, 6}) {
            FactorCertificate base = low_degree_factors(prim6_curve01(), bound);
            FactorCertificate more = low_degree_factors(prim6_curve01(), bound, torsion6::kDefaultSeed, 3);
            REQUIRE(more.witness_primes.size() == 11);
            CHECK(more.kind == base.kind);
            CHECK(more.factors == base.factors);
        }
        FactorCertificate base = low_degree_factors(psi5_curve01(), 6);
        FactorCertificate more = low_degree_factors(psi5_curve01(), 6, torsion6::kDefaultSeed, 3);
        CHECK(more.kind == base.kind);
    }
    SECTION("factor-list entries are verified divisors and irreducible") {
        FactorCertificate c = low_degree_factors(prim6_curve01(), 6);
        for (const auto& q : c.factors) {
            CHECK(prim6_curve01().try_divide(q).has_value());
            if (q.degree() >= 2) {
                FactorCertificate inner = low_degree_factors(q, std::max(1, q.degree() / 2));
                CHECK(inner.kind == "no-factor-below");
            }
        }
    }
    SECTION("JSON round trip and determinism") {
        FactorCertificate c = low_degree_factors(prim6_curve01(), 3);
        torsion6::json j = c.to_json();
        CHECK(j.at("kind") == "factor-list");
        CHECK(j.at("bound") == 3);
        CHECK(j.at("seed").get<std::string>().substr(0, 2) == "0x");
        FactorCertificate back = FactorCertificate::from_json(j);
        CHECK(back.kind == c.kind);
        CHECK(back.bound == c.bound);
        CHECK(back.witness_primes == c.witness_primes);
        CHECK(back.seed == c.seed);
        CHECK(back.factors == c.factors);
        CHECK(back.patterns == c.patterns);
        FactorCertificate again = low_degree_factors(prim6_curve01(), 3);
        CHECK(again.to_json().dump() == j.dump());
    }
}

TEST_CASE("splitting_degree_exceeds") {
    SECTION("x^3 - 2 has a degree witness at p = 5") {
        auto w = splitting_degree_exceeds(P({-2, 0, 0, 1}));
        REQUIRE(w.has_value());
        CHECK(w->prime == 5);
        CHECK(w->degrees == std::vector<int>{1, 2});
    }
    SECTION("cyclic cubic x^3 - 3x + 1 stays inconclusive") {
        CHECK_FALSE(splitting_degree_exceeds(P({1, -3, 0, 1})).has_value());
    }
    SECTION("quadratics and linears never produce witnesses") {
        CHECK_FALSE(splitting_degree_exceeds(P({1, 0, 1})).has_value());
        CHECK_FALSE(splitting_degree_exceeds(P({-7, 2})).has_value());
    }
    SECTION("biquadratic x^4 + 1 is inconclusive (Galois)") {
        CHECK_FALSE(splitting_degree_exceeds(P({1, 0, 0, 0, 1})).has_value());
    }
    SECTION("generic quartic finds a mixed pattern") {
        auto w = splitting_degree_exceeds(P({1, 1, 0, 0, 1}));
        REQUIRE(w.has_value());
        int sum = 0;
        for (int d : w->degrees) sum += d;
        CHECK(sum == 4);
        CHECK(std::set<int>(w->degrees.begin(), w->degrees.end()).size() > 1);
    }
    SECTION("reducible input is rejected") {
        CHECK_THROWS_WITH(splitting_degree_exceeds(P({-1, 0, 1})),
                          Catch::Matchers::ContainsSubstring("reducible"));
        CHECK_THROWS_WITH(splitting_degree_exceeds(P({1, -2, 1})),
                          Catch::Matchers::ContainsSubstring("reducible"));
        CHECK_THROWS(splitting_degree_exceeds(P({5})));
    }
}

TEST_CASE("rational_roots") {
    auto rr = [](std::vector<long> cs) {
        std::vector<mpq_class> v(cs.begin(), cs.end());
        return RatPoly(std::move(v));
    };
    SECTION("frozen cases") {
        auto roots = rational_roots(rr({-15, 7, 2}));  // (2x-3)(x+5)
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == mpq_class(-5));
        CHECK(roots[1] == mpq_class(3, 2));
        auto frac = rational_roots(RatPoly({mpq_class(-9, 16), mpq_class(0), mpq_class(1, 4)}));
        REQUIRE(frac.size() == 2);
        CHECK(frac[0] == mpq_class(-3, 2));
        CHECK(frac[1] == mpq_class(3, 2));
        auto zr = rational_roots(rr({0, 0, 1, 1}));  // x^2 (x+1)
        REQUIRE(zr.size() == 2);
        CHECK(zr[0] == mpq_class(-1));
        CHECK(zr[1] == mpq_class(0));
        CHECK(rational_roots(rr({1, 0, 1})).empty());
        CHECK(rational_roots(rr({5})).empty());
        CHECK_THROWS(rational_roots(RatPoly{}));
    }
    SECTION("sextic fiber polynomials have no rational roots") {
        // 27648 y^3 - 110592 y^6 - a for the two fiber values of a.
        for (mpq_class a : {mpq_class(109503, 64), mpq_class(-35937, 4)}) {
            RatPoly f({-a, mpq_class(0), mpq_class(0), mpq_class(27648), mpq_class(0),
                       mpq_class(0), mpq_class(-110592)});
            CHECK(rational_roots(f).empty());
        }
    }
    SECTION("cross-check against constructed roots") {
        SplitMix64 rng(4242);
        for (int iter = 0; iter < 20; ++iter) {
            long n1 = static_cast<long>(rng.below(19)) - 9;
            long d1 = 1 + static_cast<long>(rng.below(7));
            long n2 = static_cast<long>(rng.below(19)) - 9;
            long d2 = 1 + static_cast<long>(rng.below(7));
            IntPoly f = P({-n1, d1}) * P({-n2, d2}) * P({1, 1, 1});
            std::set<mpq_class> want;
            mpq_class r1(n1, d1), r2(n2, d2);
            r1.canonicalize();
            r2.canonicalize();
            want.insert(r1);
            want.insert(r2);
            auto got = rational_roots(RatPoly(f));
            CHECK(std::set<mpq_class>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("poly_identity_check") {
    IntPoly x1 = P({1, 1});
    CHECK(poly_identity_check(RatPoly(x1.pow(3)), RatPoly(P({1, 3, 3, 1}))));
    CHECK_FALSE(poly_identity_check(RatPoly(x1.pow(3)), RatPoly(P({1, 3, 2, 1}))));
    RatPoly half({mpq_class(1, 2)});
    CHECK(poly_identity_check(half * half, RatPoly({mpq_class(1, 4)})));
}
