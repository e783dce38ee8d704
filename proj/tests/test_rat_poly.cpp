// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "torsion6/int_poly.hpp"
#include "torsion6/rat_poly.hpp"

using torsion6::IntPoly;
using torsion6::RatPoly;

namespace {

RatPoly Q(std::vector<mpq_class> cs) { return RatPoly(std::move(cs)); }

}  // namespace

TEST_CASE("rational construction and accessors") {
    RatPoly f = Q({mpq_class(1, 2), mpq_class(0), mpq_class(3)});
    CHECK(f.degree() == 2);
    CHECK(f.lc() == 3);
    CHECK(f.coeff(0) == mpq_class(1, 2));
    CHECK(f.coeff(5) == 0);
    CHECK(RatPoly().is_zero());
    CHECK(Q({mpq_class(0)}).is_zero());
    CHECK(RatPoly(IntPoly::parse("x^2 - 1")).degree() == 2);
}

TEST_CASE("euclidean division") {
    RatPoly f = RatPoly(IntPoly::parse("x^4 + x + 1"));
    RatPoly g = RatPoly(IntPoly::parse("x^2 + 1"));
    auto [q, r] = RatPoly::divmod(f, g);
    CHECK(q == RatPoly(IntPoly::parse("x^2 - 1")));
    CHECK(r == RatPoly(IntPoly::parse("x + 2")));
    CHECK(q * g + r == f);
    auto [q2, r2] = RatPoly::divmod(g, f);
    CHECK(q2.is_zero());
    CHECK(r2 == g);
    CHECK_THROWS_AS(RatPoly::divmod(f, RatPoly()), std::domain_error);
}

TEST_CASE("gcd is monic; gcd with zero returns monic input") {
    RatPoly f = RatPoly(IntPoly::parse("x^2 - 1"));
    RatPoly g = RatPoly(IntPoly::parse("x^2 - 2*x + 1"));
    CHECK(RatPoly::gcd(f, g) == RatPoly(IntPoly::parse("x - 1")));
    RatPoly h = Q({mpq_class(2), mpq_class(4)});  // 4x + 2
    CHECK(RatPoly::gcd(h, RatPoly()) == Q({mpq_class(1, 2), mpq_class(1)}));
    CHECK(RatPoly::gcd(RatPoly(), h) == Q({mpq_class(1, 2), mpq_class(1)}));
    CHECK(RatPoly::gcd(f, RatPoly(IntPoly::parse("x + 3"))).degree() == 0);
}

TEST_CASE("composition") {
    // (x^2 + 1/2) o (x - 3) = x^2 - 6x + 19/2
    RatPoly f = Q({mpq_class(1, 2), mpq_class(0), mpq_class(1)});
    RatPoly g = RatPoly(IntPoly::parse("x - 3"));
    CHECK(f.compose(g) == Q({mpq_class(19, 2), mpq_class(-6), mpq_class(1)}));
    // composition with x is the identity
    CHECK(f.compose(RatPoly(IntPoly::x())) == f);
    // (f*h) o g = (f o g)(h o g)
    RatPoly h = RatPoly(IntPoly::parse("2*x + 1"));
    CHECK((f * h).compose(g) == f.compose(g) * h.compose(g));
}

TEST_CASE("to_integral splits primitive part and denominator") {
    RatPoly f = Q({mpq_class(0), mpq_class(-5, 6), mpq_class(3, 4)});
    auto [pp, s] = f.to_integral();
    CHECK(pp == IntPoly::parse("9*x^2 - 10*x"));
    CHECK(s == 12);
    CHECK(RatPoly(pp) == f * RatPoly(std::vector<mpq_class>{s}));
    auto [pp2, s2] = RatPoly(IntPoly::parse("2*x + 4")).to_integral();
    CHECK(pp2 == IntPoly::parse("x + 2"));
    CHECK(s2 == mpq_class(1, 2));
}

TEST_CASE("monic and evaluation") {
    RatPoly f = Q({mpq_class(2), mpq_class(4)});
    CHECK(f.monic() == Q({mpq_class(1, 2), mpq_class(1)}));
    CHECK(f.eval(mpq_class(1, 2)) == 4);
    CHECK(RatPoly(IntPoly::parse("x^3 - 8")).eval(mpq_class(2)) == 0);
}

TEST_CASE("derivative and arithmetic") {
    RatPoly f = Q({mpq_class(1, 3), mpq_class(1, 2), mpq_class(1)});
    CHECK(f.derivative() == Q({mpq_class(1, 2), mpq_class(2)}));
    RatPoly g = RatPoly(IntPoly::parse("x + 1"));
    CHECK((f + g) - g == f);
    CHECK(f * RatPoly() == RatPoly());
    CHECK((f * g).degree() == 3);
}

TEST_CASE("to_string uses exact rationals") {
    RatPoly f = Q({mpq_class(-1, 2), mpq_class(3)});
    std::string s = f.to_string();
    CHECK(s.find("1/2") != std::string::npos);
    CHECK(s.find("3") != std::string::npos);
}
