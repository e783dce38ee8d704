// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "torsion6/gl2.hpp"
#include "torsion6/labels.hpp"
#include "torsion6/perm_group.hpp"

using torsion6::Gl2Subgroup;
using torsion6::identify_group;
using torsion6::is_generalized_s3_type;
using torsion6::is_supersolvable;
using torsion6::Perm;
using torsion6::SmallGroup;
namespace gl2 = torsion6::gl2;

namespace {

Perm cycle(std::size_t n, std::initializer_list<int> pts) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>(i);
  std::vector<int> v(pts);
  for (std::size_t i = 0; i < v.size(); ++i)
    p[v[i]] = static_cast<std::uint16_t>(v[(i + 1) % v.size()]);
  return p;
}

SmallGroup symmetric3() {
  return SmallGroup({cycle(3, {0, 1, 2}), cycle(3, {0, 1})});
}

SmallGroup cyclic(std::size_t n) {
  std::vector<int> pts(n);
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % n);
  return SmallGroup({p});
}

SmallGroup alternating4() {
  Perm a = cycle(4, {0, 1});
  Perm b = cycle(4, {2, 3});
  return SmallGroup({torsion6::perm_mul(a, b), cycle(4, {0, 1, 2})});
}

// direct product acting on the disjoint union of the two point sets
SmallGroup direct_product(const SmallGroup& g, const SmallGroup& h) {
  std::vector<Perm> gens;
  const std::size_t n = g.degree() + h.degree();
  for (const Perm& p : g.generators()) {
    Perm q(n);
    for (std::size_t i = 0; i < n; ++i)
      q[i] = i < g.degree() ? p[i] : static_cast<std::uint16_t>(i);
    gens.push_back(q);
  }
  for (const Perm& p : h.generators()) {
    Perm q(n);
    for (std::size_t i = 0; i < n; ++i)
      q[i] = i < g.degree()
                 ? static_cast<std::uint16_t>(i)
                 : static_cast<std::uint16_t>(g.degree() + p[i - g.degree()]);
    gens.push_back(q);
  }
  return SmallGroup(gens);
}

}  // namespace

TEST_CASE("small group basics", "[perm]") {
  SmallGroup s3 = symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.exponent() == 6);
  CHECK(s3.derived_length() == 2);
  CHECK(s3.is_solvable());
  std::map<std::size_t, std::size_t> want{{1, 1}, {2, 3}, {3, 2}};
  CHECK(s3.order_census() == want);
  CHECK(s3.derived_subgroup().order() == 3);

  SmallGroup c6 = cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.is_abelian());
  CHECK(c6.derived_length() == 1);
}

TEST_CASE("identification catalogue", "[perm]") {
  CHECK(identify_group(cyclic(1)) == "C1");
  CHECK(identify_group(cyclic(2)) == "C2");
  CHECK(identify_group(cyclic(4)) == "C4");
  CHECK(identify_group(cyclic(6)) == "C6");
  CHECK(identify_group(symmetric3()) == "S3");
  CHECK(identify_group(alternating4()) == "A4");
  CHECK(identify_group(direct_product(cyclic(2), cyclic(2))) == "C2xC2");
  CHECK(identify_group(direct_product(cyclic(2), cyclic(3))) == "C6");
  CHECK(identify_group(direct_product(symmetric3(), cyclic(2))) == "S3xC2");
  CHECK(identify_group(direct_product(symmetric3(), cyclic(3))) == "S3xC3");
  CHECK(identify_group(direct_product(cyclic(3), cyclic(6))) == "C3xC6");
  CHECK(identify_group(direct_product(symmetric3(), symmetric3())) == "S3xS3");
  CHECK(identify_group(direct_product(cyclic(6), cyclic(6))) == "C6xC6");
  // dihedral of order 8
  SmallGroup d4({cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
  CHECK(d4.order() == 8);
  CHECK(identify_group(d4) == "D4");
  // D9 = C9 x| C2
  Perm rot(9), flip(9);
  for (int i = 0; i < 9; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % 9);
    flip[i] = static_cast<std::uint16_t>((9 - i) % 9);
  }
  SmallGroup d9({rot, flip});
  CHECK(d9.order() == 18);
  CHECK(identify_group(d9) == "D9");
  // unknown types get a census fallback, never a wrong catalogue name
  SmallGroup s4({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CHECK(s4.order() == 24);
  CHECK(identify_group(s4).rfind("order24-census", 0) == 0);
}

TEST_CASE("quotients and normal subgroups", "[perm]") {
  SmallGroup s3 = symmetric3();
  auto normal3 = s3.normal_prime_order_subgroups(3);
  REQUIRE(normal3.size() == 1);
  CHECK(identify_group(s3.quotient(normal3.front())) == "C2");
  CHECK(s3.normal_prime_order_subgroups(2).empty());

  SmallGroup a4 = alternating4();
  CHECK(a4.normal_prime_order_subgroups(2).empty());
  CHECK(a4.normal_prime_order_subgroups(3).empty());

  SmallGroup c6 = cyclic(6);
  auto n2 = c6.normal_prime_order_subgroups(2);
  REQUIRE(n2.size() == 1);
  CHECK(identify_group(c6.quotient(n2.front())) == "C3");
}

TEST_CASE("sylow subgroups", "[perm]") {
  SmallGroup s3s3 = direct_product(symmetric3(), symmetric3());
  SmallGroup syl3 = s3s3.sylow_subgroup(3);
  CHECK(syl3.order() == 9);
  CHECK(syl3.is_abelian());
  SmallGroup syl2 = s3s3.sylow_subgroup(2);
  CHECK(syl2.order() == 4);
  SmallGroup s4({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CHECK(s4.sylow_subgroup(2).order() == 8);
  CHECK(s4.sylow_subgroup(3).order() == 3);
}

TEST_CASE("supersolvability", "[perm]") {
  CHECK(is_supersolvable(symmetric3()));
  CHECK(is_supersolvable(cyclic(12)));
  CHECK(is_supersolvable(direct_product(symmetric3(), cyclic(3))));
  CHECK_FALSE(is_supersolvable(alternating4()));
  SmallGroup s4({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CHECK_FALSE(is_supersolvable(s4));
}

TEST_CASE("generalized S3 type predicate", "[perm]") {
  // positives: groups that occur as Galois groups of the sextic closures
  CHECK(is_generalized_s3_type(cyclic(1)));
  CHECK(is_generalized_s3_type(cyclic(2)));
  CHECK(is_generalized_s3_type(cyclic(3)));
  CHECK(is_generalized_s3_type(cyclic(6)));
  CHECK(is_generalized_s3_type(symmetric3()));
  CHECK(is_generalized_s3_type(direct_product(cyclic(2), cyclic(2))));
  CHECK(is_generalized_s3_type(direct_product(cyclic(3), cyclic(3))));
  CHECK(is_generalized_s3_type(direct_product(symmetric3(), cyclic(2))));
  CHECK(is_generalized_s3_type(direct_product(symmetric3(), cyclic(3))));
  CHECK(is_generalized_s3_type(direct_product(symmetric3(), symmetric3())));
  CHECK(is_generalized_s3_type(direct_product(cyclic(6), cyclic(6))));
  // generalized dihedral over C3xC3: exponent 6, abelian Sylows,
  // supersolvable
  {
    Perm a(9), b(9), inv(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        a[3 * x + y] = static_cast<std::uint16_t>(3 * ((x + 1) % 3) + y);
        b[3 * x + y] = static_cast<std::uint16_t>(3 * x + (y + 1) % 3);
        inv[3 * x + y] =
            static_cast<std::uint16_t>(3 * ((3 - x) % 3) + (3 - y) % 3);
      }
    SmallGroup gd({a, b, inv});
    CHECK(gd.order() == 18);
    CHECK(identify_group(gd) == "C3xC3:C2");
    CHECK(is_generalized_s3_type(gd));
  }
  // negatives
  CHECK_FALSE(is_generalized_s3_type(cyclic(4)));   // exponent 4
  CHECK_FALSE(is_generalized_s3_type(cyclic(5)));   // exponent 5
  CHECK_FALSE(is_generalized_s3_type(alternating4()));  // not supersolvable
  SmallGroup d4({cycle(4, {0, 1, 2, 3}), cycle(4, {1, 3})});
  CHECK_FALSE(is_generalized_s3_type(d4));          // exponent 4
  SmallGroup s4({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
  CHECK_FALSE(is_generalized_s3_type(s4));          // exponent 12

  // closure under subgroup and quotient, spot-checked on S3xS3
  SmallGroup s3s3 = direct_product(symmetric3(), symmetric3());
  REQUIRE(is_generalized_s3_type(s3s3));
  CHECK(is_generalized_s3_type(s3s3.sylow_subgroup(2)));
  CHECK(is_generalized_s3_type(s3s3.sylow_subgroup(3)));
  CHECK(is_generalized_s3_type(s3s3.derived_subgroup()));  // C3xC3
  for (const SmallGroup& c : s3s3.normal_prime_order_subgroups(3))
    CHECK(is_generalized_s3_type(s3s3.quotient(c)));
}

TEST_CASE("closure quotient of mod-N actions", "[perm][gl2]") {
  const auto& reg = torsion6::label_registry();
  // 3B.1.1 acting on the orbit of (0,1): S3 (the 3-division field closure)
  CHECK(gl2::closure_quotient(reg.at("3B.1.1").group(), gl2::Vec2{0, 1}) ==
        "S3");
  // 3Cs.1.1 fixes (1,0): trivial closure
  CHECK(gl2::closure_quotient(reg.at("3Cs.1.1").group(), gl2::Vec2{1, 0}) ==
        "C1");
  // 2Cn acts as C3 on the nonzero vectors: cubic Galois 2-division field
  CHECK(gl2::closure_quotient(reg.at("2Cn").group(), gl2::Vec2{1, 0}) == "C3");
  // full GL2(F2) on the three nonzero vectors: S3
  CHECK(gl2::closure_quotient(reg.at("GL2(F2)").group(), gl2::Vec2{1, 0}) ==
        "S3");

  // order divides |G| and is >= orbit size
  Gl2Subgroup b11 = reg.at("3B.1.1").group();
  auto qg = gl2::orbit_action_group(b11, gl2::Vec2{0, 1});
  CHECK(b11.order() % qg.order() == 0);
  CHECK(qg.order() >= gl2::vector_orbit(b11, gl2::Vec2{0, 1}).size());
}
