// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// Dense arithmetic for subgroups of GL_2(Z/N) with small N (N <= 36 covers
// every modulus used by the toolkit: 2, 3, 4, 5, 7, 8, 9, 25).  Matrices are
// stored with entries reduced to [0, N); a matrix [[a, b], [c, d]] is packed
// into a 32-bit code a + N(b + N(c + N d)), which is injective for N <= 255.

struct Mat2 {
  std::uint32_t n = 0;  // modulus
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
  friend bool operator<(const Mat2& x, const Mat2& y) {
    return std::array<std::uint32_t, 5>{x.n, x.a, x.b, x.c, x.d} <
           std::array<std::uint32_t, 5>{y.n, y.a, y.b, y.c, y.d};
  }
};

namespace gl2 {

inline void require_modulus(std::uint32_t n) {
  if (n < 2 || n > 255) throw std::domain_error("gl2: modulus out of range");
}

inline Mat2 make(std::uint32_t n, long long a, long long b, long long c,
                 long long d) {
  require_modulus(n);
  auto red = [&](long long v) {
    long long r = v % static_cast<long long>(n);
    if (r < 0) r += n;
    return static_cast<std::uint32_t>(r);
  };
  return Mat2{n, red(a), red(b), red(c), red(d)};
}

inline Mat2 identity(std::uint32_t n) { return make(n, 1, 0, 0, 1); }

inline std::uint32_t code(const Mat2& m) {
  return m.a + m.n * (m.b + m.n * (m.c + m.n * m.d));
}

inline Mat2 from_code(std::uint32_t n, std::uint32_t code) {
  Mat2 m;
  m.n = n;
  m.a = code % n;
  code /= n;
  m.b = code % n;
  code /= n;
  m.c = code % n;
  m.d = code / n;
  return m;
}

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  if (x.n != y.n) throw std::domain_error("gl2: modulus mismatch");
  const std::uint64_t n = x.n;
  Mat2 r;
  r.n = x.n;
  r.a = static_cast<std::uint32_t>(
      (std::uint64_t{x.a} * y.a + std::uint64_t{x.b} * y.c) % n);
  r.b = static_cast<std::uint32_t>(
      (std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.d) % n);
  r.c = static_cast<std::uint32_t>(
      (std::uint64_t{x.c} * y.a + std::uint64_t{x.d} * y.c) % n);
  r.d = static_cast<std::uint32_t>(
      (std::uint64_t{x.c} * y.b + std::uint64_t{x.d} * y.d) % n);
  return r;
}

inline std::uint32_t det(const Mat2& m) {
  const std::uint64_t n = m.n;
  std::uint64_t ad = (std::uint64_t{m.a} * m.d) % n;
  std::uint64_t bc = (std::uint64_t{m.b} * m.c) % n;
  return static_cast<std::uint32_t>((ad + n - bc) % n);
}

inline std::uint32_t trace(const Mat2& m) { return (m.a + m.d) % m.n; }

inline std::optional<std::uint32_t> inverse_mod(std::uint32_t u,
                                                std::uint32_t n) {
  long long t = 0, new_t = 1, r = n, new_r = u % n;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += n;
  return static_cast<std::uint32_t>(t);
}

inline bool is_invertible(const Mat2& m) {
  return inverse_mod(det(m), m.n).has_value();
}

inline Mat2 inverse(const Mat2& m) {
  auto di = inverse_mod(det(m), m.n);
  if (!di) throw std::domain_error("gl2: matrix not invertible");
  const std::uint64_t n = m.n, u = *di;
  auto red = [&](std::uint64_t v) {
    return static_cast<std::uint32_t>((v % n) * u % n);
  };
  // adjugate * det^{-1}
  return Mat2{m.n, red(m.d), red(std::uint64_t{n} - m.b % n + n),
              red(std::uint64_t{n} - m.c % n + n), red(m.a)};
}

inline Mat2 pow(Mat2 base, std::uint64_t e) {
  Mat2 r = identity(base.n);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

inline std::uint32_t element_order(const Mat2& m) {
  if (!is_invertible(m)) throw std::domain_error("gl2: matrix not invertible");
  Mat2 p = m;
  const Mat2 id = identity(m.n);
  std::uint32_t k = 1;
  while (!(p == id)) {
    p = mul(p, m);
    ++k;
    if (k > 4000000) throw std::logic_error("gl2: order overflow");
  }
  return k;
}

}  // namespace gl2

// A finite subgroup of GL_2(Z/N), stored as the sorted vector of packed codes
// of all its elements together with the generators it was built from.
struct Gl2Subgroup {
  std::uint32_t modulus = 0;
  std::vector<Mat2> generators;
  std::vector<std::uint32_t> element_codes;  // sorted, unique

  std::size_t order() const { return element_codes.size(); }
  bool contains(const Mat2& m) const {
    return std::binary_search(element_codes.begin(), element_codes.end(),
                              gl2::code(m));
  }
  Mat2 element(std::size_t i) const {
    return gl2::from_code(modulus, element_codes[i]);
  }
  friend bool operator==(const Gl2Subgroup& x, const Gl2Subgroup& y) {
    return x.modulus == y.modulus && x.element_codes == y.element_codes;
  }
};

namespace gl2 {

// Closure of a generating set under multiplication (BFS on right
// multiplication by generators).  Throws if a generator is singular.
inline Gl2Subgroup group_closure(std::uint32_t n,
                                 const std::vector<Mat2>& gens,
                                 std::size_t order_cap = 0) {
  require_modulus(n);
  for (const Mat2& g : gens) {
    if (g.n != n) throw std::domain_error("gl2: modulus mismatch");
    if (!is_invertible(g)) throw std::domain_error("gl2: singular generator");
  }
  std::set<std::uint32_t> seen;
  std::vector<Mat2> frontier{identity(n)};
  seen.insert(code(frontier.front()));
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const Mat2& m : frontier) {
      for (const Mat2& g : gens) {
        Mat2 p = mul(m, g);
        if (seen.insert(code(p)).second) {
          next.push_back(p);
          if (order_cap && seen.size() > order_cap)
            throw std::domain_error("gl2: closure exceeds order cap");
        }
      }
    }
    frontier = std::move(next);
  }
  Gl2Subgroup h;
  h.modulus = n;
  h.generators = gens;
  h.element_codes.assign(seen.begin(), seen.end());
  return h;
}

// Full group GL_2(Z/N): SL_2(Z/N) is generated by the two elementary
// transvections for every N (SL_2(Z) -> SL_2(Z/N) is surjective), and the
// diagonal matrices diag(u, 1) complete the determinant surjection.
inline Gl2Subgroup full_group(std::uint32_t n) {
  require_modulus(n);
  std::vector<Mat2> gens{make(n, 1, 1, 0, 1), make(n, 1, 0, 1, 1)};
  for (std::uint32_t u = 2; u < n; ++u)
    if (inverse_mod(u, n)) gens.push_back(make(n, u, 0, 0, 1));
  return group_closure(n, gens);
}

inline std::size_t full_group_order(std::uint32_t n) {
  require_modulus(n);
  // |GL_2(Z/N)| = N^4 * prod_{p | N} (1 - 1/p)(1 - 1/p^2)
  auto fac = factorize(mpz_class(static_cast<unsigned long>(n)));
  mpz_class num = 1, den = 1;
  mpz_class n4;
  mpz_ui_pow_ui(n4.get_mpz_t(), n, 4);
  num = n4;
  for (const auto& [p, e] : fac) {
    num *= (p - 1) * (p * p - 1);
    den *= p * p * p;
  }
  mpz_class q = num / den;
  return static_cast<std::size_t>(q.get_ui());
}

inline std::set<std::uint32_t> det_image(const Gl2Subgroup& h) {
  std::set<std::uint32_t> dets;
  for (std::uint32_t c : h.element_codes)
    dets.insert(det(from_code(h.modulus, c)));
  return dets;
}

inline std::size_t unit_count(std::uint32_t n) {
  std::size_t k = 0;
  for (std::uint32_t u = 1; u < n; ++u)
    if (inverse_mod(u, n)) ++k;
  return k;
}

// det : H -> (Z/N)^* surjective.
inline bool det_surjective(const Gl2Subgroup& h) {
  return det_image(h).size() == unit_count(h.modulus);
}

namespace detail {

// All GL_2-conjugates of a given matrix, as a sorted code vector (BFS under
// conjugation by the generators of GL_2(Z/N)).
inline std::vector<std::uint32_t> conjugacy_class(const Mat2& m) {
  const std::uint32_t n = m.n;
  std::vector<Mat2> gens{make(n, 1, 1, 0, 1), make(n, 1, 0, 1, 1)};
  for (std::uint32_t u = 2; u < n; ++u)
    if (inverse_mod(u, n)) gens.push_back(make(n, u, 0, 0, 1));
  std::set<std::uint32_t> seen{code(m)};
  std::vector<Mat2> frontier{m};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const Mat2& x : frontier)
      for (const Mat2& g : gens) {
        Mat2 y = mul(mul(g, x), inverse(g));
        if (seen.insert(code(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// True iff some element of H is GL_2(Z/N)-conjugate to [1,0;0,-1] or
// [1,1;0,-1] (the two images of complex conjugation).  For odd N both
// candidates are conjugate and an element g lies in the class iff g^2 = 1 and
// det g = -1: such a g is a non-central involution, 2 is invertible, so
// (1+g)/2 is an idempotent splitting (Z/N)^2 into +1/-1 eigenspaces, each
// free of rank 1 because det g = -1 forces opposite eigenvalues on a basis.
// For N = 2 the first candidate is the identity, so the test is vacuous; for
// other even N we compare against the two explicit conjugacy classes.
inline bool contains_complex_conjugation(const Gl2Subgroup& h) {
  const std::uint32_t n = h.modulus;
  if (n % 2 == 1) {
    for (std::uint32_t c : h.element_codes) {
      Mat2 g = from_code(n, c);
      if (det(g) == n - 1 && mul(g, g) == identity(n)) return true;
    }
    return false;
  }
  if (n == 2) return true;  // [1,0;0,-1] = identity mod 2
  static std::map<std::uint32_t, std::vector<std::uint32_t>> cache1, cache2;
  auto& cls1 = cache1[n];
  auto& cls2 = cache2[n];
  if (cls1.empty()) cls1 = detail::conjugacy_class(make(n, 1, 0, 0, -1));
  if (cls2.empty()) cls2 = detail::conjugacy_class(make(n, 1, 1, 0, -1));
  for (std::uint32_t c : h.element_codes)
    if (std::binary_search(cls1.begin(), cls1.end(), c) ||
        std::binary_search(cls2.begin(), cls2.end(), c))
      return true;
  return false;
}

// ---- vectors ----

struct Vec2 {
  std::uint32_t x = 0, y = 0;
  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

inline Vec2 apply(const Mat2& m, const Vec2& v) {
  const std::uint64_t n = m.n;
  return Vec2{static_cast<std::uint32_t>(
                  (std::uint64_t{m.a} * v.x + std::uint64_t{m.b} * v.y) % n),
              static_cast<std::uint32_t>(
                  (std::uint64_t{m.c} * v.x + std::uint64_t{m.d} * v.y) % n)};
}

// Additive order of v in (Z/N)^2: N / gcd(N, x, y).
inline std::uint32_t vector_order(std::uint32_t n, const Vec2& v) {
  std::uint64_t g = std::gcd(std::uint64_t{n},
                             std::gcd(std::uint64_t{v.x}, std::uint64_t{v.y}));
  return static_cast<std::uint32_t>(n / g);
}

// Orbit of v under H, via BFS over the generators (falls back to the full
// element list when no generators are stored).
inline std::vector<Vec2> vector_orbit(const Gl2Subgroup& h, const Vec2& v) {
  std::set<Vec2> seen{Vec2{v.x % h.modulus, v.y % h.modulus}};
  if (!h.generators.empty()) {
    std::vector<Vec2> frontier{*seen.begin()};
    while (!frontier.empty()) {
      std::vector<Vec2> next;
      for (const Vec2& w : frontier)
        for (const Mat2& g : h.generators) {
          Vec2 u = apply(g, w);
          if (seen.insert(u).second) next.push_back(u);
        }
      frontier = std::move(next);
    }
  } else {
    for (std::uint32_t c : h.element_codes)
      seen.insert(apply(from_code(h.modulus, c), *seen.begin()));
  }
  return {seen.begin(), seen.end()};
}

inline std::size_t stabilizer_index(const Gl2Subgroup& h, const Vec2& v) {
  return vector_orbit(h, v).size();
}

// ---- reduction and preimage ----

// Image of H under the reduction GL_2(Z/N) -> GL_2(Z/M) for M | N.
inline Gl2Subgroup reduction(const Gl2Subgroup& h, std::uint32_t m) {
  require_modulus(m);
  if (h.modulus % m != 0)
    throw std::domain_error("gl2: reduction modulus must divide");
  std::set<std::uint32_t> codes;
  for (std::uint32_t c : h.element_codes) {
    Mat2 x = from_code(h.modulus, c);
    codes.insert(code(Mat2{m, x.a % m, x.b % m, x.c % m, x.d % m}));
  }
  Gl2Subgroup r;
  r.modulus = m;
  for (const Mat2& g : h.generators)
    r.generators.push_back(Mat2{m, g.a % m, g.b % m, g.c % m, g.d % m});
  r.element_codes.assign(codes.begin(), codes.end());
  return r;
}

// Full preimage of H <= GL_2(Z/M) under GL_2(Z/N) -> GL_2(Z/M), for M | N
// with the same prime support (then a lift of an invertible matrix is
// automatically invertible).  For M = 1 the preimage is all of GL_2(Z/N).
inline Gl2Subgroup preimage_full(const Gl2Subgroup& h, std::uint32_t n) {
  require_modulus(n);
  const std::uint32_t m = h.modulus;
  if (n % m != 0) throw std::domain_error("gl2: preimage modulus");
  {
    auto fn = factorize(mpz_class(static_cast<unsigned long>(n)));
    for (const auto& [p, e] : fn)
      if (m % static_cast<unsigned long>(p.get_ui()) != 0)
        throw std::domain_error(
            "gl2: preimage requires equal prime support");
  }
  const std::uint32_t q = n / m;
  std::set<std::uint32_t> codes;
  for (std::uint32_t c : h.element_codes) {
    Mat2 x = from_code(m, c);
    for (std::uint32_t da = 0; da < q; ++da)
      for (std::uint32_t db = 0; db < q; ++db)
        for (std::uint32_t dc = 0; dc < q; ++dc)
          for (std::uint32_t dd = 0; dd < q; ++dd)
            codes.insert(code(Mat2{n, x.a + m * da, x.b + m * db,
                                   x.c + m * dc, x.d + m * dd}));
  }
  Gl2Subgroup r;
  r.modulus = n;
  // generators: lifts of the original generators plus the kernel generators
  // I + m*E_ij (all invertible thanks to the equal-support requirement);
  // extend greedily until they provably generate the whole preimage.
  for (const Mat2& g : h.generators)
    r.generators.push_back(Mat2{n, g.a, g.b, g.c, g.d});
  for (std::uint32_t i = 0; i < 4; ++i) {
    Mat2 k = identity(n);
    (i == 0 ? k.a : i == 1 ? k.b : i == 2 ? k.c : k.d) += m;
    k.a %= n, k.b %= n, k.c %= n, k.d %= n;
    r.generators.push_back(k);
  }
  r.element_codes.assign(codes.begin(), codes.end());
  for (;;) {
    Gl2Subgroup probe = group_closure(n, r.generators);
    if (probe.element_codes == r.element_codes) break;
    if (probe.order() > r.order())
      throw std::logic_error("gl2: preimage closure overflow");
    for (std::uint32_t c : r.element_codes)
      if (!probe.contains(from_code(n, c))) {
        r.generators.push_back(from_code(n, c));
        break;
      }
  }
  return r;
}

// ---- standard shapes ----

enum class StandardShape { kBorel, kSplitCartan, kNonsplitCartan };

namespace detail {

// Common eigenvectors of all generators: v with g v parallel to v for all g.
// For prime-power N an invariant line is spanned by a primitive vector, so
// scanning primitive v suffices.
inline std::optional<Vec2> common_eigenvector(const Gl2Subgroup& h) {
  const std::uint32_t n = h.modulus;
  std::vector<Mat2> gens = h.generators;
  if (gens.empty())
    for (std::uint32_t c : h.element_codes) gens.push_back(from_code(n, c));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      Vec2 v{x, y};
      if (std::gcd(std::gcd(x, y), n) != 1) continue;  // primitive only
      bool ok = true;
      for (const Mat2& g : gens) {
        Vec2 w = apply(g, v);
        // w parallel to v  <=>  cross product w.x*v.y - w.y*v.x = 0 (mod n)
        std::uint64_t cr = (std::uint64_t{w.x} * v.y) % n;
        std::uint64_t cl = (std::uint64_t{w.y} * v.x) % n;
        if (cr != cl) {
          ok = false;
          break;
        }
      }
      if (ok) return v;
    }
  return std::nullopt;
}

inline bool is_prime_power(std::uint32_t n) {
  auto f = factorize(mpz_class(static_cast<unsigned long>(n)));
  return f.size() == 1;
}

}  // namespace detail

// If H is conjugate to a subgroup of the standard Borel (upper triangular),
// split Cartan (diagonal), or nonsplit Cartan, produce a conjugating matrix
// T with T H T^{-1} inside the standard shape.  Complete for prime-power
// moduli (Borel/split) and prime moduli (nonsplit), which covers every use
// in the toolkit; other inputs throw.
inline std::optional<Mat2> conjugate_into(const Gl2Subgroup& h,
                                          StandardShape shape) {
  const std::uint32_t n = h.modulus;
  if (!detail::is_prime_power(n))
    throw std::domain_error("gl2: conjugate_into needs a prime-power modulus");
  if (shape == StandardShape::kBorel || shape == StandardShape::kSplitCartan) {
    auto v = detail::common_eigenvector(h);
    if (!v) return std::nullopt;
    // complete v to a basis [v w]; then [v w]^{-1} H [v w] maps e1 to a
    // multiple of e1, i.e. is upper triangular.
    for (std::uint32_t wx = 0; wx < n; ++wx)
      for (std::uint32_t wy = 0; wy < n; ++wy) {
        Mat2 basis = make(n, v->x, wx, v->y, wy);
        if (!is_invertible(basis)) continue;
        Mat2 t = inverse(basis);
        if (shape == StandardShape::kBorel) return t;
        // split Cartan: also need the second basis vector to be a common
        // eigenvector.
        bool ok = true;
        for (std::uint32_t c : h.element_codes) {
          Mat2 g = mul(mul(t, from_code(n, c)), basis);
          if (g.b != 0 || g.c != 0) {
            ok = false;
            break;
          }
        }
        if (ok) return t;
      }
    return std::nullopt;
  }
  // nonsplit Cartan, prime modulus only, located by brute transporter
  // search.  For odd p the standard model is {[x, e*y; y, x]} with e a fixed
  // non-residue; for p = 2 it is the multiplication action of F_4 on itself,
  // {[x, y; y, x+y]}.
  if (!is_prime_u64(n))
    throw std::domain_error("gl2: nonsplit Cartan needs a prime modulus");
  std::uint32_t eps = 0;
  for (std::uint32_t e = 2; e < n && !eps; ++e) {
    bool residue = false;
    for (std::uint32_t x = 1; x < n && !residue; ++x)
      if ((std::uint64_t{x} * x) % n == e) residue = true;
    if (!residue) eps = e;
  }
  auto in_nonsplit = [&](const Mat2& g) {
    if (n == 2) return g.b == g.c && g.d == (g.a + g.b) % 2;
    return g.a == g.d && g.b == (std::uint64_t{eps} * g.c) % n;
  };
  for (std::uint32_t tc = 0; tc < n * n * n * n; ++tc) {
    Mat2 t = from_code(n, tc);
    if (!is_invertible(t)) continue;
    Mat2 ti = inverse(t);
    bool ok = true;
    for (std::uint32_t c : h.element_codes)
      if (!in_nonsplit(mul(mul(t, from_code(n, c)), ti))) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

inline Gl2Subgroup conjugate_subgroup(const Gl2Subgroup& h, const Mat2& t) {
  Mat2 ti = inverse(t);
  std::set<std::uint32_t> codes;
  for (std::uint32_t c : h.element_codes)
    codes.insert(code(mul(mul(t, from_code(h.modulus, c)), ti)));
  Gl2Subgroup r;
  r.modulus = h.modulus;
  for (const Mat2& g : h.generators)
    r.generators.push_back(mul(mul(t, g), ti));
  r.element_codes.assign(codes.begin(), codes.end());
  return r;
}

// ---- JSON ----

inline json mat_to_json(const Mat2& m) {
  return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

inline Mat2 mat_from_json(std::uint32_t n, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::domain_error("gl2: bad matrix JSON");
  return make(n, j[0][0].get<long long>(), j[0][1].get<long long>(),
              j[1][0].get<long long>(), j[1][1].get<long long>());
}

inline json group_to_json(const Gl2Subgroup& h) {
  json gens = json::array();
  for (const Mat2& g : h.generators) gens.push_back(mat_to_json(g));
  return json{{"modulus", h.modulus},
              {"generators", gens},
              {"order", h.order()}};
}

inline Gl2Subgroup group_from_json(const json& j) {
  std::uint32_t n = j.at("modulus").get<std::uint32_t>();
  std::vector<Mat2> gens;
  for (const json& g : j.at("generators")) gens.push_back(mat_from_json(n, g));
  Gl2Subgroup h = group_closure(n, gens);
  if (j.contains("order") && j["order"].get<std::size_t>() != h.order())
    throw std::domain_error("gl2: order mismatch in JSON");
  return h;
}

}  // namespace gl2
}  // namespace torsion6
