// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "torsion6/gl2.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {
namespace gl2 {

inline constexpr std::size_t kDefaultCeiling = 50000;

struct SubgroupFilter {
  std::optional<std::size_t> exact_order;
  std::size_t max_order = 0;  // 0 = no cap on the lattice walk
  bool det_surjective_only = false;
};

namespace detail {

inline std::uint64_t hash_codes(const std::vector<std::uint32_t>& codes) {
  return fnv1a(codes.data(), codes.size() * sizeof(std::uint32_t));
}

inline std::vector<Mat2> ambient_generators(const Gl2Subgroup& ambient) {
  if (!ambient.generators.empty()) return ambient.generators;
  std::vector<Mat2> gens;
  for (std::uint32_t c : ambient.element_codes)
    gens.push_back(from_code(ambient.modulus, c));
  return gens;
}

// gSg^{-1} as a sorted code vector.
inline std::vector<std::uint32_t> conjugate_codes(
    std::uint32_t n, const std::vector<std::uint32_t>& codes, const Mat2& g) {
  Mat2 gi = inverse(g);
  std::vector<std::uint32_t> out;
  out.reserve(codes.size());
  for (std::uint32_t c : codes) out.push_back(code(mul(mul(g, from_code(n, c)), gi)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Every subgroup of `ambient` up to ambient-conjugacy, by the cyclic
// extension method: each class of order k produces the classes of order p*k
// that contain it as a normal subgroup of prime index, seeded from the
// trivial group.  This reaches a subgroup T iff T has a chief chain
// 1 = T_0 ◁ T_1 ◁ ... ◁ T_r = T with prime indices, i.e. iff T is solvable;
// so completeness requires every subgroup in range to be solvable.  That is
// guaranteed when the ambient order has at most two prime divisors
// (Burnside) or when the walk is capped at order < 60 (the smallest
// non-solvable group is A_5).  Other inputs are rejected rather than
// silently incomplete.
inline std::vector<Gl2Subgroup> subgroups_up_to_conjugacy(
    const Gl2Subgroup& ambient, const SubgroupFilter& filter = {},
    std::size_t ceiling = kDefaultCeiling) {
  const std::uint32_t n = ambient.modulus;
  if (ambient.order() > ceiling)
    throw std::domain_error("subgroups_up_to_conjugacy: ambient exceeds ceiling");
  std::size_t walk_cap = filter.max_order ? filter.max_order : ambient.order();
  if (filter.exact_order)
    walk_cap = std::min(walk_cap, *filter.exact_order);
  {
    auto fac = factorize(mpz_class(static_cast<unsigned long>(ambient.order())));
    if (fac.size() > 2 && walk_cap >= 60)
      throw std::domain_error(
          "subgroups_up_to_conjugacy: enumeration is only complete for "
          "solvable subgroups (ambient order with <= 2 prime divisors, or "
          "max_order < 60)");
  }
  const std::vector<Mat2> amb_gens = detail::ambient_generators(ambient);

  struct ClassRec {
    std::vector<std::uint32_t> codes;  // sorted element codes of the rep
    std::vector<Mat2> gens;            // small generating set of the rep
  };
  std::vector<ClassRec> classes;
  // hash of each known conjugate subgroup -> (class index, transporter code
  // g with g * rep * g^{-1} = that conjugate); collisions resolved by an
  // exact conjugation check.
  std::map<std::uint64_t, std::vector<std::pair<std::size_t, std::uint32_t>>>
      seen;

  auto contains_code = [](const std::vector<std::uint32_t>& codes,
                          std::uint32_t c) {
    return std::binary_search(codes.begin(), codes.end(), c);
  };

  // Register a class and its full conjugation orbit; returns false if the
  // subgroup is conjugate to an already-known class.
  auto register_class = [&](std::vector<std::uint32_t> codes,
                            std::vector<Mat2> gens) {
    std::uint64_t h0 = detail::hash_codes(codes);
    if (auto it = seen.find(h0); it != seen.end()) {
      for (const auto& [ci, gcode] : it->second) {
        const ClassRec& rec = classes[ci];
        if (rec.codes.size() != codes.size()) continue;
        if (detail::conjugate_codes(n, rec.codes, from_code(n, gcode)) ==
            codes)
          return false;
      }
    }
    // new class: walk its conjugation orbit, registering hashes with the
    // transporter that produces each conjugate from the representative.
    std::size_t idx = classes.size();
    std::map<std::vector<std::uint32_t>, Mat2> orbit;
    orbit.emplace(codes, identity(n));
    std::vector<const std::vector<std::uint32_t>*> frontier{&orbit.begin()->first};
    seen[h0].emplace_back(idx, code(identity(n)));
    while (!frontier.empty()) {
      std::vector<const std::vector<std::uint32_t>*> next;
      for (const auto* s : frontier) {
        Mat2 t_of_s = orbit.at(*s);
        for (const Mat2& g : amb_gens) {
          auto t = detail::conjugate_codes(n, *s, g);
          Mat2 gt = mul(g, t_of_s);
          auto [pos, inserted] = orbit.emplace(std::move(t), gt);
          if (inserted) {
            seen[detail::hash_codes(pos->first)].emplace_back(idx,
                                                              code(gt));
            next.push_back(&pos->first);
          }
        }
      }
      frontier = std::move(next);
    }
    classes.push_back(ClassRec{std::move(codes), std::move(gens)});
    return true;
  };

  register_class({code(identity(n))}, {});

  // primes that can divide a subgroup order
  std::vector<std::size_t> primes;
  {
    auto fac = factorize(mpz_class(static_cast<unsigned long>(ambient.order())));
    for (const auto& [p, e] : fac) primes.push_back(p.get_ui());
  }

  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    // copy, since `classes` grows during the loop
    const std::vector<std::uint32_t> s_codes = classes[ci].codes;
    const std::vector<Mat2> s_gens = classes[ci].gens;
    // normalizer scan
    std::vector<Mat2> normalizer;
    for (std::uint32_t c : ambient.element_codes) {
      Mat2 g = from_code(n, c);
      Mat2 gi = inverse(g);
      bool ok = true;
      if (s_gens.empty()) {
        ok = true;  // trivial subgroup
      } else {
        for (const Mat2& s : s_gens)
          if (!contains_code(s_codes, code(mul(mul(g, s), gi)))) {
            ok = false;
            break;
          }
      }
      if (ok) normalizer.push_back(g);
    }
    for (std::size_t p : primes) {
      if (s_codes.size() * p > walk_cap) continue;
      std::set<std::uint32_t> tried_cosets;
      for (const Mat2& x : normalizer) {
        if (contains_code(s_codes, code(x))) continue;
        // coset id: minimal code in x*S
        std::uint32_t coset_id = 0xFFFFFFFFu;
        for (std::uint32_t c : s_codes)
          coset_id = std::min(coset_id, code(mul(x, from_code(n, c))));
        if (!tried_cosets.insert(coset_id).second) continue;
        Mat2 xp = pow(x, p);
        if (!contains_code(s_codes, code(xp))) continue;
        // T = S ∪ Sx ∪ ... ∪ Sx^{p-1}, order p|S| since xS has order p in
        // N(S)/S.
        std::set<std::uint32_t> t_codes(s_codes.begin(), s_codes.end());
        Mat2 xi = identity(n);
        for (std::size_t i = 1; i < p; ++i) {
          xi = mul(xi, x);
          for (std::uint32_t c : s_codes)
            t_codes.insert(code(mul(from_code(n, c), xi)));
        }
        if (t_codes.size() != s_codes.size() * p)
          throw std::logic_error("subgroups_up_to_conjugacy: extension size");
        std::vector<Mat2> t_gens = s_gens;
        t_gens.push_back(x);
        register_class({t_codes.begin(), t_codes.end()}, std::move(t_gens));
      }
    }
  }

  std::vector<Gl2Subgroup> out;
  for (const ClassRec& rec : classes) {
    Gl2Subgroup h;
    h.modulus = n;
    h.generators = rec.gens;
    if (h.generators.empty()) h.generators.push_back(identity(n));
    h.element_codes = rec.codes;
    if (filter.exact_order && h.order() != *filter.exact_order) continue;
    if (filter.max_order && h.order() > filter.max_order) continue;
    if (filter.det_surjective_only && !det_surjective(h)) continue;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const Gl2Subgroup& a, const Gl2Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.element_codes < b.element_codes;
            });
  return out;
}

// Brute-force transporter search: g in `ambient` with g A g^{-1} = B.
inline std::optional<Mat2> conjugating_element(const Gl2Subgroup& ambient,
                                               const Gl2Subgroup& a,
                                               const Gl2Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::uint32_t n = ambient.modulus;
  std::vector<Mat2> a_gens = a.generators.empty()
                                 ? detail::ambient_generators(a)
                                 : a.generators;
  for (std::uint32_t c : ambient.element_codes) {
    Mat2 g = from_code(n, c);
    Mat2 gi = inverse(g);
    bool ok = true;
    for (const Mat2& s : a_gens)
      if (!b.contains(mul(mul(g, s), gi))) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

// The standard Borel subgroup (upper triangular matrices) of GL_2(Z/N).
inline Gl2Subgroup borel_group(std::uint32_t n) {
  std::vector<Mat2> gens{make(n, 1, 1, 0, 1)};
  for (std::uint32_t u = 2; u < n; ++u)
    if (inverse_mod(u, n)) {
      gens.push_back(make(n, u, 0, 0, 1));
      gens.push_back(make(n, 1, 0, 0, u));
    }
  return group_closure(n, gens);
}

// ---------------------------------------------------------------------------
// Subgroups of GL_2(Z/p^2) with prescribed reduction mod p.
//
// Let P be the full preimage of H <= GL_2(F_p) and K = ker(GL_2(Z/p^2) ->
// GL_2(F_p)) = { I + pM }, an elementary abelian group isomorphic to the
// H-module M_2(F_p) under conjugation (the kernel acts trivially on itself).
// Every subgroup G <= P with reduction exactly H is classified by
//   * U = G ∩ K, an H-stable subspace of M_2(F_p), and
//   * a complement of K/U in P/U mapping onto H, i.e. a section H -> P/U,
// and sections are pinned down by their values on generators of H subject to
// one linear condition per Cayley relator.  Distinct U give non-conjugate G
// (U is recovered from G as G ∩ K, and conjugation fixes every H-stable
// subspace setwise); for fixed U, sections differing by a coboundary give
// K-conjugate groups, so enumerating solutions modulo the coboundary space
// lists every G up to K-conjugacy.  This is complete: no subgroup of P with
// reduction exactly H is missed.
// ---------------------------------------------------------------------------

namespace modsq {

using Vec4 = std::array<unsigned, 4>;  // (m11, m12, m21, m22) over F_p

struct Subspace {
  unsigned p = 0;
  std::vector<Vec4> basis;             // RREF rows
  std::vector<std::uint32_t> element_codes;  // sorted packed elements
  int dim() const { return static_cast<int>(basis.size()); }
};

inline std::uint32_t pack(unsigned p, const Vec4& v) {
  return v[0] + p * (v[1] + p * (v[2] + p * v[3]));
}

inline Vec4 add(unsigned p, const Vec4& a, const Vec4& b) {
  return Vec4{(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p,
              (a[3] + b[3]) % p};
}

inline Vec4 scale(unsigned p, unsigned c, const Vec4& a) {
  return Vec4{c * a[0] % p, c * a[1] % p, c * a[2] % p, c * a[3] % p};
}

// All subspaces of F_p^4 via reduced row echelon forms (each subspace has
// exactly one RREF basis, so the enumeration is complete and duplicate-free).
inline std::vector<Subspace> all_subspaces(unsigned p) {
  std::vector<Subspace> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> pivots;
    for (int j = 0; j < 4; ++j)
      if (mask & (1u << j)) pivots.push_back(j);
    const int d = static_cast<int>(pivots.size());
    // free positions: row i, column j with j > pivots[i] and j not a pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < d; ++i)
      for (int j = pivots[i] + 1; j < 4; ++j)
        if (!(mask & (1u << j))) free_pos.emplace_back(i, j);
    std::vector<unsigned> vals(free_pos.size(), 0);
    for (;;) {
      Subspace s;
      s.p = p;
      s.basis.assign(d, Vec4{0, 0, 0, 0});
      for (int i = 0; i < d; ++i) s.basis[i][pivots[i]] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        s.basis[free_pos[t].first][free_pos[t].second] = vals[t];
      // element set
      std::set<std::uint32_t> codes;
      std::vector<unsigned> coeff(d, 0);
      for (;;) {
        Vec4 v{0, 0, 0, 0};
        for (int i = 0; i < d; ++i) v = add(p, v, scale(p, coeff[i], s.basis[i]));
        codes.insert(pack(p, v));
        int k = 0;
        while (k < d && ++coeff[k] == p) coeff[k++] = 0;
        if (k == d) break;
      }
      s.element_codes.assign(codes.begin(), codes.end());
      out.push_back(std::move(s));
      std::size_t t = 0;
      while (t < vals.size() && ++vals[t] == p) vals[t++] = 0;
      if (t == vals.size()) break;
    }
  }
  return out;
}

inline bool subspace_contains(const Subspace& s, const Vec4& v) {
  return std::binary_search(s.element_codes.begin(), s.element_codes.end(),
                            pack(s.p, v));
}

// 4x4 matrix over F_p of the map M -> g M g^{-1} on M_2(F_p).
inline std::array<Vec4, 4> adjoint_matrix(const Mat2& g) {
  const unsigned p = g.n;
  Mat2 gi = inverse(g);
  std::array<Vec4, 4> cols{};
  for (int t = 0; t < 4; ++t) {
    Mat2 e = make(p, t == 0, t == 1, t == 2, t == 3);
    Mat2 r = mul(mul(g, e), gi);
    cols[t] = Vec4{r.a, r.b, r.c, r.d};
  }
  return cols;  // cols[t] = image of basis matrix E_t
}

inline Vec4 adjoint_apply(unsigned p, const std::array<Vec4, 4>& m,
                          const Vec4& v) {
  Vec4 r{0, 0, 0, 0};
  for (int t = 0; t < 4; ++t) r = add(p, r, scale(p, v[t], m[t]));
  return r;
}

// Dense linear solver over F_p: rows of `a` (width w) against rhs `b`.
// Returns false if inconsistent; otherwise fills a particular solution and a
// basis of the homogeneous solution space.
inline bool solve_fp(unsigned p, std::vector<std::vector<unsigned>> a,
                     std::vector<unsigned> b, std::size_t w,
                     std::vector<unsigned>* particular,
                     std::vector<std::vector<unsigned>>* nullspace) {
  const std::size_t rows = a.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    unsigned inv = *inverse_mod(a[r][c], p);
    for (std::size_t j = 0; j < w; ++j) a[r][j] = a[r][j] * inv % p;
    b[r] = b[r] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      unsigned f = a[i][c];
      for (std::size_t j = 0; j < w; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
      b[i] = (b[i] + (p - f) * b[r]) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  particular->assign(w, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    (*particular)[pivot_col[i]] = b[i];
  nullspace->clear();
  std::vector<bool> is_pivot(w, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < w; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<unsigned> v(w, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = (p - a[i][fc]) % p;
    nullspace->push_back(std::move(v));
  }
  return true;
}

}  // namespace modsq

// All subgroups G of GL_2(Z/p^2) whose reduction mod p is exactly H,
// enumerated via the kernel-module/section method above.  The returned list
// contains one representative per K-conjugacy class (K = reduction kernel);
// it therefore covers every such G up to conjugacy, possibly with conjugate
// repetitions, which is harmless for conjugation-invariant downstream
// statistics.  `det_surjective_only` keeps only G with surjective
// determinant mod p^2.
inline std::vector<Gl2Subgroup> subgroups_with_reduction(
    const Gl2Subgroup& h, bool det_surjective_only) {
  const unsigned p = h.modulus;
  if (!is_prime_u64(p))
    throw std::domain_error("subgroups_with_reduction: prime modulus required");
  const std::uint32_t n = p * p;
  using modsq::Vec4;

  // small generating set of H (greedy)
  std::vector<Mat2> hgens;
  {
    Gl2Subgroup cur;
    std::set<std::uint32_t> have{code(identity(p))};
    while (have.size() < h.order()) {
      for (std::uint32_t c : h.element_codes)
        if (!have.count(c)) {
          hgens.push_back(from_code(p, c));
          Gl2Subgroup probe = group_closure(p, hgens);
          have = std::set<std::uint32_t>(probe.element_codes.begin(),
                                         probe.element_codes.end());
          break;
        }
    }
  }
  const std::size_t r = hgens.size();

  // Cayley BFS over H: word(h) as positive generator indices
  std::map<std::uint32_t, std::vector<int>> word;
  {
    std::vector<Mat2> frontier{identity(p)};
    word[code(identity(p))] = {};
    while (!frontier.empty()) {
      std::vector<Mat2> next;
      for (const Mat2& m : frontier)
        for (std::size_t i = 0; i < r; ++i) {
          Mat2 q = mul(m, hgens[i]);
          if (!word.count(code(q))) {
            auto w = word[code(m)];
            w.push_back(static_cast<int>(i));
            word[code(q)] = std::move(w);
            next.push_back(q);
          }
        }
      frontier = std::move(next);
    }
  }
  // relators as words in the generators and their inverses:
  //   word(h) · g_i · word(h g_i)^{-1}
  // over all non-tree Cayley edges (h, i).  These normally generate every
  // relation of H (spanning-tree presentation), so a generator assignment
  // extends to a homomorphic section iff all of them lift to the kernel.
  using Letter = std::pair<int, int>;  // (generator index, exponent ±1)
  std::vector<std::vector<Letter>> relators;
  for (const auto& [hc, w] : word)
    for (std::size_t i = 0; i < r; ++i) {
      Mat2 hm = from_code(p, hc);
      Mat2 q = mul(hm, hgens[i]);
      const auto& wq = word.at(code(q));
      if (wq.size() == w.size() + 1) {
        bool tree = std::equal(w.begin(), w.end(), wq.begin()) &&
                    wq.back() == static_cast<int>(i);
        if (tree) continue;  // freely trivial relator
      }
      std::vector<Letter> rel;
      for (int gi : w) rel.emplace_back(gi, 1);
      rel.emplace_back(static_cast<int>(i), 1);
      for (auto it = wq.rbegin(); it != wq.rend(); ++it)
        rel.emplace_back(*it, -1);
      relators.push_back(std::move(rel));
    }

  // base lifts of the generators
  std::vector<Mat2> lifts;
  for (const Mat2& g : hgens) lifts.push_back(Mat2{n, g.a, g.b, g.c, g.d});

  // adjoint matrices of all H elements (for suffix coefficients)
  std::map<std::uint32_t, std::array<Vec4, 4>> adj;
  for (std::uint32_t c : h.element_codes)
    adj[c] = modsq::adjoint_matrix(from_code(p, c));

  std::vector<Gl2Subgroup> out;
  std::set<std::vector<std::uint32_t>> seen_sets;

  for (const modsq::Subspace& u : modsq::all_subspaces(p)) {
    // H-stability of U
    bool stable = true;
    for (const Mat2& g : hgens) {
      auto m = adj.at(code(g));
      for (const Vec4& v : u.basis)
        if (!modsq::subspace_contains(u, modsq::adjoint_apply(p, m, v))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (!stable) continue;

    // complement basis of W = F_p^4 / U: standard vectors at non-pivot
    // coordinates; projection = reduce by RREF rows, read off non-pivots.
    std::vector<int> pivots;
    for (const Vec4& row : u.basis)
      for (int j = 0; j < 4; ++j)
        if (row[j] != 0) {
          pivots.push_back(j);
          break;
        }
    std::vector<int> nonpivots;
    for (int j = 0; j < 4; ++j)
      if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
        nonpivots.push_back(j);
    const std::size_t m_dim = nonpivots.size();
    auto project = [&](Vec4 v) {
      for (std::size_t i = 0; i < u.basis.size(); ++i) {
        unsigned f = v[pivots[i]];
        if (f) v = modsq::add(p, v, modsq::scale(p, p - f, u.basis[i]));
      }
      std::vector<unsigned> w(m_dim);
      for (std::size_t t = 0; t < m_dim; ++t) w[t] = v[nonpivots[t]];
      return w;
    };
    auto lift_w = [&](const std::vector<unsigned>& w) {
      Vec4 v{0, 0, 0, 0};
      for (std::size_t t = 0; t < m_dim; ++t) v[nonpivots[t]] = w[t];
      return v;
    };

    // Linear system over F_p in the r*m_dim unknowns.  Writing the section
    // value as s(g) = ĝ·(I + p·k_g), an inverse letter contributes
    // s(g)^{-1} = ĝ^{-1}·(I - p·Ad(g)k_g); pushing every kernel factor to
    // the right past the remaining base letters conjugates it by the
    // inverse of the letter suffix.
    std::vector<std::vector<unsigned>> rows;
    std::vector<unsigned> rhs;
    for (const auto& rel : relators) {
      Mat2 prod = identity(n);
      for (const auto& [gi, e] : rel)
        prod = mul(prod, e == 1 ? lifts[gi] : inverse(lifts[gi]));
      if (prod.a % p != 1 || prod.b % p != 0 || prod.c % p != 0 ||
          prod.d % p != 1)
        throw std::logic_error("subgroups_with_reduction: relator not trivial");
      // prod = I + p*w0
      Vec4 w0{(prod.a - 1) / p, prod.b / p, prod.c / p, (prod.d - 1) / p};
      auto w0p = project(w0);
      std::vector<std::vector<unsigned>> block(
          m_dim, std::vector<unsigned>(r * m_dim, 0));
      // suffix s_j = product of the letters after position j, in H
      Mat2 suffix = identity(p);
      std::vector<Mat2> suffixes(rel.size());
      for (std::size_t j = rel.size(); j-- > 0;) {
        suffixes[j] = suffix;
        const auto& [gi, e] = rel[j];
        suffix = mul(e == 1 ? hgens[gi] : inverse(hgens[gi]), suffix);
      }
      for (std::size_t j = 0; j < rel.size(); ++j) {
        const auto& [gi, e] = rel[j];
        // coefficient of k_{gi}: ±Ad(s_j^{-1} g^{(1-e)/2}) — i.e.
        // Ad(s_j^{-1}) for +1 letters, -Ad(s_j^{-1} g) for -1 letters.
        Mat2 conj = inverse(suffixes[j]);
        if (e == -1) conj = mul(conj, hgens[gi]);
        auto ad = adj.at(code(conj));
        for (std::size_t t = 0; t < m_dim; ++t) {
          std::vector<unsigned> ebas(m_dim, 0);
          ebas[t] = 1;
          auto img = project(modsq::adjoint_apply(p, ad, lift_w(ebas)));
          for (std::size_t row_i = 0; row_i < m_dim; ++row_i) {
            auto& cell = block[row_i][gi * m_dim + t];
            unsigned add = e == 1 ? img[row_i] : (p - img[row_i]) % p;
            cell = (cell + add) % p;
          }
        }
      }
      for (std::size_t row_i = 0; row_i < m_dim; ++row_i) {
        rows.push_back(block[row_i]);
        rhs.push_back((p - w0p[row_i]) % p);
      }
    }

    std::vector<unsigned> particular;
    std::vector<std::vector<unsigned>> nullspace;
    if (m_dim > 0) {
      if (!modsq::solve_fp(p, rows, rhs, r * m_dim, &particular, &nullspace))
        continue;  // no section for this U
    } else {
      particular.assign(0, 0);
    }

    // coboundary space: for each basis vector of W, the section shift
    // ( Ad(g_i^{-1}) k - k )_i
    std::vector<std::vector<unsigned>> cob;
    for (std::size_t t = 0; t < m_dim; ++t) {
      std::vector<unsigned> e(m_dim, 0);
      e[t] = 1;
      std::vector<unsigned> v(r * m_dim, 0);
      for (std::size_t i = 0; i < r; ++i) {
        auto ad = adj.at(code(inverse(hgens[i])));
        auto img = project(modsq::adjoint_apply(p, ad, lift_w(e)));
        for (std::size_t row_i = 0; row_i < m_dim; ++row_i)
          v[i * m_dim + row_i] =
              (img[row_i] + p - e[row_i] % p + p) % p;
      }
      cob.push_back(std::move(v));
    }
    // coboundaries come from conjugating a section by a kernel element, so
    // they must solve the homogeneous system; anything else means the
    // relator bookkeeping above is wrong.
    for (const auto& v : cob)
      for (const auto& row : rows) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
          acc = (acc + row[j] * v[j]) % p;
        if (acc != 0)
          throw std::logic_error(
              "subgroups_with_reduction: coboundary not in nullspace");
      }
    // solution representatives modulo the coboundary space: echelonize cob
    // inside the nullspace and enumerate a complement.
    const std::size_t w_cols = r * m_dim;
    auto reduce_against = [&](std::vector<std::vector<unsigned>>& basis,
                              std::vector<unsigned> v) {
      for (const auto& b : basis) {
        std::size_t lead = 0;
        while (lead < w_cols && b[lead] == 0) ++lead;
        if (lead < w_cols && v[lead] != 0) {
          unsigned f = v[lead] * *inverse_mod(b[lead], p) % p;
          for (std::size_t j = 0; j < w_cols; ++j)
            v[j] = (v[j] + (p - f) * b[j]) % p;
        }
      }
      return v;
    };
    // returns the reduced vector when it enlarges the span, nullopt otherwise
    auto echelon_insert = [&](std::vector<std::vector<unsigned>>& basis,
                              std::vector<unsigned> v)
        -> std::optional<std::vector<unsigned>> {
      v = reduce_against(basis, v);
      if (std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; }))
        return std::nullopt;
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(),
                [&](const auto& a, const auto& b) {
                  std::size_t la = 0, lb = 0;
                  while (la < w_cols && a[la] == 0) ++la;
                  while (lb < w_cols && b[lb] == 0) ++lb;
                  return la < lb;
                });
      return v;
    };
    std::vector<std::vector<unsigned>> cob_basis;
    for (auto& v : cob) echelon_insert(cob_basis, v);
    // coboundaries must solve the homogeneous system
    std::vector<std::vector<unsigned>> null_basis = cob_basis;
    std::vector<std::vector<unsigned>> extension;
    for (auto& v : nullspace)
      if (auto red = echelon_insert(null_basis, v)) extension.push_back(*red);

    // enumerate representatives: particular + span(extension)
    std::vector<unsigned> coeff(extension.size(), 0);
    for (;;) {
      std::vector<unsigned> x = particular;
      x.resize(w_cols, 0);
      for (std::size_t t = 0; t < extension.size(); ++t)
        for (std::size_t j = 0; j < w_cols; ++j)
          x[j] = (x[j] + coeff[t] * extension[t][j]) % p;
      // build G
      std::vector<Mat2> g_gens;
      for (std::size_t i = 0; i < r; ++i) {
        Vec4 k = lift_w(std::vector<unsigned>(x.begin() + i * m_dim,
                                              x.begin() + (i + 1) * m_dim));
        Mat2 km = make(n, 1 + p * k[0], p * k[1], p * k[2], 1 + p * k[3]);
        g_gens.push_back(mul(lifts[i], km));
      }
      for (const Vec4& ub : u.basis)
        g_gens.push_back(
            make(n, 1 + p * ub[0], p * ub[1], p * ub[2], 1 + p * ub[3]));
      if (g_gens.empty()) g_gens.push_back(identity(n));
      Gl2Subgroup g = group_closure(n, g_gens);
      if (g.order() != h.order() * u.element_codes.size())
        throw std::logic_error("subgroups_with_reduction: bad section order");
      if (!(reduction(g, p) == h))
        throw std::logic_error("subgroups_with_reduction: reduction mismatch");
      if (!det_surjective_only || det_surjective(g))
        if (seen_sets.insert(g.element_codes).second) out.push_back(std::move(g));

      std::size_t t = 0;
      while (t < coeff.size() && ++coeff[t] == p) coeff[t++] = 0;
      if (t == coeff.size()) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Gl2Subgroup& a, const Gl2Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.element_codes < b.element_codes;
            });
  return out;
}

}  // namespace gl2
}  // namespace torsion6
