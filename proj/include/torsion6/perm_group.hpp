// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsion6/gl2.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// Small permutation groups, used to identify the abstract structure of orbit
// quotients of mod-N Galois image groups.  Elements are stored explicitly
// (closure from generators), so everything here assumes |G| stays modest
// (a few thousand), which the callers guarantee.

using Perm = std::vector<std::uint16_t>;

inline Perm perm_mul(const Perm& f, const Perm& g) {
  // (f*g)(i) = f(g(i))
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<std::uint16_t>(i);
  return r;
}

class SmallGroup {
 public:
  SmallGroup() = default;

  explicit SmallGroup(std::vector<Perm> generators, std::size_t order_cap = 200000)
      : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::domain_error("SmallGroup: no generators");
    degree_ = gens_.front().size();
    for (const Perm& g : gens_) {
      if (g.size() != degree_) throw std::domain_error("SmallGroup: degree mismatch");
      Perm s = g;
      std::sort(s.begin(), s.end());
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != i) throw std::domain_error("SmallGroup: not a permutation");
    }
    // BFS closure
    std::set<Perm> seen{perm_identity(degree_)};
    std::vector<Perm> frontier{perm_identity(degree_)};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& p : frontier)
        for (const Perm& g : gens_) {
          Perm q = perm_mul(p, g);
          if (seen.insert(q).second) {
            next.push_back(q);
            if (seen.size() > order_cap)
              throw std::domain_error("SmallGroup: order cap exceeded");
          }
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  static std::size_t element_order(const Perm& p) {
    Perm q = p;
    const Perm id = perm_identity(p.size());
    std::size_t k = 1;
    while (q != id) {
      q = perm_mul(q, p);
      ++k;
    }
    return k;
  }

  // Multiset of element orders, as order -> count.
  std::map<std::size_t, std::size_t> order_census() const {
    std::map<std::size_t, std::size_t> census;
    for (const Perm& p : elements_) ++census[element_order(p)];
    return census;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (perm_mul(gens_[i], gens_[j]) != perm_mul(gens_[j], gens_[i]))
          return false;
    return true;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (const Perm& p : elements_) e = std::lcm(e, element_order(p));
    return e;
  }

  // Subgroup generated by all commutators of elements (the commutator
  // subgroup is generated by the set of all commutators, which is closed
  // under conjugation, so no extra normal closure step is needed).
  SmallGroup derived_subgroup() const {
    std::set<Perm> comms;
    for (const Perm& x : elements_)
      for (const Perm& y : elements_) {
        Perm c = perm_mul(perm_mul(x, y),
                          perm_mul(perm_inverse(x), perm_inverse(y)));
        comms.insert(c);
      }
    std::vector<Perm> gens(comms.begin(), comms.end());
    if (gens.empty()) gens.push_back(perm_identity(degree_));
    return SmallGroup(std::move(gens));
  }

  std::size_t derived_length() const {
    SmallGroup g = *this;
    std::size_t len = 0;
    while (g.order() > 1) {
      g = g.derived_subgroup();
      ++len;
      if (len > 20) throw std::logic_error("SmallGroup: not solvable");
    }
    return len;
  }

  bool is_solvable() const {
    SmallGroup g = *this;
    for (int i = 0; i < 20; ++i) {
      if (g.order() == 1) return true;
      SmallGroup d = g.derived_subgroup();
      if (d.order() == g.order()) return false;
      g = d;
    }
    return false;
  }

  // A Sylow p-subgroup, by growing a p-subgroup inside its own normalizer.
  SmallGroup sylow_subgroup(std::size_t p) const {
    std::size_t target = 1, n = order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
    std::vector<Perm> sub{perm_identity(degree_)};
    std::set<Perm> sub_set{perm_identity(degree_)};
    while (sub_set.size() < target) {
      bool grew = false;
      for (const Perm& x : elements_) {
        if (sub_set.count(x)) continue;
        std::size_t ox = element_order(x);
        // p-element normalizing the current subgroup, with x^p inside it
        bool ppow = true;
        for (std::size_t m = ox; m > 1; m /= p)
          if (m % p != 0) {
            ppow = false;
            break;
          }
        if (!ppow) continue;
        Perm xp = x;
        for (std::size_t i = 1; i < p; ++i) xp = perm_mul(xp, x);
        if (!sub_set.count(xp)) continue;
        Perm xi = perm_inverse(x);
        bool normalizes = true;
        for (const Perm& s : sub)
          if (!sub_set.count(perm_mul(perm_mul(x, s), xi))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        // close sub ∪ {x}
        std::vector<Perm> gens = sub;
        gens.push_back(x);
        SmallGroup bigger(gens);
        sub.assign(bigger.elements().begin(), bigger.elements().end());
        sub_set = std::set<Perm>(sub.begin(), sub.end());
        grew = true;
        break;
      }
      if (!grew) throw std::logic_error("SmallGroup: Sylow growth stalled");
    }
    return SmallGroup(sub);
  }

  // All subgroups of prime order p that are normal in G.
  std::vector<SmallGroup> normal_prime_order_subgroups(std::size_t p) const {
    std::vector<SmallGroup> out;
    std::set<Perm> used;
    for (const Perm& x : elements_) {
      if (element_order(x) != p || used.count(x)) continue;
      SmallGroup c(std::vector<Perm>{x});
      for (const Perm& e : c.elements()) used.insert(e);
      bool normal = true;
      for (const Perm& g : gens_) {
        Perm gi = perm_inverse(g);
        if (!c.contains(perm_mul(perm_mul(g, x), gi))) {
          normal = false;
          break;
        }
      }
      if (normal) out.push_back(std::move(c));
    }
    return out;
  }

  // Quotient by a normal subgroup, realized as the regular action on cosets.
  SmallGroup quotient(const SmallGroup& normal) const {
    if (normal.order() == 0 || order() % normal.order() != 0)
      throw std::domain_error("SmallGroup: bad normal subgroup");
    std::size_t q = order() / normal.order();
    if (q > 5000) throw std::domain_error("SmallGroup: quotient too large");
    // enumerate cosets gN
    std::map<Perm, std::size_t> coset_of;  // element -> coset index
    std::vector<Perm> reps;
    for (const Perm& g : elements_) {
      if (coset_of.count(g)) continue;
      std::size_t idx = reps.size();
      reps.push_back(g);
      for (const Perm& s : normal.elements()) coset_of[perm_mul(g, s)] = idx;
    }
    if (reps.size() != q) throw std::logic_error("SmallGroup: coset count");
    std::vector<Perm> qgens;
    for (const Perm& g : gens_) {
      Perm act(q);
      for (std::size_t i = 0; i < q; ++i)
        act[i] = static_cast<std::uint16_t>(coset_of.at(perm_mul(g, reps[i])));
      qgens.push_back(act);
    }
    return SmallGroup(qgens);
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;  // sorted
};

// Supersolvable: G has a chain of normal subgroups with cyclic factors.  A
// finite group is supersolvable iff it has a normal subgroup of prime order
// with supersolvable quotient, except that the trivial group is
// supersolvable; both directions hold because normality in the quotient
// pulls back and pushes forward along the chain.
inline bool is_supersolvable(const SmallGroup& g, int depth = 0) {
  if (g.order() == 1) return true;
  if (depth > 24) throw std::logic_error("is_supersolvable: depth");
  auto fac = factorize(mpz_class(static_cast<unsigned long>(g.order())));
  for (const auto& [p, e] : fac) {
    for (const SmallGroup& c :
         g.normal_prime_order_subgroups(static_cast<std::size_t>(p.get_ui()))) {
      if (is_supersolvable(g.quotient(c), depth + 1)) return true;
    }
  }
  return false;
}

// "Generalized S3 type": exponent divides 6, all Sylow subgroups abelian,
// and the group is supersolvable.  These are exactly the groups that can
// appear as Galois groups of the sextic fields relevant here.
inline bool is_generalized_s3_type(const SmallGroup& g) {
  if (g.order() > 10000)
    throw std::domain_error("is_generalized_s3_type: group too large");
  if (6 % g.exponent() != 0) return false;
  for (std::size_t p : {std::size_t{2}, std::size_t{3}})
    if (g.order() % p == 0 && !g.sylow_subgroup(p).is_abelian()) return false;
  return is_supersolvable(g);
}

// Name the abstract isomorphism type of a small group via (order, element
// order census, abelian flag); the catalogue covers every group the toolkit
// meets, and anything else gets a deterministic census-based fallback name
// rather than a possibly wrong label.
inline std::string identify_group(const SmallGroup& g) {
  const std::size_t n = g.order();
  auto census = g.order_census();
  auto has = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> want) {
    std::map<std::size_t, std::size_t> w;
    for (auto& [k, v] : want) w[k] = v;
    return census == w;
  };
  switch (n) {
    case 1: return "C1";
    case 2: return "C2";
    case 3: return "C3";
    case 4: return has({{1,1},{2,1},{4,2}}) ? "C4" : "C2xC2";
    case 5: return "C5";
    case 6: return has({{1,1},{2,1},{3,2},{6,2}}) ? "C6" : "S3";
    case 7: return "C7";
    case 8:
      if (has({{1,1},{2,1},{4,2},{8,4}})) return "C8";
      if (has({{1,1},{2,3},{4,4}})) return "C4xC2";
      if (has({{1,1},{2,7}})) return "C2xC2xC2";
      if (has({{1,1},{2,5},{4,2}})) return "D4";
      if (has({{1,1},{2,1},{4,6}})) return "Q8";
      break;
    case 9: return has({{1,1},{3,2},{9,6}}) ? "C9" : "C3xC3";
    case 10: return has({{1,1},{2,1},{5,4},{10,4}}) ? "C10" : "D5";
    case 12:
      if (has({{1,1},{2,1},{3,2},{4,2},{6,2},{12,4}})) return "C12";
      if (has({{1,1},{2,3},{3,2},{6,6}})) return "C2xC6";
      if (has({{1,1},{2,7},{3,2},{6,2}})) return "S3xC2";
      if (has({{1,1},{2,3},{3,8}})) return "A4";
      if (has({{1,1},{2,1},{3,2},{4,6},{6,2}})) return "Dic3";
      break;
    case 18:
      if (has({{1,1},{2,1},{3,2},{6,2},{9,6},{18,6}})) return "C18";
      if (has({{1,1},{2,1},{3,8},{6,8}})) return "C3xC6";
      if (has({{1,1},{2,9},{3,2},{9,6}})) return "D9";
      if (has({{1,1},{2,3},{3,8},{6,6}})) return "S3xC3";
      if (has({{1,1},{2,9},{3,8}})) return "C3xC3:C2";
      break;
    case 36:
      if (has({{1,1},{2,15},{3,8},{6,12}})) return "S3xS3";
      if (has({{1,1},{2,3},{3,8},{6,24}})) return "C6xC6";
      break;
    default: break;
  }
  std::string name = "order" + std::to_string(n) + "-census";
  for (auto& [k, v] : census)
    name += "-" + std::to_string(k) + "x" + std::to_string(v);
  return name;
}

namespace gl2 {

// The permutation group induced by H on the orbit of v, i.e. the image of H
// in Sym(orbit) — abstractly H / core of the stabilizer of v.
inline SmallGroup orbit_action_group(const Gl2Subgroup& h, const Vec2& v) {
  std::vector<Vec2> orbit = vector_orbit(h, v);
  std::map<Vec2, std::size_t> index;
  for (std::size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = i;
  std::vector<Mat2> gens = h.generators;
  if (gens.empty())
    for (std::uint32_t c : h.element_codes)
      gens.push_back(from_code(h.modulus, c));
  std::vector<Perm> pgens;
  for (const Mat2& g : gens) {
    Perm p(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      p[i] = static_cast<std::uint16_t>(index.at(apply(g, orbit[i])));
    pgens.push_back(p);
  }
  return SmallGroup(pgens);
}

// Abstract structure name of the orbit action group (the Galois group of
// the corresponding torsion-point field closure).
inline std::string closure_quotient(const Gl2Subgroup& h, const Vec2& v) {
  return identify_group(orbit_action_group(h, v));
}

}  // namespace gl2
}  // namespace torsion6
