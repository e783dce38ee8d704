// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsion6/int_poly.hpp"
#include "torsion6/mod_poly.hpp"
#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"
#include "torsion6/zp_poly.hpp"

namespace torsion6 {

// ---------------------------------------------------------------------------
// Factorization over F_p, with multiplicities.
// ---------------------------------------------------------------------------

struct ModFactor {
    ZpPoly factor;  // monic irreducible
    int multiplicity = 0;
};

namespace detail {

// Coefficient-extraction p-th root of a perfect p-th power (Frobenius fixes
// F_p, so (sum a_j x^j)^p = sum a_j x^{jp}).
inline ZpPoly zp_pth_root(const ZpPoly& g) {
    const std::uint64_t p = g.modulus();
    std::vector<std::uint64_t> c;
    for (int j = 0; j * static_cast<int>(p) <= g.degree(); ++j) {
        std::uint64_t a = g.coeff(j * static_cast<int>(p));
        c.push_back(a);
    }
    for (int j = 0; j <= g.degree(); ++j)
        if (j % p != 0 && g.coeff(j) != 0)
            throw std::logic_error("zp_pth_root: not a p-th power");
    return ZpPoly(p, std::move(c));
}

// Product of the distinct monic irreducible factors of a monic g.
inline ZpPoly zp_radical(const ZpPoly& g) {
    const std::uint64_t p = g.modulus();
    if (g.degree() <= 0) return ZpPoly::constant(p, 1);
    ZpPoly d = g.derivative();
    if (d.is_zero()) return zp_radical(zp_pth_root(g));
    ZpPoly c = ZpPoly::gcd(g, d);
    ZpPoly r1 = ZpPoly::divmod(g, c).first;  // factors of multiplicity prime to p
    // Strip r1's factors out of c; what survives has all multiplicities
    // divisible by p, hence is a perfect p-th power.
    ZpPoly h = c;
    while (true) {
        ZpPoly e = ZpPoly::gcd(h, r1);
        if (e.degree() <= 0) break;
        h = ZpPoly::divmod(h, e).first;
    }
    if (h.degree() <= 0) return r1;
    return r1 * zp_radical(zp_pth_root(h));
}

inline bool zp_less(const ZpPoly& a, const ZpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

// Complete factorization of a monic squarefree g into monic irreducibles,
// sorted by (degree, lexicographic coefficients).
inline std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& g, SplitMix64& rng) {
    std::vector<ZpPoly> out;
    if (g.degree() <= 0) return out;
    DdfResult ddf = distinct_degree_factor(g, g.degree());
    for (const auto& slice : ddf.slices) {
        if (slice.product.degree() == slice.factor_degree) {
            out.push_back(slice.product.monic());
        } else {
            auto split = equal_degree_factor(slice.product, slice.factor_degree, rng);
            for (auto& q : split) out.push_back(q.monic());
        }
    }
    std::sort(out.begin(), out.end(), zp_less);
    return out;
}

}  // namespace detail

// Factor f mod p into monic irreducibles with multiplicities; the product of
// factor^multiplicity equals f mod p up to the unit lc(f) mod p.  Requires a
// word-sized prime modulus and p not dividing lc(f).
inline std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p,
                                           std::uint64_t seed = kDefaultSeed) {
    if (p < 2 || !is_prime_u64(p)) throw std::domain_error("factor_mod_p: modulus not prime");
    if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    ZpPoly F = ZpPoly::from_int_poly(f, p);
    if (F.degree() != f.degree())
        throw std::domain_error("factor_mod_p: leading coefficient vanishes mod p");
    std::vector<ModFactor> out;
    if (F.degree() <= 0) return out;
    F = F.monic();
    ZpPoly rad = detail::zp_radical(F);
    SplitMix64 rng(seed);
    std::vector<ZpPoly> irr = detail::zp_factor_squarefree(rad, rng);
    for (const auto& q : irr) {
        int mult = 0;
        ZpPoly rem = F;
        while (rem.degree() >= q.degree()) {
            auto [quo, r] = ZpPoly::divmod(rem, q);
            if (!r.is_zero()) break;
            rem = quo;
            ++mult;
        }
        out.push_back({q, mult});
    }
    return out;
}

// Overload for an already-reduced polynomial.
inline std::vector<ModFactor> factor_mod_p(const ZpPoly& f, std::uint64_t seed = kDefaultSeed) {
    IntPoly lift;
    {
        std::vector<mpz_class> c;
        for (int i = 0; i <= f.degree(); ++i) c.emplace_back(static_cast<unsigned long>(f.coeff(i)));
        lift = IntPoly(std::move(c));
    }
    return factor_mod_p(lift, f.modulus(), seed);
}

// ---------------------------------------------------------------------------
// Squarefree part over Z.
// ---------------------------------------------------------------------------

inline IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    IntPoly pp = f.primitive_part();
    if (pp.degree() <= 0) return IntPoly({mpz_class(1)});
    IntPoly g = IntPoly::gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return pp.divide_exact(g).primitive_part();
}

// ---------------------------------------------------------------------------
// Full factorization over Q (Zassenhaus), degree ceiling 64.
// ---------------------------------------------------------------------------

namespace detail {

inline bool int_poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

// Monicization transform F(x) = lc^(deg-1) * f(x/lc); factors of f are
// recovered from monic factors H of F as primitive_part(H(lc*x)).
inline IntPoly monicize(const IntPoly& f) {
    const mpz_class l = f.lc();
    const int n = f.degree();
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    mpz_class scale = 1;  // lc^(n-1-i)
    for (int i = n - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = f.coeff(i) * scale;
        if (i > 0) scale *= l;
    }
    return IntPoly(std::move(c));
}

inline IntPoly demonicize_factor(const IntPoly& H, const mpz_class& l) {
    IntPoly g = H.scaled_arg(l).primitive_part();
    if (g.lc() < 0) g = -g;
    return g;
}

// Smallest prime >= start such that p does not divide lc(f) and f stays
// squarefree mod p.
inline std::uint64_t next_witness_prime(const IntPoly& f, std::uint64_t start) {
    std::uint64_t p = start;
    while (true) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ZpPoly fp = ZpPoly::from_int_poly(f, p);
        if (fp.is_squarefree()) return p;
    }
}

// Hensel-lift the monic factors (mod p) of monic F past `target`, returning
// symmetric-lift candidates modulo res.modulus.
struct LiftedFactors {
    std::vector<ModPoly> factors;
    mpz_class modulus;
};

inline LiftedFactors lift_factors(const IntPoly& F, const std::vector<ZpPoly>& mod_factors,
                                  const mpz_class& target) {
    HenselResult res = hensel_lift(F, mod_factors, target);
    return {std::move(res.factors), res.modulus};
}

// Landau-Mignotte style coefficient bound: any monic divisor of monic F with
// degree <= B has coefficients of absolute value <= 2^B * ||F||_2, so a
// modulus > 2^(B+1) * ||F||_2 separates symmetric representatives.
inline mpz_class coefficient_window(const IntPoly& F, int B) {
    mpz_class w = F.l2_norm_ceil();
    mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), static_cast<mp_bitcnt_t>(B) + 1);
    return w + 1;
}

// Zassenhaus recombination restricted to subsets of total degree <= max_deg.
// Found factors are divided out of `remaining` (monic world) and appended to
// `out`; testing is exact trial division.  With complete_set, `lifted` is the
// full modular factor list of `remaining`, so subsets beyond half the list
// are redundant and a final irreducible survivor is pushed directly; without
// it (a partial low-degree list) every subset size is eligible and the
// survivor is left in `remaining`.
inline void recombine(IntPoly& remaining, std::vector<ModPoly> lifted,
                      const mpz_class& modulus, int max_deg,
                      std::vector<IntPoly>& out, bool complete_set) {
    bool progress = true;
    while (progress) {
        progress = false;
        if (lifted.empty()) break;
        auto try_subset = [&](const std::vector<std::size_t>& s) -> bool {
            ModPoly prod = ModPoly::constant(modulus, 1);
            for (auto i : s) prod = prod * lifted[i];
            IntPoly cand = prod.to_int_poly_symmetric();
            if (cand.degree() > remaining.degree()) return false;
            auto quo = remaining.try_divide(cand);
            if (!quo) return false;
            remaining = *quo;
            out.push_back(cand);
            std::vector<ModPoly> rest;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (std::find(s.begin(), s.end(), i) == s.end()) rest.push_back(lifted[i]);
            lifted = std::move(rest);
            return true;
        };
        const std::size_t size_cap = complete_set ? lifted.size() / 2 : lifted.size();
        for (std::size_t size = 1; size <= size_cap && !progress; ++size) {
            std::vector<std::size_t> idx(size);
            std::function<bool(std::size_t, std::size_t, int)> rec =
                [&](std::size_t pos, std::size_t from, int deg_used) -> bool {
                if (pos == size) return try_subset(idx);
                for (std::size_t i = from; i + (size - pos) <= lifted.size(); ++i) {
                    int d = deg_used + lifted[i].degree();
                    if (d > max_deg) continue;
                    idx[pos] = i;
                    if (rec(pos + 1, i + 1, d)) return true;
                }
                return false;
            };
            if (rec(0, 0, 0)) progress = true;
        }
    }
    if (complete_set && remaining.degree() > 0 && remaining.degree() <= max_deg) {
        out.push_back(remaining);
        remaining = IntPoly({mpz_class(1)});
    }
}

// Factor a primitive squarefree polynomial with positive leading coefficient
// into primitive irreducibles with positive leading coefficients.
inline std::vector<IntPoly> zassenhaus_squarefree(IntPoly f, std::uint64_t seed) {
    std::vector<IntPoly> out;
    // Strip powers of x.
    int v = 0;
    while (f.degree() > 0 && f.coeff(0) == 0) {
        f = f.shifted(-1);
        ++v;
    }
    for (int i = 0; i < v; ++i) out.push_back(IntPoly({mpz_class(0), mpz_class(1)}));
    if (f.degree() == 0) return out;
    if (f.degree() == 1) {
        out.push_back(f);
        return out;
    }
    const mpz_class l = f.lc();
    IntPoly F = monicize(f);
    // Pick the prime (among the first few squarefree witnesses) giving the
    // fewest modular factors.
    SplitMix64 rng(seed);
    std::uint64_t best_p = 0;
    std::vector<ZpPoly> best_factors;
    std::uint64_t p = 2;
    for (int tries = 0; tries < 4; ++tries) {
        p = next_witness_prime(F, p);
        SplitMix64 local(seed ^ p);
        auto factors = zp_factor_squarefree(ZpPoly::from_int_poly(F, p).monic(), local);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) {
        out.push_back(f.lc() < 0 ? -f : f);
        return out;
    }
    mpz_class window = coefficient_window(F, F.degree() - 1);
    LiftedFactors lifted = lift_factors(F, best_factors, window);
    std::vector<IntPoly> monic_out;
    IntPoly remaining = F;
    recombine(remaining, lifted.factors, lifted.modulus, F.degree(), monic_out,
              /*complete_set=*/true);
    for (const auto& H : monic_out) out.push_back(demonicize_factor(H, l));
    return out;
}

}  // namespace detail

// Complete irreducible factorization over Q.  Returns primitive irreducible
// factors, repeated per multiplicity, sorted by (degree, coefficients); their
// product equals the primitive part of f (for deg f >= 1).  Inputs of degree
// above 64 are rejected: bounded-degree questions at large degree belong to
// low_degree_factors.
inline std::vector<IntPoly> full_factor(const IntPoly& f, std::uint64_t seed = kDefaultSeed) {
    if (f.is_zero()) throw std::domain_error("full_factor: zero polynomial");
    if (f.degree() > 64)
        throw std::domain_error(
            "full_factor: degree exceeds ceiling 64; use low_degree_factors for "
            "bounded-degree questions");
    IntPoly pp = f.primitive_part();
    if (pp.degree() <= 0) return {};
    const bool negative = pp.lc() < 0;
    IntPoly work = negative ? -pp : pp;
    IntPoly sf = squarefree_part(work);
    std::vector<IntPoly> irr = detail::zassenhaus_squarefree(sf, seed);
    std::sort(irr.begin(), irr.end(), detail::int_poly_less);
    std::vector<IntPoly> out;
    for (const auto& q : irr) {
        while (true) {
            auto quo = work.try_divide(q);
            if (!quo) break;
            work = *quo;
            out.push_back(q);
        }
    }
    if (work.degree() != 0)
        throw std::logic_error("full_factor: factor recovery incomplete");
    std::sort(out.begin(), out.end(), detail::int_poly_less);
    if (negative && !out.empty()) out.front() = -out.front();
    return out;
}

// ---------------------------------------------------------------------------
// Bounded-degree factor search with replayable certificates.
// ---------------------------------------------------------------------------

struct FactorCertificate {
    std::string kind;  // "no-factor-below" | "factor-list" | "mixed-degree-witness"
    int bound = 0;
    std::vector<std::uint64_t> witness_primes;
    std::uint64_t seed = kDefaultSeed;
    std::vector<IntPoly> factors;                    // complete list of irreducible factors
                                                     // of degree <= bound (factor-list)
    std::vector<std::vector<int>> patterns;          // per-prime factor-degree multisets

    json to_json() const {
        json j;
        j["kind"] = kind;
        j["bound"] = bound;
        j["witness_primes"] = witness_primes;
        j["seed"] = hex_seed(seed);
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(int_poly_to_json(f));
        j["factors"] = std::move(fs);
        j["patterns"] = patterns;
        return j;
    }

    static FactorCertificate from_json(const json& j) {
        FactorCertificate c;
        c.kind = j.at("kind").get<std::string>();
        c.bound = j.at("bound").get<int>();
        c.witness_primes = j.at("witness_primes").get<std::vector<std::uint64_t>>();
        c.seed = parse_hex_seed(j.at("seed").get<std::string>());
        for (const auto& e : j.at("factors")) c.factors.push_back(int_poly_from_json(e));
        c.patterns = j.at("patterns").get<std::vector<std::vector<int>>>();
        return c;
    }
};

namespace detail {

// Degree multiset of f mod p truncated at `bound`: DDF slice degrees with
// multiplicity, plus the degree of the untouched cofactor (whose irreducible
// pieces all exceed bound and so cannot take part in any sum <= bound).
inline std::vector<int> degree_pattern(const IntPoly& f, std::uint64_t p, int bound) {
    ZpPoly fp = ZpPoly::from_int_poly(f, p).monic();
    DdfResult ddf = distinct_degree_factor(fp, bound);
    std::vector<int> pattern;
    for (const auto& s : ddf.slices) {
        int count = s.product.degree() / s.factor_degree;
        for (int i = 0; i < count; ++i) pattern.push_back(s.factor_degree);
    }
    if (ddf.cofactor.degree() > 0) pattern.push_back(ddf.cofactor.degree());
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

// Subset sums of the <=bound entries of a degree pattern, intersected with
// [1, bound].
inline std::set<int> achievable_degrees(const std::vector<int>& pattern, int bound) {
    std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
    reach[0] = true;
    for (int d : pattern) {
        if (d > bound) continue;
        for (int s = bound; s >= d; --s)
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
    }
    std::set<int> out;
    for (int s = 1; s <= bound; ++s)
        if (reach[static_cast<std::size_t>(s)]) out.insert(s);
    return out;
}

}  // namespace detail

// Find every irreducible factor of degree <= bound of a squarefree f, or
// certify there is none.  Strategy: intersect achievable factor degrees
// across independent witness primes; only when the intersection is nonempty,
// Hensel-lift the low-degree modular factors past the coefficient window and
// exhaust bounded-degree recombinations.  `extra_witness_primes` extends the
// default panel of 8 witness primes (used by replay checks).
inline FactorCertificate low_degree_factors(const IntPoly& f, int bound,
                                            std::uint64_t seed = kDefaultSeed,
                                            int extra_witness_primes = 0) {
    if (f.is_zero()) throw std::domain_error("low_degree_factors: zero polynomial");
    if (bound < 1) throw std::domain_error("low_degree_factors: bound must be >= 1");
    FactorCertificate cert;
    cert.bound = bound;
    cert.seed = seed;
    if (bound >= f.degree()) {
        // Degenerate: the question is unbounded, answer with the complete
        // factorization instead.
        cert.kind = "factor-list";
        cert.factors = full_factor(f, seed);
        for (auto& q : cert.factors)
            if (q.lc() < 0) q = -q;
        std::sort(cert.factors.begin(), cert.factors.end(), detail::int_poly_less);
        cert.factors.erase(std::unique(cert.factors.begin(), cert.factors.end()),
                           cert.factors.end());
        return cert;
    }

    // Witness primes: the first 8 primes above 100 modulo which f stays
    // squarefree (they certify squarefreeness over Z en passant); if none of
    // the first candidates qualify, decide squarefreeness exactly.
    const int want = 8 + extra_witness_primes;
    std::uint64_t p = 100;
    int scanned = 0;
    bool checked_exact = false;
    while (static_cast<int>(cert.witness_primes.size()) < want) {
        p = next_prime_u64(p);
        ++scanned;
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (ZpPoly::from_int_poly(f, p).is_squarefree()) {
            cert.witness_primes.push_back(p);
        } else if (cert.witness_primes.empty() && scanned >= 25 && !checked_exact) {
            IntPoly g = IntPoly::gcd(f.primitive_part(), f.derivative());
            if (g.degree() > 0)
                throw std::domain_error("low_degree_factors: input not squarefree");
            checked_exact = true;
        }
    }

    std::optional<std::set<int>> meet;
    for (std::uint64_t wp : cert.witness_primes) {
        std::vector<int> pattern = detail::degree_pattern(f, wp, bound);
        cert.patterns.push_back(pattern);
        std::set<int> reach = detail::achievable_degrees(pattern, bound);
        if (!meet) {
            meet = std::move(reach);
        } else {
            std::set<int> inter;
            std::set_intersection(meet->begin(), meet->end(), reach.begin(), reach.end(),
                                  std::inserter(inter, inter.begin()));
            *meet = std::move(inter);
        }
    }
    if (meet->empty()) {
        cert.kind = "no-factor-below";
        return cert;
    }

    // Some degree <= bound is achievable modulo every witness prime: lift and
    // recombine at the prime with the sparsest low-degree factor supply.
    std::size_t best = 0;
    auto low_count = [&](const std::vector<int>& pat) {
        std::size_t n = 0;
        for (int d : pat)
            if (d <= bound) ++n;
        return n;
    };
    for (std::size_t i = 1; i < cert.patterns.size(); ++i)
        if (low_count(cert.patterns[i]) < low_count(cert.patterns[best])) best = i;
    const std::uint64_t lift_p = cert.witness_primes[best];

    const mpz_class l = f.lc() < 0 ? mpz_class(-f.lc()) : f.lc();
    IntPoly fpos = f.lc() < 0 ? -f : f;
    IntPoly F = detail::monicize(fpos);
    // Factor mod lift_p: split slices of degree <= bound fully, keep the rest
    // as one cofactor block.
    ZpPoly Fp = ZpPoly::from_int_poly(F, lift_p);
    if (!Fp.is_squarefree() || Fp.degree() != F.degree()) {
        // Monicization can spoil the witness property (lc scaling); fall back
        // to a fresh witness prime for the monic model.
        std::uint64_t q = detail::next_witness_prime(F, 100);
        Fp = ZpPoly::from_int_poly(F, q);
    }
    Fp = Fp.monic();
    DdfResult ddf = distinct_degree_factor(Fp, bound);
    std::vector<ZpPoly> low;
    SplitMix64 rng(seed);
    ZpPoly cof = ddf.cofactor;
    for (const auto& s : ddf.slices) {
        if (s.product.degree() == s.factor_degree) {
            low.push_back(s.product.monic());
        } else {
            auto split = equal_degree_factor(s.product, s.factor_degree, rng);
            for (auto& q : split) low.push_back(q.monic());
        }
    }
    std::sort(low.begin(), low.end(), detail::zp_less);
    std::vector<ZpPoly> to_lift = low;
    if (cof.degree() > 0) to_lift.push_back(cof.monic());

    std::vector<IntPoly> found_monic;
    if (!low.empty()) {
        mpz_class window = detail::coefficient_window(F, bound);
        detail::LiftedFactors lifted = detail::lift_factors(F, to_lift, window);
        std::vector<ModPoly> lifted_low(lifted.factors.begin(),
                                        lifted.factors.begin() +
                                            static_cast<std::ptrdiff_t>(low.size()));
        IntPoly remaining = F;
        detail::recombine(remaining, std::move(lifted_low), lifted.modulus, bound, found_monic,
                          /*complete_set=*/false);
    }
    for (const auto& H : found_monic) {
        IntPoly g = detail::demonicize_factor(H, l);
        if (g.degree() <= bound) cert.factors.push_back(g);
    }
    std::sort(cert.factors.begin(), cert.factors.end(), detail::int_poly_less);
    cert.factors.erase(std::unique(cert.factors.begin(), cert.factors.end()),
                       cert.factors.end());
    cert.kind = cert.factors.empty() ? "no-factor-below" : "factor-list";
    return cert;
}

// ---------------------------------------------------------------------------
// Splitting-degree witnesses.
// ---------------------------------------------------------------------------

struct SplittingWitness {
    std::uint64_t prime = 0;
    std::vector<int> degrees;  // factor degrees of f mod prime, ascending
};

// For irreducible f, search the smallest primes of good reduction for a
// factorization pattern with unequal degrees: such a pattern certifies that
// the splitting field is strictly larger than the root field (a Frobenius
// element with cycle type mixing distinct lengths cannot lie in a transitive
// subgroup acting with uniform cycle length).  Inconclusive (nullopt) once
// `prime_budget` good primes are exhausted.
inline std::optional<SplittingWitness> splitting_degree_exceeds(
    const IntPoly& f, int prime_budget = 25, std::uint64_t seed = kDefaultSeed) {
    if (f.degree() < 1) throw std::domain_error("splitting_degree_exceeds: constant input");
    if (f.degree() >= 2) {
        // A nontrivial factorization always has a part of degree <= deg/2, so
        // this certifies irreducibility; a not-squarefree rejection from the
        // sieve also means reducible.
        FactorCertificate c;
        try {
            c = low_degree_factors(f, std::max(1, f.degree() / 2), seed);
        } catch (const std::domain_error&) {
            throw std::domain_error("splitting_degree_exceeds: input reducible");
        }
        if (c.kind != "no-factor-below")
            throw std::domain_error("splitting_degree_exceeds: input reducible");
    }
    if (f.degree() == 1) return std::nullopt;
    mpz_class disc = IntPoly::discriminant(f);
    mpz_class bad = disc * f.lc();
    std::uint64_t p = 1;
    int used = 0;
    while (used < prime_budget) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ++used;
        std::vector<int> degs = detail::degree_pattern(f, p, f.degree());
        if (std::set<int>(degs.begin(), degs.end()).size() > 1)
            return SplittingWitness{p, degs};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rational roots and identity checking.
// ---------------------------------------------------------------------------

// All rational roots of f, ascending, found by clearing denominators and
// enumerating divisor pairs of the trailing and leading coefficients.
inline std::vector<mpq_class> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<mpq_class> roots;
    if (f.degree() < 1) return roots;
    auto [g, scale] = f.to_integral();
    (void)scale;
    bool zero_root = false;
    while (g.degree() > 0 && g.coeff(0) == 0) {
        zero_root = true;
        g = g.shifted(-1);
    }
    if (zero_root) roots.emplace_back(0);
    if (g.degree() >= 1) {
        std::vector<mpz_class> nums = divisors(mpz_class(abs(g.coeff(0))));
        std::vector<mpz_class> dens = divisors(mpz_class(abs(g.lc())));
        std::set<mpq_class> found;
        for (const auto& n : nums)
            for (const auto& d : dens)
                for (int sign : {1, -1}) {
                    mpz_class num = sign < 0 ? mpz_class(-n) : n;
                    mpq_class cand(num, d);
                    cand.canonicalize();
                    if (found.count(cand)) continue;
                    if (g.eval(cand) == 0) found.insert(cand);
                }
        for (const auto& r : found) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Exact equality of two polynomial expressions after expansion.
inline bool poly_identity_check(const RatPoly& lhs, const RatPoly& rhs) { return lhs == rhs; }

}  // namespace torsion6
