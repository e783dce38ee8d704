// Copyright 2026 the torsion6 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torsion6/int_poly.hpp"
#include "torsion6/zp_poly.hpp"

namespace torsion6 {

// Dense polynomial over Z/m (m typically a prime power p^k used during
// Hensel lifting).  Coefficients are kept reduced into [0, m).
class ModPoly {
public:
    ModPoly() : m_(0) {}
    explicit ModPoly(mpz_class m) : m_(std::move(m)) {}
    ModPoly(mpz_class m, std::vector<mpz_class> coeffs)
        : m_(std::move(m)), c_(std::move(coeffs)) {
        for (auto& x : c_) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t());
        normalize();
    }
    static ModPoly from_int_poly(const IntPoly& f, const mpz_class& m) {
        return ModPoly(m, f.coeffs());
    }
    static ModPoly from_zp_poly(const ZpPoly& f, const mpz_class& m) {
        std::vector<mpz_class> v(f.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = mpz_class(static_cast<unsigned long>(f.coeffs()[i]));
        return ModPoly(m, std::move(v));
    }
    static ModPoly constant(const mpz_class& m, const mpz_class& a) {
        return ModPoly(m, std::vector<mpz_class>{a});
    }

    const mpz_class& modulus() const { return m_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Reinterpret modulo a divisor (or any smaller modulus) of m.
    ModPoly reduced(const mpz_class& m2) const { return ModPoly(m2, c_); }

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

    // Coefficients mapped into (-m/2, m/2].
    IntPoly to_int_poly_symmetric() const {
        std::vector<mpz_class> v = c_;
        mpz_class half = m_ / 2;
        for (auto& x : v)
            if (x > half) x -= m_;
        return IntPoly(std::move(v));
    }
    IntPoly to_int_poly() const { return IntPoly(c_); }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return ModPoly(a.m_, std::move(v));
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return ModPoly(a.m_, std::move(v));
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        IntPoly prod = a.to_int_poly() * b.to_int_poly();
        return ModPoly(a.m_, prod.coeffs());
    }

    // Division by a monic divisor (exact Euclidean division, no inverses).
    static std::pair<ModPoly, ModPoly> divmod_monic(const ModPoly& f, const ModPoly& g) {
        f.check(g);
        if (!g.is_monic())
            throw std::domain_error("ModPoly: divisor must be monic");
        if (f.degree() < g.degree()) return {ModPoly(f.m_), f};
        std::vector<mpz_class> r = f.c_;
        std::vector<mpz_class> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
        for (int k = f.degree() - g.degree(); k >= 0; --k) {
            mpz_class top = r[static_cast<std::size_t>(k + g.degree())];
            mpz_fdiv_r(top.get_mpz_t(), top.get_mpz_t(), f.m_.get_mpz_t());
            if (top == 0) continue;
            q[static_cast<std::size_t>(k)] = top;
            for (int i = 0; i <= g.degree(); ++i)
                r[static_cast<std::size_t>(k + i)] -= top * g.c_[static_cast<std::size_t>(i)];
        }
        return {ModPoly(f.m_, std::move(q)), ModPoly(f.m_, std::move(r))};
    }

private:
    mpz_class m_;
    std::vector<mpz_class> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const ModPoly& o) const {
        if (m_ != o.m_) throw std::logic_error("ModPoly: mixed moduli");
    }
};

namespace detail {

// One quadratic Hensel step: given f = g*h (mod m) and s*g + t*h = 1 (mod m)
// with g, h monic, produce the same data modulo m^2.  f is the fixed
// integer polynomial being lifted (only its value mod m^2 is used).
struct HenselPair {
    ModPoly g, h, s, t;
};

inline HenselPair hensel_step(const IntPoly& f, const HenselPair& in,
                              const mpz_class& m) {
    mpz_class m2 = m * m;
    ModPoly F = ModPoly::from_int_poly(f, m2);
    ModPoly g = in.g.reduced(m2), h = in.h.reduced(m2);
    ModPoly s = in.s.reduced(m2), t = in.t.reduced(m2);

    // With s*g + t*h = 1: delta_g = (t*e mod g), delta_h = s*e + q*h.
    ModPoly e = F - g * h;
    auto [q, r] = ModPoly::divmod_monic(t * e, g);
    ModPoly g2 = g + r;
    ModPoly h2 = h + s * e + q * h;

    ModPoly b = s * g2 + t * h2 - ModPoly::constant(m2, 1);
    auto [c, d] = ModPoly::divmod_monic(s * b, h2);
    ModPoly s2 = s - d;
    ModPoly t2 = t - t * b - c * g2;
    return {g2, h2, s2, t2};
}

} // namespace detail

// Lift a factorization of a monic squarefree polynomial from F_p to
// Z/p^K for some p^K >= target_modulus (K a power-of-two exponent).
// `factors` must be monic, pairwise coprime mod p, with product f mod p.
// Returns the lifted factors and the modulus actually reached.
struct HenselResult {
    std::vector<ModPoly> factors;
    mpz_class modulus;
};

inline HenselResult hensel_lift(const IntPoly& f, const std::vector<ZpPoly>& factors,
                                const mpz_class& target_modulus) {
    if (factors.empty()) throw std::domain_error("hensel_lift: no factors");
    const std::uint64_t p = factors.front().modulus();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class reached = pz;
    while (reached < target_modulus) reached *= reached;

    // Recursive two-way split; at each node lift (G, H) from p to `reached`.
    struct Rec {
        const mpz_class& reached;
        std::uint64_t p;
        std::vector<ModPoly> out;

        void run(const IntPoly& node_f, const std::vector<ZpPoly>& facs) {
            if (facs.size() == 1) {
                out.push_back(ModPoly::from_int_poly(node_f, reached));
                return;
            }
            std::size_t half = facs.size() / 2;
            std::vector<ZpPoly> left(facs.begin(), facs.begin() + half);
            std::vector<ZpPoly> right(facs.begin() + half, facs.end());
            ZpPoly g0 = left.front();
            for (std::size_t i = 1; i < left.size(); ++i) g0 = g0 * left[i];
            ZpPoly h0 = right.front();
            for (std::size_t i = 1; i < right.size(); ++i) h0 = h0 * right[i];
            ZpXgcd bez = zp_xgcd(g0, h0);
            if (bez.g.degree() != 0)
                throw std::domain_error("hensel_lift: factors not coprime mod p");

            mpz_class pz2(static_cast<unsigned long>(p));
            detail::HenselPair pair{
                ModPoly::from_zp_poly(g0, pz2), ModPoly::from_zp_poly(h0, pz2),
                ModPoly::from_zp_poly(bez.s, pz2), ModPoly::from_zp_poly(bez.t, pz2)};
            mpz_class m = pz2;
            while (m < reached) {
                pair = detail::hensel_step(node_f, pair, m);
                m *= m;
            }
            IntPoly gf = pair.g.reduced(reached).to_int_poly();
            IntPoly hf = pair.h.reduced(reached).to_int_poly();
            run(gf, left);
            run(hf, right);
        }
    };

    Rec rec{reached, p, {}};
    rec.run(f, factors);
    return {std::move(rec.out), reached};
}

} // namespace torsion6
