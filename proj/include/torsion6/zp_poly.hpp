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

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "torsion6/int_poly.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// Dense polynomial over F_p for an odd word-sized prime p (p < 2^31).
// This is the workhorse for distinct-degree / equal-degree factorization
// and for squarefreeness tests at witness primes.
class ZpPoly {
public:
    ZpPoly() : p_(0) {}
    explicit ZpPoly(std::uint64_t p) : p_(p) {}
    ZpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
        : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        normalize();
    }

    static ZpPoly from_int_poly(const IntPoly& f, std::uint64_t p) {
        if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p))
            throw std::domain_error("ZpPoly: modulus must be a word prime");
        std::vector<std::uint64_t> v(f.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
        }
        return ZpPoly(p, std::move(v));
    }

    static ZpPoly xpoly(std::uint64_t p) { return ZpPoly(p, {0, 1}); }
    static ZpPoly constant(std::uint64_t p, std::uint64_t a) { return ZpPoly(p, {a}); }

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size()))
                   ? 0
                   : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool operator==(const ZpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const ZpPoly& o) const { return !(*this == o); }

    friend ZpPoly operator+(const ZpPoly& a, const ZpPoly& b) {
        a.check(b);
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::uint64_t s = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
            v[i] = s >= a.p_ ? s - a.p_ : s;
        }
        return ZpPoly(a.p_, std::move(v));
    }
    friend ZpPoly operator-(const ZpPoly& a, const ZpPoly& b) {
        a.check(b);
        std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::uint64_t x = a.coeff(static_cast<int>(i));
            std::uint64_t y = b.coeff(static_cast<int>(i));
            v[i] = x >= y ? x - y : x + a.p_ - y;
        }
        return ZpPoly(a.p_, std::move(v));
    }
    friend ZpPoly operator*(const ZpPoly& a, const ZpPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return ZpPoly(a.p_);
        std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t k = 0; k < v.size(); ++k) {
            unsigned __int128 acc = 0;
            std::size_t lo = k >= b.c_.size() - 1 ? k - (b.c_.size() - 1) : 0;
            std::size_t hi = std::min(k, a.c_.size() - 1);
            for (std::size_t i = lo; i <= hi; ++i)
                acc += static_cast<unsigned __int128>(a.c_[i]) * b.c_[k - i];
            v[k] = static_cast<std::uint64_t>(acc % a.p_);
        }
        return ZpPoly(a.p_, std::move(v));
    }
    ZpPoly operator*(std::uint64_t s) const {
        ZpPoly r = *this;
        s %= p_;
        for (auto& x : r.c_) x = mulmod_u64(x, s, p_);
        r.normalize();
        return r;
    }

    ZpPoly monic() const {
        if (is_zero()) return *this;
        return *this * powmod_u64(lc(), p_ - 2, p_);
    }

    static std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& f, const ZpPoly& g) {
        f.check(g);
        if (g.is_zero()) throw std::domain_error("ZpPoly: division by zero");
        if (f.degree() < g.degree()) return {ZpPoly(f.p_), f};
        const std::uint64_t p = f.p_;
        std::uint64_t inv = powmod_u64(g.lc(), p - 2, p);
        std::vector<std::uint64_t> r = f.c_;
        std::vector<std::uint64_t> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
        for (int k = f.degree() - g.degree(); k >= 0; --k) {
            std::uint64_t top = r[static_cast<std::size_t>(k + g.degree())];
            if (top == 0) continue;
            std::uint64_t qi = mulmod_u64(top, inv, p);
            q[static_cast<std::size_t>(k)] = qi;
            for (int i = 0; i <= g.degree(); ++i) {
                std::uint64_t& slot = r[static_cast<std::size_t>(k + i)];
                std::uint64_t sub = mulmod_u64(qi, g.c_[static_cast<std::size_t>(i)], p);
                slot = slot >= sub ? slot - sub : slot + p - sub;
            }
        }
        return {ZpPoly(p, std::move(q)), ZpPoly(p, std::move(r))};
    }
    static ZpPoly rem(const ZpPoly& f, const ZpPoly& g) { return divmod(f, g).second; }

    static ZpPoly gcd(ZpPoly a, ZpPoly b) {
        a.check(b);
        while (!b.is_zero()) {
            ZpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    ZpPoly derivative() const {
        if (c_.size() <= 1) return ZpPoly(p_);
        std::vector<std::uint64_t> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v[i - 1] = mulmod_u64(c_[i], i % p_, p_);
        return ZpPoly(p_, std::move(v));
    }

    bool is_squarefree() const {
        if (degree() <= 0) return true;
        return gcd(*this, derivative()).degree() == 0;
    }

    // base^e mod f, with an arbitrary-precision exponent.
    static ZpPoly powmod(const ZpPoly& base, const mpz_class& e, const ZpPoly& f) {
        ZpPoly r = constant(f.p_, 1), b = rem(base, f);
        const std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
        if (e == 0) return r;
        for (std::size_t i = nbits; i-- > 0;) {
            r = rem(r * r, f);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(r * b, f);
        }
        return r;
    }

    std::uint64_t eval(std::uint64_t x0) const {
        std::uint64_t r = 0;
        x0 %= p_;
        for (std::size_t i = c_.size(); i-- > 0;)
            r = (mulmod_u64(r, x0, p_) + c_[i]) % p_;
        return r;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const ZpPoly& o) const {
        if (p_ != o.p_) throw std::logic_error("ZpPoly: mixed moduli");
    }
};

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ZpXgcd {
    ZpPoly g, s, t;
};
inline ZpXgcd zp_xgcd(const ZpPoly& a, const ZpPoly& b) {
    const std::uint64_t p = a.modulus();
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0 = ZpPoly::constant(p, 1), s1 = ZpPoly(p);
    ZpPoly t0 = ZpPoly(p), t1 = ZpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = ZpPoly::divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        ZpPoly s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        ZpPoly t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    std::uint64_t inv = powmod_u64(r0.lc(), p - 2, p);
    return {r0 * inv, s0 * inv, t0 * inv};
}

// One distinct-degree slice: the (monic) product of all irreducible factors
// of a given degree.
struct DdfSlice {
    int factor_degree;
    ZpPoly product;
};

struct DdfResult {
    std::vector<DdfSlice> slices;
    // Cofactor whose irreducible factors all have degree > the scanned bound.
    ZpPoly cofactor;
};

// Distinct-degree factorization of a squarefree monic f, scanning factor
// degrees 1..bound only.  Stops early once the cofactor is certified
// irreducible (degree < 2*(i+1)).
inline DdfResult distinct_degree_factor(ZpPoly f, int bound) {
    if (f.degree() < 0) throw std::domain_error("distinct_degree_factor: zero input");
    f = f.monic();
    DdfResult out{{}, ZpPoly(f.modulus())};
    const std::uint64_t p = f.modulus();
    ZpPoly h = ZpPoly::xpoly(p);
    for (int i = 1; i <= bound && f.degree() > 0; ++i) {
        if (f.degree() < 2 * i) {
            // remaining cofactor is irreducible of degree deg f
            if (f.degree() <= bound)
                out.slices.push_back({f.degree(), f});
            else
                out.cofactor = f;
            return out;
        }
        h = ZpPoly::powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
        ZpPoly g = ZpPoly::gcd(h - ZpPoly::xpoly(p), f);
        if (g.degree() > 0) {
            out.slices.push_back({i, g});
            f = ZpPoly::divmod(f, g).first;
            h = ZpPoly::rem(h, f);
        }
    }
    out.cofactor = f;
    return out;
}

// Equal-degree factorization (Cantor-Zassenhaus) of a monic squarefree g
// all of whose irreducible factors have degree d.  Deterministic given rng.
inline std::vector<ZpPoly> equal_degree_factor(const ZpPoly& g, int d, SplitMix64& rng) {
    std::vector<ZpPoly> out;
    if (g.degree() == 0) return out;
    if (g.degree() % d != 0)
        throw std::domain_error("equal_degree_factor: degree mismatch");
    const std::uint64_t p = g.modulus();
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::vector<ZpPoly> stack{g.monic()};
    while (!stack.empty()) {
        ZpPoly u = stack.back();
        stack.pop_back();
        if (u.degree() == d) {
            out.push_back(u);
            continue;
        }
        while (true) {
            std::vector<std::uint64_t> rc(static_cast<std::size_t>(u.degree()));
            for (auto& x : rc) x = rng.next() % p;
            ZpPoly a(p, std::move(rc));
            if (a.degree() < 1) continue;
            ZpPoly t = ZpPoly::gcd(a, u);
            if (t.degree() == 0) {
                ZpPoly b(p, {});
                if (p == 2) {
                    // Char-2 splitting uses the trace map a + a^2 + ... + a^(2^(d-1)).
                    ZpPoly s = ZpPoly::rem(a, u);
                    for (int j = 0; j < d; ++j) {
                        b = b + s;
                        s = ZpPoly::rem(s * s, u);
                    }
                } else {
                    b = ZpPoly::powmod(a, e, u) - ZpPoly::constant(p, 1);
                }
                t = ZpPoly::gcd(b, u);
            }
            if (t.degree() > 0 && t.degree() < u.degree()) {
                stack.push_back(t);
                stack.push_back(ZpPoly::divmod(u, t).first);
                break;
            }
        }
    }
    return out;
}

} // namespace torsion6
