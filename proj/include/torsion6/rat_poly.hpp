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

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torsion6/int_poly.hpp"

namespace torsion6 {

// Dense univariate polynomial over Q.  Same normalization invariant as
// IntPoly: empty vector or nonzero leading coefficient.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        normalize();
    }
    explicit RatPoly(const mpq_class& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c_.emplace_back(x);
    }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly(mpq_class(1)); }
    static RatPoly monomial(const mpq_class& a, int k) {
        if (a == 0) return zero();
        std::vector<mpq_class> v(static_cast<std::size_t>(k) + 1);
        v.back() = a;
        return RatPoly(std::move(v));
    }
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& lc() const {
        static const mpq_class z{0};
        return c_.empty() ? z : c_.back();
    }
    mpq_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly operator-() const {
        RatPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    RatPoly& operator+=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

    RatPoly& operator*=(const mpq_class& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
    friend RatPoly operator*(const mpq_class& s, RatPoly a) { return a *= s; }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(out));
    }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    mpq_class eval(const mpq_class& x0) const {
        mpq_class r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
        return r;
    }

    // f(g(x))
    RatPoly compose(const RatPoly& g) const {
        RatPoly r = zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * g + RatPoly(c_[i]);
        return r;
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<mpq_class> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v[i - 1] = c_[i] * mpq_class(static_cast<unsigned long>(i));
        return RatPoly(std::move(v));
    }

    RatPoly monic() const {
        if (is_zero()) return zero();
        RatPoly r = *this;
        mpq_class inv = 1 / lc();
        for (auto& x : r.c_) x *= inv;
        return r;
    }

    // Smallest positive rational s with s*f integral and primitive; returns
    // (pp, s) where pp = s*f as an IntPoly, so f = pp / s.
    std::pair<IntPoly, mpq_class> to_integral() const {
        if (is_zero()) return {IntPoly::zero(), mpq_class(1)};
        mpz_class den = 1;
        for (const auto& x : c_)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<mpz_class> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            mpq_class t = c_[i] * den;
            v[i] = t.get_num();
        }
        IntPoly ip{std::move(v)};
        mpz_class cont = ip.content();
        return {ip.primitive_part(), mpq_class(den) / mpq_class(cont)};
    }

    // Euclidean division: f = q*g + r with deg r < deg g.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
        if (g.is_zero()) throw std::domain_error("RatPoly: division by zero");
        RatPoly q = zero(), r = f;
        const int gd = g.degree();
        while (!r.is_zero() && r.degree() >= gd) {
            mpq_class t = r.lc() / g.lc();
            int k = r.degree() - gd;
            RatPoly m = monomial(t, k);
            q += m;
            r -= m * g;
        }
        return {q, r};
    }

    // Monic gcd over Q (delegates to the integer subresultant gcd).
    static RatPoly gcd(const RatPoly& f, const RatPoly& g) {
        if (f.is_zero()) return g.monic();
        if (g.is_zero()) return f.monic();
        IntPoly a = f.to_integral().first, b = g.to_integral().first;
        return RatPoly(IntPoly::gcd(a, b)).monic();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const mpq_class& a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            mpq_class mag = abs(a);
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1);
            if (i == 0) {
                os << mag.get_str();
            } else {
                if (!unit) os << mag.get_str() << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    std::vector<mpq_class> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

} // namespace torsion6
