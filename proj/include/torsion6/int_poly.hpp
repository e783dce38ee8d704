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

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torsion6/util.hpp"

namespace torsion6 {

// Dense univariate polynomial over Z.  Invariant: coefficient vector is
// empty (the zero polynomial) or has a nonzero leading entry.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    explicit IntPoly(const mpz_class& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit IntPoly(long constant) : IntPoly(mpz_class(constant)) {}

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(mpz_class(1)); }
    static IntPoly monomial(const mpz_class& a, int k) {
        if (a == 0) return zero();
        std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
        v.back() = a;
        return IntPoly(std::move(v));
    }
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& lc() const {
        static const mpz_class z{0};
        return c_.empty() ? z : c_.back();
    }
    mpz_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    IntPoly& operator*=(const mpz_class& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        return mul(a, b);
    }
    IntPoly& operator*=(const IntPoly& o) { return *this = mul(*this, o); }

    // this * x^k; a negative k discards the low |k| coefficients.
    IntPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k > 0) {
            std::vector<mpz_class> v(c_.size() + static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < c_.size(); ++i)
                v[i + static_cast<std::size_t>(k)] = c_[i];
            return IntPoly(std::move(v));
        }
        std::size_t drop = static_cast<std::size_t>(-static_cast<long>(k));
        if (drop >= c_.size()) return zero();
        std::vector<mpz_class> v(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end());
        return IntPoly(std::move(v));
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<mpz_class> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            v[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(v));
    }

    mpz_class eval(const mpz_class& x0) const {
        mpz_class r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
        return r;
    }
    mpq_class eval(const mpq_class& x0) const {
        mpq_class r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
        return r;
    }

    // f(x + t)
    IntPoly translated(const mpz_class& t) const {
        IntPoly r = zero();
        IntPoly lin(std::vector<mpz_class>{t, 1});
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * lin + IntPoly(c_[i]);
        return r;
    }

    // f(s * x)
    IntPoly scaled_arg(const mpz_class& s) const {
        std::vector<mpz_class> v = c_;
        mpz_class pw = 1;
        for (std::size_t i = 1; i < v.size(); ++i) {
            pw *= s;
            v[i] *= pw;
        }
        return IntPoly(std::move(v));
    }

    // x^deg * f(1/x)
    IntPoly reversed() const {
        std::vector<mpz_class> v(c_.rbegin(), c_.rend());
        return IntPoly(std::move(v));
    }

    // gcd of coefficients, nonnegative; content of 0 is 0.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // f / content(f); keeps the sign of the leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return zero();
        mpz_class g = content();
        IntPoly r = *this;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return r;
    }

    mpz_class max_abs_coeff() const {
        mpz_class m = 0;
        for (const auto& x : c_) {
            mpz_class a = abs(x);
            if (a > m) m = a;
        }
        return m;
    }

    // ceil(sqrt(sum c_i^2)), an upper bound used for factor-size estimates
    mpz_class l2_norm_ceil() const {
        mpz_class s = 0;
        for (const auto& x : c_) s += x * x;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
        if (r * r < s) ++r;
        return r;
    }

    // Exact quotient; throws std::domain_error if g does not divide *this.
    IntPoly divide_exact(const IntPoly& g) const {
        auto q = try_divide(g);
        if (!q) throw std::domain_error("IntPoly: inexact polynomial division");
        return *std::move(q);
    }

    std::optional<IntPoly> try_divide(const IntPoly& g) const {
        if (g.is_zero()) throw std::domain_error("IntPoly: division by zero");
        if (is_zero()) return zero();
        if (degree() < g.degree()) return std::nullopt;
        std::vector<mpz_class> q(static_cast<std::size_t>(degree() - g.degree()) + 1);
        std::vector<mpz_class> r = c_;
        int rd = degree();
        const int gd = g.degree();
        while (rd >= gd) {
            if (r[static_cast<std::size_t>(rd)] != 0) {
                if (!mpz_divisible_p(r[static_cast<std::size_t>(rd)].get_mpz_t(),
                                     g.lc().get_mpz_t()))
                    return std::nullopt;
                mpz_class qi = r[static_cast<std::size_t>(rd)] / g.lc();
                q[static_cast<std::size_t>(rd - gd)] = qi;
                for (int i = 0; i <= gd; ++i)
                    r[static_cast<std::size_t>(rd - gd + i)] -= qi * g.c_[static_cast<std::size_t>(i)];
            }
            --rd;
        }
        for (const auto& x : r)
            if (x != 0) return std::nullopt;
        return IntPoly(std::move(q));
    }

    // Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + rem.
    static IntPoly prem(const IntPoly& f, const IntPoly& g) {
        if (g.is_zero()) throw std::domain_error("IntPoly: prem by zero");
        IntPoly r = f;
        const int gd = g.degree();
        int e = f.degree() - gd + 1;
        const mpz_class& lg = g.lc();
        while (!r.is_zero() && r.degree() >= gd) {
            mpz_class s = r.lc();
            int k = r.degree() - gd;
            r *= lg;
            r -= (g * s).shifted(k);
            --e;
        }
        if (e > 0) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), lg.get_mpz_t(), static_cast<unsigned long>(e));
            r *= pw;
        }
        return r;
    }

    // Polynomial gcd over Z (subresultant PRS).  Result has positive
    // leading coefficient and content gcd(content(f), content(g)).
    static IntPoly gcd(const IntPoly& f, const IntPoly& g) {
        if (f.is_zero()) return g.lc() < 0 ? -g : g;
        if (g.is_zero()) return f.lc() < 0 ? -f : f;
        mpz_class cont;
        mpz_gcd(cont.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
        IntPoly a = f.primitive_part(), b = g.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        mpz_class gco = 1, h = 1;
        while (true) {
            if (b.is_zero()) break;
            if (b.degree() == 0) { a = one(); break; }
            int delta = a.degree() - b.degree();
            IntPoly r = prem(a, b);
            a = b;
            mpz_class hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class div = gco * hp;
            b = r.divide_by_const(div);
            gco = a.lc();
            if (delta > 0) {
                mpz_class num;
                mpz_pow_ui(num.get_mpz_t(), gco.get_mpz_t(), static_cast<unsigned long>(delta));
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
        }
        IntPoly res = a.primitive_part() * cont;
        if (res.lc() < 0) res = -res;
        return res;
    }

    // Resultant of f and g (subresultant PRS with sign bookkeeping).
    static mpz_class resultant(const IntPoly& f, const IntPoly& g) {
        if (f.is_zero() || g.is_zero()) return 0;
        IntPoly a = f.primitive_part(), b = g.primitive_part();
        mpz_class ca = f.content(), cb = g.content();
        mpz_class s;
        {
            mpz_class t1, t2;
            mpz_pow_ui(t1.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(g.degree()));
            mpz_pow_ui(t2.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(f.degree()));
            s = t1 * t2;
        }
        int sign = 1;
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
            std::swap(a, b);
        }
        if (b.degree() == 0) {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), b.lc().get_mpz_t(), static_cast<unsigned long>(a.degree()));
            return s * sign * t;
        }
        mpz_class gco = 1, h = 1;
        while (true) {
            int delta = a.degree() - b.degree();
            if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
            IntPoly r = prem(a, b);
            a = b;
            mpz_class hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class div = gco * hp;
            b = r.divide_by_const(div);
            if (b.is_zero()) return 0;
            gco = a.lc();
            if (delta > 0) {
                mpz_class num;
                mpz_pow_ui(num.get_mpz_t(), gco.get_mpz_t(), static_cast<unsigned long>(delta));
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            if (b.degree() == 0) break;
        }
        // a has the degree of the last nonconstant remainder.
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), b.lc().get_mpz_t(), static_cast<unsigned long>(a.degree()));
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(a.degree() - 1));
        mpz_class out;
        mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return s * sign * out;
    }

    // disc(f) = (-1)^(n(n-1)/2) * resultant(f, f') / lc(f)
    static mpz_class discriminant(const IntPoly& f) {
        if (f.degree() < 1) throw std::domain_error("IntPoly: discriminant of constant");
        mpz_class r = resultant(f, f.derivative());
        mpz_class out;
        mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
        int n = f.degree();
        if (((static_cast<long>(n) * (n - 1)) / 2) & 1) out = -out;
        return out;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            mpz_class mag = abs(a);
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

    // Parses expressions like "x^6 - 75*x - 262", "2x^3+1", "-x".
    static IntPoly parse(const std::string& text, const std::string& var = "x");

    std::uint64_t hash() const {
        std::uint64_t h = fnv1a("IntPoly", 7);
        for (const auto& x : c_) {
            std::string s = x.get_str();
            h = fnv1a(s.data(), s.size(), h);
            h = fnv1a(",", 1, h);
        }
        return h;
    }

private:
    std::vector<mpz_class> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    IntPoly divide_by_const(const mpz_class& d) const {
        IntPoly r = *this;
        for (auto& x : r.c_)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    static IntPoly mul(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        const std::size_t na = a.c_.size(), nb = b.c_.size();
        if (na * nb <= 4096) return mul_schoolbook(a, b);
        return mul_kronecker(a, b);
    }

    static IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0)
                    mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                               b.c_[j].get_mpz_t());
        }
        return IntPoly(std::move(out));
    }

    // Kronecker substitution: evaluate nonnegative polynomials at 2^(8*slot)
    // and multiply once with GMP; slot width is chosen so that convolution
    // coefficients cannot overflow their slot.
    static std::vector<mpz_class> kron_nonneg(const std::vector<mpz_class>& a,
                                              const std::vector<mpz_class>& b,
                                              std::size_t slot) {
        std::vector<unsigned char> bufa(a.size() * slot, 0), bufb(b.size() * slot, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0)
                mpz_export(bufa.data() + i * slot, nullptr, -1, 1, 0, 0, a[i].get_mpz_t());
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0)
                mpz_export(bufb.data() + i * slot, nullptr, -1, 1, 0, 0, b[i].get_mpz_t());
        mpz_class A, B;
        mpz_import(A.get_mpz_t(), bufa.size(), -1, 1, 0, 0, bufa.data());
        mpz_import(B.get_mpz_t(), bufb.size(), -1, 1, 0, 0, bufb.data());
        mpz_class C = A * B;
        const std::size_t nc = a.size() + b.size() - 1;
        std::vector<unsigned char> bufc(nc * slot + 16, 0);
        mpz_export(bufc.data(), nullptr, -1, 1, 0, 0, C.get_mpz_t());
        std::vector<mpz_class> out(nc);
        for (std::size_t i = 0; i < nc; ++i)
            mpz_import(out[i].get_mpz_t(), slot, -1, 1, 0, 0, bufc.data() + i * slot);
        return out;
    }

    static IntPoly mul_kronecker(const IntPoly& a, const IntPoly& b) {
        std::size_t bits_a = 1, bits_b = 1;
        for (const auto& x : a.c_)
            if (x != 0) bits_a = std::max(bits_a, mpz_sizeinbase(x.get_mpz_t(), 2));
        for (const auto& x : b.c_)
            if (x != 0) bits_b = std::max(bits_b, mpz_sizeinbase(x.get_mpz_t(), 2));
        std::size_t nmin = std::min(a.c_.size(), b.c_.size());
        std::size_t lbits = 0;
        while ((1ULL << lbits) < nmin) ++lbits;
        std::size_t slot = (bits_a + bits_b + lbits + 1 + 7) / 8;

        const std::size_t na = a.c_.size(), nb = b.c_.size();
        std::vector<mpz_class> ap(na), an(na), bp(nb), bn(nb);
        for (std::size_t i = 0; i < na; ++i)
            (a.c_[i] >= 0 ? ap[i] : an[i]) = abs(a.c_[i]);
        for (std::size_t i = 0; i < nb; ++i)
            (b.c_[i] >= 0 ? bp[i] : bn[i]) = abs(b.c_[i]);

        auto pp = kron_nonneg(ap, bp, slot);
        auto nn = kron_nonneg(an, bn, slot);
        auto pn = kron_nonneg(ap, bn, slot);
        auto np = kron_nonneg(an, bp, slot);
        std::vector<mpz_class> out(na + nb - 1);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = pp[i] + nn[i] - pn[i] - np[i];
        return IntPoly(std::move(out));
    }
};

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    const std::string& var;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    bool at_var() {
        skip_ws();
        return s.compare(pos, var.size(), var) == 0;
    }

    // factor := INT [ '*'? var [ '^' INT ] ]  |  var [ '^' INT ]
    IntPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_integer();
            have_coeff = true;
        }
        int exp = 0;
        skip_ws();
        bool starred = false;
        if (have_coeff && eat('*')) starred = true;
        if (at_var()) {
            pos += var.size();
            exp = 1;
            if (eat('^')) {
                mpz_class e = parse_integer();
                if (!e.fits_sint_p() || e < 0) fail("exponent out of range");
                exp = static_cast<int>(e.get_si());
            }
        } else {
            if (starred) fail("expected variable after '*'");
            if (!have_coeff) fail("expected coefficient or variable");
        }
        return IntPoly::monomial(coeff, exp);
    }

    // term := factor ( '*' factor )*
    IntPoly parse_term() {
        IntPoly t = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                t *= parse_factor();
            } else {
                break;
            }
        }
        return t;
    }

    IntPoly parse_sum() {
        IntPoly total = IntPoly::zero();
        int sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        while (true) {
            IntPoly t = parse_term();
            total += sign < 0 ? -t : t;
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return total;
    }
};

} // namespace detail

inline IntPoly IntPoly::parse(const std::string& text, const std::string& var) {
    detail::PolyParser p{text, 0, var};
    return p.parse_sum();
}

} // namespace torsion6
