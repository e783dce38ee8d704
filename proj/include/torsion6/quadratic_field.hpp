// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torsion6/rat_poly.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// An element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d squarefree
// and neither 0 nor 1.  All arithmetic is exact.
class QuadElement {
public:
    QuadElement(mpq_class a, mpq_class b, mpz_class d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ == 0 || d_ == 1 || squarefree_kernel(d_) != d_)
            throw std::domain_error("QuadElement: d must be squarefree and not 0 or 1");
        a_.canonicalize();
        b_.canonicalize();
    }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElement conjugate() const { return QuadElement(a_, -b_, d_); }
    mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
    mpq_class trace() const { return 2 * a_; }

    friend QuadElement operator+(const QuadElement& x, const QuadElement& y) {
        x.check(y);
        return QuadElement(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadElement operator-(const QuadElement& x, const QuadElement& y) {
        x.check(y);
        return QuadElement(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }
    QuadElement operator-() const { return QuadElement(-a_, -b_, d_); }
    friend QuadElement operator*(const QuadElement& x, const QuadElement& y) {
        x.check(y);
        return QuadElement(x.a_ * y.a_ + mpq_class(x.d_) * x.b_ * y.b_,
                           x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }
    friend QuadElement operator/(const QuadElement& x, const QuadElement& y) {
        x.check(y);
        mpq_class n = y.norm();
        if (n == 0) throw std::domain_error("QuadElement: division by zero");
        QuadElement z = x * y.conjugate();
        return QuadElement(z.a_ / n, z.b_ / n, x.d_);
    }
    friend bool operator==(const QuadElement& x, const QuadElement& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

    std::string to_string() const {
        auto q = [](const mpq_class& v) {
            std::string s = v.get_num().get_str();
            if (v.get_den() != 1) s += "/" + v.get_den().get_str();
            return s;
        };
        if (b_ == 0) return q(a_);
        std::string s = q(a_);
        s += (b_ < 0 ? " - " : " + ");
        mpq_class ab = abs(b_);
        s += q(ab) + "*sqrt(" + d_.get_str() + ")";
        return s;
    }

private:
    void check(const QuadElement& other) const {
        if (d_ != other.d_)
            throw std::domain_error("QuadElement: mixed quadratic fields");
    }
    mpq_class a_, b_;
    mpz_class d_;
};

// Is alpha a square in Q(sqrt(d))?
//
// For rational alpha: alpha is a square of a rational or of a rational
// multiple of sqrt(d), i.e. alpha or alpha/d is a rational square.  For
// alpha = a + b*sqrt(d) with b != 0: if alpha = (x + y*sqrt(d))^2 then
// x^2 and d*y^2 are (a +- s)/2 with s^2 = norm(alpha), and conversely once
// (a +- s)/2 is a rational square x^2 with x != 0, y = b/(2x) satisfies
// d*y^2 = (a -+ s)/2 identically.
inline bool is_square(const QuadElement& alpha) {
    if (alpha.is_zero()) return true;
    if (alpha.is_rational()) {
        if (is_square_mpq(alpha.a())) return true;
        mpq_class over_d = alpha.a() / mpq_class(alpha.d());
        over_d.canonicalize();
        return is_square_mpq(over_d);
    }
    mpq_class n = alpha.norm();
    if (n < 0 || !is_square_mpq(n)) return false;
    mpq_class s(sqrt(n.get_num()), sqrt(n.get_den()));
    s.canonicalize();
    for (int sign : {1, -1}) {
        mpq_class t = (alpha.a() + (sign > 0 ? s : mpq_class(-s))) / 2;
        t.canonicalize();
        if (t != 0 && is_square_mpq(t)) return true;
    }
    return false;
}

// Is alpha in Q^x * (F^x)^2, i.e. a rational times a square of the field?
// Nonzero rationals always qualify.  For alpha not rational the criterion is
// that norm(alpha) is a nonzero rational square: if norm(alpha) = s^2 then
// (alpha + s)^2 = alpha * (trace(alpha) + 2s) with trace(alpha) + 2s rational
// and not zero for one choice of the sign of s.
inline bool is_rational_times_square(const QuadElement& alpha) {
    if (alpha.is_zero())
        throw std::domain_error("is_rational_times_square: zero element");
    if (alpha.is_rational()) return true;
    mpq_class n = alpha.norm();
    return n > 0 ? is_square_mpq(n) : false;
}

// Evaluate a rational polynomial at a quadratic-field element (Horner).
inline QuadElement eval_quad(const RatPoly& f, const QuadElement& x) {
    QuadElement acc(mpq_class(0), mpq_class(0), x.d());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x;
        acc = acc + QuadElement(f.coeff(i), mpq_class(0), x.d());
    }
    return acc;
}

// Roots of a polynomial of degree <= 2 inside Q(sqrt(d)).  For a quadratic
// with discriminant D, roots live in the field iff D = 0, D is a rational
// square, or D is d times a rational square.
inline std::vector<QuadElement> roots_in_field(const RatPoly& f, const mpz_class& d) {
    if (f.degree() > 2) throw std::domain_error("roots_in_field: degree must be <= 2");
    std::vector<QuadElement> roots;
    if (f.degree() < 1) return roots;
    if (f.degree() == 1) {
        roots.emplace_back(-f.coeff(0) / f.coeff(1), mpq_class(0), d);
        return roots;
    }
    mpq_class A = f.coeff(2), B = f.coeff(1), C = f.coeff(0);
    mpq_class D = B * B - 4 * A * C;
    D.canonicalize();
    if (D == 0) {
        roots.emplace_back(-B / (2 * A), mpq_class(0), d);
        return roots;
    }
    if (is_square_mpq(D)) {
        mpq_class s(sqrt(D.get_num()), sqrt(D.get_den()));
        s.canonicalize();
        roots.emplace_back((-B + s) / (2 * A), mpq_class(0), d);
        roots.emplace_back((-B - s) / (2 * A), mpq_class(0), d);
        return roots;
    }
    mpq_class over_d = D / mpq_class(d);
    over_d.canonicalize();
    if (over_d > 0 && is_square_mpq(over_d)) {
        mpq_class s(sqrt(over_d.get_num()), sqrt(over_d.get_den()));
        s.canonicalize();
        roots.emplace_back(-B / (2 * A), s / (2 * A), d);
        roots.emplace_back(-B / (2 * A), -s / (2 * A), d);
    }
    return roots;
}

}  // namespace torsion6
