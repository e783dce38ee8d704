// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// Nonsingular short Weierstrass curve y^2 = x^3 + a x + b over Q.
class EllipticCurve {
public:
    EllipticCurve(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
        if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0)
            throw std::domain_error("EllipticCurve: singular model");
    }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    mpq_class discriminant() const {
        return mpq_class(-16) * (4 * a_ * a_ * a_ + 27 * b_ * b_);
    }

    mpq_class j_invariant() const {
        mpq_class c = 4 * a_ * a_ * a_;
        mpq_class j = 1728 * c / (c + 27 * b_ * b_);
        j.canonicalize();
        return j;
    }

    bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

    friend bool operator==(const EllipticCurve& e, const EllipticCurve& f) {
        return e.a_ == f.a_ && e.b_ == f.b_;
    }
    friend bool operator!=(const EllipticCurve& e, const EllipticCurve& f) { return !(e == f); }

    std::string to_string() const {
        auto q = [](const mpq_class& v) {
            std::string s = v.get_num().get_str();
            if (v.get_den() != 1) s += "/" + v.get_den().get_str();
            return s;
        };
        return "y^2 = x^3 + (" + q(a_) + ")*x + (" + q(b_) + ")";
    }

    json to_json() const {
        json j;
        j["a"] = json::array({a_.get_num().get_str(), a_.get_den().get_str()});
        j["b"] = json::array({b_.get_num().get_str(), b_.get_den().get_str()});
        mpq_class delta = discriminant();
        j["delta"] = json::array({delta.get_num().get_str(), delta.get_den().get_str()});
        mpq_class jj = j_invariant();
        j["j"] = json::array({jj.get_num().get_str(), jj.get_den().get_str()});
        return j;
    }

    static EllipticCurve from_json(const json& j) {
        auto rd = [](const json& pair) {
            mpq_class v(mpz_class(pair.at(0).get<std::string>()),
                        mpz_class(pair.at(1).get<std::string>()));
            v.canonicalize();
            return v;
        };
        return EllipticCurve(rd(j.at("a")), rd(j.at("b")));
    }

private:
    mpq_class a_, b_;
};

// Affine point or the point at infinity.
struct Point {
    bool infinity = true;
    mpq_class x, y;

    Point() = default;
    Point(mpq_class px, mpq_class py) : infinity(false), x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    static Point at_infinity() { return Point(); }

    friend bool operator==(const Point& p, const Point& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
    friend bool operator<(const Point& p, const Point& q) {
        if (p.infinity != q.infinity) return p.infinity;  // O sorts first
        if (p.infinity) return false;
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    }

    json to_json() const {
        if (infinity) return json("infinity");
        json j;
        j["x"] = json::array({x.get_num().get_str(), x.get_den().get_str()});
        j["y"] = json::array({y.get_num().get_str(), y.get_den().get_str()});
        return j;
    }

    static Point from_json(const json& j) {
        if (j.is_string()) {
            if (j.get<std::string>() == "infinity") return at_infinity();
            throw std::invalid_argument("Point: unknown string form");
        }
        auto rd = [](const json& pair) {
            mpq_class v(mpz_class(pair.at(0).get<std::string>()),
                        mpz_class(pair.at(1).get<std::string>()));
            v.canonicalize();
            return v;
        };
        return Point(rd(j.at("x")), rd(j.at("y")));
    }
};

inline bool is_on_curve(const EllipticCurve& e, const Point& p) {
    if (p.infinity) return true;
    return p.y * p.y == p.x * p.x * p.x + e.a() * p.x + e.b();
}

inline Point negate(const Point& p) {
    if (p.infinity) return p;
    return Point(p.x, -p.y);
}

inline Point add(const EllipticCurve& e, const Point& p, const Point& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x) {
        if (p.y != q.y || p.y == 0) return Point::at_infinity();
        // Tangent line.
        mpq_class lambda = (3 * p.x * p.x + e.a()) / (2 * p.y);
        mpq_class x3 = lambda * lambda - 2 * p.x;
        mpq_class y3 = lambda * (p.x - x3) - p.y;
        return Point(std::move(x3), std::move(y3));
    }
    mpq_class lambda = (q.y - p.y) / (q.x - p.x);
    mpq_class x3 = lambda * lambda - p.x - q.x;
    mpq_class y3 = lambda * (p.x - x3) - p.y;
    return Point(std::move(x3), std::move(y3));
}

inline Point mul(const EllipticCurve& e, long n, Point p) {
    if (n < 0) {
        n = -n;
        p = negate(p);
    }
    Point acc = Point::at_infinity();
    while (n > 0) {
        if (n & 1) acc = add(e, acc, p);
        n >>= 1;
        if (n) p = add(e, p, p);
    }
    return acc;
}

// Order of p if it divides max_order, otherwise nullopt.
inline std::optional<int> point_order_bounded(const EllipticCurve& e, const Point& p,
                                              int max_order) {
    Point acc = Point::at_infinity();
    for (int k = 1; k <= max_order; ++k) {
        acc = add(e, acc, p);
        if (acc.infinity) return k;
    }
    return std::nullopt;
}

// A curve with the requested j-invariant: y^2 = x^3 + 1 for j = 0,
// y^2 = x^3 + x for j = 1728, otherwise a = 3j(1728-j), b = 2j(1728-j)^2.
inline EllipticCurve curve_from_j(const mpq_class& j) {
    if (j == 0) return EllipticCurve(mpq_class(0), mpq_class(1));
    if (j == 1728) return EllipticCurve(mpq_class(1), mpq_class(0));
    mpq_class t = 1728 - j;
    return EllipticCurve(3 * j * t, 2 * j * t * t);
}

inline EllipticCurve quadratic_twist(const EllipticCurve& e, const mpq_class& d) {
    if (d == 0) throw std::domain_error("quadratic_twist: d must be nonzero");
    return EllipticCurve(d * d * e.a(), d * d * d * e.b());
}

// Integral model with the given j-invariant, reduced by stripping every prime
// q with q^2 | a and q^3 | b (a twist operation, so the j-invariant is
// untouched).  Writing j = n/d in lowest terms, the starting model is
// a = 3n(1728d - n)d^2, b = 2n(1728d - n)^2 d^3.
inline EllipticCurve reduced_model_from_j(const mpq_class& j) {
    if (j == 0) return EllipticCurve(mpq_class(0), mpq_class(1));
    if (j == 1728) return EllipticCurve(mpq_class(1), mpq_class(0));
    mpq_class jc = j;
    jc.canonicalize();
    const mpz_class n = jc.get_num(), d = jc.get_den();
    mpz_class m = 1728 * d - n;
    mpz_class a = 3 * n * m * d * d;
    mpz_class b = 2 * n * m * m * d * d * d;
    // Candidate primes divide both a and b.
    mpz_class g = gcd(a, b);
    for (const auto& [q, unused] : factorize(g)) {
        (void)unused;
        mpz_class q2 = q * q, q3 = q2 * q;
        while (mpz_divisible_p(a.get_mpz_t(), q2.get_mpz_t()) &&
               mpz_divisible_p(b.get_mpz_t(), q3.get_mpz_t())) {
            a /= q2;
            b /= q3;
        }
    }
    return EllipticCurve(mpq_class(a), mpq_class(b));
}

}  // namespace torsion6
