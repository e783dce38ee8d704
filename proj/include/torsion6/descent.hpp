// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torsion6/elliptic.hpp"
#include "torsion6/factor.hpp"
#include "torsion6/int_poly.hpp"
#include "torsion6/serialize.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

namespace detail {

inline int valuation(mpz_class m, const mpz_class& p) {
    int v = 0;
    while (m != 0 && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

inline bool is_qr_mod(const mpz_class& u, std::uint64_t p) {
    mpz_class r = u % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return powmod_u64(mpz_get_ui(r.get_mpz_t()), (p - 1) / 2, p) == 1;
}

// Does z^2 = q(t) have a solution with t in Z_p (z = 0 allowed)?  The branch
// t = c + p^k Z_p is resolved by three facts.  (1) q(c) = 0, or the Newton
// condition v(q(c)) > 2 v(q'(c)) holds: a root of q exists in Z_p, giving
// z = 0.  (2) The value class is stable on the branch -- every t there has
// v(q(t)) = e and the same unit class mod p (mod 8 for p = 2), because the
// change q(t) - q(c) has valuation >= min(k + v(q'(c)), 2k) beyond e: then
// the branch is soluble iff e is even and the unit is a square unit.
// (3) Otherwise split into the p sub-branches one level deeper.
inline bool branch_soluble(const IntPoly& q, const IntPoly& qd, std::uint64_t p,
                           const mpz_class& c, int k, int cap) {
    if (k > cap) throw std::logic_error("qp_soluble: residue tree exceeded depth bound");
    mpz_class m = q.eval(c);
    if (m == 0) return true;
    const mpz_class P(static_cast<unsigned long>(p));
    int e = valuation(m, P);
    mpz_class dm = qd.eval(c);
    int dv = dm == 0 ? cap + 100 : valuation(dm, P);
    if (e > 2 * dv) return true;
    const long need = (p == 2) ? e + 3 : e + 1;
    const long margin = std::min<long>(static_cast<long>(k) + dv, 2L * k);
    if (margin >= need) {
        if (e % 2 != 0) return false;
        mpz_class u = m;
        for (int i = 0; i < e; ++i) u /= P;
        if (p == 2) {
            mpz_class r = u % 8;
            if (r < 0) r += 8;
            return r == 1;
        }
        return is_qr_mod(u, p);
    }
    mpz_class step = 1;
    for (int i = 0; i < k; ++i) step *= P;
    for (std::uint64_t i = 0; i < p; ++i) {
        mpz_class ci = c + mpz_class(static_cast<unsigned long>(i)) * step;
        if (branch_soluble(q, qd, p, ci, k + 1, cap)) return true;
    }
    return false;
}

inline bool qp_soluble(const IntPoly& q, std::uint64_t p) {
    IntPoly qd = q.derivative();
    mpz_class res = IntPoly::resultant(q, qd);
    if (res == 0) throw std::domain_error("qp_soluble: polynomial not squarefree");
    int cap = 2 * valuation(res, mpz_class(static_cast<unsigned long>(p))) + 12;
    return branch_soluble(q, qd, p, mpz_class(0), 0, cap);
}

// Real points on z^2 = d t^4 + A t^2 + C (projectively including (1:0)).
inline bool real_soluble(const mpz_class& d, const mpz_class& A, const mpz_class& C) {
    if (d > 0 || C > 0) return true;
    return A >= 0 && A * A - 4 * d * C >= 0;
}

}  // namespace detail

// Everywhere-local solvability of the 2-covering z^2 = d u^4 + A u^2 v^2 +
// (B/d) v^4 attached to y^2 = x (x^2 + A x + B) and a squarefree d | B.
inline bool torsor_everywhere_locally_soluble(const mpz_class& d, const mpz_class& A,
                                              const mpz_class& B,
                                              const std::vector<std::uint64_t>& bad_primes) {
    mpz_class C = B / d;
    if (!detail::real_soluble(d, A, C)) return false;
    IntPoly chart1({C, mpz_class(0), A, mpz_class(0), d});
    IntPoly chart2({d, mpz_class(0), A, mpz_class(0), C});
    for (std::uint64_t p : bad_primes)
        if (!detail::qp_soluble(chart1, p) && !detail::qp_soluble(chart2, p)) return false;
    return true;
}

struct DescentCertificate {
    EllipticCurve curve;
    mpq_class two_torsion_x;        // chosen 2-torsion abscissa
    mpz_class A, B;                 // y^2 = x (x^2 + A x + B)
    mpz_class dual_A, dual_B;
    std::vector<mpz_class> image;       // ELS squarefree d for the curve
    std::vector<mpz_class> dual_image;  // ELS squarefree d for the dual
    int rank_bound = 0;

    json to_json() const {
        json j;
        j["curve"] = curve.to_json();
        j["two_torsion_x"] = json::array(
            {two_torsion_x.get_num().get_str(), two_torsion_x.get_den().get_str()});
        j["A"] = A.get_str();
        j["B"] = B.get_str();
        j["dual_A"] = dual_A.get_str();
        j["dual_B"] = dual_B.get_str();
        json im = json::array(), dim = json::array();
        for (const auto& d : image) im.push_back(d.get_str());
        for (const auto& d : dual_image) dim.push_back(d.get_str());
        j["image"] = std::move(im);
        j["dual_image"] = std::move(dim);
        j["rank_bound"] = rank_bound;
        return j;
    }
};

namespace detail {

inline std::vector<mpz_class> squarefree_divisors_signed(const mpz_class& B) {
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [p, unused] : factorize(mpz_class(abs(B)))) {
        (void)unused;
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
    }
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> bad_primes_for(const mpz_class& A, const mpz_class& B) {
    mpz_class N = 2 * B * (A * A - 4 * B);
    std::vector<std::uint64_t> ps;
    for (const auto& [p, unused] : factorize(mpz_class(abs(N)))) {
        (void)unused;
        if (!p.fits_ulong_p())
            throw std::domain_error("two_isogeny_descent: bad prime exceeds word size");
        ps.push_back(mpz_get_ui(p.get_mpz_t()));
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

inline std::vector<mpz_class> isogeny_selmer_image(const mpz_class& A, const mpz_class& B) {
    std::vector<std::uint64_t> bad = bad_primes_for(A, B);
    std::vector<mpz_class> image;
    for (const auto& d : squarefree_divisors_signed(B))
        if (torsor_everywhere_locally_soluble(d, A, B, bad)) image.push_back(d);
    // The ELS classes form a subgroup of the squarefree classes, so the count
    // must be a power of two.
    std::size_t n = image.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::logic_error("two_isogeny_descent: image size is not a power of two");
    return image;
}

inline int log2_exact(std::size_t n) {
    int k = 0;
    while (n > 1) {
        n >>= 1;
        ++k;
    }
    return k;
}

}  // namespace detail

// Descent via the 2-isogeny attached to a rational 2-torsion point.  The
// curve is shifted to y^2 = x (x^2 + A x + B) at the smallest rational root;
// the dual curve is y^2 = x (x^2 - 2A x + (A^2 - 4B)).  Each candidate class
// d is kept when its 2-covering passes the real test and a residue-tree
// search over Q_p for every bad prime; the Mordell-Weil rank is then at most
// dim_2(image) + dim_2(dual image) - 2.
inline DescentCertificate two_isogeny_descent(const EllipticCurve& e) {
    if (!e.is_integral())
        throw std::domain_error("two_isogeny_descent: integral model required");
    RatPoly cubic({e.b(), e.a(), mpq_class(0), mpq_class(1)});
    std::vector<mpq_class> roots = rational_roots(cubic);
    if (roots.empty())
        throw std::domain_error("two_isogeny_descent: no rational two-torsion");
    const mpq_class r = roots.front();
    const mpz_class rz = r.get_num();  // integral model: the root is an integer
    const mpz_class A = 3 * rz;
    const mpz_class B = 3 * rz * rz + e.a().get_num();
    const mpz_class dual_A = -2 * A;
    const mpz_class dual_B = A * A - 4 * B;
    std::vector<mpz_class> image = detail::isogeny_selmer_image(A, B);
    std::vector<mpz_class> dual_image = detail::isogeny_selmer_image(dual_A, dual_B);
    int bound = detail::log2_exact(image.size()) + detail::log2_exact(dual_image.size()) - 2;
    if (bound < 0)
        throw std::logic_error("two_isogeny_descent: inconsistent selmer dimensions");
    return DescentCertificate{e,      r,           A,
                              B,      dual_A,      dual_B,
                              image,  dual_image,  bound};
}

inline int descent_rank_bound(const EllipticCurve& e) { return two_isogeny_descent(e).rank_bound; }

}  // namespace torsion6
