// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "torsion6/elliptic.hpp"
#include "torsion6/int_poly.hpp"
#include "torsion6/util.hpp"

namespace torsion6 {

// x-only division polynomials of an integral model y^2 = x^3 + a x + b:
// psi~_n = psi_n for odd n and psi_n / (2y) for even n, both polynomials in
// x alone.  deg psi~_n = (n^2-1)/2 (n odd), (n^2-4)/2 (n even); the leading
// coefficient is n, respectively n/2.  The table is built bottom-up from the
// standard recurrences with F = 4(x^3 + a x + b) absorbing the (2y)^2 that
// appears according to the parity of the half-index.
inline std::vector<IntPoly> division_poly_table(const EllipticCurve& e, int nmax) {
    if (!e.is_integral())
        throw std::domain_error("division_poly: integral model required");
    if (nmax < 0) throw std::invalid_argument("division_poly: n must be >= 0");
    const mpz_class a = e.a().get_num(), b = e.b().get_num();
    std::vector<IntPoly> t(static_cast<std::size_t>(std::max(nmax, 4)) + 1);
    t[0] = IntPoly{};
    t[1] = IntPoly({mpz_class(1)});
    t[2] = IntPoly({mpz_class(1)});
    t[3] = IntPoly({-a * a, 12 * b, 6 * a, mpz_class(0), mpz_class(3)});
    t[4] = IntPoly({2 * (-8 * b * b - a * a * a), -8 * a * b, -10 * a * a, 40 * b, 10 * a,
                    mpz_class(0), mpz_class(2)});
    IntPoly F = IntPoly({4 * b, 4 * a, mpz_class(0), mpz_class(4)});
    IntPoly F2 = F * F;
    for (int n = 5; n <= nmax; ++n) {
        if (n % 2 == 1) {
            int m = (n - 1) / 2;
            const IntPoly& A = t[static_cast<std::size_t>(m + 2)];
            const IntPoly& B = t[static_cast<std::size_t>(m)];
            const IntPoly& C = t[static_cast<std::size_t>(m - 1)];
            const IntPoly& D = t[static_cast<std::size_t>(m + 1)];
            IntPoly left = A * B.pow(3);
            IntPoly right = C * D.pow(3);
            t[static_cast<std::size_t>(n)] =
                (m % 2 == 0) ? F2 * left - right : left - F2 * right;
        } else {
            int m = n / 2;
            const IntPoly& A = t[static_cast<std::size_t>(m + 2)];
            const IntPoly& B = t[static_cast<std::size_t>(m - 1)];
            const IntPoly& C = t[static_cast<std::size_t>(m - 2)];
            const IntPoly& D = t[static_cast<std::size_t>(m + 1)];
            t[static_cast<std::size_t>(n)] =
                t[static_cast<std::size_t>(m)] * (A * B * B - C * D * D);
        }
    }
    t.resize(static_cast<std::size_t>(std::max(nmax, 0)) + 1);
    return t;
}

inline IntPoly division_poly(const EllipticCurve& e, int n) {
    if (n < 0) throw std::invalid_argument("division_poly: n must be >= 0");
    return division_poly_table(e, n)[static_cast<std::size_t>(n)];
}

// Primitive division polynomials: f_1 = 1, f_2 = x^3 + a x + b by convention,
// and for n >= 3, f_n = psi~_n / prod of f_d over divisors d of n with
// 3 <= d < n.  The roots of f_n (n >= 3) are exactly the x-coordinates of
// points of exact order n; f_2 is excluded from every divisor product since
// psi~_n carries no two-torsion roots.
inline IntPoly primitive_division_poly(const EllipticCurve& e, int n) {
    if (n < 1) throw std::invalid_argument("primitive_division_poly: n must be >= 1");
    if (!e.is_integral())
        throw std::domain_error("division_poly: integral model required");
    if (n == 1) return IntPoly({mpz_class(1)});
    if (n == 2)
        return IntPoly({e.b().get_num(), e.a().get_num(), mpz_class(0), mpz_class(1)});
    std::vector<IntPoly> t = division_poly_table(e, n);
    std::map<int, IntPoly> prim;
    for (int m = 3; m <= n; ++m) {
        if (n % m != 0) continue;
        IntPoly f = t[static_cast<std::size_t>(m)];
        for (const auto& [d, fd] : prim) {
            if (m % d != 0) continue;
            auto q = f.try_divide(fd);
            if (!q) throw std::logic_error("primitive_division_poly: division convention violated");
            f = *q;
        }
        prim[m] = std::move(f);
    }
    return prim.at(n);
}

// Degree of f_n: n^2/2 * prod over primes p | n of (1 - p^-2), valid for
// n >= 3 (and equal to 3 for n = 2 under the convention above).
inline int primitive_division_poly_degree(int n) {
    if (n < 1) throw std::invalid_argument("primitive_division_poly_degree: n must be >= 1");
    if (n == 1) return 0;
    if (n == 2) return 3;
    long num = static_cast<long>(n) * n, den = 2;
    for (const auto& [p, unused] : factorize(mpz_class(n))) {
        (void)unused;
        long pl = mpz_get_si(p.get_mpz_t());
        num *= pl * pl - 1;
        den *= pl * pl;
    }
    return static_cast<int>(num / den);
}

}  // namespace torsion6
