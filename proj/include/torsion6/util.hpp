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
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torsion6 {

// Deterministic PRNG used wherever an operation needs randomness
// (equal-degree splitting, property-test inputs). splitmix64.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// ASCII bytes of "D1V1S0R" packed big-endian; default seed for all
// seeded operations.
inline constexpr std::uint64_t kDefaultSeed = 0x0044315631533052ULL;

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}
inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t h = 1469598103934665603ULL) {
    return fnv1a(s.data(), s.size(), h);
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
    ++n;
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

namespace detail {
inline std::uint64_t pollard_rho(std::uint64_t n, SplitMix64& rng) {
    if ((n & 1) == 0) return 2;
    while (true) {
        std::uint64_t x = rng.below(n - 2) + 2, y = x, c = rng.below(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}
} // namespace detail

// Prime factorization of |n|. Trial division, then Pollard rho for 64-bit
// leftovers. Throws if a cofactor is too large to certify; callers in this
// library only factor small data (discriminants of reduced models, divisor
// enumerations, squarefree checks).
inline std::map<mpz_class, int> factorize(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (std::uint64_t p = 2; p < 100000 && mpz_cmp_ui(n.get_mpz_t(), 1) != 0;
         p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[mpz_class(static_cast<unsigned long>(p))] = e;
        }
        if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) break;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        if (root < p) break; // remaining cofactor is prime
    }
    if (n == 1) return out;
    // remaining cofactor: prime, or split with rho (must fit 64 bits)
    std::vector<mpz_class> stack{n};
    SplitMix64 rng(0x726f68'70ULL);
    while (!stack.empty()) {
        mpz_class m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            out[m] += 1;
            continue;
        }
        if (!m.fits_ulong_p())
            throw std::domain_error("factorize: composite cofactor too large");
        std::uint64_t f = detail::pollard_rho(m.get_ui(), rng);
        stack.push_back(mpz_class(static_cast<unsigned long>(f)));
        stack.push_back(m / static_cast<unsigned long>(f));
    }
    return out;
}

// All positive divisors of |n| (n must factor with factorize()).
inline std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

inline mpz_class squarefree_kernel(const mpz_class& n) {
    if (n == 0) return 0;
    mpz_class k = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e & 1) k *= p;
    return k;
}

inline bool is_square_mpz(const mpz_class& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

inline bool is_square_mpq(const mpq_class& q) {
    return q >= 0 && is_square_mpz(q.get_num()) && is_square_mpz(q.get_den());
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / gcd_u64(a, b) * b;
}

} // namespace torsion6
