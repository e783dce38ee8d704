// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torsion6/int_poly.hpp"
#include "torsion6/rat_poly.hpp"

namespace torsion6 {

using json = nlohmann::json;

inline std::string hex_seed(std::uint64_t seed) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(seed));
    return std::string(buf);
}

inline std::uint64_t parse_hex_seed(const std::string& s) {
    if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
        throw std::invalid_argument("seed must be a 0x-prefixed hex string");
    return std::stoull(s.substr(2), nullptr, 16);
}

// Polynomials serialize as degree-ascending [numerator, denominator] string
// pairs; integers carry denominator "1".
inline json rat_poly_to_json(const RatPoly& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(json::array(
            {c.get_num().get_str(), c.get_den().get_str()}));
    return arr;
}

inline json int_poly_to_json(const IntPoly& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(json::array({c.get_str(), "1"}));
    return arr;
}

inline RatPoly rat_poly_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<mpq_class> c;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("polynomial JSON entries must be [num, den] pairs");
        mpq_class q(mpz_class(e[0].get<std::string>()),
                    mpz_class(e[1].get<std::string>()));
        q.canonicalize();
        c.push_back(q);
    }
    return RatPoly(std::move(c));
}

inline IntPoly int_poly_from_json(const json& arr) {
    RatPoly f = rat_poly_from_json(arr);
    std::vector<mpz_class> c;
    for (const auto& q : f.coeffs()) {
        if (q.get_den() != 1)
            throw std::invalid_argument("expected integer polynomial");
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

// Canonical human-readable form: degree-ascending, every coefficient
// printed (zeros included), rationals as num/den with /1 omitted.
inline std::string canonical_text(const RatPoly& f) {
    if (f.is_zero()) return "0";
    auto coeff_str = [](const mpq_class& c) {
        std::string s = c.get_num().get_str();
        if (c.get_den() != 1) s += "/" + c.get_den().get_str();
        return s;
    };
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        mpq_class c = f.coeff(i);
        if (i == 0) {
            out = coeff_str(c);
        } else {
            bool neg = c < 0;
            mpq_class a = neg ? mpq_class(-c) : c;
            out += neg ? " - " : " + ";
            out += coeff_str(a);
            out += "*x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string canonical_text(const IntPoly& f) { return canonical_text(RatPoly(f)); }

}  // namespace torsion6
