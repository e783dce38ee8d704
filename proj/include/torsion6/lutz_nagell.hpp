// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "torsion6/elliptic.hpp"
#include "torsion6/factor.hpp"
#include "torsion6/serialize.hpp"

namespace torsion6 {

// Rational torsion of an integral model, as a group report.  invariants is
// {} for the trivial group, {m} for C_m, {2, m} for C2 x C_m.
struct TorsionGroup {
    std::vector<Point> points;  // sorted, infinity first
    std::vector<int> invariants;
    int order = 1;

    std::string structure() const {
        if (invariants.empty()) return "trivial";
        if (invariants.size() == 1) return "C" + std::to_string(invariants[0]);
        return "C" + std::to_string(invariants[0]) + "xC" + std::to_string(invariants[1]);
    }

    json to_json() const {
        json j;
        j["order"] = order;
        j["invariants"] = invariants;
        j["structure"] = structure();
        json pts = json::array();
        for (const auto& p : points) pts.push_back(p.to_json());
        j["points"] = std::move(pts);
        return j;
    }
};

// Torsion points by the integral-coordinate descent: a finite-order affine
// point on an integral short Weierstrass model has integer coordinates with
// y = 0 or y^2 | 4a^3 + 27b^2; candidates are confirmed by checking that some
// multiple below the rational torsion ceiling (12) hits the identity.
inline TorsionGroup rational_torsion(const EllipticCurve& e) {
    if (!e.is_integral())
        throw std::domain_error("rational_torsion: integral model required");
    constexpr int kMaxOrder = 12;
    const mpz_class a = e.a().get_num(), b = e.b().get_num();
    std::set<Point> pts;
    pts.insert(Point::at_infinity());
    RatPoly cubic({mpq_class(b), mpq_class(a), mpq_class(0), mpq_class(1)});
    for (const auto& r : rational_roots(cubic))
        if (r.get_den() == 1) pts.insert(Point(r, mpq_class(0)));
    mpz_class disc = 4 * a * a * a + 27 * b * b;
    if (disc < 0) disc = -disc;
    for (const auto& y : divisors(disc)) {
        mpz_class y2 = y * y;
        if (!mpz_divisible_p(disc.get_mpz_t(), y2.get_mpz_t())) continue;
        RatPoly shifted({mpq_class(b - y2), mpq_class(a), mpq_class(0), mpq_class(1)});
        for (const auto& r : rational_roots(shifted)) {
            if (r.get_den() != 1) continue;
            Point p(r, mpq_class(y));
            if (point_order_bounded(e, p, kMaxOrder)) {
                pts.insert(p);
                pts.insert(negate(p));
            }
        }
    }
    TorsionGroup g;
    g.points.assign(pts.begin(), pts.end());
    g.order = static_cast<int>(g.points.size());
    int two_torsion = 1;
    for (const auto& p : g.points)
        if (!p.infinity && p.y == 0) ++two_torsion;
    if (g.order == 1) {
        g.invariants = {};
    } else if (two_torsion == 4) {
        g.invariants = {2, g.order / 2};
    } else {
        g.invariants = {g.order};
    }
    return g;
}

}  // namespace torsion6
