// Copyright (c) the torsion6 authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torsion6/elliptic.hpp"
#include "torsion6/embedded_data.hpp"
#include "torsion6/int_poly.hpp"
#include "torsion6/rat_poly.hpp"
#include "torsion6/serialize.hpp"

namespace torsion6 {

// Torsion group shape C_m (+) C_n with m | n; m = 1 encodes the cyclic C_n.
struct TorsionGroupId {
    long m = 1;
    long n = 1;

    TorsionGroupId() = default;
    TorsionGroupId(long mm, long nn) : m(mm), n(nn) {
        if (m < 1 || n < 1 || n % m != 0)
            throw std::invalid_argument("TorsionGroupId: need m >= 1 and m | n");
    }

    long order() const { return m * n; }

    std::string name() const {
        if (m == 1) return "C" + std::to_string(n);
        return "C" + std::to_string(m) + "xC" + std::to_string(n);
    }

    friend bool operator==(const TorsionGroupId& x, const TorsionGroupId& y) {
        return x.m == y.m && x.n == y.n;
    }
    friend bool operator!=(const TorsionGroupId& x, const TorsionGroupId& y) { return !(x == y); }
    friend bool operator<(const TorsionGroupId& x, const TorsionGroupId& y) {
        return x.m != y.m ? x.m < y.m : x.n < y.n;
    }
};

// One typed fact: a payload plus the citation keys backing it.
struct KnowledgeRecord {
    std::string key;
    json payload;
    std::string note;                // optional prose annotation
    std::vector<std::string> refs;   // citation keys, always nonempty
    std::string provenance = "literature-static";

    json to_json() const {
        json j;
        j["payload"] = payload;
        if (!note.empty()) j["note"] = note;
        j["refs"] = refs;
        j["provenance"] = provenance;
        return j;
    }

    static KnowledgeRecord from_json(const std::string& key, const json& j) {
        KnowledgeRecord r;
        r.key = key;
        r.payload = j.at("payload");
        if (j.contains("note")) r.note = j.at("note").get<std::string>();
        r.refs = j.at("refs").get<std::vector<std::string>>();
        if (j.contains("provenance")) r.provenance = j.at("provenance").get<std::string>();
        return r;
    }

    friend bool operator==(const KnowledgeRecord& x, const KnowledgeRecord& y) {
        return x.key == y.key && x.payload == y.payload && x.note == y.note &&
               x.refs == y.refs && x.provenance == y.provenance;
    }
};

enum class IsogenyStatus { kAllowed, kAllowedFinitelyMany, kForbidden };

inline std::string to_string(IsogenyStatus s) {
    switch (s) {
        case IsogenyStatus::kAllowed: return "allowed";
        case IsogenyStatus::kAllowedFinitelyMany: return "allowed-finitely-many";
        case IsogenyStatus::kForbidden: return "forbidden";
    }
    return "?";
}

struct IsogenyDegreeInfo {
    IsogenyStatus status = IsogenyStatus::kForbidden;
    bool cm_only = false;   // the finitely many curves realizing it all have CM
};

// Result of a torsion_table lookup: group scopes fill `groups`, the prime
// scope (rQ6) fills `primes`.
struct TorsionScope {
    std::vector<TorsionGroupId> groups;
    std::vector<long> primes;
};

// Stored one-parameter family y^2 = x^3 + a(t) x + b(t).
struct FamilyData {
    IntPoly a;
    IntPoly b;
    std::optional<IntPoly> j_num;             // j(E_t) = j_num / j_den when stored
    std::optional<IntPoly> j_den;
    std::optional<IntPoly> delta;             // model discriminant as a polynomial in t
    std::optional<IntPoly> delta_cube_root;   // r(t) with Delta = (48 r)^3 when stored
    std::vector<mpq_class> singular_t;
    std::vector<mpq_class> cm_t;
};

// Member of a family at a chosen parameter value.
struct FamilyMember {
    EllipticCurve curve;
    bool cm_flagged = false;   // t is one of the family's known CM parameters
};

struct CurveFixture {
    std::string name;
    EllipticCurve curve;
    std::string note;
};

// Entry of the coverage manifest: one classification target and how it is
// dealt with ("check" refs name check ids, "cited-fact" refs name citations).
struct CoverageEntry {
    std::string target;
    std::string disposition;
    std::vector<std::string> refs;
};

inline mpq_class rational_from_pair(const json& pr) {
    if (!pr.is_array() || pr.size() != 2)
        throw std::invalid_argument("rational_from_pair: expected [num, den]");
    mpq_class v(mpz_class(pr.at(0).get<std::string>()),
                mpz_class(pr.at(1).get<std::string>()));
    v.canonicalize();
    return v;
}

inline IntPoly poly_from_payload(const json& arr) {
    std::vector<mpz_class> c;
    for (const auto& x : arr) c.emplace_back(x.get<long>());
    return IntPoly(std::move(c));
}

// Static fact table: classification lists, isogeny degree tables, j-invariant
// lists, j-maps, curve families, degree bounds, fixtures, and the coverage
// manifest. Parsed once from the embedded JSON; every record is citation-tagged.
class KnowledgeBase {
public:
    explicit KnowledgeBase(const std::string& json_text) {
        json root = json::parse(json_text);
        version_ = root.at("version").get<std::string>();
        for (const auto& [key, text] : root.at("citations").items())
            citations_[key] = text.get<std::string>();
        for (const auto& [key, rec] : root.at("records").items())
            records_.emplace(key, KnowledgeRecord::from_json(key, rec));
    }

    static const KnowledgeBase& instance() {
        static const KnowledgeBase kb{std::string(embedded::kFactsJson)};
        return kb;
    }

    const std::string& version() const { return version_; }
    const std::map<std::string, std::string>& citations() const { return citations_; }
    const std::map<std::string, KnowledgeRecord>& records() const { return records_; }

    bool has_record(const std::string& key) const { return records_.count(key) != 0; }

    const KnowledgeRecord& record(const std::string& key) const {
        auto it = records_.find(key);
        if (it == records_.end())
            throw std::invalid_argument("knowledgebase: unknown record key '" + key + "'");
        return it->second;
    }

    const std::string& citation_text(const std::string& ref) const {
        auto it = citations_.find(ref);
        if (it == citations_.end())
            throw std::invalid_argument("knowledgebase: unknown citation key '" + ref + "'");
        return it->second;
    }

    // Citation strings backing a record, in stored order.
    std::vector<std::string> citation_texts(const std::string& record_key) const {
        std::vector<std::string> out;
        for (const auto& ref : record(record_key).refs) out.push_back(citation_text(ref));
        return out;
    }

    // Classification of a cyclic isogeny degree over Q.
    IsogenyDegreeInfo isogeny_degree_allowed(long n) const {
        if (n < 1) throw std::invalid_argument("isogeny_degree_allowed: n >= 1 required");
        auto has = [&](const char* key) {
            for (const auto& v : record(key).payload)
                if (v.get<long>() == n) return true;
            return false;
        };
        IsogenyDegreeInfo info;
        info.cm_only = has("isogeny.cm-only");
        if (has("isogeny.infinite-families"))
            info.status = IsogenyStatus::kAllowed;
        else if (has("isogeny.allowed-degrees"))
            info.status = IsogenyStatus::kAllowedFinitelyMany;
        else
            info.status = IsogenyStatus::kForbidden;
        return info;
    }

    // Exact j-invariant list; kind in {isogeny-15, isogeny-21, c2c30-special,
    // c6c12-fiber}.
    std::vector<mpq_class> j_list(const std::string& kind) const {
        const auto& rec = record_for("jlist.", kind, "j_list");
        std::vector<mpq_class> out;
        for (const auto& pr : rec.payload) out.push_back(rational_from_pair(pr));
        return out;
    }

    // Stored torsion table; scope in {phiQ1, phiQ2, phiQ3, phiQ4-note, phiCM6,
    // sextic-main, sextic-conditional, phi6-extras, rQ6}.
    TorsionScope torsion_table(const std::string& scope) const {
        const auto& rec = record_for("torsion.", scope, "torsion_table");
        TorsionScope out;
        if (scope == "rQ6") {
            for (const auto& v : rec.payload) out.primes.push_back(v.get<long>());
        } else {
            for (const auto& pr : rec.payload)
                out.groups.emplace_back(pr.at(0).get<long>(), pr.at(1).get<long>());
        }
        return out;
    }

    std::vector<TorsionGroupId> torsion_groups(const std::string& scope) const {
        TorsionScope t = torsion_table(scope);
        if (t.groups.empty() && !t.primes.empty())
            throw std::invalid_argument("torsion_groups: scope '" + scope + "' stores primes");
        return t.groups;
    }

    bool group_in_scope(const TorsionGroupId& g, const std::string& scope) const {
        auto gs = torsion_groups(scope);
        return std::find(gs.begin(), gs.end(), g) != gs.end();
    }

    // Stored family polynomials; kind in {nine-isogeny, threeCs} (aliases
    // nine-isogeny-Et, threeCs-family).
    FamilyData family_data(const std::string& kind) const {
        const auto& rec = record_for("family.", family_key(kind), "family_data");
        const json& p = rec.payload;
        FamilyData fd;
        fd.a = poly_from_payload(p.at("a"));
        fd.b = poly_from_payload(p.at("b"));
        if (p.contains("j_num")) fd.j_num = poly_from_payload(p.at("j_num"));
        if (p.contains("j_den")) fd.j_den = poly_from_payload(p.at("j_den"));
        if (p.contains("delta")) fd.delta = poly_from_payload(p.at("delta"));
        if (p.contains("delta_cube_root"))
            fd.delta_cube_root = poly_from_payload(p.at("delta_cube_root"));
        for (const auto& pr : p.at("singular_t")) fd.singular_t.push_back(rational_from_pair(pr));
        if (p.contains("cm_t"))
            for (const auto& pr : p.at("cm_t")) fd.cm_t.push_back(rational_from_pair(pr));
        return fd;
    }

    // Family member at parameter t; singular parameters are rejected.
    FamilyMember family_curve(const std::string& kind, const mpq_class& t) const {
        FamilyData fd = family_data(kind);
        for (const auto& s : fd.singular_t)
            if (t == s)
                throw std::invalid_argument("family_curve: singular parameter t = " +
                                            t.get_str() + " for family '" + kind + "'");
        FamilyMember m{EllipticCurve(fd.a.eval(t), fd.b.eval(t)), false};
        for (const auto& c : fd.cm_t)
            if (t == c) m.cm_flagged = true;
        return m;
    }

    // Stored j-map as (numerator, denominator); kind in {2B, 2Cn, 3B, 3Ns,
    // H20, E2-in-E3}.
    std::pair<RatPoly, RatPoly> jmap(const std::string& kind) const {
        const auto& rec = record_for("jmap.", kind, "jmap");
        return {RatPoly(poly_from_payload(rec.payload.at("num"))),
                RatPoly(poly_from_payload(rec.payload.at("den")))};
    }

    mpq_class jmap_eval(const std::string& kind, const mpq_class& x) const {
        auto [num, den] = jmap(kind);
        mpq_class d = den.eval(x);
        if (d == 0) throw std::domain_error("jmap_eval: pole at x = " + x.get_str());
        mpq_class v = num.eval(x) / d;
        v.canonicalize();
        return v;
    }

    std::vector<CurveFixture> curve_fixtures() const {
        std::vector<CurveFixture> out;
        for (const auto& f : record("curves.fixtures").payload) {
            mpq_class a{mpz_class(f.at("a").get<std::string>())};
            mpq_class b{mpz_class(f.at("b").get<std::string>())};
            out.push_back({f.at("name").get<std::string>(), EllipticCurve(a, b),
                           f.value("note", std::string{})});
        }
        return out;
    }

    std::vector<std::string> string_list(const std::string& key) const {
        return record(key).payload.get<std::vector<std::string>>();
    }

    std::vector<CoverageEntry> coverage() const {
        std::vector<CoverageEntry> out;
        for (const auto& e : record("coverage").payload)
            out.push_back({e.at("case").get<std::string>(),
                           e.at("disposition").get<std::string>(),
                           e.at("refs").get<std::vector<std::string>>()});
        return out;
    }

private:
    static std::string family_key(const std::string& kind) {
        if (kind == "nine-isogeny-Et") return "nine-isogeny";
        if (kind == "threeCs-family") return "threeCs";
        return kind;
    }

    const KnowledgeRecord& record_for(const std::string& prefix, const std::string& kind,
                                      const std::string& op) const {
        auto it = records_.find(prefix + kind);
        if (it == records_.end()) {
            std::string valid;
            for (const auto& [k, r] : records_)
                if (k.rfind(prefix, 0) == 0)
                    valid += (valid.empty() ? "" : ", ") + k.substr(prefix.size());
            throw std::invalid_argument(op + ": unknown kind '" + kind + "' (valid: " + valid + ")");
        }
        return it->second;
    }

    std::string version_;
    std::map<std::string, std::string> citations_;
    std::map<std::string, KnowledgeRecord> records_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("knowledgebase validation failed: " + what);
}

inline mpq_class signed_pow_frac(long base_num, unsigned exp_num, long base_den,
                                 unsigned exp_den, long scale = 1) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), mpz_class(base_num).get_mpz_t(), exp_num);
    mpz_pow_ui(d.get_mpz_t(), mpz_class(base_den).get_mpz_t(), exp_den);
    mpq_class v(n * scale, d);
    v.canonicalize();
    return v;
}

}   // namespace detail

// Revalidates the fact table from scratch: citation closure, group-shape
// invariants, factored forms of every stored j-invariant, the symbolic
// identities of both curve families, j-map spot values, and record
// serialization round-trips. Throws std::logic_error on any failure.
inline void verify_knowledge(const KnowledgeBase& kb) {
    using detail::require;
    using detail::signed_pow_frac;

    // every record: nonempty refs resolving to known citations, round-trip.
    for (const auto& [key, rec] : kb.records()) {
        require(!rec.refs.empty(), "record '" + key + "' has no refs");
        for (const auto& ref : rec.refs) kb.citation_text(ref);
        require(rec.provenance == "literature-static",
                "record '" + key + "' has unexpected provenance");
        require(KnowledgeRecord::from_json(key, rec.to_json()) == rec,
                "record '" + key + "' does not round-trip");
    }

    // torsion scopes: shapes parse (ctor enforces m | n), duplicates absent,
    // transcription cross-checks between scopes.
    for (const char* scope : {"phiQ1", "phiQ2", "phiQ3", "phiQ4-note", "phiCM6",
                              "sextic-main", "sextic-conditional", "phi6-extras"}) {
        auto gs = kb.torsion_groups(scope);
        std::set<TorsionGroupId> uniq(gs.begin(), gs.end());
        require(uniq.size() == gs.size(), std::string("duplicate entries in torsion.") + scope);
    }
    require(kb.torsion_table("rQ6").primes == std::vector<long>({2, 3, 5, 7, 13}),
            "rQ6 prime list mismatch");
    require(kb.torsion_groups("phiQ1").size() == 15, "phiQ1 must list 15 groups");
    {
        auto main = kb.torsion_groups("sextic-main");
        std::set<TorsionGroupId> mainset(main.begin(), main.end());
        for (const auto& g : kb.torsion_groups("phiQ1"))
            require(mainset.count(g) != 0, "phiQ1 entry " + g.name() + " missing from sextic-main");
        for (const auto& g : kb.torsion_groups("phi6-extras"))
            require(mainset.count(g) != 0, "phi6-extras entry " + g.name() + " not in sextic-main");
        require(kb.torsion_groups("sextic-conditional") ==
                    std::vector<TorsionGroupId>({TorsionGroupId(3, 18)}),
                "sextic-conditional must be exactly C3xC18");
        require(mainset.count(TorsionGroupId(3, 18)) == 0, "C3xC18 must not be in sextic-main");
    }

    // isogeny tables: infinite/cm-only lists are sublists of allowed.
    for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25})
        require(kb.isogeny_degree_allowed(n).status == IsogenyStatus::kAllowed,
                "degree " + std::to_string(n) + " must be allowed (infinite family)");
    for (long n : {11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163})
        require(kb.isogeny_degree_allowed(n).status == IsogenyStatus::kAllowedFinitelyMany,
                "degree " + std::to_string(n) + " must be allowed-finitely-many");
    for (long n : {20, 22, 23, 24, 26, 35, 39, 49, 65, 91, 169})
        require(kb.isogeny_degree_allowed(n).status == IsogenyStatus::kForbidden,
                "degree " + std::to_string(n) + " must be forbidden");
    require(kb.isogeny_degree_allowed(27).cm_only, "degree 27 must be flagged cm-only");
    require(!kb.isogeny_degree_allowed(25).cm_only, "degree 25 must not be cm-only");

    // j-lists: stored values equal their factored forms exactly.
    auto expect_set = [&](const std::string& kind, std::vector<mpq_class> want) {
        auto got = kb.j_list(kind);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        require(got == want, "j_list '" + kind + "' does not match its factored form");
    };
    expect_set("isogeny-21", {signed_pow_frac(5, 6, 2, 3, -9),      // -3^2 5^6 / 2^3
                              signed_pow_frac(5, 3, 2, 1, 27),      // 3^3 5^3 / 2
                              signed_pow_frac(101, 3, 2, 21, 3375), // 3^3 5^3 101^3 / 2^21
                              signed_pow_frac(383, 3, 2, 7, -3375)});
    expect_set("isogeny-15", {signed_pow_frac(5, 2, 2, 1, -1),      // -5^2 / 2
                              signed_pow_frac(241, 3, 2, 3, -25),   // -5^2 241^3 / 2^3
                              signed_pow_frac(29, 3, 2, 5, -5),     // -29^3 5 / 2^5
                              signed_pow_frac(211, 3, 2, 15, 5)});  // 211^3 5 / 2^15
    expect_set("c2c30-special", {signed_pow_frac(29, 3, 2, 5, -5),
                                 signed_pow_frac(211, 3, 2, 15, 5)});
    expect_set("c6c12-fiber", {signed_pow_frac(23, 3, 2, 6, 9),     // 3^2 23^3 / 2^6
                               signed_pow_frac(11, 3, 2, 2, -27)}); // -3^3 11^3 / 2^2
    {
        auto special = kb.j_list("c2c30-special");
        auto fifteen = kb.j_list("isogeny-15");
        for (const auto& j : special)
            require(std::find(fifteen.begin(), fifteen.end(), j) != fifteen.end(),
                    "c2c30-special j-value not in isogeny-15 list");
    }

    // j-maps: denominators nonzero, spot values.
    for (const char* kind : {"2B", "2Cn", "3B", "3Ns", "H20", "E2-in-E3"})
        require(!kb.jmap(kind).second.is_zero(), std::string("jmap '") + kind + "' zero denominator");
    require(kb.jmap_eval("2Cn", 0) == 1728, "jmap 2Cn at 0 must be 1728");
    require(kb.jmap_eval("3Ns", 12) == 1728, "jmap 3Ns at 12 must be 1728");
    require(kb.jmap_eval("E2-in-E3", 0) == 0, "jmap E2-in-E3 at 0 must be 0");
    require(kb.jmap_eval("2B", 1) == 2048, "jmap 2B at 1 must be 256*2^3");
    require(kb.jmap_eval("3B", 1) == 54000, "jmap 3B at 1 must be 27*2*10^3");
    require(kb.jmap_eval("H20", 0) == -1188, "jmap H20 at 0 must be (-3)^3*44");

    // nine-isogeny family: rebuild a, b from factored form; check the
    // discriminant and j identities symbolically.
    {
        FamilyData fd = kb.family_data("nine-isogeny");
        IntPoly t = IntPoly::x();
        IntPoly t3 = t * t * t;
        require(fd.a == IntPoly(-3) * t * (t3 - IntPoly(24)), "E_t: a(t) mismatch");
        require(fd.b == IntPoly(2) * (t3 * t3 - IntPoly(36) * t3 + IntPoly(216)),
                "E_t: b(t) mismatch");
        IntPoly disc = IntPoly(4) * fd.a * fd.a * fd.a + IntPoly(27) * fd.b * fd.b;
        IntPoly t3m27 = t3 - IntPoly(27);
        require(disc == IntPoly(-256 * 729) * t3m27, "E_t: 4a^3+27b^2 != -2^8 3^6 (t^3-27)");
        require(fd.delta && *fd.delta == IntPoly(-16) * disc,
                "E_t: stored delta != -16 (4a^3+27b^2)");
        require(fd.j_den && *fd.j_den == t3m27, "E_t: stored j denominator != t^3-27");
        // j = 6912 a^3 / (4a^3+27b^2) and disc = -2^8 3^6 j_den force
        // 6912 a^3 = -2^8 3^6 j_num.
        require(fd.j_num && IntPoly(6912) * fd.a * fd.a * fd.a == IntPoly(-256 * 729) * *fd.j_num,
                "E_t: j identity fails symbolically");
        require(fd.singular_t == std::vector<mpq_class>({mpq_class(3)}), "E_t: singular set != {3}");
        require(fd.cm_t == std::vector<mpq_class>({mpq_class(-6), mpq_class(0)}),
                "E_t: CM parameter set != {-6, 0}");
        require(fd.delta->eval(mpq_class(3)) == 0, "E_t: delta(3) must vanish");
    }

    // threeCs family: rebuild a, b; the discriminant is a perfect cube:
    // 4a^3 + 27b^2 = -6912 r^3 with r = t (t^2+3t+3), so Delta = (48 r)^3.
    {
        FamilyData fd = kb.family_data("threeCs");
        IntPoly t = IntPoly::x();
        IntPoly a_want = IntPoly(-3) * (t + IntPoly(1)) * (t + IntPoly(3)) *
                         (t * t + IntPoly(3));
        IntPoly b_want = IntPoly(-2) * (t * t - IntPoly(3)) *
                         (t * t * t * t + IntPoly(6) * t * t * t + IntPoly(18) * t * t +
                          IntPoly(18) * t + IntPoly(9));
        require(fd.a == a_want, "threeCs: a(t) mismatch");
        require(fd.b == b_want, "threeCs: b(t) mismatch");
        require(fd.delta_cube_root &&
                    *fd.delta_cube_root == t * (t * t + IntPoly(3) * t + IntPoly(3)),
                "threeCs: stored cube root != t(t^2+3t+3)");
        IntPoly r = *fd.delta_cube_root;
        IntPoly disc = IntPoly(4) * fd.a * fd.a * fd.a + IntPoly(27) * fd.b * fd.b;
        require(disc == IntPoly(-6912) * r * r * r, "threeCs: 4a^3+27b^2 != -6912 r^3");
        require(fd.singular_t == std::vector<mpq_class>({mpq_class(0)}),
                "threeCs: singular set != {0}");
    }

    // bounds records.
    {
        const auto& steps = kb.record("bounds.prime-power-degrees").payload;
        require(steps.is_array() && !steps.empty(), "bounds.prime-power-degrees empty");
        for (const auto& s : steps)
            require(s.at("min_degree").get<long>() > 6,
                    "prime-power bound must exceed the sextic degree");
        const auto& c27 = kb.record("bounds.c27-step").payload;
        require(c27.at("preimage_index").get<long>() * c27.at("field_degree").get<long>() <
                    c27.at("min_degree").get<long>(),
                "c27 step arithmetic must contradict the degree bound");
    }

    // fixtures construct (nonsingular) with unique names.
    {
        auto fx = kb.curve_fixtures();
        std::set<std::string> names;
        for (const auto& f : fx) names.insert(f.name);
        require(names.size() == fx.size(), "duplicate fixture names");
        require(!fx.empty(), "fixture list empty");
    }

    // exceptional-7 record and coverage manifest shape.
    {
        const auto& exc = kb.record("curves.exceptional-7").payload;
        require(exc.at("prime").get<long>() == 7, "exceptional-7 prime must be 7");
        require(exc.at("labels").size() == 2, "exceptional-7 must list two labels");
        auto cov = kb.coverage();
        std::set<std::string> targets;
        for (const auto& e : cov) {
            targets.insert(e.target);
            require(e.disposition == "check" || e.disposition == "cited-fact",
                    "coverage '" + e.target + "': bad disposition");
            require(!e.refs.empty(), "coverage '" + e.target + "': empty refs");
            if (e.disposition == "cited-fact")
                for (const auto& ref : e.refs) kb.citation_text(ref);
        }
        require(targets.size() == cov.size(), "duplicate coverage targets");
    }
}

}   // namespace torsion6
