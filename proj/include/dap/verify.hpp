#pragma once

// The verification suites behind `dap verify`: bijection round-trips with the
// eight statistic transports, dual-construction series agreement with marker
// calculus cross-checks, the two popularity tables, and the asymptotic ratio
// bounds. Checks are independent closures executed on a worker pool; the
// report order is fixed by construction order, never by scheduling.

#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bijections.hpp"
#include "closedforms.hpp"
#include "enumerate.hpp"
#include "genfun.hpp"
#include "statistics.hpp"

namespace dap {

enum class VerifySuite { all, bijections, series, tables, asymptotics };

inline VerifySuite parse_verify_suite(std::string_view s) {
    if (s == "all") return VerifySuite::all;
    if (s == "bijections") return VerifySuite::bijections;
    if (s == "series") return VerifySuite::series;
    if (s == "tables") return VerifySuite::tables;
    if (s == "asymptotics") return VerifySuite::asymptotics;
    throw parse_error("unknown verify suite '" + std::string(s) + "'");
}

struct VerifyOptions {
    int max_n = 18;
    int order = 64;
    int threads = 0;  // 0 = hardware concurrency
};

struct CheckResult {
    std::string name;
    std::string bound;
    bool pass = true;
    std::string witness;  // empty unless the check failed
};

namespace verifydetail {

using Witness = std::optional<std::string>;

struct Check {
    std::string name;
    std::string bound;
    std::function<Witness()> run;
};

// ---- bijection layers ------------------------------------------------------

inline Witness check_psi_layer(int n, int max_n) {
    auto paths = enum_paths(FamilyId::air, n, max_n);
    std::set<std::string> images;
    for (const auto& p : paths) {
        MotzkinWord m = psi(p);
        if (m.size() + 1 != p.size()) return "image length mismatch at " + p.to_string();
        if (!m.is_peakless()) return "image has a peak at " + p.to_string();
        if (!(psi_inv(m) == p)) return "inverse fails at " + p.to_string();
        images.insert(m.to_string());
    }
    if (images.size() != paths.size()) return "map not injective at n=" + std::to_string(n);
    if (BigInt(static_cast<long>(images.size())) !=
        count_family(FamilyId::peakless_motzkin, n - 1, max_n))
        return "image misses part of the peakless class at n=" + std::to_string(n);
    return std::nullopt;
}

inline Witness check_transport_layer(int n, int max_n) {
    for (const auto& p : enum_paths(FamilyId::air, n, max_n)) {
        MotzkinWord m = psi(p);
        long len = static_cast<long>(p.size());
        auto sp = [&](StatId s) { return stat(p, s); };
        auto sm = [&](StatId s) { return stat(m, s); };
        auto bad = [&](const char* which) {
            return std::string(which) + " transport fails at " + p.to_string();
        };
        if (sp({StatTag::u_count}) != sm({StatTag::m_f}) + sm({StatTag::m_u})) return bad("U");
        if (sp({StatTag::d1_count}) != sm({StatTag::m_ind_f}) + sm({StatTag::m_ufd}) +
                                           sm({StatTag::m_ind_umd}) + sm({StatTag::m_u2md2}))
            return bad("D1");
        if (sp({StatTag::du_count}) != sm({StatTag::m_ufd}) + sm({StatTag::m_u2md2}))
            return bad("DU");
        if (sp({StatTag::uu_count}) != sm({StatTag::m_f}) - 1) return bad("UU");
        for (int k = 1; k < n; ++k)
            if (sp({StatTag::delta, k}) != sm({StatTag::m_ind_fk, k}) + sm({StatTag::m_ufkd, k}) +
                                               sm({StatTag::m_ind_fk1umd, k}) +
                                               sm({StatTag::m_ufk1umd2, k}))
                return bad("pyramid");
        if (sp({StatTag::peak}) != sm({StatTag::m_u}) + 1) return bad("peak");
        if (sm({StatTag::m_lastf}) < 1) return "flatless image at " + p.to_string();
        if (sp({StatTag::ret}) != len - sm({StatTag::m_lastf})) return bad("return");
        if (sp({StatTag::slast}) != sm({StatTag::m_ret})) return bad("slast");
    }
    return std::nullopt;
}

inline Witness check_lower_elevate_layer(int n, int max_n) {
    std::set<std::string> lifted;
    for (const auto& p : enum_paths(FamilyId::air, n, max_n)) {
        AirPocketPath q = p.elevate();
        if (!q.is_prime()) return "elevation not prime at " + p.to_string();
        if (q.size() != p.size() + 1) return "elevation length off at " + p.to_string();
        if (!(q.lower() == p)) return "lowering does not undo elevation at " + p.to_string();
        lifted.insert(q.to_string());
    }
    std::set<std::string> primes;
    for (const auto& q : enum_paths(FamilyId::prime, n + 1, max_n)) primes.insert(q.to_string());
    if (primes != lifted)
        return "prime class at n=" + std::to_string(n + 1) + " is not the elevation image";
    return std::nullopt;
}

inline Witness check_unfurl_layer(int n, int max_n) {
    for (const auto& p : enum_paths(FamilyId::air, n, max_n)) {
        MotzkinWord d = unfurl(p);
        long ups = stat(p, {StatTag::u_count});
        if (static_cast<long>(d.size()) != 2 * ups) return "unfurl length off at " + p.to_string();
        for (MStep s : d.steps())
            if (s != MStep::up && s != MStep::down) return "unfurl not binary at " + p.to_string();
        if (!(refurl(d) == p)) return "refurl does not undo unfurl at " + p.to_string();
    }
    return std::nullopt;
}

inline Witness check_refurl_dyck_layer(int m, int max_n) {
    auto dycks = enum_words(FamilyId::dyck, 2 * m, max_n);
    std::set<std::string> air;
    for (const auto& d : dycks) {
        AirPocketPath p = refurl(d);
        if (stat(p, {StatTag::u_count}) != m) return "up-degree off refurling " + d.to_string();
        if (!(unfurl(p) == d)) return "unfurl does not undo refurl at " + d.to_string();
        air.insert(p.to_string());
    }
    if (air.size() != dycks.size()) return "refurl not injective at m=" + std::to_string(m);
    if (BigInt(static_cast<long>(dycks.size())) != catalan(m))
        return "Dyck census at m=" + std::to_string(m) + " is not Catalan";
    return std::nullopt;
}

inline Witness check_meander_layer(int t, int max_n) {
    auto meanders = enum_meanders(t, max_n);
    auto pyramids = enum_words(FamilyId::s_family, t, max_n);
    if (meanders.size() != pyramids.size())
        return "meander census differs from the image class at t=" + std::to_string(t);
    std::set<std::string> images;
    for (const auto& w : meanders) {
        MotzkinWord img = mu(w);
        if (!is_in_S(img.steps())) return "pair image leaves the class at " + w.to_string();
        if (!(mu_inv(img) == w)) return "pairing inverse fails at " + w.to_string();
        images.insert(img.to_string());
    }
    for (const auto& g : pyramids)
        if (!images.count(g.to_string())) return "pair image misses " + g.to_string();
    return std::nullopt;
}

inline void add_bijection_checks(std::vector<Check>& cs, const VerifyOptions& opt) {
    int max_n = opt.max_n;
    for (int n = 2; n <= max_n; ++n) {
        cs.push_back({"psi_bijection_n" + std::to_string(n), "pointwise over all paths of size " + std::to_string(n),
                      [n, max_n] { return check_psi_layer(n, max_n); }});
        cs.push_back({"transport_n" + std::to_string(n), "eight statistic identities, pointwise",
                      [n, max_n] { return check_transport_layer(n, max_n); }});
    }
    for (int n = 2; n < max_n; ++n)
        cs.push_back({"lower_elevate_n" + std::to_string(n), "round-trip and prime census",
                      [n, max_n] { return check_lower_elevate_layer(n, max_n); }});
    for (int n = 2; n <= max_n; ++n)
        cs.push_back({"unfurl_n" + std::to_string(n), "round-trip into unit-step paths",
                      [n, max_n] { return check_unfurl_layer(n, max_n); }});
    for (int m = 1; m <= std::min(max_n / 2, 8); ++m)
        cs.push_back({"refurl_dyck_m" + std::to_string(m), "Catalan census and round-trip",
                      [m, max_n] { return check_refurl_dyck_layer(m, max_n); }});
    for (int t = 1; t <= std::min(max_n, 12); ++t)
        cs.push_back({"meander_mu_t" + std::to_string(t), "census and round-trip at 2t letters",
                      [t, max_n] { return check_meander_layer(t, max_n); }});
}

// ---- series layers ---------------------------------------------------------

template <class C>
Witness series_equal(const Series<C>& a, const Series<C>& b, const std::string& what) {
    int n = std::min(a.order, b.order);
    using R = ring<C>;
    for (int i = 0; i <= n; ++i)
        if (!(a.c[i] == b.c[i]))
            return what + " differ at order " + std::to_string(i) + ": " + R::to_string(a.c[i]) +
                   " vs " + R::to_string(b.c[i]);
    return std::nullopt;
}

inline Witness check_gf_dual(GfId id, int order) {
    // gf/gf_marked/gf_marked2 compare their construction routes internally and
    // throw with a witness on the first disagreeing coefficient.
    switch (gf_arity(id.tag)) {
        case GfArity::univariate: gf(id, order); break;
        case GfArity::bivariate: gf_marked(id, order); break;
        case GfArity::trivariate: gf_marked2(id, order); break;
    }
    return std::nullopt;
}

inline Witness check_marker_erasure(GfId marked, GfTag counting, int order) {
    Series<Rational> erased = gf_arity(marked.tag) == GfArity::bivariate
                                  ? eval_marker(gf_marked(marked, order))
                                  : eval_marker(eval_y(gf_marked2(marked, order), Rational(1)));
    return series_equal(erased, gf({counting}, order), "erased series and counting series");
}

inline Witness check_marker_derivative(GfId marked, GfId popularity_id, int order) {
    Series<Rational> derived = eval_marker(deriv_marker(gf_marked(marked, order)));
    return series_equal(derived, gf(popularity_id, order), "marker derivative and popularity series");
}

inline Witness check_trivariate_derivative(GfTag id, bool in_y, GfTag popularity_tag, int order) {
    Series<Poly2> t = gf_marked2({id}, order);
    Series<Poly1> collapsed = in_y ? eval_z(t, Rational(1)) : eval_y(t, Rational(1));
    return series_equal(eval_marker(deriv_marker(collapsed)), gf({popularity_tag}, order),
                        "marker derivative and popularity series");
}

inline Witness check_grading(GradingId g, int order) {
    Series<Rational> s = graded_by_updegree(g, order);
    for (int i = 0; i <= std::min(order, 20); ++i) {
        BigInt want = g == GradingId::catalan ? catalan(i) : riordan(i);
        if (coeff_bigint(s, i) != want)
            return "coefficient " + std::to_string(i) + " is " + coeff_bigint(s, i).str() +
                   ", closed form gives " + want.str();
    }
    for (int m = 1; m <= 9; ++m) {  // the census excludes the empty path, so start at one up-step
        BigInt brute = count_by_upsteps(FamilyId::air, m, g == GradingId::riordan);
        if (coeff_bigint(s, m) != brute)
            return "coefficient " + std::to_string(m) + " is " + coeff_bigint(s, m).str() +
                   ", exhaustive count gives " + brute.str();
    }
    return std::nullopt;
}

inline void add_series_checks(std::vector<Check>& cs, const VerifyOptions& opt) {
    int order = opt.order;
    auto instances = [&](GfTag t) {
        std::vector<GfId> ids;
        if (gf_takes_k(t))
            for (int k = 1; k <= 3; ++k) ids.push_back({t, k});
        else
            ids.push_back({t});
        return ids;
    };
    for (const auto& entry : gf_table)
        for (GfId id : instances(entry.tag))
            cs.push_back({"gf_" + gf_name(id),
                          "construction routes agree to order " + std::to_string(order) +
                              "; counting coefficients integral",
                          [id, order] { return check_gf_dual(id, order); }});

    int border = std::min(order, 48);  // marker cross-checks stay cheap
    int torder = std::min(order, 32);
    struct Erase {
        GfTag marked;
        GfTag counting;
        bool with_k;
    };
    const Erase erasures[] = {
        {GfTag::p, GfTag::a, false},          {GfTag::r, GfTag::a, false},
        {GfTag::c, GfTag::a, false},          {GfTag::pk, GfTag::a, true},
        {GfTag::b_inc, GfTag::a_inc, false},  {GfTag::r_inc, GfTag::a_inc, false},
        {GfTag::c_inc, GfTag::a_inc, false},  {GfTag::pk_inc, GfTag::a_inc, true},
        {GfTag::u_inc, GfTag::a0, false},     {GfTag::z_k, GfTag::a0, true},
        {GfTag::a_xyz, GfTag::a, false},      {GfTag::a_inc_xyz, GfTag::a_inc, false},
        {GfTag::z_xyz, GfTag::a0, false},
    };
    for (const auto& e : erasures) {
        int n = gf_arity(e.marked) == GfArity::trivariate ? torder : border;
        for (GfId id : e.with_k ? std::vector<GfId>{{e.marked, 1}, {e.marked, 2}, {e.marked, 3}}
                                : std::vector<GfId>{{e.marked}})
            cs.push_back({"erase_" + gf_name(id),
                          "marker set to 1 recovers the counting series to order " + std::to_string(n),
                          [id, c = e.counting, n] { return check_marker_erasure(id, c, n); }});
    }

    struct Deriv {
        GfTag marked;
        GfTag pop;
        bool with_k;
        GfTag pop_k;  // used when with_k: popularity id that takes the same k
    };
    const Deriv derivs[] = {
        {GfTag::p, GfTag::pop_peak, false, GfTag::a},
        {GfTag::r, GfTag::pop_ret, false, GfTag::a},
        {GfTag::c, GfTag::pop_cat, false, GfTag::a},
        {GfTag::pk, GfTag::a, true, GfTag::y_k},
        {GfTag::b_inc, GfTag::pop_peak_inc, false, GfTag::a},
        {GfTag::r_inc, GfTag::pop_ret_inc, false, GfTag::a},
        {GfTag::c_inc, GfTag::pop_cat_inc, false, GfTag::a},
        {GfTag::pk_inc, GfTag::a, true, GfTag::w_k},
    };
    for (const auto& d : derivs) {
        if (d.with_k) {
            for (int k = 1; k <= 3; ++k)
                cs.push_back({"marker_deriv_" + gf_name({d.marked, k}),
                              "marker derivative at 1 equals the popularity series",
                              [m = GfId{d.marked, k}, p = GfId{d.pop_k, k}, border] {
                                  return check_marker_derivative(m, p, border);
                              }});
        } else {
            cs.push_back({"marker_deriv_" + gf_name({d.marked}),
                          "marker derivative at 1 equals the popularity series",
                          [m = GfId{d.marked}, p = GfId{d.pop}, border] {
                              return check_marker_derivative(m, p, border);
                          }});
        }
    }
    const struct {
        GfTag id;
        bool in_y;
        GfTag pop;
    } tri[] = {
        {GfTag::a_xyz, true, GfTag::pop_u},
        {GfTag::a_xyz, false, GfTag::pop_d},
        {GfTag::a_inc_xyz, true, GfTag::pop_u_inc},
        {GfTag::a_inc_xyz, false, GfTag::pop_d_inc},
    };
    for (const auto& t : tri)
        cs.push_back({std::string("marker_deriv_") + gf_name({t.id}) + (t.in_y ? "_y" : "_z"),
                      "marker derivative at 1 equals the popularity series",
                      [id = t.id, y = t.in_y, p = t.pop, torder] {
                          return check_trivariate_derivative(id, y, p, torder);
                      }});

    cs.push_back({"grading_catalan", "coefficients are Catalan numbers; exhaustive to 9 up-steps",
                  [order] { return check_grading(GradingId::catalan, order); }});
    cs.push_back({"grading_riordan", "coefficients are Riordan numbers; exhaustive to 9 up-steps",
                  [order] { return check_grading(GradingId::riordan, order); }});
}

// ---- table layers ----------------------------------------------------------

struct TableRow {
    const char* label;
    FamilyId family;
    StatId stat;
    GfId gfid;
    long want[10];  // n = 2..11
};

inline const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        // plain class
        {"table1_U", FamilyId::air, {StatTag::u_count}, {GfTag::pop_u},
         {1, 2, 5, 13, 32, 80, 201, 505, 1273, 3217}},
        {"table1_D1", FamilyId::air, {StatTag::d1_count}, {GfTag::pop_d},
         {1, 0, 2, 3, 7, 17, 40, 97, 238, 587}},
        {"table1_PEAK", FamilyId::air, {StatTag::peak}, {GfTag::pop_peak},
         {1, 1, 3, 7, 16, 39, 95, 233, 577, 1436}},
        {"table1_RET", FamilyId::air, {StatTag::ret}, {GfTag::pop_ret},
         {1, 1, 3, 6, 13, 29, 65, 148, 341, 793}},
        {"table1_CAT", FamilyId::air, {StatTag::cat}, {GfTag::pop_cat},
         {0, 1, 1, 4, 8, 19, 44, 102, 239, 563}},
        {"table1_DELTA1", FamilyId::air, {StatTag::delta, 1}, {GfTag::y_k, 1},
         {1, 0, 2, 3, 7, 17, 40, 97, 238, 587}},
        {"table1_DELTA2", FamilyId::air, {StatTag::delta, 2}, {GfTag::y_k, 2},
         {0, 1, 0, 2, 3, 7, 17, 40, 97, 238}},
        {"table1_DELTA3", FamilyId::air, {StatTag::delta, 3}, {GfTag::y_k, 3},
         {0, 0, 1, 0, 2, 3, 7, 17, 40, 97}},
        {"table1_DELTA_GE1", FamilyId::air, {StatTag::delta_ge, 1}, {GfTag::y_geq, 1},
         {1, 1, 3, 6, 13, 30, 70, 167, 405, 992}},
        {"table1_DELTA_GE2", FamilyId::air, {StatTag::delta_ge, 2}, {GfTag::y_geq, 2},
         {0, 1, 1, 3, 6, 13, 30, 70, 167, 405}},
        {"table1_DELTA_GE3", FamilyId::air, {StatTag::delta_ge, 3}, {GfTag::y_geq, 3},
         {0, 0, 1, 1, 3, 6, 13, 30, 70, 167}},
        {"table1_DELTA_LE1", FamilyId::air, {StatTag::delta_le, 1}, {GfTag::y_leq, 1},
         {1, 0, 2, 3, 7, 17, 40, 97, 238, 587}},
        {"table1_DELTA_LE2", FamilyId::air, {StatTag::delta_le, 2}, {GfTag::y_leq, 2},
         {1, 1, 2, 5, 10, 24, 57, 137, 335, 825}},
        {"table1_DELTA_LE3", FamilyId::air, {StatTag::delta_le, 3}, {GfTag::y_leq, 3},
         {1, 1, 3, 5, 12, 27, 64, 154, 375, 922}},
        // non-decreasing class
        {"table2_U", FamilyId::air_inc, {StatTag::u_count}, {GfTag::pop_u_inc},
         {1, 2, 5, 13, 32, 76, 176, 400, 896, 1984}},
        {"table2_D1", FamilyId::air_inc, {StatTag::d1_count}, {GfTag::pop_d_inc},
         {1, 0, 2, 3, 7, 15, 33, 72, 157, 341}},
        {"table2_PEAK", FamilyId::air_inc, {StatTag::peak}, {GfTag::pop_peak_inc},
         {1, 1, 3, 7, 16, 36, 80, 176, 384, 832}},
        {"table2_RET", FamilyId::air_inc, {StatTag::ret}, {GfTag::pop_ret_inc},
         {1, 1, 3, 6, 13, 27, 56, 115, 235, 478}},
        {"table2_CAT", FamilyId::air_inc, {StatTag::cat}, {GfTag::pop_cat_inc},
         {0, 1, 1, 4, 8, 18, 38, 80, 166, 342}},
        {"table2_DELTA1", FamilyId::air_inc, {StatTag::delta, 1}, {GfTag::w_k, 1},
         {1, 0, 2, 3, 7, 15, 33, 72, 157, 341}},
        {"table2_DELTA2", FamilyId::air_inc, {StatTag::delta, 2}, {GfTag::w_k, 2},
         {0, 1, 0, 2, 3, 7, 15, 33, 72, 157}},
        {"table2_DELTA3", FamilyId::air_inc, {StatTag::delta, 3}, {GfTag::w_k, 3},
         {0, 0, 1, 0, 2, 3, 7, 15, 33, 72}},
        {"table2_DELTA_GE1", FamilyId::air_inc, {StatTag::delta_ge, 1}, {GfTag::w_geq, 1},
         {1, 1, 3, 6, 13, 28, 61, 133, 290, 631}},
        {"table2_DELTA_GE2", FamilyId::air_inc, {StatTag::delta_ge, 2}, {GfTag::w_geq, 2},
         {0, 1, 1, 3, 6, 13, 28, 61, 133, 290}},
        {"table2_DELTA_GE3", FamilyId::air_inc, {StatTag::delta_ge, 3}, {GfTag::w_geq, 3},
         {0, 0, 1, 1, 3, 6, 13, 28, 61, 133}},
        {"table2_DELTA_LE1", FamilyId::air_inc, {StatTag::delta_le, 1}, {GfTag::w_leq, 1},
         {1, 0, 2, 3, 7, 15, 33, 72, 157, 341}},
        {"table2_DELTA_LE2", FamilyId::air_inc, {StatTag::delta_le, 2}, {GfTag::w_leq, 2},
         {1, 1, 2, 5, 10, 22, 48, 105, 229, 498}},
        {"table2_DELTA_LE3", FamilyId::air_inc, {StatTag::delta_le, 3}, {GfTag::w_leq, 3},
         {1, 1, 3, 5, 12, 25, 55, 120, 262, 570}},
    };
    return rows;
}

inline Witness check_table_row(const TableRow& row, int max_n) {
    Series<Rational> s = gf(row.gfid, 12);
    for (int n = 2; n <= 11; ++n) {
        BigInt want = row.want[n - 2];
        BigInt brute = popularity(row.family, n, row.stat, max_n);
        if (brute != want)
            return "exhaustive popularity at n=" + std::to_string(n) + " is " + brute.str() +
                   ", table says " + want.str();
        if (coeff_bigint(s, n) != want)
            return "series coefficient at n=" + std::to_string(n) + " is " +
                   coeff_bigint(s, n).str() + ", table says " + want.str();
    }
    return std::nullopt;
}

inline Witness check_table_counts(FamilyId fam, GfTag gfid, const long (&want)[10], int max_n) {
    Series<Rational> s = gf({gfid}, 12);
    for (int n = 2; n <= 11; ++n) {
        if (count_family(fam, n, max_n) != BigInt(want[n - 2]))
            return "census at n=" + std::to_string(n) + " differs from the table";
        if (coeff_bigint(s, n) != BigInt(want[n - 2]))
            return "series coefficient at n=" + std::to_string(n) + " differs from the table";
    }
    return std::nullopt;
}

inline void add_table_checks(std::vector<Check>& cs, const VerifyOptions& opt) {
    int max_n = opt.max_n;
    static const long counts1[10] = {1, 1, 2, 4, 8, 17, 37, 82, 185, 423};
    static const long counts2[10] = {1, 1, 2, 4, 8, 16, 32, 64, 128, 256};
    cs.push_back({"table1_counts", "n = 2..11 vs census and series",
                  [max_n] { return check_table_counts(FamilyId::air, GfTag::a, counts1, max_n); }});
    cs.push_back(
        {"table2_counts", "n = 2..11 vs census and series",
         [max_n] { return check_table_counts(FamilyId::air_inc, GfTag::a_inc, counts2, max_n); }});
    for (const TableRow& row : table_rows())
        cs.push_back({row.label, "n = 2..11 vs exhaustive popularity and series coefficient",
                      [&row, max_n] { return check_table_row(row, max_n); }});
}

// ---- asymptotics -----------------------------------------------------------

inline double coeff_double(const Series<Rational>& s, int n) {
    return coeff_bigint(s, n).convert_to<double>();
}

inline Witness ratio_pair_check(double exact100, double asym100, double exact200, double asym200) {
    double r100 = exact100 / asym100;
    double r200 = exact200 / asym200;
    if (!(r200 >= 0.95 && r200 <= 1.05))
        return "ratio at n=200 is " + std::to_string(r200) + ", outside [0.95, 1.05]";
    if (!(std::abs(r200 - 1.0) < std::abs(r100 - 1.0)))
        return "ratio does not improve: " + std::to_string(r100) + " at n=100 vs " +
               std::to_string(r200) + " at n=200";
    return std::nullopt;
}

inline Witness check_sqrt_asym(GfId id, double (*approx)(long), int k_for_y) {
    Series<Rational> s = gf(id, 200);
    auto asym = [&](long n) { return k_for_y ? asym_y_k(n, k_for_y) : approx(n); };
    return ratio_pair_check(coeff_double(s, 100), asym(100), coeff_double(s, 200), asym(200));
}

inline Witness check_pow2_asym(GfId id, int k) {
    Series<Rational> s = gf(id, 200);
    auto asym = [&](long n) { return k ? asym_w_k_inc(n, k) : asym_pop_d_inc(n); };
    return ratio_pair_check(coeff_double(s, 100), asym(100), coeff_double(s, 200), asym(200));
}

inline Witness check_cat_ret_limit() {
    Series<Rational> cat = gf({GfTag::pop_cat}, 300);
    Series<Rational> ret = gf({GfTag::pop_ret}, 300);
    double r = coeff_double(cat, 300) / coeff_double(ret, 300);
    double want = limit_cat_ret_ratio();
    if (std::abs(r - want) > 0.01)
        return "ratio at n=300 is " + std::to_string(r) + ", limit is " + std::to_string(want);
    return std::nullopt;
}

inline Witness check_cat_ret_limit_inc() {
    double c = pop_cat_inc_exact(300).convert_to<double>();
    double r = pop_ret_inc_exact(300).convert_to<double>();
    double got = c / r;
    double want = limit_cat_ret_ratio_inc();
    if (std::abs(got - want) > 0.01)
        return "ratio at n=300 is " + std::to_string(got) + ", limit is " + std::to_string(want);
    return std::nullopt;
}

inline void add_asymptotic_checks(std::vector<Check>& cs, const VerifyOptions&) {
    const struct {
        const char* name;
        GfId id;
        double (*approx)(long);
        int k;
    } sqrt_rows[] = {
        {"asym_pop_u", {GfTag::pop_u}, asym_pop_u, 0},
        {"asym_pop_d", {GfTag::pop_d}, asym_pop_d, 0},
        {"asym_pop_peak", {GfTag::pop_peak}, asym_pop_peak, 0},
        {"asym_pop_ret", {GfTag::pop_ret}, asym_pop_ret, 0},
        {"asym_pop_cat", {GfTag::pop_cat}, asym_pop_cat, 0},
        {"asym_pyramid_k3", {GfTag::y_k, 3}, nullptr, 3},
    };
    for (const auto& r : sqrt_rows)
        cs.push_back({r.name, "exact/approx in [0.95, 1.05] at n=200 and closer to 1 than at n=100",
                      [r] { return check_sqrt_asym(r.id, r.approx, r.k); }});
    cs.push_back({"asym_pop_d_inc", "exact/approx in [0.95, 1.05] at n=200 and closer to 1 than at n=100",
                  [] { return check_pow2_asym({GfTag::pop_d_inc}, 0); }});
    cs.push_back({"asym_pyramid_inc_k2",
                  "exact/approx in [0.95, 1.05] at n=200 and closer to 1 than at n=100",
                  [] { return check_pow2_asym({GfTag::w_k, 2}, 2); }});
    cs.push_back({"limit_cat_ret", "within 0.01 of the limit at n=300",
                  [] { return check_cat_ret_limit(); }});
    cs.push_back({"limit_cat_ret_inc", "within 0.01 of the limit at n=300",
                  [] { return check_cat_ret_limit_inc(); }});
}

inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int threads) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            CheckResult r{checks[i].name, checks[i].bound, true, ""};
            try {
                if (Witness w = checks[i].run()) {
                    r.pass = false;
                    r.witness = *w;
                }
            } catch (const std::exception& e) {
                r.pass = false;
                r.witness = e.what();
            }
            results[i] = std::move(r);
        }
    };
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    t = std::max(1, std::min<int>(t, static_cast<int>(checks.size())));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(t);
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace verifydetail

inline std::vector<CheckResult> run_verify(VerifySuite suite, const VerifyOptions& opt = {}) {
    std::vector<verifydetail::Check> checks;
    if (suite == VerifySuite::all || suite == VerifySuite::bijections)
        verifydetail::add_bijection_checks(checks, opt);
    if (suite == VerifySuite::all || suite == VerifySuite::series)
        verifydetail::add_series_checks(checks, opt);
    if (suite == VerifySuite::all || suite == VerifySuite::tables)
        verifydetail::add_table_checks(checks, opt);
    if (suite == VerifySuite::all || suite == VerifySuite::asymptotics)
        verifydetail::add_asymptotic_checks(checks, opt);
    return verifydetail::run_checks(checks, opt.threads);
}

}  // namespace dap
