#pragma once

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dap/errors.hpp"
#include "dap/series.hpp"

namespace dap {

// Every id is computed by two independent routes (closed form against a
// functional-equation or derivative route) which must agree coefficientwise;
// a disagreement throws, so holding a result is proof the routes matched.
enum class GfTag {
    a,
    a_xyz,
    m,
    p,
    r,
    c,
    pk,
    y_k,
    y_geq,
    y_leq,
    s,
    g,
    n_startd,
    v,
    w_wavy,
    a_inc,
    a0,
    a_inc_xyz,
    z_xyz,
    b_inc,
    r_inc,
    c_inc,
    u_inc,
    pk_inc,
    z_k,
    w_k,
    w_geq,
    w_leq,
    pop_u,
    pop_d,
    pop_peak,
    pop_ret,
    pop_cat,
    pop_u_inc,
    pop_d_inc,
    pop_peak_inc,
    pop_ret_inc,
    pop_cat_inc,
};

struct GfId {
    GfTag tag;
    int k = 0;

    friend auto operator<=>(const GfId&, const GfId&) = default;
};

enum class GfArity { univariate, bivariate, trivariate };

inline constexpr struct {
    GfTag tag;
    const char* name;
    bool takes_k;
    GfArity arity;
} gf_table[] = {
    {GfTag::a, "A", false, GfArity::univariate},
    {GfTag::a_xyz, "A_XYZ", false, GfArity::trivariate},
    {GfTag::m, "M", false, GfArity::univariate},
    {GfTag::p, "P", false, GfArity::bivariate},
    {GfTag::r, "R", false, GfArity::bivariate},
    {GfTag::c, "C", false, GfArity::bivariate},
    {GfTag::pk, "PK", true, GfArity::bivariate},
    {GfTag::y_k, "Y_K", true, GfArity::univariate},
    {GfTag::y_geq, "Y_GEQ", true, GfArity::univariate},
    {GfTag::y_leq, "Y_LEQ", true, GfArity::univariate},
    {GfTag::s, "S", false, GfArity::univariate},
    {GfTag::g, "G", false, GfArity::univariate},
    {GfTag::n_startd, "N_STARTD", false, GfArity::univariate},
    {GfTag::v, "V", false, GfArity::univariate},
    {GfTag::w_wavy, "W_WAVY", false, GfArity::univariate},
    {GfTag::a_inc, "A_INC", false, GfArity::univariate},
    {GfTag::a0, "A0", false, GfArity::univariate},
    {GfTag::a_inc_xyz, "A_INC_XYZ", false, GfArity::trivariate},
    {GfTag::z_xyz, "Z_XYZ", false, GfArity::trivariate},
    {GfTag::b_inc, "B_INC", false, GfArity::bivariate},
    {GfTag::r_inc, "R_INC", false, GfArity::bivariate},
    {GfTag::c_inc, "C_INC", false, GfArity::bivariate},
    {GfTag::u_inc, "U_INC", false, GfArity::bivariate},
    {GfTag::pk_inc, "PK_INC", true, GfArity::bivariate},
    {GfTag::z_k, "Z_K", true, GfArity::bivariate},
    {GfTag::w_k, "W_K", true, GfArity::univariate},
    {GfTag::w_geq, "W_GEQ", true, GfArity::univariate},
    {GfTag::w_leq, "W_LEQ", true, GfArity::univariate},
    {GfTag::pop_u, "POP_U", false, GfArity::univariate},
    {GfTag::pop_d, "POP_D", false, GfArity::univariate},
    {GfTag::pop_peak, "POP_PEAK", false, GfArity::univariate},
    {GfTag::pop_ret, "POP_RET", false, GfArity::univariate},
    {GfTag::pop_cat, "POP_CAT", false, GfArity::univariate},
    {GfTag::pop_u_inc, "POP_U_INC", false, GfArity::univariate},
    {GfTag::pop_d_inc, "POP_D_INC", false, GfArity::univariate},
    {GfTag::pop_peak_inc, "POP_PEAK_INC", false, GfArity::univariate},
    {GfTag::pop_ret_inc, "POP_RET_INC", false, GfArity::univariate},
    {GfTag::pop_cat_inc, "POP_CAT_INC", false, GfArity::univariate},
};

inline GfArity gf_arity(GfTag t) {
    for (auto& e : gf_table)
        if (e.tag == t) return e.arity;
    throw internal_error("unknown series tag");
}

inline bool gf_takes_k(GfTag t) {
    for (auto& e : gf_table)
        if (e.tag == t) return e.takes_k;
    throw internal_error("unknown series tag");
}

inline std::string gf_name(GfId id) {
    for (auto& e : gf_table)
        if (e.tag == id.tag)
            return e.takes_k ? std::string(e.name) + "(" + std::to_string(id.k) + ")"
                             : std::string(e.name);
    throw internal_error("unknown series tag");
}

inline GfId parse_gf(std::string_view text) {
    std::string_view base = text;
    int k = 0;
    bool has_k = false;
    if (auto open = text.find('('); open != std::string_view::npos) {
        if (text.empty() || text.back() != ')')
            throw parse_error("malformed series id '" + std::string(text) + "'");
        base = text.substr(0, open);
        std::string_view arg = text.substr(open + 1, text.size() - open - 2);
        auto res = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (res.ec != std::errc{} || res.ptr != arg.data() + arg.size())
            throw parse_error("malformed series parameter in '" + std::string(text) + "'");
        has_k = true;
    }
    for (auto& e : gf_table)
        if (base == e.name) {
            if (e.takes_k != has_k)
                throw parse_error(std::string(e.name) +
                                  (e.takes_k ? " requires a parameter" : " takes no parameter"));
            if (e.takes_k && k < 1)
                throw domain_error("series parameter must be at least 1");
            return {e.tag, k};
        }
    throw domain_error("unknown series id '" + std::string(text) + "'");
}

namespace gfdetail {

using QS = Series<Rational>;
using PS = Series<Poly1>;
using TS = Series<Poly2>;

inline QS qpoly(int N, std::initializer_list<std::pair<int, long>> terms) {
    QS s = QS::zero(N);
    for (auto& [e, v] : terms)
        if (e <= N) s.c[e] += Rational(v);
    return s;
}

// x^k usable at any order: the result's order grows with the exponent, so
// products with order-N series truncate correctly instead of erroring.
inline QS xpow(int N, int k) { return shift_mul_x(QS::constant(N, Rational(1)), k); }

inline QS one_q(int N) { return QS::constant(N, Rational(1)); }

inline PS ppoly(int N, std::initializer_list<std::tuple<int, int, long>> terms) {
    PS s = PS::zero(N);
    for (auto& [e, dy, v] : terms)
        if (e <= N) s.c[e] = s.c[e] + p1(Rational(v), dy);
    return s;
}

inline PS pxypow(int N, int xe, int dy) {
    return shift_mul_x(PS::constant(N, p1(Rational(1), dy)), xe);
}

inline PS one_ps(int N) { return PS::constant(N, p1(Rational(1))); }

inline TS tpoly(int N, std::initializer_list<std::tuple<int, int, int, long>> terms) {
    TS s = TS::zero(N);
    for (auto& [e, dy, dz, v] : terms)
        if (e <= N) s.c[e] = s.c[e] + p2(Rational(v), dy, dz);
    return s;
}

inline TS one_ts(int N) { return TS::constant(N, p2(Rational(1), 0, 0)); }

template <class C>
Series<C> matched(const std::string& what, int want, const Series<C>& r1, const Series<C>& r2) {
    if (r1.order < want || r2.order < want)
        throw internal_error(what + ": a construction route lost series order");
    for (int i = 0; i <= want; ++i)
        if (!(r1.c[i] == r2.c[i]))
            throw internal_mismatch_error(
                what + ": construction routes disagree at x^" + std::to_string(i) + ": " +
                ring<C>::to_string(r1.c[i]) + " versus " + ring<C>::to_string(r2.c[i]));
    Series<C> out = r1.truncated(want);
    if (!is_integral(out))
        throw internal_mismatch_error(what + ": non-integer coefficient in a counting series");
    return out;
}

// x^4 - 2x^3 - x^2 - 2x + 1, the discriminant under every square root on the
// plain-family side; it factors as (x^2+x+1)(x^2-3x+1).
inline QS rad(int N) { return qpoly(N, {{0, 1}, {1, -2}, {2, -1}, {3, -2}, {4, 1}}); }
inline QS sqrt_rad(int N) { return sqrt_series(rad(N)); }
inline PS rad_lift(int N) { return lift(rad(N)); }

// --- pocket-path counting, plain side ----------------------------------------

inline QS a_closed(int N) {
    QS num = qpoly(N + 1, {{0, 1}, {1, -1}, {2, -1}}) - sqrt_rad(N + 1);
    return div_cancel(num, qpoly(N + 1, {{1, 2}}));
}

inline QS a_fe(int N) {
    // A = x^2 + x^2 A + x A + x A^2, from the first-return factorization
    return solve_quadratic_fe(xpow(N, 2).truncated(N), qpoly(N, {{1, 1}, {2, 1}}),
                              xpow(N, 1).truncated(N), N);
}

// 1 - x - x^2 - 2xA equals the square root of the discriminant; the derivative
// routes use this so their radical comes from A's own equation, not Newton.
inline QS sqrt_rad_from_fe(int N) {
    return qpoly(N, {{0, 1}, {1, -1}, {2, -1}}) -
           scale(shift_mul_x(a_fe(N), 1).truncated(N), Rational(2));
}

inline QS m_closed(int N) { return shift_div_x(a_closed(N + 1), 1); }
inline QS m_fe(int N) { return shift_div_x(a_fe(N + 1), 1); }

inline QS v_closed(int N) { return shift_div_x(a_closed(N + 2), 2); }

inline QS v_fe(int N) {
    QS one = one_q(N), x1 = xpow(N, 1), x2 = xpow(N, 2), x3 = xpow(N, 3);
    return solve_fixed_point<Rational>(
        [&](const QS& v) { return one + x1 * v + x2 * v + x3 * v * v; }, N);
}

inline QS w_closed(int N) {
    return div(xpow(N, 1).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
}

inline QS w_fe(int N) {
    QS x1 = xpow(N, 1);
    return solve_fixed_point<Rational>([&](const QS& w) { return x1 + x1 * w; }, N);
}

// Joint system for grand words and their start-down subset: G = 1 + xG + x^2 MG + N
// and N = x^2 V + x^4 VMG + x^3 VG, iterated with N substituted into G's
// equation; both equations are re-checked against the returned pair.
inline std::pair<QS, QS> gn_system(const QS& m, const QS& v, int N) {
    QS one = one_q(N), x1 = xpow(N, 1), x2 = xpow(N, 2), x3 = xpow(N, 3), x4 = xpow(N, 4);
    QS g = solve_fixed_point<Rational>(
        [&](const QS& gg) {
            return one + x1 * gg + x2 * m * gg + x2 * v + x4 * v * m * gg + x3 * v * gg;
        },
        N);
    QS n = x2 * v + x4 * v * m * g + x3 * v * g;
    if (!(one + x1 * g + x2 * m * g + n == g))
        throw internal_mismatch_error("grand-word system does not close");
    return {g, n};
}

inline QS g_closed(int N) {
    QS m = m_closed(N), v = v_closed(N), one = one_q(N);
    QS den =
        one - xpow(N, 1).truncated(N) - xpow(N, 2) * m - xpow(N, 3) * v - xpow(N, 4) * v * m;
    return div(one + xpow(N, 2) * v, den);
}

inline QS n_startd_closed(int N) {
    QS m = m_closed(N), v = v_closed(N), g = g_closed(N);
    return xpow(N, 2) * v + xpow(N, 4) * v * m * g + xpow(N, 3) * v * g;
}

inline QS s_closed(int N) {
    QS s = sqrt_rad(N + 1);
    QS num = qpoly(N + 1, {{0, 1}, {1, -1}, {2, 1}}) - s;
    QS den = qpoly(N + 1, {{0, -1}, {1, 1}}) * rad(N + 1) +
             qpoly(N + 1, {{0, 1}, {2, -2}, {3, 1}}) * s;
    return div_cancel(num, den);
}

inline QS s_system(int N) {
    auto [g, n] = gn_system(m_fe(N), v_fe(N), N);
    return w_fe(N) * g + n;
}

// --- pocket-path counting, non-decreasing side --------------------------------

inline QS a_inc_closed(int N) {
    return div(qpoly(N, {{2, 1}, {3, -1}}), qpoly(N, {{0, 1}, {1, -2}}));
}

inline QS a_inc_fe(int N) {
    QS x1 = xpow(N, 1), x2 = xpow(N, 2);
    QS tail = div(xpow(N, 3).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
    return solve_fixed_point<Rational>(
        [&](const QS& a) { return x2 * a + x1 * a + x2 + tail * a; }, N);
}

inline QS a0_closed(int N) {
    return div(xpow(N, 2).truncated(N), qpoly(N, {{0, 1}, {1, -1}, {2, -1}}));
}

inline QS a0_fe(int N) {
    QS head = div(xpow(N, 2).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
    return solve_fixed_point<Rational>([&](const QS& a) { return head + head * a; }, N);
}

// --- pyramid popularity, plain side --------------------------------------------

inline QS y1_closed_core(int N) {
    // (1 + 2x^2 - x^3 + (1-x) sqrt(rad)) / (2 sqrt(rad)); the k-pyramid series
    // is x^{k+1} times this core
    QS s = sqrt_rad(N);
    QS num = qpoly(N, {{0, 1}, {2, 2}, {3, -1}}) + qpoly(N, {{0, 1}, {1, -1}}) * s;
    return div(num, scale(s, Rational(2)));
}

inline QS y_k_closed(int k, int N) {
    return (y1_closed_core(N) * xpow(N, k + 1)).truncated(N);
}

inline QS y_k_fe(int k, int N) {
    // marker derivative of the k-pyramid equation at 1, solved for the sum:
    // Y_k = (x^{k+1} - x^{k+2}(1+A)) (1+A) / (1 - x - x^2 - 2xA)
    QS a = a_fe(N), one = one_q(N);
    QS num =
        (xpow(N, k + 1).truncated(N) - (xpow(N, k + 2) * (one + a)).truncated(N)) * (one + a);
    return div(num, sqrt_rad_from_fe(N));
}

inline QS geometric_prefix(int k, int N) {  // x^{k-1} / (1-x)
    return div(xpow(N, k - 1).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
}

inline QS window_prefix(int k, int N) {  // (1 - x^k) / (1-x)
    return div(one_q(N) - xpow(N, k).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
}

inline QS s_from_pyramids(int N) {
    // the meander language series also equals Y_1 / (x^2 (1-x)) - 1
    QS core = shift_div_x(y_k_closed(1, N + 2), 2);
    return div(core, qpoly(N, {{0, 1}, {1, -1}})).truncated(N) - one_q(N);
}

// --- popularity, plain side -----------------------------------------------------

inline QS pop_u_closed(int N) {
    QS s = sqrt_rad(N + 1);
    QS num = qpoly(N + 1, {{0, 1}, {1, -1}, {2, -1}}) - s;
    return div_cancel(num, shift_mul_x(scale(s, Rational(2)), 1));
}

inline QS pop_u_fe(int N) {
    QS a = a_fe(N), one = one_q(N);
    QS num = (xpow(N, 2).truncated(N) + (xpow(N, 1) * a).truncated(N)) * (one + a);
    return div(num, sqrt_rad_from_fe(N));
}

inline QS pop_d_fe(int N) {
    QS a = a_fe(N), one = one_q(N);
    QS num =
        (xpow(N, 2).truncated(N) - xpow(N, 3).truncated(N) - (xpow(N, 3) * a).truncated(N)) *
        (one + a);
    return div(num, sqrt_rad_from_fe(N));
}

inline QS pop_peak_closed(int N) {
    QS s = sqrt_rad(N);
    QS num = shift_mul_x(qpoly(N, {{0, 1}, {1, 1}, {2, -1}}) - s, 1).truncated(N);
    return div(num, scale(s, Rational(2)));
}

inline QS pop_peak_fe(int N) {
    QS a = a_fe(N), one = one_q(N);
    return div((xpow(N, 2) * (one + a)).truncated(N), sqrt_rad_from_fe(N));
}

inline QS pop_ret_closed(int N) {
    QS s = sqrt_rad(N);
    QS num = scale(qpoly(N, {{0, 1}, {1, -1}, {2, 1}}) - s, Rational(2));
    QS e = qpoly(N, {{0, 1}, {1, 1}, {2, -1}}) + s;
    return div(num, e * e);
}

inline QS pop_ret_fe(int N) {
    QS a = a_fe(N), one = one_q(N);
    QS num = (one + a) * (xpow(N, 2).truncated(N) + (xpow(N, 1) * a).truncated(N));
    QS den = one - xpow(N, 2).truncated(N) - (xpow(N, 1) * a).truncated(N);
    return div(num, den);
}

inline QS pop_cat_closed(int N) {
    QS s = sqrt_rad(N);
    QS num = scale(qpoly(N, {{0, 1}, {1, -1}, {2, -1}}) - s, Rational(2));
    QS e = qpoly(N, {{0, 1}, {1, 1}, {2, -1}}) + s;
    return div(num, e * e);
}

inline QS pop_cat_fe(int N) {
    QS a = a_fe(N), one = one_q(N);
    QS num = (xpow(N, 1) * a).truncated(N) * (one + a);
    QS den = one - xpow(N, 2).truncated(N) - (xpow(N, 1) * a).truncated(N);
    return div(num, den);
}

// --- popularity, non-decreasing side ---------------------------------------------

inline QS w1_closed_core(int N) {
    // (1-x)(1 - 4x + 5x^2 - 2x^3 + x^5) / ((1-2x)^2 (1-x-x^2)); the k-pyramid
    // series is x^{k+1} times this core
    QS num = qpoly(N, {{0, 1}, {1, -1}}) * qpoly(N, {{0, 1}, {1, -4}, {2, 5}, {3, -2}, {5, 1}});
    QS den = qpoly(N, {{0, 1}, {1, -2}}) * qpoly(N, {{0, 1}, {1, -2}}) *
             qpoly(N, {{0, 1}, {1, -1}, {2, -1}});
    return div(num, den);
}

inline QS w_k_closed(int k, int N) {
    return (w1_closed_core(N) * xpow(N, k + 1)).truncated(N);
}

// Unit-pyramid marker derivative of the three-marker equation on the
// non-decreasing side, solved linearly.
inline QS w1_fe(int N) {
    QS a0 = a0_fe(N), ainc = a_inc_fe(N), one = one_q(N);
    QS x1 = xpow(N, 1).truncated(N), x2 = xpow(N, 2).truncated(N), x3 = xpow(N, 3).truncated(N);
    QS tail = div(x3, qpoly(N, {{0, 1}, {1, -1}}));
    QS zz = div((one + a0) * x2, one - x2 - tail);
    QS inner1 = x2 + x3 + x3 * a0 + x1 * ainc - x3 * (one + a0);
    QS rhs = zz * inner1 + (one + a0) * (x2 - x3 * (one + a0));
    return div(rhs, one - x1 * (one + a0));
}

inline QS w_k_fe(int k, int N) {
    if (k == 1) return w1_fe(N);
    // marker derivative of the k-pyramid equation on that side, k >= 2
    QS a0 = a0_fe(N), ainc = a_inc_fe(N), one = one_q(N);
    QS x1 = xpow(N, 1).truncated(N), x2 = xpow(N, 2).truncated(N);
    QS xk = xpow(N, k).truncated(N), xk1 = xpow(N, k + 1).truncated(N),
       xk2 = xpow(N, k + 2).truncated(N);
    QS geo = div(x2, qpoly(N, {{0, 1}, {1, -1}}));
    QS zky = div((one + a0) * xk1, one - geo);
    QS inner1 = x2 + xk1 + xk2 * (one + a0) + x1 * ainc - x1 * xk - xk2 * (one + a0);
    QS rhs = zky * inner1 + (one + a0) * (xk1 - xk2 * (one + a0));
    return div(rhs, one - x1 * (one + a0));
}

inline QS pop_peak_inc_closed(int N) {
    // marker derivative of the closed two-marker form: x^2 (1-x)^3 / (1-2x)^2
    QS omx = qpoly(N, {{0, 1}, {1, -1}});
    QS num = (xpow(N, 2) * omx * omx * omx).truncated(N);
    QS den = qpoly(N, {{0, 1}, {1, -2}}) * qpoly(N, {{0, 1}, {1, -2}});
    return div(num, den);
}

inline QS pop_peak_inc_fe(int N) {
    QS ainc = a_inc_fe(N), one = one_q(N);
    QS geo = div(xpow(N, 2).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
    return div(xpow(N, 2).truncated(N) + geo * ainc, one - xpow(N, 1).truncated(N) - geo);
}

inline QS pop_ret_inc_closed(int N) {
    QS omx = qpoly(N, {{0, 1}, {1, -1}});
    QS num = (xpow(N, 2) * omx * omx).truncated(N);
    QS den = qpoly(N, {{0, 1}, {1, -2}}) * qpoly(N, {{0, 1}, {1, -1}, {2, -1}});
    return div(num, den);
}

inline QS pop_ret_inc_fe(int N) {
    QS ainc = a_inc_fe(N), one = one_q(N);
    QS x2 = xpow(N, 2).truncated(N);
    QS tail = div(xpow(N, 3).truncated(N), qpoly(N, {{0, 1}, {1, -1}}));
    QS num = x2 + x2 * ainc + xpow(N, 1).truncated(N) * ainc + tail * ainc;
    return div(num, one - x2 - tail);
}

inline QS pop_cat_inc_closed(int N) {
    QS num = (xpow(N, 3) * qpoly(N, {{0, 1}, {1, -1}}) * qpoly(N, {{0, 1}, {1, -1}, {2, 1}}))
                 .truncated(N);
    QS den = qpoly(N, {{0, -1}, {1, 2}}) * qpoly(N, {{0, -1}, {1, 1}, {2, 1}});
    return div(num, den);
}

inline QS pop_cat_inc_fe(int N) {
    QS a0 = a0_fe(N), ainc = a_inc_fe(N), one = one_q(N);
    QS x1 = xpow(N, 1).truncated(N), x2 = xpow(N, 2).truncated(N), x3 = xpow(N, 3).truncated(N);
    QS omx = qpoly(N, {{0, 1}, {1, -1}});
    QS tail = div(x3, omx);
    QS uy = div((one + a0) * x3, omx * (one - x2 - tail));
    QS bracket_const = x2 + x3 * (one + a0) + x1 * (ainc - x2 * (one + a0));
    QS bracket_dy = x3 * (one + a0) + x1 * (ainc - x2 * (one + a0));
    return uy * bracket_const + (one + a0) * bracket_dy;
}

inline QS pop_u_inc_closed(int N) {
    // every down step closes exactly one peak on this side, so the up-step
    // popularity is n a_n minus the peak popularity
    QS xa = shift_mul_x(deriv_x(a_inc_closed(N + 1)), 1).truncated(N);
    return xa - pop_peak_inc_closed(N);
}

inline QS pop_u_inc_fe(int N) {
    // up-step marker derivative of the three-marker equation, solved linearly
    QS a0 = a0_fe(N), ainc = a_inc_fe(N), one = one_q(N);
    QS x1 = xpow(N, 1).truncated(N), x2 = xpow(N, 2).truncated(N), x3 = xpow(N, 3).truncated(N);
    QS omx = qpoly(N, {{0, 1}, {1, -1}});
    QS tail = div(x3, omx);
    QS zy_num = x2 + div(x3 * qpoly(N, {{0, 2}, {1, -1}}), omx * omx);
    QS zy = div((one + a0) * zy_num, one - x2 - tail);
    QS inner1 = x2 + x3 + x3 * a0 + x1 * (ainc - x2 * (one + a0));
    QS rhs = zy * inner1 + (one + a0) * (x2 + x1 * ainc);
    return div(rhs, one - x1 * (one + a0));
}

// --- bivariate ids ----------------------------------------------------------------

inline PS p_closed(int N) {
    PS base = ppoly(N + 1, {{0, 0, 1}, {1, 0, -1}, {2, 1, -1}});
    PS s = sqrt_series(base * base - ppoly(N + 1, {{3, 1, 4}}));
    return div_cancel(base - s, ppoly(N + 1, {{1, 0, 2}}));
}

inline PS p_fe(int N) {
    return solve_quadratic_fe(pxypow(N, 2, 1).truncated(N), ppoly(N, {{1, 0, 1}, {2, 1, 1}}),
                              pxypow(N, 1, 0).truncated(N), N);
}

inline PS r_closed(int N) {
    PS s = lift(sqrt_rad(N));
    PS inner = ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}}) - s;
    PS y1 = PS::constant(N, p1(Rational(1), 1));
    PS two = PS::constant(N, p1(Rational(2)));
    return div(two, two - y1 * inner) - one_ps(N);
}

inline PS r_fe(int N) {
    PS c = pxypow(N, 2, 1).truncated(N) + (pxypow(N, 1, 1) * lift(a_fe(N))).truncated(N);
    return solve_linear_fe(c, c, N);
}

inline PS c_closed(int N) {
    PS s = lift(sqrt_rad(N));
    PS inner = ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}}) - s;
    PS y1 = PS::constant(N, p1(Rational(1), 1));
    PS two = PS::constant(N, p1(Rational(2)));
    return div(two, two - ppoly(N, {{2, 0, 2}}) - y1 * inner) - one_ps(N);
}

inline PS c_fe(int N) {
    PS c = pxypow(N, 2, 0).truncated(N) + (pxypow(N, 1, 1) * lift(a_fe(N))).truncated(N);
    return solve_linear_fe(c, c, N);
}

inline PS pk_closed(int k, int N) {
    int W = N + 1;
    PS ym1 = PS::constant(W, p1(Rational(1), 1) + p1(Rational(-1)));  // y - 1
    PS head = (pxypow(W, k + 1, 0) * ym1).truncated(W);
    PS q = head * (head + ppoly(W, {{0, 0, -2}, {1, 0, 2}, {2, 0, 2}})) + rad_lift(W);
    PS s = sqrt_series(q);
    PS num = head - scale((pxypow(W, k + 2, 0) * ym1).truncated(W), Rational(2)) +
             ppoly(W, {{0, 0, -1}, {1, 0, 1}, {2, 0, 1}}) + s;
    PS den = scale((pxypow(W, k + 2, 0) * ym1).truncated(W) - pxypow(W, 1, 0).truncated(W),
                   Rational(2));
    return div_cancel(num, den);
}

inline PS pk_fe(int k, int N) {
    // b0 = T(1-x) + x^{k+1} y + x^{k+2}(1-y) and b1 = x + x^{k+2}(1-y), where
    // T = x^2 + ... + x^k collects the short all-up prefixes (empty for k=1)
    PS t = PS::zero(N);
    for (int i = 2; i <= k; ++i) t = t + pxypow(N, i, 0).truncated(N);
    PS tail = (pxypow(N, k + 2, 0) * ppoly(N, {{0, 0, 1}, {0, 1, -1}})).truncated(N);
    PS b0 = t * ppoly(N, {{0, 0, 1}, {1, 0, -1}}) + pxypow(N, k + 1, 1).truncated(N) + tail;
    PS b1 = pxypow(N, 1, 0).truncated(N) + tail;
    return solve_quadratic_fe(b0, b0 + b1, b1, N);
}

inline PS b_inc_closed(int N) {
    PS num = (pxypow(N, 2, 1) * ppoly(N, {{0, 0, 1}, {1, 0, -1}})).truncated(N);
    return div(num, ppoly(N, {{0, 0, 1}, {1, 0, -2}, {2, 0, 1}, {2, 1, -1}}));
}

inline PS b_inc_fe(int N) {
    PS c1 = pxypow(N, 1, 0).truncated(N) +
            div(pxypow(N, 2, 1).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    return solve_linear_fe(pxypow(N, 2, 1).truncated(N), c1, N);
}

inline PS r_inc_closed(int N) {
    PS num = (pxypow(N, 2, 1) * ppoly(N, {{0, 0, 1}, {1, 0, -1}}) *
              ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}}))
                 .truncated(N);
    PS den = ppoly(N, {{0, 0, 1}, {1, 0, -2}}) * ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 1, -1}});
    return div(num, den);
}

inline PS r_inc_fe(int N) {
    PS c0 = pxypow(N, 2, 1).truncated(N) + (pxypow(N, 1, 1) * lift(a_inc_fe(N))).truncated(N);
    PS c1 = pxypow(N, 2, 1).truncated(N) +
            div(pxypow(N, 3, 1).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    return solve_linear_fe(c0, c1, N);
}

inline PS u_inc_closed(int N) {
    PS num = (pxypow(N, 2, 0) * ppoly(N, {{0, 0, 1}, {1, 0, -1}, {1, 1, 1}})).truncated(N);
    return div(num, ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {3, 0, 1}, {3, 1, -1}}));
}

inline PS u_inc_fe(int N) {
    PS c = pxypow(N, 2, 0).truncated(N) +
           div(pxypow(N, 3, 1).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    return solve_linear_fe(c, c, N);
}

inline PS c_inc_closed(int N) {
    PS num = (pxypow(N, 2, 0) * ppoly(N, {{0, 0, 1}, {1, 0, -1}}) *
              ppoly(N, {{0, 0, 1}, {1, 1, 1}, {1, 0, -2}, {2, 1, -1}}))
                 .truncated(N);
    PS den = ppoly(N, {{0, 0, 1}, {1, 0, -2}}) *
             ppoly(N, {{0, 0, 1}, {1, 0, -1}, {2, 0, -1}, {3, 0, 1}, {3, 1, -1}});
    return div(num, den);
}

inline PS c_inc_fe(int N) {
    // explicit composition: the catalog equation writes this id in terms of the
    // up-degree series at general marker and the two marker-erased series
    PS u = u_inc_fe(N);
    QS one_plus_u1 = eval_marker(u) + Rational(1);
    QS ainc = a_inc_fe(N);
    PS term =
        pxypow(N, 2, 0).truncated(N) + (pxypow(N, 3, 1) * lift(one_plus_u1)).truncated(N) +
        (pxypow(N, 1, 1) * lift(ainc - (xpow(N, 2) * one_plus_u1).truncated(N))).truncated(N);
    return (one_ps(N) + u) * term;
}

inline PS z_k_closed(int k, int N) {
    PS geo = div(pxypow(N, 2, 0).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    PS ym1 = PS::constant(N, p1(Rational(1), 1) + p1(Rational(-1)));
    PS den = one_ps(N) - geo - (pxypow(N, k + 1, 0) * ym1).truncated(N);
    return div(one_ps(N), den) - one_ps(N);
}

inline PS z_k_fe(int k, int N) {
    PS c = pxypow(N, k + 1, 1).truncated(N) +
           div(pxypow(N, 2, 0).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}})) -
           pxypow(N, k + 1, 0).truncated(N);
    return solve_linear_fe(c, c, N);
}

inline PS pk_inc_closed(int k, int N) {
    PS geo = div(pxypow(N, 2, 0).truncated(N), ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    PS ym1 = PS::constant(N, p1(Rational(1), 1) + p1(Rational(-1)));
    PS xk1ym1 = (pxypow(N, k + 1, 0) * ym1).truncated(N);
    PS mid = ppoly(N, {{0, 0, 1}, {1, 0, -1}}) -
             div((pxypow(N, 2, 0) * ppoly(N, {{0, 0, 2}, {1, 0, -1}})).truncated(N),
                 ppoly(N, {{0, 0, 1}, {1, 0, -1}}));
    PS num = (pxypow(N, 2, 0) *
              (one_ps(N) - geo + (pxypow(N, k - 1, 0) * mid * ym1).truncated(N) -
               (pxypow(N, 2 * k, 0) * ym1 * ym1).truncated(N)))
                 .truncated(N);
    PS den =
        (one_ps(N) - pxypow(N, 1, 0).truncated(N) - geo - xk1ym1) * (one_ps(N) - geo - xk1ym1);
    return div(num, den);
}

inline PS pk_inc_fe(int k, int N) {
    // helper-chain equation, stated for k >= 2 (the k = 1 instance is covered
    // by specializing the three-marker series instead)
    PS zk = z_k_fe(k, N);
    PS opz = one_ps(N) + zk;
    PS c0 = opz * (pxypow(N, 2, 0).truncated(N) + pxypow(N, k + 1, 1).truncated(N) +
                   (pxypow(N, k + 2, 0) * opz).truncated(N) - pxypow(N, k + 1, 0).truncated(N) -
                   (pxypow(N, k + 2, 1) * opz).truncated(N));
    PS c1 = (pxypow(N, 1, 0) * opz).truncated(N);
    return solve_linear_fe(c0.truncated(N), c1, N);
}

// --- trivariate ids ----------------------------------------------------------------

// Divide every coefficient by the first marker; used where a closed form's
// numerator and denominator share a plain marker factor.
inline TS shift_div_marker_y(const TS& a) {
    TS r = TS::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        Poly2 p = a.c[i];
        if (!p.c.empty()) {
            for (auto& v : p.c[0])
                if (v != 0)
                    throw series_error("coefficient is not divisible by the first marker");
            p.c.erase(p.c.begin());
        }
        p.trim();
        r.c[i] = std::move(p);
    }
    return r;
}

inline TS a_xyz_closed(int N) {
    int W = N + 1;
    TS radq = tpoly(W, {{4, 2, 2, 1},
                        {3, 2, 1, 2},
                        {3, 2, 0, -4},
                        {2, 2, 0, 1},
                        {2, 1, 1, -2},
                        {1, 1, 0, -2},
                        {0, 0, 0, 1}});
    TS s = sqrt_series(radq);
    TS num =
        tpoly(W, {{0, 0, 0, 1}, {1, 1, 0, -1}, {2, 1, 1, -1}, {3, 2, 0, -2}, {3, 2, 1, 2}}) - s;
    TS den = tpoly(W, {{1, 1, 0, 2}, {3, 2, 0, 2}, {3, 2, 1, -2}});
    int v = den.valuation();
    for (int i = 0; i < v; ++i)
        if (!ring<Poly2>::is_zero(num.c[i]))
            throw series_error("numerator valuation is below the denominator's");
    TS num2(num.order - v, std::vector<Poly2>(num.c.begin() + v, num.c.end()));
    TS den2(den.order - v, std::vector<Poly2>(den.c.begin() + v, den.c.end()));
    return div(shift_div_marker_y(num2), shift_div_marker_y(den2)).truncated(N);
}

inline TS a_xyz_fe(int N) {
    TS b0 = tpoly(N, {{2, 1, 1, 1}, {3, 2, 0, 1}, {3, 2, 1, -1}});
    TS b1 = tpoly(N, {{1, 1, 0, 1}, {3, 2, 0, 1}, {3, 2, 1, -1}});
    return solve_quadratic_fe(b0, b0 + b1, b1, N);
}

inline TS z_xyz_closed(int N) {
    TS num = tpoly(N, {{3, 2, 0, 1}, {3, 2, 1, -1}, {2, 1, 1, 1}});
    TS den = tpoly(N, {{3, 2, 1, 1}, {3, 2, 0, -1}, {2, 1, 1, -1}, {1, 1, 0, -1}, {0, 0, 0, 1}});
    return div(num, den);
}

inline TS z_xyz_fe(int N) {
    TS c = tpoly(N, {{2, 1, 1, 1}}) +
           div(tpoly(N, {{3, 2, 0, 1}}), tpoly(N, {{0, 0, 0, 1}, {1, 1, 0, -1}}));
    return solve_linear_fe(c, c, N);
}

inline TS a_inc_xyz_closed(int N) {
    TS num = tpoly(N, {{2, 1, 0, 1}}) * tpoly(N, {{0, 0, 0, 1}, {1, 1, 0, -1}}) *
             tpoly(N, {{1, 1, 1, 1}, {1, 1, 0, -1}, {0, 0, 1, -1}}) *
             tpoly(N, {{2, 1, 1, 1}, {1, 1, 0, 1}, {0, 0, 0, -1}});
    TS den = tpoly(N, {{3, 2, 1, 1},
                       {3, 2, 0, -1},
                       {2, 2, 0, 1},
                       {2, 1, 1, -1},
                       {1, 1, 0, -2},
                       {0, 0, 0, 1}}) *
             tpoly(N, {{3, 2, 1, 1}, {3, 2, 0, -1}, {2, 1, 1, -1}, {1, 1, 0, -1}, {0, 0, 0, 1}});
    return div(num, den);
}

inline TS a_inc_xyz_fe(int N) {
    TS z = z_xyz_fe(N);
    TS opz = one_ts(N) + z;
    TS c0 = opz * (tpoly(N, {{2, 1, 1, 1}, {3, 2, 0, 1}}) + tpoly(N, {{3, 2, 0, 1}}) * z -
                   tpoly(N, {{3, 2, 1, 1}}) * opz);
    TS c1 = tpoly(N, {{1, 1, 0, 1}}) * opz;
    return solve_linear_fe(c0.truncated(N), c1.truncated(N), N);
}

}  // namespace gfdetail

// --- public entry points --------------------------------------------------------

inline void check_gf_order(int order) {
    if (order < 0) throw domain_error("series order must be nonnegative");
}

inline void check_gf_k(GfId id) {
    if (gf_takes_k(id.tag) && id.k < 1) throw domain_error("series parameter must be at least 1");
    if (!gf_takes_k(id.tag) && id.k != 0) throw domain_error(gf_name(id) + " takes no parameter");
}

inline Series<Rational> gf(GfId id, int order) {
    using namespace gfdetail;
    check_gf_order(order);
    check_gf_k(id);
    const int N = order;
    const std::string name = gf_name(id);
    switch (id.tag) {
        case GfTag::a:
            return matched(name, N, a_closed(N), a_fe(N));
        case GfTag::m:
            return matched(name, N, m_closed(N), m_fe(N));
        case GfTag::v:
            return matched(name, N, v_closed(N), v_fe(N));
        case GfTag::w_wavy:
            return matched(name, N, w_closed(N), w_fe(N));
        case GfTag::g:
            return matched(name, N, g_closed(N), gn_system(m_fe(N), v_fe(N), N).first);
        case GfTag::n_startd:
            return matched(name, N, n_startd_closed(N), gn_system(m_fe(N), v_fe(N), N).second);
        case GfTag::s: {
            Series<Rational> r = matched(name, N, s_closed(N), s_system(N));
            return matched(name, N, r, s_from_pyramids(N));
        }
        case GfTag::a_inc:
            return matched(name, N, a_inc_closed(N), a_inc_fe(N));
        case GfTag::a0:
            return matched(name, N, a0_closed(N), a0_fe(N));
        case GfTag::y_k:
            return matched(name, N, y_k_closed(id.k, N), y_k_fe(id.k, N));
        case GfTag::y_geq:
            return matched(name, N, geometric_prefix(id.k, N) * y_k_closed(1, N),
                           geometric_prefix(id.k, N) * y_k_fe(1, N));
        case GfTag::y_leq:
            return matched(name, N, window_prefix(id.k, N) * y_k_closed(1, N),
                           window_prefix(id.k, N) * y_k_fe(1, N));
        case GfTag::w_k:
            return matched(name, N, w_k_closed(id.k, N), w_k_fe(id.k, N));
        case GfTag::w_geq:
            return matched(name, N, geometric_prefix(id.k, N) * w_k_closed(1, N),
                           geometric_prefix(id.k, N) * w_k_fe(1, N));
        case GfTag::w_leq:
            return matched(name, N, window_prefix(id.k, N) * w_k_closed(1, N),
                           window_prefix(id.k, N) * w_k_fe(1, N));
        case GfTag::pop_u:
            return matched(name, N, pop_u_closed(N), pop_u_fe(N));
        case GfTag::pop_d:
            return matched(name, N, y_k_closed(1, N), pop_d_fe(N));
        case GfTag::pop_peak:
            return matched(name, N, pop_peak_closed(N), pop_peak_fe(N));
        case GfTag::pop_ret:
            return matched(name, N, pop_ret_closed(N), pop_ret_fe(N));
        case GfTag::pop_cat:
            return matched(name, N, pop_cat_closed(N), pop_cat_fe(N));
        case GfTag::pop_u_inc:
            return matched(name, N, pop_u_inc_closed(N), pop_u_inc_fe(N));
        case GfTag::pop_d_inc:
            return matched(name, N, w_k_closed(1, N), w1_fe(N));
        case GfTag::pop_peak_inc:
            return matched(name, N, pop_peak_inc_closed(N), pop_peak_inc_fe(N));
        case GfTag::pop_ret_inc:
            return matched(name, N, pop_ret_inc_closed(N), pop_ret_inc_fe(N));
        case GfTag::pop_cat_inc:
            return matched(name, N, pop_cat_inc_closed(N), pop_cat_inc_fe(N));
        default:
            break;
    }
    throw type_mismatch_error("series id " + name + " is not univariate");
}

inline Series<Poly1> gf_marked(GfId id, int order) {
    using namespace gfdetail;
    check_gf_order(order);
    check_gf_k(id);
    const int N = order;
    const std::string name = gf_name(id);
    switch (id.tag) {
        case GfTag::p:
            return matched(name, N, p_closed(N), p_fe(N));
        case GfTag::r:
            return matched(name, N, r_closed(N), r_fe(N));
        case GfTag::c:
            return matched(name, N, c_closed(N), c_fe(N));
        case GfTag::pk:
            return matched(name, N, pk_closed(id.k, N), pk_fe(id.k, N));
        case GfTag::b_inc:
            return matched(name, N, b_inc_closed(N), b_inc_fe(N));
        case GfTag::r_inc:
            return matched(name, N, r_inc_closed(N), r_inc_fe(N));
        case GfTag::c_inc:
            return matched(name, N, c_inc_closed(N), c_inc_fe(N));
        case GfTag::u_inc:
            return matched(name, N, u_inc_closed(N), u_inc_fe(N));
        case GfTag::pk_inc:
            // the helper-chain equation starts at k = 2; the unit-pyramid case
            // is the three-marker series with the up marker erased, reading the
            // remaining marker as this id's marker
            return id.k == 1 ? matched(name, N, pk_inc_closed(1, N),
                                       eval_y(a_inc_xyz_fe(N), Rational(1)))
                             : matched(name, N, pk_inc_closed(id.k, N), pk_inc_fe(id.k, N));
        case GfTag::z_k:
            return matched(name, N, z_k_closed(id.k, N), z_k_fe(id.k, N));
        default:
            break;
    }
    throw type_mismatch_error("series id " + name + " does not carry one marker");
}

inline Series<Poly2> gf_marked2(GfId id, int order) {
    using namespace gfdetail;
    check_gf_order(order);
    check_gf_k(id);
    const int N = order;
    const std::string name = gf_name(id);
    switch (id.tag) {
        case GfTag::a_xyz:
            return matched(name, N, a_xyz_closed(N), a_xyz_fe(N));
        case GfTag::a_inc_xyz:
            return matched(name, N, a_inc_xyz_closed(N), a_inc_xyz_fe(N));
        case GfTag::z_xyz:
            return matched(name, N, z_xyz_closed(N), z_xyz_fe(N));
        default:
            break;
    }
    throw type_mismatch_error("series id " + name + " does not carry two markers");
}

// Counting coefficients as exact integers; integrality of every catalog series
// is already enforced by the dual-route check.
inline BigInt coeff_bigint(const Series<Rational>& s, int i) {
    const Rational& v = s.at(i);
    if (denominator(v) != 1)
        throw internal_mismatch_error("non-integer coefficient where a count was expected");
    return numerator(v);
}

// --- gradings of the pocket-path equation by up-step degree ------------------------

enum class GradingId { catalan, riordan };

inline GradingId parse_grading(std::string_view s) {
    if (s == "catalan") return GradingId::catalan;
    if (s == "riordan") return GradingId::riordan;
    throw domain_error("unknown grading '" + std::string(s) + "' (expected catalan or riordan)");
}

inline std::string grading_name(GradingId g) {
    return g == GradingId::catalan ? "CATALAN_GRADING" : "RIORDAN_GRADING";
}

// Substituting away the length variable in the three-marker equation and
// reading the series in the up-step marker alone: keeping every path grades
// the catalog by Catalan numbers, forbidding unit falls by Riordan numbers.
inline Series<Rational> graded_by_updegree(GradingId g, int order) {
    using namespace gfdetail;
    check_gf_order(order);
    const int N = order;
    if (g == GradingId::catalan) {
        // three-marker equation at x = 1, z = 1: B = y + 2yB + yB^2
        QS b = solve_quadratic_fe(qpoly(N, {{1, 1}}), qpoly(N, {{1, 2}}), qpoly(N, {{1, 1}}), N);
        QS closed = div_cancel(one_q(N + 1) - sqrt_series(qpoly(N + 1, {{0, 1}, {1, -4}})),
                               qpoly(N + 1, {{1, 2}}));
        return matched(grading_name(g), N, closed, b + Rational(1));
    }
    // three-marker equation at x = 1, z = 0: B = y^2 + (y + 2y^2) B + (y + y^2) B^2
    QS b = solve_quadratic_fe(qpoly(N, {{2, 1}}), qpoly(N, {{1, 1}, {2, 2}}),
                              qpoly(N, {{1, 1}, {2, 1}}), N);
    QS closed = div_cancel(
        qpoly(N + 1, {{0, 1}, {1, 1}}) - sqrt_series(qpoly(N + 1, {{0, 1}, {1, -2}, {2, -3}})),
        qpoly(N + 1, {{1, 2}, {2, 2}}));
    return matched(grading_name(g), N, closed, b + Rational(1));
}

}  // namespace dap
