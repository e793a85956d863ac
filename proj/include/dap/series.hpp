#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dap/errors.hpp"
#include "dap/numeric.hpp"

namespace dap {

// ---------------------------------------------------------------------------
// Coefficient rings for truncated series in x: plain rationals, dense
// polynomials in one marker variable, and dense polynomials in two marker
// variables. Only constants are invertible in the polynomial rings, which is
// exactly what series division needs to stay honest.
// ---------------------------------------------------------------------------

struct Poly1 {
    std::vector<Rational> c;  // c[i] = coefficient of y^i, trailing zeros trimmed

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Rational at(int i) const {
        return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rational(0);
    }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c == b.c; }
};

inline Poly1 p1(Rational v, int deg = 0) {
    if (v == 0) return {};
    Poly1 p;
    p.c.assign(deg + 1, Rational(0));
    p.c[deg] = std::move(v);
    return p;
}

inline Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.trim();
    return r;
}

inline Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.trim();
    return r;
}

inline Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly1 r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

struct Poly2 {
    std::vector<std::vector<Rational>> c;  // c[i][j] = coefficient of y^i z^j

    void trim() {
        for (auto& row : c)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
    Rational at(int i, int j) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return Rational(0);
        if (j < 0 || j >= static_cast<int>(c[i].size())) return Rational(0);
        return c[i][j];
    }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c == b.c; }
};

inline Poly2 p2(Rational v, int dy, int dz) {
    if (v == 0) return {};
    Poly2 p;
    p.c.resize(dy + 1);
    p.c[dy].assign(dz + 1, Rational(0));
    p.c[dy][dz] = std::move(v);
    return p;
}

inline Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::size_t w = std::max(i < a.c.size() ? a.c[i].size() : 0,
                                 i < b.c.size() ? b.c[i].size() : 0);
        r.c[i].resize(w, Rational(0));
        for (std::size_t j = 0; j < w; ++j) r.c[i][j] = a.at(i, j) + b.at(i, j);
    }
    r.trim();
    return r;
}

inline Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        std::size_t w = std::max(i < a.c.size() ? a.c[i].size() : 0,
                                 i < b.c.size() ? b.c[i].size() : 0);
        r.c[i].resize(w, Rational(0));
        for (std::size_t j = 0; j < w; ++j) r.c[i][j] = a.at(i, j) - b.at(i, j);
    }
    r.trim();
    return r;
}

inline Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly2 r;
    std::size_t maxb = 0;
    for (auto& row : b.c) maxb = std::max(maxb, row.size());
    std::size_t maxa = 0;
    for (auto& row : a.c) maxa = std::max(maxa, row.size());
    if (maxa == 0 || maxb == 0) return {};
    r.c.assign(a.c.size() + b.c.size() - 1,
               std::vector<Rational>(maxa + maxb - 1, Rational(0)));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < a.c[i].size(); ++j) {
            if (a.c[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.c.size(); ++k)
                for (std::size_t l = 0; l < b.c[k].size(); ++l)
                    if (b.c[k][l] != 0) r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
        }
    r.trim();
    return r;
}

// Uniform access to ring structure for the series template.
template <class C>
struct ring;

template <>
struct ring<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static std::optional<Rational> inverse(const Rational& v) {
        if (v == 0) return std::nullopt;
        return Rational(1) / v;
    }
    static Rational scale(const Rational& v, const Rational& s) { return v * s; }
    static bool is_integral(const Rational& v) { return denominator(v) == 1; }
    static std::string to_string(const Rational& v) { return v.str(); }
};

template <>
struct ring<Poly1> {
    static Poly1 zero() { return {}; }
    static Poly1 one() { return p1(1); }
    static bool is_zero(const Poly1& v) { return v.c.empty(); }
    static std::optional<Poly1> inverse(const Poly1& v) {
        if (v.degree() != 0) return std::nullopt;
        return p1(Rational(1) / v.c[0]);
    }
    static Poly1 scale(const Poly1& v, const Rational& s) {
        Poly1 r = v;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }
    static bool is_integral(const Poly1& v) {
        for (auto& x : v.c)
            if (denominator(x) != 1) return false;
        return true;
    }
    static std::string to_string(const Poly1& v) {
        if (v.c.empty()) return "0";
        std::string out;
        for (int i = 0; i <= v.degree(); ++i) {
            if (v.c[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += v.c[i].str();
            if (i > 0) out += "*y^" + std::to_string(i);
        }
        return out;
    }
};

template <>
struct ring<Poly2> {
    static Poly2 zero() { return {}; }
    static Poly2 one() { return p2(1, 0, 0); }
    static bool is_zero(const Poly2& v) { return v.c.empty(); }
    static std::optional<Poly2> inverse(const Poly2& v) {
        if (v.c.size() != 1 || v.c[0].size() != 1 || v.c[0][0] == 0) return std::nullopt;
        return p2(Rational(1) / v.c[0][0], 0, 0);
    }
    static Poly2 scale(const Poly2& v, const Rational& s) {
        Poly2 r = v;
        for (auto& row : r.c)
            for (auto& x : row) x *= s;
        r.trim();
        return r;
    }
    static bool is_integral(const Poly2& v) {
        for (auto& row : v.c)
            for (auto& x : row)
                if (denominator(x) != 1) return false;
        return true;
    }
    static std::string to_string(const Poly2& v) {
        if (v.c.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < v.c.size(); ++i)
            for (std::size_t j = 0; j < v.c[i].size(); ++j) {
                if (v.c[i][j] == 0) continue;
                if (!out.empty()) out += " + ";
                out += v.c[i][j].str();
                if (i > 0) out += "*y^" + std::to_string(i);
                if (j > 0) out += "*z^" + std::to_string(j);
            }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Truncated power series in x over a coefficient ring C. Every series carries
// the order it is valid to; binary operations never extend it silently, the
// result is valid to the smaller of the two inputs.
// ---------------------------------------------------------------------------

template <class C>
struct Series {
    int order = 0;
    std::vector<C> c;  // size order + 1

    Series() : c(1, ring<C>::zero()) {}
    Series(int n, std::vector<C> coeffs) : order(n), c(std::move(coeffs)) {
        if (static_cast<int>(c.size()) != order + 1)
            throw internal_error("series coefficient count does not match order");
    }

    static Series zero(int n) { return Series(n, std::vector<C>(n + 1, ring<C>::zero())); }
    static Series constant(int n, C v) {
        Series s = zero(n);
        s.c[0] = std::move(v);
        return s;
    }
    static Series monomial(int n, int k, C v) {
        if (k > n) throw series_error("monomial exponent exceeds requested order");
        Series s = zero(n);
        s.c[k] = std::move(v);
        return s;
    }

    const C& at(int i) const {
        if (i < 0 || i > order) throw series_error("coefficient index beyond known order");
        return c[i];
    }

    // First index with a nonzero coefficient, or order+1 when none is known.
    int valuation() const {
        for (int i = 0; i <= order; ++i)
            if (!ring<C>::is_zero(c[i])) return i;
        return order + 1;
    }

    Series truncated(int n) const {
        if (n > order) throw series_error("cannot truncate to a higher order");
        return Series(n, std::vector<C>(c.begin(), c.begin() + n + 1));
    }

    // Zero-padding past the known order; the tail is an approximation, so this
    // is only for solver internals that correct it.
    Series padded(int n) const {
        if (n < order) return truncated(n);
        auto v = c;
        v.resize(n + 1, ring<C>::zero());
        return Series(n, std::move(v));
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order == b.order && a.c == b.c;
    }
};

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    int n = std::min(a.order, b.order);
    Series<C> r = Series<C>::zero(n);
    for (int i = 0; i <= n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    int n = std::min(a.order, b.order);
    Series<C> r = Series<C>::zero(n);
    for (int i = 0; i <= n; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    int n = std::min(a.order, b.order);
    Series<C> r = Series<C>::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (ring<C>::is_zero(a.c[i])) continue;
        for (int j = 0; i + j <= n; ++j)
            if (!ring<C>::is_zero(b.c[j])) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
}

template <class C>
Series<C> scale(const Series<C>& a, const Rational& s) {
    Series<C> r = a;
    for (auto& x : r.c) x = ring<C>::scale(x, s);
    return r;
}

template <class C>
Series<C> operator+(const Series<C>& a, const C& v) {
    Series<C> r = a;
    r.c[0] = r.c[0] + v;
    return r;
}

template <class C>
Series<C> operator-(const C& v, const Series<C>& a) {
    Series<C> r = scale(a, Rational(-1));
    r.c[0] = v + r.c[0];
    return r;
}

// Division with an invertible leading coefficient of the divisor.
template <class C>
Series<C> div(const Series<C>& a, const Series<C>& b) {
    int n = std::min(a.order, b.order);
    auto inv = ring<C>::inverse(b.c[0]);
    if (!inv)
        throw series_error("series division needs an invertible constant coefficient");
    Series<C> q = Series<C>::zero(n);
    for (int i = 0; i <= n; ++i) {
        C acc = a.c[i];
        for (int j = 1; j <= i; ++j)
            if (!ring<C>::is_zero(b.c[j]) && !ring<C>::is_zero(q.c[i - j]))
                acc = acc - b.c[j] * q.c[i - j];
        q.c[i] = *inv * acc;
    }
    return q;
}

// Division after cancelling the denominator's valuation: both sides must be
// divisible by the same power of x, as closed forms with removable factors are.
template <class C>
Series<C> div_cancel(const Series<C>& a, const Series<C>& b) {
    int v = b.valuation();
    if (v > b.order) throw series_error("division by a zero series");
    for (int i = 0; i < std::min(v, a.order + 1); ++i)
        if (!ring<C>::is_zero(a.c[i]))
            throw series_error("numerator valuation is below the denominator's");
    if (a.order < v) throw series_error("numerator too short to cancel valuation");
    Series<C> a2(a.order - v, std::vector<C>(a.c.begin() + v, a.c.end()));
    Series<C> b2(b.order - v, std::vector<C>(b.c.begin() + v, b.c.end()));
    return div(a2, b2);
}

template <class C>
Series<C> shift_mul_x(const Series<C>& a, int k) {
    if (k < 0) throw series_error("negative shift");
    Series<C> r = Series<C>::zero(a.order + k);
    for (int i = 0; i <= a.order; ++i) r.c[i + k] = a.c[i];
    return r;
}

template <class C>
Series<C> shift_div_x(const Series<C>& a, int k) {
    if (k < 0) throw series_error("negative shift");
    if (a.order < k) throw series_error("series too short to divide by x^k");
    for (int i = 0; i < k; ++i)
        if (!ring<C>::is_zero(a.c[i]))
            throw series_error("series is not divisible by x^" + std::to_string(k));
    return Series<C>(a.order - k, std::vector<C>(a.c.begin() + k, a.c.end()));
}

template <class C>
Series<C> deriv_x(const Series<C>& a) {
    if (a.order == 0) return Series<C>::zero(0);
    Series<C> r = Series<C>::zero(a.order - 1);
    for (int i = 1; i <= a.order; ++i) r.c[i - 1] = ring<C>::scale(a.c[i], Rational(i));
    return r;
}

// Square root of a series whose constant term is exactly 1, by the
// order-doubling Newton iteration s -> (s + a/s) / 2.
template <class C>
Series<C> sqrt_series(const Series<C>& a) {
    if (!(a.c[0] == ring<C>::one()))
        throw series_error("series square root needs constant term 1");
    Series<C> s = Series<C>::constant(0, ring<C>::one());
    while (s.order < a.order) {
        int m = std::min(2 * s.order + 1, a.order);
        s = scale(s.padded(m) + div(a.truncated(m), s.padded(m)), Rational(1, 2));
    }
    return s;
}

template <class C>
bool is_integral(const Series<C>& a) {
    for (auto& x : a.c)
        if (!ring<C>::is_integral(x)) return false;
    return true;
}

// --- marker calculus -------------------------------------------------------

inline Series<Rational> eval_marker(const Series<Poly1>& a, const Rational& v = Rational(1)) {
    Series<Rational> r = Series<Rational>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        Rational acc(0), pw(1);
        for (auto& coef : a.c[i].c) {
            acc += coef * pw;
            pw *= v;
        }
        r.c[i] = acc;
    }
    return r;
}

inline Series<Poly1> deriv_marker(const Series<Poly1>& a) {
    Series<Poly1> r = Series<Poly1>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        Poly1 d;
        for (int j = 1; j <= a.c[i].degree(); ++j) d.c.push_back(a.c[i].c[j] * j);
        d.trim();
        r.c[i] = std::move(d);
    }
    return r;
}

// Poly2 marker order: y outer, z inner.
inline Series<Poly1> eval_z(const Series<Poly2>& a, const Rational& v) {
    Series<Poly1> r = Series<Poly1>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        Poly1 p;
        p.c.resize(a.c[i].c.size(), Rational(0));
        for (std::size_t y = 0; y < a.c[i].c.size(); ++y) {
            Rational pw(1);
            for (auto& coef : a.c[i].c[y]) {
                p.c[y] += coef * pw;
                pw *= v;
            }
        }
        p.trim();
        r.c[i] = std::move(p);
    }
    return r;
}

inline Series<Poly1> eval_y(const Series<Poly2>& a, const Rational& v) {
    Series<Poly1> r = Series<Poly1>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        Poly1 p;
        Rational pw(1);
        for (std::size_t y = 0; y < a.c[i].c.size(); ++y) {
            for (std::size_t z = 0; z < a.c[i].c[y].size(); ++z) {
                if (p.c.size() <= z) p.c.resize(z + 1, Rational(0));
                p.c[z] += a.c[i].c[y][z] * pw;
            }
            pw *= v;
        }
        p.trim();
        r.c[i] = std::move(p);
    }
    return r;
}

inline Series<Poly1> lift(const Series<Rational>& a) {
    Series<Poly1> r = Series<Poly1>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) r.c[i] = p1(a.c[i]);
    return r;
}

inline Series<Poly2> lift2(const Series<Rational>& a) {
    Series<Poly2> r = Series<Poly2>::zero(a.order);
    for (int i = 0; i <= a.order; ++i) r.c[i] = p2(a.c[i], 0, 0);
    return r;
}

// ---------------------------------------------------------------------------
// Solvers. The generic one iterates s -> f(s) with a ramped order, raising the
// target by one coefficient per round; contraction is checked at runtime by
// requiring the agreement between successive iterates to grow every round.
// ---------------------------------------------------------------------------

template <class C, class F>
Series<C> solve_fixed_point(F&& f, int target_order) {
    Series<C> s = Series<C>::zero(0);
    int best = -1;
    for (int round = 0; round <= target_order + 2; ++round) {
        Series<C> in = s.padded(std::min(target_order, s.order + 1));
        Series<C> out = f(in);
        if (out.order > in.order) out = out.truncated(in.order);
        if (out.order < in.order)
            throw series_error("fixed-point map lost precision");
        int agree = 0;
        while (agree <= std::min(out.order, s.order) && out.c[agree] == s.c[agree]) ++agree;
        if (out.order == target_order && agree > target_order) return out;
        if (agree <= best)
            throw series_error("fixed-point iteration stagnated at order " +
                               std::to_string(agree));
        best = agree;
        s = std::move(out);
    }
    throw series_error("fixed-point iteration did not converge");
}

// A = c0 + c1 * A with val(c1) >= 1: direct coefficient recurrence.
template <class C>
Series<C> solve_linear_fe(const Series<C>& c0, const Series<C>& c1, int n) {
    if (c0.order < n || c1.order < n)
        throw series_error("linear solver inputs shorter than the requested order");
    if (!ring<C>::is_zero(c1.c[0]))
        throw series_error("linear solver needs a coefficient of positive valuation");
    Series<C> a = Series<C>::zero(n);
    for (int i = 0; i <= n; ++i) {
        C acc = c0.c[i];
        for (int j = 1; j <= i; ++j)
            if (!ring<C>::is_zero(c1.c[j]) && !ring<C>::is_zero(a.c[i - j]))
                acc = acc + c1.c[j] * a.c[i - j];
        a.c[i] = std::move(acc);
    }
    return a;
}

// A = c0 + c1 * A + c2 * A^2 with val(c0) >= 1 and val(c1) >= 1, so that the
// coefficient recurrence only ever reads indices already computed.
template <class C>
Series<C> solve_quadratic_fe(const Series<C>& c0, const Series<C>& c1, const Series<C>& c2,
                             int n) {
    if (c0.order < n || c1.order < n || c2.order < n)
        throw series_error("quadratic solver inputs shorter than the requested order");
    if (!ring<C>::is_zero(c0.c[0]) || !ring<C>::is_zero(c1.c[0]))
        throw series_error("quadratic solver needs positive valuation in c0 and c1");
    Series<C> a = Series<C>::zero(n);
    std::vector<C> sq(n + 1, ring<C>::zero());  // running coefficients of A^2
    for (int i = 1; i <= n; ++i) {
        // (A^2)_i only involves A_1 .. A_{i-1}, so it is already determined
        for (int j = 1; j < i; ++j)
            if (!ring<C>::is_zero(a.c[j]) && !ring<C>::is_zero(a.c[i - j]))
                sq[i] = sq[i] + a.c[j] * a.c[i - j];
        C acc = c0.c[i];
        for (int j = 1; j <= i; ++j)
            if (!ring<C>::is_zero(c1.c[j]) && !ring<C>::is_zero(a.c[i - j]))
                acc = acc + c1.c[j] * a.c[i - j];
        for (int j = 0; j <= i; ++j)
            if (!ring<C>::is_zero(c2.c[j]) && !ring<C>::is_zero(sq[i - j]))
                acc = acc + c2.c[j] * sq[i - j];
        a.c[i] = std::move(acc);
    }
    return a;
}

}  // namespace dap
