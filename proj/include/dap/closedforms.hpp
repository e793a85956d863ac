#pragma once

#include <cmath>
#include <numbers>

#include "dap/errors.hpp"
#include "dap/numeric.hpp"

namespace dap {

inline BigInt catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / BigInt(n + 1);
}

// Motzkin-like companion numbers via inclusion-exclusion over Catalan numbers.
inline BigInt riordan(long n) {
    if (n < 0) return 0;
    BigInt acc = 0;
    for (long k = 0; k <= n; ++k) {
        BigInt term = binomial(n, k) * catalan(k);
        if ((n - k) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline BigInt narayana(long a, long b) {
    if (a < 1 || b < 1 || b > a) return 0;
    return binomial(a, b) * binomial(a, b - 1) / BigInt(a);
}

// Number of n-step pocket paths with exactly k peaks.
inline BigInt peak_count_plain(long n, long k) { return narayana(n - k, k); }

// Same statistic on the non-decreasing side: binomial(n-2, 2(k-1)).
inline BigInt peak_count_inc(long n, long k) {
    if (n < 2 || k < 1) return 0;
    return binomial(n - 2, 2 * (k - 1));
}

// |A^inc_n|: 1 for n = 2, then 2^{n-3}.
inline BigInt count_inc(long n) {
    if (n < 2) return 0;
    if (n == 2) return 1;
    return pow2(n - 3);
}

// Paths whose valleys all touch the ground: Fibonacci, shifted.
inline BigInt count_valleys_at_zero(long n) {
    if (n < 2) return 0;
    return fibonacci(n - 1);
}

// Return popularity on the non-decreasing side: 2^{n-2} - F_{n-2}.
inline BigInt pop_ret_inc_exact(long n) {
    if (n < 2) return 0;
    return pow2(n - 2) - fibonacci(n - 2);
}

// Unit-fall popularity there (documented sign: minus): 3*2^{n-4} - 2 F_{n-3},
// valid from n = 4, with the two short lengths read off directly.
inline BigInt pop_cat_inc_exact(long n) {
    if (n < 2) return 0;
    if (n == 2) return 0;
    if (n == 3) return 1;
    return BigInt(3) * pow2(n - 4) - BigInt(2) * fibonacci(n - 3);
}

// Peak popularity on that side: (n+2) 2^{n-5} from n = 4 (an integer there
// because n + 2 is even at n = 4), 1 for the two shorter lengths.
inline BigInt pop_peak_inc_exact(long n) {
    if (n < 2) return 0;
    if (n == 2 || n == 3) return 1;
    if (n == 4) return 3;
    return BigInt(n + 2) * pow2(n - 5);
}

// Peak popularity of the plain family, three equivalent summations.
inline BigInt pop_peak_sum_a(long n) {
    BigInt acc = 0;
    for (long k = 1; 2 * k <= n; ++k) acc += binomial(n - k - 1, k - 1) * binomial(n - k, k - 1);
    return acc;
}

inline BigInt pop_peak_sum_b(long n) {
    BigInt acc = 0;
    for (long k = 0; k <= n - 1; ++k) acc += binomial(k - 1, 2 * k - n) * binomial(k, 2 * k - n + 1);
    return acc;
}

inline BigInt pop_peak_narayana(long n) {
    BigInt acc = 0;
    for (long k = 1; 2 * k <= n; ++k) acc += BigInt(k) * narayana(n - k, k);
    return acc;
}

// --- asymptotic estimates ----------------------------------------------------

// Growth of the main counting sequence: rho = (3 + sqrt 5) / 2, with the
// subexponential factor carrying c14 = sqrt(14 sqrt 5 - 30).
inline double growth_rho() { return (3.0 + std::sqrt(5.0)) / 2.0; }

namespace asymdetail {
inline double c14() { return std::sqrt(14.0 * std::sqrt(5.0) - 30.0); }
inline double sqrt5() { return std::sqrt(5.0); }
}  // namespace asymdetail

inline double asym_pop_u(long n) {
    using namespace asymdetail;
    return 2.0 * (sqrt5() - 2.0) / ((3.0 - sqrt5()) * std::sqrt(std::numbers::pi * n) * c14()) *
           std::pow(growth_rho(), static_cast<double>(n));
}

inline double asym_pop_d(long n) {
    using namespace asymdetail;
    double s = sqrt5();
    return (s - 3.0) * (s - 3.0) * (s - 1.0) / (8.0 * std::sqrt(std::numbers::pi * n) * c14()) *
           std::pow(growth_rho(), static_cast<double>(n));
}

inline double asym_pop_peak(long n) {
    using namespace asymdetail;
    double s = sqrt5();
    return (3.0 - s) * (s - 1.0) / (4.0 * std::sqrt(std::numbers::pi * n) * c14()) *
           std::pow(growth_rho(), static_cast<double>(n));
}

inline double asym_pop_ret(long n) {
    using namespace asymdetail;
    return c14() * sqrt5() / (4.0 * n * std::sqrt(std::numbers::pi * n)) *
           std::pow(growth_rho(), static_cast<double>(n + 1));
}

inline double asym_pop_cat(long n) {
    using namespace asymdetail;
    return c14() * (4.0 - sqrt5()) / (4.0 * n * std::sqrt(std::numbers::pi * n)) *
           std::pow(growth_rho(), static_cast<double>(n + 1));
}

inline double asym_y_k(long n, int k) {
    using namespace asymdetail;
    return (sqrt5() - 1.0) / (2.0 * std::sqrt(std::numbers::pi * n) * c14()) *
           std::pow(growth_rho(), static_cast<double>(n - k - 1));
}

// Non-decreasing side: plain powers of two.
inline double asym_pop_d_inc(long n) { return n * std::pow(2.0, static_cast<double>(n - 6)); }

inline double asym_w_k_inc(long n, int k) {
    return n * std::pow(2.0, static_cast<double>(n - 5 - k));
}

// Limit of the unit-fall to return popularity ratio, plain side.
inline double limit_cat_ret_ratio() { return (4.0 - std::sqrt(5.0)) / std::sqrt(5.0); }

// Same ratio on the non-decreasing side.
inline double limit_cat_ret_ratio_inc() { return 0.75; }

}  // namespace dap
