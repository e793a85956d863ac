#pragma once

// Exact arithmetic aliases. Counting sequences here grow like ((3+sqrt(5))/2)^n,
// so 64-bit overflows around n=60 and every public count/coefficient is a bignum.
//
// This Boost install lacks the cpp_rational.hpp convenience header; composing
// the rational adaptor over cpp_int by hand is equivalent.
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace dap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int::backend_type>>;

inline BigInt binomial(long a, long b) {
    // Conventions: C(a,b)=0 when b<0, b>a, or a<0. Several sum identities in the
    // library rely on out-of-range terms vanishing rather than throwing.
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long i = 0; i < b; ++i) {
        r *= (a - i);
        r /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline BigInt fibonacci(long n) {
    // F(0)=0, F(1)=F(2)=1. Negative indices never appear; clamp to 0.
    if (n <= 0) return 0;
    BigInt a = 0, b = 1;
    for (long i = 1; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

inline BigInt pow2(long n) {
    if (n < 0) return 0;  // callers use 2^(n-k) forms where small n legitimately underflows
    return BigInt(1) << static_cast<unsigned>(n);
}

}  // namespace dap
