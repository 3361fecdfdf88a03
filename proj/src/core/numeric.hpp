#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace park {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// binom(n, k) by the product form with exact division at every step.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (2 * k > n) k = n - k;
    BigInt r = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        r *= (n - k + t);
        r /= t;
    }
    return r;
}

// exact division; throws if b does not divide a
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: not divisible");
    return q;
}

inline BigInt pow_int(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigRat pow_rat(const BigRat& base, std::uint64_t e) {
    return BigRat(pow_int(numerator(base), e), pow_int(denominator(base), e));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "a" for integers, "a/b" otherwise
inline std::string to_string(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const BigRat& v) { return static_cast<double>(v); }

}  // namespace park
