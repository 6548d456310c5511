#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d2 {

// Exact rational arithmetic. All densities and derived thresholds in this
// library are rationals so lemma postconditions can be checked without any
// tolerance. Derived constants like alpha^2*beta^4*gamma^2/160 overflow any
// fixed-width integer for small inputs, hence arbitrary precision.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(int64_t num, int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// binomial(n, k) for small k; exact
inline BigInt binom(int64_t n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline int64_t binom64(int64_t n, int k) {
    return binom(n, k).template convert_to<int64_t>();
}

// Parses "p/q", "p" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& s);

std::string rational_to_string(const Rational& r);

}  // namespace d2
