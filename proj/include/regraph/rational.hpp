#ifndef REGRAPH_RATIONAL_HPP
#define REGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace regraph {

// Exact arbitrary-precision rational. All verification and synthesis paths
// use this type; no floating point anywhere.
//
// Note the GMP contract: the two-argument mpq_class(p, q) constructor does
// not reduce; call canonicalize() before comparing such values. Everything
// produced by this library (parsing, arithmetic) is canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Smallest positive c such that c*values are integers (LCM of denominators).
Integer common_denominator(const std::vector<Rational>& values);

/// gcd of the absolute numerators of integral rationals; 0 if all are zero.
Integer integer_gcd(const std::vector<Rational>& values);

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

}  // namespace regraph

#endif
