#pragma once

// Exact scalars. Everything in the library is computed over Q with GMP
// integers underneath; floating point only ever appears in display columns.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okdh {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Raised for malformed or out-of-contract input. Carries a message naming
/// the offending field or value.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check fails. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "-p", "p/q". Whitespace around the token is ignored; the
/// result is canonicalized (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without the "/1".
std::string to_string(const Rational& q);

/// Decimal rendering with exactly `significant` significant digits, rounded
/// half away from zero. Derived from the exact value, never parsed back.
std::string to_decimal(const Rational& q, int significant = 20);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// n/d in canonical form. Prefer this over Rational(n, d), which GMP leaves
/// unreduced.
inline Rational ratio(long n, long d) {
  if (d == 0) throw ValidationError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Rational factorial(unsigned n);

/// Exact power for small non-negative exponents.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace okdh
