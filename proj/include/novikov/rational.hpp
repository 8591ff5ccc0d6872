#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace novikov {

using Integer = mpz_class;

/// Exact rational number backed by GMP. Always kept canonical
/// (reduced, positive denominator, zero is 0/1).
using Rational = mpq_class;

/// Raised when an algebraic precondition fails inside the exact core.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "7", "-3/4" or " 12 / 8 " into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// s0^e for a nonzero base and any signed exponent.
Rational pow(const Rational& base, long exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace novikov
