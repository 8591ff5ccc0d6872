#pragma once

#include <string>
#include <vector>

#include "novikov/poly.hpp"

namespace novikov {

/// The n-th cyclotomic polynomial, computed by dividing s^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
Poly cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(unsigned order, const Rational& value);
  /// Sum of coeffs[k] * zeta^k for arbitrary length, reduced.
  CyclotomicNumber(unsigned order, const std::vector<Rational>& coeffs);

  static CyclotomicNumber root_of_unity(unsigned order, long k);

  unsigned order() const { return order_; }
  /// Exactly phi(order) entries.
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_rational() const;
  /// Throws AlgebraError when not in Q.
  Rational rational_value() const;

  /// Complex conjugate: zeta -> zeta^(-1).
  CyclotomicNumber conj() const;

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& c);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coords_ == b.coords_;
  }

  std::string to_string() const;

 private:
  static CyclotomicNumber reduce(unsigned order, const Poly& p);
  Poly as_poly() const { return Poly(coords_); }
  void check_order(const CyclotomicNumber& other) const;

  unsigned order_ = 1;
  std::vector<Rational> coords_{Rational(0)};
};

}  // namespace novikov
