#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// Univariate polynomial in s over the rationals. Coefficients are indexed
/// by degree; the zero polynomial has an empty coefficient list and the
/// leading coefficient of any other polynomial is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  explicit Poly(const Rational& constant);

  static Poly monomial(const Rational& c, std::size_t degree);
  /// The polynomial s.
  static Poly variable() { return monomial(1, 1); }
  static Poly from_ints(std::initializer_list<long> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t degree) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(-s).
  Poly reflected() const;
  /// p(s^k) for k >= 1.
  Poly compose_power(unsigned k) const;
  /// Largest v with s^v | p (0 for the zero polynomial).
  std::size_t s_valuation() const;
  /// p / s^v where v = s_valuation().
  Poly strip_s_powers() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing AlgebraError unless b divides a exactly.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
bool divides(const Poly& d, const Poly& a);

/// Yun's square-free decomposition of a nonzero polynomial: pairs
/// (f_k, k) with f_k monic, square-free, pairwise coprime and
/// non-constant, such that p = lc(p) * prod f_k^k.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);
Poly square_free_part(const Poly& p);

/// s^shift * base, base not divisible by s unless zero. Elements of the
/// ring Q[s, 1/s] where the twisted differentials live.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Poly& base, long shift = 0);
  explicit LaurentPoly(const Rational& c) : LaurentPoly(Poly(c)) {}

  static LaurentPoly monomial(const Rational& c, long exponent);

  bool is_zero() const { return base_.is_zero(); }
  const Poly& base() const { return base_; }
  long shift() const { return shift_; }
  /// Lowest exponent that carries a nonzero coefficient (0 for zero).
  long low_degree() const { return shift_; }

  /// Multiply by s^k, which must make this a polynomial; returns it.
  Poly times_power(long k) const;
  Rational operator()(const Rational& s0) const;

  LaurentPoly operator-() const { return {-base_, shift_}; }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.base_ == b.base_;
  }

  std::string to_string(std::string_view var = "s") const;

 private:
  void normalize();
  Poly base_;
  long shift_ = 0;
};

/// Element of the rational function field Q(s): reduced fraction with a
/// monic denominator. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Poly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);
  explicit RatFunc(const Rational& c) : RatFunc(Poly(c)) {}
  explicit RatFunc(const LaurentPoly& p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws otherwise.
  Rational constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "s") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace novikov
