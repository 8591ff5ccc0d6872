#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// Polynomial in lambda with rational coefficients. Trailing zeros are
/// stripped, so the zero series has no coefficients.
class CountingSeries {
 public:
  CountingSeries() = default;
  explicit CountingSeries(std::vector<Rational> coefficients);
  static CountingSeries from_ints(std::initializer_list<long> coefficients);
  template <class Int>
  static CountingSeries from_counts(const std::vector<Int>& counts) {
    std::vector<Rational> v;
    v.reserve(counts.size());
    for (const auto& c : counts) v.emplace_back(static_cast<long>(c));
    return CountingSeries(std::move(v));
  }
  /// c * lambda^k
  static CountingSeries monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// All coefficients nonnegative.
  bool is_admissible() const;
  bool is_integral() const;

  Rational operator()(const Rational& lambda) const;

  CountingSeries shifted(std::size_t k) const;  // lambda^k * this

  friend CountingSeries operator+(const CountingSeries& a, const CountingSeries& b);
  friend CountingSeries operator-(const CountingSeries& a, const CountingSeries& b);
  friend CountingSeries operator*(const CountingSeries& a, const CountingSeries& b);
  friend CountingSeries operator*(const CountingSeries& a, const Rational& c);
  CountingSeries& operator+=(const CountingSeries& b) { return *this = *this + b; }
  friend bool operator==(const CountingSeries& a, const CountingSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + 2*λ + λ^2"; zero prints as "0".
  std::string to_string(const std::string& var = "λ") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct SeriesDivision {
  CountingSeries quotient;
  Rational remainder;
};

/// a = (1 + lambda) * quotient + remainder, remainder = a(-1).
SeriesDivision divide_by_one_plus_lambda(const CountingSeries& a);

}  // namespace novikov
