#include "novikov/series.hpp"

#include <sstream>

namespace novikov {

CountingSeries::CountingSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

CountingSeries CountingSeries::from_ints(std::initializer_list<long> coefficients) {
  std::vector<Rational> v;
  for (long c : coefficients) v.emplace_back(c);
  return CountingSeries(std::move(v));
}

CountingSeries CountingSeries::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return CountingSeries(std::move(v));
}

void CountingSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool CountingSeries::is_admissible() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

bool CountingSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

Rational CountingSeries::operator()(const Rational& lambda) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

CountingSeries CountingSeries::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k, Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return CountingSeries(std::move(v));
}

CountingSeries operator+(const CountingSeries& a, const CountingSeries& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return CountingSeries(std::move(v));
}

CountingSeries operator-(const CountingSeries& a, const CountingSeries& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return CountingSeries(std::move(v));
}

CountingSeries operator*(const CountingSeries& a, const CountingSeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CountingSeries(std::move(v));
}

CountingSeries operator*(const CountingSeries& a, const Rational& c) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return CountingSeries(std::move(v));
}

std::string CountingSeries::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

SeriesDivision divide_by_one_plus_lambda(const CountingSeries& a) {
  const auto& c = a.coefficients();
  if (c.empty()) return {};
  const std::size_t n = c.size() - 1;
  if (n == 0) return {CountingSeries{}, c[0]};
  // synthetic division by (lambda + 1), from the top coefficient down
  std::vector<Rational> q(n);
  q[n - 1] = c[n];
  for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
  Rational remainder = c[0] - q[0];
  return {CountingSeries(std::move(q)), remainder};
}

}  // namespace novikov
