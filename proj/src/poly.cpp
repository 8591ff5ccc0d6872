#include "novikov/poly.hpp"

#include <algorithm>
#include <sstream>

namespace novikov {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> coefficients) {
  std::vector<Rational> v;
  for (long c : coefficients) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw AlgebraError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly p = *this;
  p *= Rational(1) / leading();
  return p;
}

Poly Poly::reflected() const {
  Poly p = *this;
  for (std::size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

Poly Poly::compose_power(unsigned k) const {
  if (k == 0) throw AlgebraError("compose_power needs k >= 1");
  if (is_zero()) return {};
  std::vector<Rational> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return Poly(std::move(v));
}

std::size_t Poly::s_valuation() const {
  std::size_t v = 0;
  while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
  return v == coeffs_.size() ? 0 : v;
}

Poly Poly::strip_s_powers() const {
  std::size_t v = s_valuation();
  return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
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

// ---------------------------------------------------------------------------
// Euclidean algorithms

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly gcd(Poly a, Poly b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  Poly fp = f.derivative();
  Poly a0 = gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly square_free_part(const Poly& p) {
  Poly out(Rational(1));
  for (const auto& [f, k] : square_free_decomposition(p)) out *= f;
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Poly& base, long shift) : base_(base), shift_(shift) { normalize(); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  return {Poly(c), exponent};
}

void LaurentPoly::normalize() {
  if (base_.is_zero()) {
    shift_ = 0;
    return;
  }
  std::size_t v = base_.s_valuation();
  if (v > 0) {
    base_ = base_.strip_s_powers();
    shift_ += static_cast<long>(v);
  }
}

Poly LaurentPoly::times_power(long k) const {
  if (is_zero()) return {};
  long e = shift_ + k;
  if (e < 0) throw AlgebraError("times_power leaves negative exponents");
  return base_ * Poly::monomial(1, static_cast<std::size_t>(e));
}

Rational LaurentPoly::operator()(const Rational& s0) const {
  if (is_zero()) return 0;
  if (s0 == 0) throw AlgebraError("Laurent polynomial evaluated at s = 0");
  return base_(s0) * pow(s0, shift_);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long low = std::min(a.shift_, b.shift_);
  return {a.times_power(-low) + b.times_power(-low), low};
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.base_ * b.base_, a.shift_ + b.shift_};
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (shift_ == 0) return base_.to_string(var);
  std::string body = base_.is_constant() ? base_.to_string(var) : "(" + base_.to_string(var) + ")";
  return body + "*" + std::string(var) + "^" + std::to_string(shift_);
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Rational(1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
  normalize();
}

RatFunc::RatFunc(const LaurentPoly& p) {
  if (p.shift() >= 0) {
    num_ = p.times_power(0);
    den_ = Poly(Rational(1));
  } else {
    num_ = p.base();
    den_ = Poly::monomial(1, static_cast<std::size_t>(-p.shift()));
  }
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw AlgebraError("rational function is not constant: " + to_string());
  return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw AlgebraError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace novikov
