#include "novikov/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace novikov {

Poly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw AlgebraError("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p = Poly::monomial(1, n) - Poly(Rational(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, p);
  return p;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber CyclotomicNumber::reduce(unsigned order, const Poly& p) {
  CyclotomicNumber out;
  out.order_ = order;
  Poly r = divmod(p, cyclotomic_polynomial(order)).second;
  out.coords_.assign(euler_phi(order), Rational(0));
  for (std::size_t k = 0; k < r.coefficients().size(); ++k) out.coords_[k] = r.coefficients()[k];
  return out;
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const Rational& value)
    : CyclotomicNumber(reduce(order, Poly(value))) {}

CyclotomicNumber::CyclotomicNumber(unsigned order, const std::vector<Rational>& coeffs)
    : CyclotomicNumber(reduce(order, Poly(coeffs))) {}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned order, long k) {
  long n = static_cast<long>(order);
  long e = ((k % n) + n) % n;
  return reduce(order, Poly::monomial(1, static_cast<std::size_t>(e)));
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (coords_[k] != 0) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw AlgebraError("cyclotomic number " + to_string() + " is not rational");
  return coords_[0];
}

CyclotomicNumber CyclotomicNumber::conj() const {
  // zeta^k -> zeta^(n-k)
  std::vector<Rational> v(order_ + 1);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    v[k == 0 ? 0 : order_ - k] += coords_[k];
  }
  return reduce(order_, Poly(std::move(v)));
}

void CyclotomicNumber::check_order(const CyclotomicNumber& other) const {
  if (order_ != other.order_) throw AlgebraError("mixing cyclotomic numbers of different orders");
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_order(b);
  CyclotomicNumber r = a;
  for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] += b.coords_[k];
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_order(b);
  CyclotomicNumber r = a;
  for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] -= b.coords_[k];
  return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_order(b);
  return CyclotomicNumber::reduce(a.order_, a.as_poly() * b.as_poly());
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& c) {
  CyclotomicNumber r = a;
  for (auto& x : r.coords_) x *= c;
  return r;
}

std::string CyclotomicNumber::to_string() const {
  return as_poly().to_string("z" + std::to_string(order_));
}

}  // namespace novikov
