#include "novikov/factor.hpp"

#include <algorithm>
#include <set>

#include "novikov/cyclotomic.hpp"

namespace novikov {

namespace {

// Trial division gives up beyond this size; rational roots are then not
// searched for and the remainder is left unproven.
const Integer kDivisorLimit("1000000000000");

bool positive_divisors(Integer n, std::vector<Integer>& out) {
  if (n < 0) n = -n;
  if (n > kDivisorLimit) return false;
  out.clear();
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return true;
}

/// Integer coefficients proportional to p.
std::vector<Integer> integer_coefficients(const Poly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (den / c.get_den()));
  return out;
}

/// Rational roots of p (p(0) != 0). Returns false when the coefficients are
/// too large to enumerate candidates.
bool rational_roots(const Poly& p, std::vector<Rational>& roots) {
  auto z = integer_coefficients(p);
  std::vector<Integer> num, den;
  if (!positive_divisors(z.front(), num) || !positive_divisors(z.back(), den)) return false;
  std::set<Rational> found;
  for (const auto& a : num)
    for (const auto& b : den)
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        if (p(r) == 0) found.insert(r);
      }
  roots.assign(found.begin(), found.end());
  return true;
}

}  // namespace

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::vector<PolyFactor> split_square_free(const Poly& f) {
  std::vector<PolyFactor> out;
  if (f.degree() <= 0) return out;
  Poly rest = f.monic();
  if (rest.coeff(0) == 0) {
    out.push_back({Poly::variable(), true});
    rest = exact_div(rest, Poly::variable());
  }

  std::vector<Rational> roots;
  bool roots_known = rest.degree() <= 0 || rational_roots(rest, roots);
  for (const auto& r : roots) {
    Poly lin({-r, Rational(1)});
    out.push_back({lin, true});
    rest = exact_div(rest, lin);
  }

  // phi(n) >= sqrt(n / 2), so only n <= 2 d^2 can have phi(n) <= d
  for (int n = 3; rest.degree() >= 2 && n <= 2 * rest.degree() * rest.degree(); ++n) {
    const Poly& c = cyclotomic_polynomial(n);
    if (c.degree() > rest.degree() || !divides(c, rest)) continue;
    out.push_back({c, true});
    rest = exact_div(rest, c);
  }

  if (rest.degree() > 0) out.push_back({rest, rest.degree() == 1 || (roots_known && rest.degree() <= 3)});
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
  return out;
}

}  // namespace novikov
