#include "novikov/cocycle.hpp"

#include <set>
#include <stdexcept>

#include "novikov/linalg.hpp"

namespace novikov {

namespace {

std::size_t edge_index(const SimplicialComplex& k, std::size_t u, std::size_t v) {
  auto e = k.edge(u, v);
  if (!e) throw std::invalid_argument("no edge " + k.name({std::min(u, v), std::max(u, v)}));
  return *e;
}

void check_size(const SimplicialComplex& k, std::size_t size) {
  if (size != k.count(1)) {
    throw std::invalid_argument("cochain has " + std::to_string(size) + " values but the complex has " +
                                std::to_string(k.count(1)) + " edges");
  }
}

}  // namespace

IntegerCocycle IntegerCocycle::from_oriented(const SimplicialComplex& k, const std::vector<Entry>& entries) {
  std::vector<long> values(k.count(1), 0);
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    if (e.from == e.to) throw std::invalid_argument("cocycle entry on a degenerate edge");
    std::size_t idx = edge_index(k, e.from, e.to);
    if (!seen.insert(idx).second) {
      throw std::invalid_argument("cocycle edge " + k.name(k.simplex(1, idx)) + " given twice");
    }
    values[idx] = e.from < e.to ? e.value : -e.value;
  }
  return IntegerCocycle(std::move(values));
}

bool IntegerCocycle::is_zero() const {
  for (long v : values_)
    if (v != 0) return false;
  return true;
}

long IntegerCocycle::value(const SimplicialComplex& k, std::size_t u, std::size_t v) const {
  if (u == v) return 0;
  long x = values_.at(edge_index(k, u, v));
  return u < v ? x : -x;
}

IntegerCocycle IntegerCocycle::scaled(long factor) const {
  std::vector<long> out = values_;
  for (auto& v : out) v *= factor;
  return IntegerCocycle(std::move(out));
}

IntegerCocycle operator+(const IntegerCocycle& a, const IntegerCocycle& b) {
  if (a.size() != b.size()) throw std::invalid_argument("adding cochains of different sizes");
  std::vector<long> out = a.values_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values_[i];
  return IntegerCocycle(std::move(out));
}

SignCocycle::SignCocycle(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("sign cocycle values must be +1 or -1");
}

bool SignCocycle::is_trivial() const {
  for (int s : signs_)
    if (s != 1) return false;
  return true;
}

int SignCocycle::value(const SimplicialComplex& k, std::size_t u, std::size_t v) const {
  if (u == v) return 1;
  return signs_.at(edge_index(k, u, v));
}

CocycleCheck verify_cocycle(const SimplicialComplex& k, const IntegerCocycle& theta) {
  check_size(k, theta.size());
  CocycleCheck out;
  for (const auto& t : k.simplices(2)) {
    long c = theta[k.index_of({t[1], t[2]})] - theta[k.index_of({t[0], t[2]})] + theta[k.index_of({t[0], t[1]})];
    if (c != 0) out.violators.push_back(t);
  }
  out.ok = out.violators.empty();
  return out;
}

CocycleCheck verify_cocycle(const SimplicialComplex& k, const SignCocycle& eps) {
  check_size(k, eps.size());
  CocycleCheck out;
  for (const auto& t : k.simplices(2)) {
    int c = eps[k.index_of({t[1], t[2]})] * eps[k.index_of({t[0], t[2]})] * eps[k.index_of({t[0], t[1]})];
    if (c != 1) out.violators.push_back(t);
  }
  out.ok = out.violators.empty();
  return out;
}

IntegerCocycle coboundary(const SimplicialComplex& k, const std::vector<long>& f) {
  if (f.size() != k.vertex_count()) throw std::invalid_argument("vertex function has the wrong length");
  std::vector<long> out;
  for (const auto& e : k.simplices(1)) out.push_back(f[e[1]] - f[e[0]]);
  return IntegerCocycle(std::move(out));
}

Rational pair(const IntegerCocycle& theta, const std::vector<Rational>& chain) {
  if (chain.size() != theta.size()) throw std::invalid_argument("chain and cochain sizes differ");
  Rational total = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) total += chain[i] * theta[i];
  return total;
}

Periods periods(const SimplicialComplex& k, const IntegerCocycle& theta) {
  check_size(k, theta.size());
  Periods out;
  const std::size_t edges = k.count(1);
  if (edges == 0) return out;

  Matrix<Rational> z = kernel_basis(k.boundary_matrix(1));
  const std::size_t faces = k.count(2);
  Matrix<Rational> b = faces ? k.boundary_matrix(2) : Matrix<Rational>(edges, 0);

  // cycles that are independent modulo boundaries: pivots among the cycle
  // columns placed after the boundary columns
  Matrix<Rational> joined(edges, faces + z.cols());
  for (std::size_t i = 0; i < edges; ++i) {
    for (std::size_t j = 0; j < faces; ++j) joined(i, j) = b(i, j);
    for (std::size_t j = 0; j < z.cols(); ++j) joined(i, faces + j) = z(i, j);
  }
  for (std::size_t c : rref(joined).pivots) {
    if (c < faces) continue;
    std::vector<Rational> cycle(edges);
    Integer den = 1, num_gcd = 0;
    for (std::size_t i = 0; i < edges; ++i) {
      cycle[i] = z(i, c - faces);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cycle[i].get_den_mpz_t());
    }
    for (auto& x : cycle) {
      x *= den;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    int sign = 0;
    for (const auto& x : cycle)
      if (x != 0) {
        sign = x > 0 ? 1 : -1;
        break;
      }
    for (auto& x : cycle) x /= Rational(num_gcd * sign);
    Rational p = pair(theta, cycle);
    out.values.push_back(p.get_num().get_si());
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace novikov
