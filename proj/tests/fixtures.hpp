#pragma once

// Small triangulations shared by the test binaries.

#include <random>
#include <vector>

#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/linalg.hpp"

namespace fixture {

using novikov::IntegerCocycle;
using novikov::Simplex;
using novikov::SimplicialComplex;

inline SimplicialComplex point() { return SimplicialComplex::from_simplices(1, {}); }

inline SimplicialComplex interval() { return SimplicialComplex::from_simplices(2, {{0, 1}}); }

/// n-gon boundary, vertices 0..n-1, edges {i, i+1 mod n}.
inline SimplicialComplex circle(std::size_t n = 3) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_simplices(n, edges);
}

inline SimplicialComplex filled_triangle() { return SimplicialComplex::from_simplices(3, {{0, 1, 2}}); }

inline SimplicialComplex tetrahedron_surface() {
  return SimplicialComplex::from_simplices(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Cone over an n-gon: rim vertices 0..n-1, apex n.
inline SimplicialComplex disk(std::size_t n) {
  std::vector<Simplex> tris;
  for (std::size_t i = 0; i < n; ++i) tris.push_back({i, (i + 1) % n, n});
  return SimplicialComplex::from_simplices(n + 1, tris);
}

/// n x n grid torus, vertex (i, j) has index n*i + j.
inline SimplicialComplex torus(std::size_t n = 3) {
  auto v = [n](std::size_t i, std::size_t j) { return n * (i % n) + (j % n); };
  std::vector<Simplex> tris;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return SimplicialComplex::from_simplices(n * n, tris);
}

/// Annulus: outer ring 0..n-1, inner ring n..2n-1.
inline SimplicialComplex annulus(std::size_t n = 4) {
  std::vector<Simplex> tris;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    tris.push_back({i, j, n + i});
    tris.push_back({j, n + i, n + j});
  }
  return SimplicialComplex::from_simplices(2 * n, tris);
}

/// Cocycle on a circle-like complex whose vertices carry an angle
/// coordinate `a(v)` in 0..n-1: the number of times u -> v wraps past n-1,
/// taking the short way around. Integral over a loop = winding number.
template <class Angle>
IntegerCocycle winding_cocycle(const SimplicialComplex& k, std::size_t n, Angle a) {
  std::vector<long> values;
  for (const auto& e : k.simplices(1)) {
    long from = static_cast<long>(a(e[0])), to = static_cast<long>(a(e[1]));
    long d = to - from;
    long ln = static_cast<long>(n);
    if (d > ln / 2) d -= ln;
    if (d < -ln / 2) d += ln;
    values.push_back((from + d - to) / ln);
  }
  return IntegerCocycle(std::move(values));
}

/// Circle with a single edge carrying the whole period.
inline IntegerCocycle circle_period(const SimplicialComplex& circle, long period) {
  std::vector<long> values(circle.count(1), 0);
  values[0] = period;
  return IntegerCocycle(std::move(values));
}

/// Random 2-complex on 4..7 vertices: random triangles and loose edges,
/// closed under faces, at most `max_simplices` simplices in total.
inline SimplicialComplex random_complex(std::mt19937& rng, std::size_t max_simplices = 40) {
  while (true) {
    const std::size_t n = 4 + rng() % 4;
    std::vector<Simplex> simplices;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng() % 4 == 0) simplices.push_back({a, b});
        for (std::size_t c = b + 1; c < n; ++c)
          if (rng() % 5 == 0) simplices.push_back({a, b, c});
      }
    auto k = SimplicialComplex::from_simplices(n, simplices);
    if (k.total_count() <= max_simplices) return k;
  }
}

/// Random integral cocycle: small integer combination of an integral basis
/// of the cocycle space ker(d2^T), which includes non-exact classes.
inline IntegerCocycle random_cocycle(const SimplicialComplex& k, std::mt19937& rng, long spread = 2) {
  const std::size_t edges = k.count(1);
  novikov::Matrix<novikov::Rational> delta(k.count(2), edges);
  if (k.count(2)) delta = k.boundary_matrix(2).transpose();
  auto basis = novikov::kernel_basis(delta);
  std::vector<novikov::Rational> sum(edges);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    novikov::Integer den = 1;
    for (std::size_t i = 0; i < edges; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), basis(i, c).get_den_mpz_t());
    long coef = static_cast<long>(rng() % static_cast<unsigned long>(2 * spread + 1)) - spread;
    for (std::size_t i = 0; i < edges; ++i) sum[i] += basis(i, c) * den * coef;
  }
  std::vector<long> values;
  for (const auto& x : sum) values.push_back(x.get_num().get_si());
  return IntegerCocycle(std::move(values));
}

}  // namespace fixture
