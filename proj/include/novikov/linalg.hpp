#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "novikov/matrix.hpp"
#include "novikov/poly.hpp"
#include "novikov/rational.hpp"

namespace novikov {

// Exact ranks. Matrices over Q go through fraction-free elimination over Z
// after clearing row denominators; matrices over Q[s], Q[s, 1/s] and Q(s)
// report the rank over the fraction field Q(s).
std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<Poly>& m);
std::size_t rank(const Matrix<LaurentPoly>& m);
std::size_t rank(const Matrix<RatFunc>& m);

/// Fraction-free (Bareiss) echelon rank over an integral domain.
std::size_t bareiss_rank(Matrix<Integer> m);
std::size_t bareiss_rank(Matrix<Poly> m);

/// Multiplies every column by the power of s (a unit of Q[s, 1/s]) that
/// makes it polynomial with a nonzero constant term somewhere.
Matrix<Poly> clear_laurent_columns(const Matrix<LaurentPoly>& m);

/// s -> s0 for nonzero rational s0.
Matrix<Rational> specialize(const Matrix<LaurentPoly>& m, const Rational& s0);

/// Smith normal form over Q[s]: monic d_1 | d_2 | ... | d_r with r the
/// rank over Q(s). Unit divisors are reported as the constant 1.
std::vector<Poly> smith_normal_form(const Matrix<Poly>& m);

/// Elementary divisors over Q[s, 1/s]: the Q[s] divisors of an equivalent
/// polynomial matrix with all factors of s removed (s is a unit there).
std::vector<Poly> laurent_elementary_divisors(const Matrix<LaurentPoly>& m);

// ---------------------------------------------------------------------------
// Gauss-Jordan elimination over a field (Rational or RatFunc).

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// Smaller is a nicer pivot. Any nonzero value is usable.
inline std::size_t pivot_cost(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const RatFunc& x) {
  std::size_t cost = static_cast<std::size_t>(x.num().degree() + x.den().degree());
  // monomials over monomials are units of Q[s, 1/s]
  std::size_t terms = 0;
  for (const auto& c : x.num().coefficients()) terms += (c != 0);
  return cost + 8 * (terms > 1);
}

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::optional<std::size_t> best;
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t cost = pivot_cost(m(i, c));
      if (!best || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (!best) continue;
    m.swap_rows(r, *best);
    F inv = F(Rational(1)) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right null space, one basis vector per column.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = F(Rational(1));
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      if (!is_zero(red(row, free_cols[k]))) basis(pivots[row], k) = -red(row, free_cols[k]);
    }
  }
  return basis;
}

}  // namespace novikov
