#include "novikov/linalg.hpp"

#include <algorithm>
#include <limits>

namespace novikov {

namespace {

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool is_unit(const LaurentPoly& x) { return !x.is_zero() && x.base().is_constant(); }

std::size_t degree_cost(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
std::size_t degree_cost(const Poly& x) { return static_cast<std::size_t>(x.degree()); }
bool is_zero_entry(const Integer& x) { return x == 0; }
bool is_zero_entry(const Poly& x) { return x.is_zero(); }

template <class T>
std::size_t bareiss_rank_impl(Matrix<T> m) {
  T prev = T(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::optional<std::size_t> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero_entry(m(i, c))) continue;
      std::size_t cost = degree_cost(m(i, c));
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (!best) continue;
    m.swap_rows(r, *best);
    const T pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        T v = pivot * m(i, j);
        if (!is_zero_entry(lead) && !is_zero_entry(m(r, j))) v = v - lead * m(r, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, c) = T(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

/// Eliminates unit pivots of a Laurent matrix by Schur complements, choosing
/// pivots with the Markowitz heuristic. Returns the number of pivots taken;
/// the matrix is replaced by the remaining block, which contains no units.
std::size_t eliminate_unit_pivots(Matrix<LaurentPoly>& m) {
  std::size_t taken = 0;
  while (true) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return taken;
    std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!m(i, j).is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_unit(m(i, j))) continue;
        std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (cost < best_cost) {
          best = {i, j};
          best_cost = cost;
        }
      }
    if (!best) return taken;
    auto [p, c] = *best;
    // inverse of the unit c * s^k
    LaurentPoly inv = LaurentPoly::monomial(Rational(1) / m(p, c).base().leading(), -m(p, c).shift());
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t i = 0; i < rows; ++i)
      if (i != p) keep_rows.push_back(i);
    for (std::size_t j = 0; j < cols; ++j)
      if (j != c) keep_cols.push_back(j);
    Matrix<LaurentPoly> next(keep_rows.size(), keep_cols.size());
    for (std::size_t a = 0; a < keep_rows.size(); ++a) {
      const std::size_t i = keep_rows[a];
      const LaurentPoly factor = m(i, c).is_zero() ? LaurentPoly{} : m(i, c) * inv;
      for (std::size_t b = 0; b < keep_cols.size(); ++b) {
        const std::size_t j = keep_cols[b];
        if (factor.is_zero() || m(p, j).is_zero()) {
          next(a, b) = m(i, j);
        } else {
          next(a, b) = m(i, j) - factor * m(p, j);
        }
      }
    }
    m = std::move(next);
    ++taken;
  }
}

void drop_zero_lines(Matrix<Poly>& m) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        rows.push_back(i);
        break;
      }
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) {
        cols.push_back(j);
        break;
      }
  m = m.submatrix(rows, cols);
}

}  // namespace

std::size_t bareiss_rank(Matrix<Integer> m) { return bareiss_rank_impl(std::move(m)); }
std::size_t bareiss_rank(Matrix<Poly> m) { return bareiss_rank_impl(std::move(m)); }

std::size_t rank(const Matrix<Rational>& m) {
  Matrix<Integer> z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = exact_div(m(i, j).get_num() * l, m(i, j).get_den());
  }
  return bareiss_rank(std::move(z));
}

std::size_t rank(const Matrix<Poly>& m) { return bareiss_rank(m); }

std::size_t rank(const Matrix<LaurentPoly>& m) {
  Matrix<LaurentPoly> work = m;
  std::size_t r = eliminate_unit_pivots(work);
  return r + bareiss_rank(clear_laurent_columns(work));
}

std::size_t rank(const Matrix<RatFunc>& m) {
  Matrix<Poly> p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(Rational(1));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.degree() > 0) l = exact_div(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = exact_div(m(i, j).num() * l, m(i, j).den());
  }
  return bareiss_rank(std::move(p));
}

Matrix<Poly> clear_laurent_columns(const Matrix<LaurentPoly>& m) {
  Matrix<Poly> out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    long low = std::numeric_limits<long>::max();
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) low = std::min(low, m(i, j).low_degree());
    if (low == std::numeric_limits<long>::max()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).times_power(-low);
  }
  return out;
}

Matrix<Rational> specialize(const Matrix<LaurentPoly>& m, const Rational& s0) {
  if (s0 == 0) throw AlgebraError("cannot specialize a Laurent matrix at s = 0");
  return m.map([&](const LaurentPoly& x) { return x(s0); });
}

std::vector<Poly> smith_normal_form(const Matrix<Poly>& input) {
  Matrix<Poly> m = input;
  std::vector<Poly> divisors;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // smallest-degree nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = std::numeric_limits<int>::max();
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && m(i, j).degree() < best_deg) {
          best = {i, j};
          best_deg = m(i, j).degree();
        }
    if (!best) break;
    m.swap_rows(t, best->first);
    m.swap_cols(t, best->second);

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        auto [q, r] = divmod(m(i, t), m(t, t));
        for (std::size_t j = t; j < m.cols(); ++j)
          if (!m(t, j).is_zero()) m(i, j) -= q * m(t, j);
        if (!r.is_zero()) {
          m.swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        auto [q, r] = divmod(m(t, j), m(t, t));
        for (std::size_t i = t; i < m.rows(); ++i)
          if (!m(i, t).is_zero()) m(i, j) -= q * m(i, t);
        if (!r.is_zero()) {
          m.swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      // pivot must divide the whole trailing block
      for (std::size_t i = t + 1; i < m.rows() && !changed; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!divides(m(t, t), m(i, j))) {
            for (std::size_t k = t; k < m.cols(); ++k) m(t, k) += m(i, k);
            changed = true;
            break;
          }
    }
    divisors.push_back(m(t, t).monic());
  }
  return divisors;
}

std::vector<Poly> laurent_elementary_divisors(const Matrix<LaurentPoly>& m) {
  Matrix<LaurentPoly> work = m;
  const std::size_t units = eliminate_unit_pivots(work);
  Matrix<Poly> rest = clear_laurent_columns(work);
  drop_zero_lines(rest);
  std::vector<Poly> divisors(units, Poly(Rational(1)));
  // s is coprime to the stripped parts, so the divisibility chain survives
  for (const Poly& d : smith_normal_form(rest)) divisors.push_back(d.strip_s_powers().monic());
  return divisors;
}

}  // namespace novikov
