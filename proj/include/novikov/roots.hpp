#pragma once

#include <cstddef>
#include <vector>

#include "novikov/poly.hpp"

namespace novikov {

/// Interval (lo, hi] containing exactly one distinct real root, or the
/// degenerate interval [r, r] when the root r is rational and was hit.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  /// Midpoint as a double, for human-readable output only.
  double approx() const;
};

struct PositiveRootReport {
  std::size_t count = 0;  // with multiplicity
  std::vector<RootInterval> intervals;  // one per distinct root, ascending
};

/// Canonical Sturm sequence p, p', -rem(p, p'), ...
std::vector<Poly> sturm_sequence(const Poly& p);

/// Number of distinct real roots of a square-free p in (a, b], a < b.
std::size_t count_roots_in(const std::vector<Poly>& sturm, const Rational& a, const Rational& b);

/// Cauchy bound: every complex root has modulus < bound.
Rational root_bound(const Poly& p);

/// Roots in (0, inf) with multiplicity, plus isolating intervals whose
/// width is at most `width`. Throws on the zero polynomial.
PositiveRootReport count_positive_real_roots(const Poly& p, const Rational& width = Rational(1, 1024));

/// Distinct roots in (-inf, 0).
std::size_t count_negative_real_roots(const Poly& p);

}  // namespace novikov
