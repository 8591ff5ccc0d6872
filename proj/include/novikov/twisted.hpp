#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/factor.hpp"
#include "novikov/matrix.hpp"
#include "novikov/poly.hpp"
#include "novikov/roots.hpp"

namespace novikov {

/// Chain complex of K with coefficients in the rank-one local system over
/// Q[s, 1/s] whose monodromy along an edge path is s^theta times the sign
/// cocycle. The boundary of sigma hits its j-th face tau with coefficient
///   (-1)^j * s^theta(min sigma -> min tau) * eps(min sigma -> min tau),
/// the transpose of the coboundary of the connection d + t*theta (s = e^t).
/// Its homology dimensions over any field specialization equal the twisted
/// cohomology dimensions.
///
/// A relative complex drops the simplices of a subcomplex A.
class TwistedComplex {
 public:
  /// Throws std::invalid_argument if theta or eps fails the cocycle check.
  static TwistedComplex build(const SimplicialComplex& k, const IntegerCocycle& theta,
                              const std::optional<SignCocycle>& eps = std::nullopt);
  static TwistedComplex build_relative(const SimplicialComplex& k, const Subcomplex& a, const IntegerCocycle& theta,
                                       const std::optional<SignCocycle>& eps = std::nullopt);

  const SimplicialComplex& complex() const { return complex_; }
  const IntegerCocycle& twist() const { return theta_; }
  const std::optional<SignCocycle>& sign() const { return eps_; }

  /// Top degree (dimension of K).
  int top_degree() const { return complex_.dimension(); }
  /// Parent indices of the k-simplices that carry chains.
  const std::vector<std::size_t>& cells(int k) const { return cells_.at(static_cast<std::size_t>(k)); }
  std::size_t chain_rank(int k) const;
  /// d_k : C_k -> C_{k-1}, rows and columns follow cells(k-1), cells(k).
  const Matrix<LaurentPoly>& differential(int k) const;

  /// Monodromy factor s^theta(u -> v) * eps(u -> v) along the edge u v.
  LaurentPoly transport(std::size_t u, std::size_t v) const;

 private:
  SimplicialComplex complex_;
  IntegerCocycle theta_;
  std::optional<SignCocycle> eps_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<Matrix<LaurentPoly>> differentials_;  // index k-1 for d_k
};

/// dim over Q(s) of the homology in each degree.
std::vector<std::size_t> background_betti(const TwistedComplex& t);

/// Homology dimensions after s -> s0. Throws for s0 = 0.
std::vector<std::size_t> specialize(const TwistedComplex& t, const Rational& s0);

struct JumpFactor {
  Poly factor;  // monic, square-free
  bool irreducible = false;
  std::size_t jump = 0;  // dimension increase at every root of factor
  std::vector<RootInterval> positive_roots;  // isolating intervals, ascending
  std::size_t negative_roots = 0;  // distinct real roots below 0
  std::size_t complex_roots = 0;  // distinct non-real roots
};

struct DegreeProfile {
  std::size_t background = 0;
  /// Non-unit elementary divisors of d_k and d_{k+1}, stripped of s.
  std::vector<Poly> divisors;
  std::vector<JumpFactor> factors;

  std::size_t dimension_at(const Rational& s0) const;
};

struct NovikovProfile {
  std::vector<DegreeProfile> degrees;

  std::vector<std::size_t> background() const;
  std::vector<std::size_t> dimensions_at(const Rational& s0) const;
  /// True when some degree jumps at s0.
  bool jumps_at(const Rational& s0) const;
  /// Distinct positive real jump points across all degrees, ascending.
  std::vector<RootInterval> positive_jumps() const;
};

NovikovProfile jump_profile(const TwistedComplex& t);

struct SampleRow {
  Rational s;
  std::vector<std::size_t> dims;
  bool on_jump = false;  // dims differ from the background
};

/// Specializes at each grid point, in order. Throws if a point is 0.
std::vector<SampleRow> sample_dimensions(const TwistedComplex& t, const std::vector<Rational>& grid);

}  // namespace novikov
