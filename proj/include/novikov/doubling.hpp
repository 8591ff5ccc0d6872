#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "novikov/action.hpp"
#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/morse.hpp"
#include "novikov/series.hpp"

namespace novikov {

/// A complex with a marked subcomplex and a cocycle, carried through a
/// barycentric subdivision.
struct Subdivision {
  SimplicialComplex complex;
  Subcomplex boundary;
  IntegerCocycle theta;
  /// New vertex -> the simplex of the original complex it is the barycenter of.
  std::vector<Simplex> carrier;
};

/// Vertices of sd(K) are the simplices of K, original vertices first and
/// keeping their labels; simplices are flags. The cocycle on the edge
/// b(sigma) -> b(tau) is theta(min sigma -> min tau), which has the same
/// periods.
Subdivision barycentric_subdivision(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta);

struct DoubledComplex {
  /// M, after one subdivision when gluing would identify simplices.
  SimplicialComplex base;
  Subcomplex boundary;
  IntegerCocycle theta;
  bool subdivided = false;

  SimplicialComplex complex;  // D(M)
  GroupAction action;  // Z_2, element 1 swaps the copies
  std::array<std::vector<std::size_t>, 2> embeddings;  // base vertex -> double vertex
  IntegerCocycle induced;
};

/// Two copies of K glued along gamma. The mirrored copy carries the mirrored
/// edge values, so the induced cocycle is swap invariant and pulls back to
/// theta along both embeddings. Throws std::invalid_argument for a
/// non-cocycle or a gamma from another complex; the involution, the
/// invariance, the pullbacks and chi(D) = 2 chi(M) - chi(gamma) are
/// re-checked and a failure throws std::logic_error.
DoubledComplex build_double(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta);

struct LemmaReport {
  /// Per degree, generic in s.
  std::vector<std::size_t> invariant;  // trivial-isotypic part of H(D, E)
  std::vector<std::size_t> sign;  // sign-isotypic part of H(D, E)
  std::vector<std::size_t> absolute;  // H(M, E)
  std::vector<std::size_t> relative;  // H(M, gamma, E)
  std::vector<std::size_t> total;  // H(D, E)
  bool holds = false;
  std::string mismatch;  // first failing comparison, empty when holds
};

/// Compares the isotypic parts of the twisted cohomology of the double with
/// the absolute and relative twisted cohomology of M. Throws
/// std::invalid_argument if the swap moves a vertex of gamma.
LemmaReport lemma_check(const DoubledComplex& d);

enum class BoundaryClass { interior, positive, negative, boundary };

std::string to_string(BoundaryClass c);
/// "interior", "positive", "negative", "boundary"; throws otherwise.
BoundaryClass parse_boundary_class(const std::string& s);

struct BoundaryComponent {
  std::string id;
  BoundaryClass cls = BoundaryClass::interior;
  std::size_t ind_plus = 0;
  std::size_t ind_minus = 0;
  CountingSeries poincare;
};

struct BoundaryMorse {
  CountingSeries plus;  // interior, boundary and positive components, lambda^ind_+
  CountingSeries minus;  // interior, boundary and negative components, lambda^ind_-
};

/// Throws std::invalid_argument for a Poincare series that is not a
/// nonnegative integer series, or duplicate ids.
BoundaryMorse boundary_morse_polynomials(const std::vector<BoundaryComponent>& data);

struct Theorem10Report {
  std::vector<std::size_t> betti;  // background dims of H(M, E)
  CountingSeries novikov;
  BoundaryMorse morse;
  /// M^+- - N = (1 + lambda) Q, the orientation of the closed case.
  InequalityVerdict plus, minus;
  /// N - M^+- = (1 + lambda) Q as displayed for manifolds with boundary.
  /// Stored with morse = N and novikov = M^+-.
  InequalityVerdict literal_plus, literal_minus;

  bool holds() const { return plus.holds && minus.holds; }
  bool literal_holds() const { return literal_plus.holds && literal_minus.holds; }
};

Theorem10Report theorem10_check(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta,
                                const std::vector<BoundaryComponent>& data);

/// The same critical data read on the double: free orbits of interior and
/// boundary-meeting components, positive components in the trivial part and
/// negative ones in the sign part. Checked against the isotypic Novikov
/// numbers of the lemma.
struct DoubleCrossCheck {
  LemmaReport lemma;
  InequalityVerdict trivial;  // M^+ against the invariant part
  InequalityVerdict sign;  // M^- against the sign part
  bool agrees = false;  // both verdicts match the direct verdicts
};

DoubleCrossCheck double_cross_check(const DoubledComplex& d, const std::vector<BoundaryComponent>& data,
                                    const Theorem10Report& report);

}  // namespace novikov
