#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/group.hpp"
#include "novikov/poly.hpp"
#include "novikov/twisted.hpp"

namespace novikov {

/// Simplicial action of a finite group, induced by vertex permutations.
class GroupAction {
 public:
  GroupAction() = default;

  /// maps[g][v] is the image of vertex v under element g. Checks that every
  /// map is a bijection carrying simplices to simplices, that the identity
  /// acts trivially and that (gh)v = g(hv).
  static GroupAction from_vertex_maps(const SimplicialComplex& k, const FiniteGroup& g,
                                      std::vector<std::vector<std::size_t>> maps);
  static GroupAction trivial(const SimplicialComplex& k);

  const FiniteGroup& group() const { return group_; }
  const SimplicialComplex& complex() const { return complex_; }
  std::size_t vertex_image(std::size_t g, std::size_t v) const { return maps_.at(g).at(v); }

  struct Image {
    std::size_t index;
    int sign;  // orientation of g(sigma) relative to the sorted simplex
  };
  Image image(std::size_t g, int k, std::size_t index) const;

  /// Signed permutation matrix of g on C_k(K; Q).
  Matrix<Rational> chain_matrix(std::size_t g, int k) const;

  /// Throws std::invalid_argument unless g(A) = A for every g.
  void check_preserves(const Subcomplex& a) const;

 private:
  SimplicialComplex complex_;
  FiniteGroup group_;
  std::vector<std::vector<std::size_t>> maps_;
  std::vector<std::vector<std::vector<Image>>> images_;  // [g][k][index]
};

struct InvarianceCheck {
  struct Violation {
    std::size_t element;
    Simplex edge;
  };
  bool ok = true;
  std::vector<Violation> violators;
};

/// theta(gu -> gv) = theta(u -> v) for every edge and every element.
InvarianceCheck verify_invariance(const GroupAction& a, const IntegerCocycle& theta);
InvarianceCheck verify_invariance(const GroupAction& a, const SignCocycle& eps);

/// Matrix of g on the twisted k-chains: g carries sigma, based at its
/// minimal vertex, to g(sigma) based at g(min sigma); re-basing to
/// min g(sigma) multiplies by the transport from g(min sigma).
Matrix<LaurentPoly> twisted_action_matrix(const GroupAction& a, const TwistedComplex& t, std::size_t g, int k);

/// Trace of every element on the degree-k homology over Q(s), in element
/// order. Throws std::invalid_argument if the twist is not invariant or a
/// dropped subcomplex is not preserved, and std::logic_error if the action
/// fails to commute with the differentials.
std::vector<RatFunc> twisted_traces(const GroupAction& a, const TwistedComplex& t, int k);

/// Trace of g on H^k(K, E) over Q(s). Equals the trace on homology: the
/// cohomology is the dual space and g acts by the transpose.
RatFunc trace_on_twisted_cohomology(const GroupAction& a, const TwistedComplex& t, std::size_t g, int k);

struct IsotypicReport {
  std::vector<std::string> names;  // irreducibles
  std::vector<long> dims;
  std::vector<std::size_t> background;
  std::vector<std::vector<Rational>> traces;  // [degree][element]
  std::vector<std::vector<std::size_t>> multiplicity;  // [degree][irreducible]
};

/// multiplicity(i, rho) = (1/|G|) sum_g tr(g | H^i) chi_rho(g), the
/// multiplicity of V_rho^* in H^i. The traces are constant rationals and the
/// result a nonnegative integer; anything else throws std::logic_error.
IsotypicReport isotypic_multiplicities(const GroupAction& a, const CharacterTable& chars, const TwistedComplex& t);

/// multiplicity(i, rho) over all degrees i.
std::vector<std::size_t> equivariant_novikov_numbers(const IsotypicReport& report, std::size_t rho);

/// K/G for a free action whose vertex orbits give a simplicial complex.
struct Quotient {
  SimplicialComplex complex;
  std::vector<std::size_t> vertex_class;  // parent vertex -> quotient vertex
  std::vector<std::pair<std::size_t, std::size_t>> edge_lift;  // quotient edge -> parent (u, v), same orientation

  /// theta' with theta'(e) = theta(lift of e). Requires an invariant theta.
  IntegerCocycle descend(const GroupAction& a, const IntegerCocycle& theta) const;
};

/// Throws std::invalid_argument naming the simplex when some non-identity
/// element fixes a simplex setwise, when a simplex has two vertices in one
/// orbit, or when two simplices in different orbits have the same vertex
/// orbits.
Quotient quotient_complex(const GroupAction& a);

}  // namespace novikov
