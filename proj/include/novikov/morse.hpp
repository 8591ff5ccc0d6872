#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/action.hpp"
#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/group.hpp"
#include "novikov/series.hpp"
#include "novikov/twisted.hpp"

namespace novikov {

/// A critical component Z of the form, declared as data: a simplicial
/// complex carries no Hessian, so index and stabilizer cannot be derived.
struct CriticalComponent {
  std::string id;
  std::size_t index = 0;  // ind(Z)
  std::size_t stabilizer_index = 1;  // |G : G_Z|
  CountingSeries poincare;  // P^{G_Z}_{Z,F}
  /// Components of one G-orbit share this label; empty means the id.
  std::string orbit;

  const std::string& orbit_label() const { return orbit.empty() ? id : orbit; }
};

/// Throws std::invalid_argument unless the Poincare coefficients are
/// nonnegative integers and every stabilizer index divides group_order.
void validate_components(const std::vector<CriticalComponent>& components, std::size_t group_order);

/// Dimensions of H^*(Z, o) as a series, for a trivial stabilizer.
CountingSeries poincare_of_component(const SimplicialComplex& z, const std::optional<SignCocycle>& o = std::nullopt);

/// Multiplicity series of the irreducible rho of G_Z in H^*(Z, o(Z)).
/// `stab` acts on the ambient complex; Z must be preserved by it and o is
/// a sign cocycle on the ambient complex. Throws std::invalid_argument for
/// an invalid restriction.
CountingSeries poincare_of_component(const GroupAction& stab, const Subcomplex& z, const CharacterTable& chars,
                                     std::size_t rho, const std::optional<SignCocycle>& o = std::nullopt);

struct OrbitTerm {
  std::string orbit;
  std::size_t members = 0;
  std::size_t stabilizer_index = 1;
  CountingSeries contribution;
  /// members == stabilizer_index and all members carry the same data.
  bool complete = true;
};

struct MorseSeries {
  CountingSeries total;
  bool integral = true;
  std::vector<OrbitTerm> orbits;  // first-appearance order
};

/// sum_Z lambda^ind(Z) |G:G_Z|^-1 P_Z(lambda), summed over every component
/// as written. A non-integral total is flagged, not thrown.
MorseSeries morse_series(const std::vector<CriticalComponent>& components);

/// sum_i lambda^i beta_i.
CountingSeries novikov_series(const std::vector<std::size_t>& numbers);

enum class InequalityFailure { nonzero_remainder, non_integer_coefficient, negative_coefficient };

std::string to_string(InequalityFailure f);

struct InequalityVerdict {
  CountingSeries morse;
  CountingSeries novikov;
  CountingSeries quotient;
  Rational remainder;
  bool holds = false;
  std::optional<InequalityFailure> failure;
  std::string detail;
};

/// Q = (M - N) / (1 + lambda). Holds iff the remainder vanishes and Q has
/// nonnegative integer coefficients. On a verdict that holds, the identities
/// at lambda = -1 and lambda = 1 and the coefficient bounds beta_i <= m_i
/// and sum_{j<=i} (-1)^(i-j) (m_j - beta_j) >= 0 are re-checked; a
/// violation throws std::logic_error.
InequalityVerdict check_inequality(const CountingSeries& morse, const CountingSeries& novikov);

struct RepresentationVerdict {
  std::string name;
  long dimension = 1;
  MorseSeries morse;
  std::vector<std::size_t> novikov_numbers;
  InequalityVerdict verdict;
};

struct EquivariantCheck {
  std::vector<RepresentationVerdict> per_representation;
  /// sum_rho dim(rho) * (M(rho), N(rho)).
  InequalityVerdict regular;
  /// Background twisted dimensions; the regular Novikov series equals them.
  std::vector<std::size_t> background;
};

/// components[rho] lists the critical data twisted by rho, in character
/// table order. Throws std::invalid_argument for a count mismatch.
EquivariantCheck per_representation_check(const GroupAction& a, const CharacterTable& chars,
                                          const TwistedComplex& t,
                                          const std::vector<std::vector<CriticalComponent>>& components);

}  // namespace novikov
