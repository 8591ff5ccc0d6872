#include "novikov/morse.hpp"

#include <map>
#include <stdexcept>

namespace novikov {

void validate_components(const std::vector<CriticalComponent>& components, std::size_t group_order) {
  for (const auto& z : components) {
    if (z.stabilizer_index == 0 || group_order % z.stabilizer_index != 0) {
      throw std::invalid_argument("component '" + z.id + "': stabilizer index " + std::to_string(z.stabilizer_index) +
                                  " does not divide the group order " + std::to_string(group_order));
    }
    if (!z.poincare.is_integral() || !z.poincare.is_admissible()) {
      throw std::invalid_argument("component '" + z.id + "': Poincare series " + z.poincare.to_string() +
                                  " needs nonnegative integer coefficients");
    }
  }
}

CountingSeries poincare_of_component(const SimplicialComplex& z, const std::optional<SignCocycle>& o) {
  auto t = TwistedComplex::build(z, IntegerCocycle::zero(z), o);
  return CountingSeries::from_counts(background_betti(t));
}

CountingSeries poincare_of_component(const GroupAction& stab, const Subcomplex& z, const CharacterTable& chars,
                                     std::size_t rho, const std::optional<SignCocycle>& o) {
  const auto& K = stab.complex();
  stab.check_preserves(z);
  if (rho >= chars.count()) throw std::invalid_argument("no such irreducible");
  std::vector<std::size_t> old_of_new;
  auto Z = z.as_complex(K, &old_of_new);
  std::vector<std::size_t> new_of_old(K.vertex_count(), K.vertex_count());
  for (std::size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;

  const auto& G = stab.group();
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t g = 0; g < G.size(); ++g) {
    auto& m = maps.emplace_back();
    for (auto v : old_of_new) m.push_back(new_of_old[stab.vertex_image(g, v)]);
  }
  auto restricted = GroupAction::from_vertex_maps(Z, G, std::move(maps));

  std::optional<SignCocycle> oz;
  if (o) {
    if (o->size() != K.count(1)) throw std::invalid_argument("orientation cocycle does not match the complex");
    std::vector<int> values;
    for (const auto& e : Z.simplices(1)) values.push_back(o->value(K, old_of_new[e[0]], old_of_new[e[1]]));
    oz = SignCocycle(std::move(values));
  }
  auto t = TwistedComplex::build(Z, IntegerCocycle::zero(Z), oz);
  auto report = isotypic_multiplicities(restricted, chars, t);
  return CountingSeries::from_counts(equivariant_novikov_numbers(report, rho));
}

MorseSeries morse_series(const std::vector<CriticalComponent>& components) {
  MorseSeries out;
  std::map<std::string, std::size_t> slot;
  std::vector<const CriticalComponent*> first;
  for (const auto& z : components) {
    if (z.stabilizer_index == 0) throw std::invalid_argument("component '" + z.id + "' has stabilizer index 0");
    auto term = z.poincare.shifted(z.index) * Rational(1, static_cast<long>(z.stabilizer_index));
    out.total += term;
    auto [it, fresh] = slot.emplace(z.orbit_label(), out.orbits.size());
    if (fresh) {
      out.orbits.push_back({z.orbit_label(), 0, z.stabilizer_index, {}, true});
      first.push_back(&z);
    }
    auto& orbit = out.orbits[it->second];
    const auto& ref = *first[it->second];
    ++orbit.members;
    orbit.contribution += term;
    if (ref.index != z.index || ref.stabilizer_index != z.stabilizer_index || !(ref.poincare == z.poincare)) {
      orbit.complete = false;
    }
  }
  for (auto& orbit : out.orbits)
    if (orbit.members != orbit.stabilizer_index) orbit.complete = false;
  out.integral = out.total.is_integral();
  return out;
}

CountingSeries novikov_series(const std::vector<std::size_t>& numbers) { return CountingSeries::from_counts(numbers); }

std::string to_string(InequalityFailure f) {
  switch (f) {
    case InequalityFailure::nonzero_remainder:
      return "nonzero remainder";
    case InequalityFailure::non_integer_coefficient:
      return "non-integer coefficient";
    case InequalityFailure::negative_coefficient:
      return "negative quotient coefficient";
  }
  return "unknown";
}

namespace {

void assert_consequences(const InequalityVerdict& v) {
  const auto& m = v.morse;
  const auto& b = v.novikov;
  if (m(Rational(-1)) != b(Rational(-1))) throw std::logic_error("M(-1) != N(-1) on a verdict that holds");
  if (m(Rational(1)) - b(Rational(1)) != 2 * v.quotient(Rational(1)) || v.quotient(Rational(1)) < 0) {
    throw std::logic_error("M(1) - N(1) != 2 Q(1) >= 0 on a verdict that holds");
  }
  const int top = std::max(m.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (b.coeff(k) > m.coeff(k)) throw std::logic_error("beta_" + std::to_string(i) + " > m_" + std::to_string(i));
    Rational partial = 0;
    for (int j = 0; j <= i; ++j) {
      Rational d = m.coeff(static_cast<std::size_t>(j)) - b.coeff(static_cast<std::size_t>(j));
      partial += (i - j) % 2 == 0 ? d : -d;
    }
    if (partial < 0) throw std::logic_error("alternating partial sum negative in degree " + std::to_string(i));
  }
}

}  // namespace

InequalityVerdict check_inequality(const CountingSeries& morse, const CountingSeries& novikov) {
  InequalityVerdict v;
  v.morse = morse;
  v.novikov = novikov;
  auto div = divide_by_one_plus_lambda(morse - novikov);
  v.quotient = div.quotient;
  v.remainder = div.remainder;
  if (div.remainder != 0) {
    v.failure = InequalityFailure::nonzero_remainder;
    v.detail = "(1 + λ) does not divide the difference: remainder " + to_string(div.remainder);
  } else if (!div.quotient.is_integral()) {
    v.failure = InequalityFailure::non_integer_coefficient;
    v.detail = "Q = " + div.quotient.to_string() + " has a non-integer coefficient";
  } else if (!div.quotient.is_admissible()) {
    v.failure = InequalityFailure::negative_coefficient;
    v.detail = "Q = " + div.quotient.to_string() + " has a negative coefficient";
  } else {
    v.holds = true;
    v.detail = "Q = " + div.quotient.to_string();
    assert_consequences(v);
  }
  return v;
}

EquivariantCheck per_representation_check(const GroupAction& a, const CharacterTable& chars,
                                          const TwistedComplex& t,
                                          const std::vector<std::vector<CriticalComponent>>& components) {
  if (components.size() != chars.count()) {
    throw std::invalid_argument("critical data given for " + std::to_string(components.size()) +
                                " representations, the group has " + std::to_string(chars.count()));
  }
  auto report = isotypic_multiplicities(a, chars, t);
  EquivariantCheck out;
  out.background = report.background;
  CountingSeries regular_morse, regular_novikov;
  for (std::size_t rho = 0; rho < chars.count(); ++rho) {
    validate_components(components[rho], a.group().size());
    RepresentationVerdict r;
    r.name = report.names[rho];
    r.dimension = report.dims[rho];
    r.morse = morse_series(components[rho]);
    r.novikov_numbers = equivariant_novikov_numbers(report, rho);
    r.verdict = check_inequality(r.morse.total, novikov_series(r.novikov_numbers));
    regular_morse += r.morse.total * Rational(r.dimension);
    regular_novikov += r.verdict.novikov * Rational(r.dimension);
    out.per_representation.push_back(std::move(r));
  }
  if (!(regular_novikov == novikov_series(out.background))) {
    throw std::logic_error("regular Novikov series differs from the background dimensions");
  }
  out.regular = check_inequality(regular_morse, regular_novikov);
  return out;
}

}  // namespace novikov
