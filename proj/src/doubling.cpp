#include "novikov/doubling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace novikov {

namespace {

// every flag of faces of tau, as chains of simplices
template <class F>
void for_each_flag(const Simplex& tau, F&& emit) {
  Simplex order = tau;
  std::sort(order.begin(), order.end());
  do {
    std::vector<Simplex> chain;
    Simplex prefix;
    for (auto v : order) {
      prefix.push_back(v);
      Simplex face = prefix;
      std::sort(face.begin(), face.end());
      chain.push_back(std::move(face));
    }
    emit(chain);
  } while (std::next_permutation(order.begin(), order.end()));
}

bool needs_subdivision(const SimplicialComplex& k, const Subcomplex& gamma) {
  for (int d = 1; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (gamma.contains(d, i)) continue;
      const auto& s = k.simplex(d, i);
      if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return gamma.contains(0, v); })) return true;
    }
  return false;
}

std::vector<std::size_t> pad(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

}  // namespace

Subdivision barycentric_subdivision(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta) {
  gamma.check_parent(k);
  if (!verify_cocycle(k, theta).ok) throw std::invalid_argument("theta is not a cocycle");

  Subdivision sd;
  std::map<Simplex, std::size_t> id;
  std::vector<std::string> labels;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      id.emplace(s, sd.carrier.size());
      sd.carrier.push_back(s);
      labels.push_back(d == 0 ? k.label(s[0]) : k.name(s));
    }

  std::set<Simplex> flags, boundary_flags;
  for (int d = 1; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      for_each_flag(k.simplex(d, i), [&](const std::vector<Simplex>& chain) {
        Simplex f;
        for (const auto& s : chain) f.push_back(id.at(s));
        std::sort(f.begin(), f.end());
        if (gamma.contains(d, i)) boundary_flags.insert(f);
        flags.insert(std::move(f));
      });

  sd.complex = SimplicialComplex::from_simplices(std::move(labels), {flags.begin(), flags.end()});
  std::vector<Simplex> marked(boundary_flags.begin(), boundary_flags.end());
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (gamma.contains(0, v)) marked.push_back({v});
  sd.boundary = Subcomplex::closure(sd.complex, marked);

  std::vector<long> values;
  for (const auto& e : sd.complex.simplices(1)) {
    values.push_back(theta.value(k, sd.carrier[e[0]].front(), sd.carrier[e[1]].front()));
  }
  sd.theta = IntegerCocycle(std::move(values));
  return sd;
}

DoubledComplex build_double(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta) {
  gamma.check_parent(k);
  if (theta.size() != k.count(1)) throw std::invalid_argument("cocycle does not match the complex");
  if (!verify_cocycle(k, theta).ok) throw std::invalid_argument("theta is not a cocycle");

  DoubledComplex d;
  if (needs_subdivision(k, gamma)) {
    auto sd = barycentric_subdivision(k, gamma, theta);
    d.base = std::move(sd.complex);
    d.boundary = std::move(sd.boundary);
    d.theta = std::move(sd.theta);
    d.subdivided = true;
  } else {
    d.base = k;
    d.boundary = gamma;
    d.theta = theta;
  }
  const auto& M = d.base;
  const std::size_t n = M.vertex_count();
  auto on_gamma = [&](std::size_t v) { return d.boundary.contains(0, v); };

  std::vector<std::string> labels = M.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  std::vector<std::size_t> base_of(n);
  for (std::size_t v = 0; v < n; ++v) base_of[v] = v;
  d.embeddings[0] = base_of;
  d.embeddings[1].resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (on_gamma(v)) {
      d.embeddings[1][v] = v;
      continue;
    }
    std::string l = M.label(v) + "'";
    while (taken.count(l)) l += "'";
    taken.insert(l);
    d.embeddings[1][v] = labels.size();
    labels.push_back(l);
    base_of.push_back(v);
  }

  std::vector<Simplex> simplices;
  for (int dim = 1; dim <= M.dimension(); ++dim)
    for (const auto& s : M.simplices(dim))
      for (const auto& emb : d.embeddings) {
        Simplex t;
        for (auto v : s) t.push_back(emb[v]);
        simplices.push_back(std::move(t));
      }
  d.complex = SimplicialComplex::from_simplices(std::move(labels), simplices);
  const auto& D = d.complex;

  std::vector<std::size_t> id(D.vertex_count()), swap(D.vertex_count());
  for (std::size_t w = 0; w < D.vertex_count(); ++w) {
    id[w] = w;
    std::size_t v = base_of[w];
    swap[w] = w == d.embeddings[0][v] ? d.embeddings[1][v] : d.embeddings[0][v];
  }
  d.action = GroupAction::from_vertex_maps(D, FiniteGroup::cyclic(2), {id, swap});

  std::vector<long> values;
  for (const auto& e : D.simplices(1)) values.push_back(d.theta.value(M, base_of[e[0]], base_of[e[1]]));
  d.induced = IntegerCocycle(std::move(values));

  for (std::size_t w = 0; w < D.vertex_count(); ++w)
    if ((swap[w] == w) != on_gamma(base_of[w])) throw std::logic_error("swap does not fix exactly the glued boundary");
  if (!verify_cocycle(D, d.induced).ok) throw std::logic_error("induced cochain is not a cocycle");
  if (!verify_invariance(d.action, d.induced).ok) throw std::logic_error("induced cocycle is not swap invariant");
  for (const auto& e : M.simplices(1))
    for (const auto& emb : d.embeddings)
      if (d.induced.value(D, emb[e[0]], emb[e[1]]) != d.theta.value(M, e[0], e[1])) {
        throw std::logic_error("induced cocycle does not pull back to theta on " + M.name(e));
      }
  long chi_gamma = 0;
  for (int dim = 0; dim <= M.dimension(); ++dim) {
    chi_gamma += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(d.boundary.count(dim));
  }
  if (D.euler_characteristic() != 2 * M.euler_characteristic() - chi_gamma) {
    throw std::logic_error("chi(D) != 2 chi(M) - chi(gamma)");
  }
  return d;
}

LemmaReport lemma_check(const DoubledComplex& d) {
  for (std::size_t v = 0; v < d.base.vertex_count(); ++v)
    if (d.boundary.contains(0, v) && d.action.vertex_image(1, d.embeddings[0][v]) != d.embeddings[0][v]) {
      throw std::invalid_argument("swap moves the boundary vertex " + d.base.label(v));
    }
  auto z2 = builtin_group("Z2");
  auto td = TwistedComplex::build(d.complex, d.induced);
  auto report = isotypic_multiplicities(d.action, z2.characters, td);

  LemmaReport out;
  const auto n = static_cast<std::size_t>(std::max(d.complex.dimension(), d.base.dimension()) + 1);
  out.invariant = pad(equivariant_novikov_numbers(report, 0), n);
  out.sign = pad(equivariant_novikov_numbers(report, 1), n);
  out.total = pad(report.background, n);
  out.absolute = pad(background_betti(TwistedComplex::build(d.base, d.theta)), n);
  out.relative = pad(background_betti(TwistedComplex::build_relative(d.base, d.boundary, d.theta)), n);

  for (std::size_t i = 0; i < n; ++i)
    if (out.invariant[i] + out.sign[i] != out.total[i]) throw std::logic_error("isotypic parts do not add up");
  for (std::size_t i = 0; i < n && out.mismatch.empty(); ++i) {
    if (out.invariant[i] != out.absolute[i]) {
      out.mismatch = "degree " + std::to_string(i) + ": invariant part " + std::to_string(out.invariant[i]) +
                     " vs absolute " + std::to_string(out.absolute[i]);
    } else if (out.sign[i] != out.relative[i]) {
      out.mismatch = "degree " + std::to_string(i) + ": sign part " + std::to_string(out.sign[i]) + " vs relative " +
                     std::to_string(out.relative[i]);
    }
  }
  out.holds = out.mismatch.empty();
  return out;
}

std::string to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::interior:
      return "interior";
    case BoundaryClass::positive:
      return "positive";
    case BoundaryClass::negative:
      return "negative";
    case BoundaryClass::boundary:
      return "boundary";
  }
  return "unknown";
}

BoundaryClass parse_boundary_class(const std::string& s) {
  for (auto c : {BoundaryClass::interior, BoundaryClass::positive, BoundaryClass::negative, BoundaryClass::boundary})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown component class '" + s + "'");
}

BoundaryMorse boundary_morse_polynomials(const std::vector<BoundaryComponent>& data) {
  std::set<std::string> ids;
  BoundaryMorse m;
  for (const auto& z : data) {
    if (!ids.insert(z.id).second) throw std::invalid_argument("duplicate component id '" + z.id + "'");
    if (!z.poincare.is_integral() || !z.poincare.is_admissible()) {
      throw std::invalid_argument("component '" + z.id + "': Poincare series " + z.poincare.to_string() +
                                  " needs nonnegative integer coefficients");
    }
    if (z.cls != BoundaryClass::negative) m.plus += z.poincare.shifted(z.ind_plus);
    if (z.cls != BoundaryClass::positive) m.minus += z.poincare.shifted(z.ind_minus);
  }
  return m;
}

Theorem10Report theorem10_check(const SimplicialComplex& k, const Subcomplex& gamma, const IntegerCocycle& theta,
                                const std::vector<BoundaryComponent>& data) {
  gamma.check_parent(k);
  Theorem10Report r;
  r.morse = boundary_morse_polynomials(data);
  r.betti = background_betti(TwistedComplex::build(k, theta));
  r.novikov = novikov_series(r.betti);
  r.plus = check_inequality(r.morse.plus, r.novikov);
  r.minus = check_inequality(r.morse.minus, r.novikov);
  r.literal_plus = check_inequality(r.novikov, r.morse.plus);
  r.literal_minus = check_inequality(r.novikov, r.morse.minus);
  return r;
}

DoubleCrossCheck double_cross_check(const DoubledComplex& d, const std::vector<BoundaryComponent>& data,
                                    const Theorem10Report& report) {
  DoubleCrossCheck out;
  out.lemma = lemma_check(d);

  // components on the double, per isotypic part
  std::array<std::vector<CriticalComponent>, 2> parts;
  for (const auto& z : data) {
    if (z.cls == BoundaryClass::interior || z.cls == BoundaryClass::boundary) {
      for (std::size_t rho = 0; rho < 2; ++rho) {
        std::size_t ind = rho == 0 ? z.ind_plus : z.ind_minus;
        parts[rho].push_back({z.id, ind, 2, z.poincare, z.id});
        parts[rho].push_back({z.id + "'", ind, 2, z.poincare, z.id});
      }
    } else if (z.cls == BoundaryClass::positive) {
      parts[0].push_back({z.id, z.ind_plus, 1, z.poincare, {}});
    } else {
      parts[1].push_back({z.id, z.ind_minus, 1, z.poincare, {}});
    }
  }
  auto tri = morse_series(parts[0]);
  auto sgn = morse_series(parts[1]);
  if (!(tri.total == report.morse.plus) || !(sgn.total == report.morse.minus)) {
    throw std::logic_error("equivariant Morse series of the double differ from the boundary polynomials");
  }
  out.trivial = check_inequality(tri.total, novikov_series(out.lemma.invariant));
  out.sign = check_inequality(sgn.total, novikov_series(out.lemma.sign));
  out.agrees = out.lemma.holds && out.trivial.holds == report.plus.holds && out.sign.holds == report.minus.holds;
  return out;
}

}  // namespace novikov
