#include "novikov/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "novikov/linalg.hpp"

namespace novikov {

GroupAction GroupAction::from_vertex_maps(const SimplicialComplex& k, const FiniteGroup& g,
                                          std::vector<std::vector<std::size_t>> maps) {
  const std::size_t n = k.vertex_count();
  if (maps.size() != g.size()) throw std::invalid_argument("action needs one vertex map per group element");
  for (std::size_t e = 0; e < maps.size(); ++e) {
    const auto& m = maps[e];
    if (m.size() != n) throw std::invalid_argument("vertex map of '" + g.label(e) + "' has the wrong length");
    std::vector<bool> hit(n, false);
    for (auto v : m) {
      if (v >= n || hit[v]) throw std::invalid_argument("vertex map of '" + g.label(e) + "' is not a bijection");
      hit[v] = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (maps[g.identity()][v] != v) throw std::invalid_argument("the identity element moves vertex " + k.label(v));
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      for (std::size_t v = 0; v < n; ++v)
        if (maps[g.multiply(x, y)][v] != maps[x][maps[y][v]]) {
          throw std::invalid_argument("action is not a homomorphism at (" + g.label(x) + ", " + g.label(y) + ")");
        }

  GroupAction a;
  a.complex_ = k;
  a.group_ = g;
  a.maps_ = std::move(maps);
  for (std::size_t e = 0; e < g.size(); ++e) {
    auto& per_dim = a.images_.emplace_back();
    for (int d = 0; d <= k.dimension(); ++d) {
      auto& imgs = per_dim.emplace_back();
      for (const auto& sigma : k.simplices(d)) {
        Simplex image;
        for (auto v : sigma) image.push_back(a.maps_[e][v]);
        int sign = sort_with_sign(image);
        auto idx = k.find(image);
        if (!idx) {
          throw std::invalid_argument("element '" + g.label(e) + "' maps " + k.name(sigma) + " to a non-simplex");
        }
        imgs.push_back({*idx, sign});
      }
    }
  }
  return a;
}

GroupAction GroupAction::trivial(const SimplicialComplex& k) {
  std::vector<std::size_t> id(k.vertex_count());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
  return from_vertex_maps(k, FiniteGroup::trivial(), {id});
}

GroupAction::Image GroupAction::image(std::size_t g, int k, std::size_t index) const {
  return images_.at(g).at(static_cast<std::size_t>(k)).at(index);
}

Matrix<Rational> GroupAction::chain_matrix(std::size_t g, int k) const {
  const std::size_t n = complex_.count(k);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto img = image(g, k, i);
    m(img.index, i) = img.sign;
  }
  return m;
}

void GroupAction::check_preserves(const Subcomplex& a) const {
  a.check_parent(complex_);
  for (std::size_t g = 0; g < group_.size(); ++g)
    for (int d = 0; d <= complex_.dimension(); ++d)
      for (std::size_t i = 0; i < complex_.count(d); ++i)
        if (a.contains(d, i) != a.contains(d, image(g, d, i).index)) {
          throw std::invalid_argument("element '" + group_.label(g) + "' does not preserve the subcomplex at " +
                                      complex_.name(complex_.simplex(d, i)));
        }
}

// ---------------------------------------------------------------------------

namespace {

template <class Value>
InvarianceCheck check_edges(const GroupAction& a, Value value) {
  InvarianceCheck out;
  const auto& k = a.complex();
  for (std::size_t g = 0; g < a.group().size(); ++g)
    for (const auto& e : k.simplices(1)) {
      std::size_t u = a.vertex_image(g, e[0]), v = a.vertex_image(g, e[1]);
      if (value(u, v) != value(e[0], e[1])) out.violators.push_back({g, e});
    }
  out.ok = out.violators.empty();
  return out;
}

}  // namespace

InvarianceCheck verify_invariance(const GroupAction& a, const IntegerCocycle& theta) {
  const auto& k = a.complex();
  if (theta.size() != k.count(1)) throw std::invalid_argument("cocycle does not match the complex");
  return check_edges(a, [&](std::size_t u, std::size_t v) { return theta.value(k, u, v); });
}

InvarianceCheck verify_invariance(const GroupAction& a, const SignCocycle& eps) {
  const auto& k = a.complex();
  if (eps.size() != k.count(1)) throw std::invalid_argument("sign cocycle does not match the complex");
  return check_edges(a, [&](std::size_t u, std::size_t v) { return eps.value(k, u, v); });
}

Matrix<LaurentPoly> twisted_action_matrix(const GroupAction& a, const TwistedComplex& t, std::size_t g, int k) {
  const auto& K = t.complex();
  const auto& cells = t.cells(k);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i]] = i;
  Matrix<LaurentPoly> m(cells.size(), cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Simplex& sigma = K.simplex(k, cells[c]);
    auto img = a.image(g, k, cells[c]);
    auto row = position.find(img.index);
    if (row == position.end()) throw std::invalid_argument("action does not preserve the dropped subcomplex");
    const Simplex& target = K.simplex(k, img.index);
    LaurentPoly entry = t.transport(a.vertex_image(g, sigma.front()), target.front());
    m(row->second, c) = img.sign > 0 ? entry : -entry;
  }
  return m;
}

namespace {

Matrix<RatFunc> to_field(const Matrix<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& x) { return RatFunc(x); });
}

void require_invariant(const GroupAction& a, const TwistedComplex& t) {
  bool same = a.complex().labels() == t.complex().labels() && a.complex().dimension() == t.complex().dimension();
  for (int d = 0; same && d <= a.complex().dimension(); ++d) same = a.complex().simplices(d) == t.complex().simplices(d);
  if (!same) {
    throw std::invalid_argument("action and twisted complex live on different complexes");
  }
  auto inv = verify_invariance(a, t.twist());
  if (!inv.ok) {
    const auto& v = inv.violators.front();
    throw std::invalid_argument("twist is not invariant: element '" + a.group().label(v.element) + "' on edge " +
                                t.complex().name(v.edge));
  }
  if (t.sign()) {
    auto signs = verify_invariance(a, *t.sign());
    if (!signs.ok) throw std::invalid_argument("sign twist is not invariant");
  }
}

}  // namespace

std::vector<RatFunc> twisted_traces(const GroupAction& a, const TwistedComplex& t, int k) {
  require_invariant(a, t);
  const std::size_t order = a.group().size();
  std::vector<RatFunc> traces(order);
  if (k < 0 || k > t.top_degree()) return traces;
  const std::size_t n = t.chain_rank(k);
  if (n == 0) return traces;

  std::vector<Matrix<LaurentPoly>> actions;
  for (std::size_t g = 0; g < order; ++g) {
    actions.push_back(twisted_action_matrix(a, t, g, k));
    for (int d : {k, k + 1}) {
      if (d < 1 || d > t.top_degree()) continue;
      auto below = d == k ? twisted_action_matrix(a, t, g, k - 1) : actions.back();
      auto above = d == k ? actions.back() : twisted_action_matrix(a, t, g, k + 1);
      if (!(t.differential(d) * above == below * t.differential(d))) {
        throw std::logic_error("group action does not commute with the twisted differential d_" + std::to_string(d));
      }
    }
  }

  // cycles
  Matrix<RatFunc> z = k >= 1 ? kernel_basis(to_field(t.differential(k))) : Matrix<RatFunc>(n, n);
  if (k == 0)
    for (std::size_t i = 0; i < n; ++i) z(i, i) = RatFunc(Rational(1));
  // boundaries
  Matrix<RatFunc> b = k < t.top_degree() ? to_field(t.differential(k + 1)) : Matrix<RatFunc>(n, 0);

  // a basis of the boundaries followed by cycles completing it
  Matrix<RatFunc> joined(n, b.cols() + z.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) joined(i, j) = b(i, j);
    for (std::size_t j = 0; j < z.cols(); ++j) joined(i, b.cols() + j) = z(i, j);
  }
  std::vector<std::size_t> basis_cols, homology_cols;
  for (auto c : rref(joined).pivots) {
    basis_cols.push_back(c);
    if (c >= b.cols()) homology_cols.push_back(c);
  }
  const std::size_t m = homology_cols.size();
  for (std::size_t g = 0; g < order; ++g) traces[g] = RatFunc(Rational(0));
  if (m == 0) return traces;

  // solve [basis | g h_1 ... g h_m for all g] in one elimination
  const std::size_t r = basis_cols.size();
  Matrix<RatFunc> system(n, r + order * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) system(i, j) = joined(i, basis_cols[j]);
  for (std::size_t g = 0; g < order; ++g) {
    auto act = to_field(actions[g]);
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t col = homology_cols[h];
      for (std::size_t i = 0; i < n; ++i) {
        RatFunc sum;
        for (std::size_t l = 0; l < n; ++l)
          if (!act(i, l).is_zero() && !joined(l, col).is_zero()) sum += act(i, l) * joined(l, col);
        system(i, r + g * m + h) = sum;
      }
    }
  }
  auto red = rref(system);
  if (red.pivots.size() != r || (r > 0 && red.pivots.back() != r - 1)) {
    throw std::logic_error("image of a cycle is not a cycle");
  }
  for (std::size_t g = 0; g < order; ++g) {
    RatFunc tr(Rational(0));
    for (std::size_t h = 0; h < m; ++h) tr += red.reduced(r - m + h, r + g * m + h);
    traces[g] = tr;
  }
  return traces;
}

RatFunc trace_on_twisted_cohomology(const GroupAction& a, const TwistedComplex& t, std::size_t g, int k) {
  if (g >= a.group().size()) throw std::invalid_argument("no such group element");
  return twisted_traces(a, t, k).at(g);
}

IsotypicReport isotypic_multiplicities(const GroupAction& a, const CharacterTable& chars, const TwistedComplex& t) {
  const auto& G = a.group();
  if (chars.count() == 0 || chars.irreducible(0).values.size() != G.classes().size()) {
    throw std::invalid_argument("character table does not belong to the acting group");
  }
  IsotypicReport report;
  for (std::size_t i = 0; i < chars.count(); ++i) {
    report.names.push_back(chars.irreducible(i).name);
    report.dims.push_back(chars.dimension(i));
  }
  report.background = background_betti(t);
  const unsigned order = G.exponent();
  const Rational group_order(static_cast<long>(G.size()));

  for (int k = 0; k <= t.top_degree(); ++k) {
    auto raw = twisted_traces(a, t, k);
    std::vector<Rational> traces;
    for (std::size_t g = 0; g < raw.size(); ++g) {
      if (!raw[g].is_constant()) {
        throw std::logic_error("trace of '" + G.label(g) + "' in degree " + std::to_string(k) +
                               " is not constant: " + raw[g].to_string());
      }
      traces.push_back(raw[g].constant_value());
    }
    if (traces[G.identity()] != Rational(static_cast<long>(report.background[static_cast<std::size_t>(k)]))) {
      throw std::logic_error("trace of the identity differs from the background dimension");
    }
    std::vector<std::size_t> mult;
    long weighted = 0;
    for (std::size_t rho = 0; rho < chars.count(); ++rho) {
      CyclotomicNumber sum(order, Rational(0));
      for (std::size_t g = 0; g < G.size(); ++g) sum = sum + chars.value(rho, g) * traces[g];
      if (!sum.is_rational()) throw std::logic_error("isotypic multiplicity is not rational");
      Rational value = sum.rational_value() / group_order;
      if (!is_integer(value) || value < 0) {
        throw std::logic_error("isotypic multiplicity " + to_string(value) + " is not a nonnegative integer");
      }
      mult.push_back(value.get_num().get_ui());
      weighted += chars.dimension(rho) * value.get_num().get_si();
    }
    if (weighted != static_cast<long>(report.background[static_cast<std::size_t>(k)])) {
      throw std::logic_error("isotypic multiplicities do not add up to the background dimension");
    }
    report.traces.push_back(std::move(traces));
    report.multiplicity.push_back(std::move(mult));
  }
  return report;
}

std::vector<std::size_t> equivariant_novikov_numbers(const IsotypicReport& report, std::size_t rho) {
  if (rho >= report.names.size()) throw std::invalid_argument("no such irreducible");
  std::vector<std::size_t> out;
  for (const auto& row : report.multiplicity) out.push_back(row[rho]);
  return out;
}

// ---------------------------------------------------------------------------

Quotient quotient_complex(const GroupAction& a) {
  const auto& k = a.complex();
  const auto& G = a.group();
  for (std::size_t g = 0; g < G.size(); ++g) {
    if (g == G.identity()) continue;
    for (int d = 0; d <= k.dimension(); ++d)
      for (std::size_t i = 0; i < k.count(d); ++i)
        if (a.image(g, d, i).index == i) {
          throw std::invalid_argument("action is not free: '" + G.label(g) + "' fixes " + k.name(k.simplex(d, i)));
        }
  }

  Quotient q;
  const std::size_t n = k.vertex_count();
  q.vertex_class.assign(n, n);
  std::vector<std::string> labels;
  std::vector<std::size_t> representative;
  for (std::size_t v = 0; v < n; ++v) {
    if (q.vertex_class[v] != n) continue;
    for (std::size_t g = 0; g < G.size(); ++g) q.vertex_class[a.vertex_image(g, v)] = labels.size();
    labels.push_back(k.label(v));
    representative.push_back(v);
  }

  std::map<Simplex, std::size_t> seen;  // orbit vertex set -> simplex orbit representative
  std::vector<Simplex> simplices;
  for (int d = 1; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const Simplex& sigma = k.simplex(d, i);
      Simplex image;
      for (auto v : sigma) image.push_back(q.vertex_class[v]);
      if (sort_with_sign(image) == 0) {
        throw std::invalid_argument("quotient is not simplicial: " + k.name(sigma) + " has two vertices in one orbit");
      }
      auto [it, inserted] = seen.emplace(image, i);
      if (!inserted) {
        bool same_orbit = false;
        for (std::size_t g = 0; g < G.size() && !same_orbit; ++g) same_orbit = a.image(g, d, it->second).index == i;
        if (!same_orbit) {
          throw std::invalid_argument("quotient is not simplicial: " + k.name(sigma) + " and " +
                                      k.name(k.simplex(d, it->second)) + " have the same vertex orbits");
        }
        continue;
      }
      simplices.push_back(image);
    }
  q.complex = SimplicialComplex::from_simplices(std::move(labels), simplices);

  q.edge_lift.resize(q.complex.count(1));
  for (const auto& e : k.simplices(1)) {
    std::size_t cu = q.vertex_class[e[0]], cv = q.vertex_class[e[1]];
    std::size_t idx = *q.complex.edge(cu, cv);
    q.edge_lift[idx] = cu < cv ? std::pair{e[0], e[1]} : std::pair{e[1], e[0]};
  }
  return q;
}

IntegerCocycle Quotient::descend(const GroupAction& a, const IntegerCocycle& theta) const {
  auto inv = verify_invariance(a, theta);
  if (!inv.ok) throw std::invalid_argument("only an invariant cocycle descends to the quotient");
  std::vector<long> values;
  for (const auto& [u, v] : edge_lift) values.push_back(theta.value(a.complex(), u, v));
  return IntegerCocycle(std::move(values));
}

}  // namespace novikov
