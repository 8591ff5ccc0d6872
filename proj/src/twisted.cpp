#include "novikov/twisted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "novikov/linalg.hpp"

namespace novikov {

namespace {

void require_cocycles(const SimplicialComplex& k, const IntegerCocycle& theta, const std::optional<SignCocycle>& eps) {
  auto check = verify_cocycle(k, theta);
  if (!check.ok) throw std::invalid_argument("twist is not a cocycle on " + k.name(check.violators.front()));
  if (eps) {
    auto signs = verify_cocycle(k, *eps);
    if (!signs.ok) throw std::invalid_argument("sign twist is not a cocycle on " + k.name(signs.violators.front()));
  }
}

std::vector<std::size_t> homology_from_ranks(const TwistedComplex& t, const std::vector<std::size_t>& ranks) {
  // ranks[k] = rank d_k, with ranks[0] = 0
  std::vector<std::size_t> dims;
  for (int k = 0; k <= t.top_degree(); ++k) {
    std::size_t out = ranks[static_cast<std::size_t>(k)];
    std::size_t in = k < t.top_degree() ? ranks[static_cast<std::size_t>(k + 1)] : 0;
    dims.push_back(t.chain_rank(k) - out - in);
  }
  return dims;
}

}  // namespace

TwistedComplex TwistedComplex::build(const SimplicialComplex& k, const IntegerCocycle& theta,
                                     const std::optional<SignCocycle>& eps) {
  return build_relative(k, Subcomplex::empty(k), theta, eps);
}

TwistedComplex TwistedComplex::build_relative(const SimplicialComplex& k, const Subcomplex& a,
                                              const IntegerCocycle& theta, const std::optional<SignCocycle>& eps) {
  a.check_parent(k);
  require_cocycles(k, theta, eps);
  TwistedComplex t;
  t.complex_ = k;
  t.theta_ = theta;
  if (eps && !eps->is_trivial()) t.eps_ = eps;

  std::vector<std::vector<long>> position;  // parent index -> row/column, -1 if dropped
  for (int d = 0; d <= k.dimension(); ++d) {
    auto& cells = t.cells_.emplace_back();
    auto& pos = position.emplace_back(k.count(d), -1);
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (a.contains(d, i)) continue;
      pos[i] = static_cast<long>(cells.size());
      cells.push_back(i);
    }
  }

  for (int d = 1; d <= k.dimension(); ++d) {
    const auto& cols = t.cells_[static_cast<std::size_t>(d)];
    Matrix<LaurentPoly> m(t.cells_[static_cast<std::size_t>(d - 1)].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex& sigma = k.simplex(d, cols[c]);
      for (std::size_t j = 0; j < sigma.size(); ++j) {
        Simplex face = sigma;
        face.erase(face.begin() + static_cast<long>(j));
        long row = position[static_cast<std::size_t>(d - 1)][k.index_of(face)];
        if (row < 0) continue;
        LaurentPoly entry = t.transport(sigma.front(), face.front());
        m(static_cast<std::size_t>(row), c) = (j % 2 == 0) ? entry : -entry;
      }
    }
    t.differentials_.push_back(std::move(m));
  }
  return t;
}

std::size_t TwistedComplex::chain_rank(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return cells_[static_cast<std::size_t>(k)].size();
}

const Matrix<LaurentPoly>& TwistedComplex::differential(int k) const {
  if (k < 1 || k > top_degree()) throw std::out_of_range("no differential d_" + std::to_string(k));
  return differentials_[static_cast<std::size_t>(k - 1)];
}

LaurentPoly TwistedComplex::transport(std::size_t u, std::size_t v) const {
  if (u == v) return LaurentPoly::monomial(1, 0);
  int sign = eps_ ? eps_->value(complex_, u, v) : 1;
  return LaurentPoly::monomial(sign, theta_.value(complex_, u, v));
}

std::vector<std::size_t> background_betti(const TwistedComplex& t) {
  std::vector<std::size_t> ranks{0};
  for (int k = 1; k <= t.top_degree(); ++k) ranks.push_back(rank(t.differential(k)));
  return homology_from_ranks(t, ranks);
}

std::vector<std::size_t> specialize(const TwistedComplex& t, const Rational& s0) {
  if (s0 == 0) throw std::invalid_argument("cannot specialize at s = 0");
  std::vector<std::size_t> ranks{0};
  for (int k = 1; k <= t.top_degree(); ++k) ranks.push_back(rank(specialize(t.differential(k), s0)));
  return homology_from_ranks(t, ranks);
}

// ---------------------------------------------------------------------------

std::size_t DegreeProfile::dimension_at(const Rational& s0) const {
  if (s0 == 0) throw std::invalid_argument("cannot evaluate at s = 0");
  std::size_t dim = background;
  for (const auto& d : divisors)
    if (d(s0) == 0) ++dim;
  return dim;
}

std::vector<std::size_t> NovikovProfile::background() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.background);
  return out;
}

std::vector<std::size_t> NovikovProfile::dimensions_at(const Rational& s0) const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dimension_at(s0));
  return out;
}

bool NovikovProfile::jumps_at(const Rational& s0) const { return dimensions_at(s0) != background(); }

std::vector<RootInterval> NovikovProfile::positive_jumps() const {
  Poly all(Rational(1));
  for (const auto& d : degrees)
    for (const auto& f : d.factors)
      if (!f.positive_roots.empty()) all = all * exact_div(f.factor, gcd(all, f.factor));
  if (all.degree() <= 0) return {};
  return count_positive_real_roots(all).intervals;
}

NovikovProfile jump_profile(const TwistedComplex& t) {
  NovikovProfile profile;
  const int top = t.top_degree();
  std::vector<std::vector<Poly>> nonunit(static_cast<std::size_t>(std::max(top + 2, 1)));  // by k for d_k
  for (int k = 1; k <= top; ++k) {
    for (const Poly& d : laurent_elementary_divisors(t.differential(k)))
      if (d.degree() > 0) nonunit[static_cast<std::size_t>(k)].push_back(d);
  }
  auto background = background_betti(t);

  for (int i = 0; i <= top; ++i) {
    DegreeProfile deg;
    deg.background = background[static_cast<std::size_t>(i)];
    for (int k : {i, i + 1}) {
      if (k < 1 || k > top) continue;
      for (const auto& d : nonunit[static_cast<std::size_t>(k)]) deg.divisors.push_back(d);
    }
    std::sort(deg.divisors.begin(), deg.divisors.end(), poly_less);

    // the jump at a root is the number of divisors vanishing there, i.e. its
    // multiplicity in the product of their square-free parts
    Poly product(Rational(1));
    for (const auto& d : deg.divisors) product = product * square_free_part(d);
    if (product.degree() > 0) {
      for (const auto& [part, jump] : square_free_decomposition(product)) {
        for (const auto& piece : split_square_free(part)) {
          JumpFactor f;
          f.factor = piece.factor;
          f.irreducible = piece.irreducible;
          f.jump = static_cast<std::size_t>(jump);
          f.positive_roots = count_positive_real_roots(piece.factor).intervals;
          f.negative_roots = count_negative_real_roots(piece.factor);
          f.complex_roots = static_cast<std::size_t>(piece.factor.degree()) - f.positive_roots.size() - f.negative_roots;
          deg.factors.push_back(std::move(f));
        }
      }
      std::sort(deg.factors.begin(), deg.factors.end(),
                [](const JumpFactor& a, const JumpFactor& b) { return poly_less(a.factor, b.factor); });
    }
    profile.degrees.push_back(std::move(deg));
  }
  return profile;
}

std::vector<SampleRow> sample_dimensions(const TwistedComplex& t, const std::vector<Rational>& grid) {
  for (const auto& s : grid)
    if (s == 0) throw std::invalid_argument("sample grid contains s = 0");
  std::vector<SampleRow> rows;
  if (grid.empty()) return rows;
  auto background = background_betti(t);
  for (const auto& s : grid) {
    SampleRow row{s, specialize(t, s), false};
    row.on_jump = row.dims != background;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace novikov
