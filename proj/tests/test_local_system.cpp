#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "novikov/factor.hpp"
#include "novikov/linalg.hpp"
#include "novikov/twisted.hpp"
#include "oracles.hpp"

using namespace novikov;

namespace {

using Dims = std::vector<std::size_t>;

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

long euler(const Dims& d) {
  long chi = 0;
  for (std::size_t i = 0; i < d.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(d[i]);
  return chi;
}

/// Product of the distinct jump factors of one degree.
Poly jump_polynomial(const DegreeProfile& d) {
  Poly p(Rational(1));
  for (const auto& f : d.factors) p = p * f.factor;
  return p;
}

std::vector<Rational> sample_points() { return {q(2), q(3), q(5), q(7), q(1, 2), q(-3, 2), q(2, 7)}; }

}  // namespace

TEST_CASE("twisted differentials") {
  auto i = fixture::interval();
  auto t = TwistedComplex::build(i, IntegerCocycle({5}));
  const auto& d = t.differential(1);
  REQUIRE(d.rows() == 2);
  CHECK(d(0, 0) == LaurentPoly(Poly::from_ints({-1})));
  CHECK(d(1, 0) == LaurentPoly::monomial(1, 5));

  auto torus = fixture::torus(3);
  auto plain = TwistedComplex::build(torus, IntegerCocycle::zero(torus));
  for (int k = 1; k <= 2; ++k) {
    auto expected = torus.boundary_matrix(k).map([](const Rational& x) { return LaurentPoly(x); });
    CHECK(plain.differential(k) == expected);
  }

  auto theta = fixture::winding_cocycle(torus, 3, [](std::size_t v) { return v / 3; });
  auto twisted = TwistedComplex::build(torus, theta);
  auto composite = twisted.differential(1) * twisted.differential(2);
  CHECK(composite.is_zero());
  CHECK(specialize(twisted.differential(1), q(1)) == torus.boundary_matrix(1));

  auto tri = fixture::filled_triangle();
  CHECK_THROWS_AS(TwistedComplex::build(tri, IntegerCocycle({1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(TwistedComplex::build(tri, IntegerCocycle::zero(tri), SignCocycle({1, -1, 1})),
                  std::invalid_argument);
}

TEST_CASE("hollow triangle with period one") {
  auto c = fixture::circle(3);
  auto t = TwistedComplex::build(c, IntegerCocycle({1, 0, 0}));
  auto divisors = laurent_elementary_divisors(t.differential(1));
  REQUIRE(divisors.size() == 3);
  CHECK(divisors[0] == Poly::from_ints({1}));
  CHECK(divisors[1] == Poly::from_ints({1}));
  CHECK(divisors[2] == Poly::from_ints({-1, 1}));

  CHECK(background_betti(t) == Dims{0, 0});
  for (const auto& s0 : sample_points()) {
    CHECK(oracle::twisted_cochain_dims(c, t.twist(), nullptr, s0) == Dims{0, 0});
    CHECK(specialize(t, s0) == Dims{0, 0});
  }
  CHECK(specialize(t, q(1)) == Dims{1, 1});
  CHECK(oracle::twisted_cochain_dims(c, t.twist(), nullptr, q(1)) == Dims{1, 1});
  CHECK_THROWS(specialize(t, q(0)));

  auto profile = jump_profile(t);
  for (int deg = 0; deg < 2; ++deg) {
    REQUIRE(profile.degrees[deg].factors.size() == 1);
    const auto& f = profile.degrees[deg].factors[0];
    CHECK(f.factor == Poly::from_ints({-1, 1}));
    CHECK(f.jump == 1);
    CHECK(f.irreducible);
    REQUIRE(f.positive_roots.size() == 1);
    CHECK(f.positive_roots[0].lo <= 1);
    CHECK(f.positive_roots[0].hi >= 1);
  }
  CHECK(profile.dimensions_at(q(1)) == Dims{1, 1});
  CHECK(profile.positive_jumps().size() == 1);
}

TEST_CASE("hollow triangle with period two") {
  auto c = fixture::circle(3);
  auto t = TwistedComplex::build(c, IntegerCocycle({2, 0, 0}));
  auto profile = jump_profile(t);
  CHECK(jump_polynomial(profile.degrees[0]) == Poly::from_ints({-1, 0, 1}));
  CHECK(jump_polynomial(profile.degrees[1]) == Poly::from_ints({-1, 0, 1}));
  std::size_t positive = 0, negative = 0;
  for (const auto& f : profile.degrees[0].factors) {
    positive += f.positive_roots.size();
    negative += f.negative_roots;
  }
  CHECK(positive == 1);
  CHECK(negative == 1);
  auto jumps = profile.positive_jumps();
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0].lo <= 1);
  CHECK(jumps[0].hi >= 1);
  // s = -1 is a jump of the family but not a Novikov jump
  CHECK(oracle::twisted_cochain_dims(c, t.twist(), nullptr, q(-1)) == Dims{1, 1});
  CHECK(profile.dimensions_at(q(-1)) == Dims{1, 1});
  CHECK(oracle::twisted_cochain_dims(c, t.twist(), nullptr, q(2)) == Dims{0, 0});
}

TEST_CASE("untwisted complexes have no jumps") {
  for (const auto& k : {fixture::torus(3), fixture::tetrahedron_surface(), fixture::annulus(4)}) {
    auto t = TwistedComplex::build(k, IntegerCocycle::zero(k));
    CHECK(background_betti(t) == betti_numbers(k));
    CHECK(specialize(t, q(1)) == betti_numbers(k));
    auto profile = jump_profile(t);
    for (const auto& d : profile.degrees) CHECK(d.factors.empty());
  }
}

TEST_CASE("torus with a meridian class") {
  auto torus = fixture::torus(3);
  auto theta = fixture::winding_cocycle(torus, 3, [](std::size_t v) { return v / 3; });
  auto t = TwistedComplex::build(torus, theta);
  CHECK(background_betti(t) == Dims{0, 0, 0});
  for (const auto& s0 : {q(2), q(5, 3), q(-4), q(7, 2), q(1, 9)}) {
    auto dims = oracle::twisted_cochain_dims(torus, theta, nullptr, s0);
    CHECK(dims == Dims{0, 0, 0});
    CHECK(specialize(t, s0) == dims);
  }
  CHECK(euler(background_betti(t)) == torus.euler_characteristic());
  auto profile = jump_profile(t);
  CHECK(profile.dimensions_at(q(1)) == Dims{1, 2, 1});
}

TEST_CASE("sign twist on the circle") {
  auto c = fixture::circle(3);
  auto t = TwistedComplex::build(c, IntegerCocycle::zero(c), SignCocycle({1, 1, -1}));
  CHECK(background_betti(t) == Dims{0, 0});
  CHECK(specialize(t, q(1)) == Dims{0, 0});
  std::vector<int> eps{1, 1, -1};
  CHECK(oracle::twisted_cochain_dims(c, t.twist(), &eps, q(1)) == Dims{0, 0});
  // with theta = 0 the family is constant in s
  CHECK(specialize(t, q(-1)) == Dims{0, 0});
  for (const auto& d : jump_profile(t).degrees) CHECK(d.factors.empty());

  // monodromy -s around the loop: the jump moves from s = 1 to s = -1
  auto both = TwistedComplex::build(c, IntegerCocycle({1, 0, 0}), SignCocycle({1, 1, -1}));
  CHECK(specialize(both, q(-1)) == Dims{1, 1});
  CHECK(oracle::twisted_cochain_dims(c, both.twist(), &eps, q(-1)) == Dims{1, 1});
  CHECK(specialize(both, q(1)) == Dims{0, 0});
  auto profile = jump_profile(both);
  CHECK(profile.positive_jumps().empty());
  CHECK(jump_polynomial(profile.degrees[0]) == Poly::from_ints({1, 1}));

  // a trivial sign cocycle changes nothing
  auto plain = TwistedComplex::build(c, IntegerCocycle({1, 0, 0}), SignCocycle({1, 1, 1}));
  CHECK_FALSE(plain.sign().has_value());
}

TEST_CASE("sampling") {
  auto c = fixture::circle(3);
  auto plain = TwistedComplex::build(c, IntegerCocycle::zero(c));
  auto rows = sample_dimensions(plain, {q(1)});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].dims == Dims{1, 1});
  CHECK_FALSE(rows[0].on_jump);

  auto t = TwistedComplex::build(c, IntegerCocycle({1, 0, 0}));
  rows = sample_dimensions(t, {q(2), q(3)});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].dims == Dims{0, 0});
  CHECK(rows[1].dims == Dims{0, 0});
  CHECK(sample_dimensions(t, {}).empty());
  rows = sample_dimensions(t, {q(1, 2), q(1)});
  CHECK_FALSE(rows[0].on_jump);
  CHECK(rows[1].on_jump);
  CHECK_THROWS(sample_dimensions(t, {q(1), q(0)}));
}

TEST_CASE("relative twisted complex") {
  auto i = fixture::interval();
  auto ends = Subcomplex::from_simplices(i, {{0}, {1}});
  auto t = TwistedComplex::build_relative(i, ends, IntegerCocycle({3}));
  CHECK(background_betti(t) == Dims{0, 1});
  auto d = fixture::disk(4);
  std::vector<Simplex> rim;
  for (std::size_t v = 0; v < 4; ++v) rim.push_back({v, (v + 1) % 4});
  auto rel = TwistedComplex::build_relative(d, Subcomplex::closure(d, rim), IntegerCocycle::zero(d));
  CHECK(background_betti(rel) == Dims{0, 0, 1});
}

TEST_CASE("factor splitting") {
  auto parts = split_square_free(Poly::from_ints({-1, 0, 0, 0, 0, 0, 1}));  // s^6 - 1
  std::vector<Poly> factors;
  for (const auto& p : parts) {
    CHECK(p.irreducible);
    factors.push_back(p.factor);
  }
  CHECK(factors == std::vector<Poly>{Poly::from_ints({-1, 1}), Poly::from_ints({1, 1}), Poly::from_ints({1, -1, 1}),
                                     Poly::from_ints({1, 1, 1})});
  auto golden = split_square_free(Poly::from_ints({1, -3, 1}));
  REQUIRE(golden.size() == 1);
  CHECK(golden[0].irreducible);
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) is not detected: left unproven
  auto quartic = split_square_free(Poly::from_ints({4, 0, 0, 0, 1}));
  REQUIRE(quartic.size() == 1);
  CHECK_FALSE(quartic[0].irreducible);
  auto lin = split_square_free(Poly::from_ints({-2, 3}) * Poly::from_ints({0, 1}));
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].factor == Poly({q(-2, 3), q(1)}));
  CHECK(lin[1].factor == Poly::variable());
}

TEST_CASE("Euler invariance on random complexes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = fixture::random_complex(rng);
    auto theta = fixture::random_cocycle(k, rng);
    auto t = TwistedComplex::build(k, theta);
    const long chi = k.euler_characteristic();
    auto background = background_betti(t);
    CHECK(euler(background) == chi);
    auto profile = jump_profile(t);
    CHECK(profile.background() == background);
    for (int i = 0; i < 5; ++i) {
      Rational s0 = q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
      if (rng() % 3 == 0) s0 = -s0;
      auto dims = specialize(t, s0);
      CHECK(euler(dims) == chi);
      CHECK(dims == oracle::twisted_cochain_dims(k, theta, nullptr, s0));
      CHECK(dims == profile.dimensions_at(s0));
      for (std::size_t d = 0; d < dims.size(); ++d) CHECK(dims[d] >= background[d]);
    }
    // every rational root of a jump factor is a genuine jump
    for (const auto& s0 : {q(1), q(-1)}) {
      auto dims = specialize(t, s0);
      CHECK(dims == profile.dimensions_at(s0));
      CHECK(euler(dims) == chi);
    }
  }
}

TEST_CASE("gauge invariance") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = fixture::random_complex(rng);
    auto theta = fixture::random_cocycle(k, rng);
    std::vector<long> f;
    for (std::size_t v = 0; v < k.vertex_count(); ++v) f.push_back(static_cast<long>(rng() % 7) - 3);
    auto a = jump_profile(TwistedComplex::build(k, theta));
    auto b = jump_profile(TwistedComplex::build(k, theta + coboundary(k, f)));
    CHECK(a.background() == b.background());
    for (std::size_t d = 0; d < a.degrees.size(); ++d) {
      CHECK(a.degrees[d].divisors == b.degrees[d].divisors);
      CHECK(jump_polynomial(a.degrees[d]) == jump_polynomial(b.degrees[d]));
    }
    auto pa = a.positive_jumps(), pb = b.positive_jumps();
    REQUIRE(pa.size() == pb.size());
    for (std::size_t j = 0; j < pa.size(); ++j) {
      CHECK(pa[j].lo == pb[j].lo);
      CHECK(pa[j].hi == pb[j].hi);
    }
  }
}

TEST_CASE("scaling the class") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = fixture::random_complex(rng);
    auto theta = fixture::random_cocycle(k, rng);
    auto base = jump_profile(TwistedComplex::build(k, theta));
    for (long factor : {2L, 3L}) {
      auto scaled = jump_profile(TwistedComplex::build(k, theta.scaled(factor)));
      CHECK(scaled.background() == base.background());
      for (std::size_t d = 0; d < base.degrees.size(); ++d) {
        Poly expected = square_free_part(jump_polynomial(base.degrees[d]).compose_power(static_cast<unsigned>(factor)));
        CHECK(jump_polynomial(scaled.degrees[d]) == expected.monic());
      }
    }
  }
}
