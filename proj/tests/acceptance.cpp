// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "novikov/doubling.hpp"
#include "novikov/io.hpp"
#include "novikov/linalg.hpp"
#include "oracles.hpp"

using namespace novikov;
namespace fs = std::filesystem;

namespace {

using Dims = std::vector<std::size_t>;

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

CountingSeries S(std::initializer_list<long> c) { return CountingSeries::from_ints(c); }

std::string show(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

/// Collects failed expectations of one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

Poly product_of_factors(const DegreeProfile& d) {
  Poly p(Rational(1));
  for (const auto& f : d.factors) p *= f.factor;
  return p;
}

/// s^p - 1
Poly cyclic_locus(long p) { return Poly::monomial(1, static_cast<std::size_t>(p)) - Poly(Rational(1)); }

/// s^deg p(1/s)
Poly reciprocal(const Poly& p) {
  auto c = p.coefficients();
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

bool contains(const RootInterval& r, const Rational& x) { return r.exact() ? r.lo == x : r.lo < x && x <= r.hi; }

bool overlap(const RootInterval& a, const RootInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

const std::vector<long> circle_sizes{3, 6, 12};
const std::vector<long> circle_periods{1, 2, 3};

void circle_family(Criterion& c) {
  const std::vector<Rational> points{q(1), q(-1), q(2), q(1, 2), q(3), q(-5, 3), q(7, 4)};
  for (long n : circle_sizes)
    for (long p : circle_periods) {
      const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": ";
      auto k = fixture::circle(static_cast<std::size_t>(n));
      auto theta = fixture::circle_period(k, p);
      auto t = TwistedComplex::build(k, theta);
      auto prof = jump_profile(t);
      c.expect(background_betti(t) == Dims{0, 0}, tag + "background " + show(background_betti(t)));
      c.expect(prof.background() == Dims{0, 0}, tag + "profile background");
      c.expect(prof.degrees.size() == 2, tag + "degree count");
      for (std::size_t i = 0; i < prof.degrees.size(); ++i) {
        auto locus = product_of_factors(prof.degrees[i]);
        c.expect(locus == cyclic_locus(p),
                 tag + "degree " + std::to_string(i) + " jump locus " + locus.to_string());
        for (const auto& f : prof.degrees[i].factors) c.expect(f.jump == 1, tag + "jump size");
      }
      auto jumps = prof.positive_jumps();
      c.expect(jumps.size() == 1 && contains(jumps[0], q(1)), tag + "positive jumps");
      c.expect(prof.dimensions_at(q(1)) == Dims{1, 1}, tag + "dims at 1");
      for (const auto& s0 : points) {
        auto direct = oracle::twisted_cochain_dims(k, theta, nullptr, s0);
        c.expect(prof.dimensions_at(s0) == direct, tag + "profile vs oracle at " + s0.get_str());
        c.expect(specialize(t, s0) == direct, tag + "specialize vs oracle at " + s0.get_str());
      }
    }
}

long alternating(const Dims& d) {
  long chi = 0;
  for (std::size_t i = 0; i < d.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(d[i]);
  return chi;
}

void euler_invariance(Criterion& c) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = fixture::random_complex(rng, 40);
    auto theta = fixture::random_cocycle(k, rng);
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    c.expect(k.total_count() <= 40, tag + "size");
    auto t = TwistedComplex::build(k, theta);
    const long chi = k.euler_characteristic();
    long counted = 0;
    for (int d = 0; d <= k.dimension(); ++d) counted += (d % 2 ? -1 : 1) * static_cast<long>(k.count(d));
    c.expect(chi == counted, tag + "simplex count");
    c.expect(alternating(background_betti(t)) == chi, tag + "background chi");
    for (int i = 0; i < 5; ++i) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 7);
      if (num == 0) num = 1;
      auto s0 = q(num, den);
      c.expect(alternating(specialize(t, s0)) == chi, tag + "chi at " + s0.get_str());
      c.expect(alternating(oracle::twisted_cochain_dims(k, theta, nullptr, s0)) == chi,
               tag + "oracle chi at " + s0.get_str());
    }
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Subcomplex closure_of_edges(const SimplicialComplex& k, const std::vector<Simplex>& edges) {
  return Subcomplex::closure(k, edges);
}

Subcomplex triangle_boundary(const SimplicialComplex& tri) { return closure_of_edges(tri, {{0, 1}, {1, 2}, {0, 2}}); }

Subcomplex annulus_boundary(const SimplicialComplex& ann, std::size_t n) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({n + i, n + (i + 1) % n});
  }
  return closure_of_edges(ann, edges);
}

IntegerCocycle annulus_winding(const SimplicialComplex& ann, std::size_t n) {
  return fixture::winding_cocycle(ann, n, [n](std::size_t v) { return v % n; });
}

void regular_identity(Criterion& c) {
  struct Example {
    std::string name;
    GroupAction action;
    CharacterTable chars;
    TwistedComplex t;
  };
  std::vector<Example> examples;
  for (const auto& e : fs::directory_iterator(NOVIKOV_CORPUS_DIR)) {
    if (e.path().extension() != ".json") continue;
    auto doc = parse_problem(slurp(e.path()));
    if (!doc.group) continue;
    examples.push_back({e.path().filename().string(), doc.group->action, doc.group->characters,
                        TwistedComplex::build(doc.complex, doc.cocycle, doc.sign_cocycle)});
  }
  c.expect(examples.size() >= 4, "bundled equivariant documents found: " + std::to_string(examples.size()));
  // the swap on the doubles of the boundary examples
  auto z2 = builtin_group("Z2").characters;
  auto tri = fixture::filled_triangle();
  auto disk = build_double(tri, triangle_boundary(tri), IntegerCocycle::zero(tri));
  examples.push_back({"double of the disk", disk.action, z2, TwistedComplex::build(disk.complex, disk.induced)});
  auto ann = fixture::annulus(3);
  auto torus = build_double(ann, annulus_boundary(ann, 3), annulus_winding(ann, 3));
  examples.push_back({"double of the annulus", torus.action, z2, TwistedComplex::build(torus.complex, torus.induced)});
  auto flat = build_double(ann, annulus_boundary(ann, 3), IntegerCocycle::zero(ann));
  examples.push_back({"untwisted double of the annulus", flat.action, z2,
                      TwistedComplex::build(flat.complex, flat.induced)});

  for (const auto& ex : examples) {
    auto report = isotypic_multiplicities(ex.action, ex.chars, ex.t);
    auto betti = background_betti(ex.t);
    c.expect(report.multiplicity.size() == betti.size(), ex.name + ": degree count");
    for (std::size_t i = 0; i < betti.size() && i < report.multiplicity.size(); ++i) {
      long sum = 0;
      for (std::size_t r = 0; r < ex.chars.count(); ++r)
        sum += ex.chars.dimension(r) * static_cast<long>(report.multiplicity[i][r]);
      c.expect(sum == static_cast<long>(betti[i]),
               ex.name + ": degree " + std::to_string(i) + " sum " + std::to_string(sum) + " vs " +
                   std::to_string(betti[i]));
    }
  }
}

void pushforward(Criterion& c) {
  auto hex = fixture::circle(6);
  std::vector<std::size_t> id, half;
  for (std::size_t v = 0; v < 6; ++v) {
    id.push_back(v);
    half.push_back((v + 3) % 6);
  }
  auto a = GroupAction::from_vertex_maps(hex, FiniteGroup::cyclic(2), {id, half});
  auto theta = IntegerCocycle::from_oriented(hex, {{0, 1, 1}, {3, 4, 1}});
  c.expect(verify_invariance(a, theta).ok, "theta invariant");
  auto per = periods(hex, theta).values;
  c.expect(per.size() == 1 && std::abs(per[0]) == 2, "period 2");

  auto quo = quotient_complex(a);
  c.expect(quo.complex.vertex_count() == 3 && quo.complex.count(1) == 3, "quotient is a triangle");
  auto down = quo.descend(a, theta);
  c.expect(verify_cocycle(quo.complex, down).ok, "descended cocycle closed");

  auto chars = builtin_group("Z2").characters;
  auto report = isotypic_multiplicities(a, chars, TwistedComplex::build(hex, theta));
  auto trivial = chars.find("triv");
  c.expect(trivial.has_value(), "trivial character");
  auto up = equivariant_novikov_numbers(report, trivial.value_or(0));
  auto below = background_betti(TwistedComplex::build(quo.complex, down));
  c.expect(up == below, "trivial multiplicity " + show(up) + " vs quotient " + show(below));
  // the quotient side once more by direct elimination
  for (const auto& s0 : {q(2), q(3, 5), q(7)})
    c.expect(oracle::twisted_cochain_dims(quo.complex, down, nullptr, s0) == below, "quotient oracle");
}

bool nonnegative_integral(const CountingSeries& s) {
  for (int k = 0; k <= s.degree(); ++k) {
    auto x = s.coeff(static_cast<std::size_t>(k));
    if (x < 0 || x.get_den() != 1) return false;
  }
  return true;
}

void expect_minus_one(Criterion& c, const InequalityVerdict& v, const std::string& tag) {
  if (v.holds) c.expect(v.morse(q(-1)) == v.novikov(q(-1)), tag + ": M(-1) = N(-1)");
}

void morse_checker(Criterion& c) {
  // height function on the circle: a minimum and a maximum
  auto circle = fixture::circle(4);
  auto flat = TwistedComplex::build(circle, IntegerCocycle::zero(circle));
  auto n_exact = novikov_series(background_betti(flat));
  auto m_exact = morse_series({{"min", 0, 1, S({1}), ""}, {"max", 1, 1, S({1}), ""}}).total;
  c.expect(m_exact == S({1, 1}) && n_exact == S({1, 1}), "exact case series");
  auto exact = check_inequality(m_exact, n_exact);
  c.expect(exact.holds && exact.quotient.is_zero(), "exact case Q = 0");
  expect_minus_one(c, exact, "exact");

  // nonvanishing form with nonzero class: no zeros, N = 0
  auto twisted = TwistedComplex::build(circle, fixture::circle_period(circle, 1));
  auto n_free = novikov_series(background_betti(twisted));
  auto m_free = morse_series({}).total;
  c.expect(m_free.is_zero() && n_free.is_zero(), "nonvanishing case series");
  auto free = check_inequality(m_free, n_free);
  c.expect(free.holds && free.quotient.is_zero(), "nonvanishing case Q = 0");
  expect_minus_one(c, free, "nonvanishing");

  auto bad = check_inequality(S({1}), S({}));
  c.expect(!bad.holds, "inconsistent input fails");
  c.expect(bad.failure == InequalityFailure::nonzero_remainder, "failure kind");
  c.expect(bad.remainder == 1, "remainder 1");
  c.expect(bad.detail.find("remainder") != std::string::npos, "diagnostic names the remainder");

  // more passing inputs, each with the evaluation at -1
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> qc, nc;
    for (int j = 0; j < 4; ++j) {
      qc.push_back(static_cast<long>(rng() % 3));
      nc.push_back(static_cast<long>(rng() % 3));
    }
    CountingSeries quot(qc), nov(nc);
    auto v = check_inequality(nov + quot * S({1, 1}), nov);
    c.expect(v.holds && v.quotient == quot, "random holding verdict");
    expect_minus_one(c, v, "random");
  }
}

std::pair<Dims, Dims> isotypic_at(const DoubledComplex& d, const Rational& s0) {
  auto t = TwistedComplex::build(d.complex, d.induced);
  auto total = oracle::twisted_cochain_dims(d.complex, d.induced, nullptr, s0);
  Dims inv, sign;
  for (int k = 0; k <= t.top_degree(); ++k) {
    Matrix<Rational> d_in, d_out;
    bool has_in = k >= 1, has_out = k < t.top_degree();
    if (has_in) d_in = specialize(t.differential(k), s0);
    if (has_out) d_out = specialize(t.differential(k + 1), s0);
    auto act = specialize(twisted_action_matrix(d.action, t, 1, k), s0);
    Rational tr = oracle::homology_trace(has_in ? &d_in : nullptr, has_out ? &d_out : nullptr, act);
    Rational dim(static_cast<long>(total[static_cast<std::size_t>(k)]));
    Rational plus = (dim + tr) / 2, minus = (dim - tr) / 2;
    inv.push_back(plus.get_num().get_ui());
    sign.push_back(minus.get_num().get_ui());
  }
  return {inv, sign};
}

std::vector<std::vector<bool>> dropped(const SimplicialComplex& k, const Subcomplex& a) {
  std::vector<std::vector<bool>> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    auto& row = out.emplace_back();
    for (std::size_t i = 0; i < k.count(d); ++i) row.push_back(a.contains(d, i));
  }
  return out;
}

void lemma_against_oracle(Criterion& c, const DoubledComplex& d, const LemmaReport& r, const std::string& tag) {
  auto drop = dropped(d.base, d.boundary);
  for (const auto& s0 : {q(2), q(3, 2), q(5), q(7, 3), q(11, 4)}) {
    const std::string at = tag + " at " + s0.get_str() + ": ";
    auto absolute = oracle::twisted_cochain_dims(d.base, d.theta, nullptr, s0);
    auto relative = oracle::twisted_cochain_dims(d.base, d.theta, nullptr, s0, &drop);
    auto [inv, sign] = isotypic_at(d, s0);
    c.expect(inv == absolute, at + "invariant " + show(inv) + " vs absolute " + show(absolute));
    c.expect(sign == relative, at + "sign " + show(sign) + " vs relative " + show(relative));
    c.expect(inv == r.invariant && sign == r.sign, at + "library parts");
  }
}

void doubling_lemma(Criterion& c) {
  auto interval = fixture::interval();
  auto ends = Subcomplex::from_simplices(interval, {{0}, {1}});
  auto di = build_double(interval, ends, IntegerCocycle::zero(interval));
  c.expect(betti_numbers(di.complex) == Dims{1, 1}, "interval double is a circle");
  auto ri = lemma_check(di);
  c.expect(ri.holds, "interval lemma: " + ri.mismatch);
  c.expect(ri.invariant == betti_numbers(interval), "interval invariant part " + show(ri.invariant));
  c.expect(ri.sign == relative_betti(interval, ends), "interval sign part " + show(ri.sign));
  lemma_against_oracle(c, di, ri, "interval");

  auto tri = fixture::filled_triangle();
  auto dt = build_double(tri, triangle_boundary(tri), IntegerCocycle::zero(tri));
  c.expect(betti_numbers(dt.complex) == Dims{1, 0, 1}, "triangle double is a sphere");
  auto rt = lemma_check(dt);
  c.expect(rt.holds, "triangle lemma: " + rt.mismatch);
  c.expect(rt.invariant == betti_numbers(tri), "triangle invariant part " + show(rt.invariant));
  c.expect(rt.sign == relative_betti(tri, triangle_boundary(tri)), "triangle sign part " + show(rt.sign));
  lemma_against_oracle(c, dt, rt, "triangle");

  // nonzero class on the double: the interval cannot carry one, the annulus does
  const std::size_t n = 3;
  auto ann = fixture::annulus(n);
  auto dw = build_double(ann, annulus_boundary(ann, n), annulus_winding(ann, n));
  bool nonzero = false;
  for (long p : periods(dw.complex, dw.induced).values) nonzero = nonzero || p != 0;
  c.expect(nonzero, "class on the annulus double is nonzero");
  auto rw = lemma_check(dw);
  c.expect(rw.holds, "twisted annulus lemma: " + rw.mismatch);
  lemma_against_oracle(c, dw, rw, "twisted annulus");
}

void boundary_disk(Criterion& c, std::string& note) {
  auto tri = fixture::filled_triangle();
  auto gamma = triangle_boundary(tri);
  std::vector<BoundaryComponent> data{{"min", BoundaryClass::interior, 0, 0, S({1})},
                                      {"rim", BoundaryClass::negative, 0, 1, S({1, 1})}};
  auto r = theorem10_check(tri, gamma, IntegerCocycle::zero(tri), data);
  // interior minimum: lambda^0 * 1; negative circle: lambda^1 * (1 + lambda) in M^- only
  const auto plus = S({1});
  const auto minus = S({1}) + S({0, 1}) * S({1, 1});
  c.expect(r.morse.plus == plus, "M+ = " + r.morse.plus.to_string());
  c.expect(r.morse.minus == minus, "M- = " + r.morse.minus.to_string());
  c.expect(r.betti == Dims{1, 0, 0}, "Novikov numbers " + show(r.betti));
  c.expect(r.plus.holds && nonnegative_integral(r.plus.quotient), "M+ verdict");
  c.expect(r.minus.holds && nonnegative_integral(r.minus.quotient), "M- verdict");
  c.expect(r.minus.quotient == S({0, 1}), "Q- = " + r.minus.quotient.to_string());
  expect_minus_one(c, r.plus, "M+");
  expect_minus_one(c, r.minus, "M-");
  auto x = double_cross_check(build_double(tri, gamma, IntegerCocycle::zero(tri)), data, r);
  c.expect(x.agrees, "double cross-check agrees");
  auto literal = [](const InequalityVerdict& v) {
    return v.holds ? std::string("holds") : "fails (" + (v.failure ? to_string(*v.failure) : std::string("?")) + ")";
  };
  note = "literal N - M: plus " + literal(r.literal_plus) + ", minus " + literal(r.literal_minus);
}

std::vector<long> random_potential(std::mt19937& rng, std::size_t n) {
  std::vector<long> f;
  for (std::size_t v = 0; v < n; ++v) f.push_back(static_cast<long>(rng() % 9) - 4);
  return f;
}

void gauge_and_scaling(Criterion& c) {
  std::mt19937 rng(42);
  for (long n : circle_sizes)
    for (long p : circle_periods) {
      const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": ";
      auto k = fixture::circle(static_cast<std::size_t>(n));
      auto theta = fixture::circle_period(k, p);
      auto base = jump_profile(TwistedComplex::build(k, theta));
      auto base_jumps = base.positive_jumps();

      for (int trial = 0; trial < 3; ++trial) {
        auto moved = theta + coboundary(k, random_potential(rng, k.vertex_count()));
        auto prof = jump_profile(TwistedComplex::build(k, moved));
        c.expect(prof.background() == base.background(), tag + "gauge background");
        auto jumps = prof.positive_jumps();
        bool same = jumps.size() == base_jumps.size();
        for (std::size_t i = 0; same && i < jumps.size(); ++i) same = overlap(jumps[i], base_jumps[i]);
        c.expect(same, tag + "gauge positive jumps");
        for (std::size_t i = 0; i < base.degrees.size(); ++i)
          c.expect(product_of_factors(prof.degrees[i]) == product_of_factors(base.degrees[i]), tag + "gauge locus");
      }

      for (long factor : {2L, 3L, -1L, -2L}) {
        auto prof = jump_profile(TwistedComplex::build(k, theta.scaled(factor)));
        for (std::size_t i = 0; i < base.degrees.size(); ++i) {
          // f(s) -> f(s^k); for k < 0 up to the unit s^deg
          auto expected = product_of_factors(base.degrees[i]).compose_power(static_cast<unsigned>(std::abs(factor)));
          if (factor < 0) expected = reciprocal(expected).monic();
          c.expect(product_of_factors(prof.degrees[i]) == expected,
                   tag + "scaling by " + std::to_string(factor) + ": " + product_of_factors(prof.degrees[i]).to_string());
        }
      }
    }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    std::string title;
    std::function<void(Criterion&, std::string&)> run;
  };
  auto plain = [](void (*f)(Criterion&)) { return [f](Criterion& c, std::string&) { f(c); }; };
  const std::vector<Entry> entries{
      {1, "circle family jump locus", plain(circle_family)},
      {2, "Euler characteristic invariance", plain(euler_invariance)},
      {3, "regular representation identity", plain(regular_identity)},
      {4, "pushforward along the antipodal quotient", plain(pushforward)},
      {5, "Morse inequality checker", plain(morse_checker)},
      {6, "isotypic parts of the double", plain(doubling_lemma)},
      {7, "boundary inequalities on the disk", boundary_disk},
      {8, "gauge and scaling", plain(gauge_and_scaling)},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    std::string note;
    try {
      e.run(c, note);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const bool ok = !c.failed() && c.checks() > 0;
    failed += ok ? 0 : 1;
    std::cout << "criterion " << e.number << " " << (ok ? "PASS" : "FAIL") << ": " << e.title << " ("
              << c.checks() << " checks)";
    if (!note.empty()) std::cout << "; " << note;
    std::cout << "\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << "\n";
  return failed ? 1 : 0;
}
