#include "novikov/roots.hpp"

#include <algorithm>

namespace novikov {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

std::size_t sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Bisects (lo, hi] until each piece isolates one root of the square-free p.
void isolate(const Poly& p, const std::vector<Poly>& sturm, Rational lo, Rational hi, const Rational& width,
             int multiplicity, std::vector<RootInterval>& out) {
  std::size_t n = count_roots_in(sturm, lo, hi);
  if (n == 0) return;
  if (n == 1 && hi - lo <= width) {
    if (p(hi) == 0) lo = hi;
    out.push_back({lo, hi, multiplicity});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(p, sturm, lo, mid, width, multiplicity, out);
  isolate(p, sturm, mid, hi, width, multiplicity, out);
}

}  // namespace

double RootInterval::approx() const { return Rational((lo + hi) / 2).get_d(); }

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Poly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    next = -r;
  }
  return seq;
}

std::size_t count_roots_in(const std::vector<Poly>& sturm, const Rational& a, const Rational& b) {
  if (sturm.empty() || !(a < b)) return 0;
  // V(a) - V(b) counts roots in (a, b] for square-free polynomials; V is
  // right-continuous at a root because p itself is skipped there
  std::size_t va = sign_changes(sturm, a);
  std::size_t vb = sign_changes(sturm, b);
  return va >= vb ? va - vb : 0;
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("root bound of the zero polynomial");
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(k)) / p.leading())));
  return m + 1;
}

PositiveRootReport count_positive_real_roots(const Poly& p, const Rational& width) {
  if (p.is_zero()) throw AlgebraError("root count of the zero polynomial");
  PositiveRootReport report;
  Poly q = p.strip_s_powers();  // a root at 0 is not positive
  if (q.degree() <= 0) return report;
  Rational bound = root_bound(q);
  for (const auto& [f, k] : square_free_decomposition(q)) {
    auto seq = sturm_sequence(f);
    std::size_t n = count_roots_in(seq, Rational(0), bound);
    report.count += n * static_cast<std::size_t>(k);
    isolate(f, seq, Rational(0), bound, width, k, report.intervals);
  }
  std::sort(report.intervals.begin(), report.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return report;
}

std::size_t count_negative_real_roots(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("root count of the zero polynomial");
  Poly q = p.strip_s_powers();
  if (q.degree() <= 0) return 0;
  Poly r = square_free_part(q.reflected());
  auto seq = sturm_sequence(r);
  return count_roots_in(seq, Rational(0), root_bound(r));
}

}  // namespace novikov
