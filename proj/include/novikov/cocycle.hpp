#pragma once

#include <cstddef>
#include <vector>

#include "novikov/complex.hpp"

namespace novikov {

/// Integer 1-cochain: one value per edge of the parent complex, for the
/// edge oriented from its smaller to its larger vertex.
class IntegerCocycle {
 public:
  IntegerCocycle() = default;
  explicit IntegerCocycle(std::vector<long> values) : values_(std::move(values)) {}
  static IntegerCocycle zero(const SimplicialComplex& k) { return IntegerCocycle(std::vector<long>(k.count(1), 0)); }

  struct Entry {
    std::size_t from, to;
    long value;
  };
  /// Values on oriented edges; an edge given as (v, u) with u < v stores the
  /// negated value. Unlisted edges are 0; duplicates and non-edges throw.
  static IntegerCocycle from_oriented(const SimplicialComplex& k, const std::vector<Entry>& entries);

  std::size_t size() const { return values_.size(); }
  long operator[](std::size_t edge) const { return values_.at(edge); }
  const std::vector<long>& values() const { return values_; }
  bool is_zero() const;

  /// theta(u -> v); 0 when u == v. Throws if {u, v} is not an edge.
  long value(const SimplicialComplex& k, std::size_t u, std::size_t v) const;

  IntegerCocycle scaled(long factor) const;
  friend IntegerCocycle operator+(const IntegerCocycle& a, const IntegerCocycle& b);
  friend bool operator==(const IntegerCocycle&, const IntegerCocycle&) = default;

 private:
  std::vector<long> values_;
};

/// {+1, -1} per edge (smaller to larger vertex); inverse orientation carries
/// the same sign.
class SignCocycle {
 public:
  SignCocycle() = default;
  explicit SignCocycle(std::vector<int> signs);
  static SignCocycle trivial(const SimplicialComplex& k) { return SignCocycle(std::vector<int>(k.count(1), 1)); }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t edge) const { return signs_.at(edge); }
  const std::vector<int>& values() const { return signs_; }
  bool is_trivial() const;
  int value(const SimplicialComplex& k, std::size_t u, std::size_t v) const;

  friend bool operator==(const SignCocycle&, const SignCocycle&) = default;

 private:
  std::vector<int> signs_;
};

struct CocycleCheck {
  bool ok = true;
  std::vector<Simplex> violators;  // 2-simplices where the condition fails
};

/// theta(v1 v2) - theta(v0 v2) + theta(v0 v1) = 0 on every 2-simplex.
/// A cochain of the wrong length throws std::invalid_argument.
CocycleCheck verify_cocycle(const SimplicialComplex& k, const IntegerCocycle& theta);
/// Product of the three edge signs is +1 on every 2-simplex.
CocycleCheck verify_cocycle(const SimplicialComplex& k, const SignCocycle& eps);

/// (delta f)(u -> v) = f(v) - f(u).
IntegerCocycle coboundary(const SimplicialComplex& k, const std::vector<long>& f);

/// theta evaluated on an edge chain (coefficients per edge index).
Rational pair(const IntegerCocycle& theta, const std::vector<Rational>& chain);

struct Periods {
  std::vector<long> values;                  // theta on each cycle
  std::vector<std::vector<Rational>> cycles;  // integral, primitive edge chains
};

/// A basis of H_1(K; Q) represented by primitive integral cycles (first
/// nonzero coefficient positive), and theta on each. All values vanish
/// exactly when theta is a coboundary.
Periods periods(const SimplicialComplex& k, const IntegerCocycle& theta);

}  // namespace novikov
