#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/matrix.hpp"
#include "novikov/rational.hpp"

namespace novikov {

/// Strictly increasing vertex indices. The increasing order is the
/// orientation of the simplex.
using Simplex = std::vector<std::size_t>;

/// Sorts the vertices and returns the sign of the sorting permutation
/// (0 when a vertex repeats).
int sort_with_sign(Simplex& s);

/// Finite abstract simplicial complex with labelled vertices. Immutable once
/// built; every face of every simplex is present and every vertex label is a
/// 0-simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closes `simplices` under faces. Indices refer into `labels`; vertex
  /// order inside each simplex does not matter.
  static SimplicialComplex from_simplices(std::vector<std::string> labels, const std::vector<Simplex>& simplices);
  /// Same with labels "0", "1", ...
  static SimplicialComplex from_simplices(std::size_t vertex_count, const std::vector<Simplex>& simplices);

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t count(int k) const;
  std::size_t total_count() const;
  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, std::size_t index) const { return simplices_.at(static_cast<std::size_t>(k)).at(index); }

  /// Looks up a sorted simplex.
  std::optional<std::size_t> find(const Simplex& s) const;
  std::size_t index_of(const Simplex& s) const;
  /// Index of the edge {u, v}, u != v, in either order.
  std::optional<std::size_t> edge(std::size_t u, std::size_t v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> vertex(std::string_view label) const;
  std::string name(const Simplex& s) const;

  /// Rows index (k-1)-simplices, columns k-simplices; the face omitting
  /// vertex j carries sign (-1)^j. Requires 1 <= k <= dimension().
  Matrix<Rational> boundary_matrix(int k) const;

  long euler_characteristic() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// A closed subset of a complex, stored as per-dimension membership flags.
class Subcomplex {
 public:
  Subcomplex() = default;
  static Subcomplex empty(const SimplicialComplex& parent);
  /// The given simplices must exist in `parent` and already be closed under
  /// faces; throws std::invalid_argument naming the first missing face.
  static Subcomplex from_simplices(const SimplicialComplex& parent, const std::vector<Simplex>& simplices);
  /// Smallest subcomplex containing the given (existing) simplices.
  static Subcomplex closure(const SimplicialComplex& parent, const std::vector<Simplex>& simplices);

  bool contains(int k, std::size_t index) const;
  std::size_t count(int k) const;
  bool is_empty() const;
  /// Throws std::invalid_argument unless this was built for `parent`.
  void check_parent(const SimplicialComplex& parent) const;

  /// The subcomplex as a complex of its own, with the parent's vertex
  /// labels. `vertex_map[v]` gives the parent index of new vertex v.
  SimplicialComplex as_complex(const SimplicialComplex& parent, std::vector<std::size_t>* vertex_map = nullptr) const;

 private:
  std::vector<std::vector<bool>> member_;
};

/// b_k = dim ker d_k - rank d_{k+1} over Q, for k = 0..dim.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);

/// Dimensions of H^*(K, A; Q) via the quotient chain complex C(K)/C(A).
std::vector<std::size_t> relative_betti(const SimplicialComplex& k, const Subcomplex& a);

}  // namespace novikov
