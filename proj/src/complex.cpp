#include "novikov/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "novikov/linalg.hpp"

namespace novikov {

int sort_with_sign(Simplex& s) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] == s[i]) return 0;
  return sign;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> labels,
                                                    const std::vector<Simplex>& simplices) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label '" + l + "'");

  std::vector<std::set<Simplex>> by_dim;
  auto add = [&](const Simplex& s) {
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].insert(s);
  };
  for (std::size_t v = 0; v < labels.size(); ++v) add({v});
  for (Simplex s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (sort_with_sign(s) == 0) throw std::invalid_argument("simplex with a repeated vertex");
    if (s.back() >= labels.size()) throw std::invalid_argument("simplex refers to an unknown vertex");
    // every nonempty subset of the vertex set
    const std::size_t n = s.size();
    if (n > 20) throw std::invalid_argument("simplex dimension too large");
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) face.push_back(s[i]);
      add(face);
    }
  }

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (auto& layer : by_dim) {
    k.simplices_.emplace_back(layer.begin(), layer.end());
    auto& idx = k.index_.emplace_back();
    for (std::size_t i = 0; i < k.simplices_.back().size(); ++i) idx.emplace(k.simplices_.back()[i], i);
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, const std::vector<Simplex>& simplices) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  return from_simplices(std::move(labels), simplices);
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return simplices_[static_cast<std::size_t>(k)].size();
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& layer : simplices_) n += layer.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return simplices_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw std::invalid_argument("no such simplex " + name(s));
  return *i;
}

std::optional<std::size_t> SimplicialComplex::edge(std::size_t u, std::size_t v) const {
  if (u == v) return std::nullopt;
  return find(u < v ? Simplex{u, v} : Simplex{v, u});
}

std::optional<std::size_t> SimplicialComplex::vertex(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

std::string SimplicialComplex::name(const Simplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] < labels_.size() ? labels_[s[i]] : "?" + std::to_string(s[i]);
  }
  return out + "]";
}

Matrix<Rational> SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > dimension()) {
    throw std::out_of_range("boundary_matrix: dimension " + std::to_string(k) + " outside 1.." +
                            std::to_string(dimension()));
  }
  const auto& cols = simplices(k);
  Matrix<Rational> d(count(k - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      Simplex face = cols[c];
      face.erase(face.begin() + static_cast<long>(j));
      d(index_of(face), c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

// ---------------------------------------------------------------------------

Subcomplex Subcomplex::empty(const SimplicialComplex& parent) {
  Subcomplex a;
  for (int k = 0; k <= parent.dimension(); ++k) a.member_.emplace_back(parent.count(k), false);
  return a;
}

Subcomplex Subcomplex::from_simplices(const SimplicialComplex& parent, const std::vector<Simplex>& simplices) {
  Subcomplex a = empty(parent);
  std::vector<Simplex> sorted;
  for (Simplex s : simplices) {
    sort_with_sign(s);
    auto i = parent.find(s);
    if (!i) throw std::invalid_argument("subcomplex simplex " + parent.name(s) + " is not in the complex");
    a.member_[s.size() - 1][*i] = true;
    sorted.push_back(std::move(s));
  }
  for (const auto& s : sorted) {
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(j));
      if (!a.member_[face.size() - 1][parent.index_of(face)]) {
        throw std::invalid_argument("not a subcomplex: face " + parent.name(face) + " of " + parent.name(s) +
                                    " is missing");
      }
    }
  }
  return a;
}

Subcomplex Subcomplex::closure(const SimplicialComplex& parent, const std::vector<Simplex>& simplices) {
  Subcomplex a = empty(parent);
  for (Simplex s : simplices) {
    sort_with_sign(s);
    if (!parent.find(s)) throw std::invalid_argument("subcomplex simplex " + parent.name(s) + " is not in the complex");
    const std::size_t n = s.size();
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) face.push_back(s[i]);
      a.member_[face.size() - 1][parent.index_of(face)] = true;
    }
  }
  return a;
}

bool Subcomplex::contains(int k, std::size_t index) const {
  if (k < 0 || static_cast<std::size_t>(k) >= member_.size()) return false;
  return member_[static_cast<std::size_t>(k)].at(index);
}

std::size_t Subcomplex::count(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= member_.size()) return 0;
  const auto& m = member_[static_cast<std::size_t>(k)];
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
}

bool Subcomplex::is_empty() const { return count(0) == 0; }

void Subcomplex::check_parent(const SimplicialComplex& parent) const {
  bool ok = member_.size() == static_cast<std::size_t>(parent.dimension() + 1);
  for (std::size_t k = 0; ok && k < member_.size(); ++k) ok = member_[k].size() == parent.count(static_cast<int>(k));
  if (!ok) throw std::invalid_argument("subcomplex does not belong to this complex");
}

SimplicialComplex Subcomplex::as_complex(const SimplicialComplex& parent, std::vector<std::size_t>* vertex_map) const {
  check_parent(parent);
  std::vector<std::size_t> old_of_new, new_of_old(parent.vertex_count(), 0);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < parent.vertex_count(); ++v) {
    if (!contains(0, parent.index_of({v}))) continue;
    new_of_old[v] = old_of_new.size();
    old_of_new.push_back(v);
    labels.push_back(parent.label(v));
  }
  std::vector<Simplex> simplices;
  for (int k = 1; k <= parent.dimension(); ++k)
    for (std::size_t i = 0; i < parent.count(k); ++i) {
      if (!contains(k, i)) continue;
      Simplex s;
      for (auto v : parent.simplex(k, i)) s.push_back(new_of_old[v]);
      simplices.push_back(std::move(s));
    }
  if (vertex_map) *vertex_map = old_of_new;
  return SimplicialComplex::from_simplices(std::move(labels), simplices);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> homology_dims(const std::vector<std::size_t>& chain_counts,
                                       const std::vector<std::size_t>& ranks) {
  // ranks[k] = rank of d_k : C_k -> C_{k-1}; ranks[0] = 0
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < chain_counts.size(); ++k) {
    std::size_t out = ranks[k];
    std::size_t in = k + 1 < ranks.size() ? ranks[k + 1] : 0;
    dims.push_back(chain_counts[k] - out - in);
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k) {
  std::vector<std::size_t> counts, ranks{0};
  for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
  for (int d = 1; d <= k.dimension(); ++d) ranks.push_back(rank(k.boundary_matrix(d)));
  return homology_dims(counts, ranks);
}

std::vector<std::size_t> relative_betti(const SimplicialComplex& k, const Subcomplex& a) {
  a.check_parent(k);
  std::vector<std::vector<std::size_t>> kept(static_cast<std::size_t>(k.dimension() + 1));
  std::vector<std::size_t> counts, ranks{0};
  for (int d = 0; d <= k.dimension(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (!a.contains(d, i)) kept[static_cast<std::size_t>(d)].push_back(i);
    counts.push_back(kept[static_cast<std::size_t>(d)].size());
  }
  for (int d = 1; d <= k.dimension(); ++d) {
    auto m = k.boundary_matrix(d).submatrix(kept[static_cast<std::size_t>(d - 1)], kept[static_cast<std::size_t>(d)]);
    ranks.push_back(rank(m));
  }
  return homology_dims(counts, ranks);
}

}  // namespace novikov
