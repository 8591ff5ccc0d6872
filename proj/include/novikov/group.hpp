#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/cyclotomic.hpp"

namespace novikov {

/// Finite group given by labelled elements and a multiplication table,
/// table[a][b] = a * b.
class FiniteGroup {
 public:
  /// The trivial group {e}.
  FiniteGroup() = default;

  /// Validates closure, identity, inverses and associativity; throws
  /// std::invalid_argument naming the failure.
  static FiniteGroup from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);
  static FiniteGroup trivial();
  /// Z_n with elements e, g, g2, ..., g(n-1).
  static FiniteGroup cyclic(std::size_t n);
  /// Z_2 x Z_2 with elements e, a, b, ab.
  static FiniteGroup klein();
  /// S_3 with elements e, r, r2, s, sr, sr2 (r of order 3, s a reflection).
  static FiniteGroup symmetric3();

  std::size_t size() const { return labels_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t order(std::size_t a) const;
  /// Least common multiple of the element orders.
  unsigned exponent() const { return exponent_; }

  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> element(std::string_view label) const;

  /// Conjugacy classes, each sorted, ordered by smallest element.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t a) const { return class_of_.at(a); }

 private:
  std::vector<std::string> labels_{"e"};
  std::vector<std::vector<std::size_t>> table_{{0}};
  std::vector<std::size_t> inverse_{0};
  std::size_t identity_ = 0;
  unsigned exponent_ = 1;
  std::vector<std::vector<std::size_t>> classes_{{0}};
  std::vector<std::size_t> class_of_{0};
};

/// Complete table of irreducible complex characters, values in Q(zeta_n)
/// with n the group exponent.
class CharacterTable {
 public:
  struct Irreducible {
    std::string name;
    std::vector<CyclotomicNumber> values;  // one per conjugacy class
  };

  CharacterTable() = default;
  /// Values are indexed by the group's classes(). Checks class functions,
  /// completeness, row orthogonality and sum of squared degrees = |G|.
  static CharacterTable make(const FiniteGroup& g, std::vector<Irreducible> irreducibles);

  std::size_t count() const { return irreducibles_.size(); }
  const Irreducible& irreducible(std::size_t i) const { return irreducibles_.at(i); }
  const std::vector<Irreducible>& irreducibles() const { return irreducibles_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// chi_i(1).
  long dimension(std::size_t i) const;
  const CyclotomicNumber& value(std::size_t i, std::size_t element) const;

 private:
  std::vector<Irreducible> irreducibles_;
  std::vector<std::size_t> class_of_;
  std::size_t identity_class_ = 0;
};

struct GroupWithCharacters {
  FiniteGroup group;
  CharacterTable characters;
};

/// Bundled groups: "trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3". Throws
/// std::invalid_argument for any other name.
GroupWithCharacters builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

}  // namespace novikov
