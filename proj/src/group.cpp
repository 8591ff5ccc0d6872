#include "novikov/group.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace novikov {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("group has no elements");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw std::invalid_argument("duplicate group element label");
  }
  if (table.size() != n) throw std::invalid_argument("multiplication table has the wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("multiplication table row has the wrong length");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("multiplication table entry out of range");
  }

  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);

  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
    if (ok) id = e;
  }
  if (!id) throw std::invalid_argument("multiplication table has no identity");
  g.identity_ = *id;

  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) g.inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (g.inverse_[a] == n) throw std::invalid_argument("element '" + g.labels_[a] + "' has no inverse");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          throw std::invalid_argument("multiplication is not associative at (" + g.labels_[a] + ", " + g.labels_[b] +
                                      ", " + g.labels_[c] + ")");
        }

  g.exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) g.exponent_ = std::lcm(g.exponent_, static_cast<unsigned>(g.order(a)));

  g.classes_.clear();
  g.class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.class_of_[a] != n) continue;
    std::set<std::size_t> cls;
    for (std::size_t x = 0; x < n; ++x) cls.insert(g.table_[g.table_[x][a]][g.inverse_[x]]);
    for (auto c : cls) g.class_of_[c] = g.classes_.size();
    g.classes_.emplace_back(cls.begin(), cls.end());
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> labels{"e"};
  if (n > 1) labels.push_back("g");
  for (std::size_t k = 2; k < n; ++k) labels.push_back("g" + std::to_string(k));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return from_table(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::klein() {
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return from_table({"e", "a", "b", "ab"}, std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // element index 3*f + k stands for s^f r^k
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      std::size_t f1 = x / 3, k1 = x % 3, f2 = y / 3, k2 = y % 3;
      // r^k s = s r^-k
      std::size_t k = ((f2 ? 3 - k1 : k1) + k2) % 3;
      table[x][y] = 3 * ((f1 + f2) % 2) + k;
    }
  return from_table({"e", "r", "r2", "s", "sr", "sr2"}, std::move(table));
}

std::size_t FiniteGroup::order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

std::optional<std::size_t> FiniteGroup::element(std::string_view label) const {
  for (std::size_t a = 0; a < labels_.size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

CharacterTable CharacterTable::make(const FiniteGroup& g, std::vector<Irreducible> irreducibles) {
  const auto& classes = g.classes();
  const unsigned order = g.exponent();
  if (irreducibles.size() != classes.size()) {
    throw std::invalid_argument("character table has " + std::to_string(irreducibles.size()) +
                                " irreducibles but the group has " + std::to_string(classes.size()) + " classes");
  }
  std::set<std::string> names;
  for (auto& chi : irreducibles) {
    if (!names.insert(chi.name).second) throw std::invalid_argument("duplicate character name '" + chi.name + "'");
    if (chi.values.size() != classes.size()) {
      throw std::invalid_argument("character '" + chi.name + "' needs one value per conjugacy class");
    }
    for (auto& v : chi.values) {
      if (v.order() == order) continue;
      if (!v.is_rational()) {
        throw std::invalid_argument("character '" + chi.name + "' has a value outside Q(zeta_" + std::to_string(order) +
                                    ")");
      }
      v = CyclotomicNumber(order, v.rational_value());
    }
  }

  const Rational group_order(static_cast<long>(g.size()));
  long squares = 0;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    const auto& deg = irreducibles[i].values[g.class_of(g.identity())];
    if (!deg.is_rational() || !is_integer(deg.rational_value()) || deg.rational_value() <= 0) {
      throw std::invalid_argument("character '" + irreducibles[i].name + "' has a non-positive-integer degree");
    }
    squares += deg.rational_value().get_num().get_si() * deg.rational_value().get_num().get_si();
    for (std::size_t j = 0; j < irreducibles.size(); ++j) {
      CyclotomicNumber sum(order, Rational(0));
      for (std::size_t c = 0; c < classes.size(); ++c) {
        sum = sum + irreducibles[i].values[c] * irreducibles[j].values[c].conj() *
                        Rational(static_cast<long>(classes[c].size()));
      }
      CyclotomicNumber expected(order, Rational(i == j ? group_order : Rational(0)));
      if (!(sum == expected)) {
        throw std::invalid_argument("characters '" + irreducibles[i].name + "' and '" + irreducibles[j].name +
                                    "' violate orthogonality");
      }
    }
  }
  if (squares != static_cast<long>(g.size())) {
    throw std::invalid_argument("squared character degrees do not sum to the group order");
  }

  CharacterTable t;
  t.irreducibles_ = std::move(irreducibles);
  for (std::size_t a = 0; a < g.size(); ++a) t.class_of_.push_back(g.class_of(a));
  t.identity_class_ = g.class_of(g.identity());
  return t;
}

std::optional<std::size_t> CharacterTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (irreducibles_[i].name == name) return i;
  return std::nullopt;
}

long CharacterTable::dimension(std::size_t i) const {
  return irreducibles_.at(i).values.at(identity_class_).rational_value().get_num().get_si();
}

const CyclotomicNumber& CharacterTable::value(std::size_t i, std::size_t element) const {
  return irreducibles_.at(i).values.at(class_of_.at(element));
}

// ---------------------------------------------------------------------------

namespace {

CharacterTable cyclic_characters(const FiniteGroup& g, std::size_t n) {
  std::vector<CharacterTable::Irreducible> irr;
  for (std::size_t k = 0; k < n; ++k) {
    CharacterTable::Irreducible chi;
    if (k == 0) {
      chi.name = "triv";
    } else if (n == 2) {
      chi.name = "sign";
    } else {
      chi.name = "chi" + std::to_string(k);
    }
    // classes of an abelian group are singletons in element order
    for (std::size_t j = 0; j < n; ++j)
      chi.values.push_back(CyclotomicNumber::root_of_unity(static_cast<unsigned>(n), static_cast<long>(j * k % n)));
    irr.push_back(std::move(chi));
  }
  return CharacterTable::make(g, std::move(irr));
}

CyclotomicNumber rat(unsigned order, long v) { return CyclotomicNumber(order, Rational(v)); }

}  // namespace

GroupWithCharacters builtin_group(std::string_view name) {
  if (name == "trivial") {
    auto g = FiniteGroup::trivial();
    return {g, CharacterTable::make(g, {{"triv", {rat(1, 1)}}})};
  }
  if (name == "Z2" || name == "Z3" || name == "Z4") {
    std::size_t n = static_cast<std::size_t>(name[1] - '0');
    auto g = FiniteGroup::cyclic(n);
    return {g, cyclic_characters(g, n)};
  }
  if (name == "Z2xZ2") {
    auto g = FiniteGroup::klein();
    // chi_x is trivial exactly on {e, x}
    std::vector<CharacterTable::Irreducible> irr{
        {"triv", {rat(2, 1), rat(2, 1), rat(2, 1), rat(2, 1)}},
        {"chi_a", {rat(2, 1), rat(2, 1), rat(2, -1), rat(2, -1)}},
        {"chi_b", {rat(2, 1), rat(2, -1), rat(2, 1), rat(2, -1)}},
        {"chi_ab", {rat(2, 1), rat(2, -1), rat(2, -1), rat(2, 1)}},
    };
    return {g, CharacterTable::make(g, std::move(irr))};
  }
  if (name == "S3") {
    auto g = FiniteGroup::symmetric3();
    // classes: {e}, {r, r2}, {s, sr, sr2}
    std::vector<CharacterTable::Irreducible> irr{
        {"triv", {rat(6, 1), rat(6, 1), rat(6, 1)}},
        {"sign", {rat(6, 1), rat(6, 1), rat(6, -1)}},
        {"std", {rat(6, 2), rat(6, -1), rat(6, 0)}},
    };
    return {g, CharacterTable::make(g, std::move(irr))};
  }
  throw std::invalid_argument("unknown builtin group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_group_names() { return {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3"}; }

}  // namespace novikov
