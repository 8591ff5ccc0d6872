#include "novikov/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "novikov/roots.hpp"
#include "novikov/twisted.hpp"

namespace novikov {

namespace {

std::string join_errors(const std::vector<FieldError>& errors) {
  std::string s;
  for (const auto& e : errors) {
    if (!s.empty()) s += "\n";
    s += e.path + ": " + e.reason;
  }
  return s;
}

}  // namespace

ProblemError::ProblemError(std::vector<FieldError> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

CountingSeries CriticalRecord::poincare_for(const std::string& rep) const {
  if (!per_rep) return component.poincare;
  for (const auto& [name, series] : *per_rep)
    if (name == rep) return series;
  return {};
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
 public:
  explicit Parser(const Json& doc) : doc_(doc) {}

  ProblemDocument run() {
    if (!doc_.is_object()) {
      fail("$", "expected an object");
      throw ProblemError(errors_);
    }
    std::set<std::string> known{"vertices", "simplices", "cocycle", "sign_cocycle", "boundary", "group",
                                "characters", "action", "critical", "boundary_critical", "name", "description"};
    for (const auto& [key, value] : doc_.items())
      if (!known.count(key)) fail(key, "unknown field");

    parse_complex();
    parse_cocycles();
    parse_boundary();
    parse_group();
    parse_critical();
    parse_boundary_critical();
    if (!errors_.empty()) throw ProblemError(errors_);
    return std::move(out_);
  }

 private:
  void fail(std::string path, std::string reason) { errors_.push_back({std::move(path), std::move(reason)}); }

  static std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

  std::optional<std::string> label_of(const Json& j) const {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long>());
    return std::nullopt;
  }

  std::optional<std::size_t> vertex_ref(const Json& j, const std::string& path) {
    auto l = label_of(j);
    if (!l) {
      fail(path, "expected a vertex label");
      return std::nullopt;
    }
    auto it = vertex_.find(*l);
    if (it == vertex_.end()) {
      fail(path, "unknown vertex '" + *l + "'");
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Simplex> simplex_ref(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
      fail(path, "expected a nonempty list of vertex labels");
      return std::nullopt;
    }
    Simplex s;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = vertex_ref(j[i], at(path, i));
      if (v) s.push_back(*v);
      ok = ok && v;
    }
    if (!ok) return std::nullopt;
    if (sort_with_sign(s) == 0) {
      fail(path, "repeated vertex");
      return std::nullopt;
    }
    return s;
  }

  std::optional<CountingSeries> series_ref(const Json& j, const std::string& path) {
    if (!j.is_array()) {
      fail(path, "expected a list of nonnegative integer coefficients");
      return std::nullopt;
    }
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number_unsigned()) {
        fail(at(path, i), "expected a nonnegative integer");
        return std::nullopt;
      }
      c.emplace_back(j[i].get<unsigned long>());
    }
    return CountingSeries(std::move(c));
  }

  std::optional<std::size_t> uint_ref(const Json& obj, const std::string& key, const std::string& path,
                                      std::optional<std::size_t> fallback = std::nullopt) {
    if (!obj.contains(key)) {
      if (!fallback) fail(path + "." + key, "required");
      return fallback;
    }
    if (!obj[key].is_number_unsigned()) {
      fail(path + "." + key, "expected a nonnegative integer");
      return std::nullopt;
    }
    return obj[key].get<std::size_t>();
  }

  std::string edge_name(std::size_t u, std::size_t v) const { return out_.complex.name({std::min(u, v), std::max(u, v)}); }

  void parse_complex() {
    std::vector<std::string> labels;
    if (!doc_.contains("vertices")) {
      fail("vertices", "required");
    } else if (doc_["vertices"].is_number_unsigned()) {
      for (std::size_t v = 0; v < doc_["vertices"].get<std::size_t>(); ++v) labels.push_back(std::to_string(v));
    } else if (doc_["vertices"].is_array()) {
      const auto& vs = doc_["vertices"];
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto l = label_of(vs[i]);
        if (!l) {
          fail(at("vertices", i), "expected a label");
        } else if (!vertex_.emplace(*l, 0).second) {
          fail(at("vertices", i), "duplicate vertex '" + *l + "'");
        } else {
          labels.push_back(*l);
        }
      }
    } else {
      fail("vertices", "expected a list of labels or a vertex count");
    }
    vertex_.clear();
    for (std::size_t v = 0; v < labels.size(); ++v) vertex_[labels[v]] = v;

    std::vector<Simplex> simplices;
    if (doc_.contains("simplices")) {
      const auto& ss = doc_["simplices"];
      if (!ss.is_array()) {
        fail("simplices", "expected a list of simplices");
      } else {
        for (std::size_t i = 0; i < ss.size(); ++i)
          if (auto s = simplex_ref(ss[i], at("simplices", i))) simplices.push_back(*s);
      }
    }
    out_.complex = SimplicialComplex::from_simplices(std::move(labels), simplices);
  }

  // [from, to, value] triples; returns per-edge values or nullopt
  template <class Accept>
  std::optional<std::vector<long>> edge_values(const std::string& key, long fallback, Accept accept,
                                               const std::string& expected) {
    const auto& K = out_.complex;
    std::vector<long> values(K.count(1), fallback);
    const auto& list = doc_[key];
    if (!list.is_array()) {
      fail(key, "expected a list of [from, to, value] triples");
      return std::nullopt;
    }
    std::set<std::size_t> seen;
    bool ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto path = at(key, i);
      const auto& t = list[i];
      if (!t.is_array() || t.size() != 3 || !t[2].is_number_integer()) {
        fail(path, "expected [from, to, " + expected + "]");
        ok = false;
        continue;
      }
      auto u = vertex_ref(t[0], at(path, 0));
      auto v = vertex_ref(t[1], at(path, 1));
      if (!u || !v) {
        ok = false;
        continue;
      }
      auto e = *u == *v ? std::nullopt : K.edge(*u, *v);
      if (!e) {
        fail(path, "[" + K.label(*u) + "," + K.label(*v) + "] is not an edge");
        ok = false;
        continue;
      }
      if (!seen.insert(*e).second) {
        fail(path, "edge " + edge_name(*u, *v) + " listed twice");
        ok = false;
        continue;
      }
      long value = t[2].get<long>();
      if (!accept(value)) {
        fail(at(path, 2), "expected " + expected);
        ok = false;
        continue;
      }
      values[*e] = *u < *v ? value : (fallback == 0 ? -value : value);
    }
    if (!ok) return std::nullopt;
    return values;
  }

  void parse_cocycles() {
    const auto& K = out_.complex;
    out_.cocycle = IntegerCocycle::zero(K);
    if (doc_.contains("cocycle")) {
      if (auto v = edge_values("cocycle", 0, [](long) { return true; }, "an integer")) {
        out_.cocycle = IntegerCocycle(std::move(*v));
        for (const auto& s : verify_cocycle(K, out_.cocycle).violators)
          fail("cocycle", "not closed on " + K.name(s));
      }
    }
    if (doc_.contains("sign_cocycle")) {
      if (auto v = edge_values("sign_cocycle", 1, [](long x) { return x == 1 || x == -1; }, "+1 or -1")) {
        SignCocycle eps(std::vector<int>(v->begin(), v->end()));
        auto check = verify_cocycle(K, eps);
        for (const auto& s : check.violators) fail("sign_cocycle", "not closed on " + K.name(s));
        if (check.ok && !eps.is_trivial()) out_.sign_cocycle = std::move(eps);
      }
    }
  }

  void parse_boundary() {
    if (!doc_.contains("boundary")) return;
    const auto& list = doc_["boundary"];
    if (!list.is_array()) {
      fail("boundary", "expected a list of simplices");
      return;
    }
    std::vector<Simplex> simplices;
    bool ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto s = simplex_ref(list[i], at("boundary", i));
      if (s && !out_.complex.find(*s)) {
        fail(at("boundary", i), out_.complex.name(*s) + " is not a simplex of the complex");
        s.reset();
      }
      if (s) simplices.push_back(*s);
      ok = ok && s;
    }
    if (ok) out_.boundary = Subcomplex::closure(out_.complex, simplices);
  }

  std::optional<CyclotomicNumber> character_value(const Json& j, unsigned order, const std::string& path) {
    try {
      if (j.is_number_integer()) return CyclotomicNumber(order, Rational(j.get<long>()));
      if (j.is_string()) return CyclotomicNumber(order, parse_rational(j.get<std::string>()));
      if (j.is_object() && j.contains("zeta") && j["zeta"].is_array()) {
        std::vector<Rational> c;
        for (const auto& x : j["zeta"]) {
          if (x.is_number_integer()) {
            c.emplace_back(x.get<long>());
          } else if (x.is_string()) {
            c.push_back(parse_rational(x.get<std::string>()));
          } else {
            throw std::invalid_argument("bad coefficient");
          }
        }
        return CyclotomicNumber(order, c);
      }
    } catch (const std::invalid_argument&) {
    }
    fail(path, "expected an integer, a rational string or {\"zeta\": [coefficients]}");
    return std::nullopt;
  }

  void parse_group() {
    const bool has_group = doc_.contains("group");
    if (!has_group) {
      if (doc_.contains("characters")) fail("characters", "requires group");
      if (doc_.contains("action")) fail("action", "requires group");
      return;
    }
    const auto& g = doc_["group"];
    FiniteGroup group;
    std::optional<CharacterTable> chars;
    if (g.is_object() && g.contains("builtin")) {
      if (!g["builtin"].is_string()) {
        fail("group.builtin", "expected a group name");
        return;
      }
      try {
        auto b = builtin_group(g["builtin"].get<std::string>());
        group = b.group;
        chars = b.characters;
      } catch (const std::invalid_argument& e) {
        fail("group.builtin", e.what());
        return;
      }
    } else if (g.is_object() && g.contains("elements") && g.contains("table")) {
      std::vector<std::string> labels;
      std::map<std::string, std::size_t> index;
      if (!g["elements"].is_array()) {
        fail("group.elements", "expected a list of labels");
        return;
      }
      for (std::size_t i = 0; i < g["elements"].size(); ++i) {
        const auto& x = g["elements"][i];
        if (!x.is_string()) {
          fail(at("group.elements", i), "expected a label");
          return;
        }
        index[x.get<std::string>()] = labels.size();
        labels.push_back(x.get<std::string>());
      }
      std::vector<std::vector<std::size_t>> table;
      const auto& t = g["table"];
      bool ok = t.is_array();
      if (!ok) fail("group.table", "expected a square table of element labels");
      for (std::size_t r = 0; ok && r < t.size(); ++r) {
        auto& row = table.emplace_back();
        if (!t[r].is_array()) {
          fail(at("group.table", r), "expected a row of element labels");
          ok = false;
          break;
        }
        for (std::size_t c = 0; c < t[r].size(); ++c) {
          const auto& x = t[r][c];
          auto it = x.is_string() ? index.find(x.get<std::string>()) : index.end();
          if (it == index.end()) {
            fail(at(at("group.table", r), c), "unknown element");
            ok = false;
            continue;
          }
          row.push_back(it->second);
        }
      }
      if (!ok) return;
      try {
        group = FiniteGroup::from_table(std::move(labels), std::move(table));
      } catch (const std::invalid_argument& e) {
        fail("group", e.what());
        return;
      }
    } else {
      fail("group", "expected {\"builtin\": name} or {\"elements\": [...], \"table\": [[...]]}");
      return;
    }

    if (doc_.contains("characters")) {
      const auto& cs = doc_["characters"];
      std::vector<CharacterTable::Irreducible> irr;
      bool ok = cs.is_array();
      if (!ok) fail("characters", "expected a list of {name, values}");
      for (std::size_t i = 0; ok && i < cs.size(); ++i) {
        const auto path = at("characters", i);
        const auto& c = cs[i];
        if (!c.is_object() || !c.contains("name") || !c["name"].is_string() || !c.contains("values") ||
            !c["values"].is_array() || c["values"].size() != group.size()) {
          fail(path, "expected {\"name\": string, \"values\": one value per group element}");
          ok = false;
          continue;
        }
        std::vector<CyclotomicNumber> per_element;
        for (std::size_t e = 0; e < group.size(); ++e) {
          auto v = character_value(c["values"][e], group.exponent(), at(path + ".values", e));
          if (!v) {
            ok = false;
            break;
          }
          per_element.push_back(*v);
        }
        if (!ok) continue;
        CharacterTable::Irreducible chi{c["name"].get<std::string>(), {}};
        for (const auto& cls : group.classes()) {
          for (auto e : cls)
            if (!(per_element[e] == per_element[cls.front()])) {
              fail(path, "not constant on the class of '" + group.label(cls.front()) + "'");
              ok = false;
            }
          chi.values.push_back(per_element[cls.front()]);
        }
        irr.push_back(std::move(chi));
      }
      if (ok) {
        try {
          chars = CharacterTable::make(group, std::move(irr));
        } catch (const std::invalid_argument& e) {
          fail("characters", e.what());
          return;
        }
      }
    } else if (!chars) {
      fail("characters", "required for a group given by a table");
    }
    if (!chars) return;

    const auto& K = out_.complex;
    std::vector<std::vector<std::size_t>> maps;
    for (std::size_t e = 0; e < group.size(); ++e) {
      std::vector<std::size_t> id(K.vertex_count());
      for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
      maps.push_back(std::move(id));
    }
    if (doc_.contains("action")) {
      const auto& a = doc_["action"];
      if (!a.is_object()) {
        fail("action", "expected an object mapping elements to vertex images");
        return;
      }
      bool ok = true;
      for (const auto& [key, images] : a.items()) {
        const auto path = "action." + key;
        auto e = group.element(key);
        if (!e) {
          fail(path, "unknown group element");
          ok = false;
          continue;
        }
        if (!images.is_array() || images.size() != K.vertex_count()) {
          fail(path, "expected one image per vertex, in vertex order");
          ok = false;
          continue;
        }
        for (std::size_t v = 0; v < images.size(); ++v) {
          auto w = vertex_ref(images[v], at(path, v));
          if (w) {
            maps[*e][v] = *w;
          } else {
            ok = false;
          }
        }
      }
      if (!ok) return;
    } else if (group.size() > 1) {
      fail("action", "required with a nontrivial group");
      return;
    }
    GroupAction action;
    try {
      action = GroupAction::from_vertex_maps(K, group, std::move(maps));
    } catch (const std::invalid_argument& e) {
      fail("action", e.what());
      return;
    }
    for (const auto& v : verify_invariance(action, out_.cocycle).violators) {
      fail("cocycle", "not invariant under '" + group.label(v.element) + "' on " + K.name(v.edge));
    }
    if (out_.sign_cocycle)
      for (const auto& v : verify_invariance(action, *out_.sign_cocycle).violators) {
        fail("sign_cocycle", "not invariant under '" + group.label(v.element) + "' on " + K.name(v.edge));
      }
    if (out_.boundary) {
      try {
        action.check_preserves(*out_.boundary);
      } catch (const std::invalid_argument& e) {
        fail("boundary", e.what());
      }
    }
    out_.group = GroupData{group, *chars, action};
  }

  void parse_critical() {
    if (!doc_.contains("critical")) return;
    const auto& list = doc_["critical"];
    if (!list.is_array()) {
      fail("critical", "expected a list of component records");
      return;
    }
    const std::size_t order = out_.group ? out_.group->group.size() : 1;
    std::vector<CriticalRecord> records;
    std::set<std::string> ids;
    bool ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto path = at("critical", i);
      const auto& c = list[i];
      if (!c.is_object()) {
        fail(path, "expected an object");
        ok = false;
        continue;
      }
      CriticalRecord r;
      if (!c.contains("id") || !c["id"].is_string()) {
        fail(path + ".id", "required string");
        ok = false;
      } else {
        r.component.id = c["id"].get<std::string>();
        if (!ids.insert(r.component.id).second) {
          fail(path + ".id", "duplicate id '" + r.component.id + "'");
          ok = false;
        }
      }
      auto index = uint_ref(c, "index", path);
      auto stab = uint_ref(c, "stabilizer_index", path, 1);
      if (!index || !stab) {
        ok = false;
        continue;
      }
      r.component.index = *index;
      r.component.stabilizer_index = *stab;
      if (*stab == 0 || order % *stab != 0) {
        fail(path + ".stabilizer_index", "must divide the group order " + std::to_string(order));
        ok = false;
      }
      if (c.contains("orbit")) {
        if (c["orbit"].is_string()) {
          r.component.orbit = c["orbit"].get<std::string>();
        } else {
          fail(path + ".orbit", "expected a string");
          ok = false;
        }
      }
      if (!c.contains("poincare")) {
        fail(path + ".poincare", "required");
        ok = false;
      } else if (c["poincare"].is_object()) {
        if (!out_.group) {
          fail(path + ".poincare", "per-representation series require a group");
          ok = false;
          continue;
        }
        r.per_rep.emplace();
        for (const auto& [rep, series] : c["poincare"].items()) {
          if (!out_.group->characters.find(rep)) {
            fail(path + ".poincare." + rep, "unknown irreducible");
            ok = false;
            continue;
          }
          if (auto s = series_ref(series, path + ".poincare." + rep)) {
            r.per_rep->emplace_back(rep, *s);
          } else {
            ok = false;
          }
        }
      } else if (auto s = series_ref(c["poincare"], path + ".poincare")) {
        r.component.poincare = *s;
      } else {
        ok = false;
      }
      records.push_back(std::move(r));
    }
    if (ok) out_.critical = std::move(records);
  }

  void parse_boundary_critical() {
    if (!doc_.contains("boundary_critical")) return;
    if (!doc_.contains("boundary")) fail("boundary_critical", "requires boundary");
    const auto& list = doc_["boundary_critical"];
    if (!list.is_array()) {
      fail("boundary_critical", "expected a list of component records");
      return;
    }
    std::vector<BoundaryComponent> data;
    std::set<std::string> ids;
    bool ok = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto path = at("boundary_critical", i);
      const auto& c = list[i];
      if (!c.is_object()) {
        fail(path, "expected an object");
        ok = false;
        continue;
      }
      BoundaryComponent z;
      if (!c.contains("id") || !c["id"].is_string()) {
        fail(path + ".id", "required string");
        ok = false;
      } else {
        z.id = c["id"].get<std::string>();
        if (!ids.insert(z.id).second) {
          fail(path + ".id", "duplicate id '" + z.id + "'");
          ok = false;
        }
      }
      if (!c.contains("class") || !c["class"].is_string()) {
        fail(path + ".class", "required: interior, positive, negative or boundary");
        ok = false;
      } else {
        try {
          z.cls = parse_boundary_class(c["class"].get<std::string>());
        } catch (const std::invalid_argument& e) {
          fail(path + ".class", e.what());
          ok = false;
        }
      }
      auto plus = uint_ref(c, "ind_plus", path);
      auto minus = uint_ref(c, "ind_minus", path);
      if (!plus || !minus) {
        ok = false;
        continue;
      }
      z.ind_plus = *plus;
      z.ind_minus = *minus;
      if (!c.contains("poincare")) {
        fail(path + ".poincare", "required");
        ok = false;
      } else if (auto s = series_ref(c["poincare"], path + ".poincare")) {
        z.poincare = *s;
      } else {
        ok = false;
      }
      data.push_back(std::move(z));
    }
    if (ok) out_.boundary_critical = std::move(data);
  }

  const Json& doc_;
  ProblemDocument out_;
  std::map<std::string, std::size_t> vertex_;
  std::vector<FieldError> errors_;
};

}  // namespace

ProblemDocument parse_problem_json(const Json& doc) { return Parser(doc).run(); }

ProblemDocument parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ProblemError(std::vector<FieldError>{{"$", e.what()}});
  }
  return parse_problem_json(doc);
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.empty()) throw std::invalid_argument("empty grid entry");
    grid.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return grid;
}

// ---------------------------------------------------------------------------
// commands

namespace {

struct Invalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json rat_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json series_json(const CountingSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coefficients()) a.push_back(rat_json(c));
  return a;
}

Json verdict_json(const InequalityVerdict& v) {
  Json j;
  j["morse"] = series_json(v.morse);
  j["novikov"] = series_json(v.novikov);
  j["quotient"] = series_json(v.quotient);
  j["remainder"] = rat_json(v.remainder);
  j["holds"] = v.holds;
  j["failure"] = v.failure ? Json(to_string(*v.failure)) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

std::string verdict_text(const InequalityVerdict& v, const std::string& lhs = "M", const std::string& rhs = "N") {
  return lhs + " = " + v.morse.to_string() + ", " + rhs + " = " + v.novikov.to_string() + ": " +
         (v.holds ? "holds, " : "fails, ") + v.detail;
}

std::vector<std::size_t> selected(std::size_t count, const Flags& f) {
  std::vector<std::size_t> out;
  if (f.degree) {
    if (*f.degree < 0 || static_cast<std::size_t>(*f.degree) >= count) {
      throw Invalid("--degree " + std::to_string(*f.degree) + " is outside 0.." + std::to_string(count - 1));
    }
    out.push_back(static_cast<std::size_t>(*f.degree));
  } else {
    for (std::size_t i = 0; i < count; ++i) out.push_back(i);
  }
  return out;
}

TwistedComplex twisted_of(const ProblemDocument& doc) {
  return TwistedComplex::build(doc.complex, doc.cocycle, doc.sign_cocycle);
}

struct Part {
  Json report;
  std::string text;
  bool verdict_failed = false;
};

Part dims_part(const std::vector<std::size_t>& dims, const Flags& f) {
  Part p;
  p.report = Json::array();
  for (auto i : selected(dims.size(), f)) {
    p.report.push_back({{"degree", i}, {"dim", dims[i]}});
    if (!p.text.empty()) p.text += " ";
    p.text += std::to_string(dims[i]);
  }
  p.text += "\n";
  return p;
}

// isolating interval of the root of a square-free p in (lo, hi], narrowed
RootInterval narrow(const Poly& p, RootInterval r) {
  if (r.exact()) return r;
  auto sturm = sturm_sequence(p);
  const Rational eps(1, 1L << 50);
  while (r.hi - r.lo > eps * r.hi) {
    Rational mid = (r.lo + r.hi) / 2;
    if (p(mid) == 0) return {mid, mid, r.multiplicity};
    if (count_roots_in(sturm, r.lo, mid) > 0) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
  return r;
}

std::string approx_log(const RootInterval& r) {
  double mid = r.exact() ? r.lo.get_d() : Rational((r.lo + r.hi) / 2).get_d();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::log(mid));
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

Json interval_json(const RootInterval& r) { return {{"lo", rat_json(r.lo)}, {"hi", rat_json(r.hi)}}; }

std::string interval_text(const RootInterval& r) {
  if (r.exact()) return "s = " + to_string(r.lo);
  return "s in (" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

Part jumps_part(const ProblemDocument& doc, const Flags& f) {
  auto profile = jump_profile(twisted_of(doc));
  Part p;
  Json degrees = Json::array();
  std::ostringstream text;
  for (auto i : selected(profile.degrees.size(), f)) {
    const auto& d = profile.degrees[i];
    Json factors = Json::array();
    text << "degree " << i << ": background " << d.background << "\n";
    for (const auto& jf : d.factors) {
      Json roots = Json::array();
      for (const auto& r : jf.positive_roots) roots.push_back(interval_json(r));
      Json coeffs = Json::array();
      for (const auto& c : jf.factor.coefficients()) coeffs.push_back(rat_json(c));
      factors.push_back({{"coefficients", coeffs},
                         {"polynomial", jf.factor.to_string()},
                         {"irreducible", jf.irreducible},
                         {"jump", jf.jump},
                         {"positive_roots", roots},
                         {"negative_roots", jf.negative_roots},
                         {"complex_roots", jf.complex_roots}});
      text << "  " << jf.factor.to_string() << (jf.irreducible ? "" : " (not known irreducible)") << ": jump +"
           << jf.jump << ", " << jf.negative_roots << " negative, " << jf.complex_roots << " non-real roots\n";
      for (const auto& r : jf.positive_roots) {
        auto fine = narrow(jf.factor, r);
        text << "    " << interval_text(r) << ", t = " << approx_log(fine) << " approx\n";
      }
    }
    degrees.push_back({{"degree", i}, {"background", d.background}, {"factors", factors}});
  }
  Json jumps = Json::array();
  for (const auto& r : profile.positive_jumps()) jumps.push_back(interval_json(r));
  text << "positive real jump points: " << jumps.size() << "\n";
  p.report = {{"degrees", degrees}, {"positive_jumps", jumps}, {"positive_jump_count", jumps.size()}};
  p.text = text.str();
  return p;
}

Part sample_part(const ProblemDocument& doc, const Flags& f) {
  if (!f.grid) throw Invalid("sample needs --grid s1,s2,...");
  for (const auto& s : *f.grid)
    if (s == 0) throw Invalid("grid point 0 is not a valid value of s = e^t");
  auto rows = sample_dimensions(twisted_of(doc), *f.grid);
  const std::size_t n = static_cast<std::size_t>(doc.complex.dimension() + 1);
  Part p;
  std::ostringstream csv;
  csv << "s";
  for (std::size_t i = 0; i < n; ++i) csv << ",dim" << i;
  csv << ",on_jump\n";
  p.report = Json::array();
  for (const auto& r : rows) {
    csv << to_string(r.s);
    for (auto d : r.dims) csv << "," << d;
    csv << "," << (r.on_jump ? 1 : 0) << "\n";
    p.report.push_back({{"s", rat_json(r.s)}, {"dims", r.dims}, {"on_jump", r.on_jump}});
  }
  p.text = csv.str();
  return p;
}

const GroupData& need_group(const ProblemDocument& doc, const char* command) {
  if (!doc.group) throw Invalid(std::string(command) + " needs a group section");
  return *doc.group;
}

std::vector<std::size_t> selected_reps(const CharacterTable& chars, const Flags& f) {
  std::vector<std::size_t> out;
  if (f.rep) {
    auto r = chars.find(*f.rep);
    if (!r) throw Invalid("--rep: unknown irreducible '" + *f.rep + "'");
    out.push_back(*r);
  } else {
    for (std::size_t i = 0; i < chars.count(); ++i) out.push_back(i);
  }
  return out;
}

Part equivariant_part(const ProblemDocument& doc, const Flags& f) {
  const auto& g = need_group(doc, "equivariant");
  auto report = isotypic_multiplicities(g.action, g.characters, twisted_of(doc));
  auto reps = selected_reps(g.characters, f);
  Part p;
  Json degrees = Json::array();
  std::ostringstream text;
  for (auto i : selected(report.background.size(), f)) {
    Json traces = Json::object(), mult = Json::object();
    text << "degree " << i << ": background " << report.background[i] << "\n  traces:";
    for (std::size_t e = 0; e < g.group.size(); ++e) {
      traces[g.group.label(e)] = rat_json(report.traces[i][e]);
      text << " " << g.group.label(e) << "=" << to_string(report.traces[i][e]);
    }
    text << "\n";
    for (auto r : reps) {
      mult[report.names[r]] = report.multiplicity[i][r];
      text << "  " << report.names[r] << " (dim " << report.dims[r] << "): " << report.multiplicity[i][r] << "\n";
    }
    degrees.push_back({{"degree", i}, {"background", report.background[i]}, {"traces", traces}, {"multiplicity", mult}});
  }
  Json dims = Json::object();
  for (auto r : reps) dims[report.names[r]] = report.dims[r];
  p.report = {{"degrees", degrees}, {"dimensions", dims}};
  p.text = text.str();
  return p;
}

Part morse_part(const ProblemDocument& doc, const Flags& f) {
  if (!doc.critical) throw Invalid("morse-check needs a critical section");
  Part p;
  std::ostringstream text;
  auto orbits_json = [](const MorseSeries& m) {
    Json a = Json::array();
    for (const auto& o : m.orbits) {
      a.push_back({{"orbit", o.orbit},
                   {"members", o.members},
                   {"stabilizer_index", o.stabilizer_index},
                   {"contribution", series_json(o.contribution)},
                   {"complete", o.complete}});
    }
    return a;
  };
  if (!doc.group) {
    std::vector<CriticalComponent> comps;
    for (const auto& r : *doc.critical) comps.push_back(r.component);
    auto m = morse_series(comps);
    auto v = check_inequality(m.total, novikov_series(background_betti(twisted_of(doc))));
    p.report = {{"verdict", verdict_json(v)}, {"orbits", orbits_json(m)}, {"integral", m.integral}};
    text << verdict_text(v) << "\n";
    if (!m.integral) text << "warning: Morse series is not integral\n";
    p.verdict_failed = !v.holds;
    p.text = text.str();
    return p;
  }
  const auto& g = *doc.group;
  std::vector<std::vector<CriticalComponent>> per_rep;
  for (std::size_t r = 0; r < g.characters.count(); ++r) {
    auto& comps = per_rep.emplace_back();
    for (const auto& rec : *doc.critical) {
      auto c = rec.component;
      c.poincare = rec.poincare_for(g.characters.irreducible(r).name);
      comps.push_back(std::move(c));
    }
  }
  auto check = per_representation_check(g.action, g.characters, twisted_of(doc), per_rep);
  Json reps = Json::array();
  for (auto r : selected_reps(g.characters, f)) {
    const auto& rv = check.per_representation[r];
    reps.push_back({{"name", rv.name},
                    {"dimension", rv.dimension},
                    {"verdict", verdict_json(rv.verdict)},
                    {"orbits", orbits_json(rv.morse)},
                    {"integral", rv.morse.integral}});
    text << rv.name << ": " << verdict_text(rv.verdict) << "\n";
    p.verdict_failed = p.verdict_failed || !rv.verdict.holds;
  }
  if (!f.rep) {
    text << "regular: " << verdict_text(check.regular) << "\n";
    p.verdict_failed = p.verdict_failed || !check.regular.holds;
  }
  p.report = {{"representations", reps}, {"regular", verdict_json(check.regular)}};
  p.text = text.str();
  return p;
}

Part double_part(const ProblemDocument& doc) {
  if (!doc.boundary) throw Invalid("double-check needs a boundary section");
  if (doc.sign_cocycle) throw Invalid("double-check does not support a sign_cocycle");
  auto d = build_double(doc.complex, *doc.boundary, doc.cocycle);
  auto lemma = lemma_check(d);
  Part p;
  std::ostringstream text;
  auto line = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  Json lj = {{"invariant", lemma.invariant}, {"sign", lemma.sign},     {"absolute", lemma.absolute},
             {"relative", lemma.relative},   {"total", lemma.total},   {"holds", lemma.holds},
             {"mismatch", lemma.mismatch}};
  Json dj = {{"vertices", d.complex.vertex_count()},
             {"subdivided", d.subdivided},
             {"euler_characteristic", d.complex.euler_characteristic()}};
  text << "double: " << d.complex.vertex_count() << " vertices, euler characteristic "
       << d.complex.euler_characteristic() << (d.subdivided ? ", after one subdivision" : "") << "\n";
  text << "lemma: invariant part " << line(lemma.invariant) << " vs H(M) " << line(lemma.absolute) << "\n";
  text << "       sign part " << line(lemma.sign) << " vs H(M, boundary) " << line(lemma.relative) << "\n";
  text << "       " << (lemma.holds ? "holds" : "fails: " + lemma.mismatch) << "\n";
  p.verdict_failed = !lemma.holds;
  p.report = {{"double", dj}, {"lemma", lj}};
  if (doc.boundary_critical) {
    auto t10 = theorem10_check(doc.complex, *doc.boundary, doc.cocycle, *doc.boundary_critical);
    auto cross = double_cross_check(d, *doc.boundary_critical, t10);
    p.report["boundary_inequalities"] = {{"novikov", series_json(t10.novikov)},
                             {"morse_plus", series_json(t10.morse.plus)},
                             {"morse_minus", series_json(t10.morse.minus)},
                             {"plus", verdict_json(t10.plus)},
                             {"minus", verdict_json(t10.minus)},
                             {"literal_plus", verdict_json(t10.literal_plus)},
                             {"literal_minus", verdict_json(t10.literal_minus)},
                             {"holds", t10.holds()},
                             {"literal_holds", t10.literal_holds()}};
    p.report["double_cross_check"] = {
        {"trivial", verdict_json(cross.trivial)}, {"sign", verdict_json(cross.sign)}, {"agrees", cross.agrees}};
    text << "M+ - N: " << verdict_text(t10.plus, "M+") << "\n";
    text << "M- - N: " << verdict_text(t10.minus, "M-") << "\n";
    text << "N - M+ (literal): " << verdict_text(t10.literal_plus, "N", "M+") << "\n";
    text << "N - M- (literal): " << verdict_text(t10.literal_minus, "N", "M-") << "\n";
    text << "on the double: trivial part " << (cross.trivial.holds ? "holds" : "fails") << ", sign part "
         << (cross.sign.holds ? "holds" : "fails") << ", " << (cross.agrees ? "agrees" : "disagrees") << "\n";
    p.verdict_failed = p.verdict_failed || !t10.holds() || !cross.agrees;
  }
  p.text = text.str();
  return p;
}

Part run_part(std::string_view command, const ProblemDocument& doc, const Flags& f) {
  if (command == "betti") return dims_part(betti_numbers(doc.complex), f);
  if (command == "twisted") return dims_part(background_betti(twisted_of(doc)), f);
  if (command == "jumps") return jumps_part(doc, f);
  if (command == "sample") return sample_part(doc, f);
  if (command == "equivariant") return equivariant_part(doc, f);
  if (command == "morse-check") return morse_part(doc, f);
  if (command == "double-check") return double_part(doc);
  // report
  Part p;
  p.report = Json::object();
  auto add = [&](const std::string& name, Part part) {
    p.report[name] = std::move(part.report);
    p.text += "== " + name + "\n" + part.text;
    p.verdict_failed = p.verdict_failed || part.verdict_failed;
  };
  add("betti", run_part("betti", doc, f));
  add("twisted", run_part("twisted", doc, f));
  add("jumps", run_part("jumps", doc, f));
  if (f.grid) add("sample", run_part("sample", doc, f));
  if (doc.group) add("equivariant", run_part("equivariant", doc, f));
  if (doc.critical) add("morse-check", run_part("morse-check", doc, f));
  if (doc.boundary) add("double-check", run_part("double-check", doc, f));
  return p;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"betti",       "twisted",     "jumps",        "sample",
                                              "equivariant", "morse-check", "double-check", "report"};
  return names;
}

CommandOutput run_command(std::string_view command, const ProblemDocument& doc, const Flags& flags) {
  CommandOutput out;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    out.exit_code = exit_usage;
    out.text = "unknown command '" + std::string(command) + "'\n";
    out.report = {{"error", out.text}};
    return out;
  }
  try {
    auto part = run_part(command, doc, flags);
    out.report = {{"command", std::string(command)}, {"result", std::move(part.report)}};
    out.exit_code = part.verdict_failed ? exit_verdict : exit_ok;
    out.report["exit_code"] = out.exit_code;
    if (flags.machine && command != "sample") {
      out.text = out.report.dump(2) + "\n";
    } else {
      out.text = std::move(part.text);
    }
  } catch (const std::invalid_argument& e) {
    out.exit_code = exit_invalid;
    out.text = std::string(e.what()) + "\n";
    out.report = {{"error", e.what()}};
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted cohomology, Novikov numbers and Morse-type inequalities on simplicial complexes", "novikov"};
  std::string command, file, rep, grid, format = "human";
  int degree = 0;
  app.add_option("command", command, "betti, twisted, jumps, sample, equivariant, morse-check, double-check, report")
      ->required();
  app.add_option("file", file, "problem document (JSON)")->required();
  auto* degree_opt = app.add_option("--degree", degree, "restrict to one degree");
  auto* rep_opt = app.add_option("--rep", rep, "restrict to one irreducible");
  auto* grid_opt = app.add_option("--grid", grid, "comma-separated values of s");
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

  std::vector<const char*> argv{"novikov"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    err << "unknown command '" << command << "'\n";
    return exit_usage;
  }

  Flags flags;
  flags.machine = format == "machine";
  if (*degree_opt) flags.degree = degree;
  if (*rep_opt) flags.rep = rep;
  if (*grid_opt) {
    try {
      flags.grid = parse_grid(grid);
    } catch (const std::invalid_argument& e) {
      err << "--grid: " << e.what() << "\n";
      return exit_invalid;
    }
  }

  std::ifstream in(file);
  if (!in) {
    err << "cannot read " << file << "\n";
    return exit_invalid;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    auto doc = parse_problem(buffer.str());
    auto result = run_command(command, doc, flags);
    (result.exit_code == exit_invalid || result.exit_code == exit_usage ? err : out) << result.text;
    return result.exit_code;
  } catch (const ProblemError& e) {
    for (const auto& fe : e.errors()) err << file << ": " << fe.path << ": " << fe.reason << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace novikov
