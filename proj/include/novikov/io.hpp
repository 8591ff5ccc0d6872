#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "novikov/action.hpp"
#include "novikov/cocycle.hpp"
#include "novikov/complex.hpp"
#include "novikov/doubling.hpp"
#include "novikov/group.hpp"
#include "novikov/morse.hpp"

namespace novikov {

using Json = nlohmann::json;

struct FieldError {
  std::string path;  // "cocycle[2]", "$" for the document root
  std::string reason;
};

/// Every problem found in a document, not only the first.
class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(std::vector<FieldError> errors);
  const std::vector<FieldError>& errors() const { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

struct GroupData {
  FiniteGroup group;
  CharacterTable characters;
  GroupAction action;
};

/// A critical record whose Poincare series may depend on the irreducible.
struct CriticalRecord {
  CriticalComponent component;  // poincare unused when per_rep is set
  std::optional<std::vector<std::pair<std::string, CountingSeries>>> per_rep;

  CountingSeries poincare_for(const std::string& rep) const;
};

struct ProblemDocument {
  SimplicialComplex complex;
  std::optional<Subcomplex> boundary;
  IntegerCocycle cocycle;
  std::optional<SignCocycle> sign_cocycle;
  std::optional<GroupData> group;
  std::optional<std::vector<CriticalRecord>> critical;
  std::optional<std::vector<BoundaryComponent>> boundary_critical;
};

/// Fields: "vertices" (labels, or a count), "simplices" (label lists),
/// "cocycle" and "sign_cocycle" ([from, to, value] triples, unlisted edges
/// 0 resp. +1), "boundary" (simplices, closed under faces), "group"
/// ({"builtin": name} or {"elements", "table"}), "characters", "action"
/// (element -> images of the vertices in order), "critical",
/// "boundary_critical". Throws ProblemError.
ProblemDocument parse_problem(std::string_view text);
ProblemDocument parse_problem_json(const Json& doc);

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_invalid = 2, exit_verdict = 3, exit_usage = 64 };

struct Flags {
  std::optional<int> degree;
  std::optional<std::string> rep;
  std::optional<std::vector<Rational>> grid;
  bool machine = false;
};

struct CommandOutput {
  Json report;  // machine-readable result
  std::string text;  // what the CLI prints for the chosen format
  int exit_code = exit_ok;
};

const std::vector<std::string>& command_names();

/// Runs one of command_names(). Unknown commands give exit_usage, missing
/// sections and invalid flags exit_invalid with the reason in `text`, and a
/// failing verdict exit_verdict.
CommandOutput run_command(std::string_view command, const ProblemDocument& doc, const Flags& flags);

/// "1/2,2,3" -> rationals; throws std::invalid_argument.
std::vector<Rational> parse_grid(std::string_view text);

/// Full command line: novikov <command> <file> [--degree i] [--rep name]
/// [--grid s,...] [--format human|machine]. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov
