#pragma once

#include <map>
#include <string>

namespace ltlqm {

struct SolverOutcome {
  enum class Kind { Optimal, Unsat, Timeout, Error };
  Kind kind = Kind::Error;
  std::string output;   // full solver stdout (model text when Optimal)
  std::string message;  // human-readable detail for Error
};

/// Runs the configured SMT optimizer on the script with a wall-clock timeout.
/// `solver_path` is the executable; the script is passed as its single
/// argument via a temporary file.
SolverOutcome run_solver(const std::string& solver_path, const std::string& script,
                         double timeout_sec);

/// LTLQM_SOLVER environment variable, or "" when unset.
std::string solver_from_env();

/// Values extracted from `(define-fun name () Sort value)` entries of a
/// get-model response. Accepts booleans, integers, decimals, `(/ a b)` and
/// unary minus.
struct Model {
  std::map<std::string, bool> bools;
  std::map<std::string, double> reals;

  bool bool_of(const std::string& name) const;
  double real_of(const std::string& name) const;
};

Model parse_model(const std::string& text);

}  // namespace ltlqm
