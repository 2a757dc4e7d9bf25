#pragma once

#include <string>

#include "ltlqm/formula.hpp"
#include "ltlqm/pattern.hpp"
#include "ltlqm/solver.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/valuation.hpp"

namespace ltlqm {

struct SynthOptions {
  std::string solver_path;     // empty: fall back to LTLQM_SOLVER
  double timeout_sec = 1000;
  std::size_t trace_cap = 200;  // max trace length for the SMT path
  std::size_t depth_cap = 6;    // max free-skeleton depth
};

enum class SynthStatus { Optimal, Unsat, Timeout, SolverError };

struct SynthResult {
  SynthStatus status = SynthStatus::SolverError;
  FormulaPtr formula;       // set when Optimal
  double objective = 0.0;   // min over positives of the root score
  std::string message;
};

struct EncodeRequest {
  const Sample* sample = nullptr;
  PatternPtr pattern;           // concrete formulas allowed (no unknowns)
  ValuationParams params;
  bool assert_polarity = true;  // positives score > 0, negatives score = 0
};

/// Opaque handle tying a script's variable names back to the formula tree.
class Skeleton;

struct Encoded {
  std::string script;
  std::shared_ptr<const Skeleton> skeleton;
};

/// Lowers the pattern over the sample into a quantifier-free SMT-LIB2
/// optimization script (single `maximize`). Deterministic: identical inputs
/// give byte-identical scripts.
Encoded encode(const EncodeRequest& req);

/// Reads the label and mapping booleans of a model back into a formula.
FormulaPtr decode(const Model& model, const Skeleton& sk);

/// Optimal unrestricted formula of depth <= depth (pattern phi(depth)).
SynthResult constraint_opt(const Sample& s, std::size_t depth,
                           const ValuationParams& params, const SynthOptions& opt);

/// Optimal completion of a pattern with placeholders and holes.
SynthResult pattern_synth(const Sample& s, const PatternPtr& p,
                          const ValuationParams& params, const SynthOptions& opt);

}  // namespace ltlqm
