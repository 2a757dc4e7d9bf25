#pragma once

#include <cstddef>
#include <vector>

#include "ltlqm/formula.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/valuation.hpp"

namespace ltlqm {

struct ScoredFormula {
  FormulaPtr formula;
  double score = 0.0;
  bool consistent = false;
};

struct CompRankConfig {
  std::size_t max_depth = 2;    // composition rounds over the literal level
  std::size_t level_cap = 50000;
  std::size_t beam = 150;       // top-scoring survivors fed into composition
  unsigned threads = 0;         // 0 = hardware concurrency
};

/// F f holds on every positive trace; negatives are ignored here and enforced
/// only by the final consistency filter.
bool f_check(const FormulaPtr& f, const Sample& s);

/// One composition round: all G f, F f, f & g, f | g over `used`,
/// canonicalized and deduplicated (f&f and f|f collapse and are dropped).
std::vector<FormulaPtr> compose(const std::vector<FormulaPtr>& used);

/// Enumerative search with F-check pruning. Level 0 is every literal p, !p
/// over the sample alphabet; each round composes the accumulated survivors
/// (restricted to the `beam` best by score to bound growth) and prunes with
/// the F-check. Returns the consistent survivors sorted by score descending,
/// ties by smaller size then canonical print.
std::vector<ScoredFormula> comp_rank(const Sample& s, const CompRankConfig& cfg,
                                     const ValuationParams& params);

}  // namespace ltlqm
