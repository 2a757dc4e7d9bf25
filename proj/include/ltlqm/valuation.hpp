#pragma once

#include <map>
#include <string>
#include <vector>

#include "ltlqm/formula.hpp"
#include "ltlqm/rational.hpp"
#include "ltlqm/trace.hpp"

namespace ltlqm {

enum class Conj { Product, Min };
enum class Disj { Mean, Max };

struct ValuationParams {
  Rational r{367879, 1000000};  // temporal discount, ~= e^-1
  Rational delta{9, 10};        // structural penalty
  Conj conj = Conj::Product;
  Disj disj = Disj::Mean;
  std::map<std::string, Rational> priority;  // pi; absent props default to 1

  double pi(const std::string& prop) const {
    auto it = priority.find(prop);
    return it == priority.end() ? 1.0 : it->second.to_double();
  }
};

/// Classical finite-word satisfaction on the suffix w[i:]. Handles the full
/// operator set including Not, X and U. Propositions not in the alphabet are
/// false everywhere.
bool holds(const FormulaPtr& f, const Word& w, const Alphabet& alpha, std::size_t i);

/// f holds at position 1 of every positive trace and fails on every negative.
bool consistent(const FormulaPtr& f, const Sample& s);

/// Quantitative score of f at every position 1..|w| (index 0 is position 1).
/// f must be NNF-GF. Computed bottom-up in O(|f|*|w|).
std::vector<double> value_vector(const FormulaPtr& f, const Word& w,
                                 const Alphabet& alpha, const ValuationParams& params);

/// Single-operator transforms over per-position score vectors; value_vector
/// is their composition. Exposed so the enumerative search can score a
/// composed candidate from its children's cached vectors in one pass.
std::vector<double> apply_g(const std::vector<double>& child, const ValuationParams& params);
std::vector<double> apply_f(const std::vector<double>& child, const ValuationParams& params);
std::vector<double> apply_and(const std::vector<double>& l, const std::vector<double>& r,
                              const ValuationParams& params);
std::vector<double> apply_or(const std::vector<double>& l, const std::vector<double>& r,
                             const ValuationParams& params);

double value_at(const FormulaPtr& f, const Word& w, const Alphabet& alpha,
                std::size_t t, const ValuationParams& params);

double value(const FormulaPtr& f, const Word& w, const Alphabet& alpha,
             const ValuationParams& params);

/// Sum of value over the positive traces; negatives do not contribute.
double value_sample(const FormulaPtr& f, const Sample& s, const ValuationParams& params);

}  // namespace ltlqm
