#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ltlqm/formula.hpp"
#include "ltlqm/trace.hpp"

namespace ltlqm {

struct GenConfig {
  FormulaPtr generator;  // NNF-GF
  std::size_t num_positive = 20;
  std::size_t num_negative = 1;
  std::size_t length = 50;
  std::size_t noise_vars = 0;
  double p_noise = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 10000;  // per trace
};

/// Seeded synthetic sample: positives satisfy the generator, negatives
/// violate it, noise propositions noise0..noise{k-1} sprinkled into both.
/// Mechanism is generate-and-repair: random draw, then local mutations
/// hill-climbing on the number of satisfied (subformula, position) cells,
/// redrawing on failure. Negatives use the same repair loop, descending.
Sample generate_sample(const GenConfig& cfg);

/// Named generator formulas for the standard pattern families
/// (absence1/2, response1/2, existence1/2, universality1/2);
/// nullopt for unknown names.
std::optional<std::string> preset_formula(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace ltlqm
