#pragma once

#include <string>

#include "ltlqm/formula.hpp"
#include "ltlqm/pattern.hpp"

namespace ltlqm {

class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line, int col)
      : error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line(line), col(col) {}
  int line;
  int col;
};

/// Parses the formula grammar. `->` and `<->` are desugared; the result may
/// contain Not nodes and is not yet in NNF.
FormulaPtr parse_formula(const std::string& text);

/// Parses the pattern grammar: formulas extended with `?name` placeholders
/// and `phi(d)` subformula holes. Sugar is kept (expand_pattern removes it).
PatternPtr parse_pattern(const std::string& text);

}  // namespace ltlqm
