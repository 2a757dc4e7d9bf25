#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ltlqm/formula.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/valuation.hpp"

namespace testutil {

using namespace ltlqm;

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

/// Random NNF formula over the GF fragment (literals, And, Or, G, F).
inline FormulaPtr random_gf(std::mt19937_64& rng, int depth,
                            const std::vector<std::string>& props) {
  const std::size_t leaf = rng() % (depth == 0 ? 2 : 6);
  const std::string& p = props[rng() % props.size()];
  switch (depth == 0 ? leaf : rng() % 6) {
    case 0:
      return f_atom(p);
    case 1:
      return f_neg_atom(p);
    case 2:
      return f_g(random_gf(rng, depth - 1, props));
    case 3:
      return f_f(random_gf(rng, depth - 1, props));
    case 4:
      return f_and(random_gf(rng, depth - 1, props), random_gf(rng, depth - 1, props));
    default:
      return f_or(random_gf(rng, depth - 1, props), random_gf(rng, depth - 1, props));
  }
}

inline Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t nprops) {
  Word w;
  w.letters.resize(len, 0);
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t p = 0; p < nprops; ++p)
      if (u01(rng) < 0.5) w.letters[t] |= Letter{1} << p;
  return w;
}

inline Alphabet make_alpha(const std::vector<std::string>& props) {
  Alphabet a;
  for (const std::string& p : props) a.intern(p);
  return a;
}

/// Word from a list of letters given as prop-name lists.
inline Word word_of(const Alphabet& a, const std::vector<std::vector<std::string>>& letters) {
  Word w;
  for (const auto& l : letters) {
    Letter m = 0;
    for (const std::string& p : l) m |= Letter{1} << a.id_of(p);
    w.letters.push_back(m);
  }
  return w;
}

/// Exhaustive equivalence on all words of length 1..max_len over props.
inline bool equiv_small(const FormulaPtr& a, const FormulaPtr& b,
                        const std::vector<std::string>& props, std::size_t max_len) {
  Alphabet alpha = make_alpha(props);
  const std::size_t letters = std::size_t{1} << alpha.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w;
    w.letters.assign(len, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= letters;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i) {
        w.letters[i] = c % letters;
        c /= letters;
      }
      if (holds(a, w, alpha, 1) != holds(b, w, alpha, 1)) return false;
    }
  }
  return true;
}

}  // namespace testutil
