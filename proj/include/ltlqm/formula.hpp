#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltlqm {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FKind : std::uint8_t {
  True,
  Atom,
  NegAtom,
  Not,  // only in parsed input; removed by to_nnf
  And,
  Or,
  G,
  F,
  X,
  U,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable LTL syntax tree node. Negation normal form is represented with
/// NegAtom leaves; a bare Not node only survives parsing until to_nnf runs.
class Formula {
 public:
  FKind kind;
  std::string prop;  // Atom / NegAtom
  FormulaPtr left;
  FormulaPtr right;

  Formula(FKind k, std::string p, FormulaPtr l, FormulaPtr r)
      : kind(k), prop(std::move(p)), left(std::move(l)), right(std::move(r)) {}
};

FormulaPtr f_true();
FormulaPtr f_atom(const std::string& name);
FormulaPtr f_neg_atom(const std::string& name);
FormulaPtr f_not(FormulaPtr c);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_g(FormulaPtr c);
FormulaPtr f_f(FormulaPtr c);
FormulaPtr f_x(FormulaPtr c);
FormulaPtr f_u(FormulaPtr l, FormulaPtr r);

std::size_t size(const FormulaPtr& f);
std::size_t depth(const FormulaPtr& f);

/// Negation normal form. Throws if a negation sits over X or U.
FormulaPtr to_nnf(const FormulaPtr& f);

/// True iff the formula uses only {True, Atom, NegAtom, And, Or, G, F}.
bool is_nnf_gf(const FormulaPtr& f);

/// Canonical text form: fully parenthesized, commutative operands ordered.
/// parse_formula(print(f)) reproduces f for NNF inputs.
std::string print(const FormulaPtr& f);

/// Readable form: restores `->` for Or(!a, b) and `<->` where both halves of
/// an Iff expansion are present. Used in reports only.
std::string print_sugared(const FormulaPtr& f);

/// Structural equality modulo canonical ordering of commutative operands.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Orders commutative children and collapses f&f / f|f. Idempotent.
FormulaPtr canonicalize(const FormulaPtr& f);

/// All distinct proposition names, sorted.
std::vector<std::string> propositions(const FormulaPtr& f);

}  // namespace ltlqm
