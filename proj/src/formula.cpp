#include "ltlqm/formula.hpp"

#include <algorithm>

namespace ltlqm {

namespace {
FormulaPtr mk(FKind k, std::string p, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(k, std::move(p), std::move(l), std::move(r));
}
}  // namespace

FormulaPtr f_true() { return mk(FKind::True, "", nullptr, nullptr); }
FormulaPtr f_atom(const std::string& name) { return mk(FKind::Atom, name, nullptr, nullptr); }
FormulaPtr f_neg_atom(const std::string& name) { return mk(FKind::NegAtom, name, nullptr, nullptr); }
FormulaPtr f_not(FormulaPtr c) { return mk(FKind::Not, "", std::move(c), nullptr); }
FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return mk(FKind::And, "", std::move(l), std::move(r)); }
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return mk(FKind::Or, "", std::move(l), std::move(r)); }
FormulaPtr f_g(FormulaPtr c) { return mk(FKind::G, "", std::move(c), nullptr); }
FormulaPtr f_f(FormulaPtr c) { return mk(FKind::F, "", std::move(c), nullptr); }
FormulaPtr f_x(FormulaPtr c) { return mk(FKind::X, "", std::move(c), nullptr); }
FormulaPtr f_u(FormulaPtr l, FormulaPtr r) { return mk(FKind::U, "", std::move(l), std::move(r)); }

std::size_t size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + size(f->left) + size(f->right);
}

std::size_t depth(const FormulaPtr& f) {
  if (!f) return 0;
  std::size_t d = 0;
  if (f->left) d = std::max(d, 1 + depth(f->left));
  if (f->right) d = std::max(d, 1 + depth(f->right));
  return d;
}

namespace {

FormulaPtr nnf_pos(const FormulaPtr& f);

FormulaPtr nnf_neg(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
      // no False node in the grammar; encode it as p & !p never arises here
      throw error("cannot negate `true` within this fragment");
    case FKind::Atom:
      return f_neg_atom(f->prop);
    case FKind::NegAtom:
      return f_atom(f->prop);
    case FKind::Not:
      return nnf_pos(f->left);
    case FKind::And:
      return f_or(nnf_neg(f->left), nnf_neg(f->right));
    case FKind::Or:
      return f_and(nnf_neg(f->left), nnf_neg(f->right));
    case FKind::G:
      return f_f(nnf_neg(f->left));
    case FKind::F:
      return f_g(nnf_neg(f->left));
    case FKind::X:
    case FKind::U:
      throw error("NonNNFConvertible: negation over X/U");
  }
  throw error("unreachable");
}

FormulaPtr nnf_pos(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
    case FKind::Atom:
    case FKind::NegAtom:
      return f;
    case FKind::Not:
      return nnf_neg(f->left);
    case FKind::And:
      return f_and(nnf_pos(f->left), nnf_pos(f->right));
    case FKind::Or:
      return f_or(nnf_pos(f->left), nnf_pos(f->right));
    case FKind::G:
      return f_g(nnf_pos(f->left));
    case FKind::F:
      return f_f(nnf_pos(f->left));
    case FKind::X:
      return f_x(nnf_pos(f->left));
    case FKind::U:
      return f_u(nnf_pos(f->left), nnf_pos(f->right));
  }
  throw error("unreachable");
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf_pos(f); }

bool is_nnf_gf(const FormulaPtr& f) {
  if (!f) return true;
  switch (f->kind) {
    case FKind::True:
    case FKind::Atom:
    case FKind::NegAtom:
      return true;
    case FKind::And:
    case FKind::Or:
    case FKind::G:
    case FKind::F:
      return is_nnf_gf(f->left) && is_nnf_gf(f->right);
    default:
      return false;
  }
}

std::string print(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::True:
      return "true";
    case FKind::Atom:
      return f->prop;
    case FKind::NegAtom:
      return "!" + f->prop;
    case FKind::Not:
      return "!(" + print(f->left) + ")";
    case FKind::And:
      return "(" + print(f->left) + " & " + print(f->right) + ")";
    case FKind::Or:
      return "(" + print(f->left) + " | " + print(f->right) + ")";
    case FKind::G:
      return "(G " + print(f->left) + ")";
    case FKind::F:
      return "(F " + print(f->left) + ")";
    case FKind::X:
      return "(X " + print(f->left) + ")";
    case FKind::U:
      return "(" + print(f->left) + " U " + print(f->right) + ")";
  }
  throw error("unreachable");
}

FormulaPtr canonicalize(const FormulaPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case FKind::And:
    case FKind::Or: {
      FormulaPtr l = canonicalize(f->left);
      FormulaPtr r = canonicalize(f->right);
      std::string pl = print(l), pr = print(r);
      if (pl == pr) return l;  // f&f, f|f collapse
      if (pr < pl) std::swap(l, r);
      return f->kind == FKind::And ? f_and(l, r) : f_or(l, r);
    }
    case FKind::G:
      return f_g(canonicalize(f->left));
    case FKind::F:
      return f_f(canonicalize(f->left));
    case FKind::X:
      return f_x(canonicalize(f->left));
    case FKind::Not:
      return f_not(canonicalize(f->left));
    case FKind::U:
      return f_u(canonicalize(f->left), canonicalize(f->right));
    default:
      return f;
  }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return print(canonicalize(a)) == print(canonicalize(b));
}

namespace {

void collect_props(const FormulaPtr& f, std::vector<std::string>& out) {
  if (!f) return;
  if (f->kind == FKind::Atom || f->kind == FKind::NegAtom) out.push_back(f->prop);
  collect_props(f->left, out);
  collect_props(f->right, out);
}

FormulaPtr negate_nnf(const FormulaPtr& f) {
  try {
    return to_nnf(f_not(f));
  } catch (const error&) {
    return nullptr;
  }
}

}  // namespace

std::vector<std::string> propositions(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_props(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string print_sugared(const FormulaPtr& f) {
  // (!a | b) & (a | !b)  =>  a <-> b
  if (f->kind == FKind::And && f->left->kind == FKind::Or && f->right->kind == FKind::Or) {
    const FormulaPtr ls[2] = {f->left->left, f->left->right};
    const FormulaPtr rs[2] = {f->right->left, f->right->right};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const FormulaPtr& not_a = ls[i];
        const FormulaPtr& b = ls[1 - i];
        const FormulaPtr& a = rs[j];
        const FormulaPtr& not_b = rs[1 - j];
        FormulaPtr na = negate_nnf(a);
        FormulaPtr nb = negate_nnf(b);
        if (na && nb && equal(not_a, na) && equal(not_b, nb))
          return "(" + print_sugared(a) + " <-> " + print_sugared(b) + ")";
      }
    }
  }
  // (!a | b)  =>  a -> b
  if (f->kind == FKind::Or) {
    for (int i = 0; i < 2; ++i) {
      const FormulaPtr& l = i == 0 ? f->left : f->right;
      const FormulaPtr& r = i == 0 ? f->right : f->left;
      if (l->kind == FKind::NegAtom)
        return "(" + l->prop + " -> " + print_sugared(r) + ")";
    }
  }
  switch (f->kind) {
    case FKind::And:
      return "(" + print_sugared(f->left) + " & " + print_sugared(f->right) + ")";
    case FKind::Or:
      return "(" + print_sugared(f->left) + " | " + print_sugared(f->right) + ")";
    case FKind::G:
      return "(G " + print_sugared(f->left) + ")";
    case FKind::F:
      return "(F " + print_sugared(f->left) + ")";
    default:
      return print(f);
  }
}

}  // namespace ltlqm
