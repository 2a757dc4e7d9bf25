#include "ltlqm/valuation.hpp"

#include <algorithm>

namespace ltlqm {

namespace {

bool letter_has(const Word& w, std::size_t t, int prop) {
  return prop >= 0 && w.has(t, prop);
}

}  // namespace

bool holds(const FormulaPtr& f, const Word& w, const Alphabet& alpha, std::size_t i) {
  if (w.length() == 0) throw error("EmptyWord");
  const std::size_t n = w.length();
  switch (f->kind) {
    case FKind::True:
      return true;
    case FKind::Atom:
      return letter_has(w, i, alpha.id_of(f->prop));
    case FKind::NegAtom:
      return !letter_has(w, i, alpha.id_of(f->prop));
    case FKind::Not:
      return !holds(f->left, w, alpha, i);
    case FKind::And:
      return holds(f->left, w, alpha, i) && holds(f->right, w, alpha, i);
    case FKind::Or:
      return holds(f->left, w, alpha, i) || holds(f->right, w, alpha, i);
    case FKind::G:
      for (std::size_t j = i; j <= n; ++j)
        if (!holds(f->left, w, alpha, j)) return false;
      return true;
    case FKind::F:
      for (std::size_t j = i; j <= n; ++j)
        if (holds(f->left, w, alpha, j)) return true;
      return false;
    case FKind::X:
      return i < n && holds(f->left, w, alpha, i + 1);
    case FKind::U:
      for (std::size_t j = i; j <= n; ++j) {
        if (holds(f->right, w, alpha, j)) return true;
        if (!holds(f->left, w, alpha, j)) return false;
      }
      return false;
  }
  throw error("unreachable");
}

bool consistent(const FormulaPtr& f, const Sample& s) {
  for (const Word& w : s.positives)
    if (!holds(f, w, s.alphabet, 1)) return false;
  for (const Word& w : s.negatives)
    if (holds(f, w, s.alphabet, 1)) return false;
  return true;
}

std::vector<double> apply_g(const std::vector<double>& child, const ValuationParams& params) {
  const std::size_t n = child.size();
  const double r = params.r.to_double(), delta = params.delta.to_double();
  std::vector<double> out(n, 0.0);
  double sum = 0.0;
  bool allpos = true;
  for (std::size_t t = n; t >= 1; --t) {
    sum = child[t - 1] + r * sum;
    if (child[t - 1] <= 0.0) allpos = false;
    out[t - 1] = allpos ? delta * sum : 0.0;
  }
  return out;
}

std::vector<double> apply_f(const std::vector<double>& child, const ValuationParams& params) {
  const std::size_t n = child.size();
  const double r = params.r.to_double(), delta = params.delta.to_double();
  std::vector<double> out(n, 0.0);
  double next = 0.0;
  for (std::size_t t = n; t >= 1; --t) {
    out[t - 1] = child[t - 1] > 0.0 ? delta * child[t - 1] : r * next;
    next = out[t - 1];
  }
  return out;
}

std::vector<double> apply_and(const std::vector<double>& l, const std::vector<double>& r,
                              const ValuationParams& params) {
  const double delta = params.delta.to_double();
  std::vector<double> out(l.size(), 0.0);
  for (std::size_t t = 0; t < l.size(); ++t)
    out[t] = delta * (params.conj == Conj::Product ? l[t] * r[t] : std::min(l[t], r[t]));
  return out;
}

std::vector<double> apply_or(const std::vector<double>& l, const std::vector<double>& r,
                             const ValuationParams& params) {
  const double delta = params.delta.to_double();
  std::vector<double> out(l.size(), 0.0);
  for (std::size_t t = 0; t < l.size(); ++t)
    out[t] = delta * (params.disj == Disj::Mean ? (l[t] + r[t]) / 2.0 : std::max(l[t], r[t]));
  return out;
}

std::vector<double> value_vector(const FormulaPtr& f, const Word& w,
                                 const Alphabet& alpha, const ValuationParams& params) {
  const std::size_t n = w.length();
  if (n == 0) throw error("EmptyWord");
  std::vector<double> out(n, 0.0);

  switch (f->kind) {
    case FKind::True:
      std::fill(out.begin(), out.end(), 1.0);
      return out;
    case FKind::Atom: {
      const int id = alpha.id_of(f->prop);
      const double p = params.pi(f->prop);
      for (std::size_t t = 1; t <= n; ++t) out[t - 1] = letter_has(w, t, id) ? p : 0.0;
      return out;
    }
    case FKind::NegAtom: {
      const int id = alpha.id_of(f->prop);
      const double p = params.pi(f->prop);
      for (std::size_t t = 1; t <= n; ++t) out[t - 1] = letter_has(w, t, id) ? 0.0 : p;
      return out;
    }
    case FKind::And:
      return apply_and(value_vector(f->left, w, alpha, params),
                       value_vector(f->right, w, alpha, params), params);
    case FKind::Or:
      return apply_or(value_vector(f->left, w, alpha, params),
                      value_vector(f->right, w, alpha, params), params);
    case FKind::G:
      return apply_g(value_vector(f->left, w, alpha, params), params);
    case FKind::F:
      return apply_f(value_vector(f->left, w, alpha, params), params);
    default:
      throw error("NonGFFormula: valuation is defined only on the NNF GF fragment");
  }
}

double value_at(const FormulaPtr& f, const Word& w, const Alphabet& alpha,
                std::size_t t, const ValuationParams& params) {
  if (t < 1 || t > w.length()) throw error("position out of range");
  return value_vector(f, w, alpha, params)[t - 1];
}

double value(const FormulaPtr& f, const Word& w, const Alphabet& alpha,
             const ValuationParams& params) {
  return value_vector(f, w, alpha, params)[0];
}

double value_sample(const FormulaPtr& f, const Sample& s, const ValuationParams& params) {
  double total = 0.0;
  for (const Word& w : s.positives) total += value(f, w, s.alphabet, params);
  return total;
}

}  // namespace ltlqm
