#include "ltlqm/trace_gen.hpp"

#include <algorithm>
#include <random>

#include "ltlqm/valuation.hpp"

namespace ltlqm {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Satisfaction of every subformula at every position, bottom-up in
// O(|f|*n); `cells` accumulates the number of true entries (the repair
// loop's climbing metric).
std::vector<char> holds_vec(const FormulaPtr& f, const Word& w, const Alphabet& alpha,
                            std::size_t& cells) {
  const std::size_t n = w.length();
  std::vector<char> out(n, 0);
  switch (f->kind) {
    case FKind::True:
      std::fill(out.begin(), out.end(), 1);
      break;
    case FKind::Atom:
    case FKind::NegAtom: {
      const int id = alpha.id_of(f->prop);
      for (std::size_t t = 1; t <= n; ++t) {
        bool in = id >= 0 && w.has(t, id);
        out[t - 1] = (f->kind == FKind::Atom) == in;
      }
      break;
    }
    case FKind::Not: {
      std::vector<char> c = holds_vec(f->left, w, alpha, cells);
      for (std::size_t t = 0; t < n; ++t) out[t] = !c[t];
      break;
    }
    case FKind::And:
    case FKind::Or: {
      std::vector<char> l = holds_vec(f->left, w, alpha, cells);
      std::vector<char> r = holds_vec(f->right, w, alpha, cells);
      for (std::size_t t = 0; t < n; ++t)
        out[t] = f->kind == FKind::And ? (l[t] && r[t]) : (l[t] || r[t]);
      break;
    }
    case FKind::G:
    case FKind::F: {
      std::vector<char> c = holds_vec(f->left, w, alpha, cells);
      char acc = f->kind == FKind::G;
      for (std::size_t t = n; t >= 1; --t) {
        acc = f->kind == FKind::G ? (acc && c[t - 1]) : (acc || c[t - 1]);
        out[t - 1] = acc;
      }
      break;
    }
    case FKind::X: {
      std::vector<char> c = holds_vec(f->left, w, alpha, cells);
      for (std::size_t t = 0; t + 1 < n; ++t) out[t] = c[t + 1];
      break;
    }
    case FKind::U: {
      std::vector<char> l = holds_vec(f->left, w, alpha, cells);
      std::vector<char> r = holds_vec(f->right, w, alpha, cells);
      char acc = 0;
      for (std::size_t t = n; t >= 1; --t) {
        acc = r[t - 1] || (l[t - 1] && acc);
        out[t - 1] = acc;
      }
      break;
    }
  }
  for (char b : out) cells += b != 0;
  return out;
}

struct Measured {
  std::size_t cells = 0;
  bool sat = false;
};

Measured measure(const FormulaPtr& f, const Word& w, const Alphabet& alpha) {
  Measured m;
  m.sat = holds_vec(f, w, alpha, m.cells)[0] != 0;
  return m;
}

Word random_word(std::mt19937_64& rng, std::size_t length, std::size_t nprops) {
  std::vector<double> density(nprops);
  for (double& d : density) d = 0.05 + 0.9 * u01(rng);
  Word w;
  w.letters.resize(length, 0);
  for (std::size_t t = 0; t < length; ++t)
    for (std::size_t p = 0; p < nprops; ++p)
      if (u01(rng) < density[p]) w.letters[t] |= Letter{1} << p;
  return w;
}

// Hill-climbs single-bit flips on the cell count. Positives stop at the
// first satisfying word, keeping them distributionally varied. Negatives
// keep descending for the whole budget: a complement automaton enforces its
// violation obligations along the entire suffix, and a barely-violating
// random word carries almost no signal when only one negative is sampled.
bool repair(const FormulaPtr& f, Word& w, const Alphabet& alpha, std::size_t nprops,
            bool want, std::mt19937_64& rng) {
  Measured cur = measure(f, w, alpha);
  if (want && cur.sat) return true;
  const std::size_t budget = 10 * w.length() * std::max<std::size_t>(nprops, 1);
  for (std::size_t step = 0; step < budget; ++step) {
    const std::size_t t = pick(rng, w.length());
    const std::size_t p = pick(rng, nprops);
    w.letters[t] ^= Letter{1} << p;
    Measured next = measure(f, w, alpha);
    if (want && next.sat) return true;
    const bool better = want ? next.cells > cur.cells : next.cells < cur.cells;
    const bool plateau = next.cells == cur.cells && u01(rng) < 0.5;
    if (better || plateau) {
      cur = next;
    } else {
      w.letters[t] ^= Letter{1} << p;  // revert
    }
  }
  return !want && !cur.sat;
}

}  // namespace

Sample generate_sample(const GenConfig& cfg) {
  if (!cfg.generator) throw error("no generator formula");
  if (cfg.length < 1) throw error("length must be at least 1");

  Sample s;
  const std::vector<std::string> props = propositions(cfg.generator);
  for (const std::string& p : props) s.alphabet.intern(p);
  const std::size_t nprops = s.alphabet.size();
  std::vector<int> noise_ids;
  for (std::size_t k = 0; k < cfg.noise_vars; ++k)
    noise_ids.push_back(s.alphabet.intern("noise" + std::to_string(k)));

  std::mt19937_64 rng(cfg.seed);

  auto add_noise = [&](Word& w) {
    for (Letter& l : w.letters)
      for (int id : noise_ids)
        if (u01(rng) < cfg.p_noise) l |= Letter{1} << id;
  };

  auto draw = [&](bool want) {
    for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
      Word w = random_word(rng, cfg.length, nprops);
      if (repair(cfg.generator, w, s.alphabet, nprops, want, rng)) {
        add_noise(w);
        return w;
      }
    }
    throw error("GenerationFailure: could not produce a " +
                std::string(want ? "satisfying" : "violating") + " trace of length " +
                std::to_string(cfg.length));
  };

  for (std::size_t i = 0; i < cfg.num_positive; ++i) s.positives.push_back(draw(true));
  for (std::size_t i = 0; i < cfg.num_negative; ++i) s.negatives.push_back(draw(false));
  return s;
}

std::optional<std::string> preset_formula(const std::string& name) {
  if (name == "absence1") return "G !p";
  if (name == "absence2") return "G (q -> G !p)";
  if (name == "response1") return "G (p -> F s)";
  if (name == "response2") return "G (q -> G (p -> F s))";
  if (name == "existence1") return "F p";
  if (name == "existence2") return "G (!p | F (p & F q))";
  if (name == "universality1") return "G p";
  if (name == "universality2") return "G (p -> G q)";
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  return {"absence1", "absence2", "response1", "response2",
          "existence1", "existence2", "universality1", "universality2"};
}

}  // namespace ltlqm
