#include "ltlqm/comp_rank.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace ltlqm {

bool f_check(const FormulaPtr& f, const Sample& s) {
  FormulaPtr ff = f_f(f);
  for (const Word& w : s.positives)
    if (!holds(ff, w, s.alphabet, 1)) return false;
  return true;
}

std::vector<FormulaPtr> compose(const std::vector<FormulaPtr>& used) {
  std::vector<FormulaPtr> out;
  std::set<std::string> seen;
  auto add = [&](FormulaPtr f) {
    FormulaPtr c = canonicalize(f);
    if (seen.insert(print(c)).second) out.push_back(c);
  };
  for (const FormulaPtr& f : used) {
    add(f_g(f));
    add(f_f(f));
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = 0; j < used.size(); ++j) {
      FormulaPtr a = f_and(used[i], used[j]);
      if (!equal(canonicalize(a), canonicalize(used[i]))) add(a);  // drop f&f -> f
      FormulaPtr o = f_or(used[i], used[j]);
      if (!equal(canonicalize(o), canonicalize(used[i]))) add(o);
    }
  }
  return out;
}

namespace {

// Cached per-position score vectors of one formula over every trace.
struct BeamEntry {
  FormulaPtr f;
  std::string key;
  std::vector<std::vector<double>> pos;
  std::vector<std::vector<double>> neg;
};

struct Candidate {
  FKind op;
  int l = -1;
  int r = -1;  // -1 for unary
  std::string key;
};

struct Aggregates {
  double score = 0.0;
  bool fpass = true;
  bool cons = true;
};

Aggregates evaluate(const Candidate& c, const std::vector<BeamEntry>& beam,
                    const ValuationParams& params) {
  Aggregates a;
  auto combine = [&](const BeamEntry& le, const BeamEntry* re, bool positive,
                     std::size_t w) {
    const std::vector<double>& lv = positive ? le.pos[w] : le.neg[w];
    switch (c.op) {
      case FKind::G:
        return apply_g(lv, params);
      case FKind::F:
        return apply_f(lv, params);
      case FKind::And:
        return apply_and(lv, positive ? re->pos[w] : re->neg[w], params);
      default:
        return apply_or(lv, positive ? re->pos[w] : re->neg[w], params);
    }
  };
  const BeamEntry& le = beam[static_cast<std::size_t>(c.l)];
  const BeamEntry* re = c.r >= 0 ? &beam[static_cast<std::size_t>(c.r)] : nullptr;
  for (std::size_t w = 0; w < le.pos.size(); ++w) {
    std::vector<double> v = combine(le, re, true, w);
    a.score += v[0];
    if (v[0] <= 0.0) a.cons = false;
    bool any = false;
    for (double x : v)
      if (x > 0.0) {
        any = true;
        break;
      }
    if (!any) a.fpass = false;
  }
  for (std::size_t w = 0; w < le.neg.size(); ++w) {
    std::vector<double> v = combine(le, re, false, w);
    if (v[0] > 0.0) a.cons = false;
  }
  return a;
}

struct UsedEntry {
  FormulaPtr f;
  std::string key;
  double score;
  bool cons;
  std::size_t size;
};

FormulaPtr realize(const Candidate& c, const std::vector<BeamEntry>& beam) {
  const FormulaPtr& l = beam[static_cast<std::size_t>(c.l)].f;
  switch (c.op) {
    case FKind::G:
      return f_g(l);
    case FKind::F:
      return f_f(l);
    case FKind::And:
      return f_and(l, beam[static_cast<std::size_t>(c.r)].f);
    default:
      return f_or(l, beam[static_cast<std::size_t>(c.r)].f);
  }
}

}  // namespace

std::vector<ScoredFormula> comp_rank(const Sample& s, const CompRankConfig& cfg,
                                     const ValuationParams& params) {
  if (s.positives.empty()) throw error("EmptySample: no positive traces");
  if (cfg.max_depth < 1) throw error("maxDepth must be at least 1");

  std::vector<UsedEntry> used;
  std::set<std::string> used_keys;
  std::size_t literal_count = 0;

  auto cache_entry = [&](const FormulaPtr& f, const std::string& key) {
    BeamEntry e;
    e.f = f;
    e.key = key;
    for (const Word& w : s.positives) e.pos.push_back(value_vector(f, w, s.alphabet, params));
    for (const Word& w : s.negatives) e.neg.push_back(value_vector(f, w, s.alphabet, params));
    return e;
  };

  // level 0: every literal over the alphabet, pruned by the F-check
  for (const std::string& p : s.alphabet.names()) {
    for (FormulaPtr lit : {f_atom(p), f_neg_atom(p)}) {
      BeamEntry e = cache_entry(lit, print(lit));
      Aggregates a;
      for (std::size_t w = 0; w < e.pos.size(); ++w) {
        a.score += e.pos[w][0];
        if (e.pos[w][0] <= 0.0) a.cons = false;
        if (std::none_of(e.pos[w].begin(), e.pos[w].end(), [](double x) { return x > 0.0; }))
          a.fpass = false;
      }
      for (std::size_t w = 0; w < e.neg.size(); ++w)
        if (e.neg[w][0] > 0.0) a.cons = false;
      if (a.fpass) {
        used.push_back({lit, e.key, a.score, a.cons, size(lit)});
        used_keys.insert(e.key);
        ++literal_count;
      }
    }
  }

  unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t round = 1; round <= cfg.max_depth; ++round) {
    // compose inputs: all surviving literals plus the beam best of `used`
    std::vector<std::size_t> order(used.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (used[a].score != used[b].score) return used[a].score > used[b].score;
      if (used[a].size != used[b].size) return used[a].size < used[b].size;
      return used[a].key < used[b].key;
    });
    std::vector<BeamEntry> beam;
    std::set<std::string> beam_keys;
    for (std::size_t i = 0; i < literal_count; ++i) {
      beam.push_back(cache_entry(used[i].f, used[i].key));
      beam_keys.insert(used[i].key);
    }
    for (std::size_t idx : order) {
      if (beam.size() >= literal_count + cfg.beam) break;
      if (beam_keys.insert(used[idx].key).second)
        beam.push_back(cache_entry(used[idx].f, used[idx].key));
    }

    std::vector<Candidate> cands;
    std::set<std::string> level_keys;
    auto add = [&](FKind op, int l, int r, std::string key) {
      if (used_keys.count(key) || !level_keys.insert(key).second) return;
      cands.push_back({op, l, r, std::move(key)});
    };
    const int B = static_cast<int>(beam.size());
    for (int i = 0; i < B; ++i) {
      add(FKind::G, i, -1, "(G " + beam[static_cast<std::size_t>(i)].key + ")");
      add(FKind::F, i, -1, "(F " + beam[static_cast<std::size_t>(i)].key + ")");
    }
    for (int i = 0; i < B; ++i) {
      for (int j = i + 1; j < B; ++j) {
        int l = i, r = j;
        if (beam[static_cast<std::size_t>(j)].key < beam[static_cast<std::size_t>(i)].key)
          std::swap(l, r);
        const std::string& kl = beam[static_cast<std::size_t>(l)].key;
        const std::string& kr = beam[static_cast<std::size_t>(r)].key;
        add(FKind::And, l, r, "(" + kl + " & " + kr + ")");
        add(FKind::Or, l, r, "(" + kl + " | " + kr + ")");
      }
    }
    if (cands.size() > cfg.level_cap)
      throw error("candidate set of " + std::to_string(cands.size()) +
                  " exceeds the level cap; lower the depth or raise the cap");

    std::vector<Aggregates> results(cands.size());
    std::vector<std::thread> pool;
    std::size_t chunk = (cands.size() + nthreads - 1) / std::max<unsigned>(nthreads, 1);
    for (unsigned t = 0; t < nthreads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(cands.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi]() {
        for (std::size_t i = lo; i < hi; ++i) results[i] = evaluate(cands[i], beam, params);
      });
    }
    for (std::thread& th : pool) th.join();

    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!results[i].fpass) continue;
      FormulaPtr f = realize(cands[i], beam);
      used.push_back({f, cands[i].key, results[i].score, results[i].cons, size(f)});
      used_keys.insert(cands[i].key);
    }
  }

  std::vector<ScoredFormula> out;
  for (const UsedEntry& e : used)
    if (e.cons) out.push_back({e.f, e.score, true});
  std::stable_sort(out.begin(), out.end(), [](const ScoredFormula& a, const ScoredFormula& b) {
    if (a.score != b.score) return a.score > b.score;
    std::size_t sa = size(a.formula), sb = size(b.formula);
    if (sa != sb) return sa < sb;
    return print(a.formula) < print(b.formula);
  });
  return out;
}

}  // namespace ltlqm
