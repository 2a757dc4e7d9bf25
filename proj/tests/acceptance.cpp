// Acceptance gate: one pass/fail line per criterion C1..C9.
// Solver-backed criteria skip (visibly) when LTLQM_SOLVER is not usable;
// C8 additionally needs LTLQM_BIN pointing at the CLI binary.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ltlqm/comp_rank.hpp"
#include "ltlqm/parser.hpp"
#include "ltlqm/smt_synth.hpp"
#include "ltlqm/solver.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/trace_gen.hpp"
#include "ltlqm/valuation.hpp"
#include "test_util.hpp"

using namespace ltlqm;
using namespace testutil;

namespace {

int g_failures = 0;

void report(const char* id, const char* what, bool ok) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id, what);
  if (!ok) ++g_failures;
}

void skip(const char* id, const char* what, const char* why) {
  std::printf("[SKIP] %s: %s (%s)\n", id, what, why);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

bool solver_ok() {
  static int state = -1;
  if (state < 0) {
    std::string path = solver_from_env();
    state = 0;
    if (!path.empty()) {
      SolverOutcome out = run_solver(
          path, "(declare-const x Real)(assert (<= x 1.0))(maximize x)(check-sat)(get-model)",
          60);
      state = out.kind == SolverOutcome::Kind::Optimal ? 1 : 0;
    }
  }
  return state == 1;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double min_over_p(const FormulaPtr& f, const Sample& s, const ValuationParams& prm) {
  double m = 1e300;
  for (const Word& w : s.positives) m = std::min(m, value(f, w, s.alphabet, prm));
  return m;
}

// Every formula of syntactic depth <= d over the props (literals at depth 0,
// then one round of G/F/And/Or per level). Independent of the SMT encoding.
std::vector<FormulaPtr> enumerate_depth(int d, const std::vector<std::string>& props) {
  std::vector<FormulaPtr> cur;
  for (const std::string& p : props) {
    cur.push_back(f_atom(p));
    cur.push_back(f_neg_atom(p));
  }
  for (int lvl = 0; lvl < d; ++lvl) {
    std::vector<FormulaPtr> next = cur;
    for (const auto& f : cur) {
      next.push_back(f_g(f));
      next.push_back(f_f(f));
    }
    for (const auto& f : cur)
      for (const auto& g : cur) {
        next.push_back(f_and(f, g));
        next.push_back(f_or(f, g));
      }
    cur = std::move(next);
  }
  return cur;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- C1: published fixture values --------------------------------------

void c1() {
  Timer t;
  ValuationParams prm;  // r ~= e^-1
  prm.delta = Rational(9, 10);
  Alphabet a;
  // period-4 session: connect, password, failed login, disconnect
  std::string period =
      "connected\n"
      "connected,password\n"
      "connected,login_incorrect,auth_fail\n"
      "disconnected\n";
  Word w = parse_traces(period + period + period + period, a)[0];

  bool ok = w.length() == 16;
  ok = ok && value(parse_formula("G disconnected"), w, a, prm) == 0.0;

  FormulaPtr fd = parse_formula("F disconnected");
  // disconnected at positions 4,8,12,16: distances 3,2,1,0 from positions 1..4
  const double expect[] = {0.900, 0.331, 0.122, 0.0448};
  for (int dist = 0; dist <= 3; ++dist)
    ok = ok && near(value_at(fd, w, a, 4 - dist, prm), expect[dist], 0.005);

  double gf = value(parse_formula("G F disconnected"), w, a, prm);
  ok = ok && near(gf, 0.173, 0.1 * 0.173);
  ok = ok && t.secs() < 1.0;
  report("C1", "published example values reproduced", ok);
}

// ---- C2: positivity iff satisfaction ------------------------------------

void c2() {
  Timer t;
  std::mt19937_64 rng(2024);
  Alphabet a = make_alpha({"p", "q", "r"});
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    FormulaPtr f = random_gf(rng, 3, {"p", "q", "r"});
    Word w = testutil::random_word(rng, 1 + rng() % 8, 3);
    for (int scheme = 0; scheme < 4; ++scheme) {
      ValuationParams prm;
      prm.delta = Rational(9, 10);
      prm.conj = scheme & 1 ? Conj::Min : Conj::Product;
      prm.disj = scheme & 2 ? Disj::Max : Disj::Mean;
      for (std::size_t pos = 1; pos <= w.length(); ++pos)
        if ((value_at(f, w, a, pos, prm) > 0.0) != holds(f, w, a, pos)) ok = false;
    }
  }
  ok = ok && t.secs() < 10.0;
  report("C2", "value positive iff formula holds (1000 x 4 schemes)", ok);
}

// ---- C3: SMT objective vs exhaustive enumeration ------------------------

void c3() {
  if (!solver_ok()) {
    skip("C3", "optimum matches exhaustive enumeration", "no usable LTLQM_SOLVER");
    return;
  }
  Timer t;
  std::mt19937_64 rng(1234);
  ValuationParams prm;
  prm.delta = Rational(4, 5);
  prm.conj = Conj::Min;
  SynthOptions so;
  so.timeout_sec = 120;
  bool ok = true;

  for (int i = 0; i < 25 && ok; ++i) {
    const int nprops = 1 + static_cast<int>(rng() % 2);
    std::vector<std::string> props(nprops == 1 ? std::vector<std::string>{"p"}
                                               : std::vector<std::string>{"p", "q"});
    Sample s;
    s.alphabet = make_alpha(props);
    const std::size_t npos = 1 + rng() % 2;
    const std::size_t nneg = rng() % 2;
    for (std::size_t k = 0; k < npos; ++k)
      s.positives.push_back(testutil::random_word(rng, 1 + rng() % 6, props.size()));
    for (std::size_t k = 0; k < nneg; ++k)
      s.negatives.push_back(testutil::random_word(rng, 1 + rng() % 6, props.size()));

    const int depth = i < 15 ? 1 : 2;
    double best = 0.0;
    for (const auto& f : enumerate_depth(depth, props)) {
      if (!consistent(f, s)) continue;
      best = std::max(best, min_over_p(f, s, prm));
    }

    SynthResult r = constraint_opt(s, static_cast<std::size_t>(depth), prm, so);
    if (best > 0.0) {
      if (r.status != SynthStatus::Optimal || !consistent(r.formula, s) ||
          !near(r.objective, best, 1e-6)) {
        std::printf("  C3 instance %d: oracle %.9f, solver %s %.9f (%s)\n", i, best,
                    r.status == SynthStatus::Optimal ? "optimal" : "not-optimal",
                    r.objective,
                    r.formula ? print(r.formula).c_str() : "-");
        ok = false;
      }
    } else if (r.status != SynthStatus::Unsat) {
      std::printf("  C3 instance %d: oracle says unsat, solver disagrees\n", i);
      ok = false;
    }
  }
  double secs = t.secs();
  ok = ok && secs < 300.0;
  std::printf("  C3 wall time: %.1f s\n", secs);
  report("C3", "25 tiny instances match the enumeration oracle", ok);
}

// ---- C4: encoder/evaluator agreement on pinned labelings ----------------

void c4() {
  if (!solver_ok()) {
    skip("C4", "solver root score equals evaluator", "no usable LTLQM_SOLVER");
    return;
  }
  std::mt19937_64 rng(99);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    FormulaPtr f = random_gf(rng, 1 + rng() % 3, {"p", "q"});
    Sample s;
    s.alphabet = make_alpha({"p", "q"});
    s.positives = {testutil::random_word(rng, 1 + rng() % 6, 2)};
    ValuationParams prm;
    prm.delta = Rational(4, 5);
    prm.conj = i & 1 ? Conj::Min : Conj::Product;
    prm.disj = i & 2 ? Disj::Max : Disj::Mean;

    EncodeRequest req;
    req.sample = &s;
    req.pattern = parse_pattern(print(f));
    req.params = prm;
    req.assert_polarity = false;
    Encoded enc = encode(req);
    SolverOutcome out = run_solver(solver_from_env(), enc.script, 60);
    if (out.kind != SolverOutcome::Kind::Optimal) {
      std::printf("  C4 instance %d: solver %s\n", i, out.message.c_str());
      ok = false;
      break;
    }
    double got = parse_model(out.output).real_of("obj");
    double want = value(f, s.positives[0], s.alphabet, prm);
    if (!near(got, want, 1e-6)) {
      std::printf("  C4 instance %d: %s -> solver %.9f, evaluator %.9f\n", i,
                  print(f).c_str(), got, want);
      ok = false;
    }
  }
  report("C4", "100 pinned labelings: solver score equals value()", ok);
}

// ---- C5: enumerative search recovers the preset generators --------------

struct Verdict {
  std::string name;  // exact | consistent | miss | empty
};

Verdict judge(const FormulaPtr& learned, const FormulaPtr& gen, const GenConfig& cfg) {
  if (!learned) return {"empty"};
  std::vector<std::string> props = propositions(gen);
  for (const std::string& p : propositions(learned))
    if (std::find(props.begin(), props.end(), p) == props.end()) props.push_back(p);
  std::sort(props.begin(), props.end());
  const std::size_t max_len = props.size() <= 2 ? 6 : props.size() <= 4 ? 4 : 3;
  if (equiv_small(learned, gen, props, max_len)) return {"exact"};
  GenConfig held = cfg;
  held.num_positive = 100;
  held.num_negative = 0;
  held.seed = cfg.seed + 7919;
  Sample h = generate_sample(held);
  for (const Word& w : h.positives)
    if (!holds(learned, w, h.alphabet, 1)) return {"miss"};
  return {"consistent"};
}

void c5() {
  ValuationParams prm;
  prm.delta = Rational(4, 5);
  bool ok = true;

  int shallow_total = 0, shallow_good = 0, resp2_good = 0;
  const std::vector<std::string> shallow = {"absence1", "existence1", "universality1"};
  for (const std::string& preset : preset_names()) {
    FormulaPtr gen = to_nnf(parse_formula(*preset_formula(preset)));
    const bool is_shallow =
        std::find(shallow.begin(), shallow.end(), preset) != shallow.end();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GenConfig cfg;
      cfg.generator = gen;
      cfg.num_positive = 20;
      cfg.num_negative = 1;  // worst case per the source experiments
      cfg.length = 50;
      cfg.noise_vars = 3;
      cfg.p_noise = 0.5;
      cfg.seed = seed;
      Sample s = generate_sample(cfg);
      CompRankConfig crc;
      crc.max_depth = is_shallow ? 2 : 3;
      auto ranked = comp_rank(s, crc, prm);
      FormulaPtr top = ranked.empty() ? nullptr : ranked[0].formula;
      Verdict v = judge(top, gen, cfg);
      if (is_shallow) {
        ++shallow_total;
        if (v.name == "exact" || v.name == "consistent") ++shallow_good;
      }
      if (preset == "response2") {
        if (v.name == "exact" || v.name == "consistent") ++resp2_good;
        std::printf("  C5 response2 seed %llu: %s  %s\n",
                    static_cast<unsigned long long>(seed), v.name.c_str(),
                    top ? print_sugared(top).c_str() : "-");
      }
    }
  }
  std::printf("  C5 depth-1 presets: %d/%d exact-or-consistent; response2: %d/5\n",
              shallow_good, shallow_total, resp2_good);
  ok = ok && shallow_good * 10 >= shallow_total * 9;  // >= 90%
  // one coincidental miss is expected at this trace length (~80% base rate
  // over 20 seeds); see the limitations notes
  ok = ok && resp2_good >= 4;

  // runtime bound: depth 3 on 20 x length-1000 traces in under a minute
  GenConfig big;
  big.generator = to_nnf(parse_formula(*preset_formula("response2")));
  big.num_positive = 20;
  big.num_negative = 1;
  big.length = 1000;
  big.noise_vars = 3;
  big.p_noise = 0.5;
  big.seed = 7;
  Sample bs = generate_sample(big);
  CompRankConfig crc;
  crc.max_depth = 3;
  Timer t;
  auto ranked = comp_rank(bs, crc, prm);
  double secs = t.secs();
  std::printf("  C5 depth-3 search on 20 x 1000: %.1f s, %zu results\n", secs,
              ranked.size());
  ok = ok && secs < 60.0;
  report("C5", "search recovers preset generators within budget", ok);
}

// ---- C6: pattern matching recovers the generator ------------------------

void c6() {
  if (!solver_ok()) {
    skip("C6", "pattern matching recovers generators", "no usable LTLQM_SOLVER");
    return;
  }
  ValuationParams prm;
  prm.delta = Rational(4, 5);
  prm.conj = Conj::Min;
  SynthOptions so;
  so.timeout_sec = 120;

  struct Case {
    const char* preset;
    const char* pattern;
    const char* expect;
  };
  const Case cases[] = {
      {"universality1", "G ?x", "G p"},
      {"response1", "G (?x -> F ?y)", "G (p -> F s)"},
      {"absence1", "G !?x", "G !p"},
  };
  bool ok = true;
  for (const Case& c : cases) {
    GenConfig cfg;
    cfg.generator = to_nnf(parse_formula(*preset_formula(c.preset)));
    cfg.num_positive = 15;
    cfg.num_negative = 5;
    cfg.length = 25;
    cfg.noise_vars = 3;
    cfg.p_noise = 0.5;
    cfg.seed = 11;
    Sample s = generate_sample(cfg);
    Timer t;
    SynthResult r = pattern_synth(s, parse_pattern(c.pattern), prm, so);
    double secs = t.secs();
    bool good = r.status == SynthStatus::Optimal &&
                equal(r.formula, to_nnf(parse_formula(c.expect))) && secs < 60.0;
    std::printf("  C6 %s [%s]: %s in %.1f s\n", c.preset, c.pattern,
                r.formula ? print_sugared(r.formula).c_str() : "-", secs);
    ok = ok && good;
  }
  report("C6", "placeholder patterns recover the generators", ok);
}

// ---- C7: FTP worked example ---------------------------------------------

void c7() {
  if (!solver_ok()) {
    skip("C7", "FTP session example", "no usable LTLQM_SOLVER");
    return;
  }
  Sample s;
  s.positives = parse_traces(
      "connected\n"
      "connected,password\n"
      "connected,login_incorrect,auth_fail\n"
      "disconnected\n"
      "connected\n"
      "connected,password\n"
      "connected,login_incorrect,auth_fail\n"
      "disconnected\n"
      "login_incorrect\n"
      "connected,password\n"
      "connected,logged_in\n"
      "connected,logged_in\n"
      "disconnected\n",
      s.alphabet);
  ValuationParams prm;
  prm.delta = Rational(4, 5);
  prm.conj = Conj::Min;
  prm.priority["auth_fail"] = Rational(10, 1);
  SynthOptions so;
  so.timeout_sec = 300;

  FormulaPtr want =
      to_nnf(parse_formula("G (auth_fail <-> (connected & login_incorrect))"));
  SynthResult r1 = pattern_synth(s, parse_pattern("G (?x <-> phi(1))"), prm, so);
  SynthResult r2 = pattern_synth(s, parse_pattern("G (auth_fail <-> phi(1))"), prm, so);
  bool ok = r1.status == SynthStatus::Optimal && r2.status == SynthStatus::Optimal &&
            equal(r1.formula, want) && equal(r2.formula, want) &&
            equal(r1.formula, r2.formula);
  if (r1.formula) std::printf("  C7 abstract pattern: %s\n", print_sugared(r1.formula).c_str());
  if (r2.formula) std::printf("  C7 pinned pattern:   %s\n", print_sugared(r2.formula).c_str());
  report("C7", "FTP example recovers auth_fail <-> connected & login_incorrect", ok);
}

// ---- C8: byte-identical reports -----------------------------------------

void c8() {
  const char* bin = std::getenv("LTLQM_BIN");
  if (!bin || !*bin) {
    skip("C8", "deterministic reports", "LTLQM_BIN not set");
    return;
  }
  std::string b = bin;
  std::string d1 = "/tmp/ltlqm_accept_1", d2 = "/tmp/ltlqm_accept_2";
  bool ok =
      std::system(("rm -rf " + d1 + " " + d2 + " && mkdir -p " + d1 + " " + d2).c_str()) == 0;
  for (const std::string& d : {d1, d2}) {
    std::string gen = "cd " + d + " && " + b +
                      " gen --preset universality1 --seed 5 --num-pos 10 --num-neg 3"
                      " --length 20 --json --no-timing > gen.json 2>&1";
    std::string mine = "cd " + d + " && " + b +
                       " mine --pos pos.txt --neg neg.txt --json --no-timing"
                       " > mine.json 2>&1";
    ok = ok && std::system(gen.c_str()) == 0 && std::system(mine.c_str()) == 0;
    if (solver_ok()) {
      std::string match = "cd " + d + " && " + b +
                          " match --pos pos.txt --neg neg.txt --pattern 'G ?x'"
                          " --json --no-timing > match.json 2>&1";
      ok = ok && std::system(match.c_str()) == 0;
    }
  }
  for (const char* f : {"gen.json", "pos.txt", "neg.txt", "mine.json"}) {
    std::string a = slurp(d1 + "/" + f), c = slurp(d2 + "/" + f);
    if (a.empty() || a != c) {
      std::printf("  C8 mismatch in %s\n", f);
      ok = false;
    }
  }
  if (solver_ok()) {
    std::string a = slurp(d1 + "/match.json"), c = slurp(d2 + "/match.json");
    if (a.empty() || a != c) {
      std::printf("  C8 mismatch in match.json\n");
      ok = false;
    }
  }
  report("C8", "repeat runs produce byte-identical reports", ok);
}

// ---- C9: documented F-check incompleteness -------------------------------

void c9() {
  Alphabet a = make_alpha({"p", "q"});
  Sample s;
  s.alphabet = a;
  for (int i = 0; i < 5; ++i) {
    s.positives.push_back(word_of(a, {{"p"}, {"p"}, {"p"}}));
    s.positives.push_back(word_of(a, {{"q"}, {"q"}, {"q"}}));
  }
  s.negatives.push_back(word_of(a, {{"p"}, {"q"}}));
  FormulaPtr target = parse_formula("G p | G q");
  // sanity: the target itself is consistent, so only the search misses it
  bool ok = consistent(target, s);

  ValuationParams prm;
  prm.delta = Rational(4, 5);
  CompRankConfig cfg;
  cfg.max_depth = 2;
  auto ranked = comp_rank(s, cfg, prm);
  for (const auto& sf : ranked)
    if (equiv_small(sf.formula, target, {"p", "q"}, 5)) ok = false;
  std::printf("  C9 results on the partitioned sample: %zu\n", ranked.size());
  report("C9", "partitioned G p | G q stays unlearnable (known pruning gap)", ok);
}

}  // namespace

int main() {
  c1();
  c2();
  c3();
  c4();
  c5();
  c6();
  c7();
  c8();
  c9();
  std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
