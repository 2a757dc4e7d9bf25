// ltlqm: mine / synthesize / match / generate / evaluate LTL (GF fragment)
// specifications over finite traces.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ltlqm/comp_rank.hpp"
#include "ltlqm/formula.hpp"
#include "ltlqm/parser.hpp"
#include "ltlqm/smt_synth.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/trace_gen.hpp"
#include "ltlqm/valuation.hpp"

using json = nlohmann::ordered_json;
using namespace ltlqm;

namespace {

constexpr int kOk = 0, kUsage = 1, kUnsat = 2, kTimeout = 3, kSolverError = 4;

struct CommonOpts {
  std::string pos, neg;
  std::string r = "0.367879";
  std::string delta = "0.8";
  std::string conj = "product";
  std::string disj = "mean";
  std::string priority_file;
  std::string solver;
  double timeout = 1000;
  std::size_t depth = 2;
  std::size_t top = 10;
  bool as_json = false;
  bool no_timing = false;
  std::uint64_t seed = 0;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--r", o.r, "temporal discount r (rational or decimal)");
  cmd->add_option("--delta", o.delta, "structural penalty delta");
  cmd->add_option("--conj", o.conj, "conjunction scheme: product|min")
      ->check(CLI::IsMember({"product", "min"}));
  cmd->add_option("--disj", o.disj, "disjunction scheme: mean|max")
      ->check(CLI::IsMember({"mean", "max"}));
  cmd->add_option("--priority", o.priority_file, "priority map file: `name weight` lines");
  cmd->add_flag("--json", o.as_json, "emit a JSON report");
  cmd->add_flag("--no-timing", o.no_timing, "report wallTimeSec as 0 (reproducible output)");
}

ValuationParams make_params(const CommonOpts& o) {
  ValuationParams p;
  p.r = Rational::from_decimal(o.r);
  p.delta = Rational::from_decimal(o.delta);
  if (!(p.r.positive() && p.r.to_double() < 1.0)) throw error("r must be in (0,1)");
  if (!(p.delta.positive() && p.delta.to_double() < 1.0)) throw error("delta must be in (0,1)");
  p.conj = o.conj == "min" ? Conj::Min : Conj::Product;
  p.disj = o.disj == "max" ? Disj::Max : Disj::Mean;
  if (!o.priority_file.empty()) {
    std::ifstream f(o.priority_file);
    if (!f) throw error("cannot open priority file: " + o.priority_file);
    std::string name, weight;
    while (f >> name >> weight) p.priority[name] = Rational::from_decimal(weight);
  }
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Sample load(const CommonOpts& o) {
  if (o.pos.empty()) throw error("--pos is required");
  return load_sample(o.pos, o.neg.empty() ? std::nullopt : std::optional<std::string>(o.neg));
}

std::string digest_inputs(const CommonOpts& o, const std::string& extra = "") {
  std::string blob = o.pos.empty() ? "" : slurp(o.pos);
  if (!o.neg.empty()) blob += "\n--NEG--\n" + slurp(o.neg);
  blob += "\n" + o.r + "|" + o.delta + "|" + o.conj + "|" + o.disj + "|" +
          std::to_string(o.depth) + "|" + extra;
  if (!o.priority_file.empty()) blob += "|" + slurp(o.priority_file);
  return fnv1a(blob);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

json base_report(const std::string& mode, const CommonOpts& o, const std::string& digest,
                 double wall) {
  json rep;
  rep["schemaVersion"] = 1;
  rep["mode"] = mode;
  rep["inputsDigest"] = digest;
  rep["params"] = {{"r", o.r},     {"delta", o.delta}, {"conj", o.conj},
                   {"disj", o.disj}, {"depth", o.depth}};
  rep["wallTimeSec"] = o.no_timing ? 0.0 : wall;
  return rep;
}

void print_report(const json& rep, const CommonOpts& o) {
  if (o.as_json) {
    std::cout << rep.dump(2) << "\n";
    return;
  }
  std::cout << "mode: " << rep["mode"].get<std::string>() << "\n";
  std::cout << "inputs: " << rep["inputsDigest"].get<std::string>() << "\n";
  if (rep.contains("solverStatus"))
    std::cout << "status: " << rep["solverStatus"].get<std::string>() << "\n";
  if (rep.contains("results"))
    for (const auto& r : rep["results"])
      std::cout << "  " << r["score"].get<double>() << "  "
                << r["formulaSugared"].get<std::string>() << "\n";
  if (rep.contains("files"))
    for (const auto& f : rep["files"]) std::cout << "wrote " << f.get<std::string>() << "\n";
  if (rep.contains("table"))
    for (const auto& row : rep["table"])
      std::cout << "  " << row["preset"].get<std::string>() << " len "
                << row["length"].get<std::size_t>() << ": " << row["verdict"].get<std::string>()
                << "  " << row["formula"].get<std::string>() << "\n";
  std::cout << "wall time: " << rep["wallTimeSec"].get<double>() << " s\n";
}

json formula_entry(const FormulaPtr& f, double score) {
  return {{"formula", print(f)}, {"formulaSugared", print_sugared(f)}, {"score", score}};
}

int cmd_mine(const CommonOpts& o) {
  Timer timer;
  Sample s = load(o);
  ValuationParams params = make_params(o);
  CompRankConfig cfg;
  cfg.max_depth = std::max<std::size_t>(o.depth, 1);
  std::vector<ScoredFormula> ranked = comp_rank(s, cfg, params);
  json rep = base_report("mine", o, digest_inputs(o), timer.secs());
  rep["wallTimeSec"] = o.no_timing ? 0.0 : timer.secs();
  json results = json::array();
  for (std::size_t i = 0; i < ranked.size() && i < o.top; ++i)
    results.push_back(formula_entry(ranked[i].formula, ranked[i].score));
  rep["results"] = results;
  print_report(rep, o);
  return kOk;
}

int synth_like(const std::string& mode, const CommonOpts& o, const std::string& pattern_text) {
  Timer timer;
  Sample s = load(o);
  ValuationParams params = make_params(o);
  SynthOptions so;
  so.solver_path = o.solver;
  so.timeout_sec = o.timeout;
  SynthResult res;
  if (mode == "synth") {
    res = constraint_opt(s, o.depth, params, so);
  } else {
    res = pattern_synth(s, parse_pattern(pattern_text), params, so);
  }
  json rep = base_report(mode, o, digest_inputs(o, pattern_text), timer.secs());
  rep["wallTimeSec"] = o.no_timing ? 0.0 : timer.secs();
  switch (res.status) {
    case SynthStatus::Optimal: {
      rep["solverStatus"] = "optimal";
      rep["results"] = json::array({formula_entry(res.formula, res.objective)});
      print_report(rep, o);
      return kOk;
    }
    case SynthStatus::Unsat:
      rep["solverStatus"] = "unsat";
      print_report(rep, o);
      return kUnsat;
    case SynthStatus::Timeout:
      rep["solverStatus"] = "timeout";
      print_report(rep, o);
      return kTimeout;
    case SynthStatus::SolverError:
      rep["solverStatus"] = "error";
      rep["message"] = res.message;
      print_report(rep, o);
      std::cerr << "solver error: " << res.message << "\n";
      return kSolverError;
  }
  return kSolverError;
}

struct GenOpts {
  std::string preset, formula;
  std::string out_pos = "pos.txt", out_neg = "neg.txt";
  std::size_t num_pos = 20, num_neg = 1, length = 50, noise = 3;
  double p_noise = 0.5;
};

int cmd_gen(const CommonOpts& o, const GenOpts& g) {
  Timer timer;
  std::string text = g.formula;
  if (!g.preset.empty()) {
    auto f = preset_formula(g.preset);
    if (!f) throw error("unknown preset: " + g.preset);
    text = *f;
  }
  if (text.empty()) throw error("gen needs --preset or --formula");
  GenConfig cfg;
  cfg.generator = to_nnf(parse_formula(text));
  cfg.num_positive = g.num_pos;
  cfg.num_negative = g.num_neg;
  cfg.length = g.length;
  cfg.noise_vars = g.noise;
  cfg.p_noise = g.p_noise;
  cfg.seed = o.seed;
  Sample s = generate_sample(cfg);
  {
    std::ofstream f(g.out_pos, std::ios::binary);
    f << print_traces(s.positives, s.alphabet);
  }
  json files = json::array({g.out_pos});
  if (!s.negatives.empty()) {
    std::ofstream f(g.out_neg, std::ios::binary);
    f << print_traces(s.negatives, s.alphabet);
    files.push_back(g.out_neg);
  }
  json rep = base_report("gen", o, fnv1a(text + "|" + std::to_string(o.seed)), timer.secs());
  rep["wallTimeSec"] = o.no_timing ? 0.0 : timer.secs();
  rep["generator"] = text;
  rep["files"] = files;
  print_report(rep, o);
  return kOk;
}

// exhaustive equivalence on all words of length 1..max_len over the props
bool equivalent_small_words(const FormulaPtr& a, const FormulaPtr& b,
                            const std::vector<std::string>& props, std::size_t max_len) {
  Alphabet alpha;
  for (const std::string& p : props) alpha.intern(p);
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

struct EvalOpts {
  std::vector<std::string> presets;
  std::vector<std::size_t> lengths{50};
  std::string learner = "mine";
};

int cmd_eval(const CommonOpts& o, const EvalOpts& e) {
  Timer timer;
  std::vector<std::string> presets = e.presets;
  if (presets.empty() || (presets.size() == 1 && presets[0] == "all"))
    presets = preset_names();
  ValuationParams params = make_params(o);
  json table = json::array();
  for (const std::string& preset : presets) {
    auto text = preset_formula(preset);
    if (!text) throw error("unknown preset: " + preset);
    FormulaPtr gen = to_nnf(parse_formula(*text));
    for (std::size_t len : e.lengths) {
      Timer cell;
      GenConfig cfg;
      cfg.generator = gen;
      cfg.length = len;
      cfg.noise_vars = 3;
      cfg.p_noise = 0.5;
      cfg.seed = o.seed + std::hash<std::string>{}(preset) % 1000;
      Sample s = generate_sample(cfg);
      FormulaPtr learned;
      std::string status = "ok";
      if (e.learner == "mine") {
        CompRankConfig crc;
        crc.max_depth = std::max<std::size_t>(o.depth, 1);
        std::vector<ScoredFormula> ranked = comp_rank(s, crc, params);
        if (!ranked.empty()) learned = ranked[0].formula;
      } else {
        SynthOptions so;
        so.solver_path = o.solver;
        so.timeout_sec = o.timeout;
        SynthResult res = constraint_opt(s, o.depth, params, so);
        if (res.status == SynthStatus::Optimal) learned = res.formula;
        else status = res.status == SynthStatus::Timeout ? "timeout" : "unsat/error";
      }
      std::string verdict = "miss";
      if (learned) {
        if (equivalent_small_words(learned, gen, propositions(gen), 6)) {
          verdict = "exact";
        } else {
          // held-out check: 100 fresh positives from a different seed
          GenConfig held = cfg;
          held.num_positive = 100;
          held.num_negative = 0;
          held.seed = cfg.seed + 7919;
          Sample h = generate_sample(held);
          bool ok = true;
          for (const Word& w : h.positives)
            if (!holds(learned, w, h.alphabet, 1)) {
              ok = false;
              break;
            }
          if (ok) verdict = "consistent";
        }
      }
      table.push_back({{"preset", preset},
                       {"length", len},
                       {"learner", e.learner},
                       {"status", status},
                       {"formula", learned ? print_sugared(learned) : "-"},
                       {"verdict", verdict},
                       {"timeSec", o.no_timing ? 0.0 : cell.secs()}});
    }
  }
  json rep = base_report("eval", o, fnv1a(json(table).dump()), timer.secs());
  rep["wallTimeSec"] = o.no_timing ? 0.0 : timer.secs();
  rep["table"] = table;
  print_report(rep, o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantitative LTL (GF fragment) specification mining"};
  app.require_subcommand(1);
  CommonOpts o;
  GenOpts g;
  EvalOpts e;
  std::string pattern_text;

  auto* mine = app.add_subcommand("mine", "enumerative search, ranked by score");
  auto* synth = app.add_subcommand("synth", "optimal formula of bounded depth via SMT");
  auto* match = app.add_subcommand("match", "complete a pattern (?x placeholders, phi(d) holes)");
  auto* gen = app.add_subcommand("gen", "generate a synthetic sample from a formula");
  auto* eval = app.add_subcommand("eval", "benchmark harness over generator presets");

  for (CLI::App* c : {mine, synth, match}) {
    c->add_option("--pos", o.pos, "positive traces file")->required();
    c->add_option("--neg", o.neg, "negative traces file");
    c->add_option("--depth", o.depth, "search depth");
    add_param_flags(c, o);
  }
  mine->add_option("--top", o.top, "number of results to report");
  for (CLI::App* c : {synth, match, eval}) {
    c->add_option("--timeout", o.timeout, "solver timeout in seconds");
    c->add_option("--solver", o.solver, "SMT optimizer executable (default $LTLQM_SOLVER)");
  }
  match->add_option("--pattern", pattern_text, "pattern text")->required();

  gen->add_option("--preset", g.preset, "generator preset name");
  gen->add_option("--formula", g.formula, "generator formula text");
  gen->add_option("--out-pos", g.out_pos, "output file for positive traces");
  gen->add_option("--out-neg", g.out_neg, "output file for negative traces");
  gen->add_option("--num-pos", g.num_pos, "number of positive traces");
  gen->add_option("--num-neg", g.num_neg, "number of negative traces");
  gen->add_option("--length", g.length, "trace length");
  gen->add_option("--noise-vars", g.noise, "number of noise propositions");
  gen->add_option("--p-noise", g.p_noise, "per-position noise probability");
  gen->add_option("--seed", o.seed, "generation seed");
  gen->add_flag("--json", o.as_json, "emit a JSON report");
  gen->add_flag("--no-timing", o.no_timing, "report wallTimeSec as 0");

  eval->add_option("--preset", e.presets, "preset names (or `all`)");
  eval->add_option("--lengths", e.lengths, "trace lengths to test");
  eval->add_option("--learner", e.learner, "mine|synth")
      ->check(CLI::IsMember({"mine", "synth"}));
  eval->add_option("--depth", o.depth, "search depth");
  eval->add_option("--seed", o.seed, "generation seed");
  add_param_flags(eval, o);

  CLI11_PARSE(app, argc, argv);

  // Solver-backed paths default to the linear `min` conjunction: the product
  // scheme makes the optimization objective nonlinear, which the bundled
  // optimizer cannot maximize in reasonable time. `--conj product` still
  // forces it for solvers that can.
  if ((synth->parsed() && !synth->count("--conj")) ||
      (match->parsed() && !match->count("--conj")) ||
      (eval->parsed() && e.learner == "synth" && !eval->count("--conj")))
    o.conj = "min";

  try {
    if (mine->parsed()) return cmd_mine(o);
    if (synth->parsed()) return synth_like("synth", o, "");
    if (match->parsed()) return synth_like("match", o, pattern_text);
    if (gen->parsed()) return cmd_gen(o, g);
    if (eval->parsed()) return cmd_eval(o, e);
  } catch (const parse_error& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kUsage;
  } catch (const error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
