#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ltlqm/comp_rank.hpp"
#include "ltlqm/parser.hpp"
#include "ltlqm/trace.hpp"
#include "ltlqm/trace_gen.hpp"
#include "ltlqm/valuation.hpp"
#include "test_util.hpp"

using namespace ltlqm;
using namespace testutil;

namespace {

ValuationParams fixture_params() {
  ValuationParams p;
  p.delta = Rational(9, 10);
  return p;
}

// Reference evaluator, written straight from the defining equations with no
// sharing or vectorization. The library implementation must agree with it.
double value_ref(const FormulaPtr& f, const Word& w, const Alphabet& a,
                 std::size_t t, const ValuationParams& prm) {
  const double d = prm.delta.to_double();
  const double r = prm.r.to_double();
  switch (f->kind) {
    case FKind::True:
      return 1.0;
    case FKind::Atom:
      return a.id_of(f->prop) >= 0 && w.has(t, a.id_of(f->prop)) ? prm.pi(f->prop) : 0.0;
    case FKind::NegAtom:
      return a.id_of(f->prop) >= 0 && w.has(t, a.id_of(f->prop)) ? 0.0 : prm.pi(f->prop);
    case FKind::And: {
      double l = value_ref(f->left, w, a, t, prm), rr = value_ref(f->right, w, a, t, prm);
      return d * (prm.conj == Conj::Product ? l * rr : std::min(l, rr));
    }
    case FKind::Or: {
      double l = value_ref(f->left, w, a, t, prm), rr = value_ref(f->right, w, a, t, prm);
      return d * (prm.disj == Disj::Mean ? (l + rr) / 2.0 : std::max(l, rr));
    }
    case FKind::G: {
      double sum = 0.0, disc = 1.0;
      for (std::size_t u = t; u <= w.length(); ++u, disc *= r) {
        double v = value_ref(f->left, w, a, u, prm);
        if (v <= 0.0) return 0.0;
        sum += disc * v;
      }
      return d * sum;
    }
    case FKind::F: {
      double disc = 1.0;
      for (std::size_t u = t; u <= w.length(); ++u, disc *= r) {
        double v = value_ref(f->left, w, a, u, prm);
        if (v > 0.0) return d * disc * v;
      }
      return 0.0;
    }
    default:
      throw error("value_ref: not NNF-GF");
  }
}

}  // namespace

TEST_CASE("published worked values") {
  ValuationParams prm = fixture_params();
  Alphabet a = make_alpha({"a"});

  Word w4 = word_of(a, {{"a"}, {"a"}, {"a"}, {"a"}});
  FormulaPtr ga = parse_formula("G a");
  CHECK(value(ga, w4, a, prm) == doctest::Approx(1.3977).epsilon(1e-3));

  Word w2 = word_of(a, {{"a"}, {"a"}});
  CHECK(value(ga, w2, a, prm) == doctest::Approx(1.23109).epsilon(1e-4));

  Sample s;
  s.alphabet = a;
  s.positives = {w4, w2};
  CHECK(value_sample(ga, s, prm) == doctest::Approx(2.6288).epsilon(1e-3));

  // F with the witness 0..3 steps away: delta * r^k
  Alphabet ab = make_alpha({"a", "b"});
  FormulaPtr fa = parse_formula("F a");
  for (int k = 0; k <= 3; ++k) {
    std::vector<std::vector<std::string>> ls(static_cast<std::size_t>(k), {"b"});
    ls.push_back({"a"});
    double expect[] = {0.9, 0.331, 0.1218, 0.0448};
    CHECK(value(fa, word_of(ab, ls), ab, prm) ==
          doctest::Approx(expect[k]).epsilon(2e-3));
  }
}

TEST_CASE("valuation matches the reference evaluator") {
  std::mt19937_64 rng(11);
  Alphabet a = make_alpha({"p", "q", "r"});
  for (int scheme = 0; scheme < 4; ++scheme) {
    ValuationParams prm = fixture_params();
    prm.conj = scheme & 1 ? Conj::Min : Conj::Product;
    prm.disj = scheme & 2 ? Disj::Max : Disj::Mean;
    prm.priority["q"] = Rational(3, 2);
    for (int i = 0; i < 250; ++i) {
      FormulaPtr f = random_gf(rng, 3, {"p", "q", "r"});
      Word w = testutil::random_word(rng, 1 + rng() % 7, 3);
      auto vec = value_vector(f, w, a, prm);
      REQUIRE(vec.size() == w.length());
      for (std::size_t t = 1; t <= w.length(); ++t)
        CHECK(vec[t - 1] == doctest::Approx(value_ref(f, w, a, t, prm)).epsilon(1e-12));
    }
  }
}

TEST_CASE("positivity iff satisfaction") {
  std::mt19937_64 rng(13);
  Alphabet a = make_alpha({"p", "q"});
  for (int scheme = 0; scheme < 4; ++scheme) {
    ValuationParams prm = fixture_params();
    prm.conj = scheme & 1 ? Conj::Min : Conj::Product;
    prm.disj = scheme & 2 ? Disj::Max : Disj::Mean;
    for (int i = 0; i < 250; ++i) {
      FormulaPtr f = random_gf(rng, 3, {"p", "q"});
      Word w = testutil::random_word(rng, 1 + rng() % 6, 2);
      for (std::size_t t = 1; t <= w.length(); ++t)
        CHECK((value_at(f, w, a, t, prm) > 0.0) == holds(f, w, a, t));
    }
  }
}

TEST_CASE("valuation identities") {
  ValuationParams prm = fixture_params();
  std::mt19937_64 rng(17);
  Alphabet a = make_alpha({"p", "q"});
  const double d = prm.delta.to_double();

  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = random_gf(rng, 2, {"p", "q"});
    Word w = testutil::random_word(rng, 2 + rng() % 5, 2);
    // F F f = delta * F f (the inner F fires immediately at the witness)
    CHECK(value(f_f(f_f(f)), w, a, prm) ==
          doctest::Approx(d * value(f_f(f), w, a, prm)).epsilon(1e-12));
    // f & f under Min conjunction = delta * f
    ValuationParams mn = prm;
    mn.conj = Conj::Min;
    CHECK(value(f_and(f, f), w, a, mn) ==
          doctest::Approx(d * value(f, w, a, mn)).epsilon(1e-12));
    // f | f under both disjunctions = delta * f
    CHECK(value(f_or(f, f), w, a, prm) ==
          doctest::Approx(d * value(f, w, a, prm)).epsilon(1e-12));
  }

  // G a grows with the satisfying prefix length
  FormulaPtr ga = parse_formula("G a");
  Alphabet aa = make_alpha({"a"});
  double prev = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    Word w;
    w.letters.assign(n, 1);
    double v = value(ga, w, aa, prm);
    CHECK(v > prev);
    prev = v;
  }

  // priority scales literal values linearly
  ValuationParams wp = prm;
  wp.priority["a"] = Rational(10, 1);
  Word w1 = word_of(aa, {{"a"}});
  CHECK(value(parse_formula("a"), w1, aa, wp) == doctest::Approx(10.0));
  CHECK(value(parse_formula("!a"), w1, aa, wp) == doctest::Approx(0.0));

  CHECK_THROWS_AS(value(parse_formula("X p"), w1, aa, prm), error);
  CHECK_THROWS_AS(value(parse_formula("p U q"), w1, aa, prm), error);
}

TEST_CASE("f_check and compose") {
  Alphabet a = make_alpha({"p", "q"});
  Sample s;
  s.alphabet = a;
  s.positives = {word_of(a, {{"q"}, {"p"}}), word_of(a, {{"p"}})};
  CHECK(f_check(parse_formula("p"), s));
  CHECK(!f_check(parse_formula("p & q"), s));  // never both at once

  auto composed = compose({parse_formula("p"), parse_formula("!q")});
  std::vector<std::string> got;
  for (auto& f : composed) got.push_back(print(f));
  std::sort(got.begin(), got.end());
  // G/F of each, and one And / one Or per unordered pair (p&p etc. collapse away)
  CHECK(std::count(got.begin(), got.end(), "(G p)") == 1);
  CHECK(std::count(got.begin(), got.end(), "(F !q)") == 1);
  CHECK(std::count(got.begin(), got.end(), "(!q & p)") == 1);
  CHECK(std::count(got.begin(), got.end(), "(!q | p)") == 1);
  CHECK(got.size() == 6);
}

TEST_CASE("search recovers an invariant") {
  GenConfig g;
  g.generator = parse_formula("G p");
  g.num_positive = 10;
  g.num_negative = 5;
  g.length = 12;
  g.noise_vars = 1;
  g.p_noise = 0.5;
  g.seed = 3;
  Sample s = generate_sample(g);

  CompRankConfig cfg;
  cfg.max_depth = 1;
  ValuationParams prm = fixture_params();
  auto ranked = comp_rank(s, cfg, prm);
  REQUIRE(!ranked.empty());

  // every result is consistent, ordering is score desc / size asc / print asc
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    CHECK(ranked[i].consistent);
    CHECK(consistent(ranked[i].formula, s));
    if (i) {
      auto& a = ranked[i - 1];
      auto& b = ranked[i];
      bool ordered = a.score > b.score ||
                     (a.score == b.score && size(a.formula) < size(b.formula)) ||
                     (a.score == b.score && size(a.formula) == size(b.formula) &&
                      print(a.formula) <= print(b.formula));
      CHECK(ordered);
    }
  }
  // G p should appear, and scores should match a fresh evaluation
  bool found = false;
  for (auto& sf : ranked) {
    CHECK(sf.score == doctest::Approx(value_sample(sf.formula, s, prm)).epsilon(1e-9));
    if (print(sf.formula) == "(G p)") found = true;
  }
  CHECK(found);

  CHECK_THROWS_AS(comp_rank(Sample{}, cfg, prm), error);
}

TEST_CASE("sample generation") {
  for (const std::string& name : preset_names()) {
    auto text = preset_formula(name);
    REQUIRE(text.has_value());
    FormulaPtr f = to_nnf(parse_formula(*text));
    CHECK(is_nnf_gf(f));
  }
  CHECK(!preset_formula("nope").has_value());

  GenConfig g;
  g.generator = to_nnf(parse_formula(*preset_formula("response1")));
  g.num_positive = 15;
  g.num_negative = 6;
  g.length = 40;
  g.noise_vars = 2;
  g.p_noise = 0.5;
  g.seed = 99;
  Sample s = generate_sample(g);
  REQUIRE(s.positives.size() == 15);
  REQUIRE(s.negatives.size() == 6);
  for (auto& w : s.positives) {
    CHECK(w.length() == 40);
    CHECK(holds(g.generator, w, s.alphabet, 1));
  }
  for (auto& w : s.negatives) CHECK(!holds(g.generator, w, s.alphabet, 1));
  // noise props exist and appear somewhere
  CHECK(s.alphabet.id_of("noise0") >= 0);
  CHECK(s.alphabet.id_of("noise1") >= 0);

  // determinism: same seed, byte-identical traces
  Sample s2 = generate_sample(g);
  CHECK(print_traces(s.positives, s.alphabet) == print_traces(s2.positives, s2.alphabet));
  CHECK(print_traces(s.negatives, s.alphabet) == print_traces(s2.negatives, s2.alphabet));
  g.seed = 100;
  Sample s3 = generate_sample(g);
  CHECK(print_traces(s.positives, s.alphabet) != print_traces(s3.positives, s3.alphabet));

  // unsatisfiable generator fails cleanly
  GenConfig bad;
  bad.generator = to_nnf(parse_formula("p & !p"));
  bad.num_positive = 1;
  bad.length = 5;
  bad.max_attempts = 20;
  CHECK_THROWS_AS(generate_sample(bad), error);
}
