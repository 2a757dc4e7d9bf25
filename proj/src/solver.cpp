#include "ltlqm/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "ltlqm/formula.hpp"

namespace ltlqm {

std::string solver_from_env() {
  const char* p = std::getenv("LTLQM_SOLVER");
  return p ? std::string(p) : std::string();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& suffix) {
    char buf[] = "/tmp/ltlqm.XXXXXX";
    int fd = mkstemp(buf);
    if (fd < 0) throw error("cannot create temporary file");
    close(fd);
    path = std::string(buf) + suffix;
    std::rename(buf, path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

SolverOutcome run_solver(const std::string& solver_path, const std::string& script,
                         double timeout_sec) {
  SolverOutcome res;
  if (solver_path.empty()) {
    res.kind = SolverOutcome::Kind::Error;
    res.message = "no solver configured (set LTLQM_SOLVER or pass --solver)";
    return res;
  }
  TempFile in(".smt2"), out(".out");
  {
    std::ofstream f(in.path, std::ios::binary);
    f << script;
  }
  const long secs = std::max(1L, static_cast<long>(timeout_sec + 0.999));
  std::string cmd = "timeout -k 5 " + std::to_string(secs) + "s " +
                    shell_quote(solver_path) + " " + shell_quote(in.path) + " > " +
                    shell_quote(out.path) + " 2>&1";
  int rc = std::system(cmd.c_str());
  res.output = read_file(out.path);
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  if (code == 124 || code == 137) {
    res.kind = SolverOutcome::Kind::Timeout;
    return res;
  }
  if (code != 0) {
    res.kind = SolverOutcome::Kind::Error;
    res.message = "solver exited with code " + std::to_string(code);
    return res;
  }
  // first result token decides
  std::istringstream lines(res.output);
  std::string tok;
  while (lines >> tok) {
    if (tok == "sat") {
      res.kind = SolverOutcome::Kind::Optimal;
      return res;
    }
    if (tok == "unsat") {
      res.kind = SolverOutcome::Kind::Unsat;
      return res;
    }
    if (tok == "unknown" || tok == "timeout") {
      res.kind = SolverOutcome::Kind::Timeout;
      return res;
    }
  }
  res.kind = SolverOutcome::Kind::Error;
  res.message = "unrecognized solver output";
  return res;
}

namespace {

// Minimal s-expression reader sufficient for get-model output.
struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_atom = false;
};

Sexp parse_sexp(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  Sexp e;
  if (i >= s.size()) return e;
  if (s[i] == '(') {
    ++i;
    while (true) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= s.size() || s[i] == ')') {
        if (i < s.size()) ++i;
        break;
      }
      e.list.push_back(parse_sexp(s, i));
    }
    return e;
  }
  e.is_atom = true;
  std::size_t start = i;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')')
    ++i;
  e.atom = s.substr(start, i - start);
  return e;
}

double numeric_of(const Sexp& e) {
  if (e.is_atom) return std::stod(e.atom);
  if (e.list.size() == 3 && e.list[0].atom == "/")
    return numeric_of(e.list[1]) / numeric_of(e.list[2]);
  if (e.list.size() == 2 && e.list[0].atom == "-") return -numeric_of(e.list[1]);
  throw error("cannot read numeric model value");
}

}  // namespace

bool Model::bool_of(const std::string& name) const {
  auto it = bools.find(name);
  return it != bools.end() && it->second;
}

double Model::real_of(const std::string& name) const {
  auto it = reals.find(name);
  if (it == reals.end()) throw error("model has no value for " + name);
  return it->second;
}

Model parse_model(const std::string& text) {
  Model m;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t at = text.find("(define-fun", i);
    if (at == std::string::npos) break;
    std::size_t j = at;
    Sexp e = parse_sexp(text, j);
    i = j;
    if (e.list.size() < 5) continue;
    const std::string& name = e.list[1].atom;
    const Sexp& value = e.list[4];
    if (value.is_atom && (value.atom == "true" || value.atom == "false")) {
      m.bools[name] = value.atom == "true";
    } else {
      try {
        m.reals[name] = numeric_of(value);
      } catch (const std::exception&) {
        // non-numeric define-fun (arrays etc.): ignore
      }
    }
  }
  return m;
}

}  // namespace ltlqm
