#include "ltlqm/trace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ltlqm {

int Alphabet::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  if (names_.size() >= kMaxProps)
    throw error("alphabet overflow: more than 64 distinct propositions");
  const int id = static_cast<int>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

int Alphabet::id_of(const std::string& name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<Word> parse_traces(const std::string& text, Alphabet& alpha) {
  std::vector<Word> words;
  Word current;
  bool saw_content = false;
  int lineno = 0;

  auto flush = [&]() {
    if (current.letters.empty())
      throw error("empty trace block before line " + std::to_string(lineno));
    words.push_back(std::move(current));
    current = Word{};
  };

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    saw_content = true;
    if (line == "--") {
      flush();
      continue;
    }
    Letter letter = 0;
    std::stringstream parts(line);
    std::string item;
    bool nil_seen = false, any = false;
    while (std::getline(parts, item, ',')) {
      item = trim(item);
      any = true;
      if (item == "nil") {
        nil_seen = true;
        continue;
      }
      if (!valid_ident(item))
        throw error("malformed identifier `" + item + "` at line " + std::to_string(lineno));
      letter |= Letter{1} << alpha.intern(item);
    }
    if (!any) throw error("empty letter at line " + std::to_string(lineno) + "; use `nil`");
    if (nil_seen && letter != 0)
      throw error("`nil` mixed with propositions at line " + std::to_string(lineno));
    current.letters.push_back(letter);
  }
  if (!saw_content) throw error("EmptyInput: no traces found");
  flush();
  return words;
}

std::string print_traces(const std::vector<Word>& words, const Alphabet& alpha) {
  std::string out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (w) out += "--\n";
    for (Letter l : words[w].letters) {
      if (l == 0) {
        out += "nil\n";
        continue;
      }
      bool first = true;
      for (std::size_t p = 0; p < alpha.size(); ++p) {
        if ((l >> p) & 1u) {
          if (!first) out += ",";
          out += alpha.name(static_cast<int>(p));
          first = false;
        }
      }
      out += "\n";
    }
  }
  return out;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error("cannot open trace file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

Sample load_sample(const std::string& pos_path,
                   const std::optional<std::string>& neg_path) {
  Sample s;
  s.positives = parse_traces(slurp(pos_path), s.alphabet);
  if (neg_path) s.negatives = parse_traces(slurp(*neg_path), s.alphabet);
  for (std::size_t i = 0; i < s.positives.size(); ++i)
    for (std::size_t j = 0; j < s.negatives.size(); ++j)
      if (s.positives[i] == s.negatives[j])
        throw error("SampleOverlap: positive trace " + std::to_string(i + 1) +
                    " equals negative trace " + std::to_string(j + 1));
  return s;
}

std::vector<std::string> alphabet(const Sample& s) { return s.alphabet.names(); }

}  // namespace ltlqm
