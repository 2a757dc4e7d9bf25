#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltlqm/formula.hpp"

namespace ltlqm {

/// A letter is the set of propositions true at one time point, as a bitmask.
/// Capacity is 64 propositions per alphabet; load_sample rejects more.
using Letter = std::uint64_t;

class Alphabet {
 public:
  static constexpr std::size_t kMaxProps = 64;

  /// Returns the id of `name`, interning it first if unseen.
  int intern(const std::string& name);

  /// Returns the id of `name` or -1 if it was never interned.
  int id_of(const std::string& name) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

/// Finite word; positions are 1-based to match the temporal semantics.
struct Word {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool has(std::size_t t, int prop) const {
    return (letters[t - 1] >> prop) & 1u;
  }
  bool operator==(const Word& o) const { return letters == o.letters; }
};

struct Sample {
  std::vector<Word> positives;
  std::vector<Word> negatives;
  Alphabet alphabet;
};

/// Parses the trace file format: one time point per line as comma-separated
/// identifiers (`nil` for the empty letter), traces separated by a `--` line,
/// `#` starting a comment line. Propositions are interned in first-seen order.
std::vector<Word> parse_traces(const std::string& text, Alphabet& alphabet);

std::string print_traces(const std::vector<Word>& words, const Alphabet& alphabet);

/// Loads positives and optional negatives into one Sample with a unified
/// alphabet. Throws if any trace appears in both files.
Sample load_sample(const std::string& pos_path,
                   const std::optional<std::string>& neg_path);

/// All proposition names occurring in the sample, in interning order.
std::vector<std::string> alphabet(const Sample& s);

}  // namespace ltlqm
