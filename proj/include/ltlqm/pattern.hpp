#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ltlqm/formula.hpp"

namespace ltlqm {

enum class PKind : std::uint8_t {
  True,
  Atom,
  NegAtom,
  Not,
  And,
  Or,
  G,
  F,
  X,
  U,
  Implies,
  Iff,
  Placeholder,
  NegPlaceholder,
  Hole,     // phi(d): unknown subformula of depth <= d
  NegHole,  // negation of a hole; produced by Iff/Implies expansion
};

class Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

/// Formula template node. Placeholder identity is by name; a Hole carries the
/// id of its occurrence so NegHole can refer back to the same unknown.
class Pattern {
 public:
  PKind kind;
  std::string name;   // Atom/NegAtom/Placeholder/NegPlaceholder
  int hole_depth = 0;
  int hole_id = -1;
  PatternPtr left;
  PatternPtr right;

  Pattern(PKind k, std::string n, int hd, int hid, PatternPtr l, PatternPtr r)
      : kind(k), name(std::move(n)), hole_depth(hd), hole_id(hid),
        left(std::move(l)), right(std::move(r)) {}
};

PatternPtr p_node(PKind k, PatternPtr l, PatternPtr r = nullptr);
PatternPtr p_atom(const std::string& name);
PatternPtr p_placeholder(const std::string& name);
PatternPtr p_hole(int depth, int id);

/// What one side of an `<->` may refer to; used to keep the two sides over
/// disjoint propositions during synthesis (an iff whose sides share a
/// proposition is degenerate: the best fit is always the echo of the other
/// side).
struct SideUse {
  std::set<std::string> props;
  std::set<std::string> placeholders;
  std::set<int> holes;
};

struct IffScope {
  SideUse left;
  SideUse right;
};

/// Sugar-free, negation-normal pattern plus bookkeeping for encoding.
struct ExpandedPattern {
  PatternPtr root;
  std::vector<int> hole_depths;            // indexed by hole id
  std::vector<std::string> placeholders;   // first-occurrence order
  std::vector<IffScope> iff_scopes;
};

/// Removes ->/<->/! sugar and pushes negation to the leaves. Negation of an
/// unknown subformula becomes a NegHole tied to the original hole.
ExpandedPattern expand_pattern(const PatternPtr& p);

bool pattern_has_unknowns(const PatternPtr& p);

std::string print(const PatternPtr& p);

}  // namespace ltlqm
