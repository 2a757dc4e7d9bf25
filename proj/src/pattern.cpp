#include "ltlqm/pattern.hpp"

#include <algorithm>

namespace ltlqm {

PatternPtr p_node(PKind k, PatternPtr l, PatternPtr r) {
  return std::make_shared<const Pattern>(k, "", 0, -1, std::move(l), std::move(r));
}
PatternPtr p_atom(const std::string& name) {
  return std::make_shared<const Pattern>(PKind::Atom, name, 0, -1, nullptr, nullptr);
}
PatternPtr p_placeholder(const std::string& name) {
  return std::make_shared<const Pattern>(PKind::Placeholder, name, 0, -1, nullptr, nullptr);
}
PatternPtr p_hole(int depth, int id) {
  if (depth < 0) throw error("hole depth must be non-negative");
  return std::make_shared<const Pattern>(PKind::Hole, "", depth, id, nullptr, nullptr);
}

namespace {

PatternPtr leaf(PKind k, const std::string& name, int hd = 0, int hid = -1) {
  return std::make_shared<const Pattern>(k, name, hd, hid, nullptr, nullptr);
}

struct Expander {
  std::vector<int> hole_depths;
  std::vector<std::string> placeholders;
  std::vector<IffScope> scopes;

  void note_placeholder(const std::string& n) {
    if (std::find(placeholders.begin(), placeholders.end(), n) == placeholders.end())
      placeholders.push_back(n);
  }

  void note_hole(int id, int d) {
    if (id >= static_cast<int>(hole_depths.size())) hole_depths.resize(id + 1, 0);
    hole_depths[id] = d;
  }

  void collect(const PatternPtr& p, SideUse& out) {
    if (!p) return;
    switch (p->kind) {
      case PKind::Atom:
      case PKind::NegAtom:
        out.props.insert(p->name);
        break;
      case PKind::Placeholder:
      case PKind::NegPlaceholder:
        out.placeholders.insert(p->name);
        break;
      case PKind::Hole:
      case PKind::NegHole:
        out.holes.insert(p->hole_id);
        break;
      default:
        break;
    }
    collect(p->left, out);
    collect(p->right, out);
  }

  PatternPtr expand(const PatternPtr& p, bool negated) {
    switch (p->kind) {
      case PKind::True:
        if (negated) throw error("cannot negate `true` within this fragment");
        return p;
      case PKind::Atom:
        return negated ? leaf(PKind::NegAtom, p->name) : p;
      case PKind::NegAtom:
        return negated ? leaf(PKind::Atom, p->name) : p;
      case PKind::Placeholder:
        note_placeholder(p->name);
        return negated ? leaf(PKind::NegPlaceholder, p->name) : p;
      case PKind::NegPlaceholder:
        note_placeholder(p->name);
        return negated ? leaf(PKind::Placeholder, p->name) : p;
      case PKind::Hole:
        note_hole(p->hole_id, p->hole_depth);
        return negated ? leaf(PKind::NegHole, "", p->hole_depth, p->hole_id) : p;
      case PKind::NegHole:
        note_hole(p->hole_id, p->hole_depth);
        return negated ? leaf(PKind::Hole, "", p->hole_depth, p->hole_id) : p;
      case PKind::Not:
        return expand(p->left, !negated);
      case PKind::And:
      case PKind::Or: {
        // sequence the recursions: argument evaluation order is unspecified
        // and placeholders must be recorded in first-occurrence order
        PatternPtr l = expand(p->left, negated);
        PatternPtr r = expand(p->right, negated);
        const bool conj = (p->kind == PKind::And) != negated;
        return p_node(conj ? PKind::And : PKind::Or, std::move(l), std::move(r));
      }
      case PKind::G:
        return p_node(negated ? PKind::F : PKind::G, expand(p->left, negated));
      case PKind::F:
        return p_node(negated ? PKind::G : PKind::F, expand(p->left, negated));
      case PKind::X:
      case PKind::U:
        if (negated) throw error("NonNNFConvertible: negation over X/U");
        throw error("X/U are not allowed in synthesis patterns");
      case PKind::Implies: {
        PatternPtr l = expand(p->left, !negated);
        PatternPtr r = expand(p->right, negated);
        return p_node(negated ? PKind::And : PKind::Or, std::move(l), std::move(r));
      }
      case PKind::Iff: {
        IffScope scope;
        collect(p->left, scope.left);
        collect(p->right, scope.right);
        scopes.push_back(scope);
        PatternPtr na = expand(p->left, true);
        PatternPtr b = expand(p->right, false);
        PatternPtr a = expand(p->left, false);
        PatternPtr nb = expand(p->right, true);
        if (!negated) {
          // (!a | b) & (a | !b)
          return p_node(PKind::And, p_node(PKind::Or, std::move(na), std::move(b)),
                        p_node(PKind::Or, std::move(a), std::move(nb)));
        }
        // (a & !b) | (!a & b)
        return p_node(PKind::Or, p_node(PKind::And, std::move(a), std::move(nb)),
                      p_node(PKind::And, std::move(na), std::move(b)));
      }
    }
    throw error("unreachable");
  }
};

}  // namespace

ExpandedPattern expand_pattern(const PatternPtr& p) {
  Expander ex;
  ExpandedPattern out;
  out.root = ex.expand(p, false);
  out.hole_depths = std::move(ex.hole_depths);
  out.placeholders = std::move(ex.placeholders);
  out.iff_scopes = std::move(ex.scopes);
  return out;
}

bool pattern_has_unknowns(const PatternPtr& p) {
  if (!p) return false;
  switch (p->kind) {
    case PKind::Placeholder:
    case PKind::NegPlaceholder:
    case PKind::Hole:
    case PKind::NegHole:
      return true;
    default:
      return pattern_has_unknowns(p->left) || pattern_has_unknowns(p->right);
  }
}

std::string print(const PatternPtr& p) {
  switch (p->kind) {
    case PKind::True:
      return "true";
    case PKind::Atom:
      return p->name;
    case PKind::NegAtom:
      return "!" + p->name;
    case PKind::Not:
      return "!(" + print(p->left) + ")";
    case PKind::Placeholder:
      return "?" + p->name;
    case PKind::NegPlaceholder:
      return "!?" + p->name;
    case PKind::Hole:
      return "phi(" + std::to_string(p->hole_depth) + ")";
    case PKind::NegHole:
      return "!phi(" + std::to_string(p->hole_depth) + ")";
    case PKind::And:
      return "(" + print(p->left) + " & " + print(p->right) + ")";
    case PKind::Or:
      return "(" + print(p->left) + " | " + print(p->right) + ")";
    case PKind::Implies:
      return "(" + print(p->left) + " -> " + print(p->right) + ")";
    case PKind::Iff:
      return "(" + print(p->left) + " <-> " + print(p->right) + ")";
    case PKind::G:
      return "(G " + print(p->left) + ")";
    case PKind::F:
      return "(F " + print(p->left) + ")";
    case PKind::X:
      return "(X " + print(p->left) + ")";
    case PKind::U:
      return "(" + print(p->left) + " U " + print(p->right) + ")";
  }
  throw error("unreachable");
}

}  // namespace ltlqm
