#include "ltlqm/smt_synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ltlqm {

namespace {

enum class LKind { And, Or, G, F, Lit, NegLit, Ph, NegPh, TrueL, Noop };

struct Label {
  LKind kind;
  int prop = -1;  // index into Skeleton::alphabet
  int ph = -1;    // index into Skeleton::placeholders
};

LKind dual_kind(LKind k) {
  switch (k) {
    case LKind::And: return LKind::Or;
    case LKind::Or: return LKind::And;
    case LKind::G: return LKind::F;
    case LKind::F: return LKind::G;
    case LKind::Lit: return LKind::NegLit;
    case LKind::NegLit: return LKind::Lit;
    case LKind::Ph: return LKind::NegPh;
    case LKind::NegPh: return LKind::Ph;
    case LKind::Noop: return LKind::Noop;
    case LKind::TrueL: break;
  }
  throw error("cannot dualize `true`");
}

}  // namespace

// Variable-owning label tree (owners) plus the score tree (nodes). A hole
// referenced both positively and under negation yields two score subtrees
// sharing one owner subtree; the dual one reads the same label booleans with
// dualized semantics.
class Skeleton {
 public:
  struct Owner {
    int left = -1, right = -1;
    std::vector<Label> domain;
    bool has_noop = false;
  };
  struct SNode {
    int left = -1, right = -1;
    int owner = -1;
    bool dual = false;
  };
  std::vector<Owner> owners;
  std::vector<SNode> nodes;  // node 0 is the root
  std::vector<std::string> placeholders;
  std::vector<std::string> alphabet;  // sample propositions first
  std::size_t n_sample_props = 0;
  std::map<int, std::vector<int>> hole_owners;  // hole id -> owner indexes
  std::vector<IffScope> scopes;
};

namespace {

struct Builder {
  Skeleton sk;
  const ExpandedPattern& ep;
  std::size_t depth_cap;
  std::map<int, int> hole_root;  // hole id -> owner root

  Builder(const ExpandedPattern& e, const Sample& s, std::size_t dcap)
      : ep(e), depth_cap(dcap) {
    sk.alphabet = s.alphabet.names();
    sk.n_sample_props = sk.alphabet.size();
    sk.placeholders = ep.placeholders;
    sk.scopes = ep.iff_scopes;
  }

  int intern_prop(const std::string& name) {
    for (std::size_t i = 0; i < sk.alphabet.size(); ++i)
      if (sk.alphabet[i] == name) return static_cast<int>(i);
    sk.alphabet.push_back(name);
    return static_cast<int>(sk.alphabet.size() - 1);
  }

  int ph_index(const std::string& name) {
    for (std::size_t i = 0; i < sk.placeholders.size(); ++i)
      if (sk.placeholders[i] == name) return static_cast<int>(i);
    throw error("unknown placeholder " + name);
  }

  int fixed_owner(Label l, int left = -1, int right = -1) {
    Skeleton::Owner o;
    o.left = left;
    o.right = right;
    o.domain = {l};
    sk.owners.push_back(std::move(o));
    return static_cast<int>(sk.owners.size() - 1);
  }

  int free_owner(int depth, std::vector<int>& collect) {
    Skeleton::Owner o;
    if (depth > 0) {
      o.left = free_owner(depth - 1, collect);
      o.right = free_owner(depth - 1, collect);
      for (LKind k : {LKind::And, LKind::Or, LKind::G, LKind::F})
        o.domain.push_back({k, -1, -1});
    }
    for (std::size_t q = 0; q < sk.n_sample_props; ++q)
      o.domain.push_back({LKind::Lit, static_cast<int>(q), -1});
    for (std::size_t q = 0; q < sk.n_sample_props; ++q)
      o.domain.push_back({LKind::NegLit, static_cast<int>(q), -1});
    o.domain.push_back({LKind::Noop, -1, -1});
    o.has_noop = true;
    sk.owners.push_back(std::move(o));
    collect.push_back(static_cast<int>(sk.owners.size() - 1));
    return static_cast<int>(sk.owners.size() - 1);
  }

  int snode(int owner, bool dual, int left = -1, int right = -1) {
    sk.nodes.push_back({left, right, owner, dual});
    return static_cast<int>(sk.nodes.size() - 1);
  }

  int mirror(int owner, bool dual) {
    const Skeleton::Owner& o = sk.owners[static_cast<std::size_t>(owner)];
    int l = o.left >= 0 ? mirror(o.left, dual) : -1;
    int r = o.right >= 0 ? mirror(o.right, dual) : -1;
    return snode(owner, dual, l, r);
  }

  int build(const PatternPtr& p) {
    switch (p->kind) {
      case PKind::True:
        return snode(fixed_owner({LKind::TrueL, -1, -1}), false);
      case PKind::Atom:
        return snode(fixed_owner({LKind::Lit, intern_prop(p->name), -1}), false);
      case PKind::NegAtom:
        return snode(fixed_owner({LKind::NegLit, intern_prop(p->name), -1}), false);
      case PKind::Placeholder:
        return snode(fixed_owner({LKind::Ph, -1, ph_index(p->name)}), false);
      case PKind::NegPlaceholder:
        return snode(fixed_owner({LKind::NegPh, -1, ph_index(p->name)}), false);
      case PKind::G:
      case PKind::F: {
        int c = build(p->left);
        int o = fixed_owner({p->kind == PKind::G ? LKind::G : LKind::F, -1, -1},
                            sk.nodes[static_cast<std::size_t>(c)].owner);
        return snode(o, false, c);
      }
      case PKind::And:
      case PKind::Or: {
        int l = build(p->left);
        int r = build(p->right);
        int o = fixed_owner({p->kind == PKind::And ? LKind::And : LKind::Or, -1, -1},
                            sk.nodes[static_cast<std::size_t>(l)].owner,
                            sk.nodes[static_cast<std::size_t>(r)].owner);
        return snode(o, false, l, r);
      }
      case PKind::Hole:
      case PKind::NegHole: {
        auto it = hole_root.find(p->hole_id);
        if (it == hole_root.end()) {
          const int d = ep.hole_depths[static_cast<std::size_t>(p->hole_id)];
          if (static_cast<std::size_t>(d) > depth_cap)
            throw error("hole depth " + std::to_string(d) + " exceeds the cap");
          std::vector<int>& coll = sk.hole_owners[p->hole_id];
          it = hole_root.emplace(p->hole_id, free_owner(d, coll)).first;
        }
        return mirror(it->second, p->kind == PKind::NegHole);
      }
      default:
        throw error("X/U are not allowed in synthesis patterns");
    }
  }
};

std::string lname(const Label& l, const Skeleton& sk) {
  switch (l.kind) {
    case LKind::And: return "and";
    case LKind::Or: return "or";
    case LKind::G: return "G";
    case LKind::F: return "F";
    case LKind::Lit: return "P_" + sk.alphabet[static_cast<std::size_t>(l.prop)];
    case LKind::NegLit: return "N_" + sk.alphabet[static_cast<std::size_t>(l.prop)];
    case LKind::Ph: return "PX_" + sk.placeholders[static_cast<std::size_t>(l.ph)];
    case LKind::NegPh: return "NX_" + sk.placeholders[static_cast<std::size_t>(l.ph)];
    case LKind::TrueL: return "T";
    case LKind::Noop: return "nop";
  }
  throw error("unreachable");
}

std::string xvar(int owner, const Label& l, const Skeleton& sk) {
  return "x" + std::to_string(owner + 1) + "_" + lname(l, sk);
}

std::string mvar(const std::string& ph, const std::string& prop) {
  return "m_" + ph + "_" + prop;
}

struct Emitter {
  const Skeleton& sk;
  const Sample& s;
  const ValuationParams& params;
  std::ostringstream out;

  std::string rsmt, dsmt, d2smt;

  Emitter(const Skeleton& k, const Sample& smp, const ValuationParams& p)
      : sk(k), s(smp), params(p) {
    rsmt = p.r.to_smt();
    dsmt = p.delta.to_smt();
    d2smt = Rational(p.delta.num, p.delta.den * 2).to_smt();
  }

  Rational pi(const std::string& prop) const {
    auto it = params.priority.find(prop);
    return it == params.priority.end() ? Rational(1, 1) : it->second;
  }

  std::string lit_const(int prop, const Word& w, std::size_t t, bool positive) const {
    bool in = prop >= 0 && static_cast<std::size_t>(prop) < sk.n_sample_props && w.has(t, prop);
    if (in != positive) return "0.0";
    return pi(sk.alphabet[static_cast<std::size_t>(prop)]).to_smt();
  }

  std::string active(int owner) const {
    if (owner < 0) return "false";
    const Skeleton::Owner& o = sk.owners[static_cast<std::size_t>(owner)];
    return o.has_noop ? "(not " + xvar(owner, {LKind::Noop, -1, -1}, sk) + ")" : "true";
  }
  std::string inactive(int owner) const {
    if (owner < 0) return "true";
    const Skeleton::Owner& o = sk.owners[static_cast<std::size_t>(owner)];
    return o.has_noop ? xvar(owner, {LKind::Noop, -1, -1}, sk) : "false";
  }

  void declarations() {
    for (std::size_t o = 0; o < sk.owners.size(); ++o)
      for (const Label& l : sk.owners[o].domain)
        out << "(declare-const " << xvar(static_cast<int>(o), l, sk) << " Bool)\n";
    for (const std::string& ph : sk.placeholders)
      for (std::size_t q = 0; q < sk.n_sample_props; ++q)
        out << "(declare-const " << mvar(ph, sk.alphabet[q]) << " Bool)\n";
  }

  void structure() {
    for (std::size_t oi = 0; oi < sk.owners.size(); ++oi) {
      const Skeleton::Owner& o = sk.owners[oi];
      const int on = static_cast<int>(oi);
      if (o.domain.size() == 1) {
        out << "(assert " << xvar(on, o.domain[0], sk) << ")\n";
      } else {
        out << "(assert (or";
        for (const Label& l : o.domain) out << " " << xvar(on, l, sk);
        out << "))\n";
        for (std::size_t a = 0; a < o.domain.size(); ++a)
          for (std::size_t b = a + 1; b < o.domain.size(); ++b)
            out << "(assert (not (and " << xvar(on, o.domain[a], sk) << " "
                << xvar(on, o.domain[b], sk) << ")))\n";
      }
      // label -> child activity
      for (const Label& l : o.domain) {
        std::string la, ra;
        switch (l.kind) {
          case LKind::And:
          case LKind::Or:
            la = active(o.left);
            ra = active(o.right);
            break;
          case LKind::G:
          case LKind::F:
            la = active(o.left);
            ra = inactive(o.right);
            break;
          default:
            la = inactive(o.left);
            ra = inactive(o.right);
            break;
        }
        if (la == "true" && ra == "true") continue;
        out << "(assert (=> " << xvar(on, l, sk) << " (and " << la << " " << ra << ")))\n";
      }
    }
    // the root of the whole score tree is an active formula node
    const Skeleton::Owner& ro = sk.owners[static_cast<std::size_t>(sk.nodes[0].owner)];
    if (ro.has_noop)
      out << "(assert (not " << xvar(sk.nodes[0].owner, {LKind::Noop, -1, -1}, sk) << "))\n";
    // placeholder mapping: exactly one proposition each
    for (const std::string& ph : sk.placeholders) {
      out << "(assert (or";
      for (std::size_t q = 0; q < sk.n_sample_props; ++q)
        out << " " << mvar(ph, sk.alphabet[q]);
      out << "))\n";
      for (std::size_t a = 0; a < sk.n_sample_props; ++a)
        for (std::size_t b = a + 1; b < sk.n_sample_props; ++b)
          out << "(assert (not (and " << mvar(ph, sk.alphabet[a]) << " "
              << mvar(ph, sk.alphabet[b]) << ")))\n";
    }
    iff_disjointness();
  }

  // The two sides of an <-> must draw on disjoint propositions; otherwise the
  // optimum degenerates to echoing one side on the other.
  void iff_disjointness() {
    for (const IffScope& scope : sk.scopes) {
      for (std::size_t q = 0; q < sk.n_sample_props; ++q) {
        const std::string& p = sk.alphabet[q];
        std::string l = side_use(scope.left, p);
        std::string r = side_use(scope.right, p);
        if (l == "false" || r == "false") continue;
        if (l == "true" && r == "true")
          throw error("iff sides share fixed proposition " + p);
        if (l == "true")
          out << "(assert (not " << r << "))\n";
        else if (r == "true")
          out << "(assert (not " << l << "))\n";
        else
          out << "(assert (not (and " << l << " " << r << ")))\n";
      }
    }
  }

  std::string side_use(const SideUse& side, const std::string& prop) {
    std::vector<std::string> terms;
    if (side.props.count(prop)) return "true";
    for (const std::string& ph : side.placeholders) terms.push_back(mvar(ph, prop));
    for (int h : side.holes) {
      auto it = sk.hole_owners.find(h);
      if (it == sk.hole_owners.end()) continue;
      for (int on : it->second) {
        for (const Label& l : sk.owners[static_cast<std::size_t>(on)].domain)
          if ((l.kind == LKind::Lit || l.kind == LKind::NegLit) &&
              sk.alphabet[static_cast<std::size_t>(l.prop)] == prop)
            terms.push_back(xvar(on, l, sk));
      }
    }
    if (terms.empty()) return "false";
    if (terms.size() == 1) return terms[0];
    std::string d = "(or";
    for (const std::string& t : terms) d += " " + t;
    return d + ")";
  }

  static std::string yv(int trace, int node, std::size_t t) {
    return "y" + std::to_string(trace) + "_" + std::to_string(node + 1) + "_" + std::to_string(t);
  }
  static std::string gv(int trace, int node, std::size_t t) {
    return "g" + std::to_string(trace) + "_" + std::to_string(node + 1) + "_" + std::to_string(t);
  }
  static std::string bv(int trace, int node, std::size_t t) {
    return "b" + std::to_string(trace) + "_" + std::to_string(node + 1) + "_" + std::to_string(t);
  }

  bool needs_g_aux(const Skeleton::SNode& n) const {
    for (const Label& l : sk.owners[static_cast<std::size_t>(n.owner)].domain)
      if ((n.dual ? dual_kind(l.kind) : l.kind) == LKind::G) return true;
    return false;
  }

  void trace(int tn, const Word& w) {
    const std::size_t n = w.length();
    for (std::size_t si = 0; si < sk.nodes.size(); ++si) {
      for (std::size_t t = 1; t <= n; ++t)
        out << "(declare-const " << yv(tn, static_cast<int>(si), t) << " Real)\n";
      if (needs_g_aux(sk.nodes[si]))
        for (std::size_t t = 1; t <= n; ++t)
          out << "(declare-const " << gv(tn, static_cast<int>(si), t) << " Real)\n"
              << "(declare-const " << bv(tn, static_cast<int>(si), t) << " Bool)\n";
    }
    for (std::size_t si = 0; si < sk.nodes.size(); ++si) {
      const Skeleton::SNode& nd = sk.nodes[si];
      const int sn = static_cast<int>(si);
      for (const Label& l : sk.owners[static_cast<std::size_t>(nd.owner)].domain) {
        const LKind eff = nd.dual ? dual_kind(l.kind) : l.kind;
        const std::string gx = xvar(nd.owner, l, sk);
        emit_label(tn, sn, nd, eff, l, gx, w, n);
      }
    }
  }

  void emit_label(int tn, int sn, const Skeleton::SNode& nd, LKind eff, const Label& l,
                  const std::string& gx, const Word& w, std::size_t n) {
    auto y = [&](int node, std::size_t t) { return yv(tn, node, t); };
    switch (eff) {
      case LKind::TrueL:
        for (std::size_t t = 1; t <= n; ++t)
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " 1.0)))\n";
        return;
      case LKind::Lit:
      case LKind::NegLit:
        for (std::size_t t = 1; t <= n; ++t)
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " "
              << lit_const(l.prop, w, t, eff == LKind::Lit) << ")))\n";
        return;
      case LKind::Ph:
      case LKind::NegPh: {
        const std::string& ph = sk.placeholders[static_cast<std::size_t>(l.ph)];
        for (std::size_t q = 0; q < sk.n_sample_props; ++q) {
          const std::string guard = "(and " + gx + " " + mvar(ph, sk.alphabet[q]) + ")";
          for (std::size_t t = 1; t <= n; ++t) {
            bool in = w.has(t, static_cast<int>(q));
            std::string c = in == (eff == LKind::Ph) ? pi(sk.alphabet[q]).to_smt() : "0.0";
            out << "(assert (=> " << guard << " (= " << y(sn, t) << " " << c << ")))\n";
          }
        }
        return;
      }
      case LKind::And:
        for (std::size_t t = 1; t <= n; ++t) {
          std::string yl = y(nd.left, t), yr = y(nd.right, t);
          std::string expr =
              params.conj == Conj::Product
                  ? "(* " + dsmt + " " + yl + " " + yr + ")"
                  : "(ite (<= " + yl + " " + yr + ") (* " + dsmt + " " + yl + ") (* " +
                        dsmt + " " + yr + "))";
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " " << expr << ")))\n";
        }
        return;
      case LKind::Or:
        for (std::size_t t = 1; t <= n; ++t) {
          std::string yl = y(nd.left, t), yr = y(nd.right, t);
          std::string expr =
              params.disj == Disj::Mean
                  ? "(* " + d2smt + " (+ " + yl + " " + yr + "))"
                  : "(ite (>= " + yl + " " + yr + ") (* " + dsmt + " " + yl + ") (* " +
                        dsmt + " " + yr + "))";
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " " << expr << ")))\n";
        }
        return;
      case LKind::G:
        for (std::size_t t = n; t >= 1; --t) {
          std::string yl = y(nd.left, t);
          std::string gt = gv(tn, sn, t), bt = bv(tn, sn, t);
          std::string gdef =
              t == n ? "(= " + gt + " " + yl + ")"
                     : "(= " + gt + " (+ " + yl + " (* " + rsmt + " " + gv(tn, sn, t + 1) + ")))";
          std::string bdef =
              t == n ? "(= " + bt + " (> " + yl + " 0.0))"
                     : "(= " + bt + " (and (> " + yl + " 0.0) " + bv(tn, sn, t + 1) + "))";
          out << "(assert (=> " << gx << " (and " << gdef << " " << bdef << " (= " << y(sn, t)
              << " (ite " << bt << " (* " << dsmt << " " << gt << ") 0.0)))))\n";
        }
        return;
      case LKind::F:
        for (std::size_t t = n; t >= 1; --t) {
          std::string yl = y(nd.left, t);
          std::string rest = t == n ? "0.0" : "(* " + rsmt + " " + y(sn, t + 1) + ")";
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " (ite (> " << yl
              << " 0.0) (* " << dsmt << " " << yl << ") " << rest << "))))\n";
        }
        return;
      case LKind::Noop:
        for (std::size_t t = 1; t <= n; ++t)
          out << "(assert (=> " << gx << " (= " << y(sn, t) << " 0.0)))\n";
        return;
    }
  }
};

}  // namespace

Encoded encode(const EncodeRequest& req) {
  if (!req.sample) throw error("encode: no sample");
  const Sample& s = *req.sample;
  if (s.positives.empty()) throw error("NoPositives: at least one positive trace required");

  ExpandedPattern ep = expand_pattern(req.pattern);
  Builder b(ep, s, 6);
  int root = b.build(ep.root);
  if (root != 0) {
    // score tree root must be node 0 for the y naming convention; rotate
    std::swap(b.sk.nodes[0], b.sk.nodes[static_cast<std::size_t>(root)]);
    // fix child indexes that pointed at 0 or root
    for (Skeleton::SNode& nd : b.sk.nodes) {
      auto fix = [&](int& c) {
        if (c == 0) c = root;
        else if (c == root) c = 0;
      };
      fix(nd.left);
      fix(nd.right);
    }
  }

  auto sk = std::make_shared<Skeleton>(std::move(b.sk));
  Emitter em(*sk, s, req.params);
  em.declarations();
  em.structure();
  int tn = 0;
  for (const Word& w : s.positives) em.trace(++tn, w);
  for (const Word& w : s.negatives) em.trace(++tn, w);
  if (req.assert_polarity) {
    tn = 0;
    for (std::size_t i = 0; i < s.positives.size(); ++i)
      em.out << "(assert (> " << Emitter::yv(++tn, 0, 1) << " 0.0))\n";
    for (std::size_t i = 0; i < s.negatives.size(); ++i)
      em.out << "(assert (not (> " << Emitter::yv(++tn, 0, 1) << " 0.0)))\n";
  }
  em.out << "(declare-const obj Real)\n";
  for (std::size_t i = 0; i < s.positives.size(); ++i)
    em.out << "(assert (<= obj " << Emitter::yv(static_cast<int>(i) + 1, 0, 1) << "))\n";
  em.out << "(maximize obj)\n(check-sat)\n(get-model)\n";

  return {em.out.str(), sk};
}

namespace {

FormulaPtr decode_node(const Model& m, const Skeleton& sk, int si) {
  const Skeleton::SNode& nd = sk.nodes[static_cast<std::size_t>(si)];
  const Skeleton::Owner& o = sk.owners[static_cast<std::size_t>(nd.owner)];
  const Label* chosen = nullptr;
  if (o.domain.size() == 1) {
    chosen = &o.domain[0];
  } else {
    for (const Label& l : o.domain)
      if (m.bool_of(xvar(nd.owner, l, sk))) {
        chosen = &l;
        break;
      }
    if (!chosen) {
      // model omitted don't-care labels: node is inactive
      for (const Label& l : o.domain)
        if (l.kind == LKind::Noop) chosen = &l;
    }
  }
  if (!chosen) throw error("model assigns no label to node " + std::to_string(si + 1));
  const LKind eff = nd.dual ? dual_kind(chosen->kind) : chosen->kind;
  switch (eff) {
    case LKind::TrueL:
      return f_true();
    case LKind::Lit:
      return f_atom(sk.alphabet[static_cast<std::size_t>(chosen->prop)]);
    case LKind::NegLit:
      return f_neg_atom(sk.alphabet[static_cast<std::size_t>(chosen->prop)]);
    case LKind::Ph:
    case LKind::NegPh: {
      const std::string& ph = sk.placeholders[static_cast<std::size_t>(chosen->ph)];
      for (std::size_t q = 0; q < sk.n_sample_props; ++q)
        if (m.bool_of(mvar(ph, sk.alphabet[q])))
          return eff == LKind::Ph ? f_atom(sk.alphabet[q]) : f_neg_atom(sk.alphabet[q]);
      throw error("model maps placeholder " + ph + " to no proposition");
    }
    case LKind::G:
      return f_g(decode_node(m, sk, nd.left));
    case LKind::F:
      return f_f(decode_node(m, sk, nd.left));
    case LKind::And:
      return f_and(decode_node(m, sk, nd.left), decode_node(m, sk, nd.right));
    case LKind::Or:
      return f_or(decode_node(m, sk, nd.left), decode_node(m, sk, nd.right));
    case LKind::Noop:
      throw error("decoded an inactive node (exactly-one violated)");
  }
  throw error("unreachable");
}

}  // namespace

FormulaPtr decode(const Model& model, const Skeleton& sk) {
  return decode_node(model, sk, 0);
}

namespace {

SynthResult solve(const Sample& s, const PatternPtr& p, const ValuationParams& params,
                  const SynthOptions& opt) {
  SynthResult res;
  for (const Word& w : s.positives)
    if (w.length() > opt.trace_cap)
      throw error("trace length " + std::to_string(w.length()) +
                  " exceeds the SMT path cap of " + std::to_string(opt.trace_cap));
  for (const Word& w : s.negatives)
    if (w.length() > opt.trace_cap)
      throw error("trace length exceeds the SMT path cap");

  EncodeRequest req;
  req.sample = &s;
  req.pattern = p;
  req.params = params;
  Encoded enc = encode(req);

  std::string solver = opt.solver_path.empty() ? solver_from_env() : opt.solver_path;
  SolverOutcome oc = run_solver(solver, enc.script, opt.timeout_sec);
  switch (oc.kind) {
    case SolverOutcome::Kind::Unsat:
      res.status = SynthStatus::Unsat;
      return res;
    case SolverOutcome::Kind::Timeout:
      res.status = SynthStatus::Timeout;
      return res;
    case SolverOutcome::Kind::Error:
      res.status = SynthStatus::SolverError;
      res.message = oc.message;
      return res;
    case SolverOutcome::Kind::Optimal:
      break;
  }
  Model m = parse_model(oc.output);
  res.formula = decode(m, *enc.skeleton);
  res.status = SynthStatus::Optimal;

  // re-verify: objective equals min-over-positives score; output consistent
  double minv = 0.0;
  bool first = true;
  for (const Word& w : s.positives) {
    double v = value(res.formula, w, s.alphabet, params);
    if (first || v < minv) minv = v;
    first = false;
  }
  res.objective = minv;
  try {
    double solver_obj = m.real_of("obj");
    if (std::fabs(solver_obj - minv) > 1e-6 * std::max(1.0, std::fabs(minv))) {
      res.status = SynthStatus::SolverError;
      res.message = "objective mismatch: solver " + std::to_string(solver_obj) +
                    " vs evaluator " + std::to_string(minv);
      return res;
    }
  } catch (const error&) {
    // obj absent from model: keep the re-evaluated score
  }
  if (!consistent(res.formula, s)) {
    res.status = SynthStatus::SolverError;
    res.message = "decoded formula is not consistent with the sample";
  }
  return res;
}

}  // namespace

SynthResult constraint_opt(const Sample& s, std::size_t depth,
                           const ValuationParams& params, const SynthOptions& opt) {
  if (depth > opt.depth_cap) throw error("depth exceeds the skeleton cap");
  return solve(s, p_hole(static_cast<int>(depth), 0), params, opt);
}

SynthResult pattern_synth(const Sample& s, const PatternPtr& p,
                          const ValuationParams& params, const SynthOptions& opt) {
  return solve(s, p, params, opt);
}

}  // namespace ltlqm
