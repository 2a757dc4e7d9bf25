#include "ltlqm/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ltlqm {

namespace {

enum class Tok {
  Ident,
  True,
  G,
  F,
  X,
  U,
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  Question,
  Phi,
  Number,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& text, bool pattern_mode)
      : text_(text), pattern_mode_(pattern_mode) {
    tokenize();
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

 private:
  [[noreturn]] void fail(const std::string& msg, int line, int col) const {
    throw parse_error(msg, line, col);
  }

  void tokenize() {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
      tokens_.push_back({k, std::move(t), l, c});
    };
    while (i < text_.size()) {
      const char c = text_[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        ++col;
        continue;
      }
      const int tl = line, tc = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
          ++j;
        std::string word = text_.substr(i, j - i);
        col += static_cast<int>(j - i);
        i = j;
        if (word == "true") push(Tok::True, word, tl, tc);
        else if (word == "G") push(Tok::G, word, tl, tc);
        else if (word == "F") push(Tok::F, word, tl, tc);
        else if (word == "X") push(Tok::X, word, tl, tc);
        else if (word == "U") push(Tok::U, word, tl, tc);
        else if (pattern_mode_ && word == "phi") push(Tok::Phi, word, tl, tc);
        else push(Tok::Ident, word, tl, tc);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        push(Tok::Number, text_.substr(i, j - i), tl, tc);
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      switch (c) {
        case '!':
          push(Tok::Not, "!", tl, tc);
          ++i;
          ++col;
          break;
        case '&':
          push(Tok::And, "&", tl, tc);
          ++i;
          ++col;
          break;
        case '|':
          push(Tok::Or, "|", tl, tc);
          ++i;
          ++col;
          break;
        case '(':
          push(Tok::LParen, "(", tl, tc);
          ++i;
          ++col;
          break;
        case ')':
          push(Tok::RParen, ")", tl, tc);
          ++i;
          ++col;
          break;
        case '?':
          if (!pattern_mode_) fail("`?` placeholders are only valid in patterns", tl, tc);
          push(Tok::Question, "?", tl, tc);
          ++i;
          ++col;
          break;
        case '-':
          if (i + 1 < text_.size() && text_[i + 1] == '>') {
            push(Tok::Implies, "->", tl, tc);
            i += 2;
            col += 2;
            break;
          }
          fail("unknown operator token `-`", tl, tc);
        case '<':
          if (i + 2 < text_.size() && text_[i + 1] == '-' && text_[i + 2] == '>') {
            push(Tok::Iff, "<->", tl, tc);
            i += 3;
            col += 3;
            break;
          }
          fail("unknown operator token `<`", tl, tc);
        default:
          fail(std::string("unexpected character `") + c + "`", tl, tc);
      }
    }
    tokens_.push_back({Tok::End, "", line, col});
  }

  const std::string& text_;
  bool pattern_mode_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Builds patterns; formulas are lowered from the pattern AST afterwards so
// both grammars share one parser.
class Parser {
 public:
  explicit Parser(Lexer& lex) : lex_(lex) {}

  PatternPtr parse() {
    PatternPtr p = iff();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw parse_error("trailing input `" + t.text + "`", t.line, t.col);
    return p;
  }

 private:
  Token expect(Tok k, const std::string& what) {
    Token t = lex_.next();
    if (t.kind != k) throw parse_error("expected " + what + ", found `" + t.text + "`", t.line, t.col);
    return t;
  }

  PatternPtr iff() {
    PatternPtr l = impl();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.next();
      l = p_node(PKind::Iff, l, impl());
    }
    return l;
  }

  PatternPtr impl() {  // right-associative
    PatternPtr l = disj();
    if (lex_.peek().kind == Tok::Implies) {
      lex_.next();
      return p_node(PKind::Implies, l, impl());
    }
    return l;
  }

  PatternPtr disj() {
    PatternPtr l = conj();
    while (lex_.peek().kind == Tok::Or) {
      lex_.next();
      l = p_node(PKind::Or, l, conj());
    }
    return l;
  }

  PatternPtr conj() {
    PatternPtr l = unary();
    while (lex_.peek().kind == Tok::And || lex_.peek().kind == Tok::U) {
      const Tok op = lex_.next().kind;
      l = p_node(op == Tok::And ? PKind::And : PKind::U, l, unary());
    }
    return l;
  }

  PatternPtr unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Not:
        lex_.next();
        return negate(unary());
      case Tok::G:
        lex_.next();
        return p_node(PKind::G, unary());
      case Tok::F:
        lex_.next();
        return p_node(PKind::F, unary());
      case Tok::X:
        lex_.next();
        return p_node(PKind::X, unary());
      default:
        return atom();
    }
  }

  PatternPtr negate(PatternPtr p) {
    if (p->kind == PKind::Atom) return std::make_shared<const Pattern>(PKind::NegAtom, p->name, 0, -1, nullptr, nullptr);
    if (p->kind == PKind::Placeholder)
      return std::make_shared<const Pattern>(PKind::NegPlaceholder, p->name, 0, -1, nullptr, nullptr);
    return p_node(PKind::Not, p);
  }

  PatternPtr atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Ident:
        return p_atom(t.text);
      case Tok::True:
        return p_node(PKind::True, nullptr);
      case Tok::Question: {
        Token name = expect(Tok::Ident, "placeholder name");
        return p_placeholder(name.text);
      }
      case Tok::Phi: {
        expect(Tok::LParen, "`(`");
        Token d = expect(Tok::Number, "hole depth");
        expect(Tok::RParen, "`)`");
        return p_hole(std::stoi(d.text), next_hole_id_++);
      }
      case Tok::LParen: {
        PatternPtr p = iff();
        expect(Tok::RParen, "`)`");
        return p;
      }
      default:
        throw parse_error("expected a proposition or `(`, found `" + t.text + "`", t.line, t.col);
    }
  }

  Lexer& lex_;
  int next_hole_id_ = 0;
};

FormulaPtr lower(const PatternPtr& p) {
  switch (p->kind) {
    case PKind::True:
      return f_true();
    case PKind::Atom:
      return f_atom(p->name);
    case PKind::NegAtom:
      return f_neg_atom(p->name);
    case PKind::Not:
      return f_not(lower(p->left));
    case PKind::And:
      return f_and(lower(p->left), lower(p->right));
    case PKind::Or:
      return f_or(lower(p->left), lower(p->right));
    case PKind::G:
      return f_g(lower(p->left));
    case PKind::F:
      return f_f(lower(p->left));
    case PKind::X:
      return f_x(lower(p->left));
    case PKind::U:
      return f_u(lower(p->left), lower(p->right));
    case PKind::Implies:
      return f_or(f_not(lower(p->left)), lower(p->right));
    case PKind::Iff: {
      FormulaPtr a = lower(p->left);
      FormulaPtr b = lower(p->right);
      return f_and(f_or(f_not(a), b), f_or(a, f_not(b)));
    }
    default:
      throw error("placeholders and holes are not valid in plain formulas");
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Lexer lex(text, /*pattern_mode=*/false);
  Parser parser(lex);
  return lower(parser.parse());
}

PatternPtr parse_pattern(const std::string& text) {
  Lexer lex(text, /*pattern_mode=*/true);
  Parser parser(lex);
  return parser.parse();
}

}  // namespace ltlqm
