#include "kht/formula.hpp"

#include <utility>

#include "kht/errors.hpp"

namespace kht {

SpaceExpr SpaceExpr::power_of(SpaceExpr base) {
  SpaceExpr e;
  e.kind = Kind::power;
  e.factors.push_back(std::move(base));
  return e;
}

SpaceExpr SpaceExpr::product_of(std::vector<SpaceExpr> fs) {
  if (fs.size() == 1) return fs[0];
  SpaceExpr e;
  e.kind = Kind::product;
  // products are kept flat; the surface syntax has no nested form and the
  // left-major flat order agrees with nesting to the left
  for (auto& f : fs) {
    if (f.kind == Kind::product)
      for (auto& inner : f.factors) e.factors.push_back(std::move(inner));
    else
      e.factors.push_back(std::move(f));
  }
  return e;
}

std::string SpaceExpr::key() const {
  switch (kind) {
    case Kind::named:
      return name;
    case Kind::power:
      return "P(" + factors[0].key() + ")";
    case Kind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i].key();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
  return a.kind == b.kind && a.name == b.name && a.factors == b.factors;
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::variable:
      return a.var == b.var;
    case TermKind::literal:
      return a.space_name == b.space_name && a.label == b.label;
    case TermKind::comprehension:
      return a.bound == b.bound && a.bound_space == b.bound_space &&
             structurally_equal(*a.body, *b.body);
  }
  return false;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
      return true;
    case FormulaKind::atom: {
      if (a.atom != b.atom || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
      return true;
    }
    case FormulaKind::membership:
    case FormulaKind::equality:
      return structurally_equal(*a.args[0], *b.args[0]) &&
             structurally_equal(*a.args[1], *b.args[1]);
    case FormulaKind::negation:
      return structurally_equal(*a.lhs, *b.lhs);
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
    case FormulaKind::biconditional:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    case FormulaKind::forall:
    case FormulaKind::exists:
      return a.bound == b.bound && a.bound_space == b.bound_space &&
             structurally_equal(*a.body, *b.body);
  }
  return false;
}

// ---------------------------------------------------------------------------
// lexer

namespace {

enum class Tok {
  ident,
  number,
  lparen,
  rparen,
  lbrace,
  rbrace,
  dot,
  colon,
  coloncolon,
  comma,
  bar,
  turnstile,
  eq,
  star,
  kw_forall,
  kw_exists,
  kw_and,
  kw_or,
  kw_not,
  kw_implies,
  kw_iff,
  kw_in,
  kw_top,
  kw_bottom,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  SrcLoc loc;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::dot: return "'.'";
    case Tok::colon: return "':'";
    case Tok::coloncolon: return "'::'";
    case Tok::comma: return "','";
    case Tok::bar: return "'|'";
    case Tok::turnstile: return "'|-'";
    case Tok::eq: return "'='";
    case Tok::star: return "'*'";
    case Tok::kw_forall: return "'forall'";
    case Tok::kw_exists: return "'exists'";
    case Tok::kw_and: return "'and'";
    case Tok::kw_or: return "'or'";
    case Tok::kw_not: return "'not'";
    case Tok::kw_implies: return "'implies'";
    case Tok::kw_iff: return "'iff'";
    case Tok::kw_in: return "'in'";
    case Tok::kw_top: return "'top'";
    case Tok::kw_bottom: return "'bottom'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct UnicodeAlias {
  const char* bytes;
  Tok tok;
};

constexpr UnicodeAlias kAliases[] = {
    {"∀", Tok::kw_forall},  // ∀
    {"∃", Tok::kw_exists},  // ∃
    {"∧", Tok::kw_and},     // ∧
    {"∨", Tok::kw_or},      // ∨
    {"¬", Tok::kw_not},     // ¬
    {"→", Tok::kw_implies}, // →
    {"↔", Tok::kw_iff},     // ↔
    {"∈", Tok::kw_in},      // ∈
    {"⊤", Tok::kw_top},     // ⊤
    {"⊥", Tok::kw_bottom},  // ⊥
};

Tok keyword_of(const std::string& word) {
  if (word == "forall") return Tok::kw_forall;
  if (word == "exists") return Tok::kw_exists;
  if (word == "and") return Tok::kw_and;
  if (word == "or") return Tok::kw_or;
  if (word == "not") return Tok::kw_not;
  if (word == "implies") return Tok::kw_implies;
  if (word == "iff") return Tok::kw_iff;
  if (word == "in") return Tok::kw_in;
  if (word == "top") return Tok::kw_top;
  if (word == "bottom") return Tok::kw_bottom;
  return Tok::ident;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string tokText, SrcLoc loc) {
    out.push_back({kind, std::move(tokText), loc});
  };
  while (i < text.size()) {
    char c = text[i];
    SrcLoc loc{line, col};
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    bool matched_alias = false;
    for (const auto& alias : kAliases) {
      std::size_t len = std::char_traits<char>::length(alias.bytes);
      if (text.compare(i, len, alias.bytes) == 0) {
        push(alias.tok, alias.bytes, loc);
        i += len;
        ++col;
        matched_alias = true;
        break;
      }
    }
    if (matched_alias) continue;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_' || text[i] == '\''))
        ++i;
      std::string word = text.substr(start, i - start);
      col += static_cast<int>(word.size());
      Tok kind = keyword_of(word);
      push(kind, std::move(word), loc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num = text.substr(start, i - start);
      col += static_cast<int>(num.size());
      push(Tok::number, std::move(num), loc);
      continue;
    }
    auto single = [&](Tok kind) {
      push(kind, std::string(1, c), loc);
      ++i;
      ++col;
    };
    switch (c) {
      case '(': single(Tok::lparen); break;
      case ')': single(Tok::rparen); break;
      case '{': single(Tok::lbrace); break;
      case '}': single(Tok::rbrace); break;
      case '.': single(Tok::dot); break;
      case ',': single(Tok::comma); break;
      case '=': single(Tok::eq); break;
      case '*': single(Tok::star); break;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == ':') {
          push(Tok::coloncolon, "::", loc);
          i += 2;
          col += 2;
        } else {
          single(Tok::colon);
        }
        break;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          push(Tok::turnstile, "|-", loc);
          i += 2;
          col += 2;
        } else {
          single(Tok::bar);
        }
        break;
      default:
        throw Error(Errc::syntax, "unexpected character '" + std::string(1, c) + "'", line, col);
    }
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// parser

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  FormulaPtr formula() {
    FormulaPtr f = parse_iff();
    expect(Tok::end);
    return f;
  }

  SequentText sequent() {
    SequentText s;
    s.lhs = parse_iff();
    expect(Tok::turnstile);
    s.rhs = parse_iff();
    expect(Tok::end);
    return s;
  }

  SpaceExpr space_expr_only() {
    SpaceExpr e = parse_space();
    expect(Tok::end);
    return e;
  }

  std::vector<std::pair<std::string, SpaceExpr>> context_decl() {
    std::vector<std::pair<std::string, SpaceExpr>> out;
    if (peek().kind == Tok::end) return out;
    while (true) {
      Token name = expect(Tok::ident);
      expect(Tok::colon);
      out.emplace_back(name.text, parse_space());
      if (peek().kind != Tok::comma) break;
      advance();
    }
    expect(Tok::end);
    return out;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t idx = pos_ + ahead;
    return idx < toks_.size() ? toks_[idx] : toks_.back();
  }
  Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok kind) {
    if (peek().kind != kind)
      throw Error(Errc::syntax,
                  std::string("expected ") + tok_name(kind) + " but found " +
                      tok_name(peek().kind),
                  peek().loc.line, peek().loc.col);
    return advance();
  }

  static FormulaPtr node(FormulaKind kind, SrcLoc loc) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->loc = loc;
    return f;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (peek().kind == Tok::kw_iff) {
      SrcLoc loc = advance().loc;
      FormulaPtr g = node(FormulaKind::biconditional, loc);
      g->lhs = std::move(f);
      g->rhs = parse_implies();
      f = std::move(g);
    }
    return f;
  }

  FormulaPtr parse_implies() {
    FormulaPtr f = parse_or();
    if (peek().kind == Tok::kw_implies) {
      SrcLoc loc = advance().loc;
      FormulaPtr g = node(FormulaKind::implication, loc);
      g->lhs = std::move(f);
      g->rhs = parse_implies();  // right-associative
      return g;
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Tok::kw_or) {
      SrcLoc loc = advance().loc;
      FormulaPtr g = node(FormulaKind::disjunction, loc);
      g->lhs = std::move(f);
      g->rhs = parse_and();
      f = std::move(g);
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Tok::kw_and) {
      SrcLoc loc = advance().loc;
      FormulaPtr g = node(FormulaKind::conjunction, loc);
      g->lhs = std::move(f);
      g->rhs = parse_unary();
      f = std::move(g);
    }
    return f;
  }

  FormulaPtr parse_unary() {
    if (peek().kind == Tok::kw_not) {
      SrcLoc loc = advance().loc;
      FormulaPtr g = node(FormulaKind::negation, loc);
      g->lhs = parse_unary();
      return g;
    }
    if (peek().kind == Tok::kw_forall || peek().kind == Tok::kw_exists) {
      bool universal = peek().kind == Tok::kw_forall;
      SrcLoc loc = advance().loc;
      Token var = expect(Tok::ident);
      expect(Tok::colon);
      SpaceExpr space = parse_space();
      expect(Tok::dot);
      FormulaPtr g = node(universal ? FormulaKind::forall : FormulaKind::exists, loc);
      g->bound = var.text;
      g->bound_space = std::move(space);
      g->body = parse_iff();  // body extends to the closest enclosing delimiter
      return g;
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        advance();
        FormulaPtr f = parse_iff();
        expect(Tok::rparen);
        return f;
      }
      case Tok::kw_top:
        return node(FormulaKind::truth, advance().loc);
      case Tok::kw_bottom:
        return node(FormulaKind::falsity, advance().loc);
      case Tok::ident:
      case Tok::lbrace:
        return parse_relational();
      default:
        throw Error(Errc::syntax,
                    std::string("expected a formula but found ") + tok_name(t.kind),
                    t.loc.line, t.loc.col);
    }
  }

  // bare identifier (atom or variable), application, or a relation between
  // terms
  FormulaPtr parse_relational() {
    SrcLoc loc = peek().loc;
    // an application can only be an atom, never a term
    if (peek().kind == Tok::ident && peek(1).kind == Tok::lparen) {
      Token name = advance();
      advance();  // (
      FormulaPtr f = node(FormulaKind::atom, loc);
      f->atom = name.text;
      while (true) {
        f->args.push_back(parse_term());
        if (peek().kind != Tok::comma) break;
        advance();
      }
      expect(Tok::rparen);
      if (peek().kind == Tok::eq || peek().kind == Tok::kw_in)
        throw Error(Errc::syntax, "an application is not a term", peek().loc.line,
                    peek().loc.col);
      return f;
    }
    bool bare_ident = peek().kind == Tok::ident && peek(1).kind != Tok::coloncolon;
    TermPtr first = parse_term();
    if (peek().kind == Tok::eq || peek().kind == Tok::kw_in) {
      bool is_eq = advance().kind == Tok::eq;
      FormulaPtr f = node(is_eq ? FormulaKind::equality : FormulaKind::membership, loc);
      f->args.push_back(std::move(first));
      f->args.push_back(parse_term());
      return f;
    }
    if (bare_ident) {
      FormulaPtr f = node(FormulaKind::atom, loc);
      f->atom = first->var;
      return f;
    }
    throw Error(Errc::syntax, "expected '=' or 'in' after the term", peek().loc.line,
                peek().loc.col);
  }

  TermPtr parse_term() {
    const Token& t = peek();
    auto term = std::make_shared<Term>();
    term->loc = t.loc;
    if (t.kind == Tok::ident) {
      Token name = advance();
      if (peek().kind == Tok::coloncolon) {
        advance();
        if (peek().kind != Tok::ident && peek().kind != Tok::number)
          throw Error(Errc::syntax, "expected a point label after '::'", peek().loc.line,
                      peek().loc.col);
        Token label = advance();
        term->kind = TermKind::literal;
        term->space_name = name.text;
        term->label = label.text;
        return term;
      }
      term->kind = TermKind::variable;
      term->var = name.text;
      return term;
    }
    if (t.kind == Tok::lbrace) {
      advance();
      Token var = expect(Tok::ident);
      expect(Tok::colon);
      SpaceExpr space = parse_space();
      expect(Tok::bar);
      FormulaPtr body = parse_iff();
      expect(Tok::rbrace);
      term->kind = TermKind::comprehension;
      term->bound = var.text;
      term->bound_space = std::move(space);
      term->body = std::move(body);
      return term;
    }
    throw Error(Errc::syntax, std::string("expected a term but found ") + tok_name(t.kind),
                t.loc.line, t.loc.col);
  }

  SpaceExpr parse_space() {
    std::vector<SpaceExpr> factors{parse_space_atom()};
    while (peek().kind == Tok::star) {
      advance();
      factors.push_back(parse_space_atom());
    }
    return SpaceExpr::product_of(std::move(factors));
  }

  SpaceExpr parse_space_atom() {
    Token name = expect(Tok::ident);
    if (name.text == "P" && peek().kind == Tok::lparen) {
      advance();
      SpaceExpr base = parse_space();
      expect(Tok::rparen);
      return SpaceExpr::power_of(std::move(base));
    }
    return SpaceExpr::named_space(name.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).formula(); }
SequentText parse_sequent(const std::string& text) { return Parser(text).sequent(); }
SpaceExpr parse_space_expr(const std::string& text) { return Parser(text).space_expr_only(); }
std::vector<std::pair<std::string, SpaceExpr>> parse_context_decl(const std::string& text) {
  return Parser(text).context_decl();
}

// ---------------------------------------------------------------------------
// printer

namespace {

std::string space_text(const SpaceExpr& e) {
  switch (e.kind) {
    case SpaceExpr::Kind::named:
      return e.name;
    case SpaceExpr::Kind::power:
      return "P(" + space_text(e.factors[0]) + ")";
    case SpaceExpr::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i) out += " * ";
        out += space_text(e.factors[i]);
      }
      return out;
    }
  }
  return {};
}

// precedence: iff 1, implies 2, or 3, and 4, not 5, atomic 6; quantifiers 0
int precedence(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::forall:
    case FormulaKind::exists:
      return 0;
    case FormulaKind::biconditional:
      return 1;
    case FormulaKind::implication:
      return 2;
    case FormulaKind::disjunction:
      return 3;
    case FormulaKind::conjunction:
      return 4;
    case FormulaKind::negation:
      return 5;
    default:
      return 6;
  }
}

void print_formula(const Formula& f, int min_prec, std::string& out);

void print_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::variable:
      out += t.var;
      break;
    case TermKind::literal:
      out += t.space_name + "::" + t.label;
      break;
    case TermKind::comprehension:
      out += "{ " + t.bound + " : " + space_text(t.bound_space) + " | ";
      print_formula(*t.body, 0, out);
      out += " }";
      break;
  }
}

void print_formula(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f);
  const bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f.kind) {
    case FormulaKind::truth:
      out += "top";
      break;
    case FormulaKind::falsity:
      out += "bottom";
      break;
    case FormulaKind::atom:
      out += f.atom;
      if (!f.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ", ";
          print_term(*f.args[i], out);
        }
        out += ")";
      }
      break;
    case FormulaKind::membership:
    case FormulaKind::equality:
      print_term(*f.args[0], out);
      out += f.kind == FormulaKind::membership ? " in " : " = ";
      print_term(*f.args[1], out);
      break;
    case FormulaKind::negation:
      out += "not ";
      print_formula(*f.lhs, 5, out);
      break;
    case FormulaKind::conjunction:
      print_formula(*f.lhs, 4, out);
      out += " and ";
      print_formula(*f.rhs, 5, out);
      break;
    case FormulaKind::disjunction:
      print_formula(*f.lhs, 3, out);
      out += " or ";
      print_formula(*f.rhs, 4, out);
      break;
    case FormulaKind::implication:
      print_formula(*f.lhs, 3, out);
      out += " implies ";
      print_formula(*f.rhs, 2, out);
      break;
    case FormulaKind::biconditional:
      print_formula(*f.lhs, 1, out);
      out += " iff ";
      print_formula(*f.rhs, 2, out);
      break;
    case FormulaKind::forall:
    case FormulaKind::exists:
      out += f.kind == FormulaKind::forall ? "forall " : "exists ";
      out += f.bound + " : " + space_text(f.bound_space) + " . ";
      print_formula(*f.body, 0, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string pretty(const Formula& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

std::string pretty(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

}  // namespace kht
