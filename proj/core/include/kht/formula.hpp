#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kht {

struct SrcLoc {
  int line = 0;  // 1-based; 0 = unknown
  int col = 0;
};

// Space expressions: a declared name, a power space P(E), or a left-major
// product E1*E2*...*En (flattened, n >= 2).
struct SpaceExpr {
  enum class Kind { named, power, product };
  Kind kind = Kind::named;
  std::string name;
  std::vector<SpaceExpr> factors;

  static SpaceExpr named_space(std::string n) { return {Kind::named, std::move(n), {}}; }
  static SpaceExpr power_of(SpaceExpr base);
  static SpaceExpr product_of(std::vector<SpaceExpr> fs);

  std::string key() const;  // canonical text, e.g. "P((X*Y))"
  friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);
};

struct Formula;
using FormulaPtr = std::shared_ptr<Formula>;

enum class TermKind { variable, literal, comprehension };

// Terms denote maps from the context space: variables are projections,
// literals are constant maps, comprehensions are naming maps into a power
// space.
struct Term {
  TermKind kind = TermKind::variable;
  SrcLoc loc;

  std::string var;  // variable: surface name
  int slot = -1;    // absolute context position, filled by typecheck

  std::string space_name;  // literal Space::label
  std::string label;
  int point = -1;  // filled by typecheck

  std::string bound;  // comprehension { bound : bound_space | body }
  SpaceExpr bound_space;
  FormulaPtr body;

  SpaceExpr ty;  // the term's space, filled by typecheck
};
using TermPtr = std::shared_ptr<Term>;

enum class FormulaKind {
  truth,
  falsity,
  atom,
  conjunction,
  disjunction,
  negation,
  implication,
  biconditional,
  forall,
  exists,
  membership,
  equality,
};

struct Formula {
  FormulaKind kind = FormulaKind::truth;
  SrcLoc loc;

  std::string atom;           // atom: predicate name
  std::vector<TermPtr> args;  // atom arguments; membership/equality use args[0], args[1]

  FormulaPtr lhs, rhs;  // binary connectives; negation uses lhs only

  std::string bound;  // quantifiers
  SpaceExpr bound_space;
  FormulaPtr body;
};

// Structural equality on the surface syntax; ignores locations and the
// annotations filled in by typechecking.
bool structurally_equal(const Formula& a, const Formula& b);
bool structurally_equal(const Term& a, const Term& b);

// Grammar (ASCII keywords, Unicode aliases ∀ ∃ ∧ ∨ ¬ → ↔ ∈ ⊤ ⊥ accepted):
//   formula   := iff
//   iff       := implies ("iff" implies)*            left-associative
//   implies   := or ("implies" implies)?             right-associative
//   or        := and ("or" and)*
//   and       := unary ("and" unary)*
//   unary     := "not" unary | quantifier | primary
//   quantifier:= ("forall"|"exists") IDENT ":" space "." formula
//   primary   := "(" formula ")" | "top" | "bottom" | relational
//   relational:= term "=" term | term "in" term | IDENT | IDENT "(" terms ")"
//   term      := IDENT | IDENT "::" (IDENT|NUMBER) | "{" IDENT ":" space "|" formula "}"
//   space     := spaceatom ("*" spaceatom)*
//   spaceatom := IDENT | "P" "(" space ")"
// Quantifier and comprehension bodies extend to the closest enclosing
// delimiter. Throws syntax errors with line/column.
FormulaPtr parse_formula(const std::string& text);

struct SequentText {
  FormulaPtr lhs, rhs;
};
// "phi |- psi"
SequentText parse_sequent(const std::string& text);

SpaceExpr parse_space_expr(const std::string& text);

// "x : X, s : P(X)"; the empty string declares the empty context.
std::vector<std::pair<std::string, SpaceExpr>> parse_context_decl(const std::string& text);

// Canonical text; parse(pretty(f)) is structurally equal to f.
std::string pretty(const Formula& f);
std::string pretty(const Term& t);

}  // namespace kht
