#include <doctest.h>

#include <random>

#include "kht/errors.hpp"
#include "kht/formula.hpp"
#include "support/generators.hpp"

using namespace kht;

TEST_CASE("quantified equality parses") {
  FormulaPtr f = parse_formula("forall x : X . x = x");
  REQUIRE(f->kind == FormulaKind::forall);
  CHECK(f->bound == "x");
  CHECK(f->bound_space == SpaceExpr::named_space("X"));
  REQUIRE(f->body->kind == FormulaKind::equality);
  CHECK(f->body->args[0]->kind == TermKind::variable);
  CHECK(f->body->args[0]->var == "x");
}

TEST_CASE("precedence: not > and > or > implies > iff") {
  FormulaPtr f = parse_formula("p and q or r");
  REQUIRE(f->kind == FormulaKind::disjunction);
  CHECK(f->lhs->kind == FormulaKind::conjunction);
  CHECK(f->rhs->atom == "r");

  FormulaPtr g = parse_formula("not p and q");
  REQUIRE(g->kind == FormulaKind::conjunction);
  CHECK(g->lhs->kind == FormulaKind::negation);

  FormulaPtr h = parse_formula("p implies q implies r");
  REQUIRE(h->kind == FormulaKind::implication);
  CHECK(h->rhs->kind == FormulaKind::implication);  // right-associative

  FormulaPtr i = parse_formula("p iff q implies r");
  REQUIRE(i->kind == FormulaKind::biconditional);
  CHECK(i->rhs->kind == FormulaKind::implication);
}

TEST_CASE("quantifier over a power space parses") {
  FormulaPtr f = parse_formula("exists s : P(X) . a in s");
  REQUIRE(f->kind == FormulaKind::exists);
  CHECK(f->bound_space == SpaceExpr::power_of(SpaceExpr::named_space("X")));
  REQUIRE(f->body->kind == FormulaKind::membership);
  CHECK(f->body->args[1]->var == "s");
}

TEST_CASE("quantifier bodies extend to the closest delimiter") {
  FormulaPtr f = parse_formula("forall x : X . p and q");
  REQUIRE(f->kind == FormulaKind::forall);
  CHECK(f->body->kind == FormulaKind::conjunction);

  FormulaPtr g = parse_formula("(forall x : X . p) and q");
  REQUIRE(g->kind == FormulaKind::conjunction);
  CHECK(g->lhs->kind == FormulaKind::forall);
}

TEST_CASE("comprehension and literals parse") {
  FormulaPtr f = parse_formula("y in { x : X | phi(x) }");
  REQUIRE(f->kind == FormulaKind::membership);
  REQUIRE(f->args[1]->kind == TermKind::comprehension);
  CHECK(f->args[1]->bound == "x");
  CHECK(f->args[1]->body->kind == FormulaKind::atom);

  FormulaPtr g = parse_formula("x = X::a");
  REQUIRE(g->kind == FormulaKind::equality);
  CHECK(g->args[1]->kind == TermKind::literal);
  CHECK(g->args[1]->space_name == "X");
  CHECK(g->args[1]->label == "a");

  FormulaPtr h = parse_formula("x = X::0");
  CHECK(h->args[1]->label == "0");
}

TEST_CASE("unicode aliases") {
  CHECK(structurally_equal(*parse_formula("∀ x : X . phi(x) ∧ ⊤"),
                           *parse_formula("forall x : X . phi(x) and top")));
  CHECK(structurally_equal(*parse_formula("¬ p ∨ (q → r)"),
                           *parse_formula("not p or (q implies r)")));
  CHECK(structurally_equal(*parse_formula("∃ s : P(X) . x ∈ s"),
                           *parse_formula("exists s : P(X) . x in s")));
  CHECK(structurally_equal(*parse_formula("p ↔ ⊥"), *parse_formula("p iff bottom")));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_formula("forall x X . top");
    FAIL("expected syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::syntax);
    CHECK(e.line() == 1);
    CHECK(e.col() > 1);
  }
  CHECK_THROWS_AS(parse_formula("p and"), Error);
  CHECK_THROWS_AS(parse_formula("phi(x) = y"), Error);  // applications are not terms
  CHECK_THROWS_AS(parse_formula("x ="), Error);
  CHECK_THROWS_AS(parse_formula("{ x : X | top }"), Error);  // a bare term is not a formula
  CHECK_THROWS_AS(parse_formula(""), Error);
}

TEST_CASE("sequent parsing") {
  SequentText s = parse_sequent("p and q |- p");
  CHECK(s.lhs->kind == FormulaKind::conjunction);
  CHECK(s.rhs->kind == FormulaKind::atom);
  CHECK_THROWS_AS(parse_sequent("p"), Error);
}

TEST_CASE("space expressions parse and print") {
  CHECK(parse_space_expr("X").key() == "X");
  CHECK(parse_space_expr("P(X)").key() == "P(X)");
  CHECK(parse_space_expr("X*Y*Z").key() == "(X*Y*Z)");
  CHECK(parse_space_expr("P(X*Y)").key() == "P((X*Y))");
  CHECK_THROWS_AS(parse_space_expr("X**Y"), Error);
}

TEST_CASE("context declarations") {
  auto ctx = parse_context_decl("x : X, s : P(X), p : X*Y");
  REQUIRE(ctx.size() == 3);
  CHECK(ctx[0].first == "x");
  CHECK(ctx[1].second == SpaceExpr::power_of(SpaceExpr::named_space("X")));
  CHECK(ctx[2].second.kind == SpaceExpr::Kind::product);
  CHECK(parse_context_decl("").empty());
  CHECK_THROWS_AS(parse_context_decl("x"), Error);
}

TEST_CASE("pretty printing round-trips hand-written formulas") {
  for (const char* text : {
           "forall x : X . x = x",
           "p and q or r",
           "not (p and q)",
           "p implies q implies r",
           "(p iff q) iff r",
           "exists s : P(X) . x in s and (forall y : Y . r(x, y))",
           "y in { x : X | phi(x) and psi(x) }",
           "x = X::a implies phi(x)",
       }) {
    FormulaPtr f = parse_formula(text);
    CAPTURE(text);
    CHECK(structurally_equal(*parse_formula(pretty(*f)), *f));
  }
}

TEST_CASE("parser round-trip on 1000 generated formulas") {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = gen::formula(rng, 4);
    std::string text = pretty(*f);
    CAPTURE(text);
    FormulaPtr back = parse_formula(text);
    CHECK(structurally_equal(*back, *f));
  }
}
