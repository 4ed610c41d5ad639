#pragma once

// Random surface-syntax generators for the parser round-trip property.

#include <random>
#include <string>
#include <vector>

#include "kht/formula.hpp"

namespace gen {

using kht::Formula;
using kht::FormulaKind;
using kht::FormulaPtr;
using kht::SpaceExpr;
using kht::Term;
using kht::TermKind;
using kht::TermPtr;

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline std::string ident(std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "z", "s", "phi", "psi", "p", "q", "r_1"};
  return names[below(rng, 9)];
}

inline SpaceExpr space_expr(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"X", "Y", "Z", "W"};
  if (depth <= 0 || below(rng, 3) == 0)
    return SpaceExpr::named_space(names[below(rng, 4)]);
  if (below(rng, 2) == 0) return SpaceExpr::power_of(space_expr(rng, depth - 1));
  std::vector<SpaceExpr> factors;
  std::size_t n = 2 + below(rng, 2);
  for (std::size_t i = 0; i < n; ++i) factors.push_back(space_expr(rng, depth - 1));
  return SpaceExpr::product_of(std::move(factors));
}

FormulaPtr formula(std::mt19937_64& rng, int depth);

inline TermPtr term(std::mt19937_64& rng, int depth) {
  auto t = std::make_shared<Term>();
  switch (depth <= 0 ? below(rng, 2) : below(rng, 3)) {
    case 0:
      t->kind = TermKind::variable;
      t->var = ident(rng);
      break;
    case 1:
      t->kind = TermKind::literal;
      t->space_name = "X";
      t->label = below(rng, 2) ? "a" : "0";
      break;
    default:
      t->kind = TermKind::comprehension;
      t->bound = ident(rng);
      t->bound_space = space_expr(rng, depth - 1);
      t->body = formula(rng, depth - 1);
      break;
  }
  return t;
}

inline FormulaPtr formula(std::mt19937_64& rng, int depth) {
  auto f = std::make_shared<Formula>();
  const std::uint64_t pick = depth <= 0 ? below(rng, 4) : below(rng, 12);
  switch (pick) {
    case 0:
      f->kind = FormulaKind::truth;
      break;
    case 1:
      f->kind = FormulaKind::falsity;
      break;
    case 2:
      f->kind = FormulaKind::atom;
      f->atom = ident(rng);
      if (depth > 0 && below(rng, 2)) {
        std::size_t n = 1 + below(rng, 2);
        for (std::size_t i = 0; i < n; ++i) f->args.push_back(term(rng, depth - 1));
      }
      break;
    case 3: {
      f->kind = below(rng, 2) ? FormulaKind::equality : FormulaKind::membership;
      f->args.push_back(term(rng, depth - 1));
      f->args.push_back(term(rng, depth - 1));
      break;
    }
    case 4:
      f->kind = FormulaKind::negation;
      f->lhs = formula(rng, depth - 1);
      break;
    case 5:
    case 6:
      f->kind = pick == 5 ? FormulaKind::conjunction : FormulaKind::disjunction;
      f->lhs = formula(rng, depth - 1);
      f->rhs = formula(rng, depth - 1);
      break;
    case 7:
      f->kind = FormulaKind::implication;
      f->lhs = formula(rng, depth - 1);
      f->rhs = formula(rng, depth - 1);
      break;
    case 8:
      f->kind = FormulaKind::biconditional;
      f->lhs = formula(rng, depth - 1);
      f->rhs = formula(rng, depth - 1);
      break;
    default:
      f->kind = below(rng, 2) ? FormulaKind::forall : FormulaKind::exists;
      f->bound = ident(rng);
      f->bound_space = space_expr(rng, depth - 1);
      f->body = formula(rng, depth - 1);
      break;
  }
  return f;
}

}  // namespace gen
