#include "kht/eval.hpp"

#include <set>
#include <utility>

#include "kht/errors.hpp"
#include "kht/tripos.hpp"

namespace kht {

Context Context::parse(const std::string& decl) {
  Context ctx;
  ctx.entries = parse_context_decl(decl);
  std::set<std::string> seen;
  for (const auto& [var, expr] : ctx.entries)
    if (!seen.insert(var).second)
      fail(Errc::type_error, "duplicate context variable '" + var + "'");
  return ctx;
}

Interp::Interp(const Model& model, Limits limits) : model_(&model), limits_(limits) {}

SpaceRef Interp::resolve_space(const SpaceExpr& e) {
  const std::string key = e.key();
  if (auto it = spaces_.find(key); it != spaces_.end()) return it->second;
  SpaceRef space;
  switch (e.kind) {
    case SpaceExpr::Kind::named:
      space = model_->find_space(e.name);
      if (!space) fail(Errc::unknown_space, "space '" + e.name + "' is not declared");
      break;
    case SpaceExpr::Kind::power:
      space = bundle(e.factors[0]).power();
      break;
    case SpaceExpr::Kind::product: {
      std::vector<SpaceExpr> fs = e.factors;
      space = product_of(fs).space();
      break;
    }
  }
  spaces_.emplace(key, space);
  return space;
}

const ProductSpace& Interp::product_of(const std::vector<SpaceExpr>& factors) {
  std::string key = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) key += "*";
    key += factors[i].key();
  }
  key += ")";
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  std::vector<SpaceRef> resolved;
  resolved.reserve(factors.size());
  for (const auto& f : factors) resolved.push_back(resolve_space(f));
  auto [it, _] = products_.emplace(key, ProductSpace(std::move(resolved), limits_));
  return it->second;
}

const PowerObjectBundle& Interp::bundle(const SpaceExpr& base) {
  const std::string key = base.key();
  if (auto it = bundles_.find(key); it != bundles_.end()) return it->second;
  SpaceRef x = resolve_space(base);
  auto [it, _] = bundles_.emplace(key, power_object(x, limits_));
  return it->second;
}

const Predicate& Interp::delta(const SpaceExpr& space) {
  const std::string key = space.key();
  if (auto it = deltas_.find(key); it != deltas_.end()) return it->second;
  SpaceRef x = resolve_space(space);
  auto [it, _] = deltas_.emplace(key, equality_predicate(x, bundle(space), limits_));
  return it->second;
}

// ---------------------------------------------------------------------------
// typechecking

namespace {

using Env = std::vector<std::pair<std::string, SpaceExpr>>;

[[noreturn]] void type_fail(Errc code, const std::string& msg, const SrcLoc& loc) {
  throw Error(code, msg, loc.line, loc.col);
}

void typecheck_formula(Formula& f, Env& env, Interp& interp);

void typecheck_term(Term& t, Env& env, Interp& interp) {
  switch (t.kind) {
    case TermKind::variable: {
      for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i].first == t.var) {
          t.slot = static_cast<int>(i);
          t.ty = env[i].second;
          return;
        }
      }
      type_fail(Errc::unbound_variable, "variable '" + t.var + "' is not bound", t.loc);
    }
    case TermKind::literal: {
      SpaceExpr named = SpaceExpr::named_space(t.space_name);
      SpaceRef space = interp.resolve_space(named);  // unknown_space if missing
      auto idx = space->index_of(t.label);
      if (!idx)
        type_fail(Errc::type_error,
                  "space " + t.space_name + " has no point labelled '" + t.label + "'", t.loc);
      t.point = static_cast<int>(*idx);
      t.ty = std::move(named);
      return;
    }
    case TermKind::comprehension: {
      interp.resolve_space(t.bound_space);
      env.emplace_back(t.bound, t.bound_space);
      typecheck_formula(*t.body, env, interp);
      env.pop_back();
      t.ty = SpaceExpr::power_of(t.bound_space);
      return;
    }
  }
}

SpaceRef env_space(const Env& env, Interp& interp) {
  std::vector<SpaceExpr> exprs;
  exprs.reserve(env.size());
  for (const auto& [_, e] : env) exprs.push_back(e);
  return interp.product_of(exprs).space();
}

void typecheck_formula(Formula& f, Env& env, Interp& interp) {
  switch (f.kind) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
      return;
    case FormulaKind::atom: {
      const Predicate* p = interp.model().find_predicate(f.atom);
      if (!p)
        type_fail(Errc::type_error, "predicate '" + f.atom + "' is not declared", f.loc);
      for (auto& arg : f.args) typecheck_term(*arg, env, interp);
      if (f.args.empty()) {
        // a bare predicate name stands for the whole context; a predicate
        // on a one-point space is a truth value usable in any context
        SpaceRef here = env_space(env, interp);
        if (!same_space(p->space(), here) && p->space()->size() != 1)
          type_fail(Errc::type_error,
                    "predicate '" + f.atom + "' lives on " + p->space()->name() +
                        ", not on the context space " + here->name(),
                    f.loc);
        return;
      }
      std::vector<SpaceExpr> arg_tys;
      for (const auto& arg : f.args) arg_tys.push_back(arg->ty);
      SpaceRef target = arg_tys.size() == 1 ? interp.resolve_space(arg_tys[0])
                                            : interp.product_of(arg_tys).space();
      if (!same_space(p->space(), target))
        type_fail(Errc::type_error,
                  "predicate '" + f.atom + "' lives on " + p->space()->name() +
                      " but is applied at " + target->name(),
                  f.loc);
      return;
    }
    case FormulaKind::membership: {
      typecheck_term(*f.args[0], env, interp);
      typecheck_term(*f.args[1], env, interp);
      SpaceExpr expected = SpaceExpr::power_of(f.args[0]->ty);
      if (!(f.args[1]->ty == expected))
        type_fail(Errc::type_error,
                  "'in' needs a set of type " + expected.key() + " on the right, found " +
                      f.args[1]->ty.key(),
                  f.loc);
      return;
    }
    case FormulaKind::equality: {
      typecheck_term(*f.args[0], env, interp);
      typecheck_term(*f.args[1], env, interp);
      if (!(f.args[0]->ty == f.args[1]->ty))
        type_fail(Errc::type_error,
                  "'=' compares " + f.args[0]->ty.key() + " with " + f.args[1]->ty.key(),
                  f.loc);
      return;
    }
    case FormulaKind::negation:
      typecheck_formula(*f.lhs, env, interp);
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
    case FormulaKind::biconditional:
      typecheck_formula(*f.lhs, env, interp);
      typecheck_formula(*f.rhs, env, interp);
      return;
    case FormulaKind::forall:
    case FormulaKind::exists:
      interp.resolve_space(f.bound_space);
      env.emplace_back(f.bound, f.bound_space);
      typecheck_formula(*f.body, env, interp);
      env.pop_back();
      return;
  }
}

}  // namespace

void typecheck(Formula& f, const Context& ctx, Interp& interp) {
  Env env = ctx.entries;
  typecheck_formula(f, env, interp);
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

Predicate eval_in_env(const Formula& f, Env& env, Interp& interp);

ContMap term_map(const Term& t, Env& env, Interp& interp) {
  std::vector<SpaceExpr> exprs;
  for (const auto& [_, e] : env) exprs.push_back(e);
  const ProductSpace& prod = interp.product_of(exprs);
  switch (t.kind) {
    case TermKind::variable:
      if (env.empty() || t.slot < 0) fail(Errc::validation, "formula was not typechecked");
      return prod.projection(static_cast<std::size_t>(t.slot));
    case TermKind::literal:
      return constant_map(prod.space(), interp.resolve_space(t.ty),
                          static_cast<std::size_t>(t.point));
    case TermKind::comprehension: {
      SpaceRef x = interp.resolve_space(t.bound_space);
      SpaceRef gamma = prod.space();
      env.emplace_back(t.bound, t.bound_space);
      Predicate body = eval_in_env(*t.body, env, interp);
      env.pop_back();
      // body lives on Γ×X with the bound variable last; the naming map
      // wants γ on X×Γ
      Product xg = product(x, gamma, interp.limits());
      Bits extent(xg.space->size());
      const std::size_t nx = x->size();
      for (std::size_t ix = 0; ix < nx; ++ix)
        for (std::size_t g = 0; g < gamma->size(); ++g)
          if (body.extent().test(g * nx + ix)) extent.set(ix * gamma->size() + g);
      Predicate swapped(xg.space, std::move(extent));
      return name_of(swapped, x, gamma, interp.bundle(t.bound_space), interp.limits());
    }
  }
  fail(Errc::validation, "unreachable term kind");
}

Predicate eval_in_env(const Formula& f, Env& env, Interp& interp) {
  std::vector<SpaceExpr> exprs;
  for (const auto& [_, e] : env) exprs.push_back(e);
  const SpaceRef here = interp.product_of(exprs).space();
  switch (f.kind) {
    case FormulaKind::truth:
      return top(here);
    case FormulaKind::falsity:
      return bottom(here);
    case FormulaKind::negation:
      return neg(eval_in_env(*f.lhs, env, interp));
    case FormulaKind::conjunction:
      return meet(eval_in_env(*f.lhs, env, interp), eval_in_env(*f.rhs, env, interp));
    case FormulaKind::disjunction:
      return join(eval_in_env(*f.lhs, env, interp), eval_in_env(*f.rhs, env, interp));
    case FormulaKind::implication:
      return implies(eval_in_env(*f.lhs, env, interp), eval_in_env(*f.rhs, env, interp));
    case FormulaKind::biconditional:
      return iff(eval_in_env(*f.lhs, env, interp), eval_in_env(*f.rhs, env, interp));
    case FormulaKind::atom: {
      const Predicate* p = interp.model().find_predicate(f.atom);
      if (!p) fail(Errc::type_error, "predicate '" + f.atom + "' is not declared");
      if (f.args.empty()) {
        if (same_space(p->space(), here)) return Predicate(here, p->extent());
        return pullback(constant_map(here, p->space(), 0), *p);
      }
      std::vector<ContMap> dens;
      dens.reserve(f.args.size());
      for (const auto& arg : f.args) dens.push_back(term_map(*arg, env, interp));
      if (dens.size() == 1) return pullback(dens[0], *p);
      std::vector<SpaceExpr> arg_tys;
      for (const auto& arg : f.args) arg_tys.push_back(arg->ty);
      ContMap tup = tuple_into(interp.product_of(arg_tys), dens);
      return pullback(tup, *p);
    }
    case FormulaKind::membership: {
      const SpaceExpr& elem_ty = f.args[0]->ty;
      const PowerObjectBundle& px = interp.bundle(elem_ty);
      SpaceRef x = interp.resolve_space(elem_ty);
      Product xpx = product(x, px.power(), interp.limits());
      ContMap pairing =
          pair_into(xpx, term_map(*f.args[0], env, interp), term_map(*f.args[1], env, interp));
      return pullback(pairing, px.membership);
    }
    case FormulaKind::equality: {
      const SpaceExpr& ty = f.args[0]->ty;
      const Predicate& delta = interp.delta(ty);
      SpaceRef x = interp.resolve_space(ty);
      Product xx = product(x, x, interp.limits());
      ContMap pairing =
          pair_into(xx, term_map(*f.args[0], env, interp), term_map(*f.args[1], env, interp));
      return pullback(pairing, delta);
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
      env.emplace_back(f.bound, f.bound_space);
      Predicate body = eval_in_env(*f.body, env, interp);
      std::vector<SpaceExpr> inner;
      for (const auto& [_, e] : env) inner.push_back(e);
      const ProductSpace& extended = interp.product_of(inner);
      env.pop_back();
      ContMap proj = extended.drop_last().projection;
      return f.kind == FormulaKind::forall ? forall_along(proj, body)
                                           : exists_along(proj, body);
    }
  }
  fail(Errc::validation, "unreachable formula kind");
}

}  // namespace

Predicate eval_formula(const Formula& f, const Context& ctx, Interp& interp) {
  Env env = ctx.entries;
  return eval_in_env(f, env, interp);
}

SequentResult eval_sequent(Formula& lhs, Formula& rhs, const Context& ctx, Interp& interp) {
  typecheck(lhs, ctx, interp);
  typecheck(rhs, ctx, interp);
  Predicate a = eval_formula(lhs, ctx, interp);
  Predicate b = eval_formula(rhs, ctx, interp);
  if (leq(a, b)) return {true, std::nullopt, ""};
  Bits gap = a.extent() & ~b.extent();
  std::size_t least = gap.find_first();
  return {false, least, a.space()->label(least)};
}

Predicate eval_text(const std::string& formula, const std::string& context_decl, Interp& interp) {
  Context ctx = Context::parse(context_decl);
  FormulaPtr f = parse_formula(formula);
  typecheck(*f, ctx, interp);
  return eval_formula(*f, ctx, interp);
}

SequentResult eval_sequent_text(const std::string& sequent, const std::string& context_decl,
                                Interp& interp) {
  Context ctx = Context::parse(context_decl);
  SequentText st = parse_sequent(sequent);
  return eval_sequent(*st.lhs, *st.rhs, ctx, interp);
}

}  // namespace kht
