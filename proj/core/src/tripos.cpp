#include "kht/tripos.hpp"

#include <utility>

#include "kht/errors.hpp"

namespace kht {

Predicate pullback(const ContMap& f, const Predicate& phi) {
  if (!same_space(phi.space(), f.cod()))
    fail(Errc::space_mismatch,
         "predicate on " + phi.space()->name() + " cannot be pulled back along a map into " +
             f.cod()->name());
  return {f.dom(), f.preimage(phi.extent())};
}

AlgebraHom inverse_image(const ContMap& f) {
  return {f.cod(), f.dom(), [f](const Predicate& phi) { return pullback(f, phi); }};
}

std::vector<LawResult> AlgebraHom::verify(const Limits& lim) const {
  ClopenAlgebra algebra(source, lim);
  const auto& carrier = algebra.carrier();
  auto mk = [&](const Bits& e) { return Predicate(source, e); };
  std::vector<LawResult> out;

  auto check = [&](const char* law, bool ok, const Bits& a, const Bits* b) {
    if (!ok) {
      nlohmann::json w;
      w["space"] = source->name();
      w["phi"] = indices_of(a);
      if (b) w["psi"] = indices_of(*b);
      out.push_back(LawResult::violation(std::string("hom/") + law,
                                         "on " + source->name(), std::move(w)));
    }
    return ok;
  };

  bool top_ok = apply(top(source)) == top(target);
  check("top", top_ok, source->full_set(), nullptr);
  bool bottom_ok = apply(bottom(source)) == bottom(target);
  check("bottom", bottom_ok, source->empty_set(), nullptr);

  for (const Bits& a : carrier) {
    if (!check("neg", apply(neg(mk(a))) == neg(apply(mk(a))), a, nullptr)) break;
    bool pair_ok = true;
    for (const Bits& b : carrier) {
      Predicate pa = apply(mk(a)), pb = apply(mk(b));
      if (!check("meet", apply(meet(mk(a), mk(b))) == meet(pa, pb), a, &b)) pair_ok = false;
      if (pair_ok && !check("join", apply(join(mk(a), mk(b))) == join(pa, pb), a, &b))
        pair_ok = false;
      if (pair_ok && !check("implies", apply(implies(mk(a), mk(b))) == implies(pa, pb), a, &b))
        pair_ok = false;
      if (!pair_ok) break;
    }
    if (!pair_ok) break;
  }
  if (out.empty())
    out.push_back(LawResult::ok("hom/boolean-operations",
                                "clop(" + source->name() + ") -> clop(" + target->name() + ")"));
  return out;
}

namespace {

void require_clopen_map(const ContMap& f) {
  if (!is_open_map(f) || !is_closed_map(f))
    fail(Errc::not_clopen_map, f.describe() + " is not a clopen map");
}

}  // namespace

Predicate exists_along(const ContMap& f, const Predicate& phi) {
  if (!same_space(phi.space(), f.dom()))
    fail(Errc::space_mismatch, "predicate is not on the domain of the map");
  require_clopen_map(f);
  return {f.cod(), f.image(phi.extent())};
}

Predicate forall_along(const ContMap& f, const Predicate& phi) {
  if (!same_space(phi.space(), f.dom()))
    fail(Errc::space_mismatch, "predicate is not on the domain of the map");
  require_clopen_map(f);
  return {f.cod(), ~f.image(~phi.extent())};
}

QuantifierOps QuantifierOps::standard() {
  return {[](const ContMap& f, const Predicate& p) { return exists_along(f, p); },
          [](const ContMap& f, const Predicate& p) { return forall_along(f, p); }};
}

QuantifierOps QuantifierOps::forall_as_image() {
  auto ops = standard();
  ops.forall = ops.exists;
  return ops;
}

namespace {

nlohmann::json map_json(const ContMap& f) {
  nlohmann::json j;
  j["dom"] = f.dom()->name();
  j["cod"] = f.cod()->name();
  j["table"] = f.table();
  return j;
}

nlohmann::json adjoint_witness(const ContMap& f, const Bits& phi, const Bits& psi) {
  nlohmann::json w;
  w["f"] = map_json(f);
  w["phi"] = indices_of(phi);
  w["psi"] = indices_of(psi);
  return w;
}

}  // namespace

std::vector<LawResult> check_adjoint_chain(const ContMap& f, const QuantifierOps& ops,
                                           const Limits& lim) {
  ClopenAlgebra dom_alg(f.dom(), lim);
  ClopenAlgebra cod_alg(f.cod(), lim);
  std::vector<LawResult> out;

  bool exists_ok = true, forall_ok = true;
  // carrier is value-ordered, so the first failure is the least witness
  for (const Bits& phi : dom_alg.carrier()) {
    for (const Bits& psi : cod_alg.carrier()) {
      Predicate p(f.dom(), phi), q(f.cod(), psi);
      if (exists_ok) {
        bool lhs = leq(ops.exists(f, p), q);
        bool rhs = leq(p, pullback(f, q));
        if (lhs != rhs) {
          exists_ok = false;
          out.push_back(LawResult::violation(
              "adjunction/exists",
              "on " + f.describe() + " phi=" + p.describe() + " psi=" + q.describe(),
              adjoint_witness(f, phi, psi)));
        }
      }
      if (forall_ok) {
        bool lhs = leq(pullback(f, q), p);
        bool rhs = leq(q, ops.forall(f, p));
        if (lhs != rhs) {
          forall_ok = false;
          out.push_back(LawResult::violation(
              "adjunction/forall",
              "on " + f.describe() + " phi=" + p.describe() + " psi=" + q.describe(),
              adjoint_witness(f, phi, psi)));
        }
      }
      if (!exists_ok && !forall_ok) break;
    }
    if (!exists_ok && !forall_ok) break;
  }
  if (exists_ok) out.push_back(LawResult::ok("adjunction/exists", "on " + f.describe()));
  if (forall_ok) out.push_back(LawResult::ok("adjunction/forall", "on " + f.describe()));
  return out;
}

std::vector<LawResult> check_adjoint_chain(const ContMap& f, const Limits& lim) {
  return check_adjoint_chain(f, QuantifierOps::standard(), lim);
}

bool is_pullback(const PullbackSquare& sq, std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!same_space(sq.top.dom(), sq.left.dom())) return explain("corner domains differ");
  if (!same_space(sq.top.cod(), sq.right.dom())) return explain("top leg does not match right leg");
  if (!same_space(sq.left.cod(), sq.bottom.dom()))
    return explain("left leg does not match bottom leg");
  if (!same_space(sq.bottom.cod(), sq.right.cod())) return explain("square does not close");

  const auto& p = sq.top.dom();
  for (std::size_t i = 0; i < p->size(); ++i)
    if (sq.right(sq.top(i)) != sq.bottom(sq.left(i)))
      return explain("square does not commute at " + p->label(i));

  // the comparison ⟨left, top⟩ : P -> {(a, b) : bottom(a) = right(b)}
  // must be a bijection
  const auto& a_space = sq.bottom.dom();
  const auto& b_space = sq.right.dom();
  std::vector<std::vector<int>> hit(a_space->size(), std::vector<int>(b_space->size(), 0));
  for (std::size_t i = 0; i < p->size(); ++i) hit[sq.left(i)][sq.top(i)] += 1;
  for (std::size_t a = 0; a < a_space->size(); ++a) {
    for (std::size_t b = 0; b < b_space->size(); ++b) {
      bool in_fiber_product = sq.bottom(a) == sq.right(b);
      if (in_fiber_product && hit[a][b] != 1)
        return explain("comparison misses or duplicates (" + a_space->label(a) + ", " +
                       b_space->label(b) + ")");
      if (!in_fiber_product && hit[a][b] != 0)
        return explain("comparison lands outside the fiber product");
    }
  }
  return true;
}

PullbackSquare beck_chevalley_square(const SpaceRef& x, const ContMap& k, const Limits& lim) {
  Product top_prod = product(x, k.dom(), lim);     // X×Γ
  Product bottom_prod = product(x, k.cod(), lim);  // X×Δ
  ContMap id_x = identity_map(x);
  PullbackSquare sq{
      top_prod.proj_right,            // π_Γ
      map_product(id_x, k, lim),      // id×k
      bottom_prod.proj_right,         // π_Δ
      k,
  };
  std::string why;
  if (!is_pullback(sq, &why))
    fail(Errc::validation, "generated square is not a pullback: " + why);
  return sq;
}

std::vector<LawResult> check_beck_chevalley(const PullbackSquare& sq, const QuantifierOps& ops,
                                            const Limits& lim) {
  ClopenAlgebra alg(sq.left.cod(), lim);  // clop(X×Δ)
  std::vector<LawResult> out;
  bool exists_ok = true, forall_ok = true;
  auto witness = [&](const Bits& phi) {
    nlohmann::json w;
    w["square"] = {{"gamma", sq.top.cod()->name()},
                   {"delta", sq.right.cod()->name()},
                   {"k", sq.right.table()}};
    w["phi"] = indices_of(phi);
    return w;
  };
  for (const Bits& e : alg.carrier()) {
    Predicate phi(sq.left.cod(), e);
    if (exists_ok) {
      Predicate lhs = ops.exists(sq.top, pullback(sq.left, phi));
      Predicate rhs = pullback(sq.right, ops.exists(sq.bottom, phi));
      if (!(lhs == rhs)) {
        exists_ok = false;
        out.push_back(LawResult::violation("beck-chevalley/exists",
                                           "phi=" + phi.describe() + " over k=" +
                                               sq.right.describe(),
                                           witness(e)));
      }
    }
    if (forall_ok) {
      Predicate lhs = ops.forall(sq.top, pullback(sq.left, phi));
      Predicate rhs = pullback(sq.right, ops.forall(sq.bottom, phi));
      if (!(lhs == rhs)) {
        forall_ok = false;
        out.push_back(LawResult::violation("beck-chevalley/forall",
                                           "phi=" + phi.describe() + " over k=" +
                                               sq.right.describe(),
                                           witness(e)));
      }
    }
    if (!exists_ok && !forall_ok) break;
  }
  if (exists_ok)
    out.push_back(LawResult::ok("beck-chevalley/exists", "over k=" + sq.right.describe()));
  if (forall_ok)
    out.push_back(LawResult::ok("beck-chevalley/forall", "over k=" + sq.right.describe()));
  return out;
}

std::vector<LawResult> check_beck_chevalley(const PullbackSquare& sq, const Limits& lim) {
  return check_beck_chevalley(sq, QuantifierOps::standard(), lim);
}

ContMap char_function(const Predicate& phi) {
  const auto& y = phi.space();
  std::vector<int> table(y->size(), 0);
  for (auto i = phi.extent().find_first(); i != Bits::npos; i = phi.extent().find_next(i))
    table[i] = 1;
  return {y, two_space(), std::move(table)};
}

PullbackSquare classifier_square(const Predicate& phi) {
  Subspace sub = subspace(phi.space(), phi.extent());
  ContMap t = constant_map(terminal_space(), two_space(), 1);
  PullbackSquare sq{
      unique_to_terminal(sub.space),
      sub.inclusion,
      char_function(phi),
      t,
  };
  std::string why;
  if (!is_pullback(sq, &why))
    fail(Errc::validation, "classifier square is not a pullback: " + why);
  return sq;
}

}  // namespace kht
