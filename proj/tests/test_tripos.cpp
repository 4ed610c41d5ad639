#include <doctest.h>

#include "kht/enumerate.hpp"
#include "kht/errors.hpp"
#include "kht/tripos.hpp"
#include "support/oracles.hpp"

using namespace kht;

TEST_CASE("inverse image examples") {
  auto x = discrete_space("X", {"a", "b"});
  auto y = discrete_space("Y", {"u", "v"});
  ContMap f(x, y, {0, 0});
  AlgebraHom hom = inverse_image(f);
  CHECK(hom.apply(top(y)) == top(x));
  CHECK(hom.apply(bottom(y)) == bottom(x));
  CHECK(hom.apply(Predicate(y, bits_of(2, {0}))) == top(x));   // f⁻¹{u} = {a,b}
  CHECK(hom.apply(Predicate(y, bits_of(2, {1}))) == bottom(x));  // f⁻¹{v} = ∅
  AlgebraHom idh = inverse_image(identity_map(x));
  Predicate p(x, bits_of(2, {1}));
  CHECK(idh.apply(p) == p);
  CHECK(all_pass(hom.verify()));
}

TEST_CASE("quantifier examples along the projection") {
  auto x = discrete_space("X", {"a", "b"});
  auto y = discrete_space("Y", {"u", "v"});
  Product p = product(x, y);  // (a,u)=0 (a,v)=1 (b,u)=2 (b,v)=3
  const ContMap& pi_y = p.proj_right;
  Predicate au(p.space, bits_of(4, {0}));
  CHECK(exists_along(pi_y, au) == Predicate(y, bits_of(2, {0})));
  CHECK(forall_along(pi_y, au) == bottom(y));
  Predicate column_u(p.space, bits_of(4, {0, 2}));
  CHECK(forall_along(pi_y, column_u) == Predicate(y, bits_of(2, {0})));
  CHECK(exists_along(pi_y, bottom(p.space)) == bottom(y));
  ContMap id = identity_map(p.space);
  CHECK(exists_along(id, au) == au);
  CHECK(forall_along(id, au) == au);
}

TEST_CASE("quantifiers along the unique map to the terminal space") {
  auto x = discrete_space("X", {"a", "b", "c"});
  ContMap bang = unique_to_terminal(x);
  for_each_subset(3, [&](const Bits& e) {
    Predicate phi(x, e);
    // ∃ = "is φ nonempty", ∀ = "is φ full", as predicates on 1
    CHECK(exists_along(bang, phi).extent().any() == e.any());
    CHECK(forall_along(bang, phi).extent().any() == (e.count() == 3));
  });
}

TEST_CASE("quantifiers match the fiberwise oracle on all maps up to size 3") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb) {
      auto a = nth_discrete(na), b = nth_discrete(nb);
      for_each_cont_map(a, b, [&](const ContMap& f) {
        for_each_subset(na, [&](const Bits& e) {
          Predicate phi(a, e);
          CHECK(exists_along(f, phi).extent() == oracle::exists_fiberwise(f, e));
          CHECK(forall_along(f, phi).extent() == oracle::forall_fiberwise(f, e));
        });
      });
    }
}

TEST_CASE("quantification along a non-clopen map is refused") {
  auto s = mk_space("S", {"0", "1"}, {{}, {1}, {0, 1}});
  auto d = discrete_space("D", {"a"});
  ContMap f(d, s, {0});  // image of the open {a} is {0}, not open in S
  try {
    exists_along(f, top(d));
    FAIL("expected not_clopen_map");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_clopen_map);
  }
}

TEST_CASE("adjoint chain reports pass on every map between sizes 0..3") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for_each_cont_map(nth_discrete(na), nth_discrete(nb), [&](const ContMap& f) {
        CHECK(all_pass(check_adjoint_chain(f)));
      });
}

TEST_CASE("adjoint chain catches the broken forall") {
  auto ops = QuantifierOps::forall_as_image();
  // least witness: the empty map into D1, φ = ∅, ψ = {0}
  ContMap f(nth_discrete(0), nth_discrete(1), {});
  auto results = check_adjoint_chain(f, ops);
  bool found = false;
  for (const auto& r : results)
    if (r.law == "adjunction/forall") {
      CHECK_FALSE(r.pass);
      CHECK(r.witness["phi"].empty());
      CHECK(r.witness["psi"] == nlohmann::json::array({0}));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("beck-chevalley square examples") {
  SUBCASE("identity k") {
    auto g = discrete_space("G", {"g0", "g1"});
    PullbackSquare sq = beck_chevalley_square(discrete_space("X", {"x"}), identity_map(g));
    CHECK(is_pullback(sq));
    CHECK(all_pass(check_beck_chevalley(sq)));
  }
  SUBCASE("terminal X degenerates to k") {
    auto g = discrete_space("G", {"g0"});
    auto d = discrete_space("D", {"d0", "d1"});
    PullbackSquare sq = beck_chevalley_square(terminal_space(), ContMap(g, d, {0}));
    CHECK(sq.top.dom()->size() == 1);
    CHECK(is_pullback(sq));
  }
  SUBCASE("2-point X, 1-point Gamma, 2-point Delta") {
    auto x = discrete_space("X", {"x1", "x2"});
    auto g = discrete_space("G", {"g"});
    auto d = discrete_space("D", {"d1", "d2"});
    PullbackSquare sq = beck_chevalley_square(x, ContMap(g, d, {0}));
    CHECK(sq.top.dom()->size() == 2);
    CHECK(sq.left.cod()->size() == 4);
    CHECK(is_pullback(sq));
    CHECK(all_pass(check_beck_chevalley(sq)));
  }
}

TEST_CASE("a non-pullback square is detected") {
  // shrink the corner: only one point over a two-point fiber product
  auto x = discrete_space("X", {"x1", "x2"});
  auto g = discrete_space("G", {"g"});
  auto d = discrete_space("D", {"d1", "d2"});
  ContMap k(g, d, {0});
  Product xg = product(x, g);
  Product xd = product(x, d);
  Subspace corner = subspace(xg.space, bits_of(2, {0}));
  PullbackSquare bad{
      compose(xg.proj_right, corner.inclusion),
      compose(map_product(identity_map(x), k), corner.inclusion),
      xd.proj_right,
      k,
  };
  std::string why;
  CHECK_FALSE(is_pullback(bad, &why));
  CHECK(why.find("misses") != std::string::npos);
}

TEST_CASE("characteristic functions and the classifier square") {
  auto y = discrete_space("Y", {"u", "v"});
  Predicate full = top(y);
  CHECK(char_function(full).table() == std::vector<int>{1, 1});
  CHECK(char_function(bottom(y)).table() == std::vector<int>{0, 0});
  Predicate phi(y, bits_of(2, {0}));
  ContMap chi = char_function(phi);
  CHECK(chi.table() == std::vector<int>{1, 0});
  PullbackSquare sq = classifier_square(phi);
  CHECK(is_pullback(sq));
  // brute-force fiber product: {(y, *) : χ(y) = 1} has exactly |φ| points
  std::size_t fiber = 0;
  for (std::size_t i = 0; i < y->size(); ++i)
    if (chi(i) == 1) ++fiber;
  CHECK(fiber == phi.extent().count());
  CHECK(sq.top.dom()->size() == fiber);
}

TEST_CASE("classifier square works on clopens of non-discrete spaces") {
  auto s = mk_space("S", {"0", "1"}, {{}, {1}, {0, 1}});
  CHECK(is_pullback(classifier_square(top(s))));
  CHECK(is_pullback(classifier_square(bottom(s))));
}

TEST_CASE("functoriality over composable pairs of sizes up to 2") {
  for (int na = 0; na <= 2; ++na)
    for (int nb = 0; nb <= 2; ++nb)
      for (int nc = 0; nc <= 2; ++nc) {
        auto a = nth_discrete(na), b = nth_discrete(nb), c = nth_discrete(nc);
        for_each_cont_map(a, b, [&](const ContMap& f) {
          for_each_cont_map(b, c, [&](const ContMap& g) {
            AlgebraHom gf = inverse_image(compose(g, f));
            for_each_subset(nc, [&](const Bits& e) {
              Predicate p(c, e);
              CHECK(gf.apply(p) == inverse_image(f).apply(inverse_image(g).apply(p)));
            });
          });
        });
      }
}
