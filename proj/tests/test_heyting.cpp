#include <doctest.h>

#include "kht/enumerate.hpp"
#include "kht/errors.hpp"
#include "kht/heyting.hpp"

using namespace kht;

TEST_CASE("predicates must be clopen") {
  auto s = mk_space("S", {"0", "1"}, {{}, {1}, {0, 1}});
  CHECK_NOTHROW(Predicate(s, Bits(2)));
  CHECK_NOTHROW(Predicate(s, full_bits(2)));
  try {
    Predicate(s, bits_of(2, {1}));  // open but not closed
    FAIL("expected not_clopen");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_clopen);
  }
}

TEST_CASE("lattice operation examples") {
  auto x = discrete_space("X", {"a", "b", "c"});
  Predicate phi(x, bits_of(3, {0}));
  Predicate psi(x, bits_of(3, {1}));
  CHECK(meet(phi, top(x)) == phi);
  CHECK(neg(neg(phi)) == phi);
  CHECK(join(phi, psi) == Predicate(x, bits_of(3, {0, 1})));
  CHECK(leq(phi, join(phi, psi)));
  CHECK_FALSE(leq(join(phi, psi), phi));
}

TEST_CASE("implication examples with the residuation oracle") {
  auto x = discrete_space("X", {"a", "b"});
  Predicate phi(x, bits_of(2, {0}));
  Predicate psi(x, bits_of(2, {1}));
  CHECK(implies(phi, phi) == top(x));
  CHECK(iff(top(x), phi) == phi);
  // implies({a},{b}) = ¬{a} ∪ {b} = {b}
  CHECK(implies(phi, psi) == psi);
  // residuation oracle: the largest χ with χ∧φ ≤ ψ is the implication
  ClopenAlgebra alg(x);
  Bits best(2);
  for (const Bits& chi : alg.carrier())
    if ((chi & phi.extent()).is_subset_of(psi.extent())) best |= chi;
  CHECK(implies(phi, psi).extent() == best);
}

TEST_CASE("residuation holds exhaustively on every topology up to 4 points") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& space : all_topologies(n)) {
      ClopenAlgebra alg(space);
      for (const Bits& a : alg.carrier())
        for (const Bits& b : alg.carrier())
          for (const Bits& c : alg.carrier()) {
            Predicate phi(space, a), psi(space, b), chi(space, c);
            CHECK(leq(chi, implies(phi, psi)) == leq(meet(chi, phi), psi));
          }
    }
}

TEST_CASE("space mismatch is rejected") {
  auto x = discrete_space("X", {"a"});
  auto y = discrete_space("Y", {"u"});
  try {
    meet(top(x), top(y));
    FAIL("expected space_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::space_mismatch);
  }
}

TEST_CASE("clop algebra carriers") {
  CHECK(clop_algebra(discrete_space("D", {"a", "b", "c"})).size() == 8);
  CHECK(clop_algebra(mk_space("S", {"0", "1"}, {{}, {1}, {0, 1}})).size() == 2);
  CHECK(clop_algebra(discrete_space("E", {})).size() == 1);
}

TEST_CASE("clop algebra equals the filtered open family") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& space : all_topologies(n)) {
      // oracle: clopens are the opens whose complement is also open
      std::vector<Bits> expected;
      auto opens = space->opens();
      for (const Bits& o : opens)
        if (space->is_open(~o)) expected.push_back(o);
      ClopenAlgebra alg(space);
      CAPTURE(space->name());
      CHECK(alg.carrier() == expected);  // both in bitset-value order
    }
}

TEST_CASE("boolean axioms hold exhaustively at 3 points") {
  for (const auto& space : all_topologies(3)) {
    ClopenAlgebra alg(space);
    for (const Bits& ea : alg.carrier())
      for (const Bits& eb : alg.carrier()) {
        Predicate a(space, ea), b(space, eb);
        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(a, neg(a)) == top(space));
        CHECK(meet(a, neg(a)) == bottom(space));
        CHECK(implies(a, b) == join(neg(a), b));
      }
  }
}
