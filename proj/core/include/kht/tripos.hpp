#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kht/heyting.hpp"
#include "kht/map.hpp"
#include "kht/report.hpp"
#include "kht/topology.hpp"

namespace kht {

// The inverse-image homomorphism clop(cod f) -> clop(dom f). Preservation
// of the Boolean operations is a consequence of continuity; verify()
// checks it exhaustively over the carriers.
struct AlgebraHom {
  SpaceRef source;  // cod f
  SpaceRef target;  // dom f
  std::function<Predicate(const Predicate&)> apply;

  std::vector<LawResult> verify(const Limits& lim = {}) const;
};

AlgebraHom inverse_image(const ContMap& f);
// φ ↦ f⁻¹[φ] directly, without the wrapper.
Predicate pullback(const ContMap& f, const Predicate& phi);

// Direct image along a clopen map: the left adjoint ∃_f of pullback.
// Throws not_clopen_map when f is not both an open and a closed map (the
// construction would leave clop otherwise).
Predicate exists_along(const ContMap& f, const Predicate& phi);
// Right adjoint ∀_f = ¬ ∃_f ¬. Points of the codomain with empty fiber are
// always included.
Predicate forall_along(const ContMap& f, const Predicate& phi);

// Quantifier implementations, swappable so that the law suites can be run
// against a deliberately broken quantifier (mutation self-test).
struct QuantifierOps {
  std::function<Predicate(const ContMap&, const Predicate&)> exists;
  std::function<Predicate(const ContMap&, const Predicate&)> forall;

  static QuantifierOps standard();
  // ∀ replaced by the direct image; breaks the right-adjoint law.
  static QuantifierOps forall_as_image();
};

// Exhaustively verifies both Galois biconditionals
//   ∃_f φ ≤ ψ  iff  φ ≤ f*ψ        (law "adjunction/exists")
//   f*ψ ≤ φ  iff  ψ ≤ ∀_f φ        (law "adjunction/forall")
// over all clopen pairs (φ, ψ); returns the lexicographically least
// witness on failure.
std::vector<LawResult> check_adjoint_chain(const ContMap& f, const QuantifierOps& ops,
                                           const Limits& lim = {});
std::vector<LawResult> check_adjoint_chain(const ContMap& f, const Limits& lim = {});

// A commuting square, pullback-verified on demand: right∘top = bottom∘left
// and the comparison into the fiber product is a bijection.
struct PullbackSquare {
  ContMap top;     // P -> B
  ContMap left;    // P -> A
  ContMap bottom;  // A -> D
  ContMap right;   // B -> D
};

bool is_pullback(const PullbackSquare& sq, std::string* why = nullptr);

// The reindexing square
//     X×Γ --π_Γ--> Γ
//      |id×k        |k
//     X×Δ --π_Δ--> Δ
// built and verified to be a pullback.
PullbackSquare beck_chevalley_square(const SpaceRef& x, const ContMap& k, const Limits& lim = {});

// For every clopen φ on X×Δ checks
//   ∃_{π_Γ} (id×k)* φ = k* ∃_{π_Δ} φ     (law "beck-chevalley/exists")
//   ∀_{π_Γ} (id×k)* φ = k* ∀_{π_Δ} φ     (law "beck-chevalley/forall")
std::vector<LawResult> check_beck_chevalley(const PullbackSquare& sq, const QuantifierOps& ops,
                                            const Limits& lim = {});
std::vector<LawResult> check_beck_chevalley(const PullbackSquare& sq, const Limits& lim = {});

// χ_φ : Y -> 2, mapping φ to 1; continuous because φ is clopen.
ContMap char_function(const Predicate& phi);

// The square  ⌊φ⌋ -> 1, with t: 1 -> 2 and χ_φ below; verified a pullback.
PullbackSquare classifier_square(const Predicate& phi);

}  // namespace kht
