#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kht/heyting.hpp"
#include "kht/map.hpp"
#include "kht/topology.hpp"

namespace kht {

// The function space 2^A as a discrete space. Points are all maps A -> 2
// encoded as bitmask integers (bit i = value at point i), labelled by their
// binary numerals, so |A| = 2 gives points 00, 01, 10, 11 in mask order.
// Requires A discrete; the discreteness of 2^A is a theorem about the
// compact-open topology, recheckable via compact_open_is_discrete.
SpaceRef two_power(const SpaceRef& a, const Limits& lim = {});

// Recomputes the compact-open topology on 2^A from the subbasic sets
// C(K, U) = { f : f[K] ⊆ U } over all K ⊆ A and opens U of 2, and reports
// whether every singleton comes out open.
bool compact_open_is_discrete(const SpaceRef& a, const Limits& lim = {});

// ev : A × 2^A -> 2,  ev(a, f) = f(a).
ContMap evaluation_map(const SpaceRef& a, const Limits& lim = {});

// The exponential transpose of χ_φ: maps b to the bitmask of
// { a : (a, b) ∈ φ }. Satisfies ev ∘ (id_A × transpose(φ)) = χ_φ.
ContMap transpose(const SpaceRef& a, const SpaceRef& b, const Predicate& phi,
                  const Limits& lim = {});

// Extends f : A × B -> 2 to A × B_∞ -> 2 by sending every (a, ∞) to 0;
// the result is validated continuous.
ContMap extend_infinity(const SpaceRef& a, const ContMap& f, const Compactification& b_inf,
                        const Limits& lim = {});

// The weak power object of a discrete space A:
//   PA = (2^A)_∞, membership ∈_A = ev_∞⁻¹{1} on A × PA,
// with the canonical indexing of clopens of A by the non-∞ points of PA.
struct PowerObjectBundle {
  SpaceRef base;             // A
  SpaceRef function_space;   // 2^A
  Compactification compact;  // 2^A -> PA, ∞ last
  SpaceRef product_space;    // A × PA
  ContMap evaluation;        // ev
  ContMap evaluation_inf;    // ev_∞
  Predicate membership;      // ∈_A
  std::vector<Bits> index;   // PA point m (m < 2^|A|) -> clopen of A

  const SpaceRef& power() const { return compact.space; }
  std::size_t infinity_index() const { return compact.infinity_index; }
  // the indexing is a bijection clop(A) <-> non-∞ points
  std::size_t point_of_clopen(const Bits& s) const;
};

PowerObjectBundle power_object(const SpaceRef& a, const Limits& lim = {});

// {γ} : Y -> PX for a clopen γ on X×Y; never hits ∞ and satisfies
// (id_X × {γ})* ∈_X = γ.
ContMap name_of(const Predicate& gamma, const SpaceRef& x, const SpaceRef& y,
                const PowerObjectBundle& px, const Limits& lim = {});

// The equality predicate δ_X on X×X, computed by quantifying the
// biconditional of the two membership pullbacks over PX:
//   δ_X = ∀_{⟨π1,π2⟩}( ⟨π1,π3⟩*∈_X  ↔  ⟨π2,π3⟩*∈_X )
// with π_i the projections of X×X×PX.
Predicate equality_predicate(const SpaceRef& x, const Limits& lim = {});
Predicate equality_predicate(const SpaceRef& x, const PowerObjectBundle& px,
                             const Limits& lim = {});

}  // namespace kht
