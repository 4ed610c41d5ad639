#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kht/space.hpp"

namespace kht {

// A clopen subset of a space: an element of clop(X). Construction enforces
// clopenness; on a discrete space every subset qualifies.
class Predicate {
public:
  Predicate(SpaceRef space, Bits extent);

  const SpaceRef& space() const { return space_; }
  const Bits& extent() const { return extent_; }
  bool is_full() const { return extent_.count() == space_->size(); }
  bool is_empty() const { return extent_.none(); }

  std::string describe() const { return space_->format_subset(extent_); }

  friend bool operator==(const Predicate& a, const Predicate& b) {
    return same_space(a.space_, b.space_) && a.extent_ == b.extent_;
  }

private:
  SpaceRef space_;
  Bits extent_;
};

Predicate top(const SpaceRef& x);
Predicate bottom(const SpaceRef& x);
Predicate meet(const Predicate& a, const Predicate& b);
Predicate join(const Predicate& a, const Predicate& b);
Predicate neg(const Predicate& a);
// Heyting implication; in the Boolean algebra clop(X) this is ¬a ∨ b,
// and it satisfies the residuation law c ≤ (a → b) iff c ∧ a ≤ b.
Predicate implies(const Predicate& a, const Predicate& b);
Predicate iff(const Predicate& a, const Predicate& b);
bool leq(const Predicate& a, const Predicate& b);

// The Boolean algebra of all clopen subsets of a space, enumerated in
// bitset-value order. Clopens are exactly the unions of connected
// components of the specialization preorder, so the carrier has size
// 2^(number of components).
class ClopenAlgebra {
public:
  explicit ClopenAlgebra(SpaceRef space, const Limits& lim = {});

  const SpaceRef& space() const { return space_; }
  const std::vector<Bits>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

private:
  SpaceRef space_;
  std::vector<Bits> carrier_;
};

ClopenAlgebra clop_algebra(const SpaceRef& x, const Limits& lim = {});

}  // namespace kht
