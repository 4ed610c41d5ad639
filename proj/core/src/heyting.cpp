#include "kht/heyting.hpp"

#include <algorithm>
#include <utility>

#include "kht/errors.hpp"

namespace kht {

Predicate::Predicate(SpaceRef space, Bits extent)
    : space_(std::move(space)), extent_(std::move(extent)) {
  if (extent_.size() != space_->size())
    fail(Errc::validation, "extent has the wrong universe for " + space_->name());
  if (!space_->is_clopen(extent_))
    fail(Errc::not_clopen,
         space_->format_subset(extent_) + " is not clopen in " + space_->name());
}

namespace {

void require_same_space(const Predicate& a, const Predicate& b) {
  if (!same_space(a.space(), b.space()))
    fail(Errc::space_mismatch,
         "predicates live on " + a.space()->name() + " and " + b.space()->name());
}

}  // namespace

Predicate top(const SpaceRef& x) { return {x, x->full_set()}; }
Predicate bottom(const SpaceRef& x) { return {x, x->empty_set()}; }

Predicate meet(const Predicate& a, const Predicate& b) {
  require_same_space(a, b);
  return {a.space(), a.extent() & b.extent()};
}

Predicate join(const Predicate& a, const Predicate& b) {
  require_same_space(a, b);
  return {a.space(), a.extent() | b.extent()};
}

Predicate neg(const Predicate& a) { return {a.space(), ~a.extent()}; }

Predicate implies(const Predicate& a, const Predicate& b) {
  require_same_space(a, b);
  return {a.space(), ~a.extent() | b.extent()};
}

Predicate iff(const Predicate& a, const Predicate& b) {
  require_same_space(a, b);
  return {a.space(), ~(a.extent() ^ b.extent())};
}

bool leq(const Predicate& a, const Predicate& b) {
  require_same_space(a, b);
  return a.extent().is_subset_of(b.extent());
}

ClopenAlgebra::ClopenAlgebra(SpaceRef space, const Limits& lim) : space_(std::move(space)) {
  const auto& comps = space_->components();
  if (comps.size() >= 8 * sizeof(std::size_t) || (std::size_t{1} << comps.size()) > lim.family_cap)
    fail(Errc::size_cap, "clopen algebra of " + space_->name() + " exceeds the family cap");
  const std::size_t count = std::size_t{1} << comps.size();
  carrier_.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Bits s(space_->size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (mask & (std::size_t{1} << i)) s |= comps[i];
    carrier_.push_back(std::move(s));
  }
  std::sort(carrier_.begin(), carrier_.end());
}

ClopenAlgebra clop_algebra(const SpaceRef& x, const Limits& lim) { return ClopenAlgebra(x, lim); }

}  // namespace kht
