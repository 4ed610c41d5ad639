#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kht/bits.hpp"

namespace kht {

class FinSpace;
using SpaceRef = std::shared_ptr<const FinSpace>;

// Guard rails for the constructions that grow exponentially.
struct Limits {
  std::size_t point_cap = 4096;       // products, power objects
  std::size_t family_cap = 1u << 20;  // open/clopen family enumeration
};

// A finite topological space.
//
// The topology is stored as the minimal open neighbourhood of each point:
// a set is open iff it contains the minimal neighbourhood of each of its
// points. For a finite space this is loss-free — the open-set family is
// exactly the family of unions of minimal neighbourhoods — and it keeps
// discrete spaces with hundreds of points workable, where the explicit
// family (2^n sets) could not be materialized. opens() recovers the
// explicit family on demand, in canonical bitset-value order.
class FinSpace {
public:
  // low-level; callers normally go through mk_space / discrete_space
  FinSpace(std::string name, std::vector<std::string> labels, std::vector<Bits> min_nbhd);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Bits& min_nbhd(std::size_t i) const { return min_nbhd_[i]; }
  bool is_open(const Bits& s) const;
  bool is_closed(const Bits& s) const;
  bool is_clopen(const Bits& s) const { return is_open(s) && is_closed(s); }
  bool is_discrete() const { return discrete_; }

  Bits closure(const Bits& s) const;
  Bits interior(const Bits& s) const;
  Bits empty_set() const { return Bits(size()); }
  Bits full_set() const { return full_bits(size()); }

  // Every open set, sorted by bitset value. Throws size_cap when the family
  // exceeds the cap (e.g. a large discrete space).
  std::vector<Bits> opens(std::size_t family_cap = Limits{}.family_cap) const;

  // Connected components of the specialization preorder; the clopen sets
  // are exactly the unions of these.
  const std::vector<Bits>& components() const { return components_; }

  std::string format_subset(const Bits& s) const { return format_labeled(s, labels_); }

  bool structurally_equal(const FinSpace& other) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Bits> min_nbhd_;
  std::vector<Bits> components_;
  bool discrete_ = true;
};

// Same object or structurally equal (same name, labels, topology).
bool same_space(const SpaceRef& a, const SpaceRef& b);

// Validates that `opens` is a topology on the given points: contains the
// empty and full sets and is closed under pairwise union and intersection
// (which for a finite family is closure under arbitrary unions). The family
// is deduplicated but never silently completed; a missing set is an error
// that names the witnessing pair.
SpaceRef mk_space(std::string name, std::vector<std::string> labels,
                  const std::vector<std::vector<int>>& opens);
SpaceRef mk_space_family(std::string name, std::vector<std::string> labels,
                         std::vector<Bits> opens);

SpaceRef discrete_space(std::string name, std::vector<std::string> labels);

// The one-point space 1 and the two-point discrete space 2.
SpaceRef terminal_space();
SpaceRef two_space();

// True iff every pair of distinct points has disjoint open neighbourhoods.
// Checked via minimal neighbourhoods: x and y can be separated iff their
// minimal neighbourhoods are disjoint. Every finite space is compact, so
// for finite spaces this decides membership in KH.
bool is_hausdorff(const FinSpace& x);

// Every finite space is compact: any open cover has a finite subcover
// because there are only finitely many opens. Kept as a named check so the
// KH-membership test reads as compact ∧ Hausdorff.
inline bool is_compact(const FinSpace&) { return true; }

}  // namespace kht
