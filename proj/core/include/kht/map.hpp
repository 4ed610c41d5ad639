#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kht/space.hpp"

namespace kht {

// A point-level function between finite spaces, validated continuous at
// construction. Continuity is checked through minimal neighbourhoods:
// f is continuous iff f[U_x] ⊆ U_f(x) for every point x. On failure the
// error names the open set whose preimage is not open.
class ContMap {
public:
  ContMap(SpaceRef dom, SpaceRef cod, std::vector<int> table);

  const SpaceRef& dom() const { return dom_; }
  const SpaceRef& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return static_cast<std::size_t>(table_[i]); }

  Bits image(const Bits& s) const;
  Bits preimage(const Bits& s) const;

  std::string describe() const;  // "f: X -> Y [a->u, b->u]" style

private:
  SpaceRef dom_;
  SpaceRef cod_;
  std::vector<int> table_;
};

ContMap identity_map(const SpaceRef& x);
ContMap compose(const ContMap& g, const ContMap& f);  // g after f
ContMap constant_map(const SpaceRef& dom, const SpaceRef& cod, std::size_t point);
ContMap unique_to_terminal(const SpaceRef& x);

// Image of every open (resp. closed) set is open (resp. closed). Decided
// through minimal neighbourhoods and point closures, since images commute
// with unions and every open is a union of minimal neighbourhoods.
bool is_open_map(const ContMap& f);
bool is_closed_map(const ContMap& f);
bool is_clopen_map(const ContMap& f);

bool same_map(const ContMap& f, const ContMap& g);

}  // namespace kht
