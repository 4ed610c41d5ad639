#include "kht/map.hpp"

#include <utility>

#include "kht/errors.hpp"

namespace kht {

ContMap::ContMap(SpaceRef dom, SpaceRef cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_->size())
    fail(Errc::not_continuous, "table is not total: " + std::to_string(table_.size()) +
                                   " entries for " + std::to_string(dom_->size()) + " points");
  for (int v : table_)
    if (v < 0 || static_cast<std::size_t>(v) >= cod_->size())
      fail(Errc::not_continuous,
           "table value " + std::to_string(v) + " is not a point of " + cod_->name());
  for (std::size_t x = 0; x < dom_->size(); ++x) {
    const Bits& ux = dom_->min_nbhd(x);
    const Bits& target = cod_->min_nbhd((*this)(x));
    for (auto y = ux.find_first(); y != Bits::npos; y = ux.find_next(y)) {
      if (!target.test((*this)(y)))
        fail(Errc::not_continuous,
             "preimage of open " + cod_->format_subset(target) + " of " + cod_->name() +
                 " is not open in " + dom_->name() + " (witness point " + dom_->label(x) + ")");
    }
  }
}

Bits ContMap::image(const Bits& s) const {
  Bits out(cod_->size());
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) out.set((*this)(i));
  return out;
}

Bits ContMap::preimage(const Bits& s) const {
  Bits out(dom_->size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (s.test((*this)(i))) out.set(i);
  return out;
}

std::string ContMap::describe() const {
  std::string out = dom_->name() + " -> " + cod_->name() + " [";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ", ";
    out += dom_->label(i) + "->" + cod_->label((*this)(i));
  }
  return out + "]";
}

ContMap identity_map(const SpaceRef& x) {
  std::vector<int> table(x->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i);
  return {x, x, std::move(table)};
}

ContMap compose(const ContMap& g, const ContMap& f) {
  if (!same_space(f.cod(), g.dom()))
    fail(Errc::space_mismatch,
         "cannot compose: codomain " + f.cod()->name() + " != domain " + g.dom()->name());
  std::vector<int> table(f.dom()->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(g(f(i)));
  return {f.dom(), g.cod(), std::move(table)};
}

ContMap constant_map(const SpaceRef& dom, const SpaceRef& cod, std::size_t point) {
  if (point >= cod->size())
    fail(Errc::validation, "constant map target out of range in " + cod->name());
  return {dom, cod, std::vector<int>(dom->size(), static_cast<int>(point))};
}

ContMap unique_to_terminal(const SpaceRef& x) {
  return {x, terminal_space(), std::vector<int>(x->size(), 0)};
}

bool is_open_map(const ContMap& f) {
  // images commute with unions and every open is a union of minimal
  // neighbourhoods, so it suffices that each f[U_x] is open
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (!f.cod()->is_open(f.image(f.dom()->min_nbhd(x)))) return false;
  return true;
}

bool is_closed_map(const ContMap& f) {
  // dually, every closed set is the union of the point closures it contains
  for (std::size_t x = 0; x < f.dom()->size(); ++x) {
    Bits cl = f.dom()->closure(singleton_bits(f.dom()->size(), x));
    if (!f.cod()->is_closed(f.image(cl))) return false;
  }
  return true;
}

bool is_clopen_map(const ContMap& f) { return is_open_map(f) && is_closed_map(f); }

bool same_map(const ContMap& f, const ContMap& g) {
  return same_space(f.dom(), g.dom()) && same_space(f.cod(), g.cod()) && f.table() == g.table();
}

}  // namespace kht
