#include "kht/power.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kht/errors.hpp"
#include "kht/tripos.hpp"

namespace kht {

namespace {

void require_discrete(const SpaceRef& a, const char* what) {
  if (!a->is_discrete())
    fail(Errc::not_discrete_base, std::string(what) + " requires a discrete base, but " +
                                      a->name() + " is not discrete");
}

std::size_t checked_power_size(const SpaceRef& a, const Limits& lim) {
  if (a->size() >= 8 * sizeof(std::size_t) ||
      (std::size_t{1} << a->size()) > lim.point_cap)
    fail(Errc::size_cap, "2^" + a->name() + " exceeds the point cap of " +
                             std::to_string(lim.point_cap));
  return std::size_t{1} << a->size();
}

std::string mask_label(std::size_t mask, std::size_t width) {
  std::string label(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if (mask & (std::size_t{1} << i)) label[width - 1 - i] = '1';
  return label;
}

}  // namespace

SpaceRef two_power(const SpaceRef& a, const Limits& lim) {
  require_discrete(a, "2^A");
  const std::size_t count = checked_power_size(a, lim);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) labels.push_back(mask_label(mask, a->size()));
  return discrete_space("2^" + a->name(), std::move(labels));
}

bool compact_open_is_discrete(const SpaceRef& a, const Limits& lim) {
  require_discrete(a, "compact-open recomputation");
  const std::size_t count = checked_power_size(a, lim);
  // subbasis: C(K, U) for every K ⊆ A (all subsets of a finite discrete
  // space are compact) and every open U of 2
  const std::vector<std::size_t> two_opens = {0b00, 0b01, 0b10, 0b11};
  std::set<Bits> subbasis;
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t u : two_opens) {
      Bits c(count);
      for (std::size_t f = 0; f < count; ++f) {
        bool inside = true;
        for (std::size_t i = 0; i < a->size(); ++i) {
          if (!(k & (std::size_t{1} << i))) continue;
          std::size_t value = (f >> i) & 1;
          if (!(u & (std::size_t{1} << value))) {
            inside = false;
            break;
          }
        }
        if (inside) c.set(f);
      }
      subbasis.insert(std::move(c));
    }
  }
  // close under pairwise intersection to get a basis...
  std::set<Bits> basis = subbasis;
  std::vector<Bits> work(basis.begin(), basis.end());
  while (!work.empty()) {
    Bits s = std::move(work.back());
    work.pop_back();
    for (const Bits& t : subbasis) {
      Bits m = s & t;
      if (basis.insert(m).second) {
        if (basis.size() > lim.family_cap)
          fail(Errc::size_cap, "compact-open basis exceeds the family cap");
        work.push_back(std::move(m));
      }
    }
  }
  // ...then every singleton must be a union of basic sets, i.e. for each f
  // some basic set contains f and nothing else
  for (std::size_t f = 0; f < count; ++f) {
    bool found = false;
    for (const Bits& b : basis) {
      if (b.test(f) && b.count() == 1) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ContMap evaluation_map(const SpaceRef& a, const Limits& lim) {
  SpaceRef fs = two_power(a, lim);
  Product dom = product(a, fs, lim);
  const std::size_t count = fs->size();
  std::vector<int> table(dom.space->size());
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    std::size_t ia = flat / count, mask = flat % count;
    table[flat] = static_cast<int>((mask >> ia) & 1);
  }
  return {dom.space, two_space(), std::move(table)};
}

ContMap transpose(const SpaceRef& a, const SpaceRef& b, const Predicate& phi, const Limits& lim) {
  require_discrete(a, "transpose");
  require_discrete(b, "transpose");
  Product ab = product(a, b, lim);
  if (!same_space(phi.space(), ab.space))
    fail(Errc::space_mismatch, "predicate does not live on " + ab.space->name());
  SpaceRef fs = two_power(a, lim);
  std::vector<int> table(b->size(), 0);
  for (std::size_t ib = 0; ib < b->size(); ++ib) {
    std::size_t mask = 0;
    for (std::size_t ia = 0; ia < a->size(); ++ia)
      if (phi.extent().test(ia * b->size() + ib)) mask |= std::size_t{1} << ia;
    table[ib] = static_cast<int>(mask);
  }
  return {b, fs, std::move(table)};
}

ContMap extend_infinity(const SpaceRef& a, const ContMap& f, const Compactification& b_inf,
                        const Limits& lim) {
  Product ab = product(a, b_inf.base(), lim);
  if (!same_space(f.dom(), ab.space) || !same_space(f.cod(), two_space()))
    fail(Errc::space_mismatch, "expected a map " + ab.space->name() + " -> 2");
  Product extended = product(a, b_inf.space, lim);
  const std::size_t nb = b_inf.base()->size();
  const std::size_t nbi = b_inf.space->size();
  std::vector<int> table(extended.space->size(), 0);
  for (std::size_t ia = 0; ia < a->size(); ++ia)
    for (std::size_t ib = 0; ib < nbi; ++ib)
      table[ia * nbi + ib] =
          ib == b_inf.infinity_index ? 0 : f.table()[ia * nb + ib];
  // the ContMap constructor re-verifies continuity of the extension
  return {extended.space, two_space(), std::move(table)};
}

PowerObjectBundle power_object(const SpaceRef& a, const Limits& lim) {
  SpaceRef fs = two_power(a, lim);
  Compactification compact = alexandroff(fs, "P(" + a->name() + ")");
  if (a->size() != 0 && a->size() * compact.space->size() > lim.point_cap)
    fail(Errc::size_cap, "A × PA for " + a->name() + " exceeds the point cap");
  ContMap ev = evaluation_map(a, lim);
  ContMap ev_inf = extend_infinity(a, ev, compact, lim);
  Predicate membership{ev_inf.dom(), ev_inf.preimage(singleton_bits(2, 1))};
  std::vector<Bits> index;
  index.reserve(fs->size());
  for (std::size_t mask = 0; mask < fs->size(); ++mask) {
    Bits s(a->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      if (mask & (std::size_t{1} << i)) s.set(i);
    index.push_back(std::move(s));
  }
  Product ap = product(a, compact.space, lim);
  return {a,  std::move(fs), std::move(compact), ap.space, std::move(ev), std::move(ev_inf),
          std::move(membership), std::move(index)};
}

std::size_t PowerObjectBundle::point_of_clopen(const Bits& s) const {
  if (s.size() != base->size()) fail(Errc::validation, "clopen has the wrong universe");
  std::size_t mask = 0;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    mask |= std::size_t{1} << i;
  return mask;
}

ContMap name_of(const Predicate& gamma, const SpaceRef& x, const SpaceRef& y,
                const PowerObjectBundle& px, const Limits& lim) {
  if (!same_space(px.base, x)) fail(Errc::space_mismatch, "bundle is not over " + x->name());
  ContMap bar = transpose(x, y, gamma, lim);   // Y -> 2^X
  return compose(px.compact.inclusion, bar);   // i ∘ transpose, never ∞
}

Predicate equality_predicate(const SpaceRef& x, const Limits& lim) {
  return equality_predicate(x, power_object(x, lim), lim);
}

Predicate equality_predicate(const SpaceRef& x, const PowerObjectBundle& px, const Limits& lim) {
  if (!same_space(px.base, x)) fail(Errc::space_mismatch, "bundle is not over " + x->name());
  ProductSpace cube({x, x, px.power()}, lim);  // X×X×PX
  ContMap p1 = cube.projection(0);
  ContMap p2 = cube.projection(1);
  ContMap p3 = cube.projection(2);
  Product x_px = product(x, px.power(), lim);
  Product xx = product(x, x, lim);
  Predicate mem13 = pullback(pair_into(x_px, p1, p3), px.membership);
  Predicate mem23 = pullback(pair_into(x_px, p2, p3), px.membership);
  return forall_along(pair_into(xx, p1, p2), iff(mem13, mem23));
}

}  // namespace kht
