#include "kht/topology.hpp"

#include <utility>

#include "kht/errors.hpp"

namespace kht {

namespace {

std::string product_name(const std::vector<SpaceRef>& factors) {
  std::string name = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) name += "*";
    name += factors[i]->name();
  }
  return name + ")";
}

std::string tuple_label(const std::vector<SpaceRef>& factors,
                        const std::vector<std::size_t>& comps) {
  std::string label = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) label += ",";
    label += factors[i]->label(comps[i]);
  }
  return label + ")";
}

}  // namespace

ProductSpace::ProductSpace(std::vector<SpaceRef> factors, const Limits& lim)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    space_ = terminal_space();
    return;
  }
  if (factors_.size() == 1) {
    space_ = factors_[0];
    strides_ = {1};
    return;
  }
  std::size_t total = 1;
  for (const auto& f : factors_) {
    total *= f->size();
    if (f->size() != 0 && total > lim.point_cap)
      fail(Errc::size_cap, "product " + product_name(factors_) + " exceeds the point cap of " +
                               std::to_string(lim.point_cap));
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * factors_[i]->size();

  std::vector<std::string> labels;
  std::vector<Bits> min_nbhd;
  labels.reserve(total);
  min_nbhd.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto comps = components(flat);
    labels.push_back(tuple_label(factors_, comps));
    // U_(x1..xk) = U_x1 × ... × U_xk, embedded at flat indices
    Bits nbhd(total);
    std::vector<std::vector<std::size_t>> member_indices(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Bits& u = factors_[i]->min_nbhd(comps[i]);
      for (auto p = u.find_first(); p != Bits::npos; p = u.find_next(p))
        member_indices[i].push_back(p);
    }
    // odometer walk over the cartesian product of the per-factor neighbourhoods
    std::vector<std::size_t> cursor(factors_.size(), 0);
    bool more = true;
    while (more) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        idx += member_indices[i][cursor[i]] * strides_[i];
      nbhd.set(idx);
      more = false;
      for (std::size_t i = factors_.size(); i-- > 0;) {
        if (++cursor[i] < member_indices[i].size()) {
          more = true;
          break;
        }
        cursor[i] = 0;
      }
    }
    min_nbhd.push_back(std::move(nbhd));
  }
  space_ = std::make_shared<FinSpace>(product_name(factors_), std::move(labels),
                                      std::move(min_nbhd));
}

ContMap ProductSpace::projection(std::size_t k) const {
  if (k >= factors_.size()) fail(Errc::validation, "projection index out of range");
  if (factors_.size() == 1) return identity_map(factors_[0]);
  std::vector<int> table(space_->size());
  for (std::size_t flat = 0; flat < table.size(); ++flat)
    table[flat] = static_cast<int>((flat / strides_[k]) % factors_[k]->size());
  return {space_, factors_[k], std::move(table)};
}

std::vector<std::size_t> ProductSpace::components(std::size_t flat) const {
  std::vector<std::size_t> comps(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    comps[i] = (flat / strides_[i]) % factors_[i]->size();
  return comps;
}

std::size_t ProductSpace::flat(const std::vector<std::size_t>& comps) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += comps[i] * strides_[i];
  return idx;
}

ProductSpace::DropLast ProductSpace::drop_last() const {
  if (factors_.empty()) fail(Errc::validation, "cannot drop a factor of the empty product");
  ProductSpace rest({factors_.begin(), factors_.end() - 1});
  const std::size_t last = factors_.back()->size();
  if (factors_.size() == 1) {
    ContMap proj = unique_to_terminal(space_);
    return {std::move(rest), std::move(proj)};
  }
  std::vector<int> table(space_->size());
  for (std::size_t flat = 0; flat < table.size(); ++flat)
    table[flat] = static_cast<int>(flat / last);
  ContMap proj{space_, rest.space(), std::move(table)};
  return {std::move(rest), std::move(proj)};
}

Product product(const SpaceRef& x, const SpaceRef& y, const Limits& lim) {
  ProductSpace p({x, y}, lim);
  return {p.space(), p.projection(0), p.projection(1)};
}

ContMap pair_into(const Product& target, const ContMap& f, const ContMap& g) {
  if (!same_space(f.dom(), g.dom()))
    fail(Errc::space_mismatch, "paired maps must share a domain");
  if (!same_space(f.cod(), target.proj_left.cod()) ||
      !same_space(g.cod(), target.proj_right.cod()))
    fail(Errc::space_mismatch, "paired maps do not match the product factors");
  const std::size_t right = target.proj_right.cod()->size();
  std::vector<int> table(f.dom()->size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = static_cast<int>(f(i) * right + g(i));
  return {f.dom(), target.space, std::move(table)};
}

ContMap tuple_into(const ProductSpace& target, const std::vector<ContMap>& fs) {
  if (fs.size() != target.arity())
    fail(Errc::space_mismatch, "tuple arity does not match the product");
  if (target.arity() == 0) fail(Errc::validation, "empty tuple has no shared domain");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!same_space(fs[i].dom(), fs[0].dom()))
      fail(Errc::space_mismatch, "tupled maps must share a domain");
    if (!same_space(fs[i].cod(), target.factors()[i]))
      fail(Errc::space_mismatch, "tupled map " + std::to_string(i) + " misses its factor");
  }
  if (fs.size() == 1) return fs[0];
  std::vector<int> table(fs[0].dom()->size());
  std::vector<std::size_t> comps(fs.size());
  for (std::size_t p = 0; p < table.size(); ++p) {
    for (std::size_t i = 0; i < fs.size(); ++i) comps[i] = fs[i](p);
    table[p] = static_cast<int>(target.flat(comps));
  }
  return {fs[0].dom(), target.space(), std::move(table)};
}

ContMap map_product(const ContMap& f, const ContMap& g, const Limits& lim) {
  Product dom = product(f.dom(), g.dom(), lim);
  Product cod = product(f.cod(), g.cod(), lim);
  const std::size_t gd = g.dom()->size();
  const std::size_t gc = g.cod()->size();
  std::vector<int> table(dom.space->size());
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    std::size_t i = flat / gd, j = flat % gd;
    table[flat] = static_cast<int>(f(i) * gc + g(j));
  }
  return {dom.space, cod.space, std::move(table)};
}

Subspace subspace(const SpaceRef& x, const Bits& s) {
  if (s.size() != x->size()) fail(Errc::validation, "subset has the wrong universe");
  std::vector<int> embed;  // subspace point -> ambient point
  std::vector<int> back(x->size(), -1);
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    back[i] = static_cast<int>(embed.size());
    embed.push_back(static_cast<int>(i));
  }
  std::vector<std::string> labels;
  std::vector<Bits> min_nbhd;
  for (int ambient : embed) {
    labels.push_back(x->label(ambient));
    Bits trace(embed.size());
    const Bits& u = x->min_nbhd(ambient);
    for (auto p = u.find_first(); p != Bits::npos; p = u.find_next(p))
      if (s.test(p)) trace.set(back[p]);
    min_nbhd.push_back(std::move(trace));
  }
  auto sub = std::make_shared<FinSpace>(x->name() + "[" + format_indices(s) + "]",
                                        std::move(labels), std::move(min_nbhd));
  return {sub, ContMap{sub, x, std::move(embed)}};
}

Compactification alexandroff(const SpaceRef& b) { return alexandroff(b, b->name() + "_inf"); }

Compactification alexandroff(const SpaceRef& b, std::string name) {
  const std::size_t n = b->size();
  std::vector<std::string> labels = b->labels();
  labels.push_back("inf");
  if (b->index_of("inf")) labels.back() = "inf'";  // keep labels distinct
  std::vector<Bits> min_nbhd;
  min_nbhd.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Bits u(n + 1);
    const Bits& base = b->min_nbhd(i);
    for (auto p = base.find_first(); p != Bits::npos; p = base.find_next(p)) u.set(p);
    min_nbhd.push_back(std::move(u));
  }
  // B itself is closed and compact, so {∞} is open
  min_nbhd.push_back(singleton_bits(n + 1, n));
  auto comp = std::make_shared<FinSpace>(std::move(name), std::move(labels), std::move(min_nbhd));
  std::vector<int> incl(n);
  for (std::size_t i = 0; i < n; ++i) incl[i] = static_cast<int>(i);
  return {comp, ContMap{b, comp, std::move(incl)}, n};
}

}  // namespace kht
