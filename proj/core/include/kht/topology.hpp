#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kht/map.hpp"
#include "kht/space.hpp"

namespace kht {

// Binary product with its projections. Points are pairs in left-major
// lexicographic order: index(x, y) = ix * |Y| + iy. The product topology
// is carried by minimal neighbourhoods, U_(x,y) = U_x × U_y.
struct Product {
  SpaceRef space;
  ContMap proj_left;
  ContMap proj_right;
};

Product product(const SpaceRef& x, const SpaceRef& y, const Limits& lim = {});

// Left-major n-ary product; the 0-ary product is the terminal space and
// the 1-ary product is the factor itself. Flat indices agree with nesting
// binary products to the left.
class ProductSpace {
public:
  explicit ProductSpace(std::vector<SpaceRef> factors, const Limits& lim = {});

  const SpaceRef& space() const { return space_; }
  const std::vector<SpaceRef>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }

  ContMap projection(std::size_t k) const;

  // flat index <-> per-factor components
  std::vector<std::size_t> components(std::size_t flat) const;
  std::size_t flat(const std::vector<std::size_t>& comps) const;

  // The projection that deletes the last factor, together with its codomain.
  struct DropLast;
  DropLast drop_last() const;

private:
  std::vector<SpaceRef> factors_;
  std::vector<std::size_t> strides_;
  SpaceRef space_;
};

struct ProductSpace::DropLast {
  ProductSpace rest;
  ContMap projection;
};

// ⟨f, g⟩ into a binary product; all maps share a domain.
ContMap pair_into(const Product& target, const ContMap& f, const ContMap& g);
// ⟨f₁, …, fₙ⟩ into an n-ary product.
ContMap tuple_into(const ProductSpace& target, const std::vector<ContMap>& fs);
// f × g between binary products built from the maps' endpoints.
ContMap map_product(const ContMap& f, const ContMap& g, const Limits& lim = {});

struct Subspace {
  SpaceRef space;
  ContMap inclusion;
};

// S with the trace topology; minimal neighbourhoods are U_x ∩ S.
Subspace subspace(const SpaceRef& x, const Bits& s);

// One-point compactification B_∞. Opens are the opens of B together with
// every set containing ∞ whose complement is closed in B (compactness of
// the complement is automatic for finite B). ∞ is the last point index and
// {∞} is open; the inclusion of B is an open map.
struct Compactification {
  SpaceRef space;
  ContMap inclusion;
  std::size_t infinity_index;

  const SpaceRef& base() const { return inclusion.dom(); }
};

Compactification alexandroff(const SpaceRef& b);
Compactification alexandroff(const SpaceRef& b, std::string name);

}  // namespace kht
