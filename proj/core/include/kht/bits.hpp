#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kht {

// A subset of the points of one space, as a bitset over its dense indices.
// boost::dynamic_bitset compares numerically, which is the canonical order
// used everywhere a family of subsets is enumerated or serialized.
using Bits = boost::dynamic_bitset<>;

inline Bits empty_bits(std::size_t universe) { return Bits(universe); }

inline Bits full_bits(std::size_t universe) {
  Bits b(universe);
  b.set();
  return b;
}

inline Bits singleton_bits(std::size_t universe, std::size_t point) {
  Bits b(universe);
  b.set(point);
  return b;
}

inline Bits bits_of(std::size_t universe, std::initializer_list<std::size_t> points) {
  Bits b(universe);
  for (auto p : points) b.set(p);
  return b;
}

Bits bits_from_indices(std::size_t universe, const std::vector<int>& points);
std::vector<int> indices_of(const Bits& s);

// "{0, 2, 5}"
std::string format_indices(const Bits& s);
// "{a, c}" using per-point labels
std::string format_labeled(const Bits& s, const std::vector<std::string>& labels);

}  // namespace kht
