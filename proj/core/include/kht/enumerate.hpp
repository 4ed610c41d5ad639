#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kht/map.hpp"
#include "kht/space.hpp"

namespace kht {

// Every topology on n labelled points (points p0..p(n-1)), via the
// bijection between finite topologies and preorders: iterate all reflexive
// relations, keep the transitive ones, read off minimal neighbourhoods.
// Counts for n = 0..4: 1, 1, 4, 29, 355.
std::vector<SpaceRef> all_topologies(int n);

// Discrete space named "D<n>" with labels "0".."<n-1>".
SpaceRef nth_discrete(int n);

// All continuous maps a -> b in lexicographic table order. For discrete a
// every total function is continuous; otherwise tables are filtered.
void for_each_cont_map(const SpaceRef& a, const SpaceRef& b,
                       const std::function<void(const ContMap&)>& fn);

void for_each_subset(std::size_t n, const std::function<void(const Bits&)>& fn);

// Deterministic helpers on top of a seeded mt19937_64; plain modulo keeps
// the stream identical across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n);
SpaceRef random_topology(std::mt19937_64& rng, int n, const std::string& name);
Bits random_clopen(std::mt19937_64& rng, const FinSpace& space);
ContMap random_map_to(std::mt19937_64& rng, const SpaceRef& discrete_dom, const SpaceRef& cod);

}  // namespace kht
