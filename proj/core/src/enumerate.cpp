#include "kht/enumerate.hpp"

#include "kht/errors.hpp"

namespace kht {

std::vector<SpaceRef> all_topologies(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<SpaceRef> out;
  if (n == 0) {
    out.push_back(discrete_space("T0_0", {}));
    return out;
  }
  const int off_diag = n * (n - 1);
  if (off_diag >= 30) fail(Errc::size_cap, "too many points to enumerate topologies");
  // bit k of the mask encodes relation entry (x, y), x != y, in row-major
  // order with the diagonal skipped; entry (x, y) means y ∈ U_x
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) cells.emplace_back(x, y);

  std::size_t index = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off_diag); ++mask) {
    std::vector<Bits> nbhd(n, Bits(n));
    for (int i = 0; i < n; ++i) nbhd[i].set(i);
    for (int k = 0; k < off_diag; ++k)
      if (mask & (std::uint64_t{1} << k)) nbhd[cells[k].first].set(cells[k].second);
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (auto y = nbhd[x].find_first(); y != Bits::npos; y = nbhd[x].find_next(y))
        if (!nbhd[y].is_subset_of(nbhd[x])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    out.push_back(std::make_shared<FinSpace>(
        "T" + std::to_string(n) + "_" + std::to_string(index++), labels, nbhd));
  }
  return out;
}

SpaceRef nth_discrete(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return discrete_space("D" + std::to_string(n), std::move(labels));
}

void for_each_cont_map(const SpaceRef& a, const SpaceRef& b,
                       const std::function<void(const ContMap&)>& fn) {
  const std::size_t n = a->size();
  if (n == 0) {
    fn(ContMap{a, b, {}});
    return;
  }
  if (b->size() == 0) return;  // no maps from a nonempty space into the empty one
  std::vector<int> table(n, 0);
  while (true) {
    bool continuous = true;
    for (std::size_t x = 0; x < n && continuous; ++x) {
      const Bits& ux = a->min_nbhd(x);
      const Bits& target = b->min_nbhd(table[x]);
      for (auto y = ux.find_first(); y != Bits::npos; y = ux.find_next(y))
        if (!target.test(table[y])) {
          continuous = false;
          break;
        }
    }
    if (continuous) fn(ContMap{a, b, table});
    std::size_t i = n;
    bool more = false;
    while (i-- > 0) {
      if (++table[i] < static_cast<int>(b->size())) {
        more = true;
        break;
      }
      table[i] = 0;
    }
    if (!more) break;
  }
}

void for_each_subset(std::size_t n, const std::function<void(const Bits&)>& fn) {
  if (n >= 8 * sizeof(std::uint64_t)) fail(Errc::size_cap, "subset enumeration too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.set(i);
    fn(s);
  }
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

SpaceRef random_topology(std::mt19937_64& rng, int n, const std::string& name) {
  std::vector<Bits> nbhd(n, Bits(n));
  for (int i = 0; i < n; ++i) nbhd[i].set(i);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && rand_below(rng, 4) == 0) nbhd[x].set(y);
  // transitive closure makes the relation a preorder, hence a topology
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (nbhd[x].test(k)) nbhd[x] |= nbhd[k];
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return std::make_shared<FinSpace>(name, std::move(labels), std::move(nbhd));
}

Bits random_clopen(std::mt19937_64& rng, const FinSpace& space) {
  Bits s(space.size());
  for (const Bits& comp : space.components())
    if (rand_below(rng, 2) == 0) s |= comp;
  return s;
}

ContMap random_map_to(std::mt19937_64& rng, const SpaceRef& discrete_dom, const SpaceRef& cod) {
  if (!discrete_dom->is_discrete())
    fail(Errc::not_discrete_base, "random maps are generated from discrete domains only");
  if (cod->size() == 0 && discrete_dom->size() > 0)
    fail(Errc::validation, "no maps into the empty space");
  std::vector<int> table(discrete_dom->size());
  for (auto& v : table) v = static_cast<int>(rand_below(rng, cod->size()));
  return {discrete_dom, cod, std::move(table)};
}

}  // namespace kht
