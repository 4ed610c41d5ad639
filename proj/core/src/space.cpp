#include "kht/space.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kht/errors.hpp"

namespace kht {

Bits bits_from_indices(std::size_t universe, const std::vector<int>& points) {
  Bits b(universe);
  for (int p : points) {
    if (p < 0 || static_cast<std::size_t>(p) >= universe)
      fail(Errc::not_a_topology, "point index " + std::to_string(p) + " out of range for " +
                                     std::to_string(universe) + " points");
    b.set(static_cast<std::size_t>(p));
  }
  return b;
}

std::vector<int> indices_of(const Bits& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

std::string format_indices(const Bits& s) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string format_labeled(const Bits& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (!first) out += ", ";
    out += labels[i];
    first = false;
  }
  return out + "}";
}

FinSpace::FinSpace(std::string name, std::vector<std::string> labels, std::vector<Bits> min_nbhd)
    : name_(std::move(name)), labels_(std::move(labels)), min_nbhd_(std::move(min_nbhd)) {
  const std::size_t n = labels_.size();
  if (min_nbhd_.size() != n) fail(Errc::validation, "minimal neighbourhood table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (min_nbhd_[i].size() != n || !min_nbhd_[i].test(i))
      fail(Errc::validation, "invalid minimal neighbourhood for point " + std::to_string(i));
    if (min_nbhd_[i].count() != 1) discrete_ = false;
  }
  // U_y ⊆ U_x whenever y ∈ U_x (transitivity of the specialization preorder)
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = min_nbhd_[x].find_first(); y != Bits::npos; y = min_nbhd_[x].find_next(y))
      if (!min_nbhd_[y].is_subset_of(min_nbhd_[x]))
        fail(Errc::validation, "minimal neighbourhoods are not transitively closed");

  // connected components of the comparability graph, each a bitset,
  // ordered by least member
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Bits comp(n);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      comp.set(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (seen[y]) continue;
        if (min_nbhd_[x].test(y) || min_nbhd_[y].test(x)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    components_.push_back(std::move(comp));
  }
}

std::optional<std::size_t> FinSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FinSpace::is_open(const Bits& s) const {
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    if (!min_nbhd_[i].is_subset_of(s)) return false;
  return true;
}

bool FinSpace::is_closed(const Bits& s) const { return is_open(~s); }

Bits FinSpace::closure(const Bits& s) const {
  Bits out(size());
  for (std::size_t y = 0; y < size(); ++y)
    if (min_nbhd_[y].intersects(s)) out.set(y);
  return out;
}

Bits FinSpace::interior(const Bits& s) const {
  Bits out(size());
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
    if (min_nbhd_[i].is_subset_of(s)) out.set(i);
  return out;
}

std::vector<Bits> FinSpace::opens(std::size_t family_cap) const {
  // every open is a union of minimal neighbourhoods; close {∅} under
  // union with each U_x
  std::set<Bits> family;
  family.insert(empty_set());
  std::vector<Bits> work{empty_set()};
  while (!work.empty()) {
    Bits o = std::move(work.back());
    work.pop_back();
    for (std::size_t x = 0; x < size(); ++x) {
      Bits u = o | min_nbhd_[x];
      if (family.insert(u).second) {
        if (family.size() > family_cap)
          fail(Errc::size_cap, "open-set family of " + name_ + " exceeds cap of " +
                                   std::to_string(family_cap));
        work.push_back(std::move(u));
      }
    }
  }
  return {family.begin(), family.end()};  // std::set of Bits is value-ordered
}

bool FinSpace::structurally_equal(const FinSpace& other) const {
  return name_ == other.name_ && labels_ == other.labels_ && min_nbhd_ == other.min_nbhd_;
}

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->structurally_equal(*b);
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail(Errc::duplicate_label, "duplicate point label '" + l + "'");
}

}  // namespace

SpaceRef mk_space_family(std::string name, std::vector<std::string> labels, std::vector<Bits> opens) {
  check_labels(labels);
  const std::size_t n = labels.size();
  for (const auto& o : opens)
    if (o.size() != n) fail(Errc::not_a_topology, "open set with wrong universe size");

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  const Bits empty(n);
  const Bits full = full_bits(n);
  auto contains = [&](const Bits& s) {
    return std::binary_search(opens.begin(), opens.end(), s);
  };
  if (!contains(empty)) fail(Errc::not_a_topology, "the empty set is missing");
  if (!contains(full)) fail(Errc::not_a_topology, "the full set is missing");

  auto describe = [&](const Bits& s) { return format_labeled(s, labels); };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      Bits u = opens[i] | opens[j];
      if (!contains(u))
        fail(Errc::not_a_topology, "union of " + describe(opens[i]) + " and " +
                                       describe(opens[j]) + " = " + describe(u) + " is missing");
      Bits m = opens[i] & opens[j];
      if (!contains(m))
        fail(Errc::not_a_topology, "intersection of " + describe(opens[i]) + " and " +
                                       describe(opens[j]) + " = " + describe(m) + " is missing");
    }
  }

  std::vector<Bits> min_nbhd(n, full);
  for (const auto& o : opens)
    for (auto i = o.find_first(); i != Bits::npos; i = o.find_next(i)) min_nbhd[i] &= o;
  return std::make_shared<FinSpace>(std::move(name), std::move(labels), std::move(min_nbhd));
}

SpaceRef mk_space(std::string name, std::vector<std::string> labels,
                  const std::vector<std::vector<int>>& opens) {
  std::vector<Bits> family;
  family.reserve(opens.size());
  for (const auto& o : opens) family.push_back(bits_from_indices(labels.size(), o));
  return mk_space_family(std::move(name), std::move(labels), std::move(family));
}

SpaceRef discrete_space(std::string name, std::vector<std::string> labels) {
  check_labels(labels);
  const std::size_t n = labels.size();
  std::vector<Bits> min_nbhd;
  min_nbhd.reserve(n);
  for (std::size_t i = 0; i < n; ++i) min_nbhd.push_back(singleton_bits(n, i));
  return std::make_shared<FinSpace>(std::move(name), std::move(labels), std::move(min_nbhd));
}

SpaceRef terminal_space() {
  static const SpaceRef one = discrete_space("1", {"*"});
  return one;
}

SpaceRef two_space() {
  static const SpaceRef two = discrete_space("2", {"0", "1"});
  return two;
}

bool is_hausdorff(const FinSpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x.min_nbhd(i).intersects(x.min_nbhd(j))) return false;
  return true;
}

}  // namespace kht
