#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kht/report.hpp"
#include "kht/space.hpp"
#include "kht/tripos.hpp"

namespace kht {

struct Model;

struct CheckOptions {
  int max_size = 4;            // size bound for the randomized phase
  std::uint64_t seed = 0;      // PRNG seed; identical seeds give identical reports
  std::string law_filter;      // substring filter on law names; empty = all
  bool verify_compact_open = false;
  bool mutate_forall = false;  // self-test: run with ∀ replaced by the direct image
  int random_samples = 64;     // instances per law in the randomized phase
  Limits limits;

  QuantifierOps quantifiers() const {
    return mutate_forall ? QuantifierOps::forall_as_image() : QuantifierOps::standard();
  }
};

// The individual suites. Exhaustive portions run at fixed desk scale
// (sizes <= 3, topologies/δ at <= 4); the randomized portion samples up to
// max_size with the seeded generator.
std::vector<LawResult> check_boolean_axioms(const Model* model, const CheckOptions& opt);
std::vector<LawResult> check_functoriality(const CheckOptions& opt);
std::vector<LawResult> check_adjoint_suite(const Model* model, const CheckOptions& opt);
std::vector<LawResult> check_beck_chevalley_suite(const CheckOptions& opt);
std::vector<LawResult> check_weak_power_beta(const CheckOptions& opt);
std::vector<LawResult> check_delta_diagonal(const CheckOptions& opt);
std::vector<LawResult> check_topology_lemmas(const Model* model, const CheckOptions& opt);
std::vector<LawResult> check_power_shape(const CheckOptions& opt);

// Everything above, law-filtered and sorted for a deterministic report.
std::vector<LawResult> run_all_checks(const Model* model, const CheckOptions& opt);

// The directly constructed diagonal, the oracle for δ_X.
Predicate diagonal_predicate(const SpaceRef& x, const Limits& lim = {});

}  // namespace kht
