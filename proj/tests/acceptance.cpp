// Acceptance suite: runs every promised law at desk scale, one line per
// criterion. All checks are exact (tolerance zero) — the laws are decidable
// on finite instances. Exits nonzero if any criterion fails.
//
// Usage: kht_acceptance [--cli /path/to/kht]
// When --cli is given, the mutation criterion drives the real binary.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "kht/checks.hpp"
#include "kht/enumerate.hpp"
#include "kht/eval.hpp"
#include "kht/model.hpp"
#include "kht/power.hpp"
#include "kht/report.hpp"
#include "kht/tripos.hpp"
#include "support/generators.hpp"

using namespace kht;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail,
            std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "  (" << detail << ", " << ms
            << " ms)\n";
  if (!pass) ++failures;
}

void adjoint_chain_suite() {
  auto start = std::chrono::steady_clock::now();
  std::size_t maps = 0, pairs = 0;
  bool ok = true;
  std::string why;
  for (int na = 0; na <= 3 && ok; ++na)
    for (int nb = 0; nb <= 3 && ok; ++nb)
      for_each_cont_map(nth_discrete(na), nth_discrete(nb), [&](const ContMap& f) {
        if (!ok) return;
        ++maps;
        pairs += (std::size_t{1} << na) * (std::size_t{1} << nb);
        auto results = check_adjoint_chain(f);
        if (!all_pass(results)) {
          ok = false;
          why = results.front().detail;
        }
      });
  report("adjoint-chain (all maps sizes 0-3, both Galois biconditionals)", ok,
         ok ? std::to_string(maps) + " maps, " + std::to_string(pairs) + " predicate pairs"
            : why,
         start);
}

void beck_chevalley_suite() {
  auto start = std::chrono::steady_clock::now();
  std::size_t squares = 0;
  bool ok = true;
  std::string why;
  for (int nx = 0; nx <= 3 && ok; ++nx)
    for (int ng = 0; ng <= 3 && ok; ++ng)
      for (int nd = 0; nd <= 3 && ok; ++nd) {
        SpaceRef x = nth_discrete(nx);
        for_each_cont_map(nth_discrete(ng), nth_discrete(nd), [&](const ContMap& k) {
          if (!ok) return;
          ++squares;
          PullbackSquare sq = beck_chevalley_square(x, k);
          auto results = check_beck_chevalley(sq);
          if (!all_pass(results)) {
            ok = false;
            why = results.front().detail;
          }
        });
      }
  report("beck-chevalley (all squares |X|,|Gamma|,|Delta| <= 3, every predicate)", ok,
         ok ? std::to_string(squares) + " squares" : why, start);
}

void weak_power_beta_suite() {
  auto start = std::chrono::steady_clock::now();
  std::size_t clopens = 0;
  bool ok = true;
  std::string why;
  for (int nx = 0; nx <= 3 && ok; ++nx) {
    SpaceRef x = nth_discrete(nx);
    PowerObjectBundle px = power_object(x);
    ContMap id_x = identity_map(x);
    for (int ny = 0; ny <= 3 && ok; ++ny) {
      SpaceRef y = nth_discrete(ny);
      Product xy = product(x, y);
      for_each_subset(xy.space->size(), [&](const Bits& e) {
        if (!ok) return;
        ++clopens;
        Predicate gamma(xy.space, e);
        ContMap nm = name_of(gamma, x, y, px);
        Predicate pulled = pullback(map_product(id_x, nm), px.membership);
        if (!(pulled.extent() == e)) {
          ok = false;
          why = "beta law fails for gamma=" + gamma.describe() + " on " + xy.space->name();
        }
      });
    }
  }
  report("weak-power-object beta law (|X|,|Y| <= 3, all clopens)", ok,
         ok ? std::to_string(clopens) + " clopens" : why, start);
}

void delta_diagonal_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  for (int n = 0; n <= 4 && ok; ++n) {
    SpaceRef x = nth_discrete(n);
    Predicate delta = equality_predicate(x);
    Bits diag(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) diag.set(static_cast<std::size_t>(i) * n + i);
    if (!(delta.extent() == diag)) {
      ok = false;
      why = "delta differs from the diagonal at |X|=" + std::to_string(n);
    }
  }
  report("delta-diagonal (equality predicate = diagonal, |X| <= 4)", ok,
         ok ? "sizes 0-4" : why, start);
}

void topology_lemma_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  std::size_t spaces = 0;
  for (int n = 0; n <= 4 && ok; ++n)
    for (const auto& b : all_topologies(n)) {
      ++spaces;
      if (is_hausdorff(*b) != b->is_discrete()) {
        ok = false;
        why = "hausdorff/discrete mismatch on " + b->name();
        break;
      }
      Compactification c = alexandroff(b);
      if (!is_open_map(c.inclusion)) {
        ok = false;
        why = "inclusion not open for " + b->name();
        break;
      }
      if (!c.space->is_open(singleton_bits(c.space->size(), c.infinity_index))) {
        ok = false;
        why = "{inf} not open over " + b->name();
        break;
      }
      if (is_hausdorff(*c.space) != is_hausdorff(*b)) {
        ok = false;
        why = "compactification hausdorff mismatch on " + b->name();
        break;
      }
    }
  for (int nx = 0; nx <= 4 && ok; ++nx)
    for (int ny = 0; ny <= 4 && ok; ++ny) {
      Product p = product(nth_discrete(nx), nth_discrete(ny));
      if (!is_clopen_map(p.proj_left) || !is_clopen_map(p.proj_right)) {
        ok = false;
        why = "projections of " + p.space->name() + " not clopen";
      }
    }
  report("topology lemmas (all topologies on <= 4 points)", ok,
         ok ? std::to_string(spaces) + " spaces" : why, start);
}

void power_shape_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  for (int n = 0; n <= 4 && ok; ++n) {
    PowerObjectBundle pa = power_object(nth_discrete(n));
    const std::size_t expected = std::size_t{1} << n;
    if (pa.function_space->size() != expected || pa.power()->size() != expected + 1) {
      ok = false;
      why = "cardinality off at |A|=" + std::to_string(n);
    }
  }
  for (int n = 0; n <= 3 && ok; ++n)
    if (!compact_open_is_discrete(nth_discrete(n))) {
      ok = false;
      why = "compact-open topology not discrete at |A|=" + std::to_string(n);
    }
  report("power-object shape (|2^A| = 2^|A|, |PA| = 2^|A|+1; compact-open discrete <= 3)",
         ok, ok ? "sizes 0-4, recomputed 0-3" : why, start);
}

void dsl_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;

  // tautology battery across 100 seeded random models
  const std::vector<std::string> battery = {
      "forall x : X . phi(x) or not phi(x)",
      "forall x : X . ((phi(x) implies psi(x)) implies phi(x)) implies phi(x)",
      "(exists x : X . phi(x)) iff (not forall x : X . not phi(x))",
      "(forall x : X . phi(x)) iff (not exists x : X . not phi(x))",
  };
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const int n = static_cast<int>(rand_below(rng, 5));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    Model m;
    m.spaces.push_back(discrete_space("X", labels));
    Bits phi(n), psi(n);
    for (int i = 0; i < n; ++i) {
      if (rand_below(rng, 2)) phi.set(i);
      if (rand_below(rng, 2)) psi.set(i);
    }
    m.predicates.push_back({"phi", Predicate(m.spaces[0], phi)});
    m.predicates.push_back({"psi", Predicate(m.spaces[0], psi)});
    Interp interp(m);
    for (const auto& text : battery) {
      if (!eval_text(text, "", interp).is_full()) {
        ok = false;
        why = "tautology fails in trial " + std::to_string(trial) + ": " + text;
        break;
      }
    }
  }

  // comprehension law, exhaustively at sizes <= 3
  for (int n = 0; n <= 3 && ok; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    SpaceRef x = discrete_space("X", labels);
    for_each_subset(n, [&](const Bits& g) {
      if (!ok) return;
      for_each_subset(n, [&](const Bits& h) {
        if (!ok) return;
        Model m;
        m.spaces.push_back(x);
        m.predicates.push_back({"g", Predicate(x, g)});
        m.predicates.push_back({"h", Predicate(x, h)});
        Interp interp(m);
        struct Case {
          const char* text;
          Bits expected;
        };
        const std::vector<Case> cases = {
            {"y in { x : X | g(x) }", g},
            {"y in { x : X | g(x) and h(x) }", g & h},
            {"y in { x : X | g(x) or not h(x) }", g | ~h},
        };
        for (const auto& c : cases) {
          Predicate got = eval_text(c.text, "y : X", interp);
          if (!(got.extent() == c.expected)) {
            ok = false;
            why = std::string("comprehension law fails: ") + c.text;
            return;
          }
        }
      });
    });
  }

  // substitutivity of equality, exhaustively at sizes <= 3
  for (int n = 0; n <= 3 && ok; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    SpaceRef x = discrete_space("X", labels);
    for_each_subset(n, [&](const Bits& phi) {
      if (!ok) return;
      Model m;
      m.spaces.push_back(x);
      m.predicates.push_back({"phi", Predicate(x, phi)});
      Interp interp(m);
      Predicate p = eval_text("forall x : X . forall y : X . x = y and phi(x) implies phi(y)",
                              "", interp);
      if (!p.is_full()) {
        ok = false;
        why = "substitutivity fails at |X|=" + std::to_string(n) + " phi=" +
              format_indices(phi);
      }
    });
  }

  // parser round-trip on 1000 generated formulas
  std::mt19937_64 gen_rng(0);
  for (int i = 0; i < 1000 && ok; ++i) {
    FormulaPtr f = gen::formula(gen_rng, 4);
    if (!structurally_equal(*parse_formula(pretty(*f)), *f)) {
      ok = false;
      why = "round-trip fails: " + pretty(*f);
    }
  }

  report("dsl suite (tautologies x100 models, comprehension & substitutivity <= 3, "
         "round-trip x1000)",
         ok, ok ? "all law instances" : why, start);
}

void mutation_suite(const std::string& cli) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  std::string mode;

  if (!cli.empty()) {
    mode = "via " + cli;
    std::string cmd = cli + " check --mutate-forall --law adjunction 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      report("mutation sensitivity", false, "cannot spawn " + cmd, start);
      return;
    }
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 1) {
      ok = false;
      why = "expected exit 1, got " + std::to_string(exit_code);
    } else if (output.find("FAIL adjunction/forall") == std::string::npos) {
      ok = false;
      why = "adjunction law not named in: " + output.substr(0, 120);
    } else if (output.find("D0 -> D1") == std::string::npos) {
      ok = false;
      why = "minimal witness not reported in: " + output.substr(0, 120);
    }
  } else {
    mode = "in-process";
    CheckOptions opt;
    opt.mutate_forall = true;
    auto results = run_all_checks(nullptr, opt);
    int exit_code = all_pass(results) ? 0 : 1;
    if (exit_code != 1) {
      ok = false;
      why = "mutated run still passes";
    } else {
      bool named = false;
      for (const auto& r : results)
        if (r.law == "adjunction/forall" && !r.pass && !r.witness.is_null()) named = true;
      if (!named) {
        ok = false;
        why = "adjunction/forall not named with a witness";
      }
    }
  }
  report("mutation sensitivity (forall replaced by the direct image)", ok,
         ok ? mode : why, start);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  adjoint_chain_suite();
  beck_chevalley_suite();
  weak_power_beta_suite();
  delta_diagonal_suite();
  topology_lemma_suite();
  power_shape_suite();
  dsl_suite();
  mutation_suite(cli);

  if (failures == 0) {
    std::cout << "acceptance: all criteria pass\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
