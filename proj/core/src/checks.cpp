#include "kht/checks.hpp"

#include <random>

#include "kht/enumerate.hpp"
#include "kht/errors.hpp"
#include "kht/heyting.hpp"
#include "kht/model.hpp"
#include "kht/power.hpp"

namespace kht {

namespace {

nlohmann::json subset_witness(const SpaceRef& space, const Bits& s) {
  nlohmann::json j;
  j["space"] = space->name();
  j["points"] = indices_of(s);
  return j;
}

// One aggregated result per law: pass with instance counts, or the first
// (least) violation found.
class LawTally {
public:
  explicit LawTally(std::string law) : law_(std::move(law)) {}

  bool still_passing() const { return passing_; }
  void count() { ++instances_; }
  void violation(std::string detail, nlohmann::json witness) {
    if (!passing_) return;
    passing_ = false;
    detail_ = std::move(detail);
    witness_ = std::move(witness);
  }
  LawResult result(const std::string& pass_note = "") const {
    if (passing_)
      return LawResult::ok(law_, std::to_string(instances_) + " instances" +
                                     (pass_note.empty() ? "" : " " + pass_note));
    return LawResult::violation(law_, detail_, witness_);
  }

private:
  std::string law_;
  bool passing_ = true;
  std::size_t instances_ = 0;
  std::string detail_;
  nlohmann::json witness_;
};

bool law_selected(const CheckOptions& opt, std::initializer_list<const char*> names) {
  if (opt.law_filter.empty()) return true;
  for (const char* n : names)
    if (std::string(n).find(opt.law_filter) != std::string::npos) return true;
  return false;
}

std::vector<SpaceRef> small_topologies(int max_points) {
  std::vector<SpaceRef> out;
  for (int n = 0; n <= max_points; ++n)
    for (auto& s : all_topologies(n)) out.push_back(std::move(s));
  return out;
}

}  // namespace

Predicate diagonal_predicate(const SpaceRef& x, const Limits& lim) {
  Product xx = product(x, x, lim);
  Bits extent(xx.space->size());
  for (std::size_t i = 0; i < x->size(); ++i) extent.set(i * x->size() + i);
  return {xx.space, std::move(extent)};
}

std::vector<LawResult> check_boolean_axioms(const Model* model, const CheckOptions& opt) {
  if (!law_selected(opt, {"boolean/axioms", "boolean/residuation"})) return {};
  LawTally axioms("boolean/axioms");
  LawTally residuation("boolean/residuation");

  std::vector<SpaceRef> spaces = small_topologies(4);
  if (model)
    for (const auto& s : model->spaces) spaces.push_back(s);

  std::mt19937_64 rng(opt.seed);
  for (const auto& space : spaces) {
    if (!axioms.still_passing() && !residuation.still_passing()) break;
    ClopenAlgebra alg(space, opt.limits);
    const auto& carrier = alg.carrier();
    // exhaustive triples for small carriers, seeded samples otherwise
    const bool exhaustive = carrier.size() <= 16;
    const std::size_t samples = exhaustive
                                    ? carrier.size() * carrier.size() * carrier.size()
                                    : static_cast<std::size_t>(opt.random_samples) * 64;
    for (std::size_t t = 0; t < samples; ++t) {
      std::size_t ia, ib, ic;
      if (exhaustive) {
        ia = t % carrier.size();
        ib = (t / carrier.size()) % carrier.size();
        ic = t / (carrier.size() * carrier.size());
      } else {
        ia = rand_below(rng, carrier.size());
        ib = rand_below(rng, carrier.size());
        ic = rand_below(rng, carrier.size());
      }
      Predicate a(space, carrier[ia]), b(space, carrier[ib]), c(space, carrier[ic]);
      auto bad = [&](const char* which) {
        nlohmann::json w = subset_witness(space, a.extent());
        w["law"] = which;
        w["psi"] = indices_of(b.extent());
        w["chi"] = indices_of(c.extent());
        axioms.violation(std::string(which) + " fails on " + space->name(), std::move(w));
      };
      axioms.count();
      if (axioms.still_passing()) {
        if (!(meet(a, b) == meet(b, a))) bad("meet-commutative");
        if (!(join(a, b) == join(b, a))) bad("join-commutative");
        if (!(meet(meet(a, b), c) == meet(a, meet(b, c)))) bad("meet-associative");
        if (!(join(join(a, b), c) == join(a, join(b, c)))) bad("join-associative");
        if (!(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)))) bad("distributive");
        if (!(join(a, meet(b, c)) == meet(join(a, b), join(a, c)))) bad("co-distributive");
        if (!(join(a, neg(a)) == top(space))) bad("excluded-middle");
        if (!(meet(a, neg(a)) == bottom(space))) bad("non-contradiction");
        if (!(neg(neg(a)) == a)) bad("double-negation");
        if (!(meet(a, top(space)) == a)) bad("meet-unit");
        if (!(join(a, bottom(space)) == a)) bad("join-unit");
      }
      residuation.count();
      if (residuation.still_passing()) {
        bool lhs = leq(c, implies(a, b));
        bool rhs = leq(meet(c, a), b);
        if (lhs != rhs) {
          nlohmann::json w = subset_witness(space, a.extent());
          w["psi"] = indices_of(b.extent());
          w["chi"] = indices_of(c.extent());
          residuation.violation("residuation fails on " + space->name(), std::move(w));
        }
      }
    }
  }
  return {axioms.result(), residuation.result()};
}

std::vector<LawResult> check_functoriality(const CheckOptions& opt) {
  if (!law_selected(opt, {"functoriality/identity", "functoriality/composition",
                          "functoriality/hom-preservation"}))
    return {};
  LawTally identity("functoriality/identity");
  LawTally composition("functoriality/composition");
  std::vector<LawResult> hom_results;

  for (int n = 0; n <= 3 && identity.still_passing(); ++n) {
    SpaceRef x = nth_discrete(n);
    AlgebraHom hom = inverse_image(identity_map(x));
    ClopenAlgebra alg(x, opt.limits);
    for (const Bits& e : alg.carrier()) {
      identity.count();
      Predicate p(x, e);
      if (!(hom.apply(p) == p)) {
        identity.violation("identity map does not induce the identity hom on " + x->name(),
                           subset_witness(x, e));
        break;
      }
    }
  }

  bool hom_checked_ok = true;
  for (int na = 0; na <= 3; ++na) {
    for (int nb = 0; nb <= 3; ++nb) {
      SpaceRef a = nth_discrete(na), b = nth_discrete(nb);
      for_each_cont_map(a, b, [&](const ContMap& f) {
        // the hom of each map preserves the Boolean operations
        if (hom_checked_ok) {
          auto results = inverse_image(f).verify(opt.limits);
          for (auto& r : results)
            if (!r.pass) {
              hom_checked_ok = false;
              hom_results.push_back(LawResult::violation(
                  "functoriality/hom-preservation", r.detail + " for " + f.describe(),
                  r.witness));
            }
        }
        if (!composition.still_passing()) return;
        for (int nc = 0; nc <= 3; ++nc) {
          SpaceRef c = nth_discrete(nc);
          for_each_cont_map(b, c, [&](const ContMap& g) {
            if (!composition.still_passing()) return;
            AlgebraHom gf = inverse_image(compose(g, f));
            AlgebraHom fh = inverse_image(f), gh = inverse_image(g);
            ClopenAlgebra c_alg(c, opt.limits);
            for (const Bits& e : c_alg.carrier()) {
              composition.count();
              Predicate p(c, e);
              if (!(gf.apply(p) == fh.apply(gh.apply(p)))) {
                nlohmann::json w = subset_witness(c, e);
                w["f"] = f.table();
                w["g"] = g.table();
                composition.violation("(g∘f)* != f∘* g* for " + f.describe() + " then " +
                                          g.describe(),
                                      std::move(w));
                return;
              }
            }
          });
        }
      });
    }
  }
  if (hom_checked_ok)
    hom_results.push_back(
        LawResult::ok("functoriality/hom-preservation", "all maps between sizes 0-3"));
  std::vector<LawResult> out{identity.result(), composition.result()};
  for (auto& r : hom_results) out.push_back(std::move(r));
  return out;
}

namespace {

// merge per-map adjoint results into the suite tallies
void fold_adjoint_results(const std::vector<LawResult>& results, LawTally& ex, LawTally& fa) {
  for (const auto& r : results) {
    if (r.law == "adjunction/exists") {
      ex.count();
      if (!r.pass) ex.violation(r.detail, r.witness);
    } else if (r.law == "adjunction/forall") {
      fa.count();
      if (!r.pass) fa.violation(r.detail, r.witness);
    }
  }
}

}  // namespace

std::vector<LawResult> check_adjoint_suite(const Model* model, const CheckOptions& opt) {
  if (!law_selected(opt, {"adjunction/exists", "adjunction/forall"})) return {};
  LawTally ex("adjunction/exists");
  LawTally fa("adjunction/forall");
  const QuantifierOps ops = opt.quantifiers();
  std::vector<LawResult> extras;

  // exhaustive: every map between discrete spaces of sizes 0-3
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for_each_cont_map(nth_discrete(na), nth_discrete(nb), [&](const ContMap& f) {
        if (!ex.still_passing() && !fa.still_passing()) return;
        fold_adjoint_results(check_adjoint_chain(f, ops, opt.limits), ex, fa);
      });

  // model maps, where clopen
  if (model)
    for (const auto& [name, map] : model->maps) {
      if (!is_clopen_map(map)) {
        extras.push_back(LawResult::ok("adjunction/skipped",
                                       "map '" + name + "' is not clopen; no adjoints"));
        continue;
      }
      fold_adjoint_results(check_adjoint_chain(map, ops, opt.limits), ex, fa);
    }

  // seeded phase up to max_size, including non-discrete domains
  std::mt19937_64 rng(opt.seed);
  for (int s = 0; s < opt.random_samples; ++s) {
    int na = static_cast<int>(rand_below(rng, opt.max_size + 1));
    int nb = static_cast<int>(rand_below(rng, opt.max_size + 1));
    SpaceRef a = random_topology(rng, na, "R" + std::to_string(2 * s));
    SpaceRef b = random_topology(rng, nb, "R" + std::to_string(2 * s + 1));
    std::vector<ContMap> clopen_maps;
    for_each_cont_map(a, b, [&](const ContMap& f) {
      if (is_clopen_map(f)) clopen_maps.push_back(f);
    });
    if (clopen_maps.empty()) continue;
    const ContMap& f = clopen_maps[rand_below(rng, clopen_maps.size())];
    fold_adjoint_results(check_adjoint_chain(f, ops, opt.limits), ex, fa);
  }

  std::vector<LawResult> out{ex.result(), fa.result()};
  for (auto& r : extras) out.push_back(std::move(r));
  return out;
}

std::vector<LawResult> check_beck_chevalley_suite(const CheckOptions& opt) {
  if (!law_selected(opt, {"beck-chevalley/exists", "beck-chevalley/forall"})) return {};
  LawTally ex("beck-chevalley/exists");
  LawTally fa("beck-chevalley/forall");
  const QuantifierOps ops = opt.quantifiers();

  auto fold = [&](const std::vector<LawResult>& results) {
    for (const auto& r : results) {
      if (r.law == "beck-chevalley/exists") {
        ex.count();
        if (!r.pass) ex.violation(r.detail, r.witness);
      } else if (r.law == "beck-chevalley/forall") {
        fa.count();
        if (!r.pass) fa.violation(r.detail, r.witness);
      }
    }
  };

  // every square from discrete X, Γ, Δ of sizes 0-3 and every k
  for (int nx = 0; nx <= 3; ++nx)
    for (int ng = 0; ng <= 3; ++ng)
      for (int nd = 0; nd <= 3; ++nd) {
        SpaceRef x = nth_discrete(nx);
        for_each_cont_map(nth_discrete(ng), nth_discrete(nd), [&](const ContMap& k) {
          if (!ex.still_passing() && !fa.still_passing()) return;
          fold(check_beck_chevalley(beck_chevalley_square(x, k, opt.limits), ops, opt.limits));
        });
      }

  // seeded phase: random squares up to max_size with sampled predicates
  std::mt19937_64 rng(opt.seed);
  for (int s = 0; s < opt.random_samples && (ex.still_passing() || fa.still_passing()); ++s) {
    int nx = static_cast<int>(rand_below(rng, opt.max_size + 1));
    int ng = static_cast<int>(rand_below(rng, opt.max_size + 1));
    int nd = static_cast<int>(rand_below(rng, opt.max_size + 1));
    SpaceRef x = nth_discrete(nx), g = nth_discrete(ng), d = nth_discrete(nd);
    if (d->size() == 0 && g->size() != 0) continue;
    ContMap k = random_map_to(rng, g, d);
    PullbackSquare sq = beck_chevalley_square(x, k, opt.limits);
    const auto& xd = sq.left.cod();
    for (int t = 0; t < 32; ++t) {
      Bits e(xd->size());
      for (std::size_t i = 0; i < xd->size(); ++i)
        if (rand_below(rng, 2)) e.set(i);
      Predicate phi(xd, e);
      ex.count();
      fa.count();
      Predicate lhs_e = ops.exists(sq.top, pullback(sq.left, phi));
      Predicate rhs_e = pullback(sq.right, ops.exists(sq.bottom, phi));
      if (!(lhs_e == rhs_e)) {
        nlohmann::json w = subset_witness(xd, e);
        w["k"] = k.table();
        ex.violation("sampled square " + x->name() + ", k=" + k.describe(), std::move(w));
      }
      Predicate lhs_f = ops.forall(sq.top, pullback(sq.left, phi));
      Predicate rhs_f = pullback(sq.right, ops.forall(sq.bottom, phi));
      if (!(lhs_f == rhs_f)) {
        nlohmann::json w = subset_witness(xd, e);
        w["k"] = k.table();
        fa.violation("sampled square " + x->name() + ", k=" + k.describe(), std::move(w));
      }
    }
  }
  return {ex.result(), fa.result()};
}

std::vector<LawResult> check_weak_power_beta(const CheckOptions& opt) {
  if (!law_selected(opt, {"weak-power/beta", "weak-power/transpose", "weak-power/index",
                          "weak-power/infinity"}))
    return {};
  LawTally beta("weak-power/beta");
  LawTally transpose_eq("weak-power/transpose");
  LawTally index_bijection("weak-power/index");
  LawTally infinity("weak-power/infinity");

  for (int nx = 0; nx <= 3; ++nx) {
    SpaceRef x = nth_discrete(nx);
    PowerObjectBundle px = power_object(x, opt.limits);

    // (x, ∞) is never a member
    infinity.count();
    for (std::size_t ix = 0; ix < x->size(); ++ix) {
      std::size_t flat = ix * px.power()->size() + px.infinity_index();
      if (px.membership.extent().test(flat)) {
        infinity.violation("(x, ∞) appears in the membership predicate of " + x->name(),
                           subset_witness(px.product_space, px.membership.extent()));
        break;
      }
    }

    // index bijection: naming the clopen of a point returns the point
    for (std::size_t m = 0; m < px.function_space->size(); ++m) {
      index_bijection.count();
      Product x1 = product(x, terminal_space(), opt.limits);
      Bits gamma(x1.space->size());
      for (auto i = px.index[m].find_first(); i != Bits::npos; i = px.index[m].find_next(i))
        gamma.set(i);  // X×1 has the same flat order as X
      ContMap nm = name_of(Predicate(x1.space, gamma), x, terminal_space(), px, opt.limits);
      if (nm(0) != m) {
        nlohmann::json w;
        w["space"] = x->name();
        w["mask"] = m;
        index_bijection.violation("name(clopen of point " + std::to_string(m) +
                                      ") is not that point on " + x->name(),
                                  std::move(w));
        break;
      }
    }

    for (int ny = 0; ny <= 3; ++ny) {
      SpaceRef y = nth_discrete(ny);
      Product xy = product(x, y, opt.limits);
      ContMap id_x = identity_map(x);
      ContMap ev = evaluation_map(x, opt.limits);
      for_each_subset(xy.space->size(), [&](const Bits& e) {
        Predicate gamma(xy.space, e);

        if (transpose_eq.still_passing()) {
          transpose_eq.count();
          ContMap bar = transpose(x, y, gamma, opt.limits);
          ContMap lhs = compose(ev, map_product(id_x, bar, opt.limits));
          ContMap chi = char_function(gamma);
          if (!same_map(lhs, chi))
            transpose_eq.violation("ev∘(id×transpose) != χ on " + xy.space->name(),
                                   subset_witness(xy.space, e));
        }

        if (beta.still_passing()) {
          beta.count();
          ContMap nm = name_of(gamma, x, y, px, opt.limits);
          for (int v : nm.table())
            if (static_cast<std::size_t>(v) == px.infinity_index())
              beta.violation("naming map hits ∞ on " + xy.space->name(),
                             subset_witness(xy.space, e));
          Predicate pulled = pullback(map_product(id_x, nm, opt.limits), px.membership);
          if (!(pulled.extent() == gamma.extent()))
            beta.violation("(id×{γ})*∈ != γ on " + xy.space->name(),
                           subset_witness(xy.space, e));
        }
      });
    }
  }
  return {beta.result(), transpose_eq.result(), index_bijection.result(), infinity.result()};
}

std::vector<LawResult> check_delta_diagonal(const CheckOptions& opt) {
  if (!law_selected(opt, {"delta/diagonal"})) return {};
  LawTally law("delta/diagonal");
  for (int n = 0; n <= 4 && law.still_passing(); ++n) {
    SpaceRef x = nth_discrete(n);
    law.count();
    Predicate delta = equality_predicate(x, opt.limits);
    Predicate diag = diagonal_predicate(x, opt.limits);
    if (!(delta.extent() == diag.extent())) {
      nlohmann::json w;
      w["space"] = x->name();
      w["delta"] = indices_of(delta.extent());
      w["diagonal"] = indices_of(diag.extent());
      law.violation("δ differs from the diagonal on " + x->name(), std::move(w));
    }
  }
  return {law.result()};
}

std::vector<LawResult> check_topology_lemmas(const Model* model, const CheckOptions& opt) {
  if (!law_selected(opt, {"topology/hausdorff-iff-discrete", "topology/projections-clopen",
                          "topology/alexandroff-inclusion-open",
                          "topology/alexandroff-infinity-open",
                          "topology/alexandroff-hausdorff-iff-base",
                          "topology/subspace-hausdorff"}))
    return {};
  LawTally hd("topology/hausdorff-iff-discrete");
  LawTally proj("topology/projections-clopen");
  LawTally incl("topology/alexandroff-inclusion-open");
  LawTally inf_open("topology/alexandroff-infinity-open");
  LawTally comp_hd("topology/alexandroff-hausdorff-iff-base");
  LawTally sub_hd("topology/subspace-hausdorff");

  std::vector<SpaceRef> spaces = small_topologies(4);
  if (model)
    for (const auto& s : model->spaces) spaces.push_back(s);

  for (const auto& b : spaces) {
    hd.count();
    if (is_hausdorff(*b) != b->is_discrete())
      hd.violation("on " + b->name(), subset_witness(b, b->full_set()));

    Compactification c = alexandroff(b);
    incl.count();
    if (!is_open_map(c.inclusion))
      incl.violation("inclusion of " + b->name() + " is not open",
                     subset_witness(b, b->full_set()));
    inf_open.count();
    if (!c.space->is_open(singleton_bits(c.space->size(), c.infinity_index)))
      inf_open.violation("{∞} is not open over " + b->name(),
                         subset_witness(c.space, singleton_bits(c.space->size(),
                                                                c.infinity_index)));
    comp_hd.count();
    if (is_hausdorff(*c.space) != is_hausdorff(*b))
      comp_hd.violation("compactification of " + b->name(),
                        subset_witness(b, b->full_set()));

    if (is_hausdorff(*b) && b->size() <= 4) {
      for_each_subset(b->size(), [&](const Bits& s) {
        sub_hd.count();
        if (!is_hausdorff(*subspace(b, s).space))
          sub_hd.violation("subspace of Hausdorff " + b->name() + " is not Hausdorff",
                           subset_witness(b, s));
      });
    }
  }

  for (int nx = 0; nx <= 4; ++nx)
    for (int ny = 0; ny <= 4; ++ny) {
      SpaceRef x = nth_discrete(nx), y = nth_discrete(ny);
      Product p = product(x, y, opt.limits);
      proj.count();
      if (!is_clopen_map(p.proj_left) || !is_clopen_map(p.proj_right))
        proj.violation("projections of " + p.space->name() + " are not clopen",
                       subset_witness(p.space, p.space->full_set()));
    }

  return {hd.result(),      proj.result(),   incl.result(),
          inf_open.result(), comp_hd.result(), sub_hd.result()};
}

std::vector<LawResult> check_power_shape(const CheckOptions& opt) {
  if (!law_selected(opt, {"power/shape", "power/compact-open-discrete"})) return {};
  LawTally shape("power/shape");
  std::vector<LawResult> out;
  for (int n = 0; n <= 4; ++n) {
    SpaceRef a = nth_discrete(n);
    shape.count();
    PowerObjectBundle pa = power_object(a, opt.limits);
    const std::size_t expected = std::size_t{1} << n;
    bool ok = pa.function_space->size() == expected &&
              pa.power()->size() == expected + 1 && pa.power()->is_discrete() &&
              pa.power()->is_open(singleton_bits(pa.power()->size(), pa.infinity_index()));
    if (!ok) {
      nlohmann::json w;
      w["space"] = a->name();
      w["two_power"] = pa.function_space->size();
      w["power"] = pa.power()->size();
      shape.violation("wrong shape over " + a->name(), std::move(w));
    }
  }
  out.push_back(shape.result());
  if (opt.verify_compact_open) {
    LawTally co("power/compact-open-discrete");
    for (int n = 0; n <= 3; ++n) {
      co.count();
      if (!compact_open_is_discrete(nth_discrete(n), opt.limits)) {
        nlohmann::json w;
        w["space"] = nth_discrete(n)->name();
        co.violation("recomputed compact-open topology is not discrete", std::move(w));
      }
    }
    out.push_back(co.result());
  }
  return out;
}

std::vector<LawResult> run_all_checks(const Model* model, const CheckOptions& opt) {
  std::vector<LawResult> out;
  auto append = [&](std::vector<LawResult>&& rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  append(check_boolean_axioms(model, opt));
  append(check_functoriality(opt));
  append(check_adjoint_suite(model, opt));
  append(check_beck_chevalley_suite(opt));
  append(check_weak_power_beta(opt));
  append(check_delta_diagonal(opt));
  append(check_topology_lemmas(model, opt));
  append(check_power_shape(opt));
  if (!opt.law_filter.empty()) {
    std::vector<LawResult> filtered;
    for (auto& r : out)
      if (r.law.find(opt.law_filter) != std::string::npos) filtered.push_back(std::move(r));
    out = std::move(filtered);
  }
  sort_results(out);
  return out;
}

}  // namespace kht
