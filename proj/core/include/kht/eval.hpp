#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kht/formula.hpp"
#include "kht/heyting.hpp"
#include "kht/model.hpp"
#include "kht/power.hpp"
#include "kht/topology.hpp"

namespace kht {

// An ordered list of typed variables. Its denotation is the left-major
// product of the variable spaces; the empty context denotes the terminal
// space.
struct Context {
  std::vector<std::pair<std::string, SpaceExpr>> entries;

  static Context parse(const std::string& decl);  // "x : X, s : P(X)"
};

// Resolution and evaluation session over one model: resolves space
// expressions, building and caching products, power-object bundles and
// equality predicates as the formulas demand them.
class Interp {
public:
  explicit Interp(const Model& model, Limits limits = {});

  const Model& model() const { return *model_; }
  const Limits& limits() const { return limits_; }

  SpaceRef resolve_space(const SpaceExpr& e);
  const ProductSpace& product_of(const std::vector<SpaceExpr>& factors);
  const PowerObjectBundle& bundle(const SpaceExpr& base);
  const Predicate& delta(const SpaceExpr& space);

private:
  const Model* model_;
  Limits limits_;
  std::map<std::string, SpaceRef> spaces_;
  std::map<std::string, ProductSpace> products_;
  std::map<std::string, PowerObjectBundle> bundles_;
  std::map<std::string, Predicate> deltas_;
};

// Resolves variables to context slots and literals to points, checks atom
// arities against the model and the typing of = and in. Mutates the
// annotation fields of the tree. Errors: unknown_space, unbound_variable,
// type_error (with source positions).
void typecheck(Formula& f, const Context& ctx, Interp& interp);

// Structural recursion into the tripos: connectives through the clopen
// algebra of the context space, quantifiers through the adjoints along the
// projection deleting the bound factor, = through δ, in through ∈, and
// comprehensions through naming maps. The formula must be typechecked.
Predicate eval_formula(const Formula& f, const Context& ctx, Interp& interp);

struct SequentResult {
  bool holds = false;
  std::optional<std::size_t> counterexample;  // least point of the context space
  std::string counterexample_label;
};

// phi |- psi in the algebra order of the context space.
SequentResult eval_sequent(Formula& lhs, Formula& rhs, const Context& ctx, Interp& interp);

// parse + typecheck + evaluate
Predicate eval_text(const std::string& formula, const std::string& context_decl, Interp& interp);
SequentResult eval_sequent_text(const std::string& sequent, const std::string& context_decl,
                                Interp& interp);

}  // namespace kht
