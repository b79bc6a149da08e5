#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace zalpha {

// ---------------------------------------------------------------------------
// Symbolic engine for direct-sum isomorphism reasoning: expressions over
// named spaces and (+), equational axioms A ~ B, and checkable witness terms.
// The decomposition argument "X ~ X(+)X, Y ~ Y(+)Y, mutual complementation
// => X ~ Y" is derived, not hard-coded: derive() searches for a rewrite
// chain and returns a witness that check_witness re-validates independently.
//
// (+) is a plain syntactic binary operator. Associativity and commutativity
// are explicit witness steps, so every derivation is auditable move by move.
// ---------------------------------------------------------------------------

/// Immutable expression tree: an atom (named space) or a direct sum.
/// Atom names must be nonempty and free of '(', ')', '+'.
class SpaceExpr {
 public:
  SpaceExpr() = default;  // empty handle; usable only as a placeholder

  static SpaceExpr atom(const std::string& name);
  static SpaceExpr sum(SpaceExpr left, SpaceExpr right);

  bool empty() const { return node_ == nullptr; }
  bool is_atom() const;
  const std::string& atom_name() const;
  const SpaceExpr& left() const;
  const SpaceExpr& right() const;

  std::size_t leaf_count() const;
  std::size_t depth() const;  // atoms have depth 1

  /// canonical text, e.g. "((X+Y)+E)"; doubles as a hash key
  std::string str() const;

  friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);
  friend bool operator!=(const SpaceExpr& a, const SpaceExpr& b) { return !(a == b); }

  /// ["atom", name] | ["sum", left, right]
  nlohmann::json to_json() const;
  static SpaceExpr from_json(const nlohmann::json& j);

 private:
  struct Node;  // defined in the implementation file
  std::shared_ptr<const Node> node_;
};

struct IsoAxiom {
  std::string name;
  SpaceExpr lhs;
  SpaceExpr rhs;
};

struct IsoPair {
  SpaceExpr source;
  SpaceExpr target;
};

/// Witness term for an isomorphism between two expressions.
class IsoWitness {
 public:
  enum class Kind { axiom, refl, sym, trans, cong, assoc, assoc_inv, comm };

  static IsoWitness axiom(const std::string& name);
  static IsoWitness refl(SpaceExpr e);
  static IsoWitness sym(IsoWitness w);
  static IsoWitness trans(IsoWitness first, IsoWitness second);
  static IsoWitness cong(IsoWitness left, IsoWitness right);
  static IsoWitness assoc(SpaceExpr a, SpaceExpr b, SpaceExpr c);      // ((a+b)+c) ~ (a+(b+c))
  static IsoWitness assoc_inv(SpaceExpr a, SpaceExpr b, SpaceExpr c);  // (a+(b+c)) ~ ((a+b)+c)
  static IsoWitness comm(SpaceExpr a, SpaceExpr b);                    // (a+b) ~ (b+a)

  Kind kind() const;
  const std::string& axiom_name() const;       // kind() == axiom
  const SpaceExpr& expr_arg(std::size_t i) const;  // refl: 0; assoc/assoc_inv: 0..2; comm: 0..1
  const IsoWitness& sub(std::size_t i) const;      // sym: 0; trans/cong: 0..1

  /// node kind tags: "axiom" "refl" "sym" "trans" "cong" "assoc" "assoc_inv" "comm"
  nlohmann::json to_json() const;
  static IsoWitness from_json(const nlohmann::json& j);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<SpaceExpr> exprs;
    std::vector<IsoWitness> subs;
  };
  std::shared_ptr<const Node> node_;
  explicit IsoWitness(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// Type error located by a path of constructor tags from the root, e.g.
/// "trans.second/cong.left/axiom".
class WitnessTypeError : public std::runtime_error {
 public:
  WitnessTypeError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Returns the unique (source, target) pair the witness proves, or throws
/// WitnessTypeError (unknown axiom name, trans endpoint mismatch, malformed
/// term). Axiom names must be unique within the set.
IsoPair check_witness(const IsoWitness& w, const std::vector<IsoAxiom>& axioms);

struct DeriveResult {
  std::optional<IsoWitness> witness;  // empty on failure (budget exhausted)
  std::size_t expansions = 0;         // states expanded
  std::size_t frontier = 0;           // frontier size when the budget ran out
};

/// Breadth-first search for a rewrite chain from goal.source to goal.target.
///
/// One step rewrites a single subterm: an axiom applied left-to-right or
/// right-to-left, or an associativity/commutativity move. Subterms are
/// visited root first, then left, then right; at a subterm, axioms fire in
/// declaration order (forward before backward) ahead of assoc, assoc_inv,
/// comm. The search is goal-directed by expression size: it first explores
/// expressions with no more leaves than the larger goal side, then widens the
/// bound by one and restarts, until the step budget (total expansions) is
/// spent. Everything is deterministic; with an unbounded budget every
/// derivable goal is eventually found.
///
/// Budget exhaustion is an ordinary failure result carrying the frontier
/// size, not an exception.
DeriveResult derive(const std::vector<IsoAxiom>& axioms, const IsoPair& goal,
                    std::size_t step_budget);

/// The mutual-complementation assumption for the conjugate pair, over atoms
/// Z_alpha, Z_neg_alpha, E, F: both spaces Cartesian, each complemented in
/// the other ("A complemented in B" is the axiom B ~ A (+) E).
std::vector<IsoAxiom> self_conjugacy_axioms();

/// The reductio bookkeeping around derive(): what was assumed, what was
/// derived, and which imported fact the conclusion collides with. The
/// collision is reported, never asserted as a proof.
struct ContradictionTrace {
  IsoPair goal;                // (Z_alpha, Z_neg_alpha)
  DeriveResult derivation;
  std::string assumption;      // the complementation assumption encoded in the axioms
  std::string imported_fact;   // external non-isomorphism fact, taken on faith
  std::string conclusion;
};

/// Runs derive() for (Z_alpha, Z_neg_alpha) over the given axioms (normally
/// self_conjugacy_axioms()) and packages the trace.
ContradictionTrace self_conjugacy_contradiction(const std::vector<IsoAxiom>& axioms,
                                                std::size_t step_budget = 10000);

/// A derivation problem as a file: {"axioms": [{"name","lhs","rhs"}...],
/// "goal": {"source", "target"}}.
struct DerivationProblem {
  std::vector<IsoAxiom> axioms;
  IsoPair goal;
};

nlohmann::json problem_to_json(const DerivationProblem& p);
DerivationProblem problem_from_json(const nlohmann::json& j);
DerivationProblem load_problem(const std::string& path);

/// The stock decomposition instance: axioms {X+X ~ X, Y+Y ~ Y, X ~ Y+F,
/// Y ~ X+E}, goal (X, Y).
DerivationProblem standard_problem();

}  // namespace zalpha
