#include "zalpha/pelczynski.hpp"

#include <deque>
#include <fstream>
#include <unordered_map>
#include <utility>

namespace zalpha {

// ---------------------------------------------------------------------------
// SpaceExpr
// ---------------------------------------------------------------------------

struct SpaceExpr::Node {
  std::string name;  // nonempty iff atom
  SpaceExpr l, r;
};

SpaceExpr SpaceExpr::atom(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("SpaceExpr::atom: empty name");
  if (name.find_first_of("()+") != std::string::npos)
    throw std::invalid_argument("SpaceExpr::atom: name must not contain '(', ')' or '+': " + name);
  SpaceExpr e;
  e.node_ = std::make_shared<Node>(Node{name, SpaceExpr(), SpaceExpr()});
  return e;
}

SpaceExpr SpaceExpr::sum(SpaceExpr left, SpaceExpr right) {
  if (left.empty() || right.empty())
    throw std::invalid_argument("SpaceExpr::sum: empty operand");
  SpaceExpr e;
  e.node_ = std::make_shared<Node>(Node{std::string(), std::move(left), std::move(right)});
  return e;
}

bool SpaceExpr::is_atom() const {
  if (empty()) throw std::logic_error("SpaceExpr: empty handle");
  return !node_->name.empty();
}

const std::string& SpaceExpr::atom_name() const {
  if (!is_atom()) throw std::logic_error("SpaceExpr::atom_name: not an atom");
  return node_->name;
}

const SpaceExpr& SpaceExpr::left() const {
  if (is_atom()) throw std::logic_error("SpaceExpr::left: atom has no children");
  return node_->l;
}

const SpaceExpr& SpaceExpr::right() const {
  if (is_atom()) throw std::logic_error("SpaceExpr::right: atom has no children");
  return node_->r;
}

std::size_t SpaceExpr::leaf_count() const {
  if (is_atom()) return 1;
  return node_->l.leaf_count() + node_->r.leaf_count();
}

std::size_t SpaceExpr::depth() const {
  if (is_atom()) return 1;
  return 1 + std::max(node_->l.depth(), node_->r.depth());
}

namespace {

void render(const SpaceExpr& e, std::string& out) {
  if (e.is_atom()) {
    out += e.atom_name();
    return;
  }
  out += '(';
  render(e.left(), out);
  out += '+';
  render(e.right(), out);
  out += ')';
}

}  // namespace

std::string SpaceExpr::str() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.empty() || b.empty()) return false;
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.atom_name() == b.atom_name();
  return a.left() == b.left() && a.right() == b.right();
}

nlohmann::json SpaceExpr::to_json() const {
  if (is_atom()) return nlohmann::json::array({"atom", atom_name()});
  return nlohmann::json::array({"sum", left().to_json(), right().to_json()});
}

SpaceExpr SpaceExpr::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw std::runtime_error("SpaceExpr::from_json: expected [\"atom\",...] or [\"sum\",...]");
  const std::string tag = j[0].get<std::string>();
  if (tag == "atom") {
    if (j.size() != 2 || !j[1].is_string())
      throw std::runtime_error("SpaceExpr::from_json: atom wants [\"atom\", name]");
    return atom(j[1].get<std::string>());
  }
  if (tag == "sum") {
    if (j.size() != 3)
      throw std::runtime_error("SpaceExpr::from_json: sum wants [\"sum\", left, right]");
    return sum(from_json(j[1]), from_json(j[2]));
  }
  throw std::runtime_error("SpaceExpr::from_json: unknown tag: " + tag);
}

// ---------------------------------------------------------------------------
// IsoWitness
// ---------------------------------------------------------------------------

IsoWitness IsoWitness::axiom(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("IsoWitness::axiom: empty name");
  return IsoWitness(std::make_shared<Node>(Node{Kind::axiom, name, {}, {}}));
}

IsoWitness IsoWitness::refl(SpaceExpr e) {
  if (e.empty()) throw std::invalid_argument("IsoWitness::refl: empty expression");
  return IsoWitness(std::make_shared<Node>(Node{Kind::refl, {}, {std::move(e)}, {}}));
}

IsoWitness IsoWitness::sym(IsoWitness w) {
  return IsoWitness(std::make_shared<Node>(Node{Kind::sym, {}, {}, {std::move(w)}}));
}

IsoWitness IsoWitness::trans(IsoWitness first, IsoWitness second) {
  return IsoWitness(
      std::make_shared<Node>(Node{Kind::trans, {}, {}, {std::move(first), std::move(second)}}));
}

IsoWitness IsoWitness::cong(IsoWitness left, IsoWitness right) {
  return IsoWitness(
      std::make_shared<Node>(Node{Kind::cong, {}, {}, {std::move(left), std::move(right)}}));
}

IsoWitness IsoWitness::assoc(SpaceExpr a, SpaceExpr b, SpaceExpr c) {
  if (a.empty() || b.empty() || c.empty())
    throw std::invalid_argument("IsoWitness::assoc: empty expression");
  return IsoWitness(std::make_shared<Node>(
      Node{Kind::assoc, {}, {std::move(a), std::move(b), std::move(c)}, {}}));
}

IsoWitness IsoWitness::assoc_inv(SpaceExpr a, SpaceExpr b, SpaceExpr c) {
  if (a.empty() || b.empty() || c.empty())
    throw std::invalid_argument("IsoWitness::assoc_inv: empty expression");
  return IsoWitness(std::make_shared<Node>(
      Node{Kind::assoc_inv, {}, {std::move(a), std::move(b), std::move(c)}, {}}));
}

IsoWitness IsoWitness::comm(SpaceExpr a, SpaceExpr b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("IsoWitness::comm: empty expression");
  return IsoWitness(
      std::make_shared<Node>(Node{Kind::comm, {}, {std::move(a), std::move(b)}, {}}));
}

IsoWitness::Kind IsoWitness::kind() const {
  if (!node_) throw std::logic_error("IsoWitness: empty handle");
  return node_->kind;
}

const std::string& IsoWitness::axiom_name() const {
  if (kind() != Kind::axiom) throw std::logic_error("IsoWitness::axiom_name: not an axiom node");
  return node_->name;
}

const SpaceExpr& IsoWitness::expr_arg(std::size_t i) const {
  if (!node_ || i >= node_->exprs.size())
    throw std::logic_error("IsoWitness::expr_arg: index out of range");
  return node_->exprs[i];
}

const IsoWitness& IsoWitness::sub(std::size_t i) const {
  if (!node_ || i >= node_->subs.size())
    throw std::logic_error("IsoWitness::sub: index out of range");
  return node_->subs[i];
}

namespace {

const char* kind_tag(IsoWitness::Kind k) {
  switch (k) {
    case IsoWitness::Kind::axiom: return "axiom";
    case IsoWitness::Kind::refl: return "refl";
    case IsoWitness::Kind::sym: return "sym";
    case IsoWitness::Kind::trans: return "trans";
    case IsoWitness::Kind::cong: return "cong";
    case IsoWitness::Kind::assoc: return "assoc";
    case IsoWitness::Kind::assoc_inv: return "assoc_inv";
    case IsoWitness::Kind::comm: return "comm";
  }
  throw std::logic_error("kind_tag: bad kind");
}

}  // namespace

nlohmann::json IsoWitness::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_tag(kind());
  switch (kind()) {
    case Kind::axiom:
      j["name"] = axiom_name();
      break;
    case Kind::refl:
      j["expr"] = expr_arg(0).to_json();
      break;
    case Kind::sym:
      j["inner"] = sub(0).to_json();
      break;
    case Kind::trans:
      j["first"] = sub(0).to_json();
      j["second"] = sub(1).to_json();
      break;
    case Kind::cong:
      j["left"] = sub(0).to_json();
      j["right"] = sub(1).to_json();
      break;
    case Kind::assoc:
    case Kind::assoc_inv:
      j["a"] = expr_arg(0).to_json();
      j["b"] = expr_arg(1).to_json();
      j["c"] = expr_arg(2).to_json();
      break;
    case Kind::comm:
      j["a"] = expr_arg(0).to_json();
      j["b"] = expr_arg(1).to_json();
      break;
  }
  return j;
}

IsoWitness IsoWitness::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::runtime_error("IsoWitness::from_json: expected object with string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  auto want = [&](const char* field) -> const nlohmann::json& {
    if (!j.contains(field))
      throw std::runtime_error("IsoWitness::from_json: " + kind + " node missing \"" + field +
                               "\"");
    return j[field];
  };
  if (kind == "axiom") {
    const auto& n = want("name");
    if (!n.is_string()) throw std::runtime_error("IsoWitness::from_json: axiom name must be a string");
    return axiom(n.get<std::string>());
  }
  if (kind == "refl") return refl(SpaceExpr::from_json(want("expr")));
  if (kind == "sym") return sym(from_json(want("inner")));
  if (kind == "trans") return trans(from_json(want("first")), from_json(want("second")));
  if (kind == "cong") return cong(from_json(want("left")), from_json(want("right")));
  if (kind == "assoc")
    return assoc(SpaceExpr::from_json(want("a")), SpaceExpr::from_json(want("b")),
                 SpaceExpr::from_json(want("c")));
  if (kind == "assoc_inv")
    return assoc_inv(SpaceExpr::from_json(want("a")), SpaceExpr::from_json(want("b")),
                     SpaceExpr::from_json(want("c")));
  if (kind == "comm")
    return comm(SpaceExpr::from_json(want("a")), SpaceExpr::from_json(want("b")));
  throw std::runtime_error("IsoWitness::from_json: unknown kind: " + kind);
}

// ---------------------------------------------------------------------------
// check_witness
// ---------------------------------------------------------------------------

WitnessTypeError::WitnessTypeError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

void require_unique_names(const std::vector<IsoAxiom>& axioms) {
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (axioms[i].name.empty()) throw std::invalid_argument("axiom with empty name");
    if (axioms[i].lhs.empty() || axioms[i].rhs.empty())
      throw std::invalid_argument("axiom " + axioms[i].name + " with empty side");
    for (std::size_t k = i + 1; k < axioms.size(); ++k)
      if (axioms[i].name == axioms[k].name)
        throw std::invalid_argument("duplicate axiom name: " + axioms[i].name);
  }
}

IsoPair check_rec(const IsoWitness& w, const std::vector<IsoAxiom>& axioms,
                  const std::string& path) {
  using Kind = IsoWitness::Kind;
  const std::string here = path + kind_tag(w.kind());
  switch (w.kind()) {
    case Kind::axiom: {
      for (const IsoAxiom& ax : axioms)
        if (ax.name == w.axiom_name()) return {ax.lhs, ax.rhs};
      throw WitnessTypeError(here, "unknown axiom name: " + w.axiom_name());
    }
    case Kind::refl: {
      const SpaceExpr& e = w.expr_arg(0);
      return {e, e};
    }
    case Kind::sym: {
      IsoPair p = check_rec(w.sub(0), axioms, here + ".inner/");
      return {p.target, p.source};
    }
    case Kind::trans: {
      IsoPair a = check_rec(w.sub(0), axioms, here + ".first/");
      IsoPair b = check_rec(w.sub(1), axioms, here + ".second/");
      if (a.target != b.source)
        throw WitnessTypeError(here, "chain mismatch: first ends at " + a.target.str() +
                                         " but second starts at " + b.source.str());
      return {a.source, b.target};
    }
    case Kind::cong: {
      IsoPair a = check_rec(w.sub(0), axioms, here + ".left/");
      IsoPair b = check_rec(w.sub(1), axioms, here + ".right/");
      return {SpaceExpr::sum(a.source, b.source), SpaceExpr::sum(a.target, b.target)};
    }
    case Kind::assoc: {
      const SpaceExpr &a = w.expr_arg(0), &b = w.expr_arg(1), &c = w.expr_arg(2);
      return {SpaceExpr::sum(SpaceExpr::sum(a, b), c), SpaceExpr::sum(a, SpaceExpr::sum(b, c))};
    }
    case Kind::assoc_inv: {
      const SpaceExpr &a = w.expr_arg(0), &b = w.expr_arg(1), &c = w.expr_arg(2);
      return {SpaceExpr::sum(a, SpaceExpr::sum(b, c)), SpaceExpr::sum(SpaceExpr::sum(a, b), c)};
    }
    case Kind::comm: {
      const SpaceExpr &a = w.expr_arg(0), &b = w.expr_arg(1);
      return {SpaceExpr::sum(a, b), SpaceExpr::sum(b, a)};
    }
  }
  throw WitnessTypeError(here, "malformed witness node");
}

}  // namespace

IsoPair check_witness(const IsoWitness& w, const std::vector<IsoAxiom>& axioms) {
  require_unique_names(axioms);
  return check_rec(w, axioms, "");
}

// ---------------------------------------------------------------------------
// derive
// ---------------------------------------------------------------------------

namespace {

struct Step {
  SpaceExpr result;   // full expression after the rewrite
  IsoWitness proof;   // witness for (whole before) ~ (whole after)
};

// Replace the subterm addressed by path (0 = left, 1 = right) with `sub`.
SpaceExpr replace_at(const SpaceExpr& root, const std::vector<int>& path, std::size_t i,
                     const SpaceExpr& sub) {
  if (i == path.size()) return sub;
  if (path[i] == 0)
    return SpaceExpr::sum(replace_at(root.left(), path, i + 1, sub), root.right());
  return SpaceExpr::sum(root.left(), replace_at(root.right(), path, i + 1, sub));
}

// Lift a local witness at `path` to the whole expression via cong/refl frames.
IsoWitness lift_at(const SpaceExpr& root, const std::vector<int>& path, std::size_t i,
                   const IsoWitness& w) {
  if (i == path.size()) return w;
  if (path[i] == 0)
    return IsoWitness::cong(lift_at(root.left(), path, i + 1, w), IsoWitness::refl(root.right()));
  return IsoWitness::cong(IsoWitness::refl(root.left()), lift_at(root.right(), path, i + 1, w));
}

// All single-step rewrites of `whole`, in deterministic order: subterms root
// first then left then right; at a subterm, axioms in declaration order
// (forward, then backward), then assoc, assoc_inv, comm.
void successors(const SpaceExpr& whole, const SpaceExpr& node, const std::vector<IsoAxiom>& axioms,
                std::vector<int>& path, std::vector<Step>& out) {
  auto emit = [&](const SpaceExpr& replacement, IsoWitness local) {
    out.push_back(Step{replace_at(whole, path, 0, replacement),
                       lift_at(whole, path, 0, std::move(local))});
  };
  for (const IsoAxiom& ax : axioms) {
    if (node == ax.lhs) emit(ax.rhs, IsoWitness::axiom(ax.name));
    if (node == ax.rhs) emit(ax.lhs, IsoWitness::sym(IsoWitness::axiom(ax.name)));
  }
  if (!node.is_atom()) {
    const SpaceExpr &l = node.left(), &r = node.right();
    if (!l.is_atom())
      emit(SpaceExpr::sum(l.left(), SpaceExpr::sum(l.right(), r)),
           IsoWitness::assoc(l.left(), l.right(), r));
    if (!r.is_atom())
      emit(SpaceExpr::sum(SpaceExpr::sum(l, r.left()), r.right()),
           IsoWitness::assoc_inv(l, r.left(), r.right()));
    emit(SpaceExpr::sum(r, l), IsoWitness::comm(l, r));
    path.push_back(0);
    successors(whole, l, axioms, path, out);
    path.back() = 1;
    successors(whole, r, axioms, path, out);
    path.pop_back();
  }
}

struct Visit {
  SpaceExpr expr;
  std::string parent;  // key of predecessor; empty for the start state
  std::optional<IsoWitness> step;
};

}  // namespace

DeriveResult derive(const std::vector<IsoAxiom>& axioms, const IsoPair& goal,
                    std::size_t step_budget) {
  require_unique_names(axioms);
  if (goal.source.empty() || goal.target.empty())
    throw std::invalid_argument("derive: empty goal expression");
  if (step_budget == 0) throw std::invalid_argument("derive: step_budget must be positive");

  DeriveResult res;
  if (goal.source == goal.target) {
    res.witness = IsoWitness::refl(goal.source);
    res.expansions = 0;
    return res;
  }

  const std::string start_key = goal.source.str();
  const std::string target_key = goal.target.str();
  std::size_t cap = std::max(goal.source.leaf_count(), goal.target.leaf_count());
  std::size_t spent = 0;

  while (true) {
    std::unordered_map<std::string, Visit> seen;
    seen.emplace(start_key, Visit{goal.source, std::string(), std::nullopt});
    std::deque<std::string> queue{start_key};
    std::vector<Step> steps;
    std::vector<int> path;

    while (!queue.empty()) {
      if (spent >= step_budget) {
        res.expansions = spent;
        res.frontier = queue.size();
        return res;
      }
      const std::string key = queue.front();
      queue.pop_front();
      const SpaceExpr expr = seen.at(key).expr;
      ++spent;

      steps.clear();
      successors(expr, expr, axioms, path, steps);
      for (Step& s : steps) {
        if (s.result.leaf_count() > cap) continue;
        std::string skey = s.result.str();
        if (seen.count(skey)) continue;
        seen.emplace(skey, Visit{s.result, key, std::move(s.proof)});
        if (skey == target_key) {
          // walk back to the start, then fold the chain right-nested
          std::vector<IsoWitness> chain;
          for (std::string at = skey; !seen.at(at).parent.empty(); at = seen.at(at).parent)
            chain.push_back(*seen.at(at).step);
          IsoWitness w = chain.front();  // last step of the derivation
          for (std::size_t i = 1; i < chain.size(); ++i) w = IsoWitness::trans(chain[i], w);
          res.witness = std::move(w);
          res.expansions = spent;
          return res;
        }
        queue.push_back(std::move(skey));
      }
    }
    ++cap;  // this size bound is exhausted; widen and restart
  }
}

// ---------------------------------------------------------------------------
// the conjugate-pair instance
// ---------------------------------------------------------------------------

std::vector<IsoAxiom> self_conjugacy_axioms() {
  const SpaceExpr Z = SpaceExpr::atom("Z_alpha");
  const SpaceExpr W = SpaceExpr::atom("Z_neg_alpha");
  const SpaceExpr E = SpaceExpr::atom("E");
  const SpaceExpr F = SpaceExpr::atom("F");
  return {
      {"square_z", SpaceExpr::sum(Z, Z), Z},
      {"square_conj", SpaceExpr::sum(W, W), W},
      {"conj_complemented", Z, SpaceExpr::sum(W, E)},
      {"z_complemented", W, SpaceExpr::sum(Z, F)},
  };
}

ContradictionTrace self_conjugacy_contradiction(const std::vector<IsoAxiom>& axioms,
                                                std::size_t step_budget) {
  ContradictionTrace tr;
  tr.goal = {SpaceExpr::atom("Z_alpha"), SpaceExpr::atom("Z_neg_alpha")};
  tr.derivation = derive(axioms, tr.goal, step_budget);
  tr.assumption =
      "assumed: Z_alpha and Z_neg_alpha are each isomorphic to their own square and "
      "each complemented in the other (the conjugation intertwines the two spaces)";
  tr.imported_fact =
      "imported, not derived here: Z_alpha and Z_beta are isomorphic as quasi-Banach "
      "spaces only when alpha = beta";
  if (tr.derivation.witness) {
    tr.conclusion =
        "derived Z_alpha ~ Z_neg_alpha from the assumption; for alpha != 0 this "
        "collides with the imported fact, so the assumption fails (reductio note, "
        "not a checked proof of the imported fact)";
  } else {
    tr.conclusion = "no derivation found within the step budget; nothing to conclude";
  }
  return tr;
}

// ---------------------------------------------------------------------------
// problem files
// ---------------------------------------------------------------------------

nlohmann::json problem_to_json(const DerivationProblem& p) {
  nlohmann::json ax = nlohmann::json::array();
  for (const IsoAxiom& a : p.axioms)
    ax.push_back({{"name", a.name}, {"lhs", a.lhs.to_json()}, {"rhs", a.rhs.to_json()}});
  return {{"axioms", ax},
          {"goal",
           {{"source", p.goal.source.to_json()}, {"target", p.goal.target.to_json()}}}};
}

DerivationProblem problem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("axioms") || !j.contains("goal"))
    throw std::runtime_error("problem_from_json: expected object with \"axioms\" and \"goal\"");
  if (!j["axioms"].is_array()) throw std::runtime_error("problem_from_json: axioms must be an array");
  DerivationProblem p;
  for (const auto& a : j["axioms"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("lhs") || !a.contains("rhs") ||
        !a["name"].is_string())
      throw std::runtime_error("problem_from_json: axiom wants {name, lhs, rhs}");
    p.axioms.push_back(IsoAxiom{a["name"].get<std::string>(), SpaceExpr::from_json(a["lhs"]),
                                SpaceExpr::from_json(a["rhs"])});
  }
  const auto& g = j["goal"];
  if (!g.is_object() || !g.contains("source") || !g.contains("target"))
    throw std::runtime_error("problem_from_json: goal wants {source, target}");
  p.goal = IsoPair{SpaceExpr::from_json(g["source"]), SpaceExpr::from_json(g["target"])};
  require_unique_names(p.axioms);
  return p;
}

DerivationProblem standard_problem() {
  const SpaceExpr X = SpaceExpr::atom("X");
  const SpaceExpr Y = SpaceExpr::atom("Y");
  const SpaceExpr E = SpaceExpr::atom("E");
  const SpaceExpr F = SpaceExpr::atom("F");
  DerivationProblem p;
  p.axioms = {
      {"square_x", SpaceExpr::sum(X, X), X},
      {"square_y", SpaceExpr::sum(Y, Y), Y},
      {"x_decomposes", X, SpaceExpr::sum(Y, F)},
      {"y_decomposes", Y, SpaceExpr::sum(X, E)},
  };
  p.goal = IsoPair{X, Y};
  return p;
}

DerivationProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_problem: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_problem: " + path + ": " + e.what());
  }
  return problem_from_json(j);
}

}  // namespace zalpha
