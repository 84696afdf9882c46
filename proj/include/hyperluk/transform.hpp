#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperluk/calculus.hpp"
#include "hyperluk/tactic.hpp"

namespace hyperluk {

// Members of `component` listed in second_* go to the new last component;
// the rest stay in place.
struct SplitSpec {
  std::size_t component = 0;
  std::set<std::size_t> second_antecedent;
  std::set<std::size_t> second_succedent;
};

struct InvertOptions {
  std::optional<Term> term;
  std::optional<std::string> fresh;
};

// Raw constructions on canonical trees (inputs must carry ancestry).
NodePtr weaken(const NodePtr& proof, const Sequent& s);
NodePtr split(const NodePtr& proof, const SplitSpec& spec);
NodePtr add_atom(const NodePtr& proof, std::size_t component, const Atom& atom);
std::vector<NodePtr> invert(const NodePtr& proof, const OccurrenceRef& occ, const InvertOptions& options = {});
NodePtr contract(const NodePtr& proof);
NodePtr contract_pair(const NodePtr& proof, std::size_t keep, std::size_t drop);

enum class PermutationCase { P1, P2, P3, P4 };
std::string_view permutation_name(PermutationCase c);
std::optional<PermutationCase> permutation_from_name(std::string_view name);
// The case the node at `at` matches, if any.
std::optional<PermutationCase> classify_permutation(const NodePtr& proof, const NodePath& at);
NodePtr permute(const NodePtr& proof, const NodePath& at, PermutationCase c);

bool is_mid_hypersequent(const NodePtr& proof);
NodePtr to_mid_hypersequent(const NodePtr& proof);

struct ReorderResult {
  NodePtr proof;
  std::vector<LeafChoice> trace;
  std::size_t stages = 0;
  std::vector<std::size_t> stage_heights;
};

ReorderResult reorder_by_tactic(const NodePtr& proof, const Tactic& tactic, std::size_t max_steps = 20000);

// Checked wrappers: canonicalize the input, run, and audit the output.
ProofTree weaken(const ProofTree& proof, const Sequent& s);
ProofTree split(const ProofTree& proof, const SplitSpec& spec);
ProofTree add_atom(const ProofTree& proof, std::size_t component, const Atom& atom);
std::vector<ProofTree> invert(const ProofTree& proof, RuleId rule, const OccurrenceRef& occ,
                              const InvertOptions& options = {});
ProofTree contract(const ProofTree& proof);
ProofTree permute(const ProofTree& proof, const NodePath& at, PermutationCase c);
ProofTree to_mid_hypersequent(const ProofTree& proof);
ReorderResult reorder_by_tactic(const ProofTree& proof, const Tactic& tactic, std::size_t max_steps = 20000);

// G1-style step: premises retain the conclusion. The closer turns proofs
// of the open premises into a proof of the conclusion.
struct MacroStep {
  RuleId rule;
  std::vector<Hypersequent> premises;
  std::function<NodePtr(const std::vector<NodePtr>&)> close;
};

MacroStep macro_step_g1(const Hypersequent& h, const OccurrenceRef& occ, std::optional<Term> term = {});

// A G1 step at a leaf of a search tree. The open leaves are the G1
// premises; `close` takes proofs of them and returns the tree with the
// step replaced by a G3 proof of the leaf hypersequent.
struct MacroExpansion {
  MacroStep step;
  NodePath leaf;
  std::vector<Hypersequent> open_leaves;
  std::function<ProofTree(const std::vector<NodePtr>&)> close;
};
MacroExpansion macro_backward_g1(const ProofTree& tree, const NodePath& leaf, const OccurrenceRef& occ,
                                 std::optional<Term> term = {});

// ---------------------------------------------------------- quantifier DAG

struct QuantifierDag {
  std::vector<Formula> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t source = 0;
  std::vector<std::size_t> sinks;
  // True when h has a component "=> q" for the source vertex q.
  bool source_component = false;
};

QuantifierDag build_quantifier_dag(const Hypersequent& h);
// Existence of values with strict decrease along every edge and source < 1.
bool dag_chain_feasible(const QuantifierDag& dag);
// Quantifier-free components of a hypersequent.
Hypersequent quantifier_free_part(const Hypersequent& h);

}  // namespace hyperluk
