#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperluk/syntax.hpp"

namespace hyperluk {

enum class RuleId { ImpLeft, ImpRight, AllLeft, AllRight, ExLeft, ExRight };

std::string_view rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);
bool is_quantifier_rule(RuleId rule);
std::size_t rule_arity(RuleId rule);
// The rule whose principal shape matches f at the given side, if any.
std::optional<RuleId> rule_for(const Formula& f, Side side);
std::optional<FreshKind> proper_kind(RuleId rule);
bool needs_term(RuleId rule);

struct RuleApplication {
  RuleId rule = RuleId::ImpRight;
  OccurrenceRef principal;
  std::optional<std::string> proper_semiprop;
  std::optional<Term> proper_term;
  std::optional<std::string> proper_parameter;

  std::optional<std::string> proper_symbol() const;
  void set_proper_symbol(const std::string& name);
};

// Where a premise member came from in the conclusion. Members produced
// from the principal formula point at the principal occurrence.
struct MemberOrigin {
  OccurrenceRef source;
  bool from_principal = false;
};

struct ComponentOrigin {
  std::size_t source = 0;
  bool augmentable = true;
  std::array<std::vector<MemberOrigin>, 2> members;
};

struct PremiseAncestry {
  std::vector<ComponentOrigin> components;

  // Premise occurrence that copies the (non-principal) conclusion occurrence.
  OccurrenceRef copy_of(const OccurrenceRef& conclusion_occ) const;
  // The unique augmentable ancestor of a conclusion component.
  std::size_t augmentable_ancestor(std::size_t conclusion_component) const;
  // Premise components descending from a conclusion component, in order.
  std::vector<std::size_t> descendants(std::size_t conclusion_component) const;
};

struct Premise {
  Hypersequent hypersequent;
  PremiseAncestry ancestry;
};

// Canonical premises of a backward application. Validates the principal
// shape, proper symbol sorts, freshness and closedness of the term.
std::vector<Premise> rule_premises(const Hypersequent& conclusion, const RuleApplication& app);

// Chooses the rule for occ and the lowest fresh proper symbol.
RuleApplication make_application(const Hypersequent& h, const OccurrenceRef& occ, std::optional<Term> term = {});

struct ProofNode;
using NodePtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  Hypersequent hypersequent;
  std::optional<RuleApplication> application;
  std::vector<NodePtr> children;
  // One entry per child; empty for nodes that were built unchecked.
  std::vector<PremiseAncestry> ancestry;

  bool is_leaf() const { return !application.has_value(); }
};

using NodePath = std::vector<std::size_t>;

NodePtr make_leaf(Hypersequent h);
// Builds an internal node. Children must prove hypersequents multiset-equal
// to the canonical premises; they are re-aligned to them.
NodePtr make_node(Hypersequent conclusion, RuleApplication app, std::vector<NodePtr> children);
// No validation at all; used for deserialized trees prior to checking.
NodePtr make_unchecked_node(Hypersequent conclusion, std::optional<RuleApplication> app, std::vector<NodePtr> children);
// Re-express a proof of h' (multiset-equal to target) as a proof of target.
NodePtr align(const NodePtr& node, const Hypersequent& target);
// Rebuild every internal node through make_node; throws if a step is invalid.
NodePtr canonicalize(const NodePtr& node);

enum class TreeStatus { SearchTree, CheckedProof };

struct ProofTree {
  NodePtr root;
  TreeStatus status = TreeStatus::SearchTree;
};

const ProofNode& node_at(const NodePtr& root, const NodePath& path);
NodePtr replace_at(const NodePtr& root, const NodePath& path, NodePtr replacement);

struct LeafInfo {
  NodePath path;
  NodePtr node;
};
std::vector<LeafInfo> leaves(const NodePtr& root);

std::size_t height(const NodePtr& root);
std::size_t quantifier_count(const NodePtr& root);
std::size_t height(const ProofTree& tree);
std::size_t quantifier_count(const ProofTree& tree);

// Every symbol in every node, including proper terms.
std::set<std::string> all_symbols(const NodePtr& root);

// Global, purely textual replacement of a symbol throughout the subtree.
NodePtr replace_symbol(const NodePtr& root, const std::string& from, const std::string& to);
// Renames the proper symbol of applications binding `from`, within their
// premise subtrees only.
NodePtr rename_bound(const NodePtr& root, const std::string& from, const std::string& to);
// Renames every application binding a symbol in `names` to a name fresh
// for `avoid` and the tree itself.
NodePtr rename_binders(const NodePtr& root, const std::set<std::string>& names, std::set<std::string> avoid = {});

ProofTree backward_apply(const ProofTree& tree, const NodePath& leaf, const OccurrenceRef& occ,
                         std::optional<Term> term = {});

struct CheckReport {
  bool ok = true;
  std::string message;
  NodePath where;
};

CheckReport check_proof(const NodePtr& root);
CheckReport check_proof(const ProofTree& tree);
// check_proof followed by canonicalization; throws on failure.
ProofTree certify(const NodePtr& root);

ProofTree rename_proper_symbols(const ProofTree& tree, const std::map<std::string, std::string>& mapping);
ProofTree adjoin_context(const ProofTree& tree, const Hypersequent& g);
NodePtr adjoin_context(const NodePtr& root, const Hypersequent& g);

}  // namespace hyperluk
