#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace {

bool is_propositional(const ProofNode& n) { return n.application && !is_quantifier_rule(n.application->rule); }

// Topmost propositional application with quantifier applications above it.
// Returns the number of quantifier applications at or above `node`.
std::size_t find_r0(const NodePtr& node, NodePath& path, std::optional<NodePath>& found) {
  std::size_t q = node->application && is_quantifier_rule(node->application->rule) ? 1 : 0;
  std::size_t above = 0;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    path.push_back(i);
    above += find_r0(node->children[i], path, found);
    path.pop_back();
  }
  if (!found && is_propositional(*node) && above > 0) found = path;
  return q + above;
}

std::optional<NodePath> select_r0(const NodePtr& root) {
  NodePath path;
  std::optional<NodePath> found;
  find_r0(root, path, found);
  return found;
}

NodePtr mid_rec(NodePtr proof, std::size_t& budget);

NodePtr lift_two_premise(const NodePtr& proof, const NodePath& at, std::size_t& budget) {
  const ProofNode& node = node_at(proof, at);
  std::size_t i = 0;
  while (i < 2 && (node.children[i]->is_leaf() || !is_quantifier_rule(node.children[i]->application->rule))) ++i;
  if (i == 2) throw std::logic_error("no quantifier application above the selected node");
  std::size_t j = 1 - i;
  const ProofNode& qchild = *node.children[i];
  const MemberOrigin& origin = node.ancestry[i]
                                   .components[qchild.application->principal.component]
                                   .members[detail::side_index(qchild.application->principal.side)]
                                                [qchild.application->principal.member];
  if (origin.from_principal) throw TransformError("to_mid_hypersequent: member is not prenex");
  NodePtr dj = mid_rec(node.children[j], budget);
  RuleApplication app = *qchild.application;
  app.principal = node.ancestry[j].copy_of(origin.source);
  app.set_proper_symbol(fresh_symbol(*proper_kind(app.rule), symbols(dj->hypersequent)));
  std::vector<NodePtr> premise = detail::invert_with(dj, app);
  NodePtr lifted = make_node(dj->hypersequent, std::move(app), std::move(premise));
  auto copy = std::make_shared<ProofNode>(node);
  copy->children[j] = lifted;
  NodePtr replaced = replace_at(proof, at, copy);
  return permute(replaced, at, origin.source.component == node.application->principal.component
                                   ? PermutationCase::P3
                                   : PermutationCase::P4);
}

NodePtr mid_rec(NodePtr proof, std::size_t& budget) {
  while (auto at = select_r0(proof)) {
    if (budget-- == 0) throw TransformError("to_mid_hypersequent: iteration limit reached");
    const ProofNode& node = node_at(proof, *at);
    if (node.application->rule == RuleId::ImpRight) {
      proof = lift_two_premise(proof, *at, budget);
    } else {
      auto c = classify_permutation(proof, *at);
      if (!c) throw TransformError("to_mid_hypersequent: member is not prenex");
      proof = permute(proof, *at, *c);
    }
  }
  return proof;
}

}  // namespace

bool is_mid_hypersequent(const NodePtr& proof) { return !select_r0(proof).has_value(); }

NodePtr to_mid_hypersequent(const NodePtr& proof) {
  for (const auto& s : proof->hypersequent.components) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) {
        bool semiprop = f.is_atomic() && f.atom().kind == Atom::Kind::SemiProp;
        if (!semiprop && !(is_rpl(f) && is_prenex(f))) {
          throw TransformError("to_mid_hypersequent: " + to_string(f) + " is neither prenex nor semipropositional");
        }
      }
    }
  }
  std::size_t budget = 100000;
  return mid_rec(proof, budget);
}

}  // namespace hyperluk
