#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace {

bool excluded_pair(RuleId lower, RuleId upper) {
  bool lower_eigen = lower == RuleId::AllRight || lower == RuleId::ExLeft;
  bool upper_term = upper == RuleId::ExRight || upper == RuleId::AllLeft;
  return lower_eigen && upper_term;
}

// Source in the conclusion of the principal of the application at `child`.
std::optional<OccurrenceRef> copied_principal(const ProofNode& node, std::size_t i) {
  const ProofNode& child = *node.children[i];
  if (child.is_leaf()) return std::nullopt;
  const OccurrenceRef& q = child.application->principal;
  const MemberOrigin& origin =
      node.ancestry.at(i).components[q.component].members[detail::side_index(q.side)][q.member];
  if (origin.from_principal) return std::nullopt;
  return origin.source;
}

std::optional<PermutationCase> classify(const ProofNode& node) {
  if (node.is_leaf() || node.ancestry.size() != node.children.size()) return std::nullopt;
  const RuleApplication& lower = *node.application;
  if (lower.rule != RuleId::ImpRight) {
    auto src = copied_principal(node, 0);
    if (!src) return std::nullopt;
    RuleId upper = node.children[0]->application->rule;
    if (upper == RuleId::ImpRight || excluded_pair(lower.rule, upper)) return std::nullopt;
    return src->component == lower.principal.component ? PermutationCase::P1 : PermutationCase::P2;
  }
  auto s1 = copied_principal(node, 0);
  auto s2 = copied_principal(node, 1);
  if (!s1 || !s2 || !(*s1 == *s2)) return std::nullopt;
  const RuleApplication& a1 = *node.children[0]->application;
  const RuleApplication& a2 = *node.children[1]->application;
  if (a1.rule != a2.rule || a1.rule == RuleId::ImpRight) return std::nullopt;
  if (needs_term(a1.rule) && !(*a1.proper_term == *a2.proper_term)) return std::nullopt;
  return s1->component == lower.principal.component ? PermutationCase::P3 : PermutationCase::P4;
}

NodePtr permute_one_premise(const ProofNode& node) {
  const RuleApplication& lower = *node.application;
  const ProofNode& child = *node.children[0];
  RuleApplication upper = *child.application;
  upper.principal = *copied_principal(node, 0);
  std::vector<Premise> mid = rule_premises(node.hypersequent, upper);
  RuleApplication second = lower;
  second.principal = mid[0].ancestry.copy_of(lower.principal);
  NodePtr above = make_node(mid[0].hypersequent, std::move(second), child.children);
  return make_node(node.hypersequent, std::move(upper), {above});
}

NodePtr permute_two_premise(const ProofNode& node) {
  const ProofNode& left = *node.children[0];
  const ProofNode& right = *node.children[1];
  RuleApplication rule = *right.application;
  rule.principal = *copied_principal(node, 0);
  NodePtr d1 = left.children[0];
  NodePtr d2 = right.children[0];
  auto sym1 = left.application->proper_symbol();
  auto sym2 = right.application->proper_symbol();
  if (sym1 && sym2 && *sym1 != *sym2) {
    d1 = detail::evict_symbol(d1, *sym2, all_symbols(d2));
    d1 = replace_symbol(d1, *sym1, *sym2);
  }
  std::vector<Premise> mid = rule_premises(node.hypersequent, rule);
  RuleApplication imp = *node.application;
  imp.principal = mid[0].ancestry.copy_of(node.application->principal);
  NodePtr above = make_node(mid[0].hypersequent, std::move(imp), {d1, d2});
  return make_node(node.hypersequent, std::move(rule), {above});
}

}  // namespace

std::string_view permutation_name(PermutationCase c) {
  switch (c) {
    case PermutationCase::P1:
      return "P1";
    case PermutationCase::P2:
      return "P2";
    case PermutationCase::P3:
      return "P3";
    case PermutationCase::P4:
      return "P4";
  }
  return "?";
}

std::optional<PermutationCase> permutation_from_name(std::string_view name) {
  for (auto c : {PermutationCase::P1, PermutationCase::P2, PermutationCase::P3, PermutationCase::P4}) {
    if (permutation_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<PermutationCase> classify_permutation(const NodePtr& proof, const NodePath& at) {
  return classify(node_at(proof, at));
}

NodePtr permute(const NodePtr& proof, const NodePath& at, PermutationCase c) {
  const ProofNode& node = node_at(proof, at);
  if (node.is_leaf()) throw TransformError("permute: node is a leaf");
  if (node.ancestry.size() != node.children.size()) throw TransformError("permute: node lacks ancestry");
  const RuleApplication& lower = *node.application;
  bool two = c == PermutationCase::P3 || c == PermutationCase::P4;
  if (two != (lower.rule == RuleId::ImpRight)) {
    throw TransformError(std::string("permute: ") + std::string(permutation_name(c)) + " does not apply below " +
                         std::string(rule_name(lower.rule)));
  }
  for (const auto& ch : node.children) {
    if (ch->is_leaf()) throw TransformError("permute: no application above the node");
  }
  if (!two) {
    RuleId upper = node.children[0]->application->rule;
    if (upper == RuleId::ImpRight) throw TransformError("permute: upper rule has two premises");
    if (excluded_pair(lower.rule, upper)) {
      throw TransformError("permute: " + std::string(rule_name(upper)) + " above " + std::string(rule_name(lower.rule)) +
                           " is the excluded case");
    }
    if (!copied_principal(node, 0)) throw TransformError("permute: upper principal comes from the lower rule");
  } else {
    auto s1 = copied_principal(node, 0);
    auto s2 = copied_principal(node, 1);
    if (!s1 || !s2) throw TransformError("permute: upper principal comes from the lower rule");
    if (!(*s1 == *s2)) throw TransformError("permute: upper applications act on different occurrences");
    const RuleApplication& a1 = *node.children[0]->application;
    const RuleApplication& a2 = *node.children[1]->application;
    if (a1.rule != a2.rule || a1.rule == RuleId::ImpRight) throw TransformError("permute: upper rules differ");
    if (needs_term(a1.rule) && !(*a1.proper_term == *a2.proper_term)) {
      throw TransformError("permute: proper terms of the upper applications differ");
    }
  }
  auto actual = classify(node);
  if (actual != c) {
    throw TransformError("permute: node matches " + std::string(actual ? permutation_name(*actual) : "no case") +
                         ", not " + std::string(permutation_name(c)));
  }
  NodePtr replaced;
  try {
    replaced = two ? permute_two_premise(node) : permute_one_premise(node);
  } catch (const RuleError& e) {
    throw TransformError(std::string("permute: side condition fails: ") + e.what());
  }
  return replace_at(proof, at, replaced);
}

}  // namespace hyperluk
