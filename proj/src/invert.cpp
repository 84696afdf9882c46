#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace {

std::vector<NodePtr> aligned(std::vector<NodePtr> proofs, const std::vector<Premise>& prem) {
  for (std::size_t k = 0; k < prem.size(); ++k) proofs[k] = align(proofs[k], prem[k].hypersequent);
  return proofs;
}

// Invertible-rule scheme: the proper symbol of `app` does not occur in `node`.
std::vector<NodePtr> invert_rec(const NodePtr& node, const RuleApplication& app) {
  std::vector<Premise> prem = rule_premises(node->hypersequent, app);
  std::vector<NodePtr> out;
  if (node->is_leaf()) {
    for (auto& p : prem) out.push_back(make_leaf(p.hypersequent));
    return out;
  }
  const RuleApplication& below = *node->application;
  if (below.principal == app.principal) {
    if (below.rule != app.rule) throw std::logic_error("principal rule mismatch");
    for (std::size_t k = 0; k < node->children.size(); ++k) {
      NodePtr child = node->children[k];
      auto s1 = below.proper_symbol();
      auto s = app.proper_symbol();
      if (s1 && *s1 != *s) child = replace_symbol(child, *s1, *s);
      out.push_back(child);
    }
    return aligned(std::move(out), prem);
  }
  // Push the inversion into every child, then reapply the rule below.
  std::vector<std::vector<NodePtr>> per_child;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    RuleApplication up = app;
    up.principal = node->ancestry.at(i).copy_of(app.principal);
    per_child.push_back(invert_rec(node->children[i], up));
  }
  for (std::size_t k = 0; k < prem.size(); ++k) {
    RuleApplication again = below;
    again.principal = prem[k].ancestry.copy_of(below.principal);
    std::vector<NodePtr> kids;
    for (auto& pc : per_child) kids.push_back(pc[k]);
    out.push_back(make_node(prem[k].hypersequent, std::move(again), std::move(kids)));
  }
  return out;
}

// Invertibility of the rules with a proper term via admissible rules.
NodePtr invert_by_structure(const NodePtr& node, const RuleApplication& app, const Premise& prem) {
  const OccurrenceRef& occ = app.principal;
  const Hypersequent& h = node->hypersequent;
  const Formula& f = resolve(h, occ);
  const std::string& s = *app.proper_semiprop;
  Formula instance = substitute(f.body(), f.variable(), *app.proper_term);
  const Sequent& target = h.components[occ.component];
  SplitSpec spec;
  spec.component = occ.component;
  NodePtr d;
  Sequent extra;
  if (app.rule == RuleId::AllLeft) {
    Formula p = Formula::semiprop(s, SemiPropSort::Type1);
    d = add_atom(node, occ.component, p.atom());
    spec.second_antecedent = {occ.member};
    spec.second_succedent = {target.succedent.size()};
    extra = Sequent{{instance}, {p}};
  } else {
    Formula q = Formula::semiprop(s, SemiPropSort::Type0);
    d = add_atom(node, occ.component, q.atom());
    spec.second_antecedent = {target.antecedent.size()};
    spec.second_succedent = {occ.member};
    extra = Sequent{{q}, {instance}};
  }
  d = split(d, spec);
  d = weaken(d, extra);
  return align(d, prem.hypersequent);
}

}  // namespace

namespace detail {

std::vector<NodePtr> invert_with(const NodePtr& proof, const RuleApplication& app) {
  NodePtr d = proof;
  if (auto s = app.proper_symbol()) d = evict_symbol(d, *s);
  if (needs_term(app.rule)) {
    std::vector<Premise> prem = rule_premises(d->hypersequent, app);
    return {invert_by_structure(d, app, prem[0])};
  }
  return invert_rec(d, app);
}

}  // namespace detail

std::vector<NodePtr> invert(const NodePtr& proof, const OccurrenceRef& occ, const InvertOptions& options) {
  const Hypersequent& h = proof->hypersequent;
  const Formula& f = resolve(h, occ);
  if (!is_non_atomic_rpl(f)) throw TransformError("invert: " + to_string(f) + " is not a non-atomic RPL formula");
  RuleId rule = *rule_for(f, occ.side);
  if (needs_term(rule) && !options.term) {
    throw TransformError(std::string("invert: ") + std::string(rule_name(rule)) + " needs a proper term");
  }
  RuleApplication app;
  try {
    app = make_application(h, occ, needs_term(rule) ? options.term : std::nullopt);
    if (options.fresh) app.set_proper_symbol(*options.fresh);
    rule_premises(h, app);
  } catch (const RuleError& e) {
    throw TransformError(std::string("invert: ") + e.what());
  }
  return detail::invert_with(proof, app);
}

}  // namespace hyperluk
