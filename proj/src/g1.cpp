#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"

namespace hyperluk {

MacroStep macro_step_g1(const Hypersequent& h, const OccurrenceRef& occ, std::optional<Term> term) {
  const Formula& f = resolve(h, occ);
  const std::size_t k = occ.component;
  Hypersequent dup = h;
  dup.components.push_back(h.components[k]);
  const std::size_t n = h.components.size();
  const OccurrenceRef copy{n, occ.side, occ.member};
  RuleApplication app = make_application(dup, copy, term);

  MacroStep step;
  step.rule = app.rule;
  if (!needs_term(app.rule)) {
    for (auto& p : rule_premises(dup, app)) step.premises.push_back(std::move(p.hypersequent));
    step.close = [dup, app, k, n](const std::vector<NodePtr>& proofs) {
      return contract_pair(make_node(dup, app, proofs), k, n);
    };
    return step;
  }

  Formula instance = substitute(f.body(), f.variable(), *app.proper_term);
  Hypersequent premise = h;
  premise.components.push_back(h.components[k]);
  premise.components[n].side(occ.side)[occ.member] = instance;
  step.premises.push_back(premise);
  const Sequent& c = h.components[k];
  step.close = [dup, app, k, n, c, occ, f, premise](const std::vector<NodePtr>& proofs) {
    if (proofs.size() != 1) throw RuleError("G1 quantifier step takes one premise proof");
    NodePtr given = align(proofs[0], premise);
    const std::string& s = *app.proper_semiprop;
    SplitSpec spec;
    spec.component = n;
    NodePtr d;
    Sequent extra;
    if (app.rule == RuleId::AllLeft) {
      Formula p = Formula::semiprop(s, SemiPropSort::Type1);
      d = add_atom(given, n, p.atom());
      spec.second_antecedent = {occ.member};
      spec.second_succedent = {c.succedent.size()};
      extra = Sequent{{f}, {p}};
    } else {
      Formula q = Formula::semiprop(s, SemiPropSort::Type0);
      d = add_atom(given, n, q.atom());
      spec.second_antecedent = {c.antecedent.size()};
      spec.second_succedent = {occ.member};
      extra = Sequent{{q}, {f}};
    }
    d = weaken(split(d, spec), extra);
    return contract_pair(make_node(dup, app, {d}), k, n);
  };
  return step;
}

MacroExpansion macro_backward_g1(const ProofTree& tree, const NodePath& leaf, const OccurrenceRef& occ,
                                 std::optional<Term> term) {
  const ProofNode& node = node_at(tree.root, leaf);
  if (!node.is_leaf()) throw RuleError("G1 step needs a leaf");
  MacroExpansion out;
  out.step = macro_step_g1(node.hypersequent, occ, std::move(term));
  out.leaf = leaf;
  out.open_leaves = out.step.premises;
  NodePtr root = tree.root;
  auto close = out.step.close;
  out.close = [root, leaf, close](const std::vector<NodePtr>& proofs) {
    return ProofTree{replace_at(root, leaf, close(proofs)), TreeStatus::SearchTree};
  };
  return out;
}

}  // namespace hyperluk
