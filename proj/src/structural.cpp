#include <array>

#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace detail {

int side_index(Side s) { return s == Side::Antecedent ? 0 : 1; }

NodePtr evict_symbol(const NodePtr& proof, const std::string& name, const std::set<std::string>& avoid) {
  std::set<std::string> used = all_symbols(proof);
  if (!used.count(name)) return proof;
  if (symbols(proof->hypersequent).count(name)) throw TransformError(name + " occurs in the root");
  used.insert(avoid.begin(), avoid.end());
  return replace_symbol(proof, name, fresh_symbol(*reserved_kind(name), used));
}

Hypersequent remove_component(const Hypersequent& h, std::size_t c) {
  Hypersequent out = h;
  out.components.erase(out.components.begin() + static_cast<std::ptrdiff_t>(c));
  return out;
}

}  // namespace detail

namespace {

using detail::side_index;

// Label 1 stays in place, label 2 goes to the appended component.
using Labels = std::array<std::vector<int>, 2>;

NodePtr split_rec(const NodePtr& node, std::size_t comp, const Labels& labels) {
  const Hypersequent& h = node->hypersequent;
  Hypersequent out = h;
  Sequent first;
  Sequent second;
  for (int k = 0; k < 2; ++k) {
    Side side = k == 0 ? Side::Antecedent : Side::Succedent;
    const auto& fs = h.components[comp].side(side);
    for (std::size_t m = 0; m < fs.size(); ++m) (labels[k][m] == 1 ? first : second).side(side).push_back(fs[m]);
  }
  out.components[comp] = std::move(first);
  out.components.push_back(std::move(second));
  if (node->is_leaf()) return make_leaf(std::move(out));

  RuleApplication app = *node->application;
  const OccurrenceRef p = app.principal;
  int principal_label = p.component == comp ? labels[side_index(p.side)][p.member] : 1;
  std::vector<NodePtr> children;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    const PremiseAncestry& anc = node->ancestry.at(i);
    std::size_t ac = anc.augmentable_ancestor(comp);
    Labels child_labels;
    for (int k = 0; k < 2; ++k) {
      for (const auto& origin : anc.components[ac].members[k]) {
        child_labels[k].push_back(origin.from_principal ? principal_label
                                                        : labels[side_index(origin.source.side)][origin.source.member]);
      }
    }
    children.push_back(split_rec(node->children[i], ac, child_labels));
  }
  if (p.component == comp) {
    std::size_t index = 0;
    for (std::size_t m = 0; m < p.member; ++m) {
      if (labels[side_index(p.side)][m] == principal_label) ++index;
    }
    app.principal = OccurrenceRef{principal_label == 1 ? comp : h.components.size(), p.side, index};
  }
  return make_node(std::move(out), std::move(app), std::move(children));
}

NodePtr add_atom_rec(const NodePtr& node, std::size_t comp, const Formula& atom) {
  Hypersequent out = node->hypersequent;
  out.components[comp].antecedent.push_back(atom);
  out.components[comp].succedent.push_back(atom);
  if (node->is_leaf()) return make_leaf(std::move(out));
  std::vector<NodePtr> children;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    children.push_back(add_atom_rec(node->children[i], node->ancestry.at(i).augmentable_ancestor(comp), atom));
  }
  return make_node(std::move(out), *node->application, std::move(children));
}

}  // namespace

NodePtr weaken(const NodePtr& proof, const Sequent& s) { return adjoin_context(proof, Hypersequent{{s}}); }

NodePtr split(const NodePtr& proof, const SplitSpec& spec) {
  const Hypersequent& h = proof->hypersequent;
  if (spec.component >= h.components.size()) throw TransformError("split: component out of range");
  const Sequent& s = h.components[spec.component];
  Labels labels;
  for (int k = 0; k < 2; ++k) {
    Side side = k == 0 ? Side::Antecedent : Side::Succedent;
    const auto& second = k == 0 ? spec.second_antecedent : spec.second_succedent;
    if (!second.empty() && *second.rbegin() >= s.side(side).size()) throw TransformError("split: member out of range");
    for (std::size_t m = 0; m < s.side(side).size(); ++m) labels[k].push_back(second.count(m) ? 2 : 1);
  }
  return split_rec(proof, spec.component, labels);
}

NodePtr add_atom(const NodePtr& proof, std::size_t component, const Atom& atom) {
  if (component >= proof->hypersequent.components.size()) throw TransformError("add_atom: component out of range");
  Formula f = Formula::atomic(atom);
  NodePtr renamed = rename_binders(proof, symbols(f));
  return add_atom_rec(renamed, component, f);
}

}  // namespace hyperluk
