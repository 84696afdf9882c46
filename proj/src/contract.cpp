#include <algorithm>

#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"
#include "transform_internal.hpp"

namespace hyperluk {

namespace {

using detail::remove_component;

std::size_t shift(std::size_t c, std::size_t dropped) { return c > dropped ? c - 1 : c; }

NodePtr contract_many(NodePtr proof, std::vector<std::pair<std::size_t, std::size_t>> pairs);

NodePtr contract_rec(const NodePtr& node, std::size_t keep, std::size_t drop) {
  const Hypersequent& h = node->hypersequent;
  Hypersequent out = remove_component(h, drop);
  if (node->is_leaf()) return make_leaf(std::move(out));
  RuleApplication app = *node->application;
  const OccurrenceRef p = app.principal;

  if (p.component != keep && p.component != drop) {
    std::vector<NodePtr> children;
    for (std::size_t i = 0; i < node->children.size(); ++i) {
      const PremiseAncestry& anc = node->ancestry.at(i);
      children.push_back(contract_rec(node->children[i], anc.augmentable_ancestor(keep), anc.augmentable_ancestor(drop)));
    }
    app.principal.component = shift(p.component, drop);
    return make_node(std::move(out), std::move(app), std::move(children));
  }

  // The principal lies in one of the two copies; invert its twin in the other.
  const std::size_t cp = p.component;
  const std::size_t co = cp == keep ? drop : keep;
  const Formula& f = resolve(h, p);
  const auto& other_side = h.components[co].side(p.side);
  auto it = std::find(other_side.begin(), other_side.end(), f);
  if (it == other_side.end()) throw std::logic_error("contracted components differ");
  const OccurrenceRef twin{co, p.side, static_cast<std::size_t>(it - other_side.begin())};
  const auto s = app.proper_symbol();

  std::vector<NodePtr> children;
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    const NodePtr& child = node->children[i];
    const PremiseAncestry& anc = node->ancestry.at(i);
    const std::size_t before = child->hypersequent.components.size();
    RuleApplication inv = app;
    inv.principal = anc.copy_of(twin);
    if (s) {
      std::set<std::string> used = all_symbols(child);
      used.insert(*s);
      inv.set_proper_symbol(fresh_symbol(*proper_kind(app.rule), used));
    }
    std::vector<NodePtr> outs = detail::invert_with(child, inv);
    NodePtr d = outs[app.rule == RuleId::ImpRight ? i : 0];
    if (s) {
      d = rename_binders(d, {*s});
      d = replace_symbol(d, *inv.proper_symbol(), *s);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.emplace_back(anc.augmentable_ancestor(cp), anc.augmentable_ancestor(co));
    std::size_t appended = before;
    for (std::size_t c : anc.descendants(cp)) {
      if (!anc.components[c].augmentable) pairs.emplace_back(c, appended++);
    }
    children.push_back(contract_many(d, std::move(pairs)));
  }
  OccurrenceRef principal = cp == keep ? p : twin;
  principal.component = shift(principal.component, drop);
  app.principal = principal;
  return make_node(std::move(out), std::move(app), std::move(children));
}

NodePtr contract_many(NodePtr proof, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [keep, drop] = pairs[i];
    proof = contract_rec(proof, keep, drop);
    for (std::size_t j = i + 1; j < pairs.size(); ++j) pairs[j].first = shift(pairs[j].first, drop);
  }
  return proof;
}

}  // namespace

NodePtr contract_pair(const NodePtr& proof, std::size_t keep, std::size_t drop) {
  const Hypersequent& h = proof->hypersequent;
  if (keep >= h.components.size() || drop >= h.components.size() || keep == drop) {
    throw TransformError("contract: component index out of range");
  }
  if (!(h.components[keep] == h.components[drop])) throw TransformError("contract: components are not equal");
  return contract_rec(proof, keep, drop);
}

NodePtr contract(const NodePtr& proof) {
  const auto& cs = proof->hypersequent.components;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i] == cs[j]) return contract_rec(proof, i, j);
    }
  }
  throw TransformError("contract: no duplicate component");
}

}  // namespace hyperluk
