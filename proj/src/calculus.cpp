#include "hyperluk/calculus.hpp"

#include <stdexcept>

#include "hyperluk/error.hpp"
#include "hyperluk/linear.hpp"

namespace hyperluk {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::ImpLeft:
      return "ImpLeft";
    case RuleId::ImpRight:
      return "ImpRight";
    case RuleId::AllLeft:
      return "AllLeft";
    case RuleId::AllRight:
      return "AllRight";
    case RuleId::ExLeft:
      return "ExLeft";
    case RuleId::ExRight:
      return "ExRight";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (RuleId r : {RuleId::ImpLeft, RuleId::ImpRight, RuleId::AllLeft, RuleId::AllRight, RuleId::ExLeft,
                   RuleId::ExRight}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

bool is_quantifier_rule(RuleId rule) { return rule != RuleId::ImpLeft && rule != RuleId::ImpRight; }

std::size_t rule_arity(RuleId rule) { return rule == RuleId::ImpRight ? 2 : 1; }

std::optional<RuleId> rule_for(const Formula& f, Side side) {
  bool left = side == Side::Antecedent;
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return std::nullopt;
    case Formula::Kind::Implies:
      return left ? RuleId::ImpLeft : RuleId::ImpRight;
    case Formula::Kind::Forall:
      return left ? RuleId::AllLeft : RuleId::AllRight;
    case Formula::Kind::Exists:
      return left ? RuleId::ExLeft : RuleId::ExRight;
  }
  return std::nullopt;
}

std::optional<FreshKind> proper_kind(RuleId rule) {
  switch (rule) {
    case RuleId::ImpLeft:
    case RuleId::AllLeft:
      return FreshKind::SemiPropType1;
    case RuleId::ExRight:
      return FreshKind::SemiPropType0;
    case RuleId::AllRight:
    case RuleId::ExLeft:
      return FreshKind::Parameter;
    case RuleId::ImpRight:
      return std::nullopt;
  }
  return std::nullopt;
}

bool needs_term(RuleId rule) { return rule == RuleId::AllLeft || rule == RuleId::ExRight; }

std::optional<std::string> RuleApplication::proper_symbol() const {
  if (proper_semiprop) return proper_semiprop;
  return proper_parameter;
}

void RuleApplication::set_proper_symbol(const std::string& name) {
  auto kind = proper_kind(rule);
  if (!kind) throw RuleError(std::string(rule_name(rule)) + " has no proper symbol");
  if (*kind == FreshKind::Parameter) {
    proper_parameter = name;
  } else {
    proper_semiprop = name;
  }
}

// ------------------------------------------------------------------ ancestry

OccurrenceRef PremiseAncestry::copy_of(const OccurrenceRef& occ) const {
  std::optional<OccurrenceRef> found;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.source != occ.component) continue;
    const auto& side = comp.members[occ.side == Side::Antecedent ? 0 : 1];
    for (std::size_t m = 0; m < side.size(); ++m) {
      if (!side[m].from_principal && side[m].source == occ) {
        if (found) throw std::logic_error("occurrence copied twice into a premise");
        found = OccurrenceRef{c, occ.side, m};
      }
    }
  }
  if (!found) throw std::logic_error("occurrence " + to_string(occ) + " has no copy in the premise");
  return *found;
}

std::size_t PremiseAncestry::augmentable_ancestor(std::size_t conclusion_component) const {
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].source == conclusion_component && components[c].augmentable) {
      if (found) throw std::logic_error("component has two augmentable ancestors in a premise");
      found = c;
    }
  }
  if (!found) throw std::logic_error("component has no augmentable ancestor in a premise");
  return *found;
}

std::vector<std::size_t> PremiseAncestry::descendants(std::size_t conclusion_component) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].source == conclusion_component) out.push_back(c);
  }
  return out;
}

// ------------------------------------------------------------------ premises

namespace {

struct PremiseBuilder {
  Hypersequent h;
  PremiseAncestry anc;

  explicit PremiseBuilder(const Hypersequent& conclusion) : h(conclusion) {
    for (std::size_t c = 0; c < conclusion.components.size(); ++c) {
      ComponentOrigin origin;
      origin.source = c;
      for (int s = 0; s < 2; ++s) {
        Side side = s == 0 ? Side::Antecedent : Side::Succedent;
        for (std::size_t m = 0; m < conclusion.components[c].side(side).size(); ++m) {
          origin.members[s].push_back({OccurrenceRef{c, side, m}, false});
        }
      }
      anc.components.push_back(std::move(origin));
    }
  }

  static int idx(Side s) { return s == Side::Antecedent ? 0 : 1; }

  void replace(const OccurrenceRef& occ, Formula f) {
    h.components[occ.component].side(occ.side)[occ.member] = std::move(f);
    anc.components[occ.component].members[idx(occ.side)][occ.member] = {occ, true};
  }

  void erase(const OccurrenceRef& occ) {
    auto& side = h.components[occ.component].side(occ.side);
    side.erase(side.begin() + static_cast<std::ptrdiff_t>(occ.member));
    auto& orig = anc.components[occ.component].members[idx(occ.side)];
    orig.erase(orig.begin() + static_cast<std::ptrdiff_t>(occ.member));
  }

  void push(const OccurrenceRef& principal, std::size_t component, Side side, Formula f) {
    h.components[component].side(side).push_back(std::move(f));
    anc.components[component].members[idx(side)].push_back({principal, true});
  }

  void append(const OccurrenceRef& principal, std::vector<Formula> ante, std::vector<Formula> succ) {
    Sequent s{std::move(ante), std::move(succ)};
    ComponentOrigin origin;
    origin.source = principal.component;
    origin.augmentable = false;
    for (std::size_t m = 0; m < s.antecedent.size(); ++m) origin.members[0].push_back({principal, true});
    for (std::size_t m = 0; m < s.succedent.size(); ++m) origin.members[1].push_back({principal, true});
    h.components.push_back(std::move(s));
    anc.components.push_back(std::move(origin));
  }

  Premise done() { return Premise{std::move(h), std::move(anc)}; }
};

}  // namespace

std::vector<Premise> rule_premises(const Hypersequent& conclusion, const RuleApplication& app) {
  const OccurrenceRef& occ = app.principal;
  const Formula& f = resolve(conclusion, occ);
  const std::string name(rule_name(app.rule));
  if (!is_non_atomic_rpl(f)) {
    throw RuleError(name + ": principal " + to_string(f) + " is not a non-atomic RPL formula");
  }
  if (rule_for(f, occ.side) != app.rule) {
    throw RuleError(name + " does not match principal " + to_string(f) + " in the " + to_string(occ.side));
  }
  auto kind = proper_kind(app.rule);
  std::string proper;
  if (kind) {
    bool semi = *kind != FreshKind::Parameter;
    const auto& field = semi ? app.proper_semiprop : app.proper_parameter;
    const auto& other = semi ? app.proper_parameter : app.proper_semiprop;
    if (!field) throw RuleError(name + " requires a proper " + (semi ? "semipropositional variable" : "parameter"));
    if (other) throw RuleError(name + " carries an extraneous proper symbol");
    if (reserved_kind(*field) != kind) throw RuleError(name + ": proper symbol " + *field + " has the wrong sort");
    if (symbols(conclusion).count(*field)) {
      throw RuleError(name + ": proper symbol " + *field + " occurs in the conclusion");
    }
    proper = *field;
  } else if (app.proper_semiprop || app.proper_parameter) {
    throw RuleError(name + " takes no proper symbol");
  }
  if (needs_term(app.rule)) {
    if (!app.proper_term) throw RuleError(name + " requires a proper term");
    if (!app.proper_term->is_closed()) throw RuleError(name + ": proper term must be closed");
  } else if (app.proper_term) {
    throw RuleError(name + " takes no proper term");
  }

  std::vector<Premise> out;
  switch (app.rule) {
    case RuleId::ImpLeft: {
      PremiseBuilder b(conclusion);
      Formula p = Formula::semiprop(proper, SemiPropSort::Type1);
      b.replace(occ, p);
      b.append(occ, {f.rhs()}, {p, f.lhs()});
      out.push_back(b.done());
      break;
    }
    case RuleId::ImpRight: {
      PremiseBuilder b1(conclusion);
      b1.erase(occ);
      out.push_back(b1.done());
      PremiseBuilder b2(conclusion);
      b2.replace(occ, f.rhs());
      b2.push(occ, occ.component, Side::Antecedent, f.lhs());
      out.push_back(b2.done());
      break;
    }
    case RuleId::AllLeft: {
      PremiseBuilder b(conclusion);
      Formula p = Formula::semiprop(proper, SemiPropSort::Type1);
      b.replace(occ, p);
      b.append(occ, {f}, {p});
      b.append(occ, {substitute(f.body(), f.variable(), *app.proper_term)}, {p});
      out.push_back(b.done());
      break;
    }
    case RuleId::ExRight: {
      PremiseBuilder b(conclusion);
      Formula q = Formula::semiprop(proper, SemiPropSort::Type0);
      b.replace(occ, q);
      b.append(occ, {q}, {f});
      b.append(occ, {q}, {substitute(f.body(), f.variable(), *app.proper_term)});
      out.push_back(b.done());
      break;
    }
    case RuleId::AllRight:
    case RuleId::ExLeft: {
      PremiseBuilder b(conclusion);
      b.replace(occ, substitute(f.body(), f.variable(), Term::apply(proper)));
      out.push_back(b.done());
      break;
    }
  }
  return out;
}

RuleApplication make_application(const Hypersequent& h, const OccurrenceRef& occ, std::optional<Term> term) {
  const Formula& f = resolve(h, occ);
  if (!is_non_atomic_rpl(f)) {
    throw RuleError("no rule applies to " + to_string(f) + ": not a non-atomic RPL formula");
  }
  RuleApplication app;
  app.rule = *rule_for(f, occ.side);
  app.principal = occ;
  if (needs_term(app.rule) && !term) throw RuleError(std::string(rule_name(app.rule)) + " requires a term");
  if (!needs_term(app.rule) && term) throw RuleError(std::string(rule_name(app.rule)) + " takes no term");
  if (term && !term->is_closed()) throw RuleError("proper term must be closed");
  app.proper_term = std::move(term);
  if (auto kind = proper_kind(app.rule)) app.set_proper_symbol(fresh_symbol(*kind, symbols(h)));
  return app;
}

// --------------------------------------------------------------------- nodes

NodePtr make_leaf(Hypersequent h) {
  auto node = std::make_shared<ProofNode>();
  node->hypersequent = std::move(h);
  return node;
}

NodePtr make_node(Hypersequent conclusion, RuleApplication app, std::vector<NodePtr> children) {
  std::vector<Premise> prem = rule_premises(conclusion, app);
  if (children.size() != prem.size()) {
    throw RuleError(std::string(rule_name(app.rule)) + " needs " + std::to_string(prem.size()) + " premises, got " +
                    std::to_string(children.size()));
  }
  auto node = std::make_shared<ProofNode>();
  node->hypersequent = std::move(conclusion);
  node->application = std::move(app);
  for (std::size_t i = 0; i < prem.size(); ++i) {
    node->children.push_back(align(children[i], prem[i].hypersequent));
    node->ancestry.push_back(std::move(prem[i].ancestry));
  }
  return node;
}

NodePtr make_unchecked_node(Hypersequent conclusion, std::optional<RuleApplication> app,
                            std::vector<NodePtr> children) {
  auto node = std::make_shared<ProofNode>();
  node->hypersequent = std::move(conclusion);
  node->application = std::move(app);
  node->children = std::move(children);
  return node;
}

NodePtr align(const NodePtr& node, const Hypersequent& target) {
  const Hypersequent& from = node->hypersequent;
  if (identical(from, target) && (node->is_leaf() || node->ancestry.size() == node->children.size())) return node;
  if (!(from == target)) {
    throw RuleError("premise mismatch: expected " + to_string(target) + ", got " + to_string(from));
  }
  if (node->is_leaf()) return make_leaf(target);

  // Map components and members of `from` onto `target`.
  const std::size_t n = from.components.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> comp_map(n);
  std::vector<std::array<std::vector<std::size_t>, 2>> member_map(n);
  for (std::size_t t = 0; t < n; ++t) {
    bool matched = false;
    for (std::size_t c = 0; c < n && !matched; ++c) {
      if (used[c] || !(from.components[c] == target.components[t])) continue;
      used[c] = true;
      matched = true;
      comp_map[c] = t;
      for (int s = 0; s < 2; ++s) {
        Side side = s == 0 ? Side::Antecedent : Side::Succedent;
        const auto& src = from.components[c].side(side);
        const auto& dst = target.components[t].side(side);
        std::vector<bool> taken(src.size(), false);
        member_map[c][s].assign(src.size(), 0);
        for (std::size_t d = 0; d < dst.size(); ++d) {
          for (std::size_t m = 0; m < src.size(); ++m) {
            if (!taken[m] && src[m] == dst[d]) {
              taken[m] = true;
              member_map[c][s][m] = d;
              break;
            }
          }
        }
      }
    }
    if (!matched) throw std::logic_error("alignment failed");
  }
  RuleApplication app = *node->application;
  const OccurrenceRef old = app.principal;
  app.principal = OccurrenceRef{comp_map[old.component], old.side,
                                member_map[old.component][old.side == Side::Antecedent ? 0 : 1][old.member]};
  return make_node(target, std::move(app), node->children);
}

NodePtr canonicalize(const NodePtr& node) {
  if (node->is_leaf()) {
    if (!node->children.empty()) throw RuleError("leaf with children");
    return make_leaf(node->hypersequent);
  }
  std::vector<NodePtr> children;
  for (const auto& c : node->children) children.push_back(canonicalize(c));
  return make_node(node->hypersequent, *node->application, std::move(children));
}

const ProofNode& node_at(const NodePtr& root, const NodePath& path) {
  const ProofNode* node = root.get();
  for (std::size_t i : path) {
    if (i >= node->children.size()) throw Error("node path out of range");
    node = node->children[i].get();
  }
  return *node;
}

NodePtr replace_at(const NodePtr& root, const NodePath& path, NodePtr replacement) {
  if (path.empty()) return replacement;
  if (path.front() >= root->children.size()) throw Error("node path out of range");
  auto copy = std::make_shared<ProofNode>(*root);
  NodePath rest(path.begin() + 1, path.end());
  copy->children[path.front()] = replace_at(root->children[path.front()], rest, std::move(replacement));
  return copy;
}

namespace {

void collect_leaves(const NodePtr& node, NodePath& path, std::vector<LeafInfo>& out) {
  if (node->is_leaf()) {
    out.push_back({path, node});
    return;
  }
  for (std::size_t i = 0; i < node->children.size(); ++i) {
    path.push_back(i);
    collect_leaves(node->children[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<LeafInfo> leaves(const NodePtr& root) {
  std::vector<LeafInfo> out;
  NodePath path;
  collect_leaves(root, path, out);
  return out;
}

std::size_t height(const NodePtr& root) {
  std::size_t h = 0;
  for (const auto& c : root->children) h = std::max(h, height(c) + 1);
  return h;
}

std::size_t quantifier_count(const NodePtr& root) {
  std::size_t q = root->application && is_quantifier_rule(root->application->rule) ? 1 : 0;
  for (const auto& c : root->children) q += quantifier_count(c);
  return q;
}

std::size_t height(const ProofTree& tree) { return height(tree.root); }
std::size_t quantifier_count(const ProofTree& tree) { return quantifier_count(tree.root); }

std::set<std::string> all_symbols(const NodePtr& root) {
  std::set<std::string> out = symbols(root->hypersequent);
  if (root->application) {
    if (auto s = root->application->proper_symbol()) out.insert(*s);
    if (root->application->proper_term) collect_symbols(*root->application->proper_term, out);
  }
  for (const auto& c : root->children) {
    auto sub = all_symbols(c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

NodePtr replace_symbol(const NodePtr& root, const std::string& from, const std::string& to) {
  auto copy = std::make_shared<ProofNode>(*root);
  copy->hypersequent = rename_symbol(root->hypersequent, from, to);
  if (copy->application) {
    auto& app = *copy->application;
    if (app.proper_semiprop == from) app.proper_semiprop = to;
    if (app.proper_parameter == from) app.proper_parameter = to;
    if (app.proper_term) app.proper_term = rename_symbol(*app.proper_term, from, to);
  }
  for (auto& c : copy->children) c = replace_symbol(c, from, to);
  return copy;
}

NodePtr rename_bound(const NodePtr& root, const std::string& from, const std::string& to) {
  if (root->is_leaf()) return root;
  auto copy = std::make_shared<ProofNode>(*root);
  if (copy->application->proper_symbol() == from) {
    copy->application->set_proper_symbol(to);
    for (auto& c : copy->children) c = replace_symbol(c, from, to);
  } else {
    for (auto& c : copy->children) c = rename_bound(c, from, to);
  }
  return copy;
}

namespace {

NodePtr rename_binders_rec(const NodePtr& node, const std::set<std::string>& names, std::set<std::string>& used) {
  if (node->is_leaf()) return node;
  auto copy = std::make_shared<ProofNode>(*node);
  auto sym = copy->application->proper_symbol();
  if (sym && names.count(*sym)) {
    std::string fresh = fresh_symbol(*proper_kind(copy->application->rule), used);
    used.insert(fresh);
    copy->application->set_proper_symbol(fresh);
    for (auto& c : copy->children) c = replace_symbol(c, *sym, fresh);
  }
  for (auto& c : copy->children) c = rename_binders_rec(c, names, used);
  return copy;
}

}  // namespace

NodePtr rename_binders(const NodePtr& root, const std::set<std::string>& names, std::set<std::string> avoid) {
  std::set<std::string> used = all_symbols(root);
  used.insert(avoid.begin(), avoid.end());
  used.insert(names.begin(), names.end());
  return rename_binders_rec(root, names, used);
}

ProofTree backward_apply(const ProofTree& tree, const NodePath& leaf, const OccurrenceRef& occ,
                         std::optional<Term> term) {
  const ProofNode& node = node_at(tree.root, leaf);
  if (!node.is_leaf()) throw RuleError("backward application needs a leaf");
  RuleApplication app = make_application(node.hypersequent, occ, std::move(term));
  std::vector<NodePtr> children;
  for (auto& p : rule_premises(node.hypersequent, app)) children.push_back(make_leaf(std::move(p.hypersequent)));
  NodePtr expanded = make_node(node.hypersequent, std::move(app), std::move(children));
  return ProofTree{replace_at(tree.root, leaf, std::move(expanded)), TreeStatus::SearchTree};
}

// ------------------------------------------------------------------ checking

namespace {

CheckReport check_rec(const NodePtr& node, NodePath& path) {
  auto fail = [&](std::string message) { return CheckReport{false, std::move(message), path}; };
  if (node->is_leaf()) {
    if (!node->children.empty()) return fail("leaf without a rule has children");
    if (!is_axiom(node->hypersequent).axiom) return fail("leaf is not an axiom: " + to_string(node->hypersequent));
    return {};
  }
  std::vector<Premise> prem;
  try {
    prem = rule_premises(node->hypersequent, *node->application);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (prem.size() != node->children.size()) {
    return fail(std::string(rule_name(node->application->rule)) + " has " + std::to_string(node->children.size()) +
                " children, expected " + std::to_string(prem.size()));
  }
  for (std::size_t i = 0; i < prem.size(); ++i) {
    if (!(node->children[i]->hypersequent == prem[i].hypersequent)) {
      return fail("premise " + std::to_string(i) + " mismatch: expected " + to_string(prem[i].hypersequent) + ", got " +
                  to_string(node->children[i]->hypersequent));
    }
    path.push_back(i);
    CheckReport sub = check_rec(node->children[i], path);
    path.pop_back();
    if (!sub.ok) return sub;
  }
  return {};
}

}  // namespace

CheckReport check_proof(const NodePtr& root) {
  NodePath path;
  return check_rec(root, path);
}

CheckReport check_proof(const ProofTree& tree) { return check_proof(tree.root); }

ProofTree certify(const NodePtr& root) {
  CheckReport r = check_proof(root);
  if (!r.ok) throw RuleError("not a proof: " + r.message);
  return ProofTree{canonicalize(root), TreeStatus::CheckedProof};
}

ProofTree rename_proper_symbols(const ProofTree& tree, const std::map<std::string, std::string>& mapping) {
  std::set<std::string> present = all_symbols(tree.root);
  std::set<std::string> root_symbols = symbols(tree.root->hypersequent);
  std::set<std::string> targets;
  for (const auto& [from, to] : mapping) {
    if (from == to) continue;
    if (reserved_kind(from) != reserved_kind(to) || !reserved_kind(to)) {
      throw RuleError("renaming " + from + " to " + to + " changes sort");
    }
    if (!targets.insert(to).second) throw RuleError("renaming is not injective at " + to);
    if (present.count(to)) throw RuleError("renaming target " + to + " already occurs in the proof");
    if (root_symbols.count(from)) throw RuleError(from + " occurs in the root and is not a proper symbol");
  }
  NodePtr root = tree.root;
  for (const auto& [from, to] : mapping) {
    if (from != to) root = rename_bound(root, from, to);
  }
  return ProofTree{root, tree.status};
}

namespace {

NodePtr adjoin_rec(const NodePtr& node, const Hypersequent& g) {
  Hypersequent h = concat(node->hypersequent, g);
  if (node->is_leaf()) return make_leaf(std::move(h));
  std::vector<NodePtr> children;
  for (const auto& c : node->children) children.push_back(adjoin_rec(c, g));
  return make_node(std::move(h), *node->application, std::move(children));
}

}  // namespace

NodePtr adjoin_context(const NodePtr& root, const Hypersequent& g) {
  if (g.components.empty()) return root;
  std::set<std::string> gs = symbols(g);
  return adjoin_rec(rename_binders(root, gs, gs), g);
}

ProofTree adjoin_context(const ProofTree& tree, const Hypersequent& g) {
  return ProofTree{adjoin_context(tree.root, g), tree.status};
}

}  // namespace hyperluk
