#include "hyperluk/serialize.hpp"

#include <sstream>

#include "hyperluk/error.hpp"
#include "hyperluk/parser.hpp"

namespace hyperluk {

namespace {

Json formulas(const std::vector<Formula>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

void collect_signature(const NodePtr& node, Signature& sig) {
  Vocabulary voc = vocabulary(node->hypersequent);
  for (const auto& [name, arity] : voc.predicates) sig.predicates.emplace(name, arity);
  for (const auto& [name, arity] : voc.functions) {
    if (!is_reserved_name(name)) sig.functions.emplace(name, arity);
  }
  for (const auto& c : node->children) collect_signature(c, sig);
}

Json node_to_json(const NodePtr& node) {
  Json j;
  j["hypersequent"] = to_json(node->hypersequent);
  if (node->application) {
    const RuleApplication& a = *node->application;
    j["rule"] = std::string(rule_name(a.rule));
    j["principal"] = to_json(a.principal);
    if (auto s = a.proper_symbol()) j["properSymbol"] = *s;
    if (a.proper_term) j["properTerm"] = to_string(*a.proper_term);
  }
  j["children"] = Json::array();
  for (const auto& c : node->children) j["children"].push_back(node_to_json(c));
  return j;
}

NodePtr node_from_json(const Json& j, Signature& sig) {
  Hypersequent h = parse_hypersequent(j.at("hypersequent").at("text").get<std::string>(), sig);
  std::optional<RuleApplication> app;
  if (j.contains("rule")) {
    auto rule = rule_from_name(j.at("rule").get<std::string>());
    if (!rule) throw Error("unknown rule " + j.at("rule").get<std::string>());
    RuleApplication a;
    a.rule = *rule;
    a.principal = occurrence_from_json(j.at("principal"));
    if (j.contains("properSymbol")) a.set_proper_symbol(j.at("properSymbol").get<std::string>());
    if (j.contains("properTerm")) a.proper_term = parse_term(j.at("properTerm").get<std::string>(), sig);
    app = std::move(a);
  }
  std::vector<NodePtr> children;
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) children.push_back(node_from_json(c, sig));
  }
  return make_unchecked_node(std::move(h), std::move(app), std::move(children));
}

void text_rec(const NodePtr& node, std::size_t indent, std::ostringstream& out) {
  out << std::string(indent * 2, ' ') << to_string(node->hypersequent);
  if (node->application) {
    const RuleApplication& a = *node->application;
    out << "  [" << rule_name(a.rule) << " at " << to_string(a.principal);
    if (auto s = a.proper_symbol()) out << ", " << *s;
    if (a.proper_term) out << ", t = " << to_string(*a.proper_term);
    out << "]";
  } else {
    out << "  [axiom]";
  }
  out << "\n";
  for (const auto& c : node->children) text_rec(c, indent + 1, out);
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "=>") == 0) {
      out += "\\Rightarrow ";
      ++i;
    } else if (s.compare(i, 2, "->") == 0) {
      out += "\\to ";
      ++i;
    } else if (s.compare(i, 6, "forall") == 0) {
      out += "\\forall ";
      i += 5;
    } else if (s.compare(i, 6, "exists") == 0) {
      out += "\\exists ";
      i += 5;
    } else if (s[i] == '|') {
      out += "\\mid ";
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string latex_rule(RuleId r) {
  switch (r) {
    case RuleId::ImpLeft:
      return "$(\\to\\Rightarrow)^3$";
    case RuleId::ImpRight:
      return "$(\\Rightarrow\\to)^3$";
    case RuleId::AllLeft:
      return "$(\\forall\\Rightarrow)^3$";
    case RuleId::AllRight:
      return "$(\\Rightarrow\\forall)^3$";
    case RuleId::ExLeft:
      return "$(\\exists\\Rightarrow)^3$";
    case RuleId::ExRight:
      return "$(\\Rightarrow\\exists)^3$";
  }
  return "";
}

void latex_rec(const NodePtr& node, std::ostringstream& out) {
  std::string h = "$" + latex_escape(to_string(node->hypersequent)) + "$";
  if (node->is_leaf()) {
    out << "\\AxiomC{" << h << "}\n";
    return;
  }
  for (const auto& c : node->children) latex_rec(c, out);
  out << "\\RightLabel{" << latex_rule(node->application->rule) << "}\n";
  out << (node->children.size() == 1 ? "\\UnaryInfC{" : "\\BinaryInfC{") << h << "}\n";
}

Json rational_table(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json to_json(const Hypersequent& h) {
  Json j;
  j["text"] = to_string(h);
  j["components"] = Json::array();
  for (const auto& s : h.components) {
    j["components"].push_back({{"antecedent", formulas(s.antecedent)}, {"succedent", formulas(s.succedent)}});
  }
  return j;
}

Json to_json(const OccurrenceRef& occ) {
  return {{"component", occ.component},
          {"side", occ.side == Side::Antecedent ? "antecedent" : "succedent"},
          {"member", occ.member}};
}

OccurrenceRef occurrence_from_json(const Json& j) {
  OccurrenceRef occ;
  occ.component = j.at("component").get<std::size_t>();
  std::string side = j.at("side").get<std::string>();
  if (side != "antecedent" && side != "succedent") throw Error("bad side " + side);
  occ.side = side == "antecedent" ? Side::Antecedent : Side::Succedent;
  occ.member = j.at("member").get<std::size_t>();
  return occ;
}

Json proof_to_json(const ProofTree& tree) {
  Signature sig;
  collect_signature(tree.root, sig);
  Json j;
  j["format"] = "hyperluk-proof";
  j["version"] = 1;
  j["signature"] = {{"predicates", sig.predicates}, {"functions", sig.functions}};
  j["status"] = tree.status == TreeStatus::CheckedProof ? "checkedProof" : "searchTree";
  j["root"] = node_to_json(tree.root);
  return j;
}

ProofTree proof_from_json(const Json& j) {
  if (j.value("format", "") != "hyperluk-proof") throw Error("not a proof file");
  Signature sig;
  if (j.contains("signature")) {
    const Json predicates = j["signature"].value("predicates", Json::object());
    const Json functions = j["signature"].value("functions", Json::object());
    for (const auto& [name, arity] : predicates.items()) sig.declare_predicate(name, arity.get<std::size_t>());
    for (const auto& [name, arity] : functions.items()) sig.declare_function(name, arity.get<std::size_t>());
  }
  return ProofTree{node_from_json(j.at("root"), sig), TreeStatus::SearchTree};
}

std::string proof_to_text(const ProofTree& tree) {
  std::ostringstream out;
  text_rec(tree.root, 0, out);
  return out.str();
}

std::string proof_to_latex(const ProofTree& tree) {
  std::ostringstream out;
  out << "\\begin{prooftree}\n";
  latex_rec(tree.root, out);
  out << "\\end{prooftree}\n";
  return out.str();
}

Json model_to_json(const Countermodel& cm) {
  Json j;
  j["domainSize"] = cm.model.domain_size;
  j["functions"] = cm.model.functions;
  Json preds = Json::object();
  for (const auto& [name, table] : cm.model.predicates) preds[name] = rational_table(table);
  j["predicates"] = preds;
  Json semi = Json::object();
  for (const auto& [name, value] : cm.model.semiprops) semi[name] = value.to_string();
  j["semiprops"] = semi;
  j["valuation"] = cm.valuation;
  return j;
}

Countermodel model_from_json(const Json& j) {
  Countermodel cm;
  cm.model.domain_size = j.at("domainSize").get<std::size_t>();
  if (j.contains("functions")) {
    for (const auto& [name, table] : j["functions"].items()) {
      cm.model.functions[name] = table.get<std::vector<std::size_t>>();
    }
  }
  if (j.contains("predicates")) {
    for (const auto& [name, table] : j["predicates"].items()) {
      std::vector<Rational> values;
      for (const auto& v : table) values.push_back(rational_from(v));
      cm.model.predicates[name] = std::move(values);
    }
  }
  if (j.contains("semiprops")) {
    for (const auto& [name, v] : j["semiprops"].items()) cm.model.semiprops[name] = rational_from(v);
  }
  if (j.contains("valuation")) {
    for (const auto& [name, v] : j["valuation"].items()) cm.valuation[name] = v.get<std::size_t>();
  }
  validate(cm.model);
  return cm;
}

Json stats_to_json(const SearchStats& s) {
  return {{"applications", s.applications}, {"leaves", s.leaves}, {"lpCalls", s.lp_calls},
          {"maxDepth", s.max_depth},       {"levels", s.levels}, {"seconds", s.seconds}};
}

OccurrenceRef parse_occurrence(const std::string& text) {
  std::istringstream in(text);
  std::string c, s, m;
  if (!std::getline(in, c, ':') || !std::getline(in, s, ':') || !std::getline(in, m)) {
    throw Error("occurrence must look like C:a:M or C:s:M, got " + text);
  }
  if (s != "a" && s != "s") throw Error("occurrence side must be a or s, got " + s);
  try {
    return OccurrenceRef{std::stoul(c), s == "a" ? Side::Antecedent : Side::Succedent, std::stoul(m)};
  } catch (const std::exception&) {
    throw Error("bad occurrence " + text);
  }
}

}  // namespace hyperluk
