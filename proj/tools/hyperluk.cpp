#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperluk/corpus.hpp"
#include "hyperluk/error.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/serialize.hpp"
#include "hyperluk/transform.hpp"

using namespace hyperluk;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kExhausted = 2;
constexpr int kRefuted = 3;

struct InputOptions {
  std::string formula;
  std::string hypersequent;
};

struct ProveOptions {
  InputOptions input;
  std::string tactic = "round-robin";
  std::size_t term_depth = 2;
  std::size_t max_applications = 200000;
  std::string format = "text";
  std::string output;
  bool stats = false;
};

struct TransformOptions {
  std::string input;
  bool mid = false;
  std::string invert;
  std::string term;
  bool contract = false;
  std::string permute;
  std::string reorder;
  std::string format = "json";
  std::string output;
};

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw Error(std::string("environment variable ") + name + " is not a natural number");
  }
}

Hypersequent read_input(const InputOptions& in, Signature& sig) {
  if (!in.formula.empty() && !in.hypersequent.empty()) throw Error("give either --formula or --hypersequent");
  if (!in.formula.empty()) {
    Hypersequent h;
    h.components.push_back(Sequent{{}, {parse_formula(in.formula, sig)}});
    return h;
  }
  if (!in.hypersequent.empty()) return parse_hypersequent(in.hypersequent, sig);
  throw Error("no input: give --formula or --hypersequent");
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::string render(const ProofTree& tree, const std::string& format) {
  if (format == "json") return proof_to_json(tree).dump(2) + "\n";
  if (format == "latex") return proof_to_latex(tree);
  return proof_to_text(tree);
}

bool quantifier_free_input(const Hypersequent& h) {
  for (const auto& s : h.components) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) {
        if (!is_quantifier_free(f) || (!f.is_atomic() && !is_rpl(f))) return false;
      }
    }
  }
  return true;
}

Tactic tactic_named(const std::string& name) {
  auto t = find_tactic(name);
  if (!t) {
    std::string known;
    for (const auto& r : all_fair_tactics()) known += " " + r.name;
    throw Error("unknown tactic " + name + "; known:" + known);
  }
  return *t;
}

int cmd_prove(const ProveOptions& o) {
  Signature sig;
  Hypersequent h = read_input(o.input, sig);
  Json report;
  report["input"] = to_string(h);
  std::optional<ProofTree> proof;
  std::optional<Countermodel> witness;
  SearchStatus status;
  if (quantifier_free_input(h)) {
    Decision d = decide_quantifier_free(h);
    status = d.valid ? SearchStatus::Proved : SearchStatus::NotValid;
    proof = d.proof;
    witness = d.witness;
    report["method"] = "decide";
    report["stats"] = {{"applications", d.applications}};
  } else {
    SearchBudget budget;
    budget.max_backward_applications = o.max_applications;
    budget.max_term_depth = o.term_depth;
    SearchOutcome out = prove(h, tactic_named(o.tactic), TermPolicy{o.term_depth}, budget, sig);
    status = out.status;
    proof = out.proof;
    report["method"] = "search";
    report["tactic"] = o.tactic;
    report["stats"] = stats_to_json(out.stats);
  }
  report["status"] = std::string(status_name(status));
  if (proof) {
    report["height"] = height(*proof);
    report["quantifierCount"] = quantifier_count(*proof);
  }
  if (witness) report["witness"] = model_to_json(*witness);
  if (proof && !o.output.empty()) write_file(o.output, render(*proof, o.format));

  if (o.format == "json") {
    if (proof && o.output.empty()) report["proof"] = proof_to_json(*proof);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << status_name(status) << "\n";
    if (proof && o.output.empty()) std::cout << render(*proof, o.format);
    if (witness) std::cout << "witness: " << model_to_json(*witness).dump() << "\n";
    if (o.stats) std::cout << "stats: " << report["stats"].dump() << "\n";
  }
  switch (status) {
    case SearchStatus::Proved:
      return kOk;
    case SearchStatus::Exhausted:
      return kExhausted;
    case SearchStatus::NotValid:
      return kRefuted;
  }
  return kError;
}

int cmd_check_axiom(const std::string& text, const std::string& format) {
  Signature sig;
  Hypersequent h = parse_hypersequent(text, sig);
  AxiomCheck check = is_axiom(h);
  if (format == "json") {
    Json j = {{"axiom", check.axiom}};
    if (check.witness) {
      Json w = Json::object();
      for (const auto& [k, v] : *check.witness) w[k] = v.to_string();
      j["witness"] = w;
    }
    std::cout << j.dump(2) << "\n";
  } else if (check.axiom) {
    std::cout << "axiom\n";
  } else {
    std::cout << "not an axiom\n";
    for (const auto& [k, v] : *check.witness) std::cout << "  " << k << " = " << v.to_string() << "\n";
  }
  return check.axiom ? kOk : kRefuted;
}

int cmd_check_proof(const std::string& path) {
  ProofTree tree = proof_from_json(read_json(path));
  CheckReport r = check_proof(tree);
  if (r.ok) {
    std::cout << "valid proof of " << to_string(tree.root->hypersequent) << "\n"
              << "height " << height(tree) << ", quantifier applications " << quantifier_count(tree) << "\n";
    return kOk;
  }
  std::string where;
  for (std::size_t i : r.where) where += (where.empty() ? "" : ".") + std::to_string(i);
  std::cout << "invalid proof at node " << (where.empty() ? "root" : where) << ": " << r.message << "\n";
  return kRefuted;
}

NodePath parse_path(const std::string& text) {
  NodePath path;
  if (text.empty() || text == "root") return path;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    try {
      path.push_back(std::stoul(part));
    } catch (const std::exception&) {
      throw Error("bad node path " + text);
    }
  }
  return path;
}

std::string indexed_path(const std::string& path, std::size_t i) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos) return path + "." + std::to_string(i);
  return path.substr(0, dot) + "." + std::to_string(i) + path.substr(dot);
}

void describe(const std::string& label, const ProofTree& in, const ProofTree& out) {
  std::cout << label << ": height " << height(in) << " -> " << height(out) << ", quantifier applications "
            << quantifier_count(in) << " -> " << quantifier_count(out) << ", recheck "
            << (check_proof(out).ok ? "ok" : "FAILED") << "\n";
}

int cmd_transform(const TransformOptions& o) {
  int chosen = o.mid + !o.invert.empty() + o.contract + !o.permute.empty() + !o.reorder.empty();
  if (chosen != 1) throw Error("choose exactly one of --mid-hypersequent, --invert, --contract, --permute, --reorder");
  ProofTree in = proof_from_json(read_json(o.input));
  CheckReport r = check_proof(in);
  if (!r.ok) throw Error("input is not a valid proof: " + r.message);

  std::vector<ProofTree> outputs;
  if (o.mid) {
    ProofTree out = to_mid_hypersequent(in);
    describe("mid-hypersequent", in, out);
    std::cout << "ordering property " << (is_mid_hypersequent(out.root) ? "holds" : "FAILS") << "\n";
    outputs.push_back(out);
  } else if (!o.invert.empty()) {
    OccurrenceRef occ = parse_occurrence(o.invert);
    const Formula& f = resolve(in.root->hypersequent, occ);
    auto rule = rule_for(f, occ.side);
    if (!rule) throw Error(to_string(f) + " is atomic");
    InvertOptions opts;
    if (!o.term.empty()) {
      Signature sig;
      opts.term = parse_term(o.term, sig);
    }
    outputs = invert(in, *rule, occ, opts);
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      describe("invert " + std::string(rule_name(*rule)) + " premise " + std::to_string(i), in, outputs[i]);
    }
  } else if (o.contract) {
    ProofTree out = contract(in);
    describe("contract", in, out);
    outputs.push_back(out);
  } else if (!o.permute.empty()) {
    auto colon = o.permute.rfind(':');
    if (colon == std::string::npos) throw Error("--permute expects PATH:CASE");
    auto c = permutation_from_name(o.permute.substr(colon + 1));
    if (!c) throw Error("unknown permutation case " + o.permute.substr(colon + 1));
    ProofTree out = permute(in, parse_path(o.permute.substr(0, colon)), *c);
    describe("permute " + std::string(permutation_name(*c)), in, out);
    outputs.push_back(out);
  } else {
    ReorderResult res = reorder_by_tactic(in, tactic_named(o.reorder));
    ProofTree out{res.proof, TreeStatus::CheckedProof};
    describe("reorder " + o.reorder, in, out);
    std::cout << "stages " << res.stages << ", steps " << res.trace.size() << "\n";
    outputs.push_back(out);
  }
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    std::string text = render(outputs[i], o.format);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      write_file(outputs.size() == 1 ? o.output : indexed_path(o.output, i), text);
    }
  }
  return kOk;
}

int cmd_eval(const std::string& model_path, const InputOptions& input) {
  Countermodel cm = model_from_json(read_json(model_path));
  Signature sig;
  if (!input.formula.empty() && input.hypersequent.empty()) {
    Formula f = parse_formula(input.formula, sig);
    std::cout << eval_formula(f, cm.model, cm.valuation).to_string() << "\n";
    return kOk;
  }
  Hypersequent h = read_input(input, sig);
  for (std::size_t c = 0; c < h.components.size(); ++c) {
    const Sequent& s = h.components[c];
    std::cout << "component " << c << ": " << to_string(s) << "  value " << sequent_value(s, cm.model, cm.valuation).to_string()
              << (sequent_true(s, cm.model, cm.valuation) ? "  true" : "  false") << "\n";
  }
  bool t = hypersequent_true(h, cm.model, cm.valuation);
  std::cout << (t ? "true" : "false") << "\n";
  return kOk;
}

int cmd_bench(const std::string& csv, const std::string& tactic_name, std::size_t term_depth,
              std::size_t max_applications) {
  std::ostringstream out;
  out << "name,hypersequent,expected,status,height,quantifiers,applications,lp_calls,seconds\n";
  bool as_expected = true;
  Tactic tactic = tactic_named(tactic_name);
  for (const auto& e : standard_corpus()) {
    Signature sig;
    Hypersequent h = parse_hypersequent(e.hypersequent, sig);
    SearchBudget budget;
    budget.max_backward_applications = max_applications;
    budget.max_term_depth = term_depth;
    SearchOutcome r = prove(h, tactic, TermPolicy{term_depth}, budget, sig);
    if (r.status != SearchStatus::Proved && quantifier_free_input(h) && !decide_quantifier_free(h).valid) {
      r.status = SearchStatus::NotValid;
    }
    bool proved = r.status == SearchStatus::Proved;
    as_expected = as_expected && proved == e.theorem;
    out << e.name << ",\"" << e.hypersequent << "\"," << (e.theorem ? "theorem" : "non-theorem") << ","
        << status_name(r.status) << "," << (r.proof ? std::to_string(height(*r.proof)) : "") << ","
        << (r.proof ? std::to_string(quantifier_count(*r.proof)) : "") << "," << r.stats.applications << ","
        << r.stats.lp_calls << "," << r.stats.seconds << "\n";
  }
  if (csv.empty() || csv == "-") {
    std::cout << out.str();
  } else {
    write_file(csv, out.str());
  }
  return as_expected ? kOk : kRefuted;
}

int cmd_dag(const std::string& text) {
  Signature sig;
  Hypersequent h = parse_hypersequent(text, sig);
  QuantifierDag dag = build_quantifier_dag(h);
  std::cout << "vertices\n";
  for (std::size_t i = 0; i < dag.vertices.size(); ++i) std::cout << "  " << i << ": " << to_string(dag.vertices[i]) << "\n";
  std::cout << "edges\n";
  for (auto [a, b] : dag.edges) std::cout << "  " << a << " -> " << b << "\n";
  std::cout << "source " << dag.source << "\n";
  bool feasible = dag_chain_feasible(dag);
  std::cout << "strict chain " << (feasible ? "feasible" : "infeasible") << "\n";
  return kOk;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-f,--formula", in.formula, "Formula F, read as the hypersequent => F");
  cmd->add_option("-H,--hypersequent", in.hypersequent, "Hypersequent text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof search and proof transformation for Lukasiewicz hypersequents with rational truth constants"};
  app.require_subcommand(1);

  ProveOptions prove_opts;
  TransformOptions transform_opts;
  InputOptions eval_input;
  std::string axiom_text, axiom_format = "text", proof_path, model_path, csv, dag_text;
  std::string bench_tactic = "round-robin";
  std::size_t bench_depth = 2, bench_max = 200000;

  try {
    prove_opts.max_applications = env_or("HYPERLUK_MAX_APPLICATIONS", prove_opts.max_applications);
    prove_opts.term_depth = env_or("HYPERLUK_TERM_DEPTH", prove_opts.term_depth);
    bench_max = prove_opts.max_applications;
    bench_depth = prove_opts.term_depth;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  auto* p = app.add_subcommand("prove", "Search for a proof, or decide a quantifier-free input");
  add_input(p, prove_opts.input);
  p->add_option("-t,--tactic", prove_opts.tactic, "Tactic name")->capture_default_str();
  p->add_option("--term-depth", prove_opts.term_depth, "Maximum depth of instantiating terms")->capture_default_str();
  p->add_option("--max-applications", prove_opts.max_applications, "Budget of backward applications")
      ->capture_default_str();
  p->add_option("--format", prove_opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  p->add_option("-o,--output", prove_opts.output, "Write the proof to this file");
  p->add_flag("--stats", prove_opts.stats, "Print search statistics");

  auto* ca = app.add_subcommand("check-axiom", "Decide whether a hypersequent is an axiom");
  ca->add_option("hypersequent", axiom_text, "Hypersequent text")->required();
  ca->add_option("--format", axiom_format)->check(CLI::IsMember({"text", "json"}));

  auto* cp = app.add_subcommand("check-proof", "Check a proof file");
  cp->add_option("file", proof_path, "Proof JSON file")->required()->check(CLI::ExistingFile);

  auto* tr = app.add_subcommand("transform", "Apply a proof transformation");
  tr->add_option("file", transform_opts.input, "Proof JSON file")->required()->check(CLI::ExistingFile);
  tr->add_flag("--mid-hypersequent", transform_opts.mid, "Move propositional rules above quantifier rules");
  tr->add_option("--invert", transform_opts.invert, "Invert the rule at occurrence C:a:M or C:s:M of the root");
  tr->add_option("--term", transform_opts.term, "Term for inverting a universal or existential instance rule");
  tr->add_flag("--contract", transform_opts.contract, "Contract two equal components");
  tr->add_option("--permute", transform_opts.permute, "Permute at node PATH (dot separated, or root) with case P1..P4");
  tr->add_option("--reorder", transform_opts.reorder, "Rebuild the proof according to a tactic");
  tr->add_option("--format", transform_opts.format)->check(CLI::IsMember({"text", "json", "latex"}))->capture_default_str();
  tr->add_option("-o,--output", transform_opts.output, "Output file");

  auto* ev = app.add_subcommand("eval", "Evaluate against a model file");
  ev->add_option("-m,--model", model_path, "Model JSON file")->required()->check(CLI::ExistingFile);
  add_input(ev, eval_input);

  auto* be = app.add_subcommand("bench", "Run the standard corpus");
  be->add_option("--csv", csv, "CSV output file, - for stdout");
  be->add_option("-t,--tactic", bench_tactic)->capture_default_str();
  be->add_option("--term-depth", bench_depth)->capture_default_str();
  be->add_option("--max-applications", bench_max)->capture_default_str();

  auto* dg = app.add_subcommand("dag", "Quantifier DAG of a chain hypersequent");
  dg->add_option("hypersequent", dag_text, "Hypersequent text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*p) return cmd_prove(prove_opts);
    if (*ca) return cmd_check_axiom(axiom_text, axiom_format);
    if (*cp) return cmd_check_proof(proof_path);
    if (*tr) return cmd_transform(transform_opts);
    if (*ev) return cmd_eval(model_path, eval_input);
    if (*be) return cmd_bench(csv, bench_tactic, bench_depth, bench_max);
    if (*dg) return cmd_dag(dag_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
