#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperluk/calculus.hpp"
#include "hyperluk/linear.hpp"
#include "hyperluk/parser.hpp"
#include "hyperluk/search.hpp"
#include "hyperluk/semantics.hpp"
#include "hyperluk/syntax.hpp"

namespace hyperluk::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  // Uniform over {k/d : 0 <= k <= d, 1 <= d <= max_den}.
  Rational unit_rational(long max_den = 8) {
    long d = static_cast<long>(between(1, static_cast<std::size_t>(max_den)));
    long k = static_cast<long>(between(0, static_cast<std::size_t>(d)));
    return Rational(k, d);
  }

  Rational signed_rational(long max_den = 8, long max_abs = 3) {
    long d = static_cast<long>(between(1, static_cast<std::size_t>(max_den)));
    long k = static_cast<long>(below(static_cast<std::size_t>(2 * max_abs * d + 1))) - max_abs * d;
    return Rational(k, d);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ------------------------------------------------------------------ atoms

inline Formula random_atom(Gen& g, std::size_t atoms = 4, std::size_t semiprops = 2, long max_den = 8) {
  static const std::vector<std::string> names = {"A", "B", "C", "D"};
  std::size_t kind = g.below(10);
  if (kind < 2) return Formula::constant(g.unit_rational(max_den));
  if (kind < 4 && semiprops > 0) {
    bool type0 = g.coin();
    std::string name = (type0 ? "q" : "p") + std::to_string(g.between(1, semiprops));
    return Formula::semiprop(name, type0 ? SemiPropSort::Type0 : SemiPropSort::Type1);
  }
  return Formula::predicate(names[g.below(std::min(atoms, names.size()))]);
}

// At most 4 components, 4 predicate atoms, 2 semipropositional variables of
// each sort, constants with denominator at most 8.
inline Hypersequent random_atomic_hypersequent(Gen& g) {
  Hypersequent h;
  std::size_t n = g.between(1, 4);
  for (std::size_t c = 0; c < n; ++c) {
    Sequent s;
    std::size_t a = g.between(0, 3), b = g.between(0, 3);
    if (a + b == 0) b = 1;
    for (std::size_t i = 0; i < a; ++i) s.antecedent.push_back(random_atom(g));
    for (std::size_t i = 0; i < b; ++i) s.succedent.push_back(random_atom(g));
    h.components.push_back(std::move(s));
  }
  return h;
}

// Direct arithmetic: value(Delta) - value(Gamma) under an assignment keyed
// by the printed atom.
inline Rational atomic_sequent_value(const Sequent& s, const Assignment& a) {
  auto val = [&](const Formula& f) {
    if (f.atom().kind == Atom::Kind::Constant) return f.atom().value;
    auto it = a.find(to_string(f.atom()));
    return it == a.end() ? Rational(0) : it->second;
  };
  Rational v = 0;
  for (const auto& f : s.succedent) v += val(f) - Rational(1);
  for (const auto& f : s.antecedent) v -= val(f) - Rational(1);
  return v;
}

// ------------------------------------------------------------- systems

inline LinearSystem random_system(Gen& g, std::size_t max_vars = 6, std::size_t max_rows = 8) {
  LinearSystem sys;
  std::size_t n = g.between(1, max_vars);
  for (std::size_t i = 0; i < n; ++i) {
    LinearVariable v{"v" + std::to_string(i), {}, {}};
    switch (g.below(4)) {
      case 0:
        v.lower = Rational(0);
        v.upper = Rational(1);
        break;
      case 1:
        v.upper = Rational(1);
        break;
      case 2:
        v.lower = Rational(0);
        break;
      default:
        break;
    }
    sys.variables.push_back(v);
  }
  std::size_t m = g.between(0, max_rows);
  for (std::size_t r = 0; r < m; ++r) {
    LinearConstraint c;
    for (const auto& v : sys.variables) {
      if (g.coin(0.5)) c.coefficients[v.id] = g.signed_rational(8, 2);
    }
    c.constant = g.signed_rational(8, 2);
    c.relation = g.coin(0.7) ? Relation::Less : Relation::LessEqual;
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

// -------------------------------------------------------- formula texts

inline std::string rational_text(const Rational& r) { return r.to_string(); }

inline std::string random_qf_text(Gen& g, std::size_t depth, const std::vector<std::string>& atoms = {"A", "B", "C"},
                                  double constant_rate = 0.15) {
  if (depth == 0 || g.coin(0.35)) {
    if (g.coin(constant_rate)) return rational_text(g.unit_rational(4));
    return g.pick(atoms);
  }
  return "(" + random_qf_text(g, depth - 1, atoms, constant_rate) + " -> " +
         random_qf_text(g, depth - 1, atoms, constant_rate) + ")";
}

inline Hypersequent random_qf_hypersequent(Gen& g, std::size_t max_components = 3, std::size_t depth = 2) {
  std::string text;
  std::size_t n = g.between(1, max_components);
  for (std::size_t c = 0; c < n; ++c) {
    if (c) text += " | ";
    std::size_t a = g.between(0, 2), b = g.between(0, 2);
    if (a + b == 0) b = 1;
    for (std::size_t i = 0; i < a; ++i) text += (i ? ", " : "") + random_qf_text(g, depth);
    text += " => ";
    for (std::size_t i = 0; i < b; ++i) text += (i ? ", " : "") + random_qf_text(g, depth);
  }
  return parse_hypersequent(text);
}

inline std::string fill(std::string tmpl, const std::vector<std::pair<std::string, std::string>>& subst) {
  for (const auto& [key, value] : subst) {
    std::size_t pos = 0;
    while ((pos = tmpl.find(key, pos)) != std::string::npos) {
      tmpl.replace(pos, key.size(), value);
      pos += value.size();
    }
  }
  return tmpl;
}

// Instances of known theorem schemes; X, Y, Z are replaced by random
// closed subformulas, #P/#Q by predicate names and #c by a constant.
inline std::string random_theorem_text(Gen& g) {
  static const std::vector<std::string> schemes = {
      "X -> X",
      "X -> (Y -> X)",
      "(X -> Y) -> ((Y -> Z) -> (X -> Z))",
      "((X -> Y) -> Y) -> ((Y -> X) -> X)",
      "(X -> (Y -> Z)) -> (Y -> (X -> Z))",
      "#r -> (X -> X)",
      "(forall x. #P(x)) -> #P(#c)",
      "#P(#c) -> exists x. #P(x)",
      "(forall x. #P(x)) -> exists x. #P(x)",
      "(forall x. (#P(x) -> #Q(x))) -> ((forall x. #P(x)) -> forall x. #Q(x))",
      "(forall x. #P(x)) -> (X -> #P(#c))",
      "(exists x. forall y. #R(x, y)) -> forall y. exists x. #R(x, y)",
      "(forall x. forall y. #R(x, y)) -> forall y. forall x. #R(y, x)",
      "(forall x. X) -> X",
      "X -> forall x. X",
  };
  auto sub = [&] {
    if (g.coin(0.2)) return std::string("(forall x. P(x))");
    return random_qf_text(g, 1);
  };
  std::string p = g.coin() ? "P" : "Q";
  std::string q = p == "P" ? "Q" : "P";
  return fill(g.pick(schemes), {{"#P", p},
                                {"#Q", q},
                                {"#R", "R"},
                                {"#c", g.coin() ? "c" : "d"},
                                {"#r", rational_text(g.unit_rational(4))},
                                {"X", sub()},
                                {"Y", sub()},
                                {"Z", sub()}});
}

// Valid hypersequents with prenex members mixing a quantifier core and
// propositional padding on both sides of the same component.
inline std::string random_prenex_text(Gen& g) {
  static const std::vector<std::pair<std::string, std::string>> cores = {
      {"forall x. #P(x)", "#P(#c)"},
      {"#P(#c)", "exists x. #P(x)"},
      {"forall x. #P(x)", "exists x. #P(x)"},
      {"forall x. forall y. R(x, y)", "R(#c, #c)"},
      {"exists x. forall y. R(x, y)", "forall y. exists x. R(x, y)"},
      {"forall x. #P(x)", "forall y. #P(y)"},
  };
  const auto& core = g.pick(cores);
  std::string c = g.coin() ? "c" : "d";
  std::string p = g.coin() ? "P" : "Q";
  std::string pad = "(" + random_qf_text(g, 1) + " -> " + random_qf_text(g, 1) + ")";
  std::string left = fill(core.first, {{"#P", p}, {"#c", c}});
  std::string right = fill(core.second, {{"#P", p}, {"#c", c}});
  std::string text;
  if (g.coin()) {
    text = pad + ", " + left + " => " + right + ", " + pad;
  } else {
    text = left + ", " + pad + " => " + pad + ", " + right;
  }
  if (g.coin(0.3)) text += " | " + random_qf_text(g, 1) + " => " + random_qf_text(g, 1);
  return text;
}

// ---------------------------------------------------------- semantics

inline Countermodel nullary_model(const std::map<std::string, Rational>& preds,
                                  const std::map<std::string, Rational>& semis = {}) {
  Countermodel cm;
  cm.model.domain_size = 1;
  for (const auto& [k, v] : preds) cm.model.predicates[k] = {v};
  cm.model.semiprops = semis;
  return cm;
}

// Exhaustive search over a rational grid for values of nullary predicates
// and semipropositional variables refuting every component.
inline std::optional<Countermodel> grid_refutation(const Hypersequent& h, long steps = 8) {
  Vocabulary voc = vocabulary(h);
  std::vector<std::string> preds, semis;
  for (const auto& [name, arity] : voc.predicates) {
    if (arity != 0) return std::nullopt;
    preds.push_back(name);
  }
  for (const auto& [name, sort] : voc.semiprops) semis.push_back(name);
  std::vector<Rational> unit, type1, type0;
  for (long k = 0; k <= steps; ++k) unit.push_back(Rational(k, steps));
  for (long k = -2 * steps; k <= steps; ++k) type1.push_back(Rational(k, steps));
  for (long k = 0; k <= 3 * steps; ++k) type0.push_back(Rational(k, steps));
  const std::size_t n = preds.size() + semis.size();
  std::vector<std::size_t> idx(n, 0);
  auto range = [&](std::size_t i) -> const std::vector<Rational>& {
    if (i < preds.size()) return unit;
    return voc.semiprops.at(semis[i - preds.size()]) == SemiPropSort::Type0 ? type0 : type1;
  };
  while (true) {
    std::map<std::string, Rational> p, s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < preds.size()) {
        p[preds[i]] = range(i)[idx[i]];
      } else {
        s[semis[i - preds.size()]] = range(i)[idx[i]];
      }
    }
    Countermodel cm = nullary_model(p, s);
    if (!hypersequent_true(h, cm.model, cm.valuation)) return cm;
    std::size_t k = 0;
    while (k < n && ++idx[k] == range(k).size()) idx[k++] = 0;
    if (k == n) return std::nullopt;
  }
}

// ------------------------------------------------------------- proofs

// Decomposes a quantifier-free hypersequent at random compound members;
// null when some leaf is not an axiom.
inline NodePtr random_decomposition(Gen& g, const Hypersequent& h, std::size_t& budget) {
  if (budget == 0) return nullptr;
  --budget;
  if (is_axiom(h).axiom && g.coin(0.7)) return make_leaf(h);
  std::vector<OccurrenceRef> compound;
  for (std::size_t c = 0; c < h.components.size(); ++c) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      const auto& fs = h.components[c].side(side);
      for (std::size_t m = 0; m < fs.size(); ++m) {
        if (is_non_atomic_rpl(fs[m]) && is_quantifier_free(fs[m])) compound.push_back({c, side, m});
      }
    }
  }
  if (compound.empty()) return is_axiom(h).axiom ? make_leaf(h) : nullptr;
  RuleApplication app = make_application(h, g.pick(compound));
  std::vector<NodePtr> children;
  for (auto& p : rule_premises(h, app)) {
    NodePtr c = random_decomposition(g, p.hypersequent, budget);
    if (!c) return nullptr;
    children.push_back(std::move(c));
  }
  return make_node(h, std::move(app), std::move(children));
}

// Checking proofs: random decompositions of quantifier-free hypersequents
// and search proofs of theorem-scheme instances, roughly half each.
inline std::vector<ProofTree> random_checking_proofs(Gen& g, std::size_t n) {
  std::vector<ProofTree> out;
  while (out.size() < n) {
    if (g.coin()) {
      Hypersequent h = random_qf_hypersequent(g, 2, 2);
      std::size_t budget = 200;
      NodePtr p = random_decomposition(g, h, budget);
      if (p && height(p) > 0) out.push_back(certify(p));
    } else {
      Signature sig;
      Hypersequent h = parse_hypersequent("=> " + random_theorem_text(g), sig);
      SearchBudget budget;
      budget.max_backward_applications = 3000;
      SearchOutcome r = prove(h, g.coin() ? round_robin_tactic() : leftmost_aging_tactic(), {}, budget, sig);
      if (r.proof) out.push_back(*r.proof);
    }
  }
  return out;
}

}  // namespace hyperluk::testgen
