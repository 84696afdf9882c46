#include "hyperluk/semantics.hpp"

#include "hyperluk/error.hpp"

namespace hyperluk {

namespace {

std::size_t table_index(const std::vector<std::size_t>& args, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * n + a;
  return idx;
}

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n;
  return r;
}

}  // namespace

std::size_t eval_term(const Term& t, const HsInterpretation& m, const Valuation& v) {
  if (t.is_variable()) {
    auto it = v.find(t.name);
    if (it == v.end()) throw ModelError("no value for variable " + t.name);
    return it->second;
  }
  auto it = m.functions.find(t.name);
  if (it == m.functions.end()) throw ModelError("no table for function " + t.name);
  std::vector<std::size_t> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term(a, m, v));
  if (it->second.size() != power(m.domain_size, args.size())) {
    throw ModelError("table for " + t.name + " does not match arity " + std::to_string(args.size()));
  }
  return it->second[table_index(args, m.domain_size)];
}

Rational eval_formula(const Formula& f, const HsInterpretation& m, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind == Atom::Kind::Constant) return a.value;
      if (a.kind == Atom::Kind::SemiProp) {
        auto it = m.semiprops.find(a.name);
        if (it == m.semiprops.end()) throw ModelError("no value for " + a.name);
        return it->second;
      }
      auto it = m.predicates.find(a.name);
      if (it == m.predicates.end()) throw ModelError("no table for predicate " + a.name);
      std::vector<std::size_t> args;
      for (const auto& t : a.args) args.push_back(eval_term(t, m, v));
      if (it->second.size() != power(m.domain_size, args.size())) {
        throw ModelError("table for " + a.name + " does not match arity " + std::to_string(args.size()));
      }
      return it->second[table_index(args, m.domain_size)];
    }
    case Formula::Kind::Implies: {
      Rational x = eval_formula(f.lhs(), m, v);
      Rational y = eval_formula(f.rhs(), m, v);
      return min(Rational(1) - x + y, Rational(1));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (m.domain_size == 0) throw ModelError("empty domain");
      Valuation w = v;
      std::optional<Rational> best;
      for (std::size_t d = 0; d < m.domain_size; ++d) {
        w[f.variable()] = d;
        Rational val = eval_formula(f.body(), m, w);
        if (!best) {
          best = val;
        } else if (f.kind() == Formula::Kind::Forall) {
          best = min(*best, val);
        } else {
          best = max(*best, val);
        }
      }
      return *best;
    }
  }
  return Rational(0);
}

Rational sequent_value(const Sequent& s, const HsInterpretation& m, const Valuation& v) {
  Rational delta, gamma;
  for (const auto& f : s.succedent) delta += eval_formula(f, m, v) - Rational(1);
  for (const auto& f : s.antecedent) gamma += eval_formula(f, m, v) - Rational(1);
  return delta - gamma;
}

bool sequent_true(const Sequent& s, const HsInterpretation& m, const Valuation& v) {
  return sequent_value(s, m, v) >= Rational(0);
}

bool hypersequent_true(const Hypersequent& h, const HsInterpretation& m, const Valuation& v) {
  for (const auto& s : h.components) {
    if (sequent_true(s, m, v)) return true;
  }
  return false;
}

void validate(const HsInterpretation& m) {
  if (m.domain_size == 0) throw ModelError("domain must be nonempty");
  for (const auto& [name, table] : m.functions) {
    for (std::size_t e : table) {
      if (e >= m.domain_size) throw ModelError("function " + name + " maps outside the domain");
    }
  }
  for (const auto& [name, table] : m.predicates) {
    for (const auto& r : table) {
      if (r < Rational(0) || r > Rational(1)) throw ModelError("predicate " + name + " has a value outside [0,1]");
    }
  }
  for (const auto& [name, r] : m.semiprops) {
    auto kind = reserved_kind(name);
    if (kind == FreshKind::SemiPropType1 && r > Rational(1)) throw ModelError(name + " must be <= 1");
    if (kind == FreshKind::SemiPropType0 && r < Rational(0)) throw ModelError(name + " must be >= 0");
  }
}

namespace {

void vocab_term(const Term& t, Vocabulary& voc) {
  if (t.is_variable()) return;
  voc.functions[t.name] = t.args.size();
  for (const auto& a : t.args) vocab_term(a, voc);
}

void vocab_formula(const Formula& f, Vocabulary& voc) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind == Atom::Kind::SemiProp) voc.semiprops[a.name] = a.sort;
      if (a.kind == Atom::Kind::Predicate) {
        voc.predicates[a.name] = a.args.size();
        for (const auto& t : a.args) vocab_term(t, voc);
      }
      return;
    }
    case Formula::Kind::Implies:
      vocab_formula(f.lhs(), voc);
      vocab_formula(f.rhs(), voc);
      return;
    default:
      vocab_formula(f.body(), voc);
      return;
  }
}

}  // namespace

Vocabulary vocabulary(const Hypersequent& h) {
  Vocabulary voc;
  for (const auto& s : h.components) {
    for (const auto& f : s.antecedent) vocab_formula(f, voc);
    for (const auto& f : s.succedent) vocab_formula(f, voc);
  }
  voc.free_variables = free_variables(h);
  return voc;
}

Countermodel random_interpretation(const Vocabulary& voc, std::size_t domain_size, long grid, std::mt19937_64& rng) {
  Countermodel cm;
  cm.model.domain_size = domain_size;
  std::uniform_int_distribution<std::size_t> element(0, domain_size - 1);
  std::uniform_int_distribution<long> unit(0, grid);
  std::uniform_int_distribution<long> type1(0, 6 * grid);
  std::uniform_int_distribution<long> type0(0, 5 * grid);
  for (const auto& [name, arity] : voc.functions) {
    std::vector<std::size_t> table(power(domain_size, arity));
    for (auto& e : table) e = element(rng);
    cm.model.functions[name] = std::move(table);
  }
  for (const auto& [name, arity] : voc.predicates) {
    std::vector<Rational> table(power(domain_size, arity));
    for (auto& r : table) r = Rational(unit(rng), grid);
    cm.model.predicates[name] = std::move(table);
  }
  for (const auto& [name, sort] : voc.semiprops) {
    if (sort == SemiPropSort::Type1) {
      cm.model.semiprops[name] = Rational(-5) + Rational(type1(rng), grid);
    } else {
      cm.model.semiprops[name] = Rational(type0(rng), grid);
    }
  }
  for (const auto& x : voc.free_variables) cm.valuation[x] = element(rng);
  return cm;
}

std::optional<Countermodel> random_countermodel_search(const Hypersequent& h, const SamplingOptions& options) {
  if (options.samples == 0 || options.max_domain == 0) throw Error("sampling needs samples >= 1 and domain >= 1");
  Vocabulary voc = vocabulary(h);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> domain(1, options.max_domain);
  for (std::size_t i = 0; i < options.samples; ++i) {
    Countermodel cm = random_interpretation(voc, domain(rng), options.grid_denominator, rng);
    if (!hypersequent_true(h, cm.model, cm.valuation)) return cm;
  }
  return std::nullopt;
}

namespace {

bool mentions(const Term& t, const std::set<std::string>& bound) {
  if (t.is_variable()) return bound.count(t.name) > 0;
  for (const auto& a : t.args) {
    if (mentions(a, bound)) return true;
  }
  return false;
}

void top_atoms(const Formula& f, std::set<std::string>& bound, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind != Atom::Kind::Predicate) return;
      for (const auto& t : a.args) {
        if (mentions(t, bound)) return;
      }
      out.push_back(a);
      return;
    }
    case Formula::Kind::Implies:
      top_atoms(f.lhs(), bound, out);
      top_atoms(f.rhs(), bound, out);
      return;
    default: {
      bool inserted = bound.insert(f.variable()).second;
      top_atoms(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      return;
    }
  }
}

}  // namespace

Countermodel interpretation_from_witness(const Hypersequent& h, const std::map<std::string, Rational>& witness) {
  Vocabulary voc = vocabulary(h);
  std::set<Term> terms = closed_terms(h);
  std::map<Term, std::size_t> index;
  for (const auto& t : terms) index.emplace(t, index.size());
  const std::size_t n = std::max<std::size_t>(1, terms.size());

  Countermodel cm;
  cm.model.domain_size = n;
  for (const auto& [name, arity] : voc.functions) {
    cm.model.functions[name] = std::vector<std::size_t>(power(n, arity), 0);
  }
  for (const auto& [t, idx] : index) {
    if (t.is_variable()) {
      cm.valuation[t.name] = idx;
      continue;
    }
    std::vector<std::size_t> args;
    for (const auto& a : t.args) args.push_back(index.at(a));
    cm.model.functions[t.name][table_index(args, n)] = idx;
  }
  for (const auto& x : voc.free_variables) cm.valuation.emplace(x, 0);
  for (const auto& [name, arity] : voc.predicates) {
    cm.model.predicates[name] = std::vector<Rational>(power(n, arity), Rational(0));
  }
  std::vector<Atom> atoms;
  for (const auto& s : h.components) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) {
        std::set<std::string> bound;
        top_atoms(f, bound, atoms);
      }
    }
  }
  for (const auto& a : atoms) {
    auto it = witness.find(to_string(a));
    if (it == witness.end()) continue;
    std::vector<std::size_t> args;
    for (const auto& t : a.args) args.push_back(index.at(t));
    cm.model.predicates[a.name][table_index(args, n)] = it->second;
  }
  for (const auto& [name, sort] : voc.semiprops) {
    auto it = witness.find(name);
    cm.model.semiprops[name] = it == witness.end() ? Rational(0) : it->second;
  }
  return cm;
}

}  // namespace hyperluk
