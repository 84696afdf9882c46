#include "hyperluk/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "hyperluk/error.hpp"

namespace hyperluk {

// ---------------------------------------------------------------- signature

void Signature::declare_predicate(const std::string& name, std::size_t arity) {
  auto it = predicates.find(name);
  if (it != predicates.end() && it->second != arity) {
    throw Error("arity mismatch for predicate " + name + ": " + std::to_string(it->second) + " vs " +
                std::to_string(arity));
  }
  predicates[name] = arity;
}

void Signature::declare_function(const std::string& name, std::size_t arity) {
  auto it = functions.find(name);
  if (it != functions.end() && it->second != arity) {
    throw Error("arity mismatch for function " + name + ": " + std::to_string(it->second) + " vs " +
                std::to_string(arity));
  }
  functions[name] = arity;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
  auto it = predicates.find(name);
  if (it == predicates.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  auto it = functions.find(name);
  if (it == functions.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Signature::constants() const {
  std::vector<std::string> out;
  for (const auto& [name, arity] : functions) {
    if (arity == 0 && !is_reserved_name(name)) out.push_back(name);
  }
  return out;
}

std::string Signature::default_constant() const {
  auto cs = constants();
  return cs.empty() ? std::string("c0") : cs.front();
}

// --------------------------------------------------------------------- terms

Term Term::variable(std::string name) {
  Term t;
  t.kind = Kind::Variable;
  t.name = std::move(name);
  return t;
}

Term Term::apply(std::string name, std::vector<Term> args) {
  Term t;
  t.kind = Kind::Application;
  t.name = std::move(name);
  t.args = std::move(args);
  return t;
}

bool Term::is_closed() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_closed(); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth() + 1);
  return d;
}

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
  }
  return 0;
}

// --------------------------------------------------------------------- atoms

Atom Atom::constant(Rational value) {
  if (value < Rational(0) || value > Rational(1)) {
    throw Error("truth constant " + value.to_string() + " outside [0,1]");
  }
  Atom a;
  a.kind = Kind::Constant;
  a.value = std::move(value);
  return a;
}

Atom Atom::predicate(std::string name, std::vector<Term> args) {
  Atom a;
  a.kind = Kind::Predicate;
  a.name = std::move(name);
  a.args = std::move(args);
  return a;
}

Atom Atom::semiprop(std::string name, SemiPropSort sort) {
  Atom a;
  a.kind = Kind::SemiProp;
  a.name = std::move(name);
  a.sort = sort;
  return a;
}

int compare(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case Atom::Kind::Constant:
      return a.value < b.value ? -1 : (b.value < a.value ? 1 : 0);
    case Atom::Kind::SemiProp:
      if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
      return a.sort == b.sort ? 0 : (a.sort < b.sort ? -1 : 1);
    case Atom::Kind::Predicate:
      break;
  }
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
  }
  return 0;
}

// ------------------------------------------------------------------ formulas

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;
  std::string variable;
  std::vector<Formula> sub;
};

Formula Formula::atomic(Atom atom) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atomic, std::move(atom), {}, {}}));
}

Formula Formula::constant(Rational value) { return atomic(Atom::constant(std::move(value))); }

Formula Formula::predicate(std::string name, std::vector<Term> args) {
  return atomic(Atom::predicate(std::move(name), std::move(args)));
}

Formula Formula::semiprop(std::string name, SemiPropSort sort) {
  return atomic(Atom::semiprop(std::move(name), sort));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, std::nullopt, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::forall(std::string variable, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Forall, std::nullopt, std::move(variable), {std::move(body)}}));
}

Formula Formula::exists(std::string variable, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Exists, std::nullopt, std::move(variable), {std::move(body)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (node_->kind != Kind::Atomic) throw Error("formula is not atomic");
  return *node_->atom;
}

const Formula& Formula::lhs() const {
  if (node_->kind != Kind::Implies) throw Error("formula is not an implication");
  return node_->sub[0];
}

const Formula& Formula::rhs() const {
  if (node_->kind != Kind::Implies) throw Error("formula is not an implication");
  return node_->sub[1];
}

const Formula& Formula::body() const {
  if (!is_quantifier()) throw Error("formula is not quantified");
  return node_->sub[0];
}

const std::string& Formula::variable() const {
  if (!is_quantifier()) throw Error("formula is not quantified");
  return node_->variable;
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Formula::Kind::Atomic:
      return compare(a.atom(), b.atom());
    case Formula::Kind::Implies:
      if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
      return compare(a.rhs(), b.rhs());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (int c = a.variable().compare(b.variable()); c != 0) return c < 0 ? -1 : 1;
      return compare(a.body(), b.body());
  }
  return 0;
}

// ------------------------------------------------------ sequents and equality

bool Sequent::is_atomic() const {
  auto atomic = [](const Formula& f) { return f.is_atomic(); };
  return std::all_of(antecedent.begin(), antecedent.end(), atomic) &&
         std::all_of(succedent.begin(), succedent.end(), atomic);
}

namespace {

int compare_lists(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare(const Sequent& a, const Sequent& b) {
  if (int c = compare_lists(a.antecedent, b.antecedent); c != 0) return c;
  return compare_lists(a.succedent, b.succedent);
}

Sequent canonical(const Sequent& s) {
  Sequent out = s;
  std::sort(out.antecedent.begin(), out.antecedent.end());
  std::sort(out.succedent.begin(), out.succedent.end());
  return out;
}

Hypersequent canonical(const Hypersequent& h) {
  Hypersequent out;
  out.components.reserve(h.components.size());
  for (const auto& s : h.components) out.components.push_back(canonical(s));
  std::sort(out.components.begin(), out.components.end(),
            [](const Sequent& a, const Sequent& b) { return compare(a, b) < 0; });
  return out;
}

bool identical(const Sequent& a, const Sequent& b) { return compare(a, b) == 0; }

bool identical(const Hypersequent& a, const Hypersequent& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!identical(a.components[i], b.components[i])) return false;
  }
  return true;
}

bool operator==(const Sequent& a, const Sequent& b) { return identical(canonical(a), canonical(b)); }

bool operator==(const Hypersequent& a, const Hypersequent& b) {
  return identical(canonical(a), canonical(b));
}

// ------------------------------------------------------------------ printing

std::string to_string(const Term& t) {
  if (t.args.empty()) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Constant:
      return a.value.to_string();
    case Atom::Kind::SemiProp:
      return a.name;
    case Atom::Kind::Predicate:
      break;
  }
  if (a.args.empty()) return a.name;
  std::string out = a.name + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += to_string(a.args[i]);
  }
  return out + ")";
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return to_string(f.atom());
    case Formula::Kind::Implies: {
      std::string left = to_string(f.lhs());
      if (!f.lhs().is_atomic()) left = "(" + left + ")";
      return left + " -> " + to_string(f.rhs());
    }
    case Formula::Kind::Forall:
      return "forall " + f.variable() + ". " + to_string(f.body());
    case Formula::Kind::Exists:
      return "exists " + f.variable() + ". " + to_string(f.body());
  }
  return {};
}

namespace {

std::string join(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(fs[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Sequent& s) {
  std::string out = join(s.antecedent);
  out += out.empty() ? "=>" : " =>";
  if (!s.succedent.empty()) out += " " + join(s.succedent);
  return out;
}

std::string to_string(const Hypersequent& h) {
  std::string out;
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    if (i) out += " | ";
    out += to_string(h.components[i]);
  }
  return out;
}

std::string to_string(Side side) { return side == Side::Antecedent ? "antecedent" : "succedent"; }

std::string to_string(const OccurrenceRef& occ) {
  return std::to_string(occ.component) + ":" + (occ.side == Side::Antecedent ? "a" : "s") + ":" +
         std::to_string(occ.member);
}

const Formula& resolve(const Hypersequent& h, const OccurrenceRef& occ) {
  if (occ.component >= h.components.size()) {
    throw OccurrenceError("component index " + std::to_string(occ.component) + " out of range (" +
                          std::to_string(h.components.size()) + " components)");
  }
  const auto& side = h.components[occ.component].side(occ.side);
  if (occ.member >= side.size()) {
    throw OccurrenceError("member index " + std::to_string(occ.member) + " out of range in " +
                          to_string(occ.side) + " of component " + std::to_string(occ.component));
  }
  return side[occ.member];
}

// -------------------------------------------------------------- substitution

Term substitute(const Term& t, const std::string& x, const Term& replacement) {
  if (t.is_variable()) return t.name == x ? replacement : t;
  Term out = t;
  for (auto& a : out.args) a = substitute(a, x, replacement);
  return out;
}

namespace {

Formula substitute_unchecked(const Formula& f, const std::string& x, const Term& r) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind != Atom::Kind::Predicate) return f;
      std::vector<Term> args;
      args.reserve(a.args.size());
      for (const auto& t : a.args) args.push_back(substitute(t, x, r));
      return Formula::predicate(a.name, std::move(args));
    }
    case Formula::Kind::Implies:
      return Formula::implies(substitute_unchecked(f.lhs(), x, r), substitute_unchecked(f.rhs(), x, r));
    case Formula::Kind::Forall:
      if (f.variable() == x) return f;
      return Formula::forall(f.variable(), substitute_unchecked(f.body(), x, r));
    case Formula::Kind::Exists:
      if (f.variable() == x) return f;
      return Formula::exists(f.variable(), substitute_unchecked(f.body(), x, r));
  }
  return f;
}

void free_vars_term(const Term& t, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.is_variable()) {
    if (!bound.count(t.name)) out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) free_vars_term(a, bound, out);
}

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      if (f.atom().kind == Atom::Kind::Predicate) {
        for (const auto& t : f.atom().args) free_vars_term(t, bound, out);
      }
      return;
    case Formula::Kind::Implies:
      free_vars(f.lhs(), bound, out);
      free_vars(f.rhs(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool inserted = bound.insert(f.variable()).second;
      free_vars(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      return;
    }
  }
}

}  // namespace

Formula substitute(const Formula& f, const std::string& x, const Term& replacement) {
  if (!replacement.is_closed()) {
    throw Error("substitution requires a closed term, got " + to_string(replacement));
  }
  return substitute_unchecked(f, x, replacement);
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

std::set<std::string> free_variables(const Hypersequent& h) {
  std::set<std::string> out;
  for (const auto& s : h.components) {
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) {
        auto fv = free_variables(f);
        out.insert(fv.begin(), fv.end());
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ classification

bool contains_semiprop(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return f.atom().kind == Atom::Kind::SemiProp;
    case Formula::Kind::Implies:
      return contains_semiprop(f.lhs()) || contains_semiprop(f.rhs());
    default:
      return contains_semiprop(f.body());
  }
}

bool is_rpl(const Formula& f) { return !contains_semiprop(f); }

bool is_non_atomic_rpl(const Formula& f) { return !f.is_atomic() && is_rpl(f); }

bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return true;
    case Formula::Kind::Implies:
      return is_quantifier_free(f.lhs()) && is_quantifier_free(f.rhs());
    default:
      return false;
  }
}

bool is_prenex(const Formula& f) {
  if (f.is_quantifier()) return is_prenex(f.body());
  return is_quantifier_free(f);
}

std::size_t implication_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return 0;
    case Formula::Kind::Implies:
      return 1 + implication_count(f.lhs()) + implication_count(f.rhs());
    default:
      return implication_count(f.body());
  }
}

// ------------------------------------------------------------------- symbols

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) return;
  out.insert(t.name);
  for (const auto& a : t.args) collect_symbols(a, out);
}

void collect_symbols(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind == Atom::Kind::Constant) return;
      out.insert(a.name);
      for (const auto& t : a.args) collect_symbols(t, out);
      return;
    }
    case Formula::Kind::Implies:
      collect_symbols(f.lhs(), out);
      collect_symbols(f.rhs(), out);
      return;
    default:
      collect_symbols(f.body(), out);
      return;
  }
}

std::set<std::string> symbols(const Formula& f) {
  std::set<std::string> out;
  collect_symbols(f, out);
  return out;
}

std::set<std::string> symbols(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) collect_symbols(f, out);
  for (const auto& f : s.succedent) collect_symbols(f, out);
  return out;
}

std::set<std::string> symbols(const Hypersequent& h) {
  std::set<std::string> out;
  for (const auto& s : h.components) {
    for (const auto& f : s.antecedent) collect_symbols(f, out);
    for (const auto& f : s.succedent) collect_symbols(f, out);
  }
  return out;
}

namespace {

bool mentions_bound(const Term& t, const std::set<std::string>& bound) {
  if (t.is_variable()) return bound.count(t.name) > 0;
  return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return mentions_bound(a, bound); });
}

void add_term_closure(const Term& t, std::set<Term>& out) {
  out.insert(t);
  for (const auto& a : t.args) add_term_closure(a, out);
}

void closed_terms_rec(const Formula& f, std::set<std::string>& bound, std::set<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      if (f.atom().kind == Atom::Kind::Predicate) {
        for (const auto& t : f.atom().args) {
          if (!mentions_bound(t, bound)) add_term_closure(t, out);
        }
      }
      return;
    case Formula::Kind::Implies:
      closed_terms_rec(f.lhs(), bound, out);
      closed_terms_rec(f.rhs(), bound, out);
      return;
    default: {
      bool inserted = bound.insert(f.variable()).second;
      closed_terms_rec(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      return;
    }
  }
}

}  // namespace

void collect_closed_terms(const Formula& f, std::set<Term>& out) {
  std::set<std::string> bound;
  closed_terms_rec(f, bound, out);
}

std::set<Term> closed_terms(const Hypersequent& h) {
  std::set<Term> out;
  for (const auto& s : h.components) {
    for (const auto& f : s.antecedent) collect_closed_terms(f, out);
    for (const auto& f : s.succedent) collect_closed_terms(f, out);
  }
  return out;
}

Term rename_symbol(const Term& t, const std::string& from, const std::string& to) {
  if (t.is_variable()) return t;
  Term out = t;
  if (out.name == from) out.name = to;
  for (auto& a : out.args) a = rename_symbol(a, from, to);
  return out;
}

Formula rename_symbol(const Formula& f, const std::string& from, const std::string& to) {
  switch (f.kind()) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom();
      if (a.kind == Atom::Kind::Constant) return f;
      Atom out = a;
      if (out.name == from) out.name = to;
      for (auto& t : out.args) t = rename_symbol(t, from, to);
      return Formula::atomic(std::move(out));
    }
    case Formula::Kind::Implies:
      return Formula::implies(rename_symbol(f.lhs(), from, to), rename_symbol(f.rhs(), from, to));
    case Formula::Kind::Forall:
      return Formula::forall(f.variable(), rename_symbol(f.body(), from, to));
    case Formula::Kind::Exists:
      return Formula::exists(f.variable(), rename_symbol(f.body(), from, to));
  }
  return f;
}

Sequent rename_symbol(const Sequent& s, const std::string& from, const std::string& to) {
  Sequent out;
  for (const auto& f : s.antecedent) out.antecedent.push_back(rename_symbol(f, from, to));
  for (const auto& f : s.succedent) out.succedent.push_back(rename_symbol(f, from, to));
  return out;
}

Hypersequent rename_symbol(const Hypersequent& h, const std::string& from, const std::string& to) {
  Hypersequent out;
  for (const auto& s : h.components) out.components.push_back(rename_symbol(s, from, to));
  return out;
}

// ------------------------------------------------------------- fresh symbols

std::optional<FreshKind> reserved_kind(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  switch (name[0]) {
    case 'p':
      return FreshKind::SemiPropType1;
    case 'q':
      return FreshKind::SemiPropType0;
    case 'a':
      return FreshKind::Parameter;
    default:
      return std::nullopt;
  }
}

bool is_reserved_name(std::string_view name) { return reserved_kind(name).has_value(); }

std::string fresh_symbol(FreshKind kind, const std::set<std::string>& used) {
  const char prefix = kind == FreshKind::SemiPropType1 ? 'p' : (kind == FreshKind::SemiPropType0 ? 'q' : 'a');
  for (std::size_t n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    if (!used.count(candidate)) return candidate;
  }
}

SemiPropSort sort_of(FreshKind kind) {
  return kind == FreshKind::SemiPropType0 ? SemiPropSort::Type0 : SemiPropSort::Type1;
}

Hypersequent concat(const Hypersequent& a, const Hypersequent& b) {
  Hypersequent out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  return out;
}

}  // namespace hyperluk
