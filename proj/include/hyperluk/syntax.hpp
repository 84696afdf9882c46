#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperluk/rational.hpp"

namespace hyperluk {

// Type 1 variables range over (-inf, 1], type 0 over [0, +inf).
enum class SemiPropSort { Type0, Type1 };

enum class FreshKind { SemiPropType0, SemiPropType1, Parameter };

struct Signature {
  std::map<std::string, std::size_t> predicates;
  std::map<std::string, std::size_t> functions;

  void declare_predicate(const std::string& name, std::size_t arity);
  void declare_function(const std::string& name, std::size_t arity);
  std::optional<std::size_t> predicate_arity(const std::string& name) const;
  std::optional<std::size_t> function_arity(const std::string& name) const;

  // First user constant, or "c0" when the signature has none.
  std::string default_constant() const;
  std::vector<std::string> constants() const;
};

struct Term {
  enum class Kind { Variable, Application };

  Kind kind = Kind::Variable;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term apply(std::string name, std::vector<Term> args = {});

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_closed() const;
  std::size_t depth() const;
};

int compare(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

struct Atom {
  enum class Kind { Constant, Predicate, SemiProp };

  Kind kind = Kind::Constant;
  Rational value;
  std::string name;
  std::vector<Term> args;
  SemiPropSort sort = SemiPropSort::Type1;

  static Atom constant(Rational value);
  static Atom predicate(std::string name, std::vector<Term> args = {});
  static Atom semiprop(std::string name, SemiPropSort sort);
};

int compare(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

class Formula {
 public:
  enum class Kind { Atomic, Implies, Forall, Exists };

  static Formula atomic(Atom atom);
  static Formula constant(Rational value);
  static Formula predicate(std::string name, std::vector<Term> args = {});
  static Formula semiprop(std::string name, SemiPropSort sort);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string variable, Formula body);
  static Formula exists(std::string variable, Formula body);

  Kind kind() const;
  bool is_atomic() const { return kind() == Kind::Atomic; }
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
  const Atom& atom() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;
  const std::string& variable() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

int compare(const Formula& a, const Formula& b);
inline bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

enum class Side { Antecedent, Succedent };

struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  const std::vector<Formula>& side(Side s) const { return s == Side::Antecedent ? antecedent : succedent; }
  std::vector<Formula>& side(Side s) { return s == Side::Antecedent ? antecedent : succedent; }
  bool is_atomic() const;
  bool empty() const { return antecedent.empty() && succedent.empty(); }
};

struct Hypersequent {
  std::vector<Sequent> components;
};

struct OccurrenceRef {
  std::size_t component = 0;
  Side side = Side::Antecedent;
  std::size_t member = 0;

  friend bool operator==(const OccurrenceRef&, const OccurrenceRef&) = default;
};

// Multiset equality.
bool operator==(const Sequent& a, const Sequent& b);
bool operator==(const Hypersequent& a, const Hypersequent& b);
// Ordered (list) equality.
bool identical(const Sequent& a, const Sequent& b);
bool identical(const Hypersequent& a, const Hypersequent& b);

Sequent canonical(const Sequent& s);
Hypersequent canonical(const Hypersequent& h);
int compare(const Sequent& a, const Sequent& b);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);
std::string to_string(const Hypersequent& h);
std::string to_string(Side side);
std::string to_string(const OccurrenceRef& occ);

const Formula& resolve(const Hypersequent& h, const OccurrenceRef& occ);

// Free substitution of a closed term; throws on open terms.
Term substitute(const Term& t, const std::string& x, const Term& replacement);
Formula substitute(const Formula& f, const std::string& x, const Term& replacement);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const Hypersequent& h);

bool contains_semiprop(const Formula& f);
bool is_rpl(const Formula& f);
bool is_non_atomic_rpl(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool is_prenex(const Formula& f);
std::size_t implication_count(const Formula& f);

// Names of semipropositional variables, function symbols (parameters included)
// and predicates occurring anywhere.
void collect_symbols(const Term& t, std::set<std::string>& out);
void collect_symbols(const Formula& f, std::set<std::string>& out);
std::set<std::string> symbols(const Formula& f);
std::set<std::string> symbols(const Sequent& s);
std::set<std::string> symbols(const Hypersequent& h);

// Closed terms occurring as predicate arguments (with all subterms).
void collect_closed_terms(const Formula& f, std::set<Term>& out);
std::set<Term> closed_terms(const Hypersequent& h);

// Global renaming of a semipropositional variable or function symbol.
Term rename_symbol(const Term& t, const std::string& from, const std::string& to);
Formula rename_symbol(const Formula& f, const std::string& from, const std::string& to);
Sequent rename_symbol(const Sequent& s, const std::string& from, const std::string& to);
Hypersequent rename_symbol(const Hypersequent& h, const std::string& from, const std::string& to);

bool is_reserved_name(std::string_view name);
std::optional<FreshKind> reserved_kind(std::string_view name);
std::string fresh_symbol(FreshKind kind, const std::set<std::string>& used);
SemiPropSort sort_of(FreshKind kind);

Hypersequent concat(const Hypersequent& a, const Hypersequent& b);

}  // namespace hyperluk
