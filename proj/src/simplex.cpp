#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperluk/linear.hpp"

namespace hyperluk {

namespace {

// Slack-form dictionary: x_basic[i] = b[i] - sum_j a[i][j] * x_nonbasic[j],
// objective z = v + sum_j c[j] * x_nonbasic[j]. Variables are numbered
// 0..n-1 (structural) then n..n+m-1 (slack).
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    m_ = b_.size();
    n_ = c_.size();
    for (std::size_t j = 0; j < n_; ++j) nonbasic_.push_back(j);
    for (std::size_t i = 0; i < m_; ++i) basic_.push_back(n_ + i);
  }

  // Returns false if the constraints are infeasible.
  bool solve(std::vector<Rational>& x) {
    if (!initialize()) return false;
    if (!optimize()) throw std::logic_error("ε-relaxation unexpectedly unbounded");
    x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = b_[i];
    }
    return true;
  }

  const Rational& objective() const { return v_; }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const std::size_t cols = nonbasic_.size();
    Rational are = a_[r][e];
    b_[r] /= are;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != e) a_[r][j] /= are;
    }
    a_[r][e] = Rational(1) / are;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][e].sign() == 0) continue;
      Rational aie = a_[i][e];
      b_[i] -= aie * b_[r];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != e) a_[i][j] -= aie * a_[r][j];
      }
      a_[i][e] = -(aie * a_[r][e]);
    }
    if (c_[e].sign() != 0) {
      Rational ce = c_[e];
      v_ += ce * b_[r];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != e) c_[j] -= ce * a_[r][j];
      }
      c_[e] = -(ce * a_[r][e]);
    }
    std::swap(basic_[r], nonbasic_[e]);
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (c_[j].sign() > 0 && (!enter || nonbasic_[j] < nonbasic_[*enter])) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][*enter].sign() <= 0) continue;
        Rational ratio = b_[i] / a_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basic_[i] < basic_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  bool initialize() {
    std::optional<std::size_t> k;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!k || b_[i] < b_[*k]) k = i;
    }
    if (!k || b_[*k].sign() >= 0) return true;

    // Auxiliary problem: maximize -x0 with x0 subtracted from every row.
    const std::size_t aux = n_ + m_;
    std::vector<Rational> original_c = c_;
    std::vector<std::size_t> original_nonbasic = nonbasic_;
    for (auto& row : a_) row.push_back(Rational(-1));
    nonbasic_.push_back(aux);
    c_.assign(nonbasic_.size(), Rational(0));
    c_.back() = Rational(-1);
    v_ = Rational(0);
    pivot(*k, nonbasic_.size() - 1);
    optimize();
    if (v_.sign() != 0) return false;

    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] != aux) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (a_[i][j].sign() != 0 && (!col || nonbasic_[j] < nonbasic_[*col])) col = j;
      }
      if (col) {
        pivot(i, *col);
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
      break;
    }
    std::size_t aux_col = 0;
    while (nonbasic_[aux_col] != aux) ++aux_col;
    for (auto& row : a_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(aux_col));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(aux_col));

    // Restore the original objective in terms of the current nonbasics.
    c_.assign(nonbasic_.size(), Rational(0));
    v_ = Rational(0);
    for (std::size_t orig = 0; orig < original_nonbasic.size(); ++orig) {
      const Rational& ck = original_c[orig];
      if (ck.sign() == 0) continue;
      std::size_t var = original_nonbasic[orig];
      bool done = false;
      for (std::size_t j = 0; j < nonbasic_.size() && !done; ++j) {
        if (nonbasic_[j] == var) {
          c_[j] += ck;
          done = true;
        }
      }
      for (std::size_t i = 0; i < m_ && !done; ++i) {
        if (basic_[i] == var) {
          v_ += ck * b_[i];
          for (std::size_t j = 0; j < nonbasic_.size(); ++j) c_[j] -= ck * a_[i][j];
          done = true;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  Rational v_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

struct Substitution {
  Rational offset;
  std::vector<std::pair<std::size_t, Rational>> terms;
};

}  // namespace

FeasibilityResult lp_feasible_strict(const LinearSystem& sys) {
  sys.validate();
  std::size_t cols = 0;
  std::map<std::string, Substitution> subst;
  std::vector<std::pair<std::size_t, Rational>> upper_rows;
  for (const auto& v : sys.variables) {
    Substitution s;
    if (v.lower) {
      s.offset = *v.lower;
      s.terms.emplace_back(cols, Rational(1));
      if (v.upper) upper_rows.emplace_back(cols, *v.upper - *v.lower);
      ++cols;
    } else if (v.upper) {
      s.offset = *v.upper;
      s.terms.emplace_back(cols++, Rational(-1));
    } else {
      s.terms.emplace_back(cols++, Rational(1));
      s.terms.emplace_back(cols++, Rational(-1));
    }
    subst[v.id] = std::move(s);
  }
  const std::size_t eps = cols++;

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& c : sys.constraints) {
    std::vector<Rational> row(cols);
    Rational rhs = -c.constant;
    for (const auto& [id, coeff] : c.coefficients) {
      const Substitution& s = subst.at(id);
      rhs -= coeff * s.offset;
      for (const auto& [col, k] : s.terms) row[col] += coeff * k;
    }
    if (c.relation == Relation::Less) row[eps] = Rational(1);
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  for (const auto& [col, width] : upper_rows) {
    std::vector<Rational> row(cols);
    row[col] = Rational(1);
    a.push_back(std::move(row));
    b.push_back(width);
  }
  {
    std::vector<Rational> row(cols);
    row[eps] = Rational(1);
    a.push_back(std::move(row));
    b.push_back(Rational(1));
  }
  std::vector<Rational> objective(cols);
  objective[eps] = Rational(1);

  Dictionary dict(std::move(a), std::move(b), std::move(objective));
  std::vector<Rational> x;
  if (!dict.solve(x)) return FeasibilityResult::infeasible();
  if (x[eps].sign() <= 0) return FeasibilityResult::infeasible();

  Assignment witness;
  for (const auto& v : sys.variables) {
    const Substitution& s = subst.at(v.id);
    Rational value = s.offset;
    for (const auto& [col, k] : s.terms) value += k * x[col];
    witness[v.id] = value;
  }
  return FeasibilityResult::feasible(sys, std::move(witness));
}

}  // namespace hyperluk
