#include <map>
#include <optional>
#include <vector>

#include "hyperluk/error.hpp"
#include "hyperluk/linear.hpp"

namespace hyperluk {

namespace {

// sum(a[i] * x_i) + k  (strict ? < : <=)  0
struct Row {
  std::vector<Rational> a;
  Rational k;
  bool strict = false;
};

// Scale so the first nonzero coefficient has magnitude 1.
Row normalize(Row r) {
  for (const auto& c : r.a) {
    if (c.sign() == 0) continue;
    Rational s = abs(c);
    for (auto& x : r.a) x /= s;
    r.k /= s;
    break;
  }
  return r;
}

}  // namespace

FeasibilityResult fm_feasible_strict(const LinearSystem& sys, std::size_t max_variables) {
  sys.validate();
  const std::size_t n = sys.variables.size();
  if (n > max_variables) {
    throw SizeGuardError("Fourier-Motzkin oracle limited to " + std::to_string(max_variables) + " variables, got " +
                         std::to_string(n));
  }
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < n; ++i) col[sys.variables[i].id] = i;

  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = sys.variables[i];
    if (v.lower) {
      Row r{std::vector<Rational>(n), *v.lower, false};
      r.a[i] = Rational(-1);
      rows.push_back(std::move(r));
    }
    if (v.upper) {
      Row r{std::vector<Rational>(n), -*v.upper, false};
      r.a[i] = Rational(1);
      rows.push_back(std::move(r));
    }
  }
  for (const auto& c : sys.constraints) {
    Row r{std::vector<Rational>(n), c.constant, c.relation == Relation::Less};
    for (const auto& [id, coeff] : c.coefficients) r.a[col.at(id)] += coeff;
    rows.push_back(std::move(r));
  }

  // Rows with the same normalized coefficients collapse to the tightest;
  // constant rows are decided on the spot.
  bool contradiction = false;
  auto reduce = [&](std::vector<Row> in) {
    std::map<std::string, std::size_t> where;
    std::vector<Row> out;
    for (auto& r : in) {
      Row nr = normalize(std::move(r));
      bool constant = true;
      for (const auto& c : nr.a) constant = constant && c.sign() == 0;
      if (constant) {
        if (nr.strict ? !(nr.k < Rational(0)) : !(nr.k <= Rational(0))) contradiction = true;
        continue;
      }
      std::string k;
      for (const auto& c : nr.a) k += c.to_string() + ",";
      auto [it, fresh] = where.emplace(k, out.size());
      if (fresh) {
        out.push_back(std::move(nr));
        continue;
      }
      Row& old = out[it->second];
      if (nr.k > old.k || (nr.k == old.k && nr.strict)) old = std::move(nr);
    }
    return out;
  };

  // order[j] is the j-th eliminated variable; levels[j] the rows before it.
  std::vector<std::size_t> order;
  std::vector<std::vector<Row>> levels;
  std::vector<bool> done(n, false);
  std::vector<Row> current = reduce(rows);
  for (std::size_t step = 0; step < n && !contradiction; ++step) {
    std::size_t j = n, best = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      std::size_t np = 0, nn = 0;
      for (const auto& r : current) {
        np += r.a[v].sign() > 0;
        nn += r.a[v].sign() < 0;
      }
      if (j == n || np * nn < best) {
        j = v;
        best = np * nn;
      }
    }
    done[j] = true;
    order.push_back(j);
    levels.push_back(current);
    std::vector<Row> pos, neg, next;
    for (auto& r : current) {
      int s = r.a[j].sign();
      (s > 0 ? pos : (s < 0 ? neg : next)).push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Rational lp = -q.a[j];
        Rational lq = p.a[j];
        Row r{std::vector<Rational>(n), lp * p.k + lq * q.k, p.strict || q.strict};
        for (std::size_t i = 0; i < n; ++i) r.a[i] = lp * p.a[i] + lq * q.a[i];
        r.a[j] = Rational(0);
        next.push_back(std::move(r));
      }
    }
    current = reduce(std::move(next));
  }
  if (contradiction) return FeasibilityResult::infeasible();

  std::vector<Rational> x(n);
  for (std::size_t step = order.size(); step-- > 0;) {
    const std::size_t jj = order[step];
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : levels[step]) {
      int s = r.a[jj].sign();
      if (s == 0) continue;
      Rational rest = r.k;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != jj) rest += r.a[i] * x[i];
      }
      Rational bound = -rest / r.a[jj];
      if (s > 0) {
        if (!hi || bound < *hi || (bound == *hi && r.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || r.strict) : r.strict;
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || r.strict) : r.strict;
          lo = bound;
        }
      }
    }
    if (lo && hi) {
      x[jj] = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
    } else if (lo) {
      x[jj] = lo_strict ? *lo + Rational(1) : *lo;
    } else if (hi) {
      x[jj] = hi_strict ? *hi - Rational(1) : *hi;
    } else {
      x[jj] = Rational(0);
    }
  }
  Assignment witness;
  for (std::size_t i = 0; i < n; ++i) witness[sys.variables[i].id] = x[i];
  return FeasibilityResult::feasible(sys, std::move(witness));
}

}  // namespace hyperluk
