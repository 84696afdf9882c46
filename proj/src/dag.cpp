#include <algorithm>

#include "hyperluk/error.hpp"
#include "hyperluk/transform.hpp"

namespace hyperluk {

namespace {

struct Bound {
  std::optional<Rational> value;
  bool strict = false;
};

// Larger lower bound wins; on ties the strict one.
void raise(Bound& b, const Bound& other) {
  if (!other.value) return;
  if (!b.value || *other.value > *b.value || (*other.value == *b.value && other.strict)) b = other;
}

void lower(Bound& b, const Bound& other) {
  if (!other.value) return;
  if (!b.value || *other.value < *b.value || (*other.value == *b.value && other.strict)) b = other;
}

void domain_of(const Formula& f, Bound& lo, Bound& hi) {
  lo = {};
  hi = {};
  if (f.is_atomic() && f.atom().kind == Atom::Kind::SemiProp) {
    if (f.atom().sort == SemiPropSort::Type0) {
      lo.value = Rational(0);
    } else {
      hi.value = Rational(1);
    }
    return;
  }
  if (f.is_atomic() && f.atom().kind == Atom::Kind::Constant) {
    lo.value = hi.value = f.atom().value;
    return;
  }
  lo.value = Rational(0);
  hi.value = Rational(1);
}

}  // namespace

QuantifierDag build_quantifier_dag(const Hypersequent& h) {
  QuantifierDag dag;
  auto vertex = [&](const Formula& f) {
    auto it = std::find(dag.vertices.begin(), dag.vertices.end(), f);
    if (it != dag.vertices.end()) return static_cast<std::size_t>(it - dag.vertices.begin());
    dag.vertices.push_back(f);
    return dag.vertices.size() - 1;
  };
  std::optional<std::size_t> declared_source;
  for (const auto& s : h.components) {
    if (s.antecedent.size() == 1 && s.succedent.size() == 1) {
      std::size_t from = vertex(s.antecedent[0]);
      std::size_t to = vertex(s.succedent[0]);
      dag.edges.emplace_back(from, to);
    } else if (s.antecedent.empty() && s.succedent.size() == 1 && s.succedent[0].is_atomic() &&
               s.succedent[0].atom().kind == Atom::Kind::SemiProp) {
      if (declared_source) throw TransformError("dag: more than one source component");
      declared_source = vertex(s.succedent[0]);
    } else {
      throw TransformError("dag: component " + to_string(s) + " is not in chain form");
    }
  }
  const std::size_t n = dag.vertices.size();
  if (n == 0) throw TransformError("dag: no vertices");
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : dag.edges) {
    ++indegree[b];
    out[a].push_back(b);
  }
  // Kahn's algorithm detects cycles.
  std::vector<std::size_t> deg = indegree;
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] == 0) queue.push_back(v);
  }
  std::size_t seen = 0;
  while (seen < queue.size()) {
    std::size_t v = queue[seen++];
    for (std::size_t w : out[v]) {
      if (--deg[w] == 0) queue.push_back(w);
    }
  }
  if (seen != n) throw TransformError("dag: cycle detected");
  std::vector<std::size_t> sources;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) sources.push_back(v);
  }
  if (sources.size() != 1) throw TransformError("dag: " + std::to_string(sources.size()) + " sources, expected one");
  dag.source = sources[0];
  if (declared_source && *declared_source != dag.source) {
    throw TransformError("dag: source component does not name the source vertex");
  }
  dag.source_component = declared_source.has_value();
  for (std::size_t v = 0; v < n; ++v) {
    const Formula& f = dag.vertices[v];
    bool rpl = is_rpl(f);
    if (out[v].empty()) dag.sinks.push_back(v);
    if (rpl && !out[v].empty()) throw TransformError("dag: formula vertex " + to_string(f) + " is not a sink");
  }
  return dag;
}

bool dag_chain_feasible(const QuantifierDag& dag) {
  const std::size_t n = dag.vertices.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::vector<std::size_t>> in(n);
  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : dag.edges) {
    out[a].push_back(b);
    in[b].push_back(a);
    ++deg[b];
  }
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t w : out[order[i]]) {
      if (--deg[w] == 0) order.push_back(w);
    }
  }
  std::vector<Bound> lo(n);
  std::vector<Bound> hi(n);
  std::vector<Bound> dom_lo(n);
  std::vector<Bound> dom_hi(n);
  for (std::size_t v = 0; v < n; ++v) domain_of(dag.vertices[v], dom_lo[v], dom_hi[v]);
  if (dag.source_component) lower(dom_hi[dag.source], Bound{Rational(1), true});
  // Values fall strictly along every edge.
  for (std::size_t v : order) {
    hi[v] = dom_hi[v];
    for (std::size_t u : in[v]) lower(hi[v], Bound{hi[u].value, true});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    lo[v] = dom_lo[v];
    for (std::size_t w : out[v]) raise(lo[v], Bound{lo[w].value, true});
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!lo[v].value || !hi[v].value) continue;
    if (*lo[v].value > *hi[v].value) return false;
    if (*lo[v].value == *hi[v].value && (lo[v].strict || hi[v].strict)) return false;
  }
  return true;
}

Hypersequent quantifier_free_part(const Hypersequent& h) {
  Hypersequent out;
  for (const auto& s : h.components) {
    bool qf = true;
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (const auto& f : s.side(side)) qf = qf && is_quantifier_free(f);
    }
    if (qf) out.components.push_back(s);
  }
  return out;
}

}  // namespace hyperluk
