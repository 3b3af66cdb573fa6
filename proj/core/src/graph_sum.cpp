#include "ladder/graph_sum.hpp"

namespace ladder {

GraphSum::GraphSum(const DiagGraph& g, Coefficient c) { add_term(g, c); }

Coefficient GraphSum::coefficient(const DiagGraph& g) const {
  auto it = terms_.find(canonical_encode(g));
  return it == terms_.end() ? Coefficient() : it->second.coeff;
}

void GraphSum::add_term(const DiagGraph& g, const Coefficient& c) {
  if (c.is_zero()) return;
  auto key = canonical_encode(g);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{g, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

bool operator==(const GraphSum& x, const GraphSum& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (auto xi = x.terms_.begin(), yi = y.terms_.begin(); xi != x.terms_.end(); ++xi, ++yi) {
    if (xi->first != yi->first || !(xi->second.coeff == yi->second.coeff)) return false;
  }
  return true;
}

GraphSum add(const GraphSum& x, const GraphSum& y) {
  GraphSum out = x;
  for (const auto& [key, term] : y) out.add_term(term.graph, term.coeff);
  return out;
}

GraphSum graph_multiply(const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  for (const auto& [kx, tx] : x) {
    for (const auto& [ky, ty] : y) {
      const Coefficient weight = tx.coeff * ty.coeff;
      for (const DiagGraph& g : enumerate_compositions(tx.graph, ty.graph)) {
        out.add_term(g, weight);
      }
    }
  }
  return out;
}

NormalPolynomial project_sum(const GraphSum& x) {
  NormalPolynomial out;
  for (const auto& [key, term] : x) out.add_term(project(term.graph), term.coeff);
  return out;
}

NormalPolynomial normal_order_via_graphs(const Word& w) {
  const GraphSum creator(make_vertex(1, 0));
  const GraphSum annihilator(make_vertex(0, 1));
  GraphSum acc = GraphSum::unit();
  for (Letter l : w.letters) acc = graph_multiply(acc, l == Letter::creator ? creator : annihilator);
  return project_sum(acc);
}

}  // namespace ladder
