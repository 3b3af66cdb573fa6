#pragma once

#include <map>
#include <string>

#include "ladder/coefficient.hpp"
#include "ladder/graph.hpp"
#include "ladder/polynomial.hpp"
#include "ladder/word.hpp"

namespace ladder {

/// Formal sum of labeled graphs, keyed by canonical encoding.
class GraphSum {
 public:
  struct Term {
    DiagGraph graph;
    Coefficient coeff;
  };
  using TermMap = std::map<std::string, Term>;
  using const_iterator = TermMap::const_iterator;

  GraphSum() = default;
  explicit GraphSum(const DiagGraph& g, Coefficient c = 1);

  static GraphSum unit() { return GraphSum(DiagGraph::void_graph()); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Coefficient coefficient(const DiagGraph& g) const;
  void add_term(const DiagGraph& g, const Coefficient& c);

  friend bool operator==(const GraphSum& x, const GraphSum& y);

 private:
  TermMap terms_;
};

GraphSum add(const GraphSum& x, const GraphSum& y);

/// Bilinear extension of "product of two graphs = sum of all their
/// compositions", each with coefficient one. Unit is the void graph.
GraphSum graph_multiply(const GraphSum& x, const GraphSum& y);

/// Linear extension of project(); an algebra homomorphism onto the
/// normally ordered algebra.
NormalPolynomial project_sum(const GraphSum& x);

/// a -> one vertex with a gray spot, ad -> one vertex with a white spot;
/// graph-multiply left to right, then project.
NormalPolynomial normal_order_via_graphs(const Word& w);

}  // namespace ladder
