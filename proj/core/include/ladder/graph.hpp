#pragma once

#include <compare>
#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/polynomial.hpp"

namespace ladder {

/// Port labels are unique within a graph. Composition keeps the left
/// factor's labels and shifts the right factor's labels past them, so a
/// label never changes once a port belongs to the left operand.
using PortId = std::uint32_t;

struct Vertex {
  std::vector<PortId> in_ports;   // ingoing lines; loose ends are gray spots
  std::vector<PortId> out_ports;  // outgoing lines; loose ends are white spots

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A line joining an out-port of one vertex to an in-port of another.
struct Edge {
  PortId out;
  PortId in;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One join of a composition: a gray spot of the left factor receives a
/// white spot of the right factor (label as in the right factor, unshifted).
struct Join {
  PortId gray;
  PortId white;

  friend auto operator<=>(const Join&, const Join&) = default;
};

/// Joins sorted by gray label. Distinct grays, distinct whites.
using Matching = std::vector<Join>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Labeled acyclic graph with distinguishable dangling lines.
///
/// Vertices are kept in creation order, ports within a vertex in label order,
/// edges sorted, and the dangling lists sorted by label. Every port is either
/// in exactly one edge or in exactly one dangling list. The default value is
/// the void graph (no vertices, no ports), the multiplicative unit.
class DiagGraph {
 public:
  DiagGraph() = default;

  static DiagGraph void_graph() { return {}; }

  /// Validates and normalizes raw structure. Throws GraphError on duplicate
  /// labels, edges referring to missing ports or the wrong port kind, ports
  /// used twice, or a directed cycle.
  static DiagGraph from_parts(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<PortId>& dangling_in() const { return dangling_in_; }
  const std::vector<PortId>& dangling_out() const { return dangling_out_; }

  bool is_void() const { return vertices_.empty(); }
  /// One past the largest port label (0 for a graph without ports).
  PortId next_label() const { return next_label_; }

  friend bool operator==(const DiagGraph&, const DiagGraph&) = default;

 private:
  friend DiagGraph make_vertex(std::uint32_t, std::uint32_t);
  friend DiagGraph compose(const DiagGraph&, const DiagGraph&, const Matching&);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<PortId> dangling_in_;
  std::vector<PortId> dangling_out_;
  PortId next_label_ = 0;
};

/// One vertex with r out-ports (white spots, labels 0..r-1) and s in-ports
/// (gray spots, labels r..r+s-1). make_vertex(0, 0) is an isolated vertex,
/// not the void graph.
DiagGraph make_vertex(std::uint32_t r, std::uint32_t s);

/// True when the vertex graph induced by the edges has no directed cycle.
bool is_acyclic(const DiagGraph& g);

/// All partial matchings between `grays` and `whites` including the empty
/// one, ordered by size and then lexicographically by (gray, white) pairs.
std::vector<Matching> enumerate_matchings(const std::vector<PortId>& grays,
                                          const std::vector<PortId>& whites);

/// Disjoint union of g1 and g2 (g2's labels shifted by g1.next_label())
/// plus one edge per join, running from g2's white port into g1's gray port.
/// Throws GraphError if the matching does not use dangling ports of the
/// right graphs or reuses a port.
DiagGraph compose(const DiagGraph& g1, const DiagGraph& g2, const Matching& matching);

/// One composition per partial matching of dangling_in(g1) with
/// dangling_out(g2), in enumerate_matchings order.
std::vector<DiagGraph> enumerate_compositions(const DiagGraph& g1, const DiagGraph& g2);

/// Forgets inner structure: (number of white spots, number of gray spots).
NormalMonomial project(const DiagGraph& g);

struct BuildStep {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  /// Index into enumerate_matchings(current.dangling_in(), vertex.dangling_out()).
  std::size_t matching = 0;
};

class BuildError : public GraphError {
 public:
  BuildError(std::size_t step, const std::string& what);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Starts from the void graph and composes with make_vertex(r, s) once per
/// step using the chosen matching. Throws BuildError naming the step whose
/// matching index is out of range.
DiagGraph build_iteratively(const std::vector<BuildStep>& steps);

/// Injective byte encoding of the labeled structure; stable across runs.
/// The void graph encodes to kVoidEncoding.
std::string canonical_encode(const DiagGraph& g);
/// Inverse of canonical_encode. Throws GraphError on malformed input.
DiagGraph canonical_decode(std::string_view bytes);

inline constexpr std::string_view kVoidEncoding{"G\0\0", 3};

/// Graphviz rendering: black vertices, gray and white terminal spots,
/// edges along line orientation.
std::string to_dot(const DiagGraph& g, std::string_view name = "G");

/// {"vertices": [{"in": [...], "out": [...]}], "edges": [{"out", "in"}],
///  "dangling_in": [...], "dangling_out": [...]}
nlohmann::json to_json(const DiagGraph& g);
/// Throws GraphError when the structure is invalid or the dangling lists do
/// not match the edges.
DiagGraph graph_from_json(const nlohmann::json& j);

}  // namespace ladder
