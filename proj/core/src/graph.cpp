#include "ladder/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace ladder {
namespace {

struct PortInfo {
  std::size_t vertex;
  bool is_in;
};

std::unordered_map<PortId, PortInfo> index_ports(const std::vector<Vertex>& vertices) {
  std::unordered_map<PortId, PortInfo> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (PortId p : vertices[v].in_ports) {
      if (!index.emplace(p, PortInfo{v, true}).second) {
        throw GraphError("duplicate port label " + std::to_string(p));
      }
    }
    for (PortId p : vertices[v].out_ports) {
      if (!index.emplace(p, PortInfo{v, false}).second) {
        throw GraphError("duplicate port label " + std::to_string(p));
      }
    }
  }
  return index;
}

bool acyclic(std::size_t vertex_count, const std::vector<Edge>& edges,
             const std::unordered_map<PortId, PortInfo>& ports) {
  std::vector<std::vector<std::size_t>> successors(vertex_count);
  std::vector<std::size_t> indegree(vertex_count, 0);
  for (const Edge& e : edges) {
    const std::size_t from = ports.at(e.out).vertex;
    const std::size_t to = ports.at(e.in).vertex;
    successors[from].push_back(to);
    ++indegree[to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t w : successors[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited == vertex_count;
}

PortId max_label_plus_one(const std::vector<Vertex>& vertices) {
  PortId next = 0;
  for (const Vertex& v : vertices) {
    for (PortId p : v.in_ports) next = std::max(next, p + 1);
    for (PortId p : v.out_ports) next = std::max(next, p + 1);
  }
  return next;
}

void shift(std::vector<PortId>& labels, PortId offset) {
  for (PortId& p : labels) p += offset;
}

}  // namespace

DiagGraph DiagGraph::from_parts(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  for (Vertex& v : vertices) {
    std::sort(v.in_ports.begin(), v.in_ports.end());
    std::sort(v.out_ports.begin(), v.out_ports.end());
  }
  const auto ports = index_ports(vertices);

  std::sort(edges.begin(), edges.end());
  std::unordered_map<PortId, bool> used;
  for (const Edge& e : edges) {
    auto out = ports.find(e.out);
    auto in = ports.find(e.in);
    if (out == ports.end() || in == ports.end()) {
      throw GraphError("edge refers to a missing port");
    }
    if (out->second.is_in || !in->second.is_in) {
      throw GraphError("edge must run from an out-port to an in-port");
    }
    if (!used.emplace(e.out, true).second || !used.emplace(e.in, true).second) {
      throw GraphError("port used by more than one edge");
    }
  }
  if (!acyclic(vertices.size(), edges, ports)) throw GraphError("graph has a directed cycle");

  DiagGraph g;
  for (const Vertex& v : vertices) {
    for (PortId p : v.in_ports) {
      if (!used.contains(p)) g.dangling_in_.push_back(p);
    }
    for (PortId p : v.out_ports) {
      if (!used.contains(p)) g.dangling_out_.push_back(p);
    }
  }
  std::sort(g.dangling_in_.begin(), g.dangling_in_.end());
  std::sort(g.dangling_out_.begin(), g.dangling_out_.end());
  g.next_label_ = max_label_plus_one(vertices);
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

DiagGraph make_vertex(std::uint32_t r, std::uint32_t s) {
  DiagGraph g;
  Vertex v;
  v.out_ports.resize(r);
  std::iota(v.out_ports.begin(), v.out_ports.end(), PortId{0});
  v.in_ports.resize(s);
  std::iota(v.in_ports.begin(), v.in_ports.end(), PortId{r});
  g.dangling_out_ = v.out_ports;
  g.dangling_in_ = v.in_ports;
  g.vertices_.push_back(std::move(v));
  g.next_label_ = r + s;
  return g;
}

bool is_acyclic(const DiagGraph& g) {
  return acyclic(g.vertices().size(), g.edges(), index_ports(g.vertices()));
}

std::vector<Matching> enumerate_matchings(const std::vector<PortId>& grays,
                                          const std::vector<PortId>& whites) {
  std::vector<Matching> out;
  Matching current;
  std::vector<bool> white_used(whites.size(), false);

  auto recurse = [&](auto& self, std::size_t gray_index) -> void {
    if (gray_index == grays.size()) {
      out.push_back(current);
      return;
    }
    self(self, gray_index + 1);
    for (std::size_t w = 0; w < whites.size(); ++w) {
      if (white_used[w]) continue;
      white_used[w] = true;
      current.push_back({grays[gray_index], whites[w]});
      self(self, gray_index + 1);
      current.pop_back();
      white_used[w] = false;
    }
  };
  recurse(recurse, 0);

  for (Matching& m : out) std::sort(m.begin(), m.end());
  std::sort(out.begin(), out.end(), [](const Matching& x, const Matching& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

DiagGraph compose(const DiagGraph& g1, const DiagGraph& g2, const Matching& matching) {
  const PortId offset = g1.next_label();

  std::vector<PortId> grays;
  std::vector<PortId> whites;
  for (const Join& j : matching) {
    grays.push_back(j.gray);
    whites.push_back(j.white);
  }
  std::sort(grays.begin(), grays.end());
  std::sort(whites.begin(), whites.end());
  if (std::adjacent_find(grays.begin(), grays.end()) != grays.end() ||
      std::adjacent_find(whites.begin(), whites.end()) != whites.end()) {
    throw GraphError("matching reuses a port");
  }
  if (!std::includes(g1.dangling_in().begin(), g1.dangling_in().end(), grays.begin(),
                     grays.end())) {
    throw GraphError("matching joins a port that is not a gray spot of the left factor");
  }
  if (!std::includes(g2.dangling_out().begin(), g2.dangling_out().end(), whites.begin(),
                     whites.end())) {
    throw GraphError("matching joins a port that is not a white spot of the right factor");
  }

  DiagGraph out;
  out.vertices_ = g1.vertices_;
  out.vertices_.reserve(g1.vertices_.size() + g2.vertices_.size());
  for (Vertex v : g2.vertices_) {
    shift(v.in_ports, offset);
    shift(v.out_ports, offset);
    out.vertices_.push_back(std::move(v));
  }

  out.edges_ = g1.edges_;
  for (const Edge& e : g2.edges_) out.edges_.push_back({e.out + offset, e.in + offset});
  for (const Join& j : matching) out.edges_.push_back({j.white + offset, j.gray});
  std::sort(out.edges_.begin(), out.edges_.end());

  std::set_difference(g1.dangling_in_.begin(), g1.dangling_in_.end(), grays.begin(), grays.end(),
                      std::back_inserter(out.dangling_in_));
  for (PortId p : g2.dangling_in_) out.dangling_in_.push_back(p + offset);

  out.dangling_out_ = g1.dangling_out_;
  std::vector<PortId> kept_whites;
  std::set_difference(g2.dangling_out_.begin(), g2.dangling_out_.end(), whites.begin(),
                      whites.end(), std::back_inserter(kept_whites));
  for (PortId p : kept_whites) out.dangling_out_.push_back(p + offset);
  // g1's labels are all below offset, so both lists stay sorted.

  out.next_label_ = offset + g2.next_label_;

  // New edges all run from g2 into g1, so no cycle can appear.
  assert(is_acyclic(out));
  return out;
}

std::vector<DiagGraph> enumerate_compositions(const DiagGraph& g1, const DiagGraph& g2) {
  std::vector<DiagGraph> out;
  for (const Matching& m : enumerate_matchings(g1.dangling_in(), g2.dangling_out())) {
    out.push_back(compose(g1, g2, m));
  }
  return out;
}

NormalMonomial project(const DiagGraph& g) {
  return {static_cast<std::uint32_t>(g.dangling_out().size()),
          static_cast<std::uint32_t>(g.dangling_in().size())};
}

BuildError::BuildError(std::size_t step, const std::string& what)
    : GraphError("build step " + std::to_string(step) + ": " + what), step_(step) {}

DiagGraph build_iteratively(const std::vector<BuildStep>& steps) {
  DiagGraph current;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const BuildStep& step = steps[i];
    const DiagGraph vertex = make_vertex(step.r, step.s);
    auto matchings = enumerate_matchings(current.dangling_in(), vertex.dangling_out());
    if (step.matching >= matchings.size()) {
      throw BuildError(i, "matching index " + std::to_string(step.matching) + " out of range (" +
                              std::to_string(matchings.size()) + " matchings)");
    }
    current = compose(current, vertex, matchings[step.matching]);
  }
  return current;
}

}  // namespace ladder
