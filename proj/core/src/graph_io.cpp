#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ladder/graph.hpp"

namespace ladder {
namespace {

// Unsigned LEB128.
void put_varint(std::string& out, std::uint64_t value) {
  do {
    auto byte = static_cast<std::uint8_t>(value & 0x7FU);
    value >>= 7U;
    if (value != 0) byte |= 0x80U;
    out.push_back(static_cast<char>(byte));
  } while (value != 0);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t varint() {
    std::uint64_t value = 0;
    for (unsigned shift = 0; shift < 64; shift += 7) {
      if (pos_ >= bytes_.size()) throw GraphError("truncated graph encoding");
      const auto byte = static_cast<std::uint8_t>(bytes_[pos_++]);
      value |= std::uint64_t{byte & 0x7FU} << shift;
      if ((byte & 0x80U) == 0) return value;
    }
    throw GraphError("varint too long in graph encoding");
  }

  PortId label() {
    const std::uint64_t v = varint();
    if (v > UINT32_MAX) throw GraphError("port label out of range");
    return static_cast<PortId>(v);
  }

  // Bounds a length prefix by the bytes left, so garbage cannot request
  // huge allocations.
  std::size_t count() {
    const std::uint64_t v = varint();
    if (v > bytes_.size() - pos_) throw GraphError("length prefix exceeds encoding size");
    return static_cast<std::size_t>(v);
  }

  char byte() {
    if (pos_ >= bytes_.size()) throw GraphError("truncated graph encoding");
    return bytes_[pos_++];
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::vector<PortId> label_list(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw GraphError(std::string("missing array field '") + field + "'");
  }
  std::vector<PortId> out;
  for (const auto& x : j[field]) {
    if (!x.is_number_unsigned()) throw GraphError("port labels must be unsigned integers");
    out.push_back(x.get<PortId>());
  }
  return out;
}

}  // namespace

// Layout: 'G', vertex count, per vertex (in count, in labels, out count,
// out labels), edge count, per edge (out, in). Dangling lists are implied.
std::string canonical_encode(const DiagGraph& g) {
  std::string out(1, 'G');
  put_varint(out, g.vertices().size());
  for (const Vertex& v : g.vertices()) {
    put_varint(out, v.in_ports.size());
    for (PortId p : v.in_ports) put_varint(out, p);
    put_varint(out, v.out_ports.size());
    for (PortId p : v.out_ports) put_varint(out, p);
  }
  put_varint(out, g.edges().size());
  for (const Edge& e : g.edges()) {
    put_varint(out, e.out);
    put_varint(out, e.in);
  }
  return out;
}

DiagGraph canonical_decode(std::string_view bytes) {
  Reader in(bytes);
  if (in.byte() != 'G') throw GraphError("bad graph encoding magic");
  std::vector<Vertex> vertices(in.count());
  for (Vertex& v : vertices) {
    v.in_ports.resize(in.count());
    for (PortId& p : v.in_ports) p = in.label();
    v.out_ports.resize(in.count());
    for (PortId& p : v.out_ports) p = in.label();
  }
  std::vector<Edge> edges(in.count());
  for (Edge& e : edges) {
    e.out = in.label();
    e.in = in.label();
  }
  if (!in.done()) throw GraphError("trailing bytes after graph encoding");
  DiagGraph g = DiagGraph::from_parts(std::move(vertices), std::move(edges));
  if (canonical_encode(g) != bytes) throw GraphError("graph encoding is not canonical");
  return g;
}

std::string to_dot(const DiagGraph& g, std::string_view name) {
  std::unordered_map<PortId, std::size_t> owner;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    for (PortId p : g.vertices()[v].in_ports) owner[p] = v;
    for (PortId p : g.vertices()[v].out_ports) owner[p] = v;
  }

  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=RL;\n";
  os << "  node [label=\"\", fixedsize=true];\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    os << "  v" << v << " [shape=circle, style=filled, fillcolor=black, width=0.18];\n";
  }
  for (PortId p : g.dangling_in()) {
    os << "  p" << p << " [shape=circle, style=filled, fillcolor=gray, width=0.12];\n";
    os << "  p" << p << " -> v" << owner.at(p) << " [headlabel=\"" << p << "\"];\n";
  }
  for (PortId p : g.dangling_out()) {
    os << "  p" << p << " [shape=circle, style=filled, fillcolor=white, width=0.12];\n";
    os << "  v" << owner.at(p) << " -> p" << p << " [taillabel=\"" << p << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  v" << owner.at(e.out) << " -> v" << owner.at(e.in) << " [taillabel=\"" << e.out
       << "\", headlabel=\"" << e.in << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const DiagGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vertex& v : g.vertices()) {
    vertices.push_back({{"in", v.in_ports}, {"out", v.out_ports}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"out", e.out}, {"in", e.in}});
  return {{"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"dangling_in", g.dangling_in()},
          {"dangling_out", g.dangling_out()}};
}

DiagGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      !j.contains("edges") || !j["edges"].is_array()) {
    throw GraphError("graph JSON needs 'vertices' and 'edges' arrays");
  }
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object()) throw GraphError("vertex must be an object");
    vertices.push_back({label_list(v, "in"), label_list(v, "out")});
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("out") || !e.contains("in") ||
        !e["out"].is_number_unsigned() || !e["in"].is_number_unsigned()) {
      throw GraphError("edge must be {\"out\": uint, \"in\": uint}");
    }
    edges.push_back({e["out"].get<PortId>(), e["in"].get<PortId>()});
  }
  DiagGraph g = DiagGraph::from_parts(std::move(vertices), std::move(edges));
  if (j.contains("dangling_in")) {
    auto listed = label_list(j, "dangling_in");
    std::sort(listed.begin(), listed.end());
    if (listed != g.dangling_in()) throw GraphError("dangling_in does not match edges");
  }
  if (j.contains("dangling_out")) {
    auto listed = label_list(j, "dangling_out");
    std::sort(listed.begin(), listed.end());
    if (listed != g.dangling_out()) throw GraphError("dangling_out does not match edges");
  }
  return g;
}

}  // namespace ladder
