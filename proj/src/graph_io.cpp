#include "sfg/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sfg/errors.hpp"

namespace sfg {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line, or false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("edge list line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

template <typename... Ts>
bool parse_fields(const std::string& line, Ts&... fields) {
  std::istringstream ss(line);
  (ss >> ... >> fields);
  if (!ss) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ';
  if (g.tag()) {
    out << to_string(g.tag()->model) << ' ' << g.tag()->level << '\n';
  } else {
    out << "none 0\n";
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_string(e.kind) << '\n';
  out << "#meta\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ' ' << to_string(g.meta(v).role) << ' ' << g.meta(v).created_at << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("missing header");

  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::string model_text;
  int level = 0;
  if (!parse_fields(line, vertex_count, edge_count, model_text, level)) {
    reader.fail("expected header 'N E model n'");
  }
  std::optional<GraphTag> tag;
  if (model_text != "none") {
    const auto model = parse_model(model_text);
    if (!model) reader.fail("unknown model '" + model_text + "'");
    if (level < 0) reader.fail("negative level");
    tag = GraphTag{*model, level};
  }

  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(edge_count) + " edges");
    VertexId u = 0;
    VertexId v = 0;
    std::string kind;
    if (!parse_fields(line, u, v, kind) || (kind != "I" && kind != "N")) {
      reader.fail("expected 'u v I|N'");
    }
    edges.push_back({u, v, kind == "I" ? EdgeKind::Iterative : EdgeKind::NonIterative});
  }

  std::vector<VertexMeta> meta(vertex_count);
  if (reader.next(line)) {
    if (line.rfind("#meta", 0) != 0) reader.fail("expected #meta or end of input");
    std::vector<bool> seen(vertex_count, false);
    for (std::size_t i = 0; i < vertex_count; ++i) {
      if (!reader.next(line)) reader.fail("metadata block shorter than vertex count");
      VertexId id = 0;
      std::string role_text;
      int created_at = 0;
      if (!parse_fields(line, id, role_text, created_at)) {
        reader.fail("expected 'id role created_at'");
      }
      const auto role = parse_role(role_text);
      if (!role) reader.fail("unknown role '" + role_text + "'");
      if (id >= vertex_count || seen[id]) reader.fail("bad or repeated vertex id in metadata");
      seen[id] = true;
      meta[id] = {*role, created_at};
    }
    if (reader.next(line)) reader.fail("trailing content after metadata");
  }

  try {
    return Graph(vertex_count, std::move(edges), std::move(meta), tag);
  } catch (const UsageError& e) {
    throw FormatError(std::string("edge list describes an invalid graph: ") + e.what());
  }
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  if (g.tag()) out << "  // " << to_string(g.tag()->model) << " n=" << g.tag()->level << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& m = g.meta(v);
    out << "  " << v << " [role=" << to_string(m.role) << ", created_at=" << m.created_at;
    if (m.role != Role::Ordinary) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [style="
        << (e.kind == EdgeKind::Iterative ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  if (g.tag()) {
    j["model"] = to_string(g.tag()->model);
    j["n"] = g.tag()->level;
  } else {
    j["model"] = nullptr;
    j["n"] = nullptr;
  }
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, to_string(e.kind)});
  auto& meta = j["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    meta.push_back({{"id", v},
                    {"role", to_string(g.meta(v).role)},
                    {"created_at", g.meta(v).created_at},
                    {"degree", g.degree(v)}});
  }
  return j;
}

}  // namespace sfg
