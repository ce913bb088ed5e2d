#include "tropjac/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "tropjac/error.hpp"

namespace tropjac {

namespace {

const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ValidationError, where + " is missing \"" + key + "\"");
  return *it;
}

std::string string_member(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_string()) throw Error(ErrorCode::ValidationError, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

MetricGraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ValidationError, "graph file must hold a JSON object");
  const auto& vs = member(doc, "vertices", "graph");
  const auto& es = member(doc, "edges", "graph");
  if (!vs.is_array() || !es.is_array())
    throw Error(ErrorCode::ValidationError, "\"vertices\" and \"edges\" must be arrays");

  std::vector<VertexId> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw Error(ErrorCode::ValidationError, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  std::map<EdgeId, Scalar> lengths;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    std::string where = "edge #" + std::to_string(i + 1);
    if (!e.is_object()) throw Error(ErrorCode::ValidationError, where + " must be an object");
    Edge edge{string_member(e, "id", where), string_member(e, "tail", where), string_member(e, "head", where)};
    Scalar len(1);
    if (auto it = e.find("length"); it != e.end()) {
      if (it->is_number_integer())
        len = Scalar(Rational(it->get<long>()));
      else if (it->is_string())
        len = parse_scalar(it->get<std::string>());
      else
        throw Error(ErrorCode::ValidationError,
                    where + ": length must be an exact fraction or expression string, not a float");
    }
    if (!lengths.emplace(edge.id, len).second)
      throw Error(ErrorCode::ValidationError, "duplicate edge id '" + edge.id + "'");
    edges.push_back(std::move(edge));
  }
  MetricGraph g;
  g.graph = MultiGraph(std::move(vertices), std::move(edges));
  g.lengths = LengthAssignment(g.graph, std::move(lengths));
  return g;
}

MetricGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

nlohmann::ordered_json graph_to_json(const MetricGraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = g.graph.vertices();
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.graph.edges())
    out["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"length", to_string(g.lengths[e.id])}});
  return out;
}

}  // namespace tropjac
