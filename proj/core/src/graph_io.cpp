#include "jchi/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "json_detail.hpp"

namespace jchi {
namespace detail {

using nlohmann::json;

json graph_json(const StableGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back({{"genus", g.genus(v)}});
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json legs = json::array();
  for (int k = 1; k <= g.num_legs(); ++k) legs.push_back({{"vertex", g.leg_vertex(k)}, {"label", k}});
  return {{"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": malformed JSON: " + e.what());
  }
}

namespace {

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InvalidInput(where + " must be an integer");
  return v.get<int>();
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(where + " is missing \"" + key + "\"");
  }
  return obj.at(key);
}

}  // namespace

StableGraph graph_from_json_value(const json& doc, bool require_stable) {
  const json& vertices = member(doc, "vertices", "graph");
  const json& edges = member(doc, "edges", "graph");
  const json& legs = doc.contains("legs") ? doc.at("legs") : json::array();
  if (!vertices.is_array() || !edges.is_array() || !legs.is_array()) {
    throw InvalidInput("graph: vertices, edges and legs must be arrays");
  }

  std::vector<int> genera;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int g = as_int(member(vertices[i], "genus", "vertex " + std::to_string(i)),
                         "genus of vertex " + std::to_string(i));
    if (g < 0) throw InvalidInput("vertex " + std::to_string(i) + " has negative genus");
    genera.push_back(g);
  }
  const int nv = static_cast<int>(genera.size());
  auto check_vertex = [nv](int v, const std::string& where) {
    if (v < 0 || v >= nv) throw InvalidInput(where + " refers to nonexistent vertex " + std::to_string(v));
  };

  std::vector<Edge> edge_list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    if (!edges[i].is_array() || edges[i].size() != 2) throw InvalidInput(where + " must be [u, v]");
    const Edge e{as_int(edges[i][0], where), as_int(edges[i][1], where)};
    check_vertex(e.u, where);
    check_vertex(e.v, where);
    edge_list.push_back(e);
  }

  std::vector<int> leg_vertices(legs.size(), -1);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const std::string where = "leg " + std::to_string(i);
    const int v = as_int(member(legs[i], "vertex", where), where + " vertex");
    const int label = as_int(member(legs[i], "label", where), where + " label");
    check_vertex(v, where);
    if (label < 1 || label > static_cast<int>(legs.size())) {
      throw InvalidInput("leg labels must be exactly {1..n}: label " + std::to_string(label) +
                         " out of range");
    }
    if (leg_vertices[label - 1] != -1) {
      throw InvalidInput("leg labels must be exactly {1..n}: label " + std::to_string(label) +
                         " repeated");
    }
    leg_vertices[label - 1] = v;
  }

  StableGraph g(std::move(genera), std::move(edge_list), std::move(leg_vertices));
  if (require_stable) g.validate();
  return g;
}

}  // namespace detail

std::string graph_to_json(const StableGraph& g) { return detail::graph_json(g).dump(); }

StableGraph graph_from_json(std::string_view text, bool require_stable) {
  return detail::graph_from_json_value(detail::parse_json(text, "graph"), require_stable);
}

StableGraph load_graph_file(const std::filesystem::path& path, bool require_stable) {
  return graph_from_json(read_text_file(path), require_stable);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace jchi
