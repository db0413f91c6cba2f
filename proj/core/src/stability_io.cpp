#include "jchi/stability_io.hpp"

#include "jchi/graph_io.hpp"
#include "json_detail.hpp"

namespace jchi {

using nlohmann::json;

namespace {

std::int64_t degree_of(const json& doc, const char* what) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.at("degree").is_number_integer()) {
    throw InvalidInput(std::string(what) + ": \"degree\" must be an integer");
  }
  return doc.at("degree").get<std::int64_t>();
}

}  // namespace

std::string stability_to_json(const StabilityCondition& sigma) {
  json entries = json::array();
  for (const auto& [sub, mds] : sigma.sigma) {
    json list = json::array();
    for (const Multidegree& md : mds) list.push_back(md);
    entries.push_back({{"subgraph", sub.indices()}, {"multidegrees", list}});
  }
  return json{{"degree", sigma.degree}, {"graph", detail::graph_json(sigma.host)}, {"sigma", entries}}.dump();
}

StabilityCondition stability_from_json(std::string_view text) {
  const json doc = detail::parse_json(text, "stability file");
  StabilityCondition out;
  out.degree = degree_of(doc, "stability file");
  if (!doc.contains("graph")) throw InvalidInput("stability file is missing \"graph\"");
  // Γ_S from push_stability may be unstable; it must still be connected
  out.host = detail::graph_from_json_value(doc.at("graph"), false);
  if (!out.host.is_connected()) throw InvalidInput("stability file: graph is not connected");
  if (!doc.contains("sigma") || !doc.at("sigma").is_array()) {
    throw InvalidInput("stability file: \"sigma\" must be an array");
  }
  const int ne = out.host.num_edges();
  const int nv = out.host.num_vertices();
  for (const json& entry : doc.at("sigma")) {
    if (!entry.is_object() || !entry.contains("subgraph") || !entry.contains("multidegrees")) {
      throw InvalidInput("stability file: each entry needs \"subgraph\" and \"multidegrees\"");
    }
    std::vector<int> idx;
    try {
      idx = entry.at("subgraph").get<std::vector<int>>();
    } catch (const json::exception&) {
      throw InvalidInput("stability file: subgraph must be a list of edge indices");
    }
    for (int i : idx) {
      if (i < 0 || i >= ne) throw InvalidInput("stability file: edge index " + std::to_string(i) + " out of range");
    }
    const EdgeSubset sub = EdgeSubset::of(idx);
    if (out.sigma.count(sub)) throw InvalidInput("stability file: duplicate subgraph entry");
    std::vector<Multidegree> mds;
    try {
      mds = entry.at("multidegrees").get<std::vector<Multidegree>>();
    } catch (const json::exception&) {
      throw InvalidInput("stability file: multidegrees must be integer lists");
    }
    for (const Multidegree& md : mds) {
      if (static_cast<int>(md.size()) != nv) {
        throw InvalidInput("stability file: multidegree length differs from vertex count");
      }
    }
    std::sort(mds.begin(), mds.end());
    out.sigma.emplace(sub, std::move(mds));
  }
  return out;
}

StabilityCondition load_stability_file(const std::filesystem::path& path) {
  return stability_from_json(read_text_file(path));
}

std::string polarization_to_json(const PolarizationFile& pol) {
  json phi = json::array();
  for (const Rational& r : pol.phi) phi.push_back(r.to_string());
  return json{{"degree", pol.degree}, {"phi", phi}}.dump();
}

PolarizationFile polarization_from_json(std::string_view text) {
  const json doc = detail::parse_json(text, "polarization file");
  PolarizationFile out;
  out.degree = degree_of(doc, "polarization file");
  if (!doc.contains("phi") || !doc.at("phi").is_array()) {
    throw InvalidInput("polarization file: \"phi\" must be an array");
  }
  for (const json& v : doc.at("phi")) {
    if (v.is_string()) {
      out.phi.push_back(Rational::parse(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.phi.emplace_back(v.get<long long>());
    } else {
      throw InvalidInput("polarization file: φ entries must be strings like \"1/3\" or integers");
    }
  }
  return out;
}

PolarizationFile load_polarization_file(const std::filesystem::path& path) {
  return polarization_from_json(read_text_file(path));
}

}  // namespace jchi
