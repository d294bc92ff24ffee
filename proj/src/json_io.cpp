#include "oideal/json_io.hpp"

#include <fstream>

namespace oideal {

using nlohmann::json;

WeightedOrientedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail(errc::parse_error, "graph JSON needs \"vertices\" and \"edges\"");
  std::vector<VertexSpec> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("name") || !v.contains("weight"))
      fail(errc::parse_error, "each vertex needs \"name\" and \"weight\"");
    if (!v.at("weight").is_number_integer())
      fail(errc::parse_error, "vertex weights must be integers");
    vertices.push_back({v.at("name").get<std::string>(), v.at("weight").get<long long>()});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      fail(errc::parse_error, "each edge must be a [tail, head] pair");
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return WeightedOrientedGraph::build(vertices, edges);
}

WeightedOrientedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const WeightedOrientedGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.size(); ++v)
    vertices.push_back({{"name", g.name(v)}, {"weight", g.weight(v)}});
  json edges = json::array();
  for (auto [t, h] : g.edges()) edges.push_back({g.name(t), g.name(h)});
  return {{"vertices", vertices}, {"edges", edges}};
}

json vertex_set_to_json(const WeightedOrientedGraph& g, Mask m) {
  json arr = json::array();
  for (int v : mask_to_indices(m)) arr.push_back(g.name(v));
  return arr;
}

json cover_to_json(const WeightedOrientedGraph& g, const CoverAnalysis& a) {
  json witness = json::object();
  for (auto [x, y] : a.strong_witness) witness[g.name(x)] = g.name(y);
  return {{"cover", vertex_set_to_json(g, a.cover)}, {"l1", vertex_set_to_json(g, a.l1)},
          {"l2", vertex_set_to_json(g, a.l2)},       {"l3", vertex_set_to_json(g, a.l3)},
          {"minimal", a.is_minimal},                 {"strong", a.is_strong},
          {"witness", witness}};
}

json decomposition_to_json(const WeightedOrientedGraph& g, const DecompositionReport& report) {
  json components = json::array();
  for (const auto& [cover, q] : report.components)
    components.push_back({{"cover", vertex_set_to_json(g, cover.cover)},
                          {"ideal", render_component(q, g.names())},
                          {"L1", vertex_set_to_json(g, cover.l1)},
                          {"L2", vertex_set_to_json(g, cover.l2)},
                          {"L3", vertex_set_to_json(g, cover.l3)}});
  json ass = json::array();
  for (Mask p : report.associated_primes) ass.push_back(vertex_set_to_json(g, p));
  json out{{"edge_ideal", render_ideal_cas(report.edge_ideal, g.names())},
           {"components", components},
           {"ass", ass}};
  if (report.verified) out["verified"] = *report.verified;
  return out;
}

json unmixed_to_json(const WeightedOrientedGraph& g, const UnmixedReport& r, bool minimal_strong) {
  json out{{"unmixed", r.unmixed},
           {"minimal_strong", minimal_strong},
           {"criteria",
            {{"strong_cardinality", r.criterion_strong_cardinality},
             {"graph_unmixed_and_l3", r.criterion_graph_unmixed_and_l3},
             {"minimal_strong_and_g", r.criterion_minimal_strong_and_g}}},
           {"agreement", r.agreement}};
  if (r.size_mismatch)
    out["certificate"] = {{"covers_of_different_size",
                           {vertex_set_to_json(g, r.size_mismatch->first),
                            vertex_set_to_json(g, r.size_mismatch->second)}}};
  else if (r.nonminimal_strong_cover)
    out["certificate"] = {
        {"nonminimal_strong_cover", vertex_set_to_json(g, *r.nonminimal_strong_cover)}};
  return out;
}

json characterization_to_json(const CharacterizationResult& r) {
  return {{"applicable", r.applicable},
          {"verdict", r.verdict},
          {"clause", r.clause},
          {"witness", r.witness}};
}

}  // namespace oideal
