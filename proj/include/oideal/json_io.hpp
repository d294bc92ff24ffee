#ifndef OIDEAL_JSON_IO_HPP
#define OIDEAL_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "oideal/decomposition.hpp"
#include "oideal/graph.hpp"
#include "oideal/unmixed.hpp"

namespace oideal {

/// Graph JSON: {"vertices":[{"name":"x1","weight":3},...],"edges":[["x2","x1"],...]}
WeightedOrientedGraph graph_from_json(const nlohmann::json& j);
WeightedOrientedGraph load_graph(const std::string& path);
nlohmann::json graph_to_json(const WeightedOrientedGraph& g);

nlohmann::json vertex_set_to_json(const WeightedOrientedGraph& g, Mask m);
nlohmann::json decomposition_to_json(const WeightedOrientedGraph& g,
                                     const DecompositionReport& report);
nlohmann::json cover_to_json(const WeightedOrientedGraph& g, const CoverAnalysis& a);
nlohmann::json unmixed_to_json(const WeightedOrientedGraph& g, const UnmixedReport& r,
                               bool minimal_strong);
nlohmann::json characterization_to_json(const CharacterizationResult& r);

}  // namespace oideal

#endif
