#include "oideal/fixtures.hpp"

namespace oideal {

namespace {

WeightedOrientedGraph make(std::vector<long long> weights,
                           std::vector<std::pair<int, int>> edges) {
  for (auto& [t, h] : edges) {
    --t;  // 1-based in the tables below
    --h;
  }
  return WeightedOrientedGraph::build_indexed(weights, edges);
}

}  // namespace

WeightedOrientedGraph fixture(std::string_view name) {
  if (name == "example1")
    return make({3, 4, 5, 2, 2}, {{2, 1}, {3, 2}, {4, 3}, {3, 5}, {5, 4}});
  if (name == "example2")
    return make({1, 2, 5, 7}, {{1, 2}, {2, 3}, {3, 4}});
  if (name == "eleven-vertex")
    return make({2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1},
                {{4, 1},  {8, 1},  {5, 1},  {9, 1},          // into x1
                 {10, 2}, {5, 2},  {11, 2}, {8, 2}, {6, 2},  // into x2
                 {7, 3},  {10, 3}, {6, 3},  {9, 3},          // into x3
                 {4, 8},  {7, 4},  {4, 11},
                 {10, 5}, {11, 5}, {9, 5},
                 {9, 6},  {6, 8},  {6, 11},
                 {10, 7}, {11, 7},
                 {11, 9}});
  // Exceptional 5-cycles; weight 2 stands for "weight != 1" and the edges the
  // source figures leave unoriented get a fixed orientation.
  if (name == "d1") return make({1, 1, 2, 1, 2}, {{2, 1}, {5, 1}, {4, 5}, {4, 3}, {3, 2}});
  if (name == "d2") return make({2, 2, 1, 1, 1}, {{1, 5}, {2, 1}, {3, 2}, {5, 4}, {4, 3}});
  if (name == "d3") return make({1, 1, 2, 2, 2}, {{1, 5}, {5, 4}, {4, 3}, {2, 1}, {3, 2}});
  if (name == "d4") return make({1, 2, 2, 1, 2}, {{1, 2}, {2, 3}, {4, 3}, {4, 5}, {5, 1}});
  fail(errc::unknown_vertex, "unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"example1", "example2", "eleven-vertex", "d1", "d2", "d3", "d4"};
}

}  // namespace oideal
