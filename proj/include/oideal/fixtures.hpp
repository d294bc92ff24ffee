#ifndef OIDEAL_FIXTURES_HPP
#define OIDEAL_FIXTURES_HPP

#include <string_view>
#include <vector>

#include "oideal/graph.hpp"

namespace oideal {

/// Built-in graphs: example1, example2, eleven-vertex, d1, d2, d3, d4.
WeightedOrientedGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace oideal

#endif
