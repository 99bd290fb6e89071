#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccq/topo2d.hpp"

namespace ccq {

/// Vertex coordinates as doubles: abscissas refined to width 1e-6, ordinates
/// taken at the middle of their boxes.
std::vector<std::pair<double, double>> vertex_coordinates(const TopologyGraph& G);

/// Graphviz text; every vertex carries kind, x, y and a pinned pos.
std::string to_dot(const TopologyGraph& G, const std::string& name = "topology");

/// Standalone SVG drawing of the straight-line embedding.
std::string to_svg(const TopologyGraph& G, const std::string& title = "topology");

}  // namespace ccq
