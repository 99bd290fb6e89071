#pragma once

#include <vector>

#include "ccq/topo2d.hpp"

namespace ccq {

struct Partition {
  std::vector<std::vector<int>> blocks;  // 1-based query indices; blocks ordered by their smallest index
  int component_count = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Replaces every apparent node by the two strands crossing there:
/// with left neighbours L_low < L_up and right neighbours R_low < R_up (by
/// ordinate), the node and its four edges give way to {L_low, R_up} and
/// {L_up, R_low}. Around the node the four half-branches appear in the cyclic
/// order L_low, L_up, R_up, R_low (no tangent is vertical), and each strand
/// joins a half-branch to the one after next, which forces this pairing.
/// A node with no neighbours is the image of a pair of complex conjugate
/// points and is dropped. Vertices are renumbered in their original order;
/// v_app of the result is empty. Error(GenericityViolation) for any other
/// neighbour configuration.
TopologyGraph node_resolution(const TopologyGraph& G);

/// component[id] = smallest vertex id of the component containing id.
std::vector<int> connected_components(const TopologyGraph& G);

/// Groups the control vertices (queries in x1 order) by component.
Partition answer_queries(const TopologyGraph& G_resolved);

}  // namespace ccq
