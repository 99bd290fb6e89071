#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccq/apparent.hpp"
#include "ccq/interval.hpp"
#include "ccq/params.hpp"
#include "ccq/realroot.hpp"

namespace ccq {

enum class VertexKind { regular, x_critical, apparent_node, control };

std::string to_string(VertexKind k);

struct Vertex {
  int id = 0;
  int fiber = 0;   // index into TopologyGraph::fibers
  VertexKind kind = VertexKind::regular;
  Interval y;      // ordinate enclosure, a point when the ordinate is rational
  std::optional<AlgebraicNumber> y_exact;  // set on rational fibers
};

struct Fiber {
  AlgebraicNumber x;
  bool special = false;  // root of R* * lambda; otherwise a rational sample
  std::vector<int> vertices;  // ids by increasing ordinate
};

/// Straight-line graph of the plane projection. Fibers are ordered by
/// abscissa and alternate sample, special, sample, ..., sample; with no special
/// abscissa there is a single sample fiber. Vertex ids follow fiber order,
/// then ordinate. Edges are stored as (a, b) with a < b, sorted.
struct TopologyGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Fiber> fibers;
  std::vector<int> v_app;   // one per real root of q_app, by abscissa
  std::vector<int> v_ctrl;  // one per real root of lambda, by abscissa

  const Vertex& vertex(int id) const { return vertices[static_cast<std::size_t>(id)]; }
  const AlgebraicNumber& x_of(int id) const { return fibers[static_cast<std::size_t>(vertex(id).fiber)].x; }
  std::vector<int> neighbors(int id) const;
};

/// Sweep construction of the topology graph of (C2, P2). `P` may be absent
/// (no control points); only lambda and theta_2 are used. Ordinate boxes have
/// width < eps. Errors: GenericityViolation when branch counts or fibers are
/// inconsistent with generic position.
TopologyGraph topo2d(const OneDimParam& C, const std::optional<ZeroDimParam>& P, const ApparentResult& app,
                     const Rational& eps = Rational(1, 1 << 20));
TopologyGraph topo2d(const OneDimParam& C, const std::optional<ZeroDimParam>& P,
                     const Rational& eps = Rational(1, 1 << 20));

/// Vertex ids of fiber `index` by increasing ordinate; empty when out of range.
std::vector<int> fiber_of(const TopologyGraph& G, int index);

}  // namespace ccq
