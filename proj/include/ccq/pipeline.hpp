#pragma once

#include <optional>
#include <vector>

#include "ccq/apparent.hpp"
#include "ccq/connect.hpp"
#include "ccq/genericity.hpp"
#include "ccq/params.hpp"
#include "ccq/topo2d.hpp"

namespace ccq {

struct PipelineResult {
  ApparentResult app;
  std::vector<GenericityCheck> checks;
  TopologyGraph graph;     // before node resolution
  TopologyGraph resolved;  // after node resolution
  Partition partition;
};

/// Throws Error(InvalidInput) listing the violated invariants, if any.
void require_valid(const OneDimParam& C, const std::optional<ZeroDimParam>& P);

/// Full connectivity query: validation, apparent singularities, genericity
/// checks (the first failing one is raised as GenericityViolation), topology
/// graph, node resolution and the query partition.
PipelineResult run_pipeline(const OneDimParam& C, const std::optional<ZeroDimParam>& P,
                            const Rational& eps = Rational(1, 1 << 20));

}  // namespace ccq
