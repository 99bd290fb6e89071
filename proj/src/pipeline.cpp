#include "ccq/pipeline.hpp"

#include "ccq/error.hpp"

namespace ccq {

void require_valid(const OneDimParam& C, const std::optional<ZeroDimParam>& P) {
  std::string msg;
  for (const auto& v : validate_one_dim(C).violations) msg += (msg.empty() ? "" : "; ") + ("curve " + v.code + ": " + v.detail);
  if (P) {
    for (const auto& v : validate_zero_dim(*P).violations) {
      msg += (msg.empty() ? "" : "; ") + ("queries " + v.code + ": " + v.detail);
    }
    if (P->n != C.n) msg += (msg.empty() ? "" : "; ") + std::string("queries DimensionMismatch: n differs from the curve");
  }
  if (!msg.empty()) throw Error(ErrorCode::InvalidInput, msg);
}

PipelineResult run_pipeline(const OneDimParam& C, const std::optional<ZeroDimParam>& P, const Rational& eps) {
  require_valid(C, P);
  PipelineResult out;
  out.app = apparent_singularities(C);
  out.checks = genericity_report(C, P, out.app);
  if (const auto* bad = first_failure(out.checks)) {
    throw Error(ErrorCode::GenericityViolation, bad->name + ": " + bad->detail);
  }
  out.graph = topo2d(C, P, out.app, eps);
  out.resolved = node_resolution(out.graph);
  out.partition = answer_queries(out.resolved);
  return out;
}

}  // namespace ccq
