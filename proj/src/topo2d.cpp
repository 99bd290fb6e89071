#include "ccq/topo2d.hpp"

#include <algorithm>

#include "ccq/error.hpp"
#include "ccq/parallel.hpp"

namespace ccq {

namespace {

struct FiberData {
  std::vector<FiberRoot> roots;
  int critical = -1;  // index of the multiple root
  int control = -1;   // index of the control ordinate
};

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::GenericityViolation, what); }

int critical_index(const std::vector<FiberRoot>& roots, const std::string& where) {
  int found = -1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].multiplicity < 2) continue;
    if (found >= 0) violation("two multiple ordinates in the fiber " + where);
    found = static_cast<int>(i);
  }
  return found;
}

// Index of the fiber root equal to theta2(beta) / lambda'(beta).
int control_index(const std::vector<FiberRoot>& roots, const AlgebraicNumber& beta, const UniPoly& theta2,
                  const UniPoly& dlambda) {
  AlgebraicNumber b = beta;
  for (int step = 0; step < 400; ++step) {
    Interval y;
    if (b.is_rational()) {
      y = Interval::point(theta2(b.rational_value()) / dlambda(b.rational_value()));
    } else {
      const Interval den = eval(dlambda, b.isol());
      if (den.contains_zero()) {
        b = refine(b, b.isol().width() / 16);
        continue;
      }
      y = eval(theta2, b.isol()) / den;
    }
    int hits = 0, last = -1;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!y.disjoint(roots[i].box)) {
        ++hits;
        last = static_cast<int>(i);
      }
    }
    if (hits == 1) return last;
    if (hits == 0) violation("a query point does not lie on the plane projection");
    if (b.is_rational()) break;
    b = refine(b, b.isol().width() / 16);
  }
  violation("cannot separate a control ordinate from the fiber roots");
}

}  // namespace

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::regular:
      return "regular";
    case VertexKind::x_critical:
      return "x_critical";
    case VertexKind::apparent_node:
      return "apparent_node";
    case VertexKind::control:
      break;
  }
  return "control";
}

std::vector<int> TopologyGraph::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> fiber_of(const TopologyGraph& G, int index) {
  if (index < 0 || index >= static_cast<int>(G.fibers.size())) return {};
  return G.fibers[static_cast<std::size_t>(index)].vertices;
}

TopologyGraph topo2d(const OneDimParam& C, const std::optional<ZeroDimParam>& P, const Rational& eps) {
  return topo2d(C, P, apparent_singularities(C), eps);
}

TopologyGraph topo2d(const OneDimParam& C, const std::optional<ZeroDimParam>& P, const ApparentResult& app,
                     const Rational& eps) {
  const BiPoly& w = C.omega;
  if (w.degree_x2() < 1 || w.leading_x2_coeff() != UniPoly::constant(1)) {
    throw Error(ErrorCode::InvalidInput, "omega must be monic in x2");
  }
  const bool has_queries = P.has_value() && P->lambda.degree() >= 1;
  UniPoly special = app.R_star.degree() >= 1 ? app.R_star : UniPoly::constant(1);
  if (has_queries) {
    if (gcd(special, P->lambda).degree() > 0) violation("a control abscissa coincides with a critical abscissa");
    special *= monic(P->lambda);
  }
  const std::vector<AlgebraicNumber> xs = special.degree() >= 1 ? isolate(special) : std::vector<AlgebraicNumber>{};
  const std::size_t N = xs.size();
  const std::vector<bool> is_app =
      app.q_app.degree() >= 1 ? common_roots(xs, app.q_app) : std::vector<bool>(N, false);
  const std::vector<bool> is_ctrl = has_queries ? common_roots(xs, P->lambda) : std::vector<bool>(N, false);
  std::optional<FirstSubresultant> hint;
  if (w.degree_x2() >= 2) hint = FirstSubresultant{app.sr1, app.sr10};

  // Abscissas in order: sample, special, sample, ..., sample.
  std::vector<Fiber> fibers;
  auto sample = [&](const Rational& lo, const Rational& hi) {
    fibers.push_back({AlgebraicNumber::rational(simplest_in(lo, hi)), false, {}});
  };
  if (N == 0) {
    sample(0, 0);
  } else {
    sample(xs[0].isol().lo - 1, xs[0].isol().lo);
    for (std::size_t i = 0; i < N; ++i) {
      fibers.push_back({xs[i], true, {}});
      sample(xs[i].isol().hi, i + 1 < N ? xs[i + 1].isol().lo : xs[i].isol().hi + 1);
    }
  }

  std::vector<FiberData> data(fibers.size());
  const UniPoly dlambda = has_queries ? derivative(P->lambda) : UniPoly{};
  parallel_for(fibers.size(), [&](std::size_t f) {
    const Fiber& fib = fibers[f];
    FiberData& d = data[f];
    if (!fib.special) {
      d.roots = fiber_roots(w, fib.x, std::nullopt, eps);
      if (critical_index(d.roots, "at a sample abscissa") >= 0) violation("multiple root at a sample abscissa");
      return;
    }
    const std::size_t i = f / 2;
    if (is_ctrl[i]) {
      d.roots = fiber_roots(w, fib.x, std::nullopt, eps);
      if (critical_index(d.roots, "of a query point") >= 0) violation("a query abscissa is critical");
      d.control = control_index(d.roots, fib.x, P->thetas[0], dlambda);
    } else {
      d.roots = fiber_roots(w, fib.x, hint, eps);
      d.critical = critical_index(d.roots, "at a critical abscissa");
      // Rational fibers may carry only complex multiple roots; they sweep like regular ones.
      if (d.critical < 0 && (is_app[i] || !fib.x.is_rational())) {
        violation("no real multiple ordinate above a root of the discriminant");
      }
    }
  });

  TopologyGraph G;
  for (std::size_t f = 0; f < fibers.size(); ++f) {
    const FiberData& d = data[f];
    for (std::size_t r = 0; r < d.roots.size(); ++r) {
      Vertex v;
      v.id = static_cast<int>(G.vertices.size());
      v.fiber = static_cast<int>(f);
      v.y = d.roots[r].box;
      v.y_exact = d.roots[r].exact;
      if (static_cast<int>(r) == d.critical) v.kind = is_app[f / 2] ? VertexKind::apparent_node : VertexKind::x_critical;
      if (static_cast<int>(r) == d.control) v.kind = VertexKind::control;
      if (v.kind == VertexKind::apparent_node) G.v_app.push_back(v.id);
      if (v.kind == VertexKind::control) G.v_ctrl.push_back(v.id);
      fibers[f].vertices.push_back(v.id);
      G.vertices.push_back(std::move(v));
    }
  }

  // Non-critical points match by vertical order; the contiguous block of
  // sample branches left over meets the critical point.
  auto link = [&](std::size_t sample_f, std::size_t special_f) {
    const auto& S = fibers[sample_f].vertices;
    const auto& X = fibers[special_f].vertices;
    const int m = static_cast<int>(S.size()), k = static_cast<int>(X.size());
    const int c = data[special_f].critical;
    if (c < 0) {
      if (m != k) violation("branch count changes across a regular abscissa");
      for (int j = 0; j < m; ++j) G.edges.emplace_back(S[j], X[j]);
      return;
    }
    const int below = c, above = k - 1 - c, block = m - below - above;
    if (block < 0) violation("fewer branches than non-critical points next to a critical fiber");
    for (int j = 0; j < below; ++j) G.edges.emplace_back(S[j], X[j]);
    for (int j = 0; j < block; ++j) G.edges.emplace_back(S[below + j], X[c]);
    for (int j = 0; j < above; ++j) G.edges.emplace_back(S[below + block + j], X[c + 1 + j]);
  };
  for (std::size_t f = 1; f < fibers.size(); f += 2) {
    link(f - 1, f);
    link(f + 1, f);
  }
  for (auto& [a, b] : G.edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(G.edges.begin(), G.edges.end());
  G.fibers = std::move(fibers);
  return G;
}

}  // namespace ccq
