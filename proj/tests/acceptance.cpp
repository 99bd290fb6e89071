// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccq/connect.hpp"
#include "ccq/error.hpp"
#include "ccq/io.hpp"
#include "ccq/pipeline.hpp"
#include "ccq/realroot.hpp"
#include "ccq/subresultant.hpp"
#include "cli_runner.hpp"
#include "oracles/bigfloat.hpp"
#include "oracles/corpus.hpp"
#include "oracles/graph_checks.hpp"
#include "oracles/random_poly.hpp"
#include "oracles/subdivision.hpp"
#include "oracles/sylvester.hpp"

using namespace ccq;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note.str("");
    else note << "; ";
    pass = false;
    note << why;
  }
};

std::string corpus_file(const std::string& name) { return oracle::corpus_path(name); }

// Runs ccq and parses stdout as JSON; records a failure on a nonzero exit.
json ccq_json(Outcome& o, const std::string& args) {
  const clitest::Run r = clitest::run_ccq(args);
  if (r.code != 0) {
    o.fail("`ccq " + args + "` exited " + std::to_string(r.code) + ": " + r.err);
    return json();
  }
  return json::parse(r.out);
}

void expect_eq(Outcome& o, const json& got, const json& want, const std::string& what) {
  if (got != want) o.fail(what + " = " + got.dump() + ", expected " + want.dump());
}

void within(Outcome& o, double secs, double budget, const std::string& what) {
  if (secs >= budget) o.fail(what + " took " + std::to_string(secs) + " s");
}

// 1. Nodal space cubic.
Outcome nodal_cubic() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::string f = corpus_file("s01_nodal_cubic.json");
  expect_eq(o, ccq_json(o, "appsing " + f)["q_app"], "x1", "q_app");
  const json c = ccq_json(o, "connect " + f);
  expect_eq(o, c["partition"], json::parse("[[1,2]]"), "partition");
  expect_eq(o, c["components"], 1, "components");
  const double s = seconds_since(t0);
  within(o, s, 1.0, "appsing + connect");
  if (o.pass) o.note << "q_app = x1, partition [[1,2]], 1 component, " << s << " s";
  return o;
}

// 2. Concentric circles.
Outcome concentric_circles() {
  Outcome o;
  const auto t0 = Clock::now();
  const json c = ccq_json(o, "connect " + corpus_file("p02_concentric_circles.json"));
  expect_eq(o, c["partition"], json::parse("[[1],[2]]"), "partition");
  expect_eq(o, c["components"], 2, "components");
  const double s = seconds_since(t0);
  within(o, s, 1.0, "connect");
  if (o.pass) o.note << "partition [[1],[2]], 2 components, " << s << " s";
  return o;
}

// 3. Smooth curves.
Outcome smooth_curves() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const std::string name : {"p01_circle.json", "s02_twisted_cubic.json"}) {
    const std::string f = corpus_file(name);
    expect_eq(o, ccq_json(o, "appsing " + f)["q_app"], "1", name + " q_app");
    expect_eq(o, ccq_json(o, "connect " + f)["components"], 1, name + " components");
  }
  const double s = seconds_since(t0);
  within(o, s, 1.0, "circle and twisted cubic");
  if (o.pass) o.note << "q_app = 1 and 1 component for both, " << s << " s";
  return o;
}

// 4. Subresultant kernel against determinants and a floating-point root oracle.
constexpr mpfr_prec_t kBits = 512;

// Double ordinate above alpha by the oracle: the root of omega_y(alpha, .)
// where |omega(alpha, .)| is smallest; it must be tiny and unique.
std::optional<oracle::BigFloat> oracle_double_ordinate(const BiPoly& omega, const AlgebraicNumber& alpha) {
  const AlgebraicNumber a = refine(alpha, Rational(1, Integer("1" + std::string(90, '0'))));
  const Rational mid = (a.isol().lo + a.isol().hi) / 2;
  const oracle::BigFloat x = a.is_rational() ? oracle::BigFloat::from(a.rational_value(), kBits) : oracle::BigFloat::from(mid, kBits);
  std::vector<oracle::BigFloat> c, dc;
  for (const auto& p : omega.x2_coeffs()) c.push_back(oracle::eval(p, x, kBits));
  for (std::size_t i = 1; i < c.size(); ++i) {
    oracle::BigFloat t(kBits);
    mpfr_mul_ui(t.raw(), c[i].raw(), static_cast<unsigned long>(i), MPFR_RNDN);
    dc.push_back(t);
  }
  std::vector<std::pair<double, oracle::BigFloat>> cand;
  for (const auto& r : oracle::real_roots(dc, kBits)) {
    oracle::BigFloat v = oracle::eval(c, r, kBits);
    mpfr_abs(v.raw(), v.raw(), MPFR_RNDN);
    cand.emplace_back(mpfr_get_d(v.raw(), MPFR_RNDN), r);
  }
  std::sort(cand.begin(), cand.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  if (cand.empty() || cand[0].first > 1e-50) return std::nullopt;
  if (cand.size() > 1 && cand[1].first < 1e-30) return std::nullopt;
  return cand[0].second;
}

Interval double_ordinate_box(const FirstSubresultant& s, const AlgebraicNumber& alpha, const Rational& width) {
  Rational eps = width / 1000;
  while (true) {
    const Interval b = enclose(-s.sr10, alpha, eps) / enclose(s.sr1, alpha, eps);
    if (b.width() < width) return b;
    eps /= 1000;
  }
}

Outcome kernel_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(500);
  const Rational width(1, Integer("100000000000000000000"));
  int pairs = 0, resultant_mismatch = 0, fibers = 0, double_mismatch = 0, unresolved = 0;
  while (pairs < 500) {
    const BiPoly f = oracle::random_bipoly(rng, 4, 4, 9);
    const BiPoly g = oracle::random_bipoly(rng, 4, 4, 9);
    if (f.degree_x2() < 1 || g.is_zero()) continue;
    ++pairs;
    if (resultant_x2(f, g) != oracle::sylvester_resultant(f, g)) ++resultant_mismatch;

    // The double-ordinate check needs a curve monic in x2 of x2-degree >= 2.
    const int d = f.degree_x2();
    if (d < 2) continue;
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      if (t.e2 < d) terms.push_back(t);
    }
    terms.push_back({0, d, Rational(1)});
    const BiPoly omega = BiPoly::from_terms(std::move(terms));
    const BiPoly wy = partial(omega, Var::x2);
    const UniPoly R = resultant_x2(omega, wy);
    if (R.is_zero()) continue;
    if (R != oracle::sylvester_resultant(omega, wy)) ++resultant_mismatch;
    const FirstSubresultant s = first_subresultant_x2(omega, wy);
    for (const auto& alpha : isolate(squarefree_part(R))) {
      if (sign_at(s.sr1, alpha) == 0) continue;
      ++fibers;
      const auto beta = oracle_double_ordinate(omega, alpha);
      if (!beta) {
        ++unresolved;
        continue;
      }
      const Interval box = double_ordinate_box(s, alpha, width);
      Rational b;
      mpfr_get_q(b.get_mpq_t(), beta->raw());
      // The oracle ordinate carries its own rounding error (~1e-150); allow 1e-60.
      const Rational slack(1, Integer("1" + std::string(60, '0')));
      if (!Interval{box.lo - slack, box.hi + slack}.contains(b)) ++double_mismatch;
    }
  }
  const double secs = seconds_since(t0);
  if (resultant_mismatch > 0) o.fail(std::to_string(resultant_mismatch) + " resultants differ from the Sylvester determinant");
  if (double_mismatch > 0) o.fail(std::to_string(double_mismatch) + " double ordinates outside the -sr10/sr1 box");
  if (unresolved > 0) o.fail(std::to_string(unresolved) + " critical fibers where the oracle found no unique double ordinate");
  if (fibers < 100) o.fail("only " + std::to_string(fibers) + " critical fibers exercised");
  within(o, secs, 60.0, "kernel suite");
  if (o.pass) {
    o.note << pairs << " pairs, resultants exact; " << fibers << " critical fibers, double ordinate in a box of width < 1e-20, "
           << secs << " s";
  }
  return o;
}

struct CorpusRun {
  oracle::CorpusCase c;
  ProblemFile file;
  PipelineResult result;
};

const std::vector<CorpusRun>& corpus_runs() {
  static const std::vector<CorpusRun> runs = [] {
    std::vector<CorpusRun> v;
    for (const auto& c : oracle::corpus()) {
      ProblemFile pf = load_problem(corpus_file(c.file));
      PipelineResult r = run_pipeline(pf.curve, pf.queries);
      v.push_back({c, std::move(pf), std::move(r)});
    }
    return v;
  }();
  return runs;
}

// 5. Structural suite.
Outcome structural() {
  Outcome o;
  int curves = 0, max_degree = 0;
  for (const auto& r : corpus_runs()) {
    ++curves;
    max_degree = std::max({max_degree, r.file.curve.omega.degree_x1(), r.file.curve.omega.degree_x2()});
    for (const auto& v : oracle::structural_violations(r.result.graph)) o.fail(r.c.file + ": " + v);
    for (const auto& v : oracle::structural_violations(r.result.resolved, true)) o.fail(r.c.file + " (resolved): " + v);
  }
  if (curves < 10) o.fail("corpus has only " + std::to_string(curves) + " curves");
  if (max_degree > 6) o.fail("corpus degree exceeds 6");
  if (o.pass) o.note << curves << " curves, partial degrees <= " << max_degree << ", no violations";
  return o;
}

// 6. Component counts against the subdivision and path-tracking oracles.
Outcome oracle_equivalence() {
  Outcome o;
  int plane = 0, space = 0;
  for (const auto& r : corpus_runs()) {
    const int got = r.result.partition.component_count;
    int want;
    if (r.c.plane) {
      ++plane;
      want = oracle::Subdivision(r.file.curve.omega).components();
    } else {
      ++space;
      want = oracle::PathTracker(r.c.branches).components();
    }
    if (got != want) o.fail(r.c.file + ": " + std::to_string(got) + " components, oracle says " + std::to_string(want));
    if (got != r.c.components) o.fail(r.c.file + ": " + std::to_string(got) + " components, ground truth " + std::to_string(r.c.components));
  }
  if (o.pass) o.note << plane << " plane curves (subdivision, cells 2^-12), " << space << " space curves (path tracking) agree";
  return o;
}

// 7. Node resolution unit suite.
TopologyGraph x_graph(const std::vector<std::pair<int, int>>& edges) {
  TopologyGraph G;
  const std::vector<int> sizes = {2, 1, 2};
  for (std::size_t f = 0; f < sizes.size(); ++f) {
    G.fibers.push_back({AlgebraicNumber::rational(static_cast<long>(f)), f == 1, {}});
    for (int k = 0; k < sizes[f]; ++k) {
      Vertex v;
      v.id = static_cast<int>(G.vertices.size());
      v.fiber = static_cast<int>(f);
      v.y = Interval::point(k);
      G.fibers[f].vertices.push_back(v.id);
      G.vertices.push_back(v);
    }
  }
  G.edges = edges;
  return G;
}

Outcome node_resolution_suite() {
  Outcome o;
  // Left {0 low, 1 up}, node 2, right {3 low, 4 up}.
  TopologyGraph X = x_graph({{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  const TopologyGraph plain = X;
  X.vertices[2].kind = VertexKind::apparent_node;
  X.v_app = {2};
  const TopologyGraph R = node_resolution(X);
  if (R.vertices.size() != 4) o.fail("single X: " + std::to_string(R.vertices.size()) + " vertices");
  // After renumbering: L_low 0, L_up 1, R_low 2, R_up 3.
  if (R.edges != std::vector<std::pair<int, int>>{{0, 3}, {1, 2}}) o.fail("single X: wrong pairing");
  if (oracle::count_components(R) != 2) o.fail("single X: strands not separated");

  const TopologyGraph I = node_resolution(plain);
  if (I.edges != plain.edges || I.vertices.size() != plain.vertices.size()) o.fail("empty v_app is not the identity");

  TopologyGraph bad = x_graph({{0, 2}, {1, 2}, {2, 3}});
  bad.vertices[2].kind = VertexKind::apparent_node;
  bad.v_app = {2};
  try {
    node_resolution(bad);
    o.fail("3-neighbour node accepted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GenericityViolation) o.fail(std::string("3-neighbour node: wrong error ") + e.what());
  }
  if (o.pass) o.note << "X -> {L_low,R_up},{L_up,R_low}; identity on empty v_app; 3 neighbours -> GenericityViolation";
  return o;
}

// 8. Determinism of the CLI.
Outcome determinism() {
  Outcome o;
  int files = 0;
  for (const auto& r : corpus_runs()) {
    const std::string args = std::string("connect ") + (r.file.queries ? "" : "--components-only ") + corpus_file(r.c.file);
    const clitest::Run a = clitest::run_ccq(args, "CCQ_THREADS=1");
    const clitest::Run b = clitest::run_ccq(args, "CCQ_THREADS=4");
    if (a.code != 0 || b.code != 0) o.fail(r.c.file + ": exit " + std::to_string(a.code) + "/" + std::to_string(b.code));
    else if (a.out != b.out) o.fail(r.c.file + ": outputs differ");
    ++files;
  }
  if (o.pass) o.note << files << " corpus files, byte-identical JSON across two runs (1 and 4 workers)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"nodal space cubic", nodal_cubic},
      {"concentric circles", concentric_circles},
      {"smooth curves", smooth_curves},
      {"subresultant kernel oracle", kernel_oracle},
      {"structural suite", structural},
      {"component-count oracles", oracle_equivalence},
      {"node resolution", node_resolution_suite},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
