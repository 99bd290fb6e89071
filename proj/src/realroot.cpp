#include "ccq/realroot.hpp"

#include <algorithm>
#include <array>

#include "ccq/error.hpp"

namespace ccq {

namespace {

int sign_of(const UniPoly& p, const Rational& x) { return sgn(p(x)); }

// Split fractions tried in order when a midpoint must avoid a root.
const std::array<Rational, 7>& split_fractions() {
  static const std::array<Rational, 7> f = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                            Rational(3, 4), Rational(2, 5), Rational(3, 5)};
  return f;
}

int sign_variations(std::span<const Rational> c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Descartes bound for the number of roots of p in the open interval (a, b).
int descartes_count(const UniPoly& p, const Rational& a, const Rational& b) {
  const UniPoly q = scale_variable(taylor_shift(p, a), b - a);  // roots in (0, 1)
  std::vector<Rational> rev(q.coeffs().rbegin(), q.coeffs().rend());
  const UniPoly r = taylor_shift(UniPoly(std::move(rev)), 1);
  return sign_variations(r.coeffs());
}

Integer cauchy_bound(const UniPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)])));
  return ceil(1 + m / abs(p.lead()));
}

// Bisect (lo, hi), which holds exactly one simple root of p and none at the
// endpoints, down to width < w. Returns the root itself when a midpoint hits it.
std::optional<Rational> shrink(const UniPoly& p, Interval& I, const Rational& w) {
  int slo = sign_of(p, I.lo);
  while (I.width() >= w) {
    const Rational m = I.mid();
    const int sm = sign_of(p, m);
    if (sm == 0) return m;
    if (sm == slo) {
      I.lo = m;
    } else {
      I.hi = m;
    }
    slo = sign_of(p, I.lo);
  }
  return std::nullopt;
}

Interval around(const Rational& r, const Rational& radius) { return {r - radius, r + radius}; }

}  // namespace

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Interval isol) : defining_(std::move(defining)), isol_(std::move(isol)) {
  if (!(isol_.lo < isol_.hi) || sign_of(defining_, isol_.lo) * sign_of(defining_, isol_.hi) >= 0) {
    throw Error(ErrorCode::DegenerateInput, "interval " + to_string(isol_) + " does not isolate a root");
  }
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& r) {
  return AlgebraicNumber(UniPoly::linear_root(r), around(r, Rational(1, 2)));
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidInput, "algebraic number is not rational");
  return -defining_.coeffs()[0] / defining_.lead();
}

double AlgebraicNumber::approx() const {
  return is_rational() ? rational_value().get_d() : isol_.mid().get_d();
}

std::vector<AlgebraicNumber> isolate(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "isolating the roots of the zero polynomial");
  if (!is_squarefree(p)) throw Error(ErrorCode::NotSquareFree, "isolation input " + to_string(p) + " is not square-free");
  if (p.degree() == 0) return {};
  const UniPoly P = primitive_part(p);
  const Rational B(cauchy_bound(P));

  std::vector<Interval> found;
  std::vector<Interval> todo = {{-B, B}};
  while (!todo.empty()) {
    const Interval I = todo.back();
    todo.pop_back();
    const int v = descartes_count(P, I.lo, I.hi);
    if (v == 0) continue;
    if (v == 1) {
      found.push_back(I);
      continue;
    }
    for (const auto& f : split_fractions()) {
      const Rational m = I.lo + f * I.width();
      if (P(m) == 0) continue;
      todo.push_back({m, I.hi});
      todo.push_back({I.lo, m});
      break;
    }
  }
  std::sort(found.begin(), found.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  // Rational roots k / a_n are spaced at least 1 / a_n apart once P is primitive.
  const Rational resolution = Rational(1) / Rational(P.lead().get_num());
  std::vector<std::optional<Rational>> exact(found.size());
  UniPoly irrational = P;
  for (std::size_t i = 0; i < found.size(); ++i) {
    Interval& I = found[i];
    auto hit = shrink(P, I, resolution);
    if (!hit) {
      const Integer a = P.lead().get_num();
      for (Integer k = ceil(I.lo * a);; ++k) {
        Rational r(k, a);
        r.canonicalize();
        if (r > I.hi) break;
        if (P(r) == 0) hit = r;
      }
    }
    if (hit) {
      exact[i] = *hit;
      irrational = exact_div(irrational, UniPoly::linear_root(*hit));
      // Keep neighbours' intervals disjoint: shrink inside the old one.
      const Rational rad = std::min(Rational(*hit - I.lo), Rational(I.hi - *hit)) / 2;
      I = around(*hit, rad);
    }
  }
  // Adjacent intervals may share an endpoint; contract until they are disjoint.
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    while (!(found[i].hi < found[i + 1].lo)) {
      if (!exact[i]) shrink(P, found[i], found[i].width());
      if (!exact[i + 1]) shrink(P, found[i + 1], found[i + 1].width());
    }
  }
  const UniPoly irr = primitive_part(irrational);
  std::vector<AlgebraicNumber> out;
  out.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (exact[i]) {
      out.emplace_back(UniPoly::linear_root(*exact[i]), found[i]);
    } else {
      out.emplace_back(irr, found[i]);
    }
  }
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::InvalidInput, "refinement width must be positive");
  if (a.isol().width() < eps) return a;
  AlgebraicNumber out;
  if (a.is_rational()) {
    out.defining_ = a.defining();
    out.isol_ = around(a.rational_value(), eps / 3);
    return out;
  }
  Interval I = a.isol();
  if (auto hit = shrink(a.defining(), I, eps)) {
    out.defining_ = UniPoly::linear_root(*hit);
    out.isol_ = around(*hit, std::min({Rational(eps / 3), Rational(*hit - I.lo), Rational(I.hi - *hit)}));
    return out;
  }
  out.defining_ = a.defining();
  out.isol_ = I;
  return out;
}

int sturm_count(const UniPoly& p, const Interval& I) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "Sturm count of the zero polynomial");
  if (p(I.lo) == 0 || p(I.hi) == 0) throw Error(ErrorCode::RootAtEndpoint, "root at an endpoint of " + to_string(I));
  std::vector<UniPoly> seq = {p, derivative(p)};
  while (!seq.back().is_zero()) {
    seq.push_back(-rem(seq[seq.size() - 2], seq.back()));
  }
  seq.pop_back();
  auto variations = [&seq](const Rational& x) {
    std::vector<Rational> vals;
    vals.reserve(seq.size());
    for (const auto& s : seq) vals.push_back(s(x));
    return sign_variations(vals);
  };
  return variations(I.lo) - variations(I.hi);
}

std::vector<bool> common_roots(const UniPoly& p, const UniPoly& q) { return common_roots(isolate(p), q); }

std::vector<bool> common_roots(const std::vector<AlgebraicNumber>& roots_of_p, const UniPoly& q) {
  std::vector<bool> out(roots_of_p.size(), false);
  if (roots_of_p.empty()) return out;
  if (q.is_zero()) {
    std::fill(out.begin(), out.end(), true);
    return out;
  }
  for (std::size_t i = 0; i < roots_of_p.size(); ++i) out[i] = sign_at(q, roots_of_p[i]) == 0;
  return out;
}

int sign_at(const UniPoly& p, const AlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sgn(p(a.rational_value()));
  // g divides the square-free defining polynomial, so it has simple roots and
  // none at the endpoints; it vanishes at a iff it changes sign across isol.
  const UniPoly g = gcd(p, a.defining());
  if (g.degree() > 0 && sign_of(g, a.isol().lo) * sign_of(g, a.isol().hi) < 0) return 0;
  AlgebraicNumber r = a;
  while (true) {
    const int s = eval(p, r.isol()).certain_sign();
    if (s != 0) return s;
    r = refine(r, r.isol().width() / 4);
    if (r.is_rational()) return sgn(p(r.rational_value()));
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return sgn(Rational(a.rational_value() - b.rational_value()));
  // a = b iff a is a root of b's defining polynomial lying in b's isolating
  // interval, which holds no other root of it.
  const bool candidate = sign_at(b.defining(), a) == 0;
  AlgebraicNumber x = a, y = b;
  while (true) {
    if (x.isol().hi < y.isol().lo) return -1;
    if (y.isol().hi < x.isol().lo) return 1;
    if (candidate && y.isol().lo < x.isol().lo && x.isol().hi < y.isol().hi) return 0;
    x = refine(x, x.isol().width() / 2);
    if (!candidate) y = refine(y, y.isol().width() / 2);
  }
}

Interval enclose(const UniPoly& p, const AlgebraicNumber& a, const Rational& eps) {
  if (a.is_rational()) return Interval::point(p(a.rational_value()));
  AlgebraicNumber r = a;
  while (true) {
    const Interval e = eval(p, r.isol());
    if (e.width() < eps) return e;
    r = refine(r, r.isol().width() / 4);
    if (r.is_rational()) return Interval::point(p(r.rational_value()));
  }
}

// ---------------------------------------------------------------------------
// Fibers

namespace {

struct NeedPrecision {};

struct MonotoneBox {
  Interval box;
  int slo;
  int shi;
};

// omega(alpha, .) with coefficients enclosed for alpha in a rational interval.
class IntervalFiber {
 public:
  IntervalFiber(const std::vector<UniPoly>& coeffs, const Interval& alpha, const Rational& min_width)
      : min_width_(min_width) {
    for (const auto& c : coeffs) f_.push_back(eval(c, alpha));
    for (std::size_t k = 1; k < f_.size(); ++k) df_.push_back(f_[k] * Interval::point(Rational(static_cast<long>(k))));
    for (std::size_t k = 1; k < df_.size(); ++k) ddf_.push_back(df_[k] * Interval::point(Rational(static_cast<long>(k))));
  }

  int degree() const { return static_cast<int>(f_.size()) - 1; }

  Integer root_bound() const {
    Rational m(0);
    for (std::size_t k = 0; k + 1 < f_.size(); ++k) m = std::max(m, magnitude(f_[k]).hi);
    return ceil(1 + m);  // f is monic
  }

  int sign(const Rational& y) const { return eval(f_, Interval::point(y)).certain_sign(); }
  Interval second_derivative(const Interval& y) const { return eval(ddf_, y); }

  // Simple roots in [lo, hi], endpoint signs certified nonzero.
  void solve(const Rational& lo, const Rational& hi, int slo, int shi, std::vector<MonotoneBox>& out) const {
    const Interval X{lo, hi};
    if (eval(f_, X).certain_sign() != 0) return;
    if (eval(df_, X).certain_sign() != 0) {
      if (slo != shi) out.push_back({X, slo, shi});
      return;
    }
    if (X.width() < min_width_) throw NeedPrecision{};
    for (const auto& frac : split_fractions()) {
      const Rational m = lo + frac * X.width();
      const int sm = sign(m);
      if (sm == 0) continue;
      solve(lo, m, slo, sm, out);
      solve(m, hi, sm, shi, out);
      return;
    }
    throw NeedPrecision{};
  }

  void tighten(MonotoneBox& b, const Rational& eps) const {
    while (b.box.width() >= eps) {
      bool moved = false;
      for (const auto& frac : split_fractions()) {
        const Rational m = b.box.lo + frac * b.box.width();
        const int sm = sign(m);
        if (sm == 0) continue;
        if (sm == b.slo) {
          b.box.lo = m;
        } else {
          b.box.hi = m;
          b.shi = sm;
        }
        moved = true;
        break;
      }
      if (!moved) throw NeedPrecision{};
    }
  }

 private:
  std::vector<Interval> f_, df_, ddf_;
  Rational min_width_;
};

std::vector<FiberRoot> rational_fiber(const BiPoly& omega, const Rational& a, const Rational& eps) {
  const UniPoly f = eval_fiber(omega, a);
  const UniPoly sf = squarefree_part(f);
  const auto roots = isolate(sf);
  std::vector<FiberRoot> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out[i].exact = roots[i];
    out[i].box = roots[i].is_rational() ? Interval::point(roots[i].rational_value()) : refine(roots[i], eps).isol();
  }
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    if (mult == 1) continue;
    const auto flags = common_roots(roots, factor);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (flags[i]) out[i].multiplicity = mult;
    }
  }
  return out;
}

std::vector<FiberRoot> attempt_fiber(const std::vector<UniPoly>& coeffs, const Interval& alpha,
                                     const std::optional<FirstSubresultant>& hint, const Rational& eps,
                                     const Rational& precision) {
  const IntervalFiber F(coeffs, alpha, precision);
  const Rational Y(F.root_bound());
  const int d = F.degree();
  const int s_plus = 1;
  const int s_minus = d % 2 == 0 ? 1 : -1;
  std::vector<MonotoneBox> left, right;
  std::optional<Interval> double_box;
  if (hint) {
    const Interval s1 = eval(hint->sr1, alpha);
    if (s1.contains_zero()) throw NeedPrecision{};
    const Interval beta = -eval(hint->sr10, alpha) / s1;
    if (beta.width() >= eps) throw NeedPrecision{};
    // Widen E until f has certified signs at its ends. f'' keeping one sign on
    // E means f' has at most one zero there and f at most two roots counted
    // with multiplicity, so the double root is alone in E.
    std::optional<Interval> E;
    int slo = 0, shi = 0;
    for (Rational pad = std::max(beta.width(), precision); pad < 1; pad *= 4) {
      const Interval cand{beta.lo - pad, beta.hi + pad};
      if (F.second_derivative(cand).certain_sign() == 0) break;
      if (!(-Y < cand.lo && cand.hi < Y)) break;
      slo = F.sign(cand.lo);
      shi = F.sign(cand.hi);
      if (slo != 0 && shi != 0) {
        E = cand;
        break;
      }
    }
    if (!E) throw NeedPrecision{};
    F.solve(-Y, E->lo, s_minus, slo, left);
    F.solve(E->hi, Y, shi, s_plus, right);
    double_box = beta;
  } else {
    F.solve(-Y, Y, s_minus, s_plus, left);
  }
  std::vector<FiberRoot> out;
  for (auto& b : left) {
    F.tighten(b, eps);
    out.push_back({b.box, 1, std::nullopt});
  }
  if (double_box) out.push_back({*double_box, 2, std::nullopt});
  for (auto& b : right) {
    F.tighten(b, eps);
    out.push_back({b.box, 1, std::nullopt});
  }
  return out;
}

}  // namespace

std::vector<FiberRoot> fiber_roots(const BiPoly& omega, const AlgebraicNumber& alpha,
                                   const std::optional<FirstSubresultant>& hint, const Rational& eps) {
  const auto coeffs = omega.x2_coeffs();
  if (coeffs.empty() || coeffs.back() != UniPoly::constant(1)) {
    throw Error(ErrorCode::InvalidInput, "fiber isolation needs omega monic in x2");
  }
  if (alpha.is_rational()) return rational_fiber(omega, alpha.rational_value(), eps);
  constexpr int kMaxBits = 4096;
  AlgebraicNumber a = alpha;
  for (int bits = 24; bits <= kMaxBits; bits *= 2) {
    const Rational precision(Integer(1), Integer(1) << bits);
    a = refine(a, precision);
    if (a.is_rational()) return rational_fiber(omega, a.rational_value(), eps);
    try {
      return attempt_fiber(coeffs, a.isol(), hint, eps, precision);
    } catch (const NeedPrecision&) {
    }
  }
  throw Error(ErrorCode::GenericityViolation,
              "cannot separate the real roots above x1 in " + to_string(alpha.isol()) +
                  (hint ? " (multiple root is not a lone double root)" : " (unexpected multiple root)"));
}

}  // namespace ccq
