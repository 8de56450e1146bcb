#include "spacecross/transversal.hpp"

#include "spacecross/interval.hpp"
#include "spacecross/wide_interval.hpp"

#include <algorithm>
#include <cmath>

namespace spacecross {

PlueckerLine plucker_from_segment(const Segment3& s) {
  if (s.p == s.q) throw DegenerateInput("zero-length segment at " + to_string(s.p));
  return {s.q - s.p, cross(s.p, s.q)};
}

int side_product(const PlueckerLine& a, const PlueckerLine& b) { return sgn(incidence(a, b)); }

AlgebraicLine to_algebraic(const PlueckerLine& l) {
  return {{l.dir.x, l.dir.y, l.dir.z}, {l.mom.x, l.mom.y, l.mom.z}};
}

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sgn(dot(cross(b - a, c - a), d - a));
}

std::string to_string(const Point3& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ", " + to_string(p.z) + ")";
}

namespace {

// ---------------------------------------------------------------------------
// Scalar policies. S is the input field, R the field of the quadratic roots.
// sign() returns nullopt when the policy cannot decide.

struct ExactPolicy {
  using S = Rational;
  using R = QuadExt;
  static constexpr bool first_nonzero = true;
  static S lift(const Rational& r) { return r; }
  std::optional<int> sign(const Rational& x) const { return sgn(x); }
  std::optional<int> sign(const QuadExt& x) const { return x.sign(); }
  // the radicand is the same for every component of a pencil, so its square
  // test runs once
  R root(const S& a, const S& b, const S& d) const {
    if (!root_d_ || *root_d_ != d) {
      root_d_ = d;
      Rational r;
      square_root_ = rational_sqrt(d, r) ? std::optional<Rational>(r) : std::nullopt;
    }
    if (square_root_) return QuadExt(a + b * *square_root_);
    return QuadExt::irrational(a, b, d);
  }
  R embed(const S& a) const { return QuadExt(a); }
  double magnitude(const Rational&) const { return 1.0; }
  double magnitude(const QuadExt&) const { return 1.0; }
  // signs of t and 1 - t for t = n / d, d != 0
  template <class V>
  std::optional<std::array<int, 2>> param_signs(const V& n, const V& d) const {
    const int sd = sign_of(d);
    return std::array<int, 2>{sign_of(n) * sd, sign_of(V(d - n)) * sd};
  }
  static int sign_of(const Rational& x) { return sgn(x); }
  static int sign_of(const QuadExt& x) { return x.sign(); }

 private:
  mutable std::optional<Rational> root_d_;
  mutable std::optional<Rational> square_root_;
};

struct IntervalPolicy {
  using S = Interval;
  using R = Interval;
  static S lift(const Rational& r) { return Interval::from(r); }
  std::optional<int> sign(const Interval& x) const { return x.sign(); }
  R root(const S& a, const S& b, const S& d) const { return a + b * sqrt(d); }
  R embed(const S& a) const { return a; }
  double magnitude(const Interval& x) const { return x.magnitude(); }
  std::optional<std::array<int, 2>> param_signs(const Interval& n, const Interval& d) const {
    auto s1 = (n * d).sign();
    auto s2 = (d * (d - n)).sign();
    if (!s1 || !s2) return std::nullopt;
    return std::array<int, 2>{*s1, *s2};
  }
};

// Same filter with MPFR endpoints, for coordinates beyond double range.
template <mpfr_prec_t Prec>
struct WideIntervalPolicy {
  using S = WideIntervalT<Prec>;
  using R = S;
  static S lift(const Rational& r) { return S(r); }
  std::optional<int> sign(const S& x) const { return x.sign(); }
  R root(const S& a, const S& b, const S& d) const { return a + b * sqrt(d); }
  R embed(const S& a) const { return a; }
  double magnitude(const S& x) const { return x.magnitude(); }
  std::optional<std::array<int, 2>> param_signs(const S& n, const S& d) const {
    auto s1 = (n * d).sign();
    auto s2 = (d * (d - n)).sign();
    if (!s1 || !s2) return std::nullopt;
    return std::array<int, 2>{*s1, *s2};
  }
};

// Intermediate signs are taken literally; the tolerance only widens the final
// parameter window to [-tol, 1 + tol].
struct FloatPolicy {
  using S = double;
  using R = double;
  double tol;
  std::optional<int> sign(double x) const {
    if (std::isnan(x)) return std::nullopt;
    if (x == 0) return 0;
    return x > 0 ? 1 : -1;
  }
  std::optional<std::array<int, 2>> param_signs(double n, double d) const {
    double t = n / d;
    if (!std::isfinite(t)) return std::nullopt;
    return std::array<int, 2>{t < -tol ? -1 : 1, t > 1 + tol ? -1 : 1};
  }
  R root(S a, S b, S d) const { return a + b * std::sqrt(std::max(d, 0.0)); }
  R embed(S a) const { return a; }
  double magnitude(double x) const { return std::fabs(x); }
};

template <class T>
using Row6 = std::array<T, 6>;

template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return a * d - b * c;
}

// Determinant of the 4x4 submatrix of `rows` taken at columns `cols`
// (Laplace expansion along the first two rows).
template <class T>
T det4(const std::array<Row6<T>, 4>& rows, const std::array<int, 4>& cols) {
  auto m = [&](int r, int c) -> const T& { return rows[r][cols[c]]; };
  T s01 = det2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  T s02 = det2(m(0, 0), m(0, 2), m(1, 0), m(1, 2));
  T s03 = det2(m(0, 0), m(0, 3), m(1, 0), m(1, 3));
  T s12 = det2(m(0, 1), m(0, 2), m(1, 1), m(1, 2));
  T s13 = det2(m(0, 1), m(0, 3), m(1, 1), m(1, 3));
  T s23 = det2(m(0, 2), m(0, 3), m(1, 2), m(1, 3));
  T c01 = det2(m(2, 0), m(2, 1), m(3, 0), m(3, 1));
  T c02 = det2(m(2, 0), m(2, 2), m(3, 0), m(3, 2));
  T c03 = det2(m(2, 0), m(2, 3), m(3, 0), m(3, 3));
  T c12 = det2(m(2, 1), m(2, 2), m(3, 1), m(3, 2));
  T c13 = det2(m(2, 1), m(2, 3), m(3, 1), m(3, 3));
  T c23 = det2(m(2, 2), m(2, 3), m(3, 2), m(3, 3));
  return s01 * c23 - s02 * c13 + s03 * c12 + s12 * c03 - s13 * c02 + s23 * c01;
}

enum class PencilStatus { Finite, Infinite, Unknown };

template <class Policy>
struct Pencil {
  PencilStatus status = PencilStatus::Unknown;
  std::vector<Row6<typename Policy::R>> lines;  // (dir, mom) of each real solution
};

// Lines X with Omega(X, L_i) = 0 for the four rows and X on the Klein quadric.
// Row i holds (mom_i, dir_i) so that row . X = Omega(X, L_i) for X = (dir, mom).
template <class Policy>
Pencil<Policy> solve_pencil(const std::array<Row6<typename Policy::S>, 4>& rows, const Policy& pol) {
  using S = typename Policy::S;
  using R = typename Policy::R;
  Pencil<Policy> out;

  std::array<int, 2> free_cols{};
  std::array<int, 4> piv{};
  S delta{};
  bool found = false;
  bool uncertain = false;
  for (int f1 = 0; f1 < 6 && !found; ++f1) {
    for (int f2 = f1 + 1; f2 < 6 && !found; ++f2) {
      int k = 0;
      for (int c = 0; c < 6; ++c)
        if (c != f1 && c != f2) piv[k++] = c;
      S d = det4(rows, piv);
      auto s = pol.sign(d);
      if (!s) {
        uncertain = true;
      } else if (*s != 0) {
        free_cols = {f1, f2};
        delta = d;
        found = true;
      }
    }
  }
  if (!found) {
    // rank < 4: the solution space has dimension >= 3 and always contains
    // infinitely many real lines
    out.status = uncertain ? PencilStatus::Unknown : PencilStatus::Infinite;
    return out;
  }

  // Cramer: one null vector per free column.
  auto null_vector = [&](int f, int other) {
    Row6<S> x{};
    x[f] = delta;
    x[other] = S(0);
    for (int j = 0; j < 4; ++j) {
      std::array<Row6<S>, 4> mod = rows;
      for (int r = 0; r < 4; ++r) mod[r][piv[j]] = rows[r][f];
      x[piv[j]] = -det4(mod, piv);
    }
    return x;
  };
  Row6<S> P = null_vector(free_cols[0], free_cols[1]);
  Row6<S> Q = null_vector(free_cols[1], free_cols[0]);

  auto klein = [](const Row6<S>& u, const Row6<S>& v) -> S {
    return u[0] * v[3] + u[1] * v[4] + u[2] * v[5] + v[0] * u[3] + v[1] * u[4] + v[2] * u[5];
  };
  // Omega(sP + tQ, sP + tQ) = A s^2 + 2 B s t + C t^2
  S A = klein(P, P);
  S B = klein(P, Q);
  S C = klein(Q, Q);
  auto sa = pol.sign(A);
  auto sb = pol.sign(B);
  auto sc = pol.sign(C);
  if (!sa) return out;

  auto embed_row = [&](const Row6<S>& x) {
    Row6<R> r;
    for (int i = 0; i < 6; ++i) r[i] = pol.embed(x[i]);
    return r;
  };

  if (*sa != 0) {
    // A s^2 + 2 B s + C = 0, s = (-B +- sqrt(B^2 - A C)) / A; scale X by A.
    S disc = B * B - A * C;
    auto sd = pol.sign(disc);
    if (!sd) return out;
    out.status = PencilStatus::Finite;
    if (*sd < 0) return out;
    Row6<S> base;
    for (int i = 0; i < 6; ++i) base[i] = A * Q[i] - B * P[i];
    if (*sd == 0) {
      out.lines.push_back(embed_row(base));
    } else {
      for (int sgn_ : {1, -1}) {
        Row6<R> x;
        for (int i = 0; i < 6; ++i) x[i] = pol.root(base[i], sgn_ > 0 ? P[i] : S(-P[i]), disc);
        out.lines.push_back(std::move(x));
      }
    }
    return out;
  }
  // A == 0: t (2 B s + C t) = 0.
  if (!sb || !sc) return out;
  if (*sb == 0 && *sc == 0) {
    out.status = PencilStatus::Infinite;
    return out;
  }
  out.status = PencilStatus::Finite;
  out.lines.push_back(embed_row(P));
  if (*sb != 0) {
    Row6<S> x;
    for (int i = 0; i < 6; ++i) x[i] = S(2) * B * Q[i] - C * P[i];
    out.lines.push_back(embed_row(x));
  }
  return out;
}

template <class Policy>
std::array<Row6<typename Policy::S>, 4> rows_from_segments(const std::array<Vec3<typename Policy::S>, 4>& p,
                                                          const std::array<Vec3<typename Policy::S>, 4>& q) {
  std::array<Row6<typename Policy::S>, 4> rows;
  for (int i = 0; i < 4; ++i) {
    auto d = q[i] - p[i];
    auto m = cross(p[i], q[i]);
    rows[i] = {m.x, m.y, m.z, d.x, d.y, d.z};
  }
  return rows;
}

// Does the line (dir, mom) meet the closed segment [p, q]? Writes the
// parameter on success when `param` is given.
template <class Policy, class V, class P>
Verdict meets_segment(const Vec3<V>& dir, const Vec3<V>& mom, const Vec3<P>& p, const Vec3<P>& q, const Policy& pol,
                      V* param = nullptr) {
  Vec3<V> pv{V(p.x), V(p.y), V(p.z)};
  Vec3<V> e{V(q.x - p.x), V(q.y - p.y), V(q.z - p.z)};
  // components computed on demand: exact policies stop at the first nonzero
  // denominator, interval policies pick the largest certain one
  auto den_at = [&](int c) {
    const int i = (c + 1) % 3, j = (c + 2) % 3;
    return V(e[i] * dir[j] - e[j] * dir[i]);
  };
  auto num_at = [&](int c) {
    const int i = (c + 1) % 3, j = (c + 2) % 3;
    return V(mom[c] - V(pv[i] * dir[j] - pv[j] * dir[i]));
  };
  std::array<std::optional<V>, 3> den;
  int best = -1;
  double best_mag = -1;
  bool den_uncertain = false;
  for (int c = 0; c < 3; ++c) {
    den[c] = den_at(c);
    auto s = pol.sign(*den[c]);
    if (!s) {
      den_uncertain = true;
    } else if (*s != 0) {
      double m = pol.magnitude(*den[c]);
      if (best < 0 || m > best_mag) {
        best_mag = m;
        best = c;
      }
      if constexpr (requires { Policy::first_nonzero; }) break;
    }
  }
  if (best < 0) {
    if (den_uncertain) return Verdict::Unknown;
    // parallel: meets iff the segment lies on the line
    bool unknown = false;
    for (int c = 0; c < 3; ++c) {
      auto s = pol.sign(num_at(c));
      if (!s) unknown = true;
      else if (*s != 0) return Verdict::No;
    }
    if (unknown) return Verdict::Unknown;
    if (param) *param = V(0);
    return Verdict::Yes;
  }
  const V nc = num_at(best);
  const V& dc = *den[best];
  // coplanarity with the segment is the caller's business
  auto ps = pol.param_signs(nc, dc);
  if (!ps) return Verdict::Unknown;
  if ((*ps)[0] < 0 || (*ps)[1] < 0) return Verdict::No;
  if (param) *param = V(nc / dc);
  return Verdict::Yes;
}

template <class Policy>
struct CoreResult {
  Verdict verdict = Verdict::Unknown;
  bool degenerate = false;  // infinitely many transversals of the supporting lines
  Row6<typename Policy::R> line{};
  std::array<typename Policy::R, 4> params{};
};

template <class Policy>
CoreResult<Policy> four_segment_core(const std::array<Vec3<typename Policy::S>, 4>& p,
                                     const std::array<Vec3<typename Policy::S>, 4>& q, const Policy& pol,
                                     bool want_params) {
  using R = typename Policy::R;
  CoreResult<Policy> res;
  auto pencil = solve_pencil(rows_from_segments<Policy>(p, q), pol);
  if (pencil.status == PencilStatus::Infinite) {
    res.degenerate = true;
    return res;
  }
  if (pencil.status == PencilStatus::Unknown) return res;
  bool unknown = false;
  for (const auto& x : pencil.lines) {
    Vec3<R> dir{x[0], x[1], x[2]};
    Vec3<R> mom{x[3], x[4], x[5]};
    bool at_infinity = true;
    bool dir_unknown = false;
    for (int c = 0; c < 3; ++c) {
      auto s = pol.sign(dir[c]);
      if (!s) dir_unknown = true;
      else if (*s != 0) at_infinity = false;
    }
    if (dir_unknown && at_infinity) {
      unknown = true;
      continue;
    }
    if (at_infinity) continue;
    Verdict v = Verdict::Yes;
    std::array<R, 4> params{};
    for (int i = 0; i < 4 && v != Verdict::No; ++i) {
      Verdict vi = meets_segment<Policy, R>(dir, mom, p[i], q[i], pol, want_params ? &params[i] : nullptr);
      if (vi == Verdict::No) v = Verdict::No;
      else if (vi == Verdict::Unknown) v = Verdict::Unknown;
    }
    if (v == Verdict::Yes) {
      res.verdict = Verdict::Yes;
      res.line = x;
      res.params = params;
      return res;
    }
    if (v == Verdict::Unknown) unknown = true;
  }
  res.verdict = unknown ? Verdict::Unknown : Verdict::No;
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive candidate enumeration for configurations whose supporting lines
// admit infinitely many common transversals (always the case for k = 3).
//
// If the closed segments have a common transversal, moving it inside the
// solution set until a constraint becomes tight yields one of:
//   - a supporting line itself,
//   - the line through two special points,
//   - the line through a special point meeting two supporting lines,
// where special points are endpoints, intersections of two supporting lines,
// and intersections of a supporting line with the plane of a coplanar pair.

struct LineData {
  Point3 p, e;  // point and direction of the supporting line
};

bool point_on_line(const Point3& x, const LineData& l) {
  Vec3<Rational> c = cross(x - l.p, l.e);
  return sgn(c.x) == 0 && sgn(c.y) == 0 && sgn(c.z) == 0;
}

bool is_zero(const Point3& v) { return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0; }

void push_unique(std::vector<Point3>& pts, const Point3& x) {
  for (const auto& y : pts)
    if (y == x) return;
  pts.push_back(x);
}

std::vector<Point3> special_points(std::span<const Segment3> segs, const std::vector<LineData>& lines) {
  std::vector<Point3> pts;
  for (const auto& s : segs) {
    push_unique(pts, s.p);
    push_unique(pts, s.q);
  }
  const int k = static_cast<int>(lines.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const auto& la = lines[a];
      const auto& lb = lines[b];
      Point3 n = cross(la.e, lb.e);
      Point3 w = lb.p - la.p;
      if (sgn(dot(w, n)) != 0) continue;  // skew
      if (!is_zero(n)) {
        Rational lam = dot(cross(w, lb.e), n) / dot(n, n);
        push_unique(pts, la.p + lam * la.e);
      } else {
        if (point_on_line(lb.p, la)) continue;  // same line, no plane
        n = cross(la.e, w);
      }
      for (int c = 0; c < k; ++c) {
        if (c == a || c == b) continue;
        Rational denom = dot(n, lines[c].e);
        if (sgn(denom) == 0) continue;
        Rational mu = dot(n, la.p - lines[c].p) / denom;
        push_unique(pts, lines[c].p + mu * lines[c].e);
      }
    }
  }
  return pts;
}

bool exact_line_meets_all(const Point3& dir, const Point3& mom, std::span<const Segment3> segs,
                          std::vector<Rational>& params) {
  ExactPolicy pol;
  params.assign(segs.size(), Rational(0));
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (sgn(dot(dir, cross(s.p, s.q)) + dot(s.q - s.p, mom)) != 0) return false;
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (meets_segment<ExactPolicy, Rational>(dir, mom, segs[i].p, segs[i].q, pol, &params[i]) != Verdict::Yes)
      return false;
  return true;
}

SegmentTransversal by_candidates(std::span<const Segment3> segs) {
  std::vector<LineData> lines;
  for (const auto& s : segs) lines.push_back({s.p, s.q - s.p});
  std::vector<Rational> params;
  auto accept = [&](const Point3& through, const Point3& dir) -> std::optional<SegmentTransversal> {
    if (is_zero(dir)) return std::nullopt;
    Point3 mom = cross(through, dir);
    if (!exact_line_meets_all(dir, mom, segs, params)) return std::nullopt;
    SegmentTransversal out;
    out.exists = true;
    out.line = to_algebraic(PlueckerLine{dir, mom});
    for (const auto& t : params) out.params.emplace_back(t);
    return out;
  };

  for (const auto& l : lines)
    if (auto r = accept(l.p, l.e)) return *r;

  std::vector<Point3> pts = special_points(segs, lines);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (auto r = accept(pts[i], pts[j] - pts[i])) return *r;

  const int k = static_cast<int>(lines.size());
  for (const auto& s : pts) {
    for (int a = 0; a < k; ++a) {
      if (point_on_line(s, lines[a])) continue;
      Point3 na = cross(lines[a].e, s - lines[a].p);
      for (int b = a + 1; b < k; ++b) {
        if (point_on_line(s, lines[b])) continue;
        Point3 nb = cross(lines[b].e, s - lines[b].p);
        if (auto r = accept(s, cross(na, nb))) return *r;
      }
    }
  }
  return {};
}

template <class Policy>
std::array<Vec3<typename Policy::S>, 4> lift_points(std::span<const Segment3, 4> segs, bool first) {
  std::array<Vec3<typename Policy::S>, 4> out;
  for (int i = 0; i < 4; ++i) {
    const Point3& x = first ? segs[i].p : segs[i].q;
    out[i] = {Policy::lift(x.x), Policy::lift(x.y), Policy::lift(x.z)};
  }
  return out;
}

}  // namespace

TransversalsOf4 transversals_of_4_lines(const std::array<PlueckerLine, 4>& lines) {
  std::array<Row6<Rational>, 4> rows;
  for (int i = 0; i < 4; ++i) {
    const auto& l = lines[i];
    if (is_zero(l.dir)) throw DegenerateInput("line with zero direction");
    rows[i] = {l.mom.x, l.mom.y, l.mom.z, l.dir.x, l.dir.y, l.dir.z};
  }
  ExactPolicy pol;
  auto pencil = solve_pencil(rows, pol);
  TransversalsOf4 out;
  if (pencil.status == PencilStatus::Infinite) {
    out.infinite = true;
    return out;
  }
  for (const auto& x : pencil.lines) {
    if (x[0].sign() == 0 && x[1].sign() == 0 && x[2].sign() == 0) continue;  // line at infinity
    out.lines.push_back({{x[0], x[1], x[2]}, {x[3], x[4], x[5]}});
  }
  return out;
}

std::optional<QuadExt> meet_parameter(const AlgebraicLine& line, const Segment3& s) {
  ExactPolicy pol;
  QuadExt t;
  if (meets_segment<ExactPolicy, QuadExt>(line.dir, line.mom, s.p, s.q, pol, &t) != Verdict::Yes) return std::nullopt;
  // the parameter test reads a single coordinate; coplanarity closes the gap
  AlgebraicLine seg = to_algebraic(plucker_from_segment(s));
  if (incidence(line, seg).sign() != 0) return std::nullopt;
  return t;
}

bool line_meets_segments(const AlgebraicLine& line, std::span<const Segment3> segs, std::vector<QuadExt>* params) {
  std::vector<QuadExt> ts;
  for (const auto& s : segs) {
    auto t = meet_parameter(line, s);
    if (!t) return false;
    ts.push_back(*t);
  }
  if (params) *params = std::move(ts);
  return true;
}

SegmentTransversal transversal_exists_segments(std::span<const Segment3> segs) {
  if (segs.size() != 3 && segs.size() != 4)
    throw ValidationError("transversal_exists_segments expects 3 or 4 segments");
  for (const auto& s : segs)
    if (s.p == s.q) throw DegenerateInput("zero-length segment at " + to_string(s.p));

  SegmentTransversal out;
  if (segs.size() == 4) {
    std::span<const Segment3, 4> four(segs.data(), 4);
    if (transversal_filter(four) == Verdict::No) return out;
    if (transversal_filter_wide(four) == Verdict::No) return out;
    ExactPolicy pol;
    auto core = four_segment_core(lift_points<ExactPolicy>(four, true), lift_points<ExactPolicy>(four, false), pol,
                                  true);
    if (core.verdict == Verdict::Yes) {
      AlgebraicLine line{{core.line[0], core.line[1], core.line[2]}, {core.line[3], core.line[4], core.line[5]}};
      std::vector<QuadExt> params;
      if (!line_meets_segments(line, segs, &params))
        throw InvariantFailure("transversal witness failed re-verification");
      out.exists = true;
      out.line = std::move(line);
      out.params = std::move(params);
      return out;
    }
    if (!core.degenerate) return out;
  }
  out = by_candidates(segs);
  if (out.exists && !line_meets_segments(*out.line, segs))
    throw InvariantFailure("transversal witness failed re-verification");
  return out;
}

Verdict transversal_filter(std::span<const Segment3, 4> segs) {
  IntervalPolicy pol;
  auto core = four_segment_core(lift_points<IntervalPolicy>(segs, true), lift_points<IntervalPolicy>(segs, false),
                                pol, false);
  return core.degenerate ? Verdict::Unknown : core.verdict;
}

namespace {

template <mpfr_prec_t Prec>
Verdict wide_filter_at(std::span<const Segment3, 4> segs) {
  WideIntervalPolicy<Prec> pol;
  auto core = four_segment_core(lift_points<WideIntervalPolicy<Prec>>(segs, true),
                                lift_points<WideIntervalPolicy<Prec>>(segs, false), pol, false);
  return core.degenerate ? Verdict::Unknown : core.verdict;
}

}  // namespace

Verdict transversal_filter_wide(std::span<const Segment3, 4> segs, int bits) {
  if (bits <= 256) return wide_filter_at<256>(segs);
  if (bits <= 1024) return wide_filter_at<1024>(segs);
  return wide_filter_at<4096>(segs);
}

Verdict transversal_filter_boxes(std::span<const Box3, 4> lo, std::span<const Box3, 4> hi) {
  IntervalPolicy pol;
  std::array<Box3, 4> p, q;
  std::copy(lo.begin(), lo.end(), p.begin());
  std::copy(hi.begin(), hi.end(), q.begin());
  auto core = four_segment_core(p, q, pol, false);
  return core.degenerate ? Verdict::Unknown : core.verdict;
}

Box3 box_of(const Point3& p) { return {Interval::from(p.x), Interval::from(p.y), Interval::from(p.z)}; }

Verdict transversal_float(std::span<const Vec3<double>, 8> endpoints, double tol) {
  FloatPolicy pol{tol};
  std::array<Vec3<double>, 4> p, q;
  for (int i = 0; i < 4; ++i) {
    p[i] = endpoints[2 * i];
    q[i] = endpoints[2 * i + 1];
  }
  auto core = four_segment_core(p, q, pol, false);
  return core.degenerate ? Verdict::Unknown : core.verdict;
}

Contact2D segments_intersect_2d(const Point2& a0, const Point2& a1, const Point2& b0, const Point2& b1) {
  if (a0 == a1 || b0 == b1) throw DegenerateInput("zero-length planar segment");
  int o1 = orient2d(a0, a1, b0);
  int o2 = orient2d(a0, a1, b1);
  int o3 = orient2d(b0, b1, a0);
  int o4 = orient2d(b0, b1, a1);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact2D::Crossing;
  auto within = [](const Point2& a, const Point2& b, const Point2& x) {
    // x is collinear with ab; test the bounding box
    return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
           x.y <= std::max(a.y, b.y);
  };
  if ((o1 == 0 && within(a0, a1, b0)) || (o2 == 0 && within(a0, a1, b1)) || (o3 == 0 && within(b0, b1, a0)) ||
      (o4 == 0 && within(b0, b1, a1)))
    return Contact2D::Touching;
  return Contact2D::Disjoint;
}

}  // namespace spacecross
