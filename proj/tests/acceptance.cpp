// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset; exit status is nonzero if any selected one fails.

#include "oracles.hpp"
#include "stair_checks.hpp"
#include "test_util.hpp"

#include "spacecross/crossing.hpp"
#include "spacecross/generators.hpp"
#include "spacecross/pipeline.hpp"
#include "spacecross/sametype.hpp"
#include "spacecross/stair.hpp"
#include "spacecross/topology.hpp"
#include "spacecross/transversal.hpp"
#include "spacecross/yaoyao.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace spacecross;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using i128 = __int128;

i128 ipow(i128 b, int e) {
  i128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome predicate_vs_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  int compared = 0, disagree = 0, positives = 0;
  for (int i = 0; i < 10000; ++i) {
    std::array<Segment3, 4> segs;
    for (auto& s : segs) s = testutil::random_segment(rng, 64);
    const auto num = oracle::segments_have_transversal(segs);
    const auto res = transversal_exists_segments(segs);
    positives += res.exists;
    if (num.margin <= 1e-6) continue;
    ++compared;
    if (res.exists != num.exists) ++disagree;
  }
  const double secs = elapsed(t0);
  std::ostringstream os;
  os << compared << " compared, " << disagree << " disagreements, " << positives << " positives, " << secs << " s";
  return {disagree == 0 && compared > 9000 && secs <= 120, os.str()};
}

Outcome conway_gordon() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1002);
  int accepted = 0, skipped = 0, bad = 0;
  while (accepted < 1000) {
    std::array<Point3, 6> pts;
    for (auto& p : pts) p = testutil::random_point(rng, 1024);
    ConwayGordonResult res;
    try {
      res = conway_gordon_check(pts);
    } catch (const DegeneratePosition&) {
      ++skipped;
      continue;
    } catch (const InvariantFailure&) {
      ++bad;
      ++accepted;
      continue;
    }
    if (res.parity_sum != 1 || res.odd_pair.lk % 2 == 0) ++bad;
    ++accepted;
  }
  const double secs = elapsed(t0);
  std::ostringstream os;
  os << accepted << " configurations, " << bad << " failures, " << skipped << " degenerate skipped, " << secs << " s";
  return {bad == 0 && secs <= 120, os.str()};
}

PolygonalCycle subdivide_random_edge(const PolygonalCycle& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  std::uniform_int_distribution<long> num(1, 63);
  const std::size_t i = pick(rng);
  const auto s = c.segment(i);
  const Rational t(num(rng), 64);
  PolygonalCycle out = c;
  out.points.insert(out.points.begin() + static_cast<long>(i) + 1, s.p + t * (s.q - s.p));
  return out;
}

Outcome linking_invariance() {
  auto [a, b] = hopf_pair(0);
  int bad = 0;
  if (linking_number(a, b) != 1) ++bad;
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 100; ++i) {
    auto& c = rng() & 1 ? a : b;
    c = subdivide_random_edge(c, rng);
    if (linking_number(a, b) != 1) ++bad;
  }
  int directions = 0;
  for (long t = 1; directions < 10 && t < 10000; ++t) {
    const auto lk = linking_number_along(a, b, t);
    if (!lk) continue;
    ++directions;
    if (*lk != 1) ++bad;
  }
  auto mirror = [](PolygonalCycle c) {
    for (auto& p : c.points) p.z = -p.z;
    return c;
  };
  const int mirrored = linking_number(mirror(a), mirror(b));
  std::ostringstream os;
  os << "lk +1 over 100 subdivisions (" << a.size() + b.size() << " vertices) and " << directions
     << " directions, mirror " << mirrored << ", " << bad << " failures";
  return {bad == 0 && directions == 10 && mirrored == -1, os.str()};
}

Outcome lifted_planar() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<int> nd(5, 10);
  int violations = 0, nonzero = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = nd(rng);
    std::uniform_int_distribution<std::int64_t> md(n, std::min<std::int64_t>(2L * n, n * (n - 1) / 2));
    const auto planar = random_planar_drawing(n, md(rng), 64, rng());
    const std::int64_t pc = count_planar_crossings(planar);
    const auto lifted = lift_to_sphere(planar, {8, rng()});
    const std::int64_t sc = count_line_crossings(lifted).count;
    nonzero += sc > 0;
    if (sc > pc * (pc - 1) / 2) ++violations;
  }
  std::ostringstream os;
  os << "200 drawings, " << violations << " violations, " << nonzero << " with space crossings, " << elapsed(t0)
     << " s";
  return {violations == 0, os.str()};
}

Outcome candidate_bound() {
  const auto t0 = std::chrono::steady_clock::now();
  long checked = 0, violations = 0;
  for (int n = 8; n <= 24; ++n) {
    const auto by_d = candidate_counts_by_D(n);
    const std::int64_t mmax = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (std::int64_t m = 1; m <= mmax; ++m) {
      const int D = interval_D(n, m);
      const i128 c = by_d[std::min(D, n)];
      ++checked;
      if (c * ipow(n, 4) > 6720 * ipow(m, 6) || c > 105 * ipow(n, 2) * ipow(D, 6)) ++violations;
    }
  }
  // The shared-pass table against the direct counter on a few points.
  int mismatches = 0;
  for (auto [n, m] : std::vector<std::pair<int, std::int64_t>>{{8, 12}, {10, 30}, {12, 20}, {14, 91}})
    if (candidate_counts_by_D(n)[interval_D(n, m)] != count_candidate_quadruples(n, m).count) ++mismatches;
  const double secs = elapsed(t0);
  std::ostringstream os;
  os << checked << " (n, m) pairs, " << violations << " violations, " << mismatches << " table mismatches, " << secs
     << " s";
  return {violations == 0 && mismatches == 0 && secs <= 600, os.str()};
}

// Components by marking the unit gaps each interval covers.
int components_by_gaps(const std::array<std::array<int, 2>, 4>& pairs) {
  std::array<bool, 9> covered{};
  for (const auto& p : pairs)
    for (int g = p[0]; g < p[1]; ++g) covered[g] = true;
  int runs = 0;
  for (int g = 1; g <= 7; ++g)
    if (covered[g] && !covered[g - 1]) ++runs;
  return runs;
}

Outcome order_types() {
  const auto types = enumerate_order_types();
  std::set<std::array<std::array<int, 2>, 4>> distinct;
  int mismatches = 0;
  std::map<int, int> hist;
  for (const auto& t : types) {
    distinct.insert(t.pairs);
    if (t.components != components_by_gaps(t.pairs)) ++mismatches;
    ++hist[t.components];
  }
  // Independent enumeration of matchings of 1..8.
  std::map<int, int> brute;
  std::function<void(std::array<std::array<int, 2>, 4>&, int, unsigned)> rec =
      [&](std::array<std::array<int, 2>, 4>& cur, int k, unsigned used) {
        if (k == 4) {
          ++brute[components_by_gaps(cur)];
          return;
        }
        int a = 1;
        while (used >> a & 1) ++a;
        for (int b = a + 1; b <= 8; ++b)
          if (!(used >> b & 1)) {
            cur[k] = {a, b};
            rec(cur, k + 1, used | 1u << a | 1u << b);
          }
      };
  std::array<std::array<int, 2>, 4> cur{};
  rec(cur, 0, 0);
  const bool hist_ok = hist == brute;

  // Counting step: each type with r <= 2 components contributes at most
  // n^r D^(8-r), and the sum stays within 105 n^2 D^6.
  long cases = 0, step_violations = 0;
  for (int n = 8; n <= 14; ++n) {
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(n) * (n - 1) / 2; ++m) {
      const int D = interval_D(n, m);
      const auto cc = count_candidate_quadruples(n, m);
      i128 bound = 0, total = 0;
      for (std::size_t i = 0; i < types.size(); ++i) {
        const int r = types[i].components;
        if (r > 2) {
          if (cc.per_type[i] != 0) ++step_violations;
          continue;
        }
        const i128 b = ipow(n, r) * ipow(D, 8 - r);
        if (cc.per_type[i] > b) ++step_violations;
        bound += b;
        total += cc.per_type[i];
      }
      if (total != cc.count || bound > 105 * ipow(n, 2) * ipow(D, 6)) ++step_violations;
      ++cases;
    }
  }
  std::ostringstream os;
  os << types.size() << " types (" << distinct.size() << " distinct), components";
  for (auto [r, c] : hist) os << " " << r << ":" << c;
  os << ", " << mismatches << " classification mismatches, counting step over " << cases << " cases with "
     << step_violations << " violations";
  return {types.size() == 105 && distinct.size() == 105 && mismatches == 0 && hist_ok && step_violations == 0,
          os.str()};
}

Outcome stair_geometry() {
  const auto t0 = std::chrono::steady_clock::now();
  long quadruples = 0, geometric = 0, missed = 0;
  auto check = [&](int n, std::int64_t m, const StretchedGrid& g) {
    const auto sd = standard_stair_drawing(n, m, g);
    const auto straight = standard_straight_drawing(n, m, g);
    for (const auto& tuple : enumerate_disjoint_tuples(straight.graph, 4)) {
      ++quadruples;
      if (!tuple_crossing(straight, tuple)) continue;
      ++geometric;
      std::array<std::array<int, 2>, 4> anchors;
      for (int i = 0; i < 4; ++i) {
        const Edge& e = sd.graph.edges()[tuple[i]];
        anchors[i] = {sd.diagonal_index[e.u], sd.diagonal_index[e.v]};
        if (anchors[i][0] > anchors[i][1]) std::swap(anchors[i][0], anchors[i][1]);
      }
      if (!stair_crossing_exists(anchors).exists) ++missed;
    }
  };
  for (int n = 4; n <= 6; ++n) check(n, static_cast<std::int64_t>(n) * (n - 1) / 2, StretchedGrid::explicit_default(5 * n));
  check(8, 28, StretchedGrid::explicit_default(40));
  const auto close = stairchecks::closeness_samples(StretchedGrid::explicit_default(30), 1000, 1007);
  std::ostringstream os;
  os << quadruples << " quadruples, " << geometric << " geometric crossings, " << missed << " not stair-crossings; "
     << close.failures << "/" << close.samples << " closeness failures, " << elapsed(t0) << " s";
  return {missed == 0 && close.failures == 0 && close.samples == 1000 && quadruples > 0, os.str()};
}

Outcome hexgrid() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream os;
  for (int sub : {8, 16}) {
    const auto h = hexgrid_construction(2, sub);
    const auto count = count_line_crossings(h.drawing).count;
    os << "subdivision " << sub << ": count " << count << " (" << h.graph.n() << " vertices, " << h.graph.m()
       << " edges); ";
    if (count == 0) {
      os << elapsed(t0) << " s";
      return {true, os.str()};
    }
  }
  os << elapsed(t0) << " s";
  return {false, os.str()};
}

Outcome same_type() {
  const auto t0 = std::chrono::steady_clock::now();
  int constancy = 0, size_ok = 0, oracle_runs = 0, oracle_ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = random_same_type_instance(81, 2000 + seed);
    const auto res = same_type_refine(inst.sets, inst.polys);
    constancy += sign_constant(inst.sets, inst.polys, res.retained);
    bool sizes = true;
    std::vector<int> want;
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      want.push_back(static_cast<int>(res.retained[i].size()));
      sizes = sizes && meets_epsilon(res.retained[i].size(), inst.sets[i].points.size(), res.epsilon_exponent);
    }
    size_ok += sizes;
    if (brute_force_search_space(inst.sets, want) <= 1e7) {
      ++oracle_runs;
      oracle_ok += brute_force_same_type(inst.sets, inst.polys, want).has_value();
    }
  }
  std::ostringstream os;
  os << "50 instances: " << constancy << " sign-constant, " << size_ok << " meet eps, oracle confirmed " << oracle_ok
     << "/" << oracle_runs << ", " << elapsed(t0) << " s";
  return {constancy == 50 && size_ok == 50 && oracle_ok == oracle_runs && oracle_runs > 0, os.str()};
}

// Closed-cone counts recomputed from the generators alone.
bool cone_counts_ok(const YaoYaoPartition& p, const PointMultiset& F) {
  const int need = (F.size() + (1 << p.dim) - 1) >> p.dim;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    int count = 0;
    for (const auto& x : F.points) {
      if (p.dim == 1) {
        const Rational d = x[0] - p.center[0];
        count += sgn(d) == 0 || sgn(d) == sgn(p.generators[c][0]);
        continue;
      }
      const auto& g1 = p.generators[c];
      const auto& g2 = p.generators[(c + 1) % 4];
      const Rational dx = x[0] - p.center[0], dy = x[1] - p.center[1];
      const Rational c1 = g1[0] * dy - g1[1] * dx, c2 = dx * g2[1] - dy * g2[0];
      count += sgn(c1) >= 0 && sgn(c2) >= 0;
    }
    if (count < need) return false;
  }
  return true;
}

Outcome yao_yao() {
  std::mt19937_64 rng(1010);
  int bad = 0, perturbed = 0;
  for (int i = 0; i < 100; ++i) {
    const int dim = 1 + i % 2;
    const int n = std::uniform_int_distribution<int>(4, 120)(rng);
    const long den = i % 3 == 0 ? 4 : 64;
    const auto F = random_multiset(dim, n, den, rng());
    const auto p = yao_yao_partition(F);
    perturbed += p.perturbed;
    if (!cone_counts_ok(p, F) || !cells_meet_count(p, F) || !halfspace_property(p) || !cells_cover_space(p)) ++bad;
  }
  std::ostringstream os;
  os << "100 multisets, " << bad << " failures, " << perturbed << " used the perturbation";
  return {bad == 0, os.str()};
}

Outcome bisection() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  long retries = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_graph_nm(200, 4000, 3000 + seed);
    const auto b = random_bisection(g, seed);
    if (!meets_bisection_bound(b.e1, 200, 4000) || !meets_bisection_bound(b.e2, 200, 4000)) ++bad;
    retries += b.retries;
  }
  const double mean = retries / 100.0;
  std::ostringstream os;
  os << "100 graphs, " << bad << " below bound, mean retries " << mean << ", " << elapsed(t0) << " s";
  return {bad == 0 && mean <= 2.0, os.str()};
}

Outcome boost_pipeline() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fx = disjoint_k6_fixture(2, 1012);
  BoostOptions opt;
  opt.seed = 1012;
  opt.sides = fx.sides;
  const auto rep = boost_witness_pipeline(fx.drawing, opt);
  int unverified = 0;
  std::set<std::vector<int>> seen;
  for (const auto& w : rep.witnesses) {
    if (!verify_witness(fx.drawing, w)) ++unverified;
    auto e = w.edges;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) ++unverified;
    seen.insert(e);
  }
  const bool distinct = seen.size() == rep.witnesses.size();
  std::ostringstream os;
  os << rep.witnesses.size() << " witnesses, " << unverified << " unverified, "
     << (distinct ? "pairwise distinct" : "duplicates present") << ", " << elapsed(t0) << " s";
  return {!rep.witnesses.empty() && unverified == 0 && distinct, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"segment transversal predicate vs 256-bit oracle", predicate_vs_oracle},
      {"Conway-Gordon parity", conway_gordon},
      {"linking number invariance", linking_invariance},
      {"lifted planar drawings", lifted_planar},
      {"candidate quadruple bound", candidate_bound},
      {"order types and counting step", order_types},
      {"stair/geometry consistency", stair_geometry},
      {"hexagonal grid drawing", hexgrid},
      {"same-type refinement", same_type},
      {"Yao-Yao partitions", yao_yao},
      {"random bisection", bisection},
      {"boost witness pipeline", boost_pipeline},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s: %s -- %s\n", id, v.pass ? "PASS" : "FAIL", criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
