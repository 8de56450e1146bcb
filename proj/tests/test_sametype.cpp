#include "spacecross/errors.hpp"
#include "spacecross/generators.hpp"
#include "spacecross/sametype.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace spacecross;

namespace {

Rational frac(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SparsePolynomial poly(std::vector<int> blocks, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  SparsePolynomial f(std::move(blocks));
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

// 4 + 2 x1 x2 + 3 x1 x2^2 + x1 x2^3 + 7 x1^2 x2
SparsePolynomial worked_example() {
  return poly({1, 1}, {{{0, 0}, 4}, {{1, 1}, 2}, {{1, 2}, 3}, {{1, 3}, 1}, {{2, 1}, 7}});
}

PointMultiset line_set(std::vector<long> xs) {
  PointMultiset F{1, {}};
  for (long x : xs) F.points.push_back({Rational(x)});
  return F;
}

// Independent cone test: d lies between ga and gb counterclockwise.
bool oracle_in_cone(const BlockPoint& ga, const BlockPoint& gb, const BlockPoint& d) {
  auto cr = [](const BlockPoint& a, const BlockPoint& b) { return sgn(a[0] * b[1] - a[1] * b[0]); };
  return cr(ga, d) >= 0 && cr(d, gb) >= 0;
}

void expect_counts(const YaoYaoPartition& p, const PointMultiset& F) {
  const int cells = 1 << p.dim;
  ASSERT_EQ(static_cast<int>(p.cells.size()), cells);
  for (int c = 0; c < cells; ++c) {
    int count = 0;
    for (const auto& q : F.points) {
      BlockPoint d(p.dim);
      for (int k = 0; k < p.dim; ++k) d[k] = q[k] - p.center[k];
      if (p.dim == 1)
        count += sgn(d[0]) * sgn(p.generators[p.cells[c].generators[0]][0]) >= 0;
      else
        count += oracle_in_cone(p.generators[p.cells[c].generators[0]], p.generators[p.cells[c].generators[1]], d);
    }
    EXPECT_GE(count * cells, F.size()) << "cell " << c;
  }
}

// Halfspace property sampled over many rational directions.
void expect_halfspaces(const YaoYaoPartition& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    BlockPoint a(p.dim);
    for (auto& x : a) x = coord(rng);
    bool found = false;
    for (const auto& cell : p.cells) {
      bool all = true;
      for (int g : cell.generators) {
        Rational dot = 0;
        for (int k = 0; k < p.dim; ++k) dot += a[k] * p.generators[g][k];
        all = all && sgn(dot) <= 0;
      }
      found = found || all;
    }
    EXPECT_TRUE(found);
  }
}

}  // namespace

TEST(Polynomial, TermCountsOfWorkedExample) {
  const auto f = worked_example();
  EXPECT_EQ(f.terms().size(), 5u);
  EXPECT_EQ(block_term_count(f, 0), 3);
  EXPECT_EQ(block_term_count(f, 1), 4);
  EXPECT_THROW(block_term_count(f, 2), ValidationError);
}

TEST(Polynomial, LinearWithConstantHasTwoTerms) {
  const auto f = poly({2}, {{{1, 0}, 3}, {{0, 1}, -1}, {{0, 0}, 5}});
  EXPECT_EQ(block_term_count(f, 0), 3);
  const auto g = poly({1, 1}, {{{1, 1}, 3}, {{2, 0}, 5}});
  EXPECT_EQ(block_term_count(g, 1), 2);
}

TEST(Polynomial, LinearisationOfWorkedExample) {
  const auto lin = linearize_last_block(worked_example());
  ASSERT_EQ(lin.dimension(), 3);
  EXPECT_EQ(lin.monomials, (std::vector<std::vector<int>>{{1}, {2}, {3}}));
  const auto expected =
      poly({1, 3}, {{{0, 0, 0, 0}, 4}, {{1, 1, 0, 0}, 2}, {{2, 1, 0, 0}, 7}, {{1, 0, 1, 0}, 3}, {{1, 0, 0, 1}, 1}});
  EXPECT_EQ(lin.linear, expected);
  EXPECT_EQ(lin.lift({frac(-2, 3)}), (BlockPoint{frac(-2, 3), frac(4, 9), frac(-8, 27)}));
}

TEST(Polynomial, AffineLastBlockLiftsToIdentity) {
  const auto f = poly({1, 2}, {{{2, 1, 0}, 1}, {{0, 0, 1}, -3}, {{1, 0, 0}, 2}});
  const auto lin = linearize_last_block(f);
  EXPECT_EQ(lin.monomials, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  const BlockPoint p{frac(5, 7), frac(-1, 3)};
  EXPECT_EQ(lin.lift(p), (BlockPoint{p[1], p[0]}));
}

TEST(Polynomial, LinearisationAgreesAtRandomPoints) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> ex(0, 3), co(-9, 9), dim(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> blocks{dim(rng), dim(rng), dim(rng)};
    SparsePolynomial f(blocks);
    for (int t = 0; t < 8; ++t) {
      std::vector<int> e(f.num_vars());
      for (auto& x : e) x = ex(rng);
      f.add_term(e, frac(co(rng), 1 + trial % 4));
    }
    const auto lin = linearize_last_block(f);
    for (int s = 0; s < 20; ++s) {
      std::vector<BlockPoint> pts;
      for (int d : blocks) {
        BlockPoint p;
        for (int c = 0; c < d; ++c) p.push_back(frac(co(rng), 1 + ex(rng)));
        pts.push_back(p);
      }
      const BlockPoint z = lin.lift(pts[2]);
      EXPECT_EQ(f.evaluate({&pts[0], &pts[1], &pts[2]}), lin.linear.evaluate({&pts[0], &pts[1], &z}));
    }
  }
}

TEST(Polynomial, SubstitutionMatchesEvaluation) {
  const auto f = worked_example();
  const BlockPoint x{frac(3, 2)}, y{frac(-5, 4)};
  const auto g = f.substitute_last(y);
  EXPECT_EQ(g.blocks(), std::vector<int>{1});
  EXPECT_EQ(g.evaluate({&x}), f.evaluate({&x, &y}));
}

TEST(Polynomial, JsonRoundTripAndErrors) {
  const auto f = worked_example().scaled(frac(-3, 5));
  const auto j = polynomial_to_json(f);
  EXPECT_EQ(polynomial_from_json(j), f);
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(j.dump())), f);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"blocks":[1]})")), ValidationError);
  EXPECT_THROW(
      polynomial_from_json(nlohmann::json::parse(R"({"blocks":[1],"monomials":[{"coeff":"1","exponents":{"x2.1":1}}]})")),
      ValidationError);
  EXPECT_THROW(
      polynomial_from_json(nlohmann::json::parse(R"({"blocks":[1],"monomials":[{"coeff":"1","exponents":{"x1.1":-1}}]})")),
      ValidationError);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"blocks":[0],"monomials":[]})")), ValidationError);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"blocks":[1],"monomials":[{"coeff":"0.5"}]})")),
               ValidationError);
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  SparsePolynomial f({1});
  f.add_term({1}, 2);
  f.add_term({1}, -2);
  f.add_term({2}, 0);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term({1, 1}, 1), ValidationError);
}

TEST(YaoYao, MedianSplitOnALine) {
  const auto F = line_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const auto p = yao_yao_partition(F);
  EXPECT_EQ(p.center, (BlockPoint{frac(11, 2)}));
  for (const auto& c : p.cells) EXPECT_EQ(c.members.size(), 5u);
  expect_counts(p, F);
  EXPECT_TRUE(halfspace_property(p));
}

TEST(YaoYao, RepeatedValuesOnALine) {
  const auto F = line_set({3, 3, 3, 3, 3, 1, 9});
  const auto p = yao_yao_partition(F);
  EXPECT_EQ(p.center, (BlockPoint{Rational(3)}));
  expect_counts(p, F);
}

TEST(YaoYao, UniformGrid) {
  for (int side : {2, 4, 6, 9}) {
    PointMultiset F{2, {}};
    for (int i = 0; i < side; ++i)
      for (int j = 0; j < side; ++j) F.points.push_back({Rational(i), Rational(j)});
    const auto p = yao_yao_partition(F);
    EXPECT_FALSE(p.perturbed);
    expect_counts(p, F);
    expect_halfspaces(p, side);
    EXPECT_TRUE(halfspace_property(p));
  }
}

TEST(YaoYao, CollinearAndCoincidentPoints) {
  PointMultiset diag{2, {}}, flat{2, {}}, same{2, {}};
  for (int i = 0; i < 12; ++i) {
    diag.points.push_back({Rational(i), Rational(2 * i + 1)});
    flat.points.push_back({Rational(i), Rational(0)});
    same.points.push_back({frac(1, 3), frac(2, 3)});
  }
  for (const auto* F : {&diag, &flat, &same}) {
    const auto p = yao_yao_partition(*F);
    expect_counts(p, *F);
    EXPECT_TRUE(halfspace_property(p));
  }
}

TEST(YaoYao, ForcedPerturbationHoldsOnPerturbedSet) {
  PointMultiset diag{2, {}};
  for (int i = 0; i < 12; ++i) diag.points.push_back({Rational(i), Rational(i)});
  YaoYaoOptions opt;
  opt.force_perturbation = true;
  const auto p = yao_yao_partition(diag, opt);
  EXPECT_TRUE(p.perturbed);
  const auto moved = perturb_multiset(diag);
  EXPECT_NE(moved.points[0], diag.points[0]);
  EXPECT_TRUE(cells_meet_count(p, moved));
  expect_counts(p, moved);
  EXPECT_TRUE(halfspace_property(p));
}

TEST(YaoYao, RandomMultisets) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int dim = 1 + static_cast<int>(s % 2);
    const auto F = random_multiset(dim, 20 + static_cast<int>(s % 13), 1 + static_cast<long>(s % 7), s);
    const auto p = yao_yao_partition(F);
    expect_counts(p, F);
    expect_halfspaces(p, s);
    EXPECT_TRUE(cells_cover_space(p));
    // every member lies in its cell's simplex
    for (int c = 0; c < static_cast<int>(p.cells.size()); ++c)
      for (int i : p.cells[c].members)
        for (const auto& w : p.barycentric(c, F.points[i])) EXPECT_GE(sgn(w), 0);
  }
}

TEST(YaoYao, HalfspaceSweepRejectsSkewedCones) {
  YaoYaoPartition p;
  p.dim = 2;
  p.center = {Rational(0), Rational(0)};
  // the lower ray is not opposite the upper one
  p.generators = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(-1), Rational(0)},
                  {Rational(1), Rational(-3)}};
  for (int c = 0; c < 4; ++c) p.cells.push_back({{c, (c + 1) % 4}, {}, {}});
  EXPECT_TRUE(cells_cover_space(p));
  EXPECT_FALSE(halfspace_property(p));
  p.generators[3] = {Rational(0), Rational(-1)};
  EXPECT_TRUE(halfspace_property(p));
}

TEST(YaoYao, Preconditions) {
  EXPECT_THROW(yao_yao_partition(line_set({1})), PreconditionViolated);
  PointMultiset F{2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  EXPECT_THROW(yao_yao_partition(F), PreconditionViolated);
  PointMultiset G{3, std::vector<BlockPoint>(10, BlockPoint(3, Rational(0)))};
  EXPECT_THROW(yao_yao_partition(G), PreconditionViolated);
  PointMultiset bad{2, {{Rational(0)}}};
  EXPECT_THROW(yao_yao_partition(bad), ValidationError);
}

TEST(SameType, AlreadyConstant) {
  const auto f = poly({1, 1}, {{{1, 0}, 1}, {{0, 1}, -1}});
  const std::vector<PointMultiset> sets{line_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
                                        line_set({11, 12, 13, 14, 15, 16, 17, 18, 19, 20})};
  const auto r = same_type_refine(sets, {f});
  EXPECT_EQ(r.signs, std::vector<int>{-1});
  EXPECT_EQ(r.retained[0].size(), 10u);
  EXPECT_EQ(r.retained[1].size(), 10u);
}

TEST(SameType, ProductOverSymmetricSets) {
  const auto f = poly({1, 1}, {{{1, 1}, 1}});
  const auto F = line_set({-4, -3, -2, -1, 1, 2, 3, 4});
  const std::vector<PointMultiset> sets{F, F};
  const auto r = same_type_refine(sets, {f});
  EXPECT_TRUE(sign_constant(sets, {f}, r.retained));
  EXPECT_EQ(r.epsilon_exponent, 3);
  for (const auto& v : r.retained) EXPECT_GE(v.size() * 27, 8u);
  EXPECT_NE(r.signs[0], 0);
}

TEST(SameType, SingleBlockKeepsAThird) {
  const auto f = poly({1}, {{{1}, 1}});
  const auto F = line_set({-3, -2, -1, 0, 0, 0, 1, 2, 3});
  const auto r = same_type_refine({F}, {f});
  EXPECT_GE(r.retained[0].size() * 3, 9u);
  // a three-way tie prefers a nonzero sign
  EXPECT_EQ(r.retained[0].size(), 3u);
  EXPECT_NE(r.signs[0], 0);
}

TEST(SameType, WorkedExampleExceedsSupportedDimension) {
  const auto F = line_set({-2, -1, 1, 2, 3});
  EXPECT_THROW(same_type_refine({F, F}, {worked_example()}), PreconditionViolated);
}

TEST(SameType, ConstantInLastBlockAndTinySets) {
  const auto f = poly({1, 1}, {{{1, 0}, 1}, {{0, 0}, -2}});
  const auto F = line_set({0, 1, 2, 3, 4, 5});
  const auto r = same_type_refine({F, F}, {f});
  EXPECT_EQ(r.retained[1].size(), 6u);
  const auto g = poly({1, 2}, {{{1, 1, 0}, 1}, {{0, 0, 1}, -1}});
  PointMultiset two{2, {{Rational(1), Rational(2)}, {Rational(-1), Rational(0)}, {Rational(3), Rational(3)}}};
  const auto r2 = same_type_refine({F, two}, {g});
  EXPECT_TRUE(sign_constant({F, two}, {g}, r2.retained));
}

TEST(SameType, ScaleInvariance) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const auto inst = random_same_type_instance(30, 500 + s);
    const auto base = same_type_refine(inst.sets, inst.polys);
    std::vector<SparsePolynomial> pos, neg;
    for (const auto& f : inst.polys) {
      pos.push_back(f.scaled(frac(7, 3)));
      neg.push_back(f.scaled(-1));
    }
    const auto rp = same_type_refine(inst.sets, pos);
    const auto rn = same_type_refine(inst.sets, neg);
    EXPECT_EQ(rp.retained, base.retained);
    EXPECT_EQ(rp.signs, base.signs);
    EXPECT_EQ(rn.retained, base.retained);
    for (std::size_t j = 0; j < base.signs.size(); ++j) EXPECT_EQ(rn.signs[j], -base.signs[j]);
  }
}

TEST(SameType, RandomInstancesAgreeWithOracle) {
  int checked = 0;
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto inst = random_same_type_instance(27, 900 + s);
    const auto r = same_type_refine(inst.sets, inst.polys);
    std::vector<int> signs;
    EXPECT_TRUE(sign_constant(inst.sets, inst.polys, r.retained, &signs));
    EXPECT_EQ(signs, r.signs);
    std::vector<int> sizes;
    for (const auto& v : r.retained) sizes.push_back(static_cast<int>(v.size()));
    if (brute_force_search_space(inst.sets, sizes) > 1e6) continue;
    const auto found = brute_force_same_type(inst.sets, inst.polys, sizes);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(sign_constant(inst.sets, inst.polys, *found));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(SameType, RejectsMismatchedShapes) {
  const auto f = poly({1, 1}, {{{1, 1}, 1}});
  const auto F = line_set({1, 2});
  EXPECT_THROW(same_type_refine({F}, {f}), ValidationError);
  EXPECT_THROW(same_type_refine({}, {}), PreconditionViolated);
  EXPECT_THROW(same_type_refine({F, PointMultiset{1, {}}}, {f}), PreconditionViolated);
}

TEST(BruteForce, TrivialCases) {
  const auto f = poly({1, 1}, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto one = line_set({5});
  const auto r = brute_force_same_type({one, one}, {f}, {1, 1});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, (std::vector<std::vector<int>>{{0}, {0}}));
  EXPECT_FALSE(brute_force_same_type({one, one}, {f}, {2, 1}).has_value());
}

TEST(BruteForce, FindsAndRefutes) {
  const auto f = poly({1, 1}, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto F = line_set({1, 2, 3, 4});
  const auto yes = brute_force_same_type({F, F}, {f}, {2, 2});
  ASSERT_TRUE(yes.has_value());
  EXPECT_TRUE(sign_constant({F, F}, {f}, *yes));
  EXPECT_FALSE(brute_force_same_type({F, F}, {f}, {3, 3}).has_value());
  // x - y on a 4 x 4 grid: one side must sit strictly below the other
  const auto k1 = brute_force_same_type({F}, {poly({1}, {{{1}, 1}, {{0}, -2}})}, {2});
  ASSERT_TRUE(k1.has_value());
}

TEST(BruteForce, SearchSpaceLimit) {
  const auto f = poly({1, 1}, {{{1, 1}, 1}});
  const auto F = random_multiset(1, 60, 9, 3);
  EXPECT_THROW(brute_force_same_type({F, F}, {f}, {10, 10}), PreconditionViolated);
  EXPECT_THROW(brute_force_same_type({F, F}, {f}, {-1, 1}), ValidationError);
}
