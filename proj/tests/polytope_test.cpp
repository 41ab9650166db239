#include "cgrank/polytope.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace cgrank {
namespace {

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

PointSet random_set(std::mt19937_64& rng, int n) {
  PointSet s(n);
  for (VertexIndex v = 0; v < s.universe(); ++v) {
    if (rng() & 1U) s.insert(v);
  }
  return s;
}

// Brute-force vertex enumeration: every n-subset of rows (box included) that
// determines a unique point; keep the feasible ones.
std::vector<Point> brute_vertices(const HPolytope& p) {
  const HPolytope b = with_box(p);
  std::vector<LinIneq> rows = b.ineqs;
  rows.insert(rows.end(), b.eqs.begin(), b.eqs.end());
  const int n = p.n;
  std::set<Point> out;
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      linalg::Matrix m;
      for (int k : idx) {
        RationalVector r(n + 1);
        for (int j = 0; j < n; ++j) r[j] = rows[k].coeffs[j];
        r[n] = rows[k].rhs;
        m.push_back(r);
      }
      const auto piv = linalg::rref(m);
      if (static_cast<int>(piv.size()) != n || piv.back() == static_cast<std::size_t>(n)) return;
      Point x(n);
      for (int j = 0; j < n; ++j) x[j] = m[j][n];
      if (b.contains(x)) out.insert(x);
      return;
    }
    for (int k = start; k < static_cast<int>(rows.size()); ++k) {
      idx[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

HPolytope random_system(std::mt19937_64& rng, int n, int rows) {
  HPolytope p{n, {}, {}};
  for (int r = 0; r < rows; ++r) {
    LinIneq q{IntVector(n), 0};
    for (auto& c : q.coeffs) c = static_cast<Int>(rng() % 7) - 3;
    q.rhs = static_cast<Int>(rng() % 7) - 4;
    if (!q.is_zero()) p.ineqs.push_back(q);
  }
  return p;
}

TEST(HullFacets, ThreePointTriangle) {
  PointSet s(2);
  s.insert(0b00);
  s.insert(0b10);
  s.insert(0b01);
  const auto h = hull_facets(s);
  EXPECT_TRUE(h.eqs.empty());
  const std::set<LinIneq> got(h.ineqs.begin(), h.ineqs.end());
  const std::set<LinIneq> want{LinIneq{{1, 0}, 0}, LinIneq{{0, 1}, 0}, LinIneq{{-1, -1}, -1}};
  EXPECT_EQ(got, want);
}

TEST(HullFacets, FullCubeIsTheBox) {
  for (int n = 1; n <= 4; ++n) {
    const auto h = hull_facets(PointSet::full(n));
    EXPECT_TRUE(h.eqs.empty());
    const auto rows = box_rows(n);
    EXPECT_EQ(std::set<LinIneq>(h.ineqs.begin(), h.ineqs.end()), std::set<LinIneq>(rows.begin(), rows.end()));
  }
}

TEST(HullFacets, SinglePointGivesEquations) {
  PointSet s(3);
  s.insert(CubePoint::from_bits({1, 0, 1}).index());
  const auto h = hull_facets(s);
  EXPECT_TRUE(h.ineqs.empty());
  const std::vector<LinIneq> want{LinIneq{{1, 0, 0}, 1}, LinIneq{{0, 1, 0}, 0}, LinIneq{{0, 0, 1}, 1}};
  EXPECT_EQ(h.eqs, want);
}

TEST(HullFacets, EmptySetIsCanonicalInfeasible) {
  const auto h = hull_facets(PointSet(3));
  EXPECT_EQ(h, infeasible_polytope(3));
  EXPECT_TRUE(vertices(h).empty());
}

TEST(Vertices, Examples) {
  EXPECT_EQ(vertices(box(2)).vertices.size(), 4U);
  // x1 + x2 <= 3/2 stored as -2x1 - 2x2 >= -3.
  const HPolytope cut{2, {LinIneq{{-2, -2}, -3}}, {}};
  const auto v = vertices(cut);
  const std::vector<Point> want{pt({0, 0}), pt({0, 1}), pt({Rational(1, 2), 1}), pt({1, 0}),
                                pt({1, Rational(1, 2)})};
  EXPECT_EQ(v.vertices, want);
  EXPECT_TRUE(vertices(HPolytope{2, {LinIneq{{2, 2}, 5}}, {}}).empty());
}

TEST(Vertices, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    const auto p = random_system(rng, n, 1 + trial % 4);
    EXPECT_EQ(vertices(p).vertices, brute_vertices(p)) << "trial " << trial;
  }
}

TEST(Vertices, HandlesEquations) {
  const HPolytope p{3, {}, {LinIneq{{1, 1, 1}, 1}}};
  const auto v = vertices(p);
  EXPECT_EQ(v.vertices, (std::vector<Point>{pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 0, 0})}));
}

TEST(RoundTrip, HullVerticesGiveBackTheSetExhaustivelyForSmallN) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << cube_size(n)); ++w) {
      const auto s = PointSet::from_word(n, w);
      const auto v = vertices(hull_facets(s));
      EXPECT_EQ(v.vertices, as_points(s)) << "n=" << n << " word=" << w;
    }
  }
}

TEST(RoundTrip, HullVerticesGiveBackTheSetSampled) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2 == 0 ? 4 : 5;
    const auto s = random_set(rng, n);
    const auto h = hull_facets(s);
    EXPECT_EQ(vertices(h).vertices, as_points(s));
    for (const auto& q : h.ineqs) {
      EXPECT_EQ(primitive_form(q), q);
    }
  }
}

TEST(LpMin, Examples) {
  EXPECT_EQ(*lp_min(box(2), {1, 1}), 0);
  const HPolytope cut{2, {LinIneq{{-2, -2}, -3}}, {}};
  EXPECT_EQ(*lp_min(cut, {-1, -1}), Rational(-3, 2));
  EXPECT_FALSE(lp_min(HPolytope{2, {LinIneq{{2, 2}, 5}}, {}}, {1, 0}).has_value());
  EXPECT_THROW(lp_min(box(2), {1, 1, 1}), DimensionMismatch);
}

TEST(LpMin, AttainedAtAVertex) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    auto p = random_system(rng, n, 2 + trial % 4);
    if (trial % 5 == 0) p.eqs.push_back(LinIneq{IntVector(n, 1), 1});
    IntVector c(n);
    for (auto& x : c) x = static_cast<Int>(rng() % 9) - 4;
    const auto lp = lp_min(p, c);
    const auto scan = vertices(p).min(c);
    ASSERT_EQ(lp.has_value(), scan.has_value()) << "trial " << trial;
    if (lp) {
      EXPECT_EQ(*lp, *scan);
      EXPECT_GT(denominator(*lp), 0);
      EXPECT_EQ(boost::multiprecision::gcd(numerator(*lp), denominator(*lp)) == 1 || *lp == 0, true);
    }
  }
}

TEST(LpMinRows, DetectsUnboundedAndInfeasible) {
  const std::vector<LinIneq> half{LinIneq{{1, 0}, 0}};
  EXPECT_EQ(lp_min_rows(2, half, {}, {-1, 0}).status, LpStatus::Unbounded);
  EXPECT_EQ(lp_min_rows(2, half, {}, {1, 0}).value, 0);
  const std::vector<LinIneq> clash{LinIneq{{1, 0}, 1}, LinIneq{{-1, 0}, 0}};
  EXPECT_EQ(lp_min_rows(2, clash, {}, {0, 1}).status, LpStatus::Infeasible);
}

TEST(RemoveRedundancy, Examples) {
  HPolytope p = box(2);
  p.ineqs.push_back(LinIneq{{1, 1}, -1});
  EXPECT_EQ(remove_redundancy(p), box(2));
  EXPECT_EQ(remove_redundancy(box(3)), box(3));
  HPolytope dup = box(2);
  dup.ineqs.push_back(LinIneq{{2, 0}, 0});
  EXPECT_EQ(remove_redundancy(dup).ineqs.size(), 4U);
  EXPECT_EQ(remove_redundancy(HPolytope{1, {LinIneq{{1}, 1}, LinIneq{{-1}, 0}}, {}}), infeasible_polytope(1));
}

TEST(RemoveRedundancy, PreservesVertices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    HPolytope p = with_box(random_system(rng, 3, 2 + trial % 5));
    const auto r = remove_redundancy(p);
    EXPECT_LE(r.ineqs.size(), p.ineqs.size());
    EXPECT_EQ(vertices(r).vertices, vertices(p).vertices) << "trial " << trial;
  }
}

TEST(PolytopesEqual, Examples) {
  EXPECT_TRUE(polytopes_equal(box(2), box(2)));
  const HPolytope cut{2, {LinIneq{{-2, -2}, -3}}, {}};
  EXPECT_FALSE(polytopes_equal(box(2), cut));
  EXPECT_TRUE(polytopes_equal(infeasible_polytope(2), HPolytope{2, {LinIneq{{1, 1}, 3}}, {}}));
  EXPECT_THROW(polytopes_equal(box(2), box(3)), DimensionMismatch);
}

TEST(PolytopesEqual, HullOfVerticesRoundTrip) {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const auto h = hull_facets(random_set(rng, n));
    EXPECT_TRUE(polytopes_equal(h, describe(vertices(h))));
  }
}

TEST(IsValid, Examples) {
  EXPECT_TRUE(is_valid(box(2), LinIneq{{1, -1}, -1}));
  const HPolytope cut{2, {LinIneq{{-2, -2}, -3}}, {}};
  EXPECT_FALSE(is_valid(cut, LinIneq{{1, 1}, 1}));
  EXPECT_TRUE(is_valid(infeasible_polytope(2), LinIneq{{1, 1}, 7}));
}

TEST(Describe, RationalPointsAndLowerDimension) {
  // Segment from (1/2, 0, 1) to (1, 1/2, 1).
  const auto h = describe(3, {pt({Rational(1, 2), 0, 1}), pt({1, Rational(1, 2), 1})});
  EXPECT_EQ(h.eqs.size(), 2U);
  EXPECT_EQ(h.ineqs.size(), 2U);
  EXPECT_EQ(vertices(h).vertices, (std::vector<Point>{pt({Rational(1, 2), 0, 1}), pt({1, Rational(1, 2), 1})}));
}

}  // namespace
}  // namespace cgrank
