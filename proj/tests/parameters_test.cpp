#include "cgrank/parameters.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "cgrank/generators.hpp"
#include "cgrank/symmetry.hpp"

namespace cgrank {
namespace {

PointSet random_set(std::mt19937_64& rng, int n, unsigned keep_per_4 = 2) {
  PointSet s(n);
  for (VertexIndex v = 0; v < s.universe(); ++v) {
    if (rng() % 4 < keep_per_4) s.insert(v);
  }
  return s;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Notch straight from the definition: scan faces by dimension.
int notch_by_faces(const PointSet& s) {
  for (int d = 0; d <= s.dim(); ++d) {
    bool all = true;
    for (const auto& f : enumerate_faces(s.dim(), d)) {
      if (!face_intersects(f, s)) {
        all = false;
        break;
      }
    }
    if (all) return d;
  }
  return s.dim() + 1;
}

Int int_pow(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

TEST(Notch, Examples) {
  EXPECT_EQ(notch(PointSet(4)), 5);
  EXPECT_EQ(notch(notch_p_example(5, 3)), 3);
  EXPECT_EQ(notch(support_at_least(3, 2)), 2);
  EXPECT_EQ(notch(PointSet::full(3)), 0);
}

TEST(Notch, AgreesWithFaceScan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const auto s = random_set(rng, n, 1 + trial % 3);
    EXPECT_EQ(notch(s), notch_by_faces(s));
  }
}

TEST(Notch, MonotoneOnNestedPairsAtN3) {
  for (std::uint64_t a = 0; a < 256; ++a) {
    const int pa = notch(PointSet::from_word(3, a));
    // Every superset b of a.
    for (std::uint64_t extra = 255 & ~a;; extra = (extra - 1) & (255 & ~a)) {
      EXPECT_GE(pa, notch(PointSet::from_word(3, a | extra)));
      if (extra == 0) break;
    }
  }
}

TEST(Notch, NotchPExampleIsExact) {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      EXPECT_EQ(notch(notch_p_example(n, p)), p) << n << "," << p;
    }
  }
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap(PointSet(3)).delta, 1);
  EXPECT_EQ(gap(PointSet::full(3)).delta, 0);
  const auto two = gap(support_at_least(3, 2));
  EXPECT_EQ(two.delta, 2);
  ASSERT_TRUE(two.lower_bound_facet.has_value());
  EXPECT_EQ(*two.lower_bound_facet, (LinIneq{{1, 1, 1}, 2}));
  EXPECT_EQ(gap_by_deepening(support_at_least(3, 2)).delta, 2);
  EXPECT_EQ(gap(notch_p_example(5, 3)).delta, 1);
}

TEST(Gap, NotchPExampleHasGapOne) {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) EXPECT_EQ(gap(notch_p_example(n, p)).delta, 1);
  }
}

void expect_witness_ok(const PointSet& s, const GapCertificate& g) {
  std::vector<LinIneq> rows;
  for (const auto& f : g.witness_system) {
    for (Int c : f.c) EXPECT_GE(c, 0);
    EXPECT_LE(f.delta, g.delta);
    const auto q = f.expanded();
    EXPECT_TRUE(spanned_by_01(q));
    rows.push_back(q);
  }
  EXPECT_TRUE(polytopes_equal(HPolytope{s.dim(), rows, {}}, hull_facets(s)));
}

TEST(Gap, WitnessSystemDescribesTheHull) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto s = random_set(rng, n, 1 + trial % 3);
    expect_witness_ok(s, gap(s));
    if (n <= 3) expect_witness_ok(s, gap_by_deepening(s));
  }
  expect_witness_ok(PointSet(3), gap(PointSet(3)));
}

TEST(Gap, FastPathMatchesDeepeningOnFullDimensionalSets) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 3;
    const auto s = random_set(rng, n, 3);
    const auto fast = gap(s);
    if (!fast.full_dimensional) continue;
    ++checked;
    EXPECT_EQ(fast.delta, gap_by_deepening(s).delta);
  }
  EXPECT_GT(checked, 20);
}

TEST(Gap, DeepeningAtN3IsExhaustivelyConsistent) {
  for (std::uint64_t w = 0; w < 256; ++w) {
    const auto s = PointSet::from_word(3, w);
    const auto g = gap(s);
    if (g.full_dimensional) {
      EXPECT_EQ(g.delta, gap_by_deepening(s).delta) << w;
    }
  }
}

TEST(ForbiddenGraph, Examples) {
  EXPECT_TRUE(forbidden_graph(PointSet::full(3)).verts.empty());
  PointSet s = PointSet::full(2);
  s.erase(0b11);
  const auto g = forbidden_graph(s);
  ASSERT_EQ(g.verts.size(), 1U);
  EXPECT_EQ(g.verts[0].index(), 0b11U);
  EXPECT_TRUE(g.edges.empty());

  const auto big = forbidden_graph(support_at_least(4, 3));
  EXPECT_EQ(big.verts.size(), 11U);
  // 4 edges from the origin plus 12 from weight-1 to weight-2 points.
  EXPECT_EQ(big.edges.size(), 16U);
  for (const auto& [a, b] : big.edges) {
    EXPECT_EQ(std::popcount(big.verts[a].index() ^ big.verts[b].index()), 1);
  }
}

TEST(MaxSubdivisionOrder, SmallGraphs) {
  EXPECT_EQ(max_subdivision_order(forbidden_graph(PointSet::full(3))), 0);
  PointSet one = PointSet::full(3);
  one.erase(0);
  EXPECT_EQ(max_subdivision_order(forbidden_graph(one)), 0);
  // A path 000 - 100 - 110.
  PointSet path = PointSet::full(3);
  for (VertexIndex v : {0b000U, 0b001U, 0b011U}) path.erase(v);
  EXPECT_EQ(max_subdivision_order(forbidden_graph(path)), 1);
  // A 4-cycle: the face x3 = 0.
  PointSet square = PointSet::full(3);
  for (VertexIndex v : {0b000U, 0b001U, 0b010U, 0b011U}) square.erase(v);
  EXPECT_EQ(max_subdivision_order(forbidden_graph(square)), 2);
}

// Independent oracle for tiny graphs: some edge subset, after suppressing
// degree-2 vertices, is exactly K_k.
bool has_subdivision_brute(const ForbiddenGraph& g, int k) {
  const int v = static_cast<int>(g.verts.size());
  const int e = static_cast<int>(g.edges.size());
  if (k <= 1) return v >= k;
  if (k == 2) return e > 0;
  if (k == 3) {
    // Any cycle: an edge closing a union-find component.
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [a, b] : g.edges) {
      if (find(a) == find(b)) return true;
      parent[find(a)] = find(b);
    }
    return false;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e); ++mask) {
    std::vector<std::vector<int>> adj(v);
    for (int i = 0; i < e; ++i) {
      if ((mask >> i) & 1U) {
        adj[g.edges[i].first].push_back(g.edges[i].second);
        adj[g.edges[i].second].push_back(g.edges[i].first);
      }
    }
    std::vector<int> branch;
    bool shape = true;
    for (int x = 0; x < v && shape; ++x) {
      const int d = static_cast<int>(adj[x].size());
      if (d == k - 1) {
        branch.push_back(x);
      } else if (d != 0 && d != 2) {
        shape = false;
      }
    }
    if (!shape || static_cast<int>(branch.size()) != k) continue;
    std::set<std::pair<int, int>> ends;
    int walked = 0;
    bool ok = true;
    for (int b : branch) {
      for (int first : adj[b]) {
        int prev = b;
        int cur = first;
        ++walked;
        while (adj[cur].size() == 2 && cur != b) {
          const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++walked;
        }
        if (cur == b || !ends.insert({b, cur}).second) ok = false;
      }
    }
    if (ok && static_cast<int>(ends.size()) == k * (k - 1) && walked == 2 * std::popcount(mask)) return true;
  }
  return false;
}

TEST(MaxSubdivisionOrder, MatchesBruteForceExhaustivelyAtN3) {
  for (std::uint64_t w = 0; w < 256; ++w) {
    const auto g = forbidden_graph(PointSet::from_word(3, w));
    int t = 0;
    while (has_subdivision_brute(g, t + 2)) ++t;
    EXPECT_EQ(max_subdivision_order(g), t) << w;
  }
}

TEST(MaxSubdivisionOrder, CubeGraphs) {
  // Q_d has maximum degree d, so K_{d+2} cannot appear.
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(max_subdivision_order(forbidden_graph(PointSet(d))), d);
}

TEST(MaxSubdivisionOrder, SupportAtLeastThree) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_GE(max_subdivision_order(forbidden_graph(support_at_least(n, 3))), n);
  }
}

TEST(Invariance, UnderSwitchingAndPermutation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto s = random_set(rng, n, 1 + trial % 3);
    const Switching f{n, static_cast<VertexIndex>(rng() % cube_size(n))};
    const auto perm = random_perm(rng, n);
    const auto t = permute_points(switch_points(s, f), perm);
    EXPECT_EQ(notch(t), notch(s));
    EXPECT_EQ(max_subdivision_order(forbidden_graph(t)), max_subdivision_order(forbidden_graph(s)));
    if (n <= 4) {
      EXPECT_EQ(gap(t).delta, gap(s).delta);
    }
  }
}

TEST(TreewidthBounds, NotchAndGap) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto s = random_set(rng, n, 1 + trial % 3);
    const int t = max_subdivision_order(forbidden_graph(s));
    if (t < 1) continue;
    EXPECT_LE(notch(s), t + 1);
    const Int d = gap(s).delta;
    EXPECT_LE(d * d, 4 * int_pow(t, t));
  }
}

TEST(ClassifyNotch3, Examples) {
  const auto f1 = classify_notch3_facet(LinIneq{{0, 0, 1, 1}, 1});
  EXPECT_EQ(f1.tag, Notch3Tag::Form1);
  EXPECT_EQ(f1.partition.at(0), (std::vector<int>{0, 1}));
  EXPECT_EQ(f1.partition.at(1), (std::vector<int>{2, 3}));

  const auto f2 = classify_notch3_facet(LinIneq{{1, 1, 1}, 2});
  EXPECT_EQ(f2.tag, Notch3Tag::Form2);
  EXPECT_EQ(f2.partition.count(0), 0U);
  EXPECT_EQ(f2.partition.at(1), (std::vector<int>{0, 1, 2}));

  const auto f5 = classify_notch3_facet(LinIneq{{2, 2, 2, 3}, 6});
  EXPECT_EQ(f5.tag, Notch3Tag::Form5);
  EXPECT_EQ(f5.partition.at(2), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(f5.partition.at(3), (std::vector<int>{3}));

  EXPECT_EQ(classify_notch3_facet(LinIneq{{1, 0, 0}, 0}).tag, Notch3Tag::Box);
  EXPECT_EQ(classify_notch3_facet(LinIneq{{0, -1, 0}, -1}).tag, Notch3Tag::Box);
  EXPECT_EQ(classify_notch3_facet(LinIneq{{4, 2, 2, 1, 1, 3}, 8}).tag, Notch3Tag::None);
}

TEST(ClassifyNotch3, SwitchedInputAndSideConditions) {
  // 1 - x_1 + x_2 + x_3 >= 1 after switching coordinate 1.
  const auto f = classify_notch3_facet(LinIneq{{-1, 1, 1, 0, 0}, 0});
  EXPECT_EQ(f.tag, Notch3Tag::Form1);
  EXPECT_EQ(f.switching.flipped, 0b00001U);
  // Three zero coordinates: neither form 1 (|I0| = 2) nor form 2 (|I0| <= 1).
  EXPECT_EQ(classify_notch3_facet(LinIneq{{1, 1, 0, 0, 0}, 1}).tag, Notch3Tag::None);
  // Form 3 needs at least three unit coefficients.
  EXPECT_EQ(classify_notch3_facet(LinIneq{{1, 1, 1, 3}, 3}).tag, Notch3Tag::Form3);
  EXPECT_EQ(classify_notch3_facet(LinIneq{{1, 1, 2, 3}, 3}).tag, Notch3Tag::None);
  EXPECT_EQ(classify_notch3_facet(LinIneq{{1, 1, 2, 4}, 4}).tag, Notch3Tag::Form4);
}

TEST(Notch3, SupportAtLeastThreeClassifies) {
  for (int n = 3; n <= 5; ++n) {
    const auto s = support_at_least(n, 3);
    EXPECT_EQ(notch(s), 3);
    const auto c = check_notch3(s);
    EXPECT_EQ(c.full_dimensional, n >= 4);  // n = 3 leaves the single point 111
    EXPECT_TRUE(c.ok);
    EXPECT_LE(gap(s).delta, 6);
  }
}

TEST(Notch3, RandomLowNotchSets) {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto s = random_set(rng, n, 1 + trial % 3);
    if (notch(s) > 3) continue;
    ++seen;
    EXPECT_TRUE(check_notch3(s).ok);
    EXPECT_LE(gap(s).delta, 6);
  }
  EXPECT_GT(seen, 20);
}

TEST(OracleOptimize, Examples) {
  const auto full = PointSet::full(4);
  const auto r0 = oracle_optimize([&](VertexIndex v) { return full.contains(v); }, 4, {-1, -2, -1, -3}, 0);
  EXPECT_EQ(r0.point.index(), 0b1111U);
  EXPECT_EQ(r0.calls, 1U);

  const auto s = notch_p_example(5, 3);
  const auto r1 = oracle_optimize([&](VertexIndex v) { return s.contains(v); }, 5, RationalVector(5, 1), 3);
  EXPECT_EQ(r1.cost, 1);
  EXPECT_EQ(r1.point.index(), 0b00100U);
  EXPECT_LE(r1.calls, ball_size(5, 3));

  const auto t = support_at_least(4, 3);
  const auto r2 = oracle_optimize([&](VertexIndex v) { return t.contains(v); }, 4, {1, 2, 3, 4}, 3);
  EXPECT_EQ(r2.point.str(), "1110");
  EXPECT_EQ(r2.cost, 6);

  EXPECT_THROW(oracle_optimize([](VertexIndex) { return false; }, 3, {1, 1, 1}, 3), NoFeasibleInBall);
}

TEST(OracleOptimize, MatchesBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const auto s = random_set(rng, n, 1 + trial % 3);
    if (s.empty()) continue;
    RationalVector c(n);
    for (auto& x : c) x = Rational(static_cast<Int>(rng() % 13) - 6, 1 + static_cast<Int>(rng() % 3));
    const int p = notch(s);
    const auto r = oracle_optimize([&](VertexIndex v) { return s.contains(v); }, n, c, p);
    std::optional<Rational> best;
    for (VertexIndex v : s.members()) {
      Rational cost = 0;
      for (int i = 0; i < n; ++i) {
        if ((v >> i) & 1U) cost += c[i];
      }
      if (!best || cost < *best) best = cost;
    }
    EXPECT_EQ(r.cost, *best);
    EXPECT_TRUE(s.contains(r.point));
    EXPECT_LE(r.calls, ball_size(n, p));
  }
}

}  // namespace
}  // namespace cgrank
