#include "cgrank/cube.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace cgrank {
namespace {

PointSet set_of(int n, std::initializer_list<const char*> pts) {
  PointSet s(n);
  for (const char* p : pts) {
    VertexIndex v = 0;
    for (int i = 0; i < n; ++i) {
      if (p[i] == '1') v |= VertexIndex{1} << i;
    }
    s.insert(v);
  }
  return s;
}

PointSet random_set(std::mt19937_64& rng, int n) {
  PointSet s(n);
  for (VertexIndex v = 0; v < s.universe(); ++v) {
    if (rng() & 1U) s.insert(v);
  }
  return s;
}

TEST(CubePoint, BitOrderIsLeastSignificantFirst) {
  const auto p = CubePoint::from_bits({1, 0, 1});
  EXPECT_EQ(p.index(), 5U);
  EXPECT_EQ(p.str(), "101");
  EXPECT_EQ(CubePoint(3, 6).str(), "011");
  EXPECT_THROW(CubePoint::from_bits({0, 2}), PreconditionError);
}

TEST(PointSet, ComplementIsDerived) {
  const auto s = set_of(2, {"00", "11"});
  const auto c = s.complement();
  EXPECT_EQ(c, set_of(2, {"01", "10"}));
  EXPECT_EQ(c.complement(), s);
  EXPECT_EQ(PointSet(3).complement(), PointSet::full(3));
}

TEST(SwitchPoints, IdentityAndSingleFlip) {
  const auto s = set_of(3, {"000", "110", "011"});
  EXPECT_EQ(switch_points(s, Switching{3, 0}), s);
  EXPECT_EQ(switch_points(set_of(2, {"00"}), Switching{2, 0b01}), set_of(2, {"10"}));
  EXPECT_THROW(switch_points(s, Switching{2, 0}), DimensionMismatch);
}

TEST(SwitchPoints, IsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const auto s = random_set(rng, n);
    const Switching f{n, static_cast<VertexIndex>(rng() % cube_size(n))};
    EXPECT_EQ(switch_points(switch_points(s, f), f), s);
  }
}

TEST(SwitchIneq, DirectSubstitution) {
  const LinIneq q{{1, 1}, 1};
  EXPECT_EQ(switch_ineq(q, Switching{2, 0b10}), (LinIneq{{1, -1}, 0}));
  EXPECT_EQ(switch_ineq(q, Switching{2, 0}), q);
  EXPECT_THROW(switch_ineq(q, Switching{3, 0}), DimensionMismatch);
}

TEST(SwitchIneq, CommutesWithSwitchPointsExhaustively) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    LinIneq q{IntVector(4), static_cast<Int>(rng() % 9) - 4};
    for (auto& c : q.coeffs) c = static_cast<Int>(rng() % 7) - 3;
    for (VertexIndex flip = 0; flip < 16; ++flip) {
      const Switching f{4, flip};
      const auto qs = switch_ineq(q, f);
      for (VertexIndex x = 0; x < 16; ++x) {
        EXPECT_EQ(q.satisfied_by(x), qs.satisfied_by(f.apply(x)));
      }
    }
  }
}

TEST(EnumerateFaces, CountsAndDistinctness) {
  EXPECT_EQ(enumerate_faces(2, 2).size(), 1U);
  EXPECT_EQ(enumerate_faces(2, 1).size(), 4U);
  EXPECT_EQ(enumerate_faces(3, 1).size(), 12U);
  for (int n = 0; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto faces = enumerate_faces(n, d);
      EXPECT_EQ(faces.size(), binomial(n, d) * (cube_size(n - d)));
      std::set<std::pair<VertexIndex, VertexIndex>> seen;
      for (const auto& f : faces) {
        EXPECT_EQ(f.dim(), d);
        EXPECT_EQ(f.vertices().size(), cube_size(d));
        seen.insert({f.fixed_mask, f.values & f.fixed_mask});
      }
      EXPECT_EQ(seen.size(), faces.size());
    }
  }
  EXPECT_THROW(enumerate_faces(3, 4), PreconditionError);
  EXPECT_THROW(enumerate_faces(3, -1), PreconditionError);
}

TEST(FaceIntersects, Examples) {
  const auto whole = enumerate_faces(3, 3).front();
  EXPECT_TRUE(face_intersects(whole, set_of(3, {"010"})));
  EXPECT_FALSE(face_intersects(whole, PointSet(3)));
  // S = {|x| >= 2}; F = {x1 = 0, x2 = 0} has vertices 000 and 001.
  const auto s = PointSet::from_predicate(3, [](VertexIndex v) { return std::popcount(v) >= 2; });
  const CubeFace f{3, 0b011, 0b000};
  EXPECT_FALSE(face_intersects(f, s));
  EXPECT_EQ(f.fixed(), (std::map<int, int>{{0, 0}, {1, 0}}));
  EXPECT_THROW(face_intersects(f, PointSet(2)), DimensionMismatch);
}

TEST(PrimitiveForm, Halfspace) {
  EXPECT_EQ(primitive_form(LinIneq{{2, 2, 2}, 4}), (LinIneq{{1, 1, 1}, 2}));
  const LinIneq bad{{4, 2, 2, 1, 1, 3}, 8};
  EXPECT_EQ(primitive_form(bad), bad);
  EXPECT_EQ(primitive_form(LinIneq{{3, 3}, 2}), (LinIneq{{3, 3}, 2}));
  EXPECT_THROW(primitive_form(LinIneq{{0, 0}, 1}), PreconditionError);
}

TEST(PrimitiveForm, ChvatalGomoryRoundsRhsUp) {
  EXPECT_EQ(primitive_form(LinIneq{{3, 3}, 2}, Normalization::ChvatalGomory), (LinIneq{{1, 1}, 1}));
  EXPECT_EQ(primitive_form(LinIneq{{-2, 4}, -3}, Normalization::ChvatalGomory), (LinIneq{{-1, 2}, -1}));
}

TEST(PrimitiveForm, Idempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    LinIneq q{IntVector(4), static_cast<Int>(rng() % 41) - 20};
    for (auto& c : q.coeffs) c = 2 * (static_cast<Int>(rng() % 11) - 5);
    if (q.is_zero()) continue;
    for (auto mode : {Normalization::Halfspace, Normalization::ChvatalGomory}) {
      const auto once = primitive_form(q, mode);
      EXPECT_EQ(primitive_form(once, mode), once);
    }
  }
}

TEST(SpannedBy01, Examples) {
  EXPECT_TRUE(spanned_by_01(LinIneq{{1, 1, 1}, 2}));
  EXPECT_FALSE(spanned_by_01(LinIneq{{2, 0, 0}, 1}));
  EXPECT_TRUE(spanned_by_01(LinIneq{{1, 0, 0}, 0}));
  // x1 + x2 + x3 = 3 only touches the all-ones vertex.
  EXPECT_FALSE(spanned_by_01(LinIneq{{1, 1, 1}, 3}));
  EXPECT_THROW(spanned_by_01(LinIneq{{0, 0}, 0}), PreconditionError);
}

TEST(SpannedBy01, InvariantUnderSwitchingAndScaling) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    LinIneq q{IntVector(4), static_cast<Int>(rng() % 7) - 2};
    for (auto& c : q.coeffs) c = static_cast<Int>(rng() % 5) - 2;
    if (q.is_zero()) continue;
    const bool base = spanned_by_01(q);
    const Switching f{4, static_cast<VertexIndex>(rng() % 16)};
    EXPECT_EQ(spanned_by_01(switch_ineq(q, f)), base);
    LinIneq scaled = q;
    for (auto& c : scaled.coeffs) c *= 3;
    scaled.rhs *= 3;
    EXPECT_EQ(spanned_by_01(scaled), base);
  }
}

TEST(SwitchedForm, RoundTripsThroughExpansion) {
  const LinIneq q{{2, -3, 0, 1}, -1};
  const auto f = switched_form(q);
  EXPECT_EQ(f.c, (IntVector{2, 3, 0, 1}));
  EXPECT_EQ(f.j_mask, 0b0010U);
  EXPECT_EQ(f.delta, 2);
  EXPECT_EQ(f.expanded(), q);
  for (VertexIndex v = 0; v < 16; ++v) EXPECT_EQ(f.valid_on(v), q.satisfied_by(v));
}

}  // namespace
}  // namespace cgrank
