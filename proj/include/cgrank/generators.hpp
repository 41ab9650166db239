#pragma once

// Instance families: relaxations of a point set, the large-gap family with
// small notch, and seeded random point sets.

#include <cstdint>
#include <string>

#include "cgrank/cube.hpp"
#include "cgrank/polytope.hpp"

namespace cgrank {

/// Box plus, for each excluded vertex a, the row
///   Σ_{a_i=0} x_i + Σ_{a_i=1} (1 - x_i) >= 1/2,
/// stored with cleared denominators (coefficients ±2, rhs 1 - 2|a|).
inline HPolytope worst_relaxation(const PointSet& s) {
  const int n = s.dim();
  HPolytope p = box(n);
  for (VertexIndex a = 0; a < s.universe(); ++a) {
    if (s.contains(a)) continue;
    LinIneq q{IntVector(n), 1};
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1U) {
        q.coeffs[i] = -2;
        q.rhs -= 2;
      } else {
        q.coeffs[i] = 2;
      }
    }
    p.ineqs.push_back(std::move(q));
  }
  return p;
}

/// Same rows as worst_relaxation with right-hand side 1 instead of 1/2.
inline HPolytope unit_relaxation(const PointSet& s) {
  const int n = s.dim();
  HPolytope p = box(n);
  for (VertexIndex a = 0; a < s.universe(); ++a) {
    if (s.contains(a)) continue;
    LinIneq q{IntVector(n), 1};
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1U) {
        q.coeffs[i] = -1;
        q.rhs -= 1;
      } else {
        q.coeffs[i] = 1;
      }
    }
    p.ineqs.push_back(std::move(q));
  }
  return p;
}

struct BadFacetInstance {
  int n_param = 0;
  int dim = 0;
  IntVector c;
  Int threshold = 0;
  PointSet s;

  LinIneq facet() const { return LinIneq{c, threshold}; }
};

/// The set {x ∈ {0,1}^(2n+2) : c·x >= 2^(n+1)} with c_1 = 2^n, c_2 = 2^(n-1),
/// c_i = c_{i-1} for odd i in [3, 2n+1], c_i = (2^n - c_{i-1})/2 for even i in
/// [3, 2n+1] and c_{2n+2} = 2^n - c_{2n+1}. Its notch stays <= 7 while the gap
/// is at least 2^(n+1).
inline BadFacetInstance badfacet_instance(int n) {
  if (n < 1) throw PreconditionError("badfacet_instance needs n >= 1");
  const int dim = 2 * n + 2;
  check_dim(dim);
  const Int top = Int{1} << n;
  IntVector c(dim + 1, 0);  // 1-based
  c[1] = top;
  c[2] = top / 2;
  for (int i = 3; i <= 2 * n + 1; ++i) {
    if (i % 2 == 1) {
      c[i] = c[i - 1];
    } else {
      if ((top - c[i - 1]) % 2 != 0) throw Error("badfacet recurrence produced a non-integer");
      c[i] = (top - c[i - 1]) / 2;
    }
  }
  c[dim] = top - c[2 * n + 1];
  // Closed form c_{2i} = c_{2i+1} = 2^n (1 - (-1/2)^i) / 3, i.e.
  // 3 * 2^i * c_{2i} = 2^n (2^i - (-1)^i).
  for (int i = 1; i <= n; ++i) {
    const Int pow_i = Int{1} << i;
    const Int sign = i % 2 == 0 ? 1 : -1;
    const Int lhs = checked_mul(checked_mul(3, pow_i), c[2 * i]);
    const Int rhs = checked_mul(top, pow_i - sign);
    if (lhs != rhs || c[2 * i] != c[2 * i + 1]) {
      throw Error("badfacet closed form disagrees with the recurrence at i=" + std::to_string(i));
    }
  }
  BadFacetInstance inst;
  inst.n_param = n;
  inst.dim = dim;
  inst.c.assign(c.begin() + 1, c.end());
  if (gcd_of(inst.c) != 1) throw Error("badfacet coefficient vector is not primitive");
  inst.threshold = 2 * top;
  const LinIneq facet = inst.facet();
  inst.s = PointSet::from_predicate(dim, [&](VertexIndex v) { return facet.satisfied_by(v); });
  return inst;
}

/// {x : x_p + x_{p+1} + ... + x_n >= 1} (p is 1-based): notch p, gap 1.
inline PointSet notch_p_example(int n, int p) {
  if (p < 1 || p > n) throw PreconditionError("notch_p_example needs 1 <= p <= n");
  const VertexIndex tail = static_cast<VertexIndex>(cube_size(n) - 1) & ~static_cast<VertexIndex>(cube_size(p - 1) - 1);
  return PointSet::from_predicate(n, [tail](VertexIndex v) { return (v & tail) != 0; });
}

/// {x : |x| >= k}.
inline PointSet support_at_least(int n, int k) {
  if (k < 0 || k > n + 1) throw PreconditionError("support_at_least needs 0 <= k <= n+1");
  return PointSet::from_predicate(n, [k](VertexIndex v) { return std::popcount(v) >= k; });
}

/// SplitMix64 finalizer; the generator below is this function applied to a
/// counter, so draw k of a stream depends only on (seed, k).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Independent sub-seed for stream `stream` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return counter_draw(splitmix64(seed ^ 0x5EEDULL), stream);
}

/// Includes vertex v iff counter_draw(seed, v) < density * 2^64 (exact
/// 128-bit comparison), so the output is identical on every platform.
inline PointSet random_pointset(int n, const Rational& density, std::uint64_t seed) {
  if (density < 0 || density > 1) throw PreconditionError("density must lie in [0, 1]");
  const BigInt num = numerator(density);
  const BigInt den = denominator(density);
  if (den > std::numeric_limits<std::uint64_t>::max()) throw PreconditionError("density denominator too large");
  const auto num64 = static_cast<std::uint64_t>(num);
  const auto den64 = static_cast<std::uint64_t>(den);
  using u128 = unsigned __int128;
  return PointSet::from_predicate(n, [&](VertexIndex v) {
    const u128 lhs = static_cast<u128>(counter_draw(seed, v)) * den64;
    const u128 rhs = static_cast<u128>(num64) << 64;
    return lhs < rhs;
  });
}

}  // namespace cgrank
