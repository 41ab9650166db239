#pragma once

// Action of the hyperoctahedral group (coordinate permutations composed with
// switchings) on point sets, and orbit representatives for small n.

#include <algorithm>
#include <numeric>
#include <vector>

#include "cgrank/cube.hpp"

namespace cgrank {

/// Coordinate i of the input becomes coordinate perm[i] of the output.
inline VertexIndex permute_vertex(VertexIndex v, const std::vector<int>& perm) {
  VertexIndex out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((v >> i) & 1U) out |= VertexIndex{1} << perm[i];
  }
  return out;
}

inline PointSet permute_points(const PointSet& s, const std::vector<int>& perm) {
  require_same_dim(s.dim(), static_cast<int>(perm.size()));
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) throw PreconditionError("not a permutation");
  }
  PointSet out(s.dim());
  for (VertexIndex v : s.members()) out.insert(permute_vertex(v, perm));
  return out;
}

inline LinIneq permute_ineq(const LinIneq& q, const std::vector<int>& perm) {
  require_same_dim(q.dim(), static_cast<int>(perm.size()));
  LinIneq out{IntVector(q.coeffs.size(), 0), q.rhs};
  for (std::size_t i = 0; i < perm.size(); ++i) out.coeffs[perm[i]] = q.coeffs[i];
  return out;
}

/// Lexicographically smallest bitset word sequence in the orbit of S.
inline PointSet canonical_form(const PointSet& s) {
  const int n = s.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PointSet best = s;
  do {
    const PointSet p = permute_points(s, perm);
    for (VertexIndex flip = 0; flip < cube_size(n); ++flip) {
      const PointSet t = switch_points(p, Switching{n, flip});
      if (t.words() < best.words()) best = t;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One canonical representative per orbit of subsets of {0,1}^n, ordered by
/// bitset word. Exhaustive over all 2^(2^n) subsets, so n <= 3 in practice.
inline std::vector<PointSet> orbit_representatives(int n) {
  if (n < 0 || n > 4) throw PreconditionError("orbit_representatives supports n <= 4");
  std::vector<PointSet> reps;
  const std::uint64_t count = std::uint64_t{1} << cube_size(n);
  for (std::uint64_t w = 0; w < count; ++w) {
    const PointSet s = PointSet::from_word(n, w);
    const PointSet c = canonical_form(s);
    if (c == s) reps.push_back(s);
  }
  return reps;
}

}  // namespace cgrank
