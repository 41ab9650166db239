#pragma once

// Objects living on the 0/1 cube: points, point sets, faces, switchings and
// integer inequalities.
//
// Vertex indexing: coordinate i (0-based in code, x_{i+1} in prose) is bit i
// of the vertex index, so coordinate 1 is the least significant bit.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cgrank/errors.hpp"
#include "cgrank/linalg.hpp"
#include "cgrank/number.hpp"

namespace cgrank {

/// Largest ambient dimension a PointSet bitset may have.
inline constexpr int kMaxDim = 24;

using VertexIndex = std::uint32_t;

inline void check_dim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw PreconditionError("dimension " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxDim) + "]");
  }
}

inline void require_same_dim(int expected, int got) {
  if (expected != got) throw DimensionMismatch(expected, got);
}

inline std::uint64_t cube_size(int n) { return std::uint64_t{1} << n; }

/// A vertex of {0,1}^n.
class CubePoint {
 public:
  CubePoint() = default;
  CubePoint(int n, VertexIndex index) : n_(n), index_(index) {
    check_dim(n);
    if (n < 32 && (index >> n) != 0) throw PreconditionError("vertex index out of range");
  }

  static CubePoint from_bits(const std::vector<int>& bits) {
    VertexIndex idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != 0 && bits[i] != 1) throw PreconditionError("cube point entries must be 0 or 1");
      if (bits[i]) idx |= VertexIndex{1} << i;
    }
    return CubePoint(static_cast<int>(bits.size()), idx);
  }

  int dim() const { return n_; }
  VertexIndex index() const { return index_; }
  int operator[](int i) const { return static_cast<int>((index_ >> i) & 1U); }
  int weight() const { return std::popcount(index_); }

  std::vector<int> bits() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
  }

  /// Binary string, character i = coordinate i.
  std::string str() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) s[i] = (*this)[i] ? '1' : '0';
    return s;
  }

  friend bool operator==(const CubePoint&, const CubePoint&) = default;

 private:
  int n_ = 0;
  VertexIndex index_ = 0;
};

/// A subset of {0,1}^n stored as a bitset over the 2^n vertex indices.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int n) : n_(n) {
    check_dim(n);
    words_.assign((cube_size(n) + 63) / 64, 0);
  }

  static PointSet full(int n) {
    PointSet s(n);
    for (VertexIndex v = 0; v < cube_size(n); ++v) s.insert(v);
    return s;
  }

  static PointSet from_predicate(int n, const std::function<bool(VertexIndex)>& pred) {
    PointSet s(n);
    for (VertexIndex v = 0; v < cube_size(n); ++v) {
      if (pred(v)) s.insert(v);
    }
    return s;
  }

  /// Point set of a dimension <= 6 whose bitset is a single word.
  static PointSet from_word(int n, std::uint64_t word) {
    if (n > 6) throw PreconditionError("from_word needs n <= 6");
    PointSet s(n);
    s.words_[0] = n == 6 ? word : (word & ((std::uint64_t{1} << cube_size(n)) - 1));
    return s;
  }

  int dim() const { return n_; }
  std::uint64_t universe() const { return cube_size(n_); }

  bool contains(VertexIndex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool contains(const CubePoint& p) const {
    require_same_dim(n_, p.dim());
    return contains(p.index());
  }

  void insert(VertexIndex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexIndex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == universe(); }

  /// S̄ = {0,1}^n \ S, computed on demand.
  PointSet complement() const {
    PointSet c(n_);
    for (VertexIndex v = 0; v < universe(); ++v) {
      if (!contains(v)) c.insert(v);
    }
    return c;
  }

  std::vector<VertexIndex> members() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < universe(); ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  bool subset_of(const PointSet& other) const {
    require_same_dim(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  /// "{001,110}" in the bit-string order of CubePoint::str.
  std::string str() const {
    std::string out = "{";
    for (VertexIndex v : members()) {
      if (out.size() > 1) out += ',';
      out += CubePoint(n_, v).str();
    }
    return out + "}";
  }

  /// Only meaningful for n <= 6.
  std::uint64_t word() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Face of [0,1]^n obtained by fixing the coordinates in `fixed_mask` to the
/// corresponding bits of `values`.
struct CubeFace {
  int n = 0;
  VertexIndex fixed_mask = 0;
  VertexIndex values = 0;

  int dim() const { return n - std::popcount(fixed_mask); }

  bool contains(VertexIndex v) const { return (v & fixed_mask) == (values & fixed_mask); }

  std::map<int, int> fixed() const {
    std::map<int, int> out;
    for (int i = 0; i < n; ++i) {
      if ((fixed_mask >> i) & 1U) out[i] = static_cast<int>((values >> i) & 1U);
    }
    return out;
  }

  std::vector<VertexIndex> vertices() const {
    std::vector<VertexIndex> out;
    const VertexIndex free = ~fixed_mask & static_cast<VertexIndex>(cube_size(n) - 1);
    // Enumerate submasks of the free coordinates.
    VertexIndex sub = 0;
    do {
      out.push_back((values & fixed_mask) | sub);
      sub = (sub - free) & free;
    } while (sub != 0);
    return out;
  }

  friend bool operator==(const CubeFace&, const CubeFace&) = default;
};

/// Integer inequality coeffs·x >= rhs. Equation rows of an HPolytope reuse
/// this type with the meaning coeffs·x = rhs.
struct LinIneq {
  IntVector coeffs;
  Int rhs = 0;

  int dim() const { return static_cast<int>(coeffs.size()); }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c == 0; });
  }

  Int lhs(VertexIndex v) const {
    Int s = 0;
    for (int i = 0; i < dim(); ++i) {
      if ((v >> i) & 1U) s = checked_add(s, coeffs[i]);
    }
    return s;
  }

  bool satisfied_by(VertexIndex v) const { return lhs(v) >= rhs; }
  bool tight_at(VertexIndex v) const { return lhs(v) == rhs; }

  Rational lhs(const RationalVector& x) const {
    Rational s = 0;
    for (int i = 0; i < dim(); ++i) {
      if (coeffs[i] != 0) s += coeffs[i] * x[i];
    }
    return s;
  }

  friend bool operator==(const LinIneq&, const LinIneq&) = default;
  friend auto operator<=>(const LinIneq&, const LinIneq&) = default;
};

/// Complements the coordinates in `flipped` (x_j -> 1 - x_j).
struct Switching {
  int n = 0;
  VertexIndex flipped = 0;

  VertexIndex apply(VertexIndex v) const { return v ^ flipped; }
  bool flips(int i) const { return (flipped >> i) & 1U; }
};

/// The view Σ_{i∈I} c_i x_i + Σ_{j∈J} c_j (1 - x_j) >= δ with c >= 0.
struct SwitchedForm {
  IntVector c;
  VertexIndex j_mask = 0;  // J; the support of c outside J is I
  Int delta = 0;

  int dim() const { return static_cast<int>(c.size()); }

  LinIneq expanded() const {
    LinIneq q{IntVector(c.size(), 0), delta};
    for (int i = 0; i < dim(); ++i) {
      if ((j_mask >> i) & 1U) {
        q.coeffs[i] = -c[i];
        q.rhs = checked_sub(q.rhs, c[i]);
      } else {
        q.coeffs[i] = c[i];
      }
    }
    return q;
  }

  bool valid_on(VertexIndex v) const {
    Int s = 0;
    for (int i = 0; i < dim(); ++i) {
      const bool bit = (v >> i) & 1U;
      const bool in_j = (j_mask >> i) & 1U;
      if (bit != in_j) s = checked_add(s, c[i]);
    }
    return s >= delta;
  }

  friend bool operator==(const SwitchedForm&, const SwitchedForm&) = default;
};

/// Switched view of q: J is the set of negative coefficients.
inline SwitchedForm switched_form(const LinIneq& q) {
  SwitchedForm f{IntVector(q.coeffs.size(), 0), 0, q.rhs};
  for (int i = 0; i < q.dim(); ++i) {
    if (q.coeffs[i] < 0) {
      f.j_mask |= VertexIndex{1} << i;
      f.c[i] = checked_sub(0, q.coeffs[i]);
      f.delta = checked_add(f.delta, f.c[i]);
    } else {
      f.c[i] = q.coeffs[i];
    }
  }
  return f;
}

inline PointSet switch_points(const PointSet& s, const Switching& f) {
  require_same_dim(s.dim(), f.n);
  PointSet out(s.dim());
  for (VertexIndex v = 0; v < s.universe(); ++v) {
    if (s.contains(v)) out.insert(f.apply(v));
  }
  return out;
}

/// Substitutes x_j -> 1 - x_j for every flipped j.
inline LinIneq switch_ineq(const LinIneq& q, const Switching& f) {
  require_same_dim(q.dim(), f.n);
  LinIneq out = q;
  for (int j = 0; j < q.dim(); ++j) {
    if (!f.flips(j)) continue;
    out.coeffs[j] = checked_sub(0, q.coeffs[j]);
    out.rhs = checked_sub(out.rhs, q.coeffs[j]);
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// All d-dimensional faces of [0,1]^n: C(n, d) * 2^(n-d) of them.
inline std::vector<CubeFace> enumerate_faces(int n, int d) {
  check_dim(n);
  if (d < 0 || d > n) throw PreconditionError("face dimension out of range");
  std::vector<CubeFace> faces;
  const VertexIndex all = static_cast<VertexIndex>(cube_size(n) - 1);
  for (VertexIndex free = 0; free <= all; ++free) {
    if (std::popcount(free) != d) continue;
    const VertexIndex fixed = all & ~free;
    VertexIndex val = 0;
    do {
      faces.push_back(CubeFace{n, fixed, val});
      val = (val - fixed) & fixed;
    } while (val != 0);
  }
  return faces;
}

inline bool face_intersects(const CubeFace& f, const PointSet& s) {
  require_same_dim(s.dim(), f.n);
  for (VertexIndex v : f.vertices()) {
    if (s.contains(v)) return true;
  }
  return false;
}

enum class Normalization {
  /// Divide coefficients and rhs by their common gcd; same halfspace.
  Halfspace,
  /// Divide coefficients by their gcd g and round rhs up to ⌈rhs/g⌉; same
  /// integer points, possibly a smaller halfspace.
  ChvatalGomory,
};

inline LinIneq primitive_form(const LinIneq& q, Normalization mode = Normalization::Halfspace) {
  if (q.is_zero()) throw PreconditionError("primitive_form of an all-zero coefficient vector");
  const Int g = gcd_of(q.coeffs);
  LinIneq out = q;
  if (mode == Normalization::Halfspace) {
    const Int h = std::gcd(g, q.rhs);
    for (auto& c : out.coeffs) c /= h;
    out.rhs /= h;
  } else {
    for (auto& c : out.coeffs) c /= g;
    out.rhs = ceil_div(q.rhs, g);
  }
  return out;
}

/// True iff the 0/1 points on {x : coeffs·x = rhs} have affine hull of
/// dimension n-1.
inline bool spanned_by_01(const LinIneq& q) {
  if (q.is_zero()) throw PreconditionError("spanned_by_01 needs a nonzero inequality");
  const int n = q.dim();
  std::vector<BigVector> rows;
  for (VertexIndex v = 0; v < cube_size(n); ++v) {
    if (!q.tight_at(v)) continue;
    BigVector row(n + 1);
    row[0] = 1;
    for (int i = 0; i < n; ++i) row[i + 1] = (v >> i) & 1U;
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) < n) return false;
  return static_cast<int>(linalg::rank(std::move(rows))) == n;
}

}  // namespace cgrank
