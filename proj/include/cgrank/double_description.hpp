#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "cgrank/errors.hpp"
#include "cgrank/linalg.hpp"
#include "cgrank/number.hpp"

namespace cgrank {

/// Growable bitset over constraint indices.
class IncidenceSet {
 public:
  void set(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool test(std::size_t i) const {
    return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  IncidenceSet operator&(const IncidenceSet& o) const {
    IncidenceSet r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  bool subset_of(const IncidenceSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Double description of a pointed polyhedral cone {y ∈ R^d : row·y >= 0},
/// maintained as its list of extreme rays (integer, primitive). Rows are
/// inserted one at a time; adjacency is decided combinatorially.
class ConeDD {
 public:
  struct Ray {
    BigVector y;
    IncidenceSet zeros;
  };

  /// Starts from a simplicial cone spanned by d linearly independent rows
  /// taken greedily from `rows`; the remaining rows are then inserted in
  /// order. Throws if `rows` has rank < d (cone not pointed).
  ConeDD(int d, const std::vector<BigVector>& rows) : d_(d) {
    std::vector<std::size_t> basis;
    std::vector<BigVector> picked;
    for (std::size_t i = 0; i < rows.size() && static_cast<int>(basis.size()) < d; ++i) {
      picked.push_back(rows[i]);
      if (static_cast<int>(linalg::rank(picked)) == static_cast<int>(picked.size())) {
        basis.push_back(i);
      } else {
        picked.pop_back();
      }
    }
    if (static_cast<int>(basis.size()) < d) {
      throw PreconditionError("double description: cone is not pointed");
    }
    const BigInt det = linalg::determinant(picked);
    const auto adj = linalg::adjugate(picked);
    for (int j = 0; j < d; ++j) {
      Ray r;
      r.y.resize(d);
      for (int i = 0; i < d; ++i) r.y[i] = det > 0 ? adj[i][j] : BigInt(-adj[i][j]);
      make_primitive(r.y);
      for (int k = 0; k < d; ++k) {
        if (k != j) r.zeros.set(static_cast<std::size_t>(k));
      }
      rays_.push_back(std::move(r));
    }
    registered_ = static_cast<std::size_t>(d);
    std::vector<bool> in_basis(rows.size(), false);
    for (auto b : basis) in_basis[b] = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!in_basis[i]) add_inequality(rows[i]);
    }
  }

  int dim() const { return d_; }
  const std::vector<Ray>& rays() const { return rays_; }

  /// Intersects with {row·y >= 0}. Returns false if the row was implied.
  bool add_inequality(const BigVector& row) { return insert(row, false); }

  /// Intersects with {row·y = 0}. Returns false if the row was implied.
  bool add_equation(const BigVector& row) { return insert(row, true); }

 private:
  static BigInt dot(const BigVector& a, const BigVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
  }

  bool adjacent(std::size_t a, std::size_t b) const {
    const IncidenceSet common = rays_[a].zeros & rays_[b].zeros;
    if (static_cast<int>(common.count()) < d_ - 2) return false;
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      if (k == a || k == b) continue;
      if (common.subset_of(rays_[k].zeros)) return false;
    }
    return true;
  }

  bool insert(const BigVector& row, bool equation) {
    if (static_cast<int>(row.size()) != d_) throw DimensionMismatch(d_, static_cast<int>(row.size()));
    std::vector<BigInt> value(rays_.size());
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      value[i] = dot(row, rays_[i].y);
      if (value[i] > 0) {
        pos.push_back(i);
      } else if (value[i] < 0) {
        neg.push_back(i);
      } else {
        zero.push_back(i);
      }
    }
    if (neg.empty() && (!equation || pos.empty())) return false;

    const std::size_t index = registered_++;
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (auto i : zero) {
      Ray r = rays_[i];
      r.zeros.set(index);
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto m : neg) {
        if (!adjacent(p, m)) continue;
        Ray r;
        r.y.resize(d_);
        for (int k = 0; k < d_; ++k) r.y[k] = value[p] * rays_[m].y[k] - value[m] * rays_[p].y[k];
        make_primitive(r.y);
        r.zeros = rays_[p].zeros & rays_[m].zeros;
        r.zeros.set(index);
        next.push_back(std::move(r));
      }
    }
    if (!equation) {
      for (auto i : pos) next.push_back(std::move(rays_[i]));
    }
    rays_ = std::move(next);
    return true;
  }

  int d_;
  std::vector<Ray> rays_;
  std::size_t registered_ = 0;
};

}  // namespace cgrank
