#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cgrank/number.hpp"

namespace cgrank::simplex {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RationalVector solution;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }

  void set_objective(const RationalVector& cost) {
    obj_.assign(cost.begin(), cost.end());
    obj_.resize(cols() + 1, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = basis_[i] < cost.size() ? cost[basis_[i]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols(); ++j) obj_[j] -= cb * rows_[i][j];
    }
  }

  /// Bland's rule. Columns with allowed[j] == false never enter.
  Status optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return Status::Optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i].back() / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return Status::Unbounded;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= cols(); ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    if (!obj_.empty() && obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols(); ++j) {
        if (rows_[r][j] != 0) obj_[j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  Rational objective_value() const { return -obj_.back(); }

  std::vector<RationalVector>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

  RationalVector primal(std::size_t n) const {
    RationalVector z(n, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n) z[basis_[i]] = rows_[i].back();
    }
    return z;
  }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  RationalVector obj_;
};

}  // namespace detail

/// Solves min cost·z subject to g z = h, z >= 0 exactly, with a two-phase
/// tableau simplex and Bland's anti-cycling rule.
inline Result solve(const std::vector<RationalVector>& g, const RationalVector& h, const RationalVector& cost) {
  const std::size_t m = g.size();
  const std::size_t n = cost.size();
  std::vector<RationalVector> rows(m, RationalVector(n + m + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = h[i] < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-g[i][j]) : g[i][j];
    rows[i][n + i] = 1;
    rows[i].back() = flip ? Rational(-h[i]) : h[i];
    basis[i] = n + i;
  }
  detail::Tableau t(std::move(rows), std::move(basis));

  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  t.set_objective(phase1);
  std::vector<bool> allowed(n + m, true);
  t.optimize(allowed);
  if (t.objective_value() != 0) return Result{Status::Infeasible, Rational(0), {}};

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows().size();) {
    if (t.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows()[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows().erase(t.rows().begin() + static_cast<std::ptrdiff_t>(i));
      t.basis().erase(t.basis().begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RationalVector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
  t.set_objective(phase2);
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;
  if (t.optimize(allowed) == Status::Unbounded) return Result{Status::Unbounded, Rational(0), {}};
  return Result{Status::Optimal, t.objective_value(), t.primal(n)};
}

}  // namespace cgrank::simplex
