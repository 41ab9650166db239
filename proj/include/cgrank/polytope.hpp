#pragma once

// Exact polyhedral computation over [0,1]^n: V<->H conversion, linear
// programming, redundancy removal and set comparison.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cgrank/cube.hpp"
#include "cgrank/double_description.hpp"
#include "cgrank/linalg.hpp"
#include "cgrank/number.hpp"
#include "cgrank/simplex.hpp"

namespace cgrank {

/// {x : a·x >= β for every row of ineqs, a·x = β for every row of eqs}.
struct HPolytope {
  int n = 0;
  std::vector<LinIneq> ineqs;
  std::vector<LinIneq> eqs;

  /// Largest absolute coefficient over all rows (0 for no rows).
  Int norm() const {
    Int m = 0;
    for (const auto& q : ineqs) m = std::max(m, max_abs(q.coeffs));
    for (const auto& q : eqs) m = std::max(m, max_abs(q.coeffs));
    return m;
  }

  bool contains(VertexIndex v) const {
    for (const auto& q : ineqs) {
      if (!q.satisfied_by(v)) return false;
    }
    for (const auto& q : eqs) {
      if (!q.tight_at(v)) return false;
    }
    return true;
  }

  bool contains(const RationalVector& x) const {
    for (const auto& q : ineqs) {
      if (q.lhs(x) < q.rhs) return false;
    }
    for (const auto& q : eqs) {
      if (q.lhs(x) != q.rhs) return false;
    }
    return true;
  }

  /// S = P ∩ {0,1}^n.
  PointSet integer_points() const {
    return PointSet::from_predicate(n, [this](VertexIndex v) { return contains(v); });
  }

  void check_rows() const {
    for (const auto& q : ineqs) require_same_dim(n, q.dim());
    for (const auto& q : eqs) require_same_dim(n, q.dim());
  }

  friend bool operator==(const HPolytope&, const HPolytope&) = default;
};

using Point = RationalVector;

struct VPolytope {
  int n = 0;
  std::vector<Point> vertices;

  bool empty() const { return vertices.empty(); }

  bool integral() const {
    for (const auto& v : vertices) {
      for (const auto& x : v) {
        if (!is_integer(x)) return false;
      }
    }
    return true;
  }

  /// Minimum of c·x over the vertices; nullopt when empty.
  std::optional<Rational> min(const IntVector& c) const {
    std::optional<Rational> best;
    for (const auto& v : vertices) {
      Rational s = 0;
      for (int i = 0; i < n; ++i) {
        if (c[i] != 0) s += c[i] * v[i];
      }
      if (!best || s < *best) best = std::move(s);
    }
    return best;
  }

  bool satisfies(const LinIneq& q) const {
    const auto m = min(q.coeffs);
    return !m || *m >= q.rhs;
  }

  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

inline std::vector<LinIneq> box_rows(int n) {
  std::vector<LinIneq> rows;
  for (int i = 0; i < n; ++i) {
    LinIneq lo{IntVector(n, 0), 0};
    lo.coeffs[i] = 1;
    LinIneq hi{IntVector(n, 0), -1};
    hi.coeffs[i] = -1;
    rows.push_back(std::move(lo));
    rows.push_back(std::move(hi));
  }
  return rows;
}

inline HPolytope box(int n) { return HPolytope{n, box_rows(n), {}}; }

inline HPolytope with_box(HPolytope p) {
  auto rows = box_rows(p.n);
  p.ineqs.insert(p.ineqs.end(), rows.begin(), rows.end());
  return p;
}

/// Canonical description of the empty set.
inline HPolytope infeasible_polytope(int n) { return HPolytope{n, {LinIneq{IntVector(n, 0), 1}}, {}}; }

namespace detail {

inline BigVector homogeneous_row(const LinIneq& q) {
  BigVector row(q.coeffs.size() + 1);
  row[0] = -q.rhs;
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) row[i + 1] = q.coeffs[i];
  return row;
}

inline bool lex_less(const LinIneq& a, const LinIneq& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.rhs < b.rhs;
}

inline void sort_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace detail

/// Incremental H->V conversion inside the box: starts from [0,1]^n and
/// intersects with inequalities and equations one at a time.
class VertexEnumerator {
 public:
  explicit VertexEnumerator(int n) : n_(n), dd_(n + 1, initial_rows(n)) {
    for (int i = 0; i < n; ++i) {
      BigVector upper(n + 1, 0);
      upper[0] = 1;
      upper[i + 1] = -1;
      dd_.add_inequality(upper);
    }
  }

  int dim() const { return n_; }

  bool add(const LinIneq& q) {
    require_same_dim(n_, q.dim());
    return dd_.add_inequality(detail::homogeneous_row(q));
  }

  bool add_equation(const LinIneq& q) {
    require_same_dim(n_, q.dim());
    return dd_.add_equation(detail::homogeneous_row(q));
  }

  bool empty() const { return dd_.rays().empty(); }

  VPolytope vertices() const {
    VPolytope out{n_, {}};
    for (const auto& r : dd_.rays()) {
      if (r.y[0] <= 0) throw Error("unbounded direction inside the box");
      Point x(n_);
      for (int i = 0; i < n_; ++i) x[i] = Rational(r.y[i + 1], r.y[0]);
      out.vertices.push_back(std::move(x));
    }
    detail::sort_points(out.vertices);
    return out;
  }

 private:
  static std::vector<BigVector> initial_rows(int n) {
    std::vector<BigVector> rows;
    for (int i = 0; i <= n; ++i) {
      BigVector r(n + 1, 0);
      r[i] = 1;
      rows.push_back(std::move(r));
    }
    return rows;
  }

  int n_;
  ConeDD dd_;
};

/// Exact vertex list of P ∩ [0,1]^n; the box rows are always adjoined.
inline VPolytope vertices(const HPolytope& p) {
  p.check_rows();
  VertexEnumerator e(p.n);
  for (const auto& q : p.eqs) e.add_equation(q);
  for (const auto& q : p.ineqs) {
    e.add(q);
    if (e.empty()) break;
  }
  return e.vertices();
}

/// Irredundant description of conv(points): affine-hull equations in reduced
/// row echelon form plus one primitive facet inequality per facet. Facet rows
/// have zero coefficients on the pivot coordinates of the equations and are
/// sorted lexicographically. No points gives 0·x >= 1.
inline HPolytope describe(int n, std::vector<Point> points) {
  detail::sort_points(points);
  if (points.empty()) return infeasible_polytope(n);

  linalg::Matrix m;
  m.reserve(points.size());
  for (const auto& v : points) {
    RationalVector row(n + 1);
    row[0] = 1;
    for (int i = 0; i < n; ++i) row[i + 1] = v[i];
    m.push_back(std::move(row));
  }
  // (y0, a) with y0 + a·v = 0 on every point, i.e. a·x = -y0.
  linalg::Matrix null = linalg::nullspace(m, static_cast<std::size_t>(n + 1));
  linalg::Matrix eq_rows;
  for (const auto& y : null) {
    RationalVector row(n + 1);
    for (int i = 0; i < n; ++i) row[i] = y[i + 1];
    row[n] = y[0];
    eq_rows.push_back(std::move(row));
  }
  HPolytope out{n, {}, {}};
  std::vector<bool> pivot(n, false);
  if (!eq_rows.empty()) {
    const auto pivots = linalg::rref(eq_rows);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      pivot[pivots[r]] = true;
      BigVector ints = clear_denominators(eq_rows[r]);
      make_primitive(ints);
      LinIneq q{IntVector(n), 0};
      for (int i = 0; i < n; ++i) q.coeffs[i] = to_int(ints[i]);
      q.rhs = to_int(BigInt(-ints[n]));
      out.eqs.push_back(std::move(q));
    }
  }
  std::vector<int> free;
  for (int i = 0; i < n; ++i) {
    if (!pivot[i]) free.push_back(i);
  }
  const int d = static_cast<int>(free.size());
  if (d == 0) return out;

  std::vector<BigVector> cone_rows;
  cone_rows.reserve(points.size());
  for (const auto& v : points) {
    RationalVector row(d + 1);
    row[0] = 1;
    for (int k = 0; k < d; ++k) row[k + 1] = v[free[k]];
    cone_rows.push_back(clear_denominators(row));
  }
  ConeDD dd(d + 1, cone_rows);
  for (const auto& r : dd.rays()) {
    LinIneq q{IntVector(n, 0), to_int(BigInt(-r.y[0]))};
    for (int k = 0; k < d; ++k) q.coeffs[free[k]] = to_int(r.y[k + 1]);
    out.ineqs.push_back(std::move(q));
  }
  std::sort(out.ineqs.begin(), out.ineqs.end(), detail::lex_less);
  return out;
}

inline HPolytope describe(const VPolytope& v) { return describe(v.n, v.vertices); }

inline std::vector<Point> as_points(const PointSet& s) {
  std::vector<Point> pts;
  for (VertexIndex v : s.members()) {
    Point x(s.dim());
    for (int i = 0; i < s.dim(); ++i) x[i] = (v >> i) & 1U;
    pts.push_back(std::move(x));
  }
  detail::sort_points(pts);
  return pts;
}

/// Irredundant exact description of conv(S).
inline HPolytope hull_facets(const PointSet& s) { return describe(s.dim(), as_points(s)); }

// ---------------------------------------------------------------------------
// Linear programming

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
};

namespace detail {

/// Dual of min c·x s.t. A x >= b, E x = f with x free:
///   max b·y + f·u  s.t. A^T y + E^T u = c, y >= 0.
/// u is split into u+ - u-. Returns the simplex result of the minimization
/// form (objective negated).
inline simplex::Result solve_dual(const std::vector<LinIneq>& ineqs, const std::vector<LinIneq>& eqs,
                                  const IntVector& c) {
  const std::size_t n = c.size();
  const std::size_t cols = ineqs.size() + 2 * eqs.size();
  std::vector<RationalVector> g(n, RationalVector(cols, Rational(0)));
  RationalVector cost(cols, Rational(0));
  std::size_t col = 0;
  for (const auto& q : ineqs) {
    for (std::size_t j = 0; j < n; ++j) g[j][col] = q.coeffs[j];
    cost[col] = -q.rhs;
    ++col;
  }
  for (const auto& q : eqs) {
    for (std::size_t j = 0; j < n; ++j) {
      g[j][col] = q.coeffs[j];
      g[j][col + 1] = -q.coeffs[j];
    }
    cost[col] = -q.rhs;
    cost[col + 1] = q.rhs;
    col += 2;
  }
  RationalVector h(n);
  for (std::size_t j = 0; j < n; ++j) h[j] = c[j];
  return simplex::solve(g, h, cost);
}

}  // namespace detail

/// Exact min of c·x over the rows exactly as given (no box adjoined).
inline LpResult lp_min_rows(int n, const std::vector<LinIneq>& ineqs, const std::vector<LinIneq>& eqs,
                            const IntVector& c) {
  require_same_dim(n, static_cast<int>(c.size()));
  const auto dual = detail::solve_dual(ineqs, eqs, c);
  if (dual.status == simplex::Status::Optimal) return LpResult{LpStatus::Optimal, -dual.value};
  if (dual.status == simplex::Status::Unbounded) return LpResult{LpStatus::Infeasible, Rational(0)};
  // Dual infeasible: primal is infeasible or unbounded. The feasibility dual
  // (c = 0) is always feasible and unbounded iff the primal is infeasible.
  const auto feas = detail::solve_dual(ineqs, eqs, IntVector(c.size(), 0));
  if (feas.status == simplex::Status::Unbounded) return LpResult{LpStatus::Infeasible, Rational(0)};
  return LpResult{LpStatus::Unbounded, Rational(0)};
}

/// Exact min of c·x over P ∩ [0,1]^n; nullopt when empty.
inline std::optional<Rational> lp_min(const HPolytope& p, const IntVector& c) {
  p.check_rows();
  require_same_dim(p.n, static_cast<int>(c.size()));
  const HPolytope boxed = with_box(p);
  const auto r = lp_min_rows(p.n, boxed.ineqs, boxed.eqs, c);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  if (r.status == LpStatus::Unbounded) throw Error("lp_min: unbounded inside the box");
  return r.value;
}

/// True iff q holds on all of P ∩ [0,1]^n (vacuously true when empty).
inline bool is_valid(const HPolytope& p, const LinIneq& q) {
  require_same_dim(p.n, q.dim());
  const auto m = lp_min(p, q.coeffs);
  return !m || *m >= q.rhs;
}

/// Drops rows implied by the others, in order; each removal is certified by
/// an exact LP over the rows kept so far. An infeasible system comes back as
/// the canonical 0·x >= 1.
inline HPolytope remove_redundancy(const HPolytope& p) {
  p.check_rows();
  if (lp_min_rows(p.n, p.ineqs, p.eqs, IntVector(p.n, 0)).status == LpStatus::Infeasible) {
    return infeasible_polytope(p.n);
  }
  HPolytope out = p;
  for (std::size_t i = 0; i < out.eqs.size();) {
    std::vector<LinIneq> rest = out.eqs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const LinIneq& q = out.eqs[i];
    IntVector neg(q.coeffs.size());
    for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -q.coeffs[j];
    const auto lo = lp_min_rows(p.n, out.ineqs, rest, q.coeffs);
    const auto hi = lp_min_rows(p.n, out.ineqs, rest, neg);
    const bool implied = lo.status == LpStatus::Optimal && hi.status == LpStatus::Optimal && lo.value == q.rhs &&
                         -hi.value == q.rhs;
    if (implied) {
      out.eqs.erase(out.eqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  for (std::size_t i = 0; i < out.ineqs.size();) {
    std::vector<LinIneq> rest = out.ineqs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const auto r = lp_min_rows(p.n, rest, out.eqs, out.ineqs[i].coeffs);
    if (r.status == LpStatus::Optimal && r.value >= out.ineqs[i].rhs) {
      out.ineqs.erase(out.ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return out;
}

inline LinIneq negated(const LinIneq& q) {
  LinIneq r = q;
  for (auto& c : r.coeffs) c = checked_sub(0, c);
  r.rhs = checked_sub(0, r.rhs);
  return r;
}

namespace detail {

inline bool contained_in(const HPolytope& p, const HPolytope& q) {
  for (const auto& r : q.ineqs) {
    if (!is_valid(p, r)) return false;
  }
  for (const auto& r : q.eqs) {
    if (!is_valid(p, r) || !is_valid(p, negated(r))) return false;
  }
  return true;
}

}  // namespace detail

/// Set equality of P ∩ [0,1]^n and Q ∩ [0,1]^n, each row of one system
/// checked for validity on the other.
inline bool polytopes_equal(const HPolytope& p, const HPolytope& q) {
  require_same_dim(p.n, q.n);
  return detail::contained_in(p, q) && detail::contained_in(q, p);
}

}  // namespace cgrank
