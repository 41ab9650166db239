#pragma once

// Exact elementary Chvátal-Gomory closure of a rational polytope inside
// [0,1]^n, iterated closures, CG-rank, validity depth and the ε-scaled
// facet check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cgrank/cube.hpp"
#include "cgrank/errors.hpp"
#include "cgrank/linalg.hpp"
#include "cgrank/number.hpp"
#include "cgrank/parallel.hpp"
#include "cgrank/parameters.hpp"
#include "cgrank/polytope.hpp"

namespace cgrank {

inline constexpr std::uint64_t kDefaultEnumBudget = 50'000'000;

enum class ClosureMethod {
  /// Cuts λ^T A_B x >= ⌈λ^T b_B⌉ for every basis B of rows tight at a
  /// fractional vertex and every λ ∈ [0,1)^n with λ^T A_B integral.
  Basis,
  /// Every primitive normal c with ‖c‖∞ <= n‖A‖∞, rhs from the vertices.
  NormBox,
};

struct ClosureOptions {
  std::uint64_t budget = kDefaultEnumBudget;
  ClosureMethod method = ClosureMethod::Basis;
  int threads = 1;
};

struct ClosureRound {
  int round_index = 0;
  /// ‖A‖∞ of the irredundant input rows the cuts were derived from.
  Int input_norm = 0;
  std::uint64_t candidates_enumerated = 0;
  /// Distinct cuts that separate some vertex of the input.
  std::uint64_t cuts_kept = 0;
  Int max_cut_norm = 0;
  HPolytope output;
  VPolytope vertices;
};

namespace detail {

/// Irredundant rows of P as inequalities (equations split in two).
inline std::vector<LinIneq> inequality_rows(const HPolytope& p) {
  std::vector<LinIneq> rows = p.ineqs;
  for (const auto& e : p.eqs) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  return rows;
}

inline Int norm_of(const std::vector<LinIneq>& rows) {
  Int m = 0;
  for (const auto& q : rows) m = std::max(m, max_abs(q.coeffs));
  return m;
}

inline bool is_integral_point(const Point& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return is_integer(r); });
}

using i128 = __int128;

inline Int mod_floor(const BigInt& a, Int d) {
  BigInt r = a % d;
  if (r < 0) r += d;
  return to_int(r);
}

struct Basis {
  std::vector<std::size_t> rows;
  BigInt det;
};

/// Cuts from one basis: λ = μ/D ranges over the group generated by the rows
/// of sign(det)·adj(A_B) modulo D = |det A_B|. A cut with D | μ·b_B is
/// attained at the vertex and cuts nothing.
inline void basis_cuts(const std::vector<LinIneq>& rows, const Basis& b, int n, std::map<IntVector, Int>& cuts,
                       std::uint64_t& enumerated) {
  const Int d = to_int(b.det < 0 ? BigInt(-b.det) : b.det);
  if (d == 1) return;
  std::vector<BigVector> m;
  for (std::size_t r : b.rows) m.emplace_back(rows[r].coeffs.begin(), rows[r].coeffs.end());
  auto adj = linalg::adjugate(m);
  // λ^T A_B = z^T integral iff λ^T = z^T adj / det: integer combinations of
  // the rows of adj, scaled by 1/det.
  std::vector<IntVector> gens;
  for (int i = 0; i < n; ++i) {
    IntVector g(n);
    for (int j = 0; j < n; ++j) {
      BigInt v = adj[i][j];
      if (b.det < 0) v = -v;
      g[j] = mod_floor(v, d);
    }
    gens.push_back(std::move(g));
  }
  std::set<IntVector> seen{IntVector(n, 0)};
  std::vector<IntVector> queue{IntVector(n, 0)};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const auto& g : gens) {
      IntVector next = queue[h];
      for (int j = 0; j < n; ++j) next[j] = (next[j] + g[j]) % d;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  if (static_cast<Int>(queue.size()) != d) throw Error("basis group has unexpected order");
  for (std::size_t k = 1; k < queue.size(); ++k) {
    const IntVector& mu = queue[k];
    ++enumerated;
    i128 mb = 0;
    for (int i = 0; i < n; ++i) mb += static_cast<i128>(mu[i]) * rows[b.rows[i]].rhs;
    if (mb % d == 0) continue;
    LinIneq cut{IntVector(n), 0};
    for (int j = 0; j < n; ++j) {
      i128 s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<i128>(mu[i]) * rows[b.rows[i]].coeffs[j];
      if (s % d != 0) throw Error("basis cut is not integral");
      cut.coeffs[j] = static_cast<Int>(s / d);
    }
    // ⌈mb / d⌉ with d > 0.
    i128 q = mb / d;
    if (mb % d != 0 && mb > 0) ++q;
    cut.rhs = static_cast<Int>(q);
    if (cut.is_zero()) continue;
    cut = primitive_form(cut, Normalization::ChvatalGomory);
    auto [it, inserted] = cuts.emplace(cut.coeffs, cut.rhs);
    if (!inserted) it->second = std::max(it->second, cut.rhs);
  }
}

inline void for_each_subset(std::size_t m, int k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(k - depth) <= m; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

inline std::map<IntVector, Int> cuts_by_bases(const std::vector<LinIneq>& rows, const VPolytope& verts, int n,
                                               const ClosureOptions& opts, std::uint64_t& enumerated) {
  std::vector<Basis> bases;
  std::uint64_t needed = 0;
  std::uint64_t subsets = 0;
  for (const auto& v : verts.vertices) {
    if (is_integral_point(v)) continue;
    std::vector<std::size_t> tight;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].lhs(v) == rows[r].rhs) tight.push_back(r);
    }
    for_each_subset(tight.size(), n, [&](const std::vector<std::size_t>& pick) {
      if (++subsets > opts.budget) throw NormBudgetExceeded(subsets, opts.budget);
      std::vector<BigVector> m;
      for (std::size_t k : pick) m.emplace_back(rows[tight[k]].coeffs.begin(), rows[tight[k]].coeffs.end());
      BigInt det = linalg::determinant(m);
      if (det == 0) return;
      Basis b;
      for (std::size_t k : pick) b.rows.push_back(tight[k]);
      const BigInt mag = det < 0 ? BigInt(-det) : det;
      if (mag > BigInt(opts.budget)) throw NormBudgetExceeded(opts.budget + 1, opts.budget);
      needed += static_cast<std::uint64_t>(mag);
      if (needed > opts.budget) throw NormBudgetExceeded(needed, opts.budget);
      b.det = std::move(det);
      bases.push_back(std::move(b));
    });
  }
  using Part = std::pair<std::map<IntVector, Int>, std::uint64_t>;
  const int workers = std::max(1, opts.threads);
  const auto parts = parallel_map<Part>(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
    Part part;
    for (std::size_t i = w; i < bases.size(); i += static_cast<std::size_t>(workers)) {
      basis_cuts(rows, bases[i], n, part.first, part.second);
    }
    return part;
  });
  std::map<IntVector, Int> cuts;
  for (const auto& [local, count] : parts) {
    enumerated += count;
    for (const auto& [c, r] : local) {
      auto [it, inserted] = cuts.emplace(c, r);
      if (!inserted) it->second = std::max(it->second, r);
    }
  }
  return cuts;
}

inline std::map<IntVector, Int> cuts_by_norm_box(const VPolytope& verts, int n, Int bound, const ClosureOptions& opts,
                                                  std::uint64_t& enumerated) {
  // (2B+1)^n, saturating.
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    const auto side = static_cast<std::uint64_t>(2 * bound + 1);
    if (total > opts.budget / side + 1) throw NormBudgetExceeded(opts.budget + 1, opts.budget);
    total *= side;
  }
  if (total > opts.budget) throw NormBudgetExceeded(total, opts.budget);
  std::map<IntVector, Int> cuts;
  IntVector c(n, -bound);
  for (;;) {
    if (gcd_of(c) == 1) {
      ++enumerated;
      const auto m = verts.min(c);
      if (m && !is_integer(*m)) cuts.emplace(c, to_int(ceil(*m)));
    }
    int i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  return cuts;
}

}  // namespace detail

/// P' = P ∩ {c·x >= ⌈min_P c·x⌉ : c ∈ Z^n}. The input is first reduced to
/// its irredundant description (with the box adjoined) and ‖A‖∞ is measured
/// there. Every cut kept satisfies ‖c‖∞ <= n‖A‖∞.
inline ClosureRound elementary_closure(const HPolytope& p, const ClosureOptions& opts = {}, int round_index = 1) {
  p.check_rows();
  const int n = p.n;
  ClosureRound round;
  round.round_index = round_index;
  const VPolytope in_verts = vertices(p);
  if (in_verts.empty()) {
    round.output = infeasible_polytope(n);
    round.vertices = VPolytope{n, {}};
    return round;
  }
  const HPolytope in = describe(in_verts);
  const auto rows = detail::inequality_rows(in);
  round.input_norm = detail::norm_of(rows);

  std::map<IntVector, Int> cuts;
  if (!in_verts.integral() && n > 0) {
    if (opts.method == ClosureMethod::Basis) {
      cuts = detail::cuts_by_bases(rows, in_verts, n, opts, round.candidates_enumerated);
    } else {
      const Int bound = checked_mul(n, std::max<Int>(round.input_norm, 1));
      cuts = detail::cuts_by_norm_box(in_verts, n, bound, opts, round.candidates_enumerated);
    }
  }

  VertexEnumerator en(n);
  for (const auto& e : in.eqs) en.add_equation(e);
  for (const auto& q : in.ineqs) en.add(q);
  std::vector<LinIneq> ordered;
  for (const auto& [c, r] : cuts) {
    LinIneq q{c, r};
    // Only cuts that separate an input vertex can change anything.
    if (!in_verts.satisfies(q)) ordered.push_back(std::move(q));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LinIneq& a, const LinIneq& b) { return max_abs(a.coeffs) < max_abs(b.coeffs); });
  const Int limit = checked_mul(n, round.input_norm);
  for (const auto& q : ordered) {
    round.max_cut_norm = std::max(round.max_cut_norm, max_abs(q.coeffs));
    if (max_abs(q.coeffs) > limit) throw Error("cut exceeds the coefficient bound n·‖A‖∞");
    en.add(q);
  }
  round.cuts_kept = ordered.size();
  round.vertices = en.vertices();
  round.output = describe(round.vertices);
  return round;
}

// ---------------------------------------------------------------- sequences

inline int default_rank_cap(int n) {
  const double v = static_cast<double>(n) * n * (3.0 + std::log2(static_cast<double>(n) + 1.0));
  return static_cast<int>(std::ceil(v - 1e-9));
}

/// The closures R = R^(0), R^(1), ... computed on demand and memoized. Once
/// R^(t) is integral it equals the integer hull and the sequence stays
/// there, so later rounds are not computed.
class ClosureSequence {
 public:
  explicit ClosureSequence(HPolytope p, ClosureOptions opts = {}) : opts_(opts) {
    p.check_rows();
    ClosureRound r0;
    r0.round_index = 0;
    r0.vertices = vertices(p);
    r0.output = describe(r0.vertices);
    r0.input_norm = p.norm();
    levels_.push_back(std::move(r0));
  }

  int dim() const { return levels_.front().output.n; }

  /// Round t (t = 0 is the input itself); computes missing rounds.
  const ClosureRound& level(int t) {
    if (t < 0) throw PreconditionError("negative closure round");
    while (static_cast<int>(levels_.size()) <= t && !stable_at()) {
      const int next = static_cast<int>(levels_.size());
      levels_.push_back(elementary_closure(levels_.back().output, opts_, next));
    }
    const auto s = stable_at();
    if (s && t > *s) return levels_[static_cast<std::size_t>(*s)];
    return levels_[static_cast<std::size_t>(t)];
  }

  const VPolytope& vertices_at(int t) { return level(t).vertices; }
  const HPolytope& polytope_at(int t) { return level(t).output; }

  /// First computed round whose vertices are all integral.
  std::optional<int> stable_at() const {
    for (std::size_t t = 0; t < levels_.size(); ++t) {
      if (levels_[t].vertices.integral()) return static_cast<int>(t);
    }
    return std::nullopt;
  }

  /// Rounds 1..k computed so far (round 0 excluded).
  std::vector<ClosureRound> rounds() const { return {levels_.begin() + 1, levels_.end()}; }

 private:
  ClosureOptions opts_;
  std::vector<ClosureRound> levels_;
};

struct RankCertificate {
  int rank = 0;
  std::vector<ClosureRound> rounds;
  bool converged = false;
  int cap = 0;
};

inline void require_integer_points(const HPolytope& p, const PointSet& s) {
  require_same_dim(p.n, s.dim());
  for (VertexIndex v = 0; v < s.universe(); ++v) {
    if (p.contains(v) != s.contains(v)) {
      throw IntegerPointMismatch("vertex " + CubePoint(p.n, v).str() + (s.contains(v) ? " is in S but not in P" : " is in P but not in S"));
    }
  }
}

/// CG-rank of the sequence's polytope: the first t with R^(t) integral, i.e.
/// R^(t) = conv(R ∩ Z^n); stops unconverged after `cap` rounds.
inline RankCertificate cg_rank(ClosureSequence& seq, int cap) {
  if (cap < 0) throw PreconditionError("cap must be nonnegative");
  RankCertificate cert;
  cert.cap = cap;
  for (int t = 0; t <= cap; ++t) {
    seq.level(t);
    if (seq.stable_at() && *seq.stable_at() <= t) {
      cert.rank = *seq.stable_at();
      cert.converged = true;
      break;
    }
    cert.rank = t;
  }
  cert.rounds = seq.rounds();
  return cert;
}

inline RankCertificate cg_rank(const HPolytope& p, const PointSet& s, int cap, const ClosureOptions& opts = {}) {
  require_integer_points(p, s);
  ClosureSequence seq(p, opts);
  return cg_rank(seq, cap);
}

/// Smallest t <= cap such that q is valid for R^(t); nullopt if none.
inline std::optional<int> validity_depth(ClosureSequence& seq, const LinIneq& q, int cap) {
  require_same_dim(seq.dim(), q.dim());
  for (int t = 0; t <= cap; ++t) {
    if (seq.vertices_at(t).satisfies(q)) return t;
    if (seq.stable_at() && *seq.stable_at() <= t) return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<int> validity_depth(const HPolytope& p, const LinIneq& q, const PointSet& s, int cap,
                                         const ClosureOptions& opts = {}) {
  require_integer_points(p, s);
  for (VertexIndex v : s.members()) {
    if (!q.satisfied_by(v)) throw PreconditionError("inequality is not valid on S");
  }
  ClosureSequence seq(p, opts);
  return validity_depth(seq, q, cap);
}

// ---------------------------------------------------------------- ε-scaled facets

struct ApproxFacet {
  LinIneq facet;
  SwitchedForm form;
  /// δ >= c_i for every i, the hypothesis of the scaled statement.
  bool covered = false;
  Rational scaled_rhs;  // (1-ε)δ in switched form
  bool pass = false;
};

struct ApproxReport {
  int notch = 0;
  Rational eps;
  int t = 0;
  std::vector<ApproxFacet> facets;
  bool all_pass = true;
};

/// For each facet of conv(S) in switched form with δ >= c_i >= 0, checks
/// that the row with rhs (1-ε)δ holds on R^(t), t = p/ε - 1. Equations of
/// conv(S) enter as two opposite rows. Rows with some c_i > δ are reported
/// but not required to pass.
inline ApproxReport approx_closure_check(const PointSet& s, ClosureSequence& seq, const Rational& eps) {
  require_same_dim(seq.dim(), s.dim());
  if (eps <= 0 || eps > 1) throw PreconditionError("eps must lie in (0, 1]");
  ApproxReport rep;
  rep.notch = notch(s);
  rep.eps = eps;
  const Rational k = Rational(rep.notch) / eps;
  if (!is_integer(k)) throw PreconditionError("p/eps = " + to_string(k) + " is not an integer");
  // p = 0 (S full) gives t = -1; R^(0) already is the box.
  rep.t = std::max<int>(0, static_cast<int>(to_int(numerator(k))) - 1);
  const VPolytope& verts = seq.vertices_at(rep.t);
  const HPolytope hull = hull_facets(s);
  for (const auto& q : detail::inequality_rows(hull)) {
    ApproxFacet f;
    f.facet = q;
    f.form = switched_form(q);
    f.covered = std::all_of(f.form.c.begin(), f.form.c.end(), [&](Int c) { return c <= f.form.delta; });
    f.scaled_rhs = (1 - eps) * Rational(f.form.delta);
    // Σ_I c_i x_i + Σ_J c_j (1 - x_j) >= r  <=>  q.coeffs·x >= r - Σ_J c_j.
    Rational rhs = f.scaled_rhs;
    for (int i = 0; i < q.dim(); ++i) {
      if ((f.form.j_mask >> i) & 1U) rhs -= f.form.c[i];
    }
    const auto m = verts.min(q.coeffs);
    f.pass = !m || *m >= rhs;
    if (f.covered && !f.pass) rep.all_pass = false;
    rep.facets.push_back(std::move(f));
  }
  return rep;
}

inline ApproxReport approx_closure_check(const PointSet& s, const HPolytope& p, const Rational& eps,
                                         const ClosureOptions& opts = {}) {
  require_integer_points(p, s);
  ClosureSequence seq(p, opts);
  return approx_closure_check(s, seq, eps);
}

}  // namespace cgrank
