#pragma once

// Structural parameters of a point set S ⊆ {0,1}^n: notch, gap, the graph on
// the excluded vertices, clique-subdivision order, the notch-3 facet
// templates and the Hamming-ball optimization algorithm.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cgrank/cube.hpp"
#include "cgrank/errors.hpp"
#include "cgrank/number.hpp"
#include "cgrank/polytope.hpp"

namespace cgrank {

// ---------------------------------------------------------------- notch

/// Smallest p such that every p-dimensional face of the cube meets S; n+1
/// for empty S. A face with fixed coordinates F meets S iff the projection
/// of S onto F hits its values, so each F is handled in one pass over S.
inline int notch(const PointSet& s) {
  const int n = s.dim();
  if (s.empty()) return n + 1;
  const auto members = s.members();
  std::vector<std::uint32_t> stamp(cube_size(n), 0);
  std::uint32_t tick = 0;
  for (int d = 0; d <= n; ++d) {
    bool all = true;
    for (VertexIndex fixed = 0; fixed < cube_size(n) && all; ++fixed) {
      if (std::popcount(fixed) != n - d) continue;
      ++tick;
      std::uint64_t distinct = 0;
      for (VertexIndex v : members) {
        const VertexIndex key = v & fixed;
        if (stamp[key] != tick) {
          stamp[key] = tick;
          ++distinct;
        }
      }
      all = distinct == cube_size(n - d);
    }
    if (all) return d;
  }
  return n;  // unreachable for nonempty S: the whole cube meets S
}

// ---------------------------------------------------------------- gap

inline constexpr Int kDefaultGapCap = 64;

struct GapCertificate {
  Int delta = 0;
  /// Rows whose intersection with the box (rows included) is conv(S).
  std::vector<SwitchedForm> witness_system;
  /// A facet attaining delta, for full-dimensional conv(S).
  std::optional<LinIneq> lower_bound_facet;
  bool full_dimensional = false;
};

namespace detail {

inline std::vector<SwitchedForm> box_forms(int n) {
  std::vector<SwitchedForm> out;
  for (const auto& q : box_rows(n)) out.push_back(switched_form(q));
  return out;
}

/// conv(S) ⊆ P always holds for the systems built here, so P = conv(S) iff
/// every vertex of P is a point of S.
inline bool vertices_in(const VPolytope& v, const PointSet& s) {
  for (const auto& x : v.vertices) {
    VertexIndex idx = 0;
    for (int i = 0; i < v.n; ++i) {
      if (x[i] == 1) {
        idx |= VertexIndex{1} << i;
      } else if (x[i] != 0) {
        return false;
      }
    }
    if (!s.contains(idx)) return false;
  }
  return true;
}

/// Bitmask over the members of S of the points where q is tight.
inline std::vector<bool> tight_members(const LinIneq& q, const std::vector<VertexIndex>& members) {
  std::vector<bool> t(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) t[k] = q.tight_at(members[k]);
  return t;
}

inline bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && !b[k]) return false;
  }
  return true;
}

/// Drops rows whose tight set on S sits inside another row's tight set. The
/// result is only a heuristic candidate; callers re-verify it.
inline std::vector<LinIneq> maximal_tight_rows(const std::vector<LinIneq>& rows, const std::vector<VertexIndex>& members) {
  std::vector<std::vector<bool>> tight;
  for (const auto& q : rows) tight.push_back(tight_members(q, members));
  std::vector<LinIneq> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < rows.size() && !dominated; ++j) {
      if (i == j || !subset_of(tight[i], tight[j])) continue;
      dominated = !subset_of(tight[j], tight[i]) || j < i;
    }
    if (!dominated) out.push_back(rows[i]);
  }
  return out;
}

inline bool describes(const PointSet& s, const std::vector<LinIneq>& rows) {
  VertexEnumerator en(s.dim());
  for (const auto& q : rows) en.add(q);
  return vertices_in(en.vertices(), s);
}

inline std::vector<SwitchedForm> reduce_witness(const PointSet& s, const std::vector<LinIneq>& pool) {
  const int n = s.dim();
  std::vector<LinIneq> rows = pool;
  const auto trimmed = maximal_tight_rows(pool, s.members());
  if (trimmed.size() < pool.size() && describes(s, trimmed)) rows = trimmed;
  HPolytope h{n, box_rows(n), {}};
  h.ineqs.insert(h.ineqs.end(), rows.begin(), rows.end());
  if (rows.size() <= 200) h = remove_redundancy(h);
  std::vector<SwitchedForm> out;
  for (const auto& q : h.ineqs) out.push_back(switched_form(q));
  return out;
}

}  // namespace detail

/// Gap by iterative deepening: for δ = 1, 2, ... adds every primitive
/// switched-form row with 0 <= c_i <= δ that is valid on S, tight at some
/// point of S and spanned by 0/1 points, and stops once box plus the rows
/// collected so far cut out conv(S). Rows not touching S are redundant in
/// any description, so the tightness filter loses nothing.
inline GapCertificate gap_by_deepening(const PointSet& s, Int cap = kDefaultGapCap) {
  const int n = s.dim();
  GapCertificate cert;
  cert.full_dimensional = s.size() > 0 && hull_facets(s).eqs.empty();
  if (s.is_full()) {
    cert.witness_system = detail::box_forms(n);
    return cert;
  }
  if (s.empty()) {
    if (n == 0) throw PreconditionError("the 0-dimensional cube has no proper inequality");
    LinIneq lo{IntVector(n, 0), 1};
    lo.coeffs[0] = 1;
    LinIneq hi{IntVector(n, 0), 0};
    hi.coeffs[0] = -1;
    cert.delta = 1;
    cert.witness_system = detail::box_forms(n);
    cert.witness_system.push_back(switched_form(lo));
    cert.witness_system.push_back(switched_form(hi));
    return cert;
  }
  const auto members = s.members();
  VertexEnumerator en(n);
  std::vector<LinIneq> pool;
  for (Int delta = 1; delta <= cap; ++delta) {
    IntVector a(n, -delta);
    for (;;) {
      // Primitive, nonzero, gcd(c, δ) = 1.
      Int g = delta;
      for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
      if (g == 1) {
        Int rhs = delta;
        for (Int x : a) {
          if (x < 0) rhs += x;
        }
        LinIneq q{a, rhs};
        bool valid = true;
        bool tight = false;
        for (VertexIndex v : members) {
          const Int l = q.lhs(v);
          if (l < rhs) {
            valid = false;
            break;
          }
          tight = tight || l == rhs;
        }
        if (valid && tight && !q.is_zero() && spanned_by_01(q)) {
          en.add(q);
          pool.push_back(std::move(q));
        }
      }
      int i = 0;
      while (i < n && a[i] == delta) a[i++] = -delta;
      if (i == n) break;
      ++a[i];
    }
    if (detail::vertices_in(en.vertices(), s)) {
      cert.delta = delta;
      cert.witness_system = detail::reduce_witness(s, pool);
      return cert;
    }
  }
  throw GapCapExceeded(cap);
}

/// Gap of S. Full-dimensional conv(S): every facet hyperplane is spanned by
/// its own 0/1 vertices and the facet description is unique, so Δ is the
/// largest switched δ over the primitive facets. Otherwise falls back to
/// gap_by_deepening.
inline GapCertificate gap(const PointSet& s, Int cap = kDefaultGapCap) {
  if (s.empty()) return gap_by_deepening(s, cap);
  const auto h = hull_facets(s);
  if (!h.eqs.empty()) return gap_by_deepening(s, cap);
  GapCertificate cert;
  cert.full_dimensional = true;
  for (const auto& q : h.ineqs) {
    const auto f = switched_form(q);
    if (!cert.lower_bound_facet || f.delta > cert.delta) {
      cert.delta = f.delta;
      cert.lower_bound_facet = q;
    }
    cert.witness_system.push_back(f);
  }
  if (cert.delta > cap) throw GapCapExceeded(cap);
  return cert;
}

// ---------------------------------------------------------------- forbidden graph

/// Subgraph of the hypercube graph induced by the points outside S.
struct ForbiddenGraph {
  int n = 0;
  std::vector<CubePoint> verts;
  std::vector<std::pair<int, int>> edges;  // indices into verts, first < second

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(verts.size());
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

inline ForbiddenGraph forbidden_graph(const PointSet& s) {
  ForbiddenGraph g;
  g.n = s.dim();
  const auto out = s.complement().members();
  std::map<VertexIndex, int> pos;
  for (VertexIndex v : out) {
    pos[v] = static_cast<int>(g.verts.size());
    g.verts.emplace_back(g.n, v);
  }
  for (VertexIndex v : out) {
    for (int i = 0; i < g.n; ++i) {
      const VertexIndex w = v | (VertexIndex{1} << i);
      if (w == v) continue;
      const auto it = pos.find(w);
      if (it != pos.end()) g.edges.emplace_back(pos[v], it->second);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// ---------------------------------------------------------------- subdivisions

inline constexpr std::uint64_t kDefaultSearchBudget = 4'000'000;

namespace detail {

/// Unit-capacity flow network with vertex splitting, used for Menger-type
/// pruning: how many internally disjoint paths leave `source` towards
/// distinct vertices of `targets` through the allowed internal vertices.
class FanFlow {
 public:
  explicit FanFlow(std::size_t nodes) : head_(nodes, -1) {}

  void edge(int u, int v) {
    add(u, v, 1);
    add(v, u, 0);
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> prev(head_.size());
    while (flow < limit) {
      std::fill(prev.begin(), prev.end(), -1);
      std::vector<int> queue{s};
      prev[s] = -2;
      for (std::size_t h = 0; h < queue.size() && prev[t] == -1; ++h) {
        for (int e = head_[queue[h]]; e >= 0; e = next_[e]) {
          if (cap_[e] > 0 && prev[to_[e]] == -1) {
            prev[to_[e]] = e;
            queue.push_back(to_[e]);
          }
        }
      }
      if (prev[t] == -1) break;
      for (int v = t; v != s; v = to_[prev[v] ^ 1]) {
        --cap_[prev[v]];
        ++cap_[prev[v] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add(int u, int v, int c) {
    to_.push_back(v);
    cap_.push_back(c);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, cap_, next_;
};

class SubdivisionSearch {
 public:
  SubdivisionSearch(const std::vector<std::vector<int>>& adj, std::uint64_t budget)
      : adj_(adj), budget_(budget), used_(adj.size(), 0), branch_(adj.size(), 0) {}

  /// Does the graph contain a subdivision of K_k? Short paths are tried in
  /// earlier passes; the last pass has no length limit.
  bool contains(int k) {
    if (k <= 1) return k <= 0 || !adj_.empty();
    std::vector<int> cand;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (static_cast<int>(adj_[v].size()) >= k - 1) cand.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(cand.size()) < k) return false;
    const int all = static_cast<int>(adj_.size());
    for (int limit : {1, 3, all}) {
      max_internal_ = std::min(limit, all);
      std::vector<int> pick;
      if (choose(cand, 0, k, pick)) return true;
      if (limit >= all) break;
    }
    return false;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw SearchBudgetExceeded("subdivision search exceeded " + std::to_string(budget_) + " nodes");
  }

  bool choose(const std::vector<int>& cand, std::size_t from, int k, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == k) {
      pairs_.clear();
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) pairs_.emplace_back(pick[i], pick[j]);
      }
      for (int b : pick) branch_[b] = 1;
      const bool ok = route(0);
      for (int b : pick) branch_[b] = 0;
      return ok;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (cand.size() - i < static_cast<std::size_t>(k) - pick.size()) break;
      pick.push_back(cand[i]);
      if (choose(cand, i + 1, k, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool free_internal(int v) const { return !used_[v] && !branch_[v]; }

  bool adjacent(int a, int b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

  /// Menger check: each branch vertex must reach its unrouted partners by
  /// internally disjoint paths through free vertices.
  bool fans_exist(std::size_t next) const {
    std::map<int, std::vector<int>> partners;
    for (std::size_t i = next; i < pairs_.size(); ++i) {
      partners[pairs_[i].first].push_back(pairs_[i].second);
      partners[pairs_[i].second].push_back(pairs_[i].first);
    }
    const int v = static_cast<int>(adj_.size());
    // Node 2u = in(u), 2u+1 = out(u), 2v = sink.
    for (const auto& [b, ts] : partners) {
      FanFlow net(2 * static_cast<std::size_t>(v) + 1);
      std::vector<char> is_target(v, 0);
      for (int t : ts) is_target[t] = 1;
      for (int u = 0; u < v; ++u) {
        if (is_target[u]) net.edge(2 * u, 2 * v);
        if (u != b && free_internal(u)) net.edge(2 * u, 2 * u + 1);
        if (u != b && !free_internal(u)) continue;
        for (int w : adj_[u]) {
          if (free_internal(w) || is_target[w]) net.edge(2 * u + 1, 2 * w);
        }
      }
      const int need = static_cast<int>(ts.size());
      if (net.max_flow(2 * b + 1, 2 * v, need) < need) return false;
    }
    return true;
  }

  /// Distances to `target` through free internal vertices; -1 where
  /// unreachable.
  std::vector<int> distances_to(int target) const {
    std::vector<int> dist(adj_.size(), -1);
    std::vector<int> queue{target};
    dist[target] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : adj_[u]) {
        if (dist[w] >= 0 || !free_internal(w)) continue;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    return dist;
  }

  /// A branch vertex is tight when its free exits (free neighbors plus
  /// adjacent unrouted partners) just cover its unrouted pairs; then every
  /// free neighbor starts one of its paths. A free common neighbor w of two
  /// tight branches b, b' therefore forces the path b-w-b', so two tight
  /// branches can share at most one, and none once their pair is routed.
  bool tight_branches_consistent(std::size_t next) const {
    std::map<int, int> need;
    std::set<std::pair<int, int>> open;
    for (std::size_t i = next; i < pairs_.size(); ++i) {
      ++need[pairs_[i].first];
      ++need[pairs_[i].second];
      open.insert(pairs_[i]);
    }
    std::vector<int> tight;
    for (const auto& [b, k] : need) {
      int exits = 0;
      for (int w : adj_[b]) {
        if (free_internal(w)) {
          ++exits;
        } else if (branch_[w] && (open.count({b, w}) || open.count({w, b}))) {
          ++exits;
        }
      }
      if (exits < k) return false;
      if (exits == k) tight.push_back(b);
    }
    for (std::size_t i = 0; i < tight.size(); ++i) {
      for (std::size_t j = i + 1; j < tight.size(); ++j) {
        const int a = tight[i];
        const int b = tight[j];
        int common = 0;
        for (int w : adj_[a]) {
          if (free_internal(w) && adjacent(w, b)) ++common;
        }
        const bool unrouted = open.count({a, b}) || open.count({b, a});
        if (common > (unrouted ? 1 : 0)) return false;
      }
    }
    return true;
  }

  bool route(std::size_t idx) {
    tick();
    if (idx == pairs_.size()) return true;
    if (!tight_branches_consistent(idx) || !fans_exist(idx)) return false;
    const auto [a, b] = pairs_[idx];
    if (adjacent(a, b) && route(idx + 1)) return true;
    return extend(a, b, idx, 0);
  }

  /// Depth-first over simple paths from `at` to `target` with at most
  /// max_internal_ internal vertices, none of them a branch vertex or used
  /// by an earlier path; steps closer to the target first.
  bool extend(int at, int target, std::size_t idx, int depth) {
    const auto dist = distances_to(target);
    std::vector<int> next;
    for (int w : adj_[at]) {
      if (dist[w] > 0 && dist[w] <= max_internal_ - depth) next.push_back(w);
    }
    std::stable_sort(next.begin(), next.end(), [&](int x, int y) { return dist[x] < dist[y]; });
    for (int w : next) {
      tick();
      used_[w] = 1;
      const bool found = (dist[w] == 1 && route(idx + 1)) || extend(w, target, idx, depth + 1);
      used_[w] = 0;
      if (found) return true;
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int max_internal_ = 0;
  std::vector<char> used_;
  std::vector<char> branch_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace detail

struct SubdivisionOrder {
  /// Exact order, or a certified lower bound when `exact` is false.
  int t = 0;
  bool exact = true;
};

/// Largest t such that G contains a subdivision of K_{t+1}; 0 for graphs with
/// at most one vertex. Searches t upwards: a K_{t+1}-subdivision contains a
/// K_t-subdivision, so the first failure ends the search. When the node
/// budget runs out the largest order found so far is returned, inexact.
inline SubdivisionOrder subdivision_order(const ForbiddenGraph& g, std::uint64_t budget = kDefaultSearchBudget) {
  const auto adj = g.adjacency();
  detail::SubdivisionSearch search(adj, budget);
  SubdivisionOrder out;
  try {
    while (search.contains(out.t + 2)) ++out.t;
  } catch (const SearchBudgetExceeded&) {
    out.exact = false;
  }
  return out;
}

/// Exact order; throws SearchBudgetExceeded when the budget does not suffice.
inline int max_subdivision_order(const ForbiddenGraph& g, std::uint64_t budget = kDefaultSearchBudget) {
  const auto r = subdivision_order(g, budget);
  if (!r.exact) {
    throw SearchBudgetExceeded("subdivision order undecided beyond t = " + std::to_string(r.t));
  }
  return r.t;
}

// ---------------------------------------------------------------- notch-3 templates

enum class Notch3Tag { Form1, Form2, Form3, Form4, Form5, Box, None };

inline std::string to_string(Notch3Tag t) {
  switch (t) {
    case Notch3Tag::Form1: return "FORM1";
    case Notch3Tag::Form2: return "FORM2";
    case Notch3Tag::Form3: return "FORM3";
    case Notch3Tag::Form4: return "FORM4";
    case Notch3Tag::Form5: return "FORM5";
    case Notch3Tag::Box: return "BOX";
    case Notch3Tag::None: return "NONE";
  }
  return "NONE";
}

struct Notch3Form {
  Notch3Tag tag = Notch3Tag::None;
  /// Template coefficient -> coordinates (0-based) carrying it.
  std::map<Int, std::vector<int>> partition;
  Switching switching;
};

namespace detail {

struct Notch3Template {
  Notch3Tag tag;
  Int rhs;
  std::vector<Int> values;
  bool (*side)(const std::map<Int, std::vector<int>>&);
};

inline std::size_t part_size(const std::map<Int, std::vector<int>>& p, Int k) {
  const auto it = p.find(k);
  return it == p.end() ? 0 : it->second.size();
}

inline const std::vector<Notch3Template>& notch3_templates() {
  static const std::vector<Notch3Template> t{
      {Notch3Tag::Form1, 1, {0, 1}, [](const auto& p) { return part_size(p, 0) == 2; }},
      {Notch3Tag::Form2, 2, {0, 1, 2}, [](const auto& p) { return part_size(p, 0) <= 1; }},
      {Notch3Tag::Form3, 3, {1, 2, 3}, [](const auto& p) { return part_size(p, 1) >= 3; }},
      {Notch3Tag::Form4, 4, {1, 2, 3, 4}, [](const auto& p) { return part_size(p, 1) == 2 && part_size(p, 2) >= 1; }},
      {Notch3Tag::Form5, 6, {2, 3, 4, 6}, [](const auto& p) { return part_size(p, 2) >= 3; }},
  };
  return t;
}

}  // namespace detail

/// Matches q against x_i >= 0 / 1 - x_i >= 0 and the five notch-3 templates.
/// A template needs nonnegative coefficients after switching, and only
/// coordinates with nonzero coefficient can be switched without producing a
/// negative entry, so the switching is read off the signs of q.
inline Notch3Form classify_notch3_facet(const LinIneq& q) {
  const LinIneq prim = primitive_form(q);
  const int n = prim.dim();
  const SwitchedForm f = switched_form(prim);
  Notch3Form out;
  out.switching = Switching{n, f.j_mask};
  int support = 0;
  for (Int c : f.c) support += c != 0 ? 1 : 0;
  if (support == 1 && f.delta == 0) {
    out.tag = Notch3Tag::Box;
    for (int i = 0; i < n; ++i) {
      if (f.c[i] != 0) out.partition[1].push_back(i);
    }
    return out;
  }
  if (f.delta <= 0) return out;
  for (const auto& t : detail::notch3_templates()) {
    std::map<Int, std::vector<int>> part;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Int scaled = checked_mul(f.c[i], t.rhs);
      if (scaled % f.delta != 0) {
        ok = false;
        break;
      }
      const Int v = scaled / f.delta;
      ok = std::find(t.values.begin(), t.values.end(), v) != t.values.end();
      if (ok) part[v].push_back(i);
    }
    if (ok && t.side(part)) {
      out.tag = t.tag;
      out.partition = std::move(part);
      return out;
    }
  }
  return out;
}

/// Every template row (all five forms, all switchings) that is valid on S and
/// tight at some point of S.
inline std::vector<LinIneq> valid_notch3_rows(const PointSet& s) {
  const int n = s.dim();
  const auto members = s.members();
  std::vector<LinIneq> out;
  for (const auto& t : detail::notch3_templates()) {
    std::vector<std::size_t> choice(n, 0);
    for (;;) {
      std::map<Int, std::vector<int>> part;
      IntVector c(n);
      for (int i = 0; i < n; ++i) {
        c[i] = t.values[choice[i]];
        part[c[i]].push_back(i);
      }
      if (t.side(part)) {
        VertexIndex supp = 0;
        for (int i = 0; i < n; ++i) {
          if (c[i] != 0) supp |= VertexIndex{1} << i;
        }
        // Switchings restricted to the support; enumerate submasks.
        VertexIndex j = 0;
        for (;;) {
          const LinIneq q = SwitchedForm{c, j, t.rhs}.expanded();
          bool valid = true;
          bool tight = false;
          for (VertexIndex v : members) {
            const Int l = q.lhs(v);
            if (l < q.rhs) {
              valid = false;
              break;
            }
            tight = tight || l == q.rhs;
          }
          if (valid && tight) out.push_back(q);
          if (j == supp) break;
          j = (j - supp) & supp;
        }
      }
      int i = 0;
      while (i < n && choice[i] + 1 == t.values.size()) choice[i++] = 0;
      if (i == n) break;
      ++choice[i];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Notch3Check {
  bool full_dimensional = false;
  /// Full-dimensional case: tag per hull facet.
  std::vector<std::pair<LinIneq, Notch3Form>> facets;
  /// Every facet matched (full-dimensional) or box plus the valid template
  /// rows cut out conv(S) (lower-dimensional).
  bool ok = false;
};

/// Full-dimensional conv(S) has a unique facet description, which is
/// classified row by row. Otherwise the facet rows of conv(S) are only
/// defined up to its equations, so the check asks instead whether the box
/// and the valid template rows describe conv(S).
inline Notch3Check check_notch3(const PointSet& s) {
  Notch3Check out;
  const auto h = hull_facets(s);
  out.full_dimensional = !s.empty() && h.eqs.empty();
  if (out.full_dimensional) {
    out.ok = true;
    for (const auto& q : h.ineqs) {
      auto form = classify_notch3_facet(q);
      out.ok = out.ok && form.tag != Notch3Tag::None;
      out.facets.emplace_back(q, std::move(form));
    }
    return out;
  }
  if (s.empty()) {
    // x_1 >= 1 and 1 - x_1 >= 1 cut out the empty set; both must match.
    const int n = s.dim();
    LinIneq lo{IntVector(n, 0), 1};
    lo.coeffs[0] = 1;
    LinIneq hi{IntVector(n, 0), 0};
    hi.coeffs[0] = -1;
    out.ok = classify_notch3_facet(lo).tag != Notch3Tag::None && classify_notch3_facet(hi).tag != Notch3Tag::None;
    return out;
  }
  out.ok = detail::describes(s, valid_notch3_rows(s));
  return out;
}

// ---------------------------------------------------------------- oracle

struct OracleResult {
  CubePoint point;
  Rational cost;
  std::uint64_t calls = 0;
};

/// min { c·x : x ∈ S } for S of notch <= p given by a membership oracle:
/// scans the Hamming ball of radius p around the coordinatewise minimizer x*
/// (x*_i = 0 if c_i >= 0, else 1). Ties go to the smallest vertex index.
inline OracleResult oracle_optimize(const std::function<bool(VertexIndex)>& member, int n, const RationalVector& c, int p) {
  check_dim(n);
  require_same_dim(n, static_cast<int>(c.size()));
  if (p < 0) throw PreconditionError("oracle_optimize needs p >= 0");
  const int radius = std::min(p, n);
  VertexIndex xstar = 0;
  for (int i = 0; i < n; ++i) {
    if (c[i] < 0) xstar |= VertexIndex{1} << i;
  }
  std::optional<VertexIndex> best;
  Rational best_cost;
  std::uint64_t calls = 0;
  for (int k = 0; k <= radius; ++k) {
    // Gosper's hack over the k-subsets of [n].
    std::uint64_t m = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = cube_size(n);
    while (m < limit) {
      const auto x = static_cast<VertexIndex>(xstar ^ m);
      ++calls;
      if (member(x)) {
        Rational cost = 0;
        for (int i = 0; i < n; ++i) {
          if ((x >> i) & 1U) cost += c[i];
        }
        if (!best || cost < best_cost || (cost == best_cost && x < *best)) {
          best = x;
          best_cost = std::move(cost);
        }
      }
      if (m == 0) break;
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  if (!best) throw NoFeasibleInBall("no member within Hamming distance " + std::to_string(radius) + " of x*");
  return OracleResult{CubePoint(n, *best), best_cost, calls};
}

inline std::uint64_t ball_size(int n, int p) {
  std::uint64_t total = 0;
  for (int k = 0; k <= std::min(p, n); ++k) total += binomial(n, k);
  return total;
}

}  // namespace cgrank
