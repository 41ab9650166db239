#pragma once

// Verification suites: each runs one family of claims over a deterministic
// corpus and records one assertion per (claim, instance) as PASS, FAIL or
// SKIPPED (budget exhausted). Parameters of a corpus instance are computed
// once and shared by every suite run through the same Harness.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgrank/closure.hpp"
#include "cgrank/generators.hpp"
#include "cgrank/io.hpp"
#include "cgrank/parallel.hpp"
#include "cgrank/parameters.hpp"
#include "cgrank/symmetry.hpp"

namespace cgrank {

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

struct Assertion {
  std::string claim;
  std::string instance;
  Status status = Status::Pass;
  Json witness;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main-bound", "notch3",       "badfacet", "treewidth",
                                              "oracle",     "closure-laws", "approx"};
  return names;
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Exhaustive over orbit representatives for n = 1..exhaustive_max_n.
  int exhaustive_max_n = 3;
  std::vector<int> sampled_dims{4, 5};
  int samples = 200;
  std::uint64_t enum_budget = kDefaultEnumBudget;
  std::uint64_t search_budget = kDefaultSearchBudget;
  Int gap_cap = kDefaultGapCap;
  /// Round cap for rank computations; <= 0 selects default_rank_cap(n).
  int max_rank = 0;
  int threads = 1;
  int oracle_pairs = 500;
  int oracle_max_n = 6;
  /// Seeded n = 4 instances added to the closure-law suite.
  int closure_law_samples = 20;
  std::vector<int> badfacet_params{2, 3};

  Json to_json() const {
    return Json{{"seed", seed},
                {"exhaustive_max_n", exhaustive_max_n},
                {"sampled_dims", sampled_dims},
                {"samples", samples},
                {"enum_budget", enum_budget},
                {"search_budget", search_budget},
                {"gap_cap", gap_cap},
                {"max_rank", max_rank},
                {"threads", threads},
                {"oracle_pairs", oracle_pairs},
                {"oracle_max_n", oracle_max_n},
                {"closure_law_samples", closure_law_samples},
                {"badfacet_params", badfacet_params}};
  }
};

struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Assertion> assertions;
  double wall_time = 0;
  Json config;
  /// Observations that are recorded but not asserted.
  Json info = Json::object();

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(assertions.begin(), assertions.end(), [s](const Assertion& a) { return a.status == s; }));
  }
  std::size_t count(const std::string& claim, Status s) const {
    return static_cast<std::size_t>(std::count_if(assertions.begin(), assertions.end(), [&](const Assertion& a) {
      return a.claim == claim && a.status == s;
    }));
  }
  bool ok() const { return count(Status::Fail) == 0; }

  /// Schema version 1. Passing assertions are summarized per claim; FAIL and
  /// SKIPPED ones are listed with their witnesses.
  Json to_json(bool timing = false) const {
    std::map<std::string, std::map<std::string, std::size_t>> per_claim;
    Json listed = Json::array();
    for (const auto& a : assertions) {
      ++per_claim[a.claim][cgrank::to_string(a.status)];
      if (a.status != Status::Pass) {
        listed.push_back(Json{{"claim", a.claim}, {"instance", a.instance}, {"status", cgrank::to_string(a.status)}, {"witness", a.witness}});
      }
    }
    Json claims = Json::object();
    for (const auto& [claim, counts] : per_claim) {
      Json c = Json{{"PASS", 0}, {"FAIL", 0}, {"SKIPPED", 0}};
      for (const auto& [k, v] : counts) c[k] = v;
      claims[claim] = c;
    }
    Json out{{"schema", 1},
             {"suite", suite},
             {"instances", instances},
             {"status", ok() ? "PASS" : "FAIL"},
             {"claims", claims},
             {"failures_and_skips", listed},
             {"config", config},
             {"info", info}};
    if (timing) out["wall_time"] = wall_time;
    return out;
  }
};

// ---------------------------------------------------------------- corpus

struct CorpusInstance {
  std::string id;
  PointSet s;
};

/// Orbit representatives of every S ⊊ {0,1}^n for n <= exhaustive_max_n,
/// then `samples` seeded sets for each sampled dimension with densities
/// cycling through 1/4, 1/2, 3/4. A draw that yields the full cube is
/// redrawn from the next stream.
inline std::vector<CorpusInstance> build_corpus(const SuiteConfig& cfg) {
  std::vector<CorpusInstance> out;
  for (int n = 1; n <= cfg.exhaustive_max_n; ++n) {
    int k = 0;
    for (const auto& s : orbit_representatives(n)) {
      if (s.is_full()) continue;
      out.push_back({"n" + std::to_string(n) + "-orbit" + std::to_string(k++), s});
    }
  }
  const Rational densities[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (int n : cfg.sampled_dims) {
    std::uint64_t stream = static_cast<std::uint64_t>(n) << 32;
    for (int i = 0; i < cfg.samples; ++i) {
      PointSet s;
      do {
        s = random_pointset(n, densities[i % 3], derive_seed(cfg.seed, stream++));
      } while (s.is_full());
      out.push_back({"n" + std::to_string(n) + "-sample" + std::to_string(i), std::move(s)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- harness

namespace detail {

/// A lazily computed value, or the budget message that prevented it.
template <class T>
struct Lazy {
  bool done = false;
  std::optional<T> value;
  std::string skipped;

  const Lazy& get(const std::function<T()>& fn) {
    if (!done) {
      done = true;
      try {
        value = fn();
      } catch (const BudgetExceeded& e) {
        skipped = e.what();
      }
    }
    return *this;
  }
};

inline BigInt big_pow(Int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline Json instance_witness(const PointSet& s) { return Json{{"pointset", emit_pointset(s)}}; }

/// Per excluded vertex a, 6·dist_a(x) >= k with k drawn from 1..5.
inline HPolytope scaled_relaxation(const PointSet& s, std::uint64_t seed) {
  const int n = s.dim();
  HPolytope p = box(n);
  std::uint64_t draw = 0;
  for (VertexIndex a = 0; a < s.universe(); ++a) {
    if (s.contains(a)) continue;
    LinIneq q{IntVector(n), static_cast<Int>(1 + counter_draw(seed, draw++) % 5)};
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1U) {
        q.coeffs[i] = -6;
        q.rhs -= 6;
      } else {
        q.coeffs[i] = 6;
      }
    }
    p.ineqs.push_back(q);
  }
  return p;
}

}  // namespace detail

/// Everything the suites need about one corpus instance, computed on demand.
class InstanceFacts {
 public:
  InstanceFacts(CorpusInstance inst, const SuiteConfig& cfg) : inst_(std::move(inst)), cfg_(cfg) {
    ClosureOptions opts;
    opts.budget = cfg.enum_budget;
    worst_ = std::make_unique<ClosureSequence>(worst_relaxation(inst_.s), opts);
    unit_ = std::make_unique<ClosureSequence>(unit_relaxation(inst_.s), opts);
  }

  const CorpusInstance& instance() const { return inst_; }
  const PointSet& s() const { return inst_.s; }
  int n() const { return inst_.s.dim(); }
  int cap() const { return cfg_.max_rank > 0 ? cfg_.max_rank : default_rank_cap(n()); }

  int notch() {
    if (!notch_) notch_ = cgrank::notch(inst_.s);
    return *notch_;
  }
  const detail::Lazy<GapCertificate>& gap() {
    return gap_.get([&] { return cgrank::gap(inst_.s, cfg_.gap_cap); });
  }
  const detail::Lazy<RankCertificate>& worst_rank() {
    return worst_rank_.get([&] { return cg_rank(*worst_, cap()); });
  }
  const detail::Lazy<RankCertificate>& unit_rank() {
    return unit_rank_.get([&] { return cg_rank(*unit_, cap()); });
  }
  const detail::Lazy<SubdivisionOrder>& subdivision() {
    return subdivision_.get([&] { return subdivision_order(forbidden_graph(inst_.s), cfg_.search_budget); });
  }
  ClosureSequence& worst_sequence() { return *worst_; }

 private:
  CorpusInstance inst_;
  SuiteConfig cfg_;
  std::unique_ptr<ClosureSequence> worst_;
  std::unique_ptr<ClosureSequence> unit_;
  std::optional<int> notch_;
  detail::Lazy<GapCertificate> gap_;
  detail::Lazy<RankCertificate> worst_rank_;
  detail::Lazy<RankCertificate> unit_rank_;
  detail::Lazy<SubdivisionOrder> subdivision_;
};

class Harness {
 public:
  explicit Harness(SuiteConfig cfg = {}) : cfg_(std::move(cfg)) {}

  const SuiteConfig& config() const { return cfg_; }

  std::vector<std::unique_ptr<InstanceFacts>>& corpus() {
    if (facts_.empty()) {
      for (auto& inst : build_corpus(cfg_)) facts_.push_back(std::make_unique<InstanceFacts>(std::move(inst), cfg_));
    }
    return facts_;
  }

  VerificationReport run(const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = name;
    rep.config = cfg_.to_json();
    if (name == "main-bound") {
      main_bound(rep);
    } else if (name == "notch3") {
      notch3(rep);
    } else if (name == "badfacet") {
      badfacet(rep);
    } else if (name == "treewidth") {
      treewidth(rep);
    } else if (name == "oracle") {
      oracle(rep);
    } else if (name == "closure-laws") {
      closure_laws(rep);
    } else if (name == "approx") {
      approx(rep);
    } else {
      throw PreconditionError("unknown suite '" + name + "'");
    }
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

 private:
  using Check = std::function<std::vector<Assertion>(InstanceFacts&)>;

  // Runs `check` over the corpus, instance-parallel, results in corpus order.
  void over_corpus(VerificationReport& rep, const Check& check) {
    auto& all = corpus();
    rep.instances = all.size();
    const auto parts = parallel_map<std::vector<Assertion>>(all.size(), cfg_.threads, [&](std::size_t i) { return check(*all[i]); });
    for (const auto& part : parts) rep.assertions.insert(rep.assertions.end(), part.begin(), part.end());
  }

  static Assertion make(const std::string& claim, const InstanceFacts& f, bool ok, Json w) {
    Assertion a{claim, f.instance().id, ok ? Status::Pass : Status::Fail, std::move(w)};
    if (!ok) a.witness["instance"] = detail::instance_witness(f.s());
    return a;
  }
  static Assertion skip(const std::string& claim, const InstanceFacts& f, const std::string& why) {
    return Assertion{claim, f.instance().id, Status::Skipped, Json{{"reason", why}}};
  }

  // Criteria: notch lower bound, main upper bound, gap lower bound (unit
  // relaxation), validity depth of unit-coefficient rows.
  void main_bound(VerificationReport& rep) {
    over_corpus(rep, [](InstanceFacts& f) {
      std::vector<Assertion> out;
      const int p = f.notch();
      const auto& rank = f.worst_rank();
      const auto& g = f.gap();
      if (!rank.value) {
        out.push_back(skip("notch-lower-bound", f, rank.skipped));
        out.push_back(skip("main-upper-bound", f, rank.skipped));
      } else {
        const auto& r = *rank.value;
        Json w{{"notch", p}, {"rank", r.rank}, {"converged", r.converged}};
        // Unconverged means rank > cap, which still certifies the lower bound.
        out.push_back(make("notch-lower-bound", f, r.rank >= p - 1 || !r.converged, w));
        if (!g.value) {
          out.push_back(skip("main-upper-bound", f, g.skipped));
        } else {
          const Int delta = g.value->delta;
          w["gap"] = delta;
          if (!r.converged && r.cap < p + delta - 1) {
            out.push_back(skip("main-upper-bound", f, "rank cap below p+gap-1"));
          } else {
            out.push_back(make("main-upper-bound", f, r.converged && r.rank <= p + delta - 1, w));
          }
        }
      }
      // n^(rank+1) >= gap  <=>  rank >= log gap / log n - 1
      if (f.n() >= 2 && g.value && g.value->delta >= 2) {
        const auto& u = f.unit_rank();
        if (!u.value) {
          out.push_back(skip("gap-lower-bound", f, u.skipped));
        } else {
          const Int delta = g.value->delta;
          const int r = u.value->converged ? u.value->rank : u.value->cap + 1;
          const bool ok = detail::big_pow(f.n(), r + 1) >= delta;
          out.push_back(make("gap-lower-bound", f, ok, Json{{"gap", delta}, {"unit_rank", r}, {"n", f.n()}}));
        }
      }
      out.push_back(validity_depth_claim(f));
      return out;
    });
  }

  static Assertion validity_depth_claim(InstanceFacts& f) {
    const int n = f.n();
    const auto members = f.s().members();
    int checked = 0;
    try {
      for (VertexIndex support = 1; support < f.s().universe(); ++support) {
        const int k = std::popcount(support);
        for (VertexIndex j = support;; j = (j - 1) & support) {
          SwitchedForm form{IntVector(n, 0), j, 1};
          for (int i = 0; i < n; ++i) form.c[i] = (support >> i) & 1U;
          bool valid = true;
          for (VertexIndex v : members) {
            if (!form.valid_on(v)) {
              valid = false;
              break;
            }
          }
          if (valid) {
            ++checked;
            const LinIneq q = form.expanded();
            const auto d = validity_depth(f.worst_sequence(), q, n + 1 - k);
            if (!d) {
              return make("validity-depth", f, false, Json{{"row", to_json(q)}, {"support", k}, {"bound", n + 1 - k}});
            }
          }
          if (j == 0) break;
        }
      }
    } catch (const BudgetExceeded& e) {
      return skip("validity-depth", f, e.what());
    }
    return make("validity-depth", f, true, Json{{"rows_checked", checked}});
  }

  void treewidth(VerificationReport& rep) {
    over_corpus(rep, [](InstanceFacts& f) {
      std::vector<Assertion> out;
      const auto& sub = f.subdivision();
      if (!sub.value) {
        out.push_back(skip("subdivision-order", f, sub.skipped));
        return out;
      }
      const int t = sub.value->t;
      if (t < 1) return out;
      // All three bounds only get weaker as t grows, so a pass at a certified
      // lower bound for t is conclusive; a failure there is not.
      const auto verdict = [&](const std::string& claim, bool ok, Json w) {
        w["t"] = t;
        w["t_exact"] = sub.value->exact;
        if (!ok && !sub.value->exact) return skip(claim, f, "subdivision search budget exhausted at t >= " + std::to_string(t));
        return make(claim, f, ok, std::move(w));
      };
      const BigInt four_t_t = 4 * detail::big_pow(t, t);
      const int p = f.notch();
      out.push_back(verdict("treewidth-notch", p <= t + 1, Json{{"notch", p}}));
      const auto& g = f.gap();
      if (!g.value) {
        out.push_back(skip("treewidth-gap", f, g.skipped));
      } else {
        const Int d = g.value->delta;
        out.push_back(verdict("treewidth-gap", BigInt(d) * d <= four_t_t, Json{{"gap", d}}));
      }
      const auto& r = f.worst_rank();
      if (!r.value || !r.value->converged) {
        out.push_back(skip("subdivision-rank", f, r.value ? "rank cap reached" : r.skipped));
      } else {
        const int k = r.value->rank;
        const bool ok = k <= t || BigInt(k - t) * (k - t) <= four_t_t;
        out.push_back(verdict("subdivision-rank", ok, Json{{"rank", k}}));
      }
      return out;
    });
  }

  void notch3(VerificationReport& rep) {
    over_corpus(rep, [](InstanceFacts& f) {
      std::vector<Assertion> out;
      if (f.notch() > 3) return out;
      const auto check = check_notch3(f.s());
      Json fw{{"full_dimensional", check.full_dimensional}};
      if (check.full_dimensional) {
        Json tags = Json::array();
        for (const auto& [q, form] : check.facets) tags.push_back(to_string(form.tag));
        fw["tags"] = tags;
      }
      out.push_back(make("notch3-facets", f, check.ok, fw));
      const auto& g = f.gap();
      if (!g.value) {
        out.push_back(skip("notch3-gap", f, g.skipped));
      } else {
        out.push_back(make("notch3-gap", f, g.value->delta <= 6, Json{{"gap", g.value->delta}}));
      }
      const auto& r = f.worst_rank();
      if (!r.value) {
        out.push_back(skip("notch3-rank", f, r.skipped));
        return out;
      }
      const int k = r.value->converged ? r.value->rank : r.value->cap + 1;
      out.push_back(make("notch3-rank", f, r.value->converged && k <= 8, Json{{"rank", k}}));
      const auto& sub = f.subdivision();
      if (sub.value && sub.value->t <= 2) {
        // A lower bound of t <= 2 does not rule out a K4 subdivision.
        if (!sub.value->exact) {
          out.push_back(skip("no-k4-rank", f, "subdivision order undecided"));
        } else {
          out.push_back(make("no-k4-rank", f, r.value->converged && k <= 4, Json{{"rank", k}, {"t", sub.value->t}}));
        }
      }
      return out;
    });
    // Informational: a rank-4 instance without a K4 subdivision, n <= 4.
    Json found = nullptr;
    for (auto& f : corpus()) {
      if (f->n() > 4 || f->notch() > 3) continue;
      const auto& sub = f->subdivision();
      const auto& r = f->worst_rank();
      if (sub.value && sub.value->exact && sub.value->t <= 2 && r.value && r.value->converged && r.value->rank == 4) {
        found = Json{{"instance", f->instance().id}, {"pointset", emit_pointset(f->s())}};
        break;
      }
    }
    rep.info["rank4_no_k4_witness"] = found;
  }

  void badfacet(VerificationReport& rep) {
    for (int m : cfg_.badfacet_params) {
      const auto inst = badfacet_instance(m);
      const std::string id = "badfacet-" + std::to_string(m);
      ++rep.instances;
      const int p = cgrank::notch(inst.s);
      rep.assertions.push_back({"badfacet-notch", id, p <= 7 ? Status::Pass : Status::Fail, Json{{"notch", p}}});
      const Int need = Int{1} << (m + 1);
      try {
        const auto g = gap(inst.s, std::max(cfg_.gap_cap, need));
        rep.assertions.push_back({"badfacet-gap", id, g.delta >= need ? Status::Pass : Status::Fail, Json{{"gap", g.delta}, {"required", need}}});
        rep.info[id] = Json{{"notch", p}, {"gap", g.delta}};
      } catch (const BudgetExceeded& e) {
        // Exceeding a cap >= 2^(m+1) already certifies the bound.
        rep.assertions.push_back({"badfacet-gap", id, Status::Pass, Json{{"gap_exceeds", e.what()}, {"required", need}}});
      }
      const auto hull = hull_facets(inst.s);
      const bool present = std::find(hull.ineqs.begin(), hull.ineqs.end(), inst.facet()) != hull.ineqs.end();
      rep.assertions.push_back({"badfacet-facet", id, present && gcd_of(inst.c) == 1 ? Status::Pass : Status::Fail,
                                Json{{"c", inst.c}, {"threshold", inst.threshold}, {"facets", hull.ineqs.size()}}});
    }
  }

  void oracle(VerificationReport& rep) {
    rep.instances = static_cast<std::size_t>(cfg_.oracle_pairs);
    for (int k = 0; k < cfg_.oracle_pairs; ++k) {
      const std::uint64_t base = derive_seed(cfg_.seed, (std::uint64_t{7} << 40) + static_cast<std::uint64_t>(k));
      const int n = 1 + static_cast<int>(counter_draw(base, 0) % static_cast<std::uint64_t>(cfg_.oracle_max_n));
      const Rational densities[] = {Rational(1, 8), Rational(1, 2), Rational(7, 8)};
      PointSet s;
      std::uint64_t stream = 1;
      do {
        s = random_pointset(n, densities[k % 3], counter_draw(base, stream++));
      } while (s.empty());
      RationalVector c(n);
      for (int i = 0; i < n; ++i) {
        const auto d = counter_draw(base, 1000 + static_cast<std::uint64_t>(i));
        c[i] = Rational(static_cast<Int>(d % 41) - 20, static_cast<Int>(1 + (d >> 32) % 6));
      }
      const int p = cgrank::notch(s);
      const auto res = oracle_optimize([&](VertexIndex v) { return s.contains(v); }, n, c, p);
      std::optional<Rational> best;
      for (VertexIndex v : s.members()) {
        Rational cost = 0;
        for (int i = 0; i < n; ++i) {
          if ((v >> i) & 1U) cost += c[i];
        }
        if (!best || cost < *best) best = cost;
      }
      std::uint64_t allowed = 0;
      for (int j = 0; j <= std::min(p, n); ++j) allowed += binomial(n, j);
      const std::string id = "oracle-" + std::to_string(k);
      Json w{{"n", n}, {"notch", p}, {"cost", to_string(res.cost)}, {"brute_force", to_string(*best)}, {"calls", res.calls}, {"allowed", allowed}};
      auto record = [&](const std::string& claim, bool ok) {
        Assertion a{claim, id, ok ? Status::Pass : Status::Fail, w};
        if (!ok) a.witness["instance"] = detail::instance_witness(s);
        rep.assertions.push_back(std::move(a));
      };
      record("oracle-cost", res.cost == *best && s.contains(res.point.index()));
      record("oracle-calls", res.calls <= allowed);
    }
  }

  void closure_laws(VerificationReport& rep) {
    std::vector<CorpusInstance> insts;
    for (int n = 1; n <= cfg_.exhaustive_max_n; ++n) {
      int k = 0;
      for (const auto& s : orbit_representatives(n)) insts.push_back({"n" + std::to_string(n) + "-orbit" + std::to_string(k++), s});
    }
    for (int i = 0; i < cfg_.closure_law_samples; ++i) {
      insts.push_back({"n4-law" + std::to_string(i),
                       random_pointset(4, Rational(1 + i % 3, 4), derive_seed(cfg_.seed, (std::uint64_t{9} << 40) + static_cast<std::uint64_t>(i)))});
    }
    rep.instances = insts.size();
    ClosureOptions opts;
    opts.budget = cfg_.enum_budget;
    const SuiteConfig cfg = cfg_;
    const auto parts = parallel_map<std::vector<Assertion>>(insts.size(), cfg_.threads, [&](std::size_t idx) {
      return closure_law_checks(insts[idx], opts, derive_seed(cfg.seed, (std::uint64_t{10} << 40) + idx));
    });
    for (const auto& part : parts) rep.assertions.insert(rep.assertions.end(), part.begin(), part.end());
  }

  static std::vector<Assertion> closure_law_checks(const CorpusInstance& inst, const ClosureOptions& opts, std::uint64_t seed) {
    const PointSet& s = inst.s;
    const int n = s.dim();
    std::vector<Assertion> out;
    auto record = [&](const std::string& claim, bool ok, Json w) {
      Assertion a{claim, inst.id, ok ? Status::Pass : Status::Fail, std::move(w)};
      if (!ok) a.witness["instance"] = detail::instance_witness(s);
      out.push_back(std::move(a));
    };
    auto within = [](const VPolytope& v, const HPolytope& p) {
      for (const auto& q : p.ineqs) {
        if (!v.satisfies(q)) return false;
      }
      for (const auto& e : p.eqs) {
        if (!v.satisfies(e) || !v.satisfies(negated(e))) return false;
      }
      return true;
    };
    try {
      const HPolytope hull = hull_facets(s);
      const auto fixed = elementary_closure(hull, opts);
      record("fixed-point", polytopes_equal(fixed.output, hull) && fixed.cuts_kept == 0, Json::object());

      // Per-round laws along three relaxations of S, up to convergence.
      bool shrinking = true;
      bool integer_points = true;
      bool bounded = true;
      int rounds = 0;
      for (const HPolytope& start : {worst_relaxation(s), unit_relaxation(s), detail::scaled_relaxation(s, seed)}) {
        ClosureSequence seq(start, opts);
        for (int t = 1; t <= default_rank_cap(n); ++t) {
          const HPolytope& before = seq.polytope_at(t - 1);
          const ClosureRound& r = seq.level(t);
          ++rounds;
          shrinking = shrinking && within(r.vertices, before);
          integer_points = integer_points && r.output.integer_points() == s;
          bounded = bounded && r.max_cut_norm <= checked_mul(n, r.input_norm) && r.cuts_kept <= r.candidates_enumerated;
          if (seq.stable_at()) break;
        }
      }
      record("shrinking", shrinking, Json{{"rounds", rounds}});
      record("integer-points", integer_points, Json{{"rounds", rounds}});
      record("coefficient-bound", bounded, Json{{"rounds", rounds}});

      const HPolytope worst = worst_relaxation(s);
      const auto worst_c = elementary_closure(worst, opts);
      // Nested pairs: unit ⊆ worst, and worst cut by a row valid on S.
      bool monotone = within(elementary_closure(unit_relaxation(s), opts).vertices, worst_c.output);
      if (!s.empty() && !hull.ineqs.empty()) {
        const LinIneq& f = hull.ineqs[counter_draw(seed, 1) % hull.ineqs.size()];
        LinIneq half{IntVector(f.coeffs.size()), checked_sub(checked_mul(2, f.rhs), 1)};
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) half.coeffs[i] = checked_mul(2, f.coeffs[i]);
        HPolytope nested = worst;
        nested.ineqs.push_back(half);
        monotone = monotone && within(elementary_closure(nested, opts).vertices, worst_c.output);
      }
      record("monotone", monotone, Json::object());

      bool dominated = true;
      for (std::uint64_t k = 0; k < 3; ++k) {
        const auto qc = elementary_closure(detail::scaled_relaxation(s, counter_draw(seed, 10 + k)), opts);
        dominated = dominated && within(qc.vertices, worst_c.output);
      }
      record("dominance", dominated, Json::object());
    } catch (const BudgetExceeded& e) {
      out.push_back(Assertion{"closure-laws", inst.id, Status::Skipped, Json{{"reason", e.what()}}});
    }
    return out;
  }

  void approx(VerificationReport& rep) {
    over_corpus(rep, [](InstanceFacts& f) {
      std::vector<Assertion> out;
      const int p = f.notch();
      if (p < 1 || p > 3) return out;
      for (const Rational& eps : {Rational(1), Rational(1, 2)}) {
        const std::string claim = eps == 1 ? "approx-eps-1" : "approx-eps-1/2";
        try {
          const auto r = approx_closure_check(f.s(), f.worst_sequence(), eps);
          std::size_t covered = 0;
          for (const auto& fa : r.facets) covered += fa.covered ? 1 : 0;
          Json w{{"t", r.t}, {"facets", r.facets.size()}, {"covered", covered}};
          if (!r.all_pass) w["report"] = to_json(r);
          out.push_back(make(claim, f, r.all_pass, std::move(w)));
        } catch (const BudgetExceeded& e) {
          out.push_back(skip(claim, f, e.what()));
        }
      }
      return out;
    });
  }

  SuiteConfig cfg_;
  std::vector<std::unique_ptr<InstanceFacts>> facts_;
};

inline VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
  Harness h(cfg);
  return h.run(name);
}

}  // namespace cgrank
