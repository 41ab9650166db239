// Command-line front end. Exit codes: 0 success, 1 a verified claim failed,
// 2 bad input, 3 a computation budget was exceeded.

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cgrank/cgrank.hpp"

namespace {

using namespace cgrank;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Globals {
  int max_rank = 0;
  std::uint64_t enum_budget = kDefaultEnumBudget;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool timing = false;
  Int gap_cap = kDefaultGapCap;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  bool json() const { return g_.format == "json"; }

  void emit(const std::string& text) {
    if (g_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(g_.out);
    if (!f) throw PreconditionError("cannot write '" + g_.out + "'");
    f << text;
  }
  void emit(const Json& j, const std::string& text) { emit(json() ? dump(j) : text); }

 private:
  const Globals& g_;
};

ClosureOptions closure_options(const Globals& g) {
  ClosureOptions o;
  o.budget = g.enum_budget;
  o.threads = g.threads;
  return o;
}

int cap_for(const Globals& g, int n) { return g.max_rank > 0 ? g.max_rank : default_rank_cap(n); }

std::string row_text(const LinIneq& q) {
  std::string s;
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) s += (i ? " " : "") + std::to_string(q.coeffs[i]);
  return s + " >= " + std::to_string(q.rhs);
}

/// Row given as "c1 ... cn rhs" tokens, rationals allowed.
LinIneq parse_row(const std::string& text, int n) {
  return parse_hpolytope("n=" + std::to_string(n) + "\nge " + text + "\n").ineqs.at(0);
}

HPolytope relaxation_of(const PointSet& s, const std::string& kind) {
  if (kind == "worst") return worst_relaxation(s);
  if (kind == "unit") return unit_relaxation(s);
  throw PreconditionError("unknown relaxation '" + kind + "' (worst|unit)");
}

std::string rank_text(const RankCertificate& c) {
  std::ostringstream o;
  o << "rank: " << c.rank << (c.converged ? "" : " (not converged, cap reached)") << "\n";
  o << "cap: " << c.cap << "\n";
  for (const auto& r : c.rounds) {
    o << "round " << r.round_index << ": input_norm=" << r.input_norm << " candidates=" << r.candidates_enumerated
      << " cuts=" << r.cuts_kept << " max_cut_norm=" << r.max_cut_norm << " facets=" << r.output.ineqs.size()
      << " equations=" << r.output.eqs.size() << " vertices=" << r.vertices.vertices.size() << "\n";
  }
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Chvátal-Gomory rank of 0/1 polytopes: parameters, closures and verification suites"};
  app.require_subcommand(1);
  app.add_option("--max-rank", g.max_rank, "round cap for rank/depth (default n^2(3+log2(n+1)))");
  app.add_option("--enum-budget", g.enum_budget, "per-round enumeration budget");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write output to a file");
  app.add_option("--gap-cap", g.gap_cap, "largest gap searched");
  app.add_flag("--timing", g.timing, "include wall time in JSON reports");
  app.fallthrough();

  std::string points_path;
  std::string poly_path;
  std::string relaxation = "worst";
  std::string row;
  std::string cost;
  int rounds = 1;
  int oracle_p = -1;

  auto* notch_cmd = app.add_subcommand("notch", "notch of a point set");
  notch_cmd->add_option("points", points_path, "point-set file ('-' for stdin)")->required();

  auto* gap_cmd = app.add_subcommand("gap", "gap of a point set with a witness system");
  gap_cmd->add_option("points", points_path, "point-set file")->required();

  auto* rank_cmd = app.add_subcommand("rank", "CG-rank of a relaxation of S");
  rank_cmd->add_option("points", points_path, "point-set file")->required();
  rank_cmd->add_option("--polytope", poly_path, "H-format relaxation (default: generated)");
  rank_cmd->add_option("--relaxation", relaxation, "worst|unit when no --polytope is given");

  auto* closure_cmd = app.add_subcommand("closure", "iterated elementary closure of an H-polytope");
  closure_cmd->add_option("polytope", poly_path, "H-format file")->required();
  closure_cmd->add_option("--rounds", rounds, "number of rounds")->check(CLI::NonNegativeNumber);

  auto* depth_cmd = app.add_subcommand("depth", "first closure round for which a row is valid");
  depth_cmd->add_option("points", points_path, "point-set file")->required();
  depth_cmd->add_option("--row", row, "\"c1 ... cn rhs\" meaning c.x >= rhs")->required();
  depth_cmd->add_option("--polytope", poly_path, "H-format relaxation (default: generated)");
  depth_cmd->add_option("--relaxation", relaxation, "worst|unit when no --polytope is given");

  auto* oracle_cmd = app.add_subcommand("oracle-opt", "minimize c.x over S through a membership oracle");
  oracle_cmd->add_option("points", points_path, "point-set file")->required();
  oracle_cmd->add_option("--cost", cost, "\"c1 ... cn\", rationals allowed")->required();
  oracle_cmd->add_option("--notch", oracle_p, "ball radius (default: computed notch)");

  std::string family;
  int gen_n = 0;
  int gen_p = 1;
  int gen_k = 0;
  std::string density = "1/2";
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("family", family, "worst|unit|badfacet|notch-p|support-k|random")
      ->required()
      ->check(CLI::IsMember({"worst", "unit", "badfacet", "notch-p", "support-k", "random"}));
  gen_cmd->add_option("--n", gen_n, "dimension (construction parameter for badfacet)");
  gen_cmd->add_option("--p", gen_p, "notch-p parameter");
  gen_cmd->add_option("--k", gen_k, "support-k parameter");
  gen_cmd->add_option("--density", density, "random density p/q");
  gen_cmd->add_option("--points", points_path, "point-set file for worst|unit");

  std::string suite;
  SuiteConfig scfg;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "main-bound|notch3|badfacet|treewidth|oracle|closure-laws|approx")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--samples", scfg.samples, "seeded samples per sampled dimension");
  verify_cmd->add_option("--dims", scfg.sampled_dims, "sampled dimensions");
  verify_cmd->add_option("--exhaustive-max-n", scfg.exhaustive_max_n, "largest exhaustively enumerated n (<= 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Output out(g);
  try {
    if (notch_cmd->parsed()) {
      const PointSet s = parse_pointset(read_input(points_path));
      const int p = notch(s);
      out.emit(Json{{"n", s.dim()}, {"notch", p}}, "notch: " + std::to_string(p) + "\n");
    } else if (gap_cmd->parsed()) {
      const PointSet s = parse_pointset(read_input(points_path));
      const auto cert = gap(s, g.gap_cap);
      std::string text = "gap: " + std::to_string(cert.delta) + "\nwitness system:\n";
      for (const auto& f : cert.witness_system) text += "  " + row_text(f.expanded()) + "\n";
      out.emit(to_json(cert), text);
    } else if (rank_cmd->parsed()) {
      const PointSet s = parse_pointset(read_input(points_path));
      const HPolytope p = poly_path.empty() ? relaxation_of(s, relaxation) : parse_hpolytope(read_input(poly_path));
      const auto cert = cg_rank(p, s, cap_for(g, s.dim()), closure_options(g));
      out.emit(to_json(cert), rank_text(cert));
      if (!cert.converged) return kExitBudget;
    } else if (closure_cmd->parsed()) {
      const HPolytope p = parse_hpolytope(read_input(poly_path));
      ClosureSequence seq(p, closure_options(g));
      Json j = Json::array();
      std::string text;
      for (int t = 1; t <= rounds; ++t) {
        const auto& r = seq.level(t);
        j.push_back(to_json(r));
        if (r.round_index != t) break;  // stable: later rounds repeat
      }
      const HPolytope& last = seq.polytope_at(rounds);
      text = emit_hpolytope(last);
      out.emit(Json{{"rounds", j}, {"result", to_json(last)}}, text);
    } else if (depth_cmd->parsed()) {
      const PointSet s = parse_pointset(read_input(points_path));
      const HPolytope p = poly_path.empty() ? relaxation_of(s, relaxation) : parse_hpolytope(read_input(poly_path));
      const LinIneq q = parse_row(row, s.dim());
      const auto d = validity_depth(p, q, s, cap_for(g, s.dim()), closure_options(g));
      const Json j{{"row", to_json(q)}, {"depth", d ? Json(*d) : Json("NOT_WITHIN_CAP")}};
      out.emit(j, "depth: " + (d ? std::to_string(*d) : std::string("NOT_WITHIN_CAP")) + "\n");
      if (!d) return kExitBudget;
    } else if (oracle_cmd->parsed()) {
      const PointSet s = parse_pointset(read_input(points_path));
      RationalVector c;
      std::istringstream in(cost);
      for (std::string tok; in >> tok;) c.push_back(parse_rational(tok));
      const int p = oracle_p >= 0 ? oracle_p : notch(s);
      const auto res = oracle_optimize([&](VertexIndex v) { return s.contains(v); }, s.dim(), c, p);
      out.emit(to_json(res), "point: " + res.point.str() + "\ncost: " + to_string(res.cost) + "\ncalls: " + std::to_string(res.calls) + "\n");
    } else if (gen_cmd->parsed()) {
      if (family == "worst" || family == "unit") {
        if (points_path.empty()) throw PreconditionError("gen " + family + " needs --points");
        const HPolytope p = relaxation_of(parse_pointset(read_input(points_path)), family);
        out.emit(to_json(p), emit_hpolytope(p));
      } else {
        PointSet s;
        if (family == "badfacet") {
          s = badfacet_instance(gen_n).s;
        } else if (family == "notch-p") {
          s = notch_p_example(gen_n, gen_p);
        } else if (family == "support-k") {
          check_dim(gen_n);
          s = support_at_least(gen_n, gen_k);
        } else {
          check_dim(gen_n);
          s = random_pointset(gen_n, parse_rational(density), g.seed);
        }
        out.emit(to_json(s), emit_pointset(s));
      }
    } else if (verify_cmd->parsed()) {
      scfg.seed = g.seed;
      scfg.enum_budget = g.enum_budget;
      scfg.threads = g.threads;
      scfg.max_rank = g.max_rank;
      scfg.gap_cap = g.gap_cap;
      if (scfg.exhaustive_max_n > 3) throw PreconditionError("--exhaustive-max-n must be <= 3");
      const auto rep = run_suite(suite, scfg);
      std::ostringstream text;
      text << "suite: " << rep.suite << "\ninstances: " << rep.instances << "\n";
      std::map<std::string, std::array<std::size_t, 3>> counts;
      for (const auto& a : rep.assertions) ++counts[a.claim][static_cast<int>(a.status)];
      for (const auto& [claim, c] : counts) {
        text << claim << ": PASS " << c[0] << " FAIL " << c[1] << " SKIPPED " << c[2] << "\n";
      }
      for (const auto& a : rep.assertions) {
        if (a.status == Status::Fail) text << "FAIL " << a.claim << " " << a.instance << " " << a.witness.dump() << "\n";
      }
      if (!rep.info.empty()) text << "info: " << rep.info.dump() << "\n";
      text << "status: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
      out.emit(rep.to_json(g.timing), text.str());
      return rep.ok() ? kExitOk : kExitAssertion;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
