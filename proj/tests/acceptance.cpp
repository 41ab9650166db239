// Runs every acceptance criterion on the default corpus and prints one
// PASS/FAIL line per criterion. A criterion passes when no assertion fails
// and at least one assertion was decided; budget skips are counted apart.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cgrank/suites.hpp"

namespace {

using namespace cgrank;

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  std::vector<std::string> claims;
};

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  if (argc > 1) cfg.samples = std::stoi(argv[1]);
  Harness harness(cfg);

  const std::vector<Criterion> criteria{
      {1, "main bound rank <= p+gap-1", "main-bound", {"main-upper-bound"}},
      {2, "notch lower bound rank >= p-1", "main-bound", {"notch-lower-bound"}},
      {3, "subdivision and treewidth bounds", "treewidth", {"treewidth-notch", "treewidth-gap", "subdivision-rank"}},
      {4, "notch-3 facets, gap <= 6, rank <= 8, no-K4 rank <= 4", "notch3", {"notch3-facets", "notch3-gap", "notch3-rank", "no-k4-rank"}},
      {5, "bad-facet family", "badfacet", {"badfacet-notch", "badfacet-gap", "badfacet-facet"}},
      {6, "gap lower bound on rank", "main-bound", {"gap-lower-bound"}},
      {7, "oracle optimization", "oracle", {"oracle-cost", "oracle-calls"}},
      {8, "closure laws", "closure-laws", {"fixed-point", "shrinking", "integer-points", "coefficient-bound", "monotone", "dominance", "closure-laws"}},
      {9, "validity depth of unit-coefficient rows", "main-bound", {"validity-depth"}},
      {10, "scaled facets valid at round p/eps - 1", "approx", {"approx-eps-1", "approx-eps-1/2"}},
  };

  std::map<std::string, VerificationReport> reports;
  bool all = true;
  for (const auto& c : criteria) {
    if (!reports.count(c.suite)) reports.emplace(c.suite, harness.run(c.suite));
    const auto& rep = reports.at(c.suite);
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    for (const auto& claim : c.claims) {
      pass += rep.count(claim, Status::Pass);
      fail += rep.count(claim, Status::Fail);
      skipped += rep.count(claim, Status::Skipped);
    }
    const bool ok = fail == 0 && pass > 0;
    all = all && ok;
    std::printf("criterion %2d %s: %s (pass %zu, fail %zu, skipped %zu)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                pass, fail, skipped);
    for (const auto& a : rep.assertions) {
      if (a.status != Status::Fail) continue;
      if (std::find(c.claims.begin(), c.claims.end(), a.claim) == c.claims.end()) continue;
      std::printf("    FAIL %s %s %s\n", a.claim.c_str(), a.instance.c_str(), a.witness.dump().c_str());
    }
  }
  const auto& n3 = reports.at("notch3");
  std::printf("info: rank-4 instance without K4 subdivision (n <= 4): %s\n",
              n3.info["rank4_no_k4_witness"].is_null() ? "none found" : n3.info["rank4_no_k4_witness"]["instance"].get<std::string>().c_str());
  std::fflush(stdout);
  return all ? 0 : 1;
}
