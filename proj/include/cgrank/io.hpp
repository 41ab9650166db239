#pragma once

// Text formats for point sets and H-polytopes, and JSON encodings of the
// library's results. JSON objects keep keys sorted, so equal inputs give
// byte-identical reports.
//
// Point-set format:   n=<int>, then one 0/1 string of length n per line;
//                     character i is coordinate i.
// H-format:           n=<int>, then "ge|eq c1 ... cn rhs" with integer or
//                     p/q tokens.
// '#' starts a comment anywhere on a line; blank lines are ignored.

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cgrank/closure.hpp"
#include "cgrank/cube.hpp"
#include "cgrank/errors.hpp"
#include "cgrank/number.hpp"
#include "cgrank/parameters.hpp"
#include "cgrank/polytope.hpp"

namespace cgrank {

using Json = nlohmann::json;

namespace detail {

struct TextLine {
  int number = 0;
  std::string text;  // comment stripped, trimmed
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<TextLine> content_lines(const std::string& text) {
  std::vector<TextLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

inline int parse_header(const std::vector<TextLine>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header n=<int>");
  const auto& h = lines.front();
  if (h.text.rfind("n=", 0) != 0) throw ParseError(h.number, "expected header n=<int>");
  const std::string digits = trim(std::string_view(h.text).substr(2));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(h.number, "dimension must be a nonnegative integer");
  }
  if (digits.size() > 3) throw ParseError(h.number, "dimension out of range");
  const int n = std::stoi(digits);
  if (n > kMaxDim) throw ParseError(h.number, "dimension out of range (max " + std::to_string(kMaxDim) + ")");
  return n;
}

inline bool is_int_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// "p/q" or an integer; throws ParseError for anything else.
inline Rational parse_rational(const std::string& token, int line = 0) {
  const auto slash = token.find('/');
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!detail::is_int_token(num) || !detail::is_int_token(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError(line, "malformed rational '" + token + "'");
  }
  const BigInt d(den);
  if (d == 0) throw ParseError(line, "zero denominator in '" + token + "'");
  const std::string n_digits = num[0] == '+' ? num.substr(1) : num;
  return Rational(BigInt(n_digits), d);
}

inline PointSet parse_pointset(const std::string& text) {
  const auto lines = detail::content_lines(text);
  const int n = detail::parse_header(lines);
  PointSet s(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, body] = lines[k];
    if (static_cast<int>(body.size()) != n) {
      throw ParseError(number, "expected a 0/1 string of length " + std::to_string(n) + ", got '" + body + "'");
    }
    VertexIndex v = 0;
    for (int i = 0; i < n; ++i) {
      const char c = body[static_cast<std::size_t>(i)];
      if (c != '0' && c != '1') throw ParseError(number, std::string("invalid character '") + c + "'");
      if (c == '1') v |= VertexIndex{1} << i;
    }
    if (s.contains(v)) throw ParseError(number, "duplicate point " + body);
    s.insert(v);
  }
  return s;
}

inline std::string emit_pointset(const PointSet& s) {
  std::string out = "n=" + std::to_string(s.dim()) + "\n";
  for (VertexIndex v : s.members()) out += CubePoint(s.dim(), v).str() + "\n";
  return out;
}

inline HPolytope parse_hpolytope(const std::string& text) {
  const auto lines = detail::content_lines(text);
  const int n = detail::parse_header(lines);
  HPolytope p{n, {}, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, body] = lines[k];
    const auto tok = detail::split_ws(body);
    if (tok[0] != "ge" && tok[0] != "eq") throw ParseError(number, "row must start with 'ge' or 'eq'");
    if (static_cast<int>(tok.size()) != n + 2) {
      throw ParseError(number, std::to_string(n) + " coefficients + rhs required, got " + std::to_string(tok.size() - 1) + " tokens");
    }
    RationalVector row;
    for (std::size_t i = 1; i < tok.size(); ++i) row.push_back(parse_rational(tok[i], number));
    BigInt lcm = 1;
    for (const auto& r : row) lcm = boost::multiprecision::lcm(lcm, denominator(r));
    LinIneq q{IntVector(static_cast<std::size_t>(n)), 0};
    try {
      for (int i = 0; i < n; ++i) q.coeffs[static_cast<std::size_t>(i)] = to_int(numerator(row[static_cast<std::size_t>(i)] * lcm));
      q.rhs = to_int(numerator(row.back() * lcm));
    } catch (const Overflow&) {
      throw ParseError(number, "entry does not fit in 64 bits after clearing denominators");
    }
    (tok[0] == "ge" ? p.ineqs : p.eqs).push_back(std::move(q));
  }
  return p;
}

inline std::string emit_hpolytope(const HPolytope& p) {
  std::string out = "n=" + std::to_string(p.n) + "\n";
  auto row = [&](const char* kind, const LinIneq& q) {
    out += kind;
    for (Int c : q.coeffs) out += " " + std::to_string(c);
    out += " " + std::to_string(q.rhs) + "\n";
  };
  for (const auto& q : p.ineqs) row("ge", q);
  for (const auto& q : p.eqs) row("eq", q);
  return out;
}

// ---------------------------------------------------------------- JSON

inline Json to_json(const PointSet& s) {
  Json pts = Json::array();
  for (VertexIndex v : s.members()) pts.push_back(CubePoint(s.dim(), v).str());
  return Json{{"n", s.dim()}, {"points", pts}};
}

inline Json to_json(const LinIneq& q) { return Json{{"coeffs", q.coeffs}, {"rhs", q.rhs}}; }

inline Json to_json(const SwitchedForm& f) {
  std::vector<int> j;
  for (int i = 0; i < f.dim(); ++i) {
    if ((f.j_mask >> i) & 1U) j.push_back(i + 1);
  }
  return Json{{"c", f.c}, {"delta", f.delta}, {"J", j}, {"row", to_json(f.expanded())}};
}

inline Json to_json(const HPolytope& p) {
  Json ge = Json::array();
  Json eq = Json::array();
  for (const auto& q : p.ineqs) ge.push_back(to_json(q));
  for (const auto& q : p.eqs) eq.push_back(to_json(q));
  return Json{{"n", p.n}, {"ge", ge}, {"eq", eq}};
}

inline Json to_json(const VPolytope& v) {
  Json pts = Json::array();
  for (const auto& x : v.vertices) {
    Json row = Json::array();
    for (const auto& r : x) row.push_back(to_string(r));
    pts.push_back(row);
  }
  return pts;
}

inline Json to_json(const ClosureRound& r) {
  return Json{{"round", r.round_index},
              {"input_norm", r.input_norm},
              {"candidates_enumerated", r.candidates_enumerated},
              {"cuts_kept", r.cuts_kept},
              {"max_cut_norm", r.max_cut_norm},
              {"facets", r.output.ineqs.size()},
              {"equations", r.output.eqs.size()},
              {"vertices", r.vertices.vertices.size()},
              {"output", to_json(r.output)}};
}

inline Json to_json(const RankCertificate& c) {
  Json rounds = Json::array();
  for (const auto& r : c.rounds) rounds.push_back(to_json(r));
  return Json{{"rank", c.rank}, {"converged", c.converged}, {"cap", c.cap}, {"rounds", rounds}};
}

inline Json to_json(const GapCertificate& g) {
  Json w = Json::array();
  for (const auto& f : g.witness_system) w.push_back(to_json(f));
  Json out{{"delta", g.delta}, {"full_dimensional", g.full_dimensional}, {"witness_system", w}};
  out["lower_bound_facet"] = g.lower_bound_facet ? to_json(*g.lower_bound_facet) : Json(nullptr);
  return out;
}

inline Json to_json(const ApproxReport& r) {
  Json facets = Json::array();
  for (const auto& f : r.facets) {
    facets.push_back(Json{{"facet", to_json(f.facet)},
                          {"switched", to_json(f.form)},
                          {"covered", f.covered},
                          {"scaled_rhs", to_string(f.scaled_rhs)},
                          {"pass", f.pass}});
  }
  return Json{{"notch", r.notch}, {"eps", to_string(r.eps)}, {"t", r.t}, {"all_pass", r.all_pass}, {"facets", facets}};
}

inline Json to_json(const OracleResult& r) {
  return Json{{"point", r.point.str()}, {"cost", to_string(r.cost)}, {"calls", r.calls}};
}

/// Pretty-printed with a trailing newline; keys sorted.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cgrank
