// Copyright 2026 The mnmf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mnmf/report.h"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace mnmf {

std::string FormatText(const SolveResult& r, bool trace) {
  const Certificate& c = r.certificate;
  std::ostringstream out;
  out << "value " << c.value2 << "/2\n";
  out << "cost " << c.cost2_original << "/2\n";
  out << "h " << c.dual2h << "/2\n";
  out << "gap " << c.gap << "\n";
  for (const FlowPath& p : r.flow.paths) {
    out << "path " << p.lambda2;
    for (int v : p.vertices) out << ' ' << v + 1;
    out << '\n';
  }
  for (size_t i = 0; i < r.potential.size(); ++i) {
    const GridPoint& u = r.potential[i];
    out << "dual " << i + 1 << ' ' << u.x.branch << ' ' << u.x.radius2 << ' '
        << u.y2 << '\n';
  }
  if (trace) {
    for (const PhaseStats& ph : r.phases) {
      out << "trace " << ph.t;
      for (Int h : ph.h2_trace) out << ' ' << h;
      out << '\n';
    }
  }
  return out.str();
}

std::string FormatJson(const SolveResult& r, bool trace) {
  using nlohmann::json;
  const Certificate& c = r.certificate;
  json j;
  j["value2"] = c.value2;
  j["cost2"] = c.cost2_original;
  j["cost2_perturbed"] = c.cost2_perturbed;
  j["dual2h"] = c.dual2h;
  j["gap"] = c.gap;
  j["M"] = r.M;
  j["certified"] = r.certified;
  j["violations"] = c.violations;
  json paths = json::array();
  for (const FlowPath& p : r.flow.paths) {
    std::vector<int> v;
    for (int u : p.vertices) v.push_back(u + 1);
    paths.push_back({{"lambda2", p.lambda2}, {"vertices", v}});
  }
  j["paths"] = paths;
  json dual = json::array();
  for (size_t i = 0; i < r.potential.size(); ++i) {
    const GridPoint& u = r.potential[i];
    dual.push_back({{"node", i + 1},
                    {"branch", u.x.branch},
                    {"radius2", u.x.radius2},
                    {"y2", u.y2}});
  }
  j["dual"] = dual;
  if (trace) {
    json phases = json::array();
    for (const PhaseStats& ph : r.phases)
      phases.push_back({{"t", ph.t},
                        {"M", ph.M},
                        {"descents", ph.descents},
                        {"repaired", ph.repaired},
                        {"h2", ph.h2_trace}});
    j["phases"] = phases;
  }
  return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void Bad(int line, const std::string& what) {
  throw ParseError("solution line " + std::to_string(line) + ": " + what);
}

Int ToInt(std::string_view s, int line) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    Bad(line, "bad integer '" + std::string(s) + "'");
  return v;
}

Int Halves(std::string_view s, int line) {
  if (s.size() < 3 || s.substr(s.size() - 2) != "/2")
    Bad(line, "expected <int>/2");
  return ToInt(s.substr(0, s.size() - 2), line);
}

}  // namespace

StoredSolution ParseSolution(const Instance& inst, std::string_view text) {
  StoredSolution sol;
  sol.potential.assign(inst.n(), GridPoint{});
  std::vector<char> have_dual(inst.n(), 0);
  int seen_header = 0;
  std::vector<FlowPath> paths;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "trace") continue;
    const std::string& kw = tok[0];
    if (kw == "value" || kw == "cost" || kw == "h" || kw == "gap") {
      if (tok.size() != 2) Bad(line, "expected one field");
      if (kw == "value") sol.value2 = Halves(tok[1], line);
      if (kw == "cost") sol.cost2 = Halves(tok[1], line);
      if (kw == "h") sol.dual2h = Halves(tok[1], line);
      if (kw == "gap") sol.gap = ToInt(tok[1], line);
      ++seen_header;
    } else if (kw == "path") {
      if (tok.size() < 4) Bad(line, "path needs lambda2 and two vertices");
      FlowPath p;
      p.lambda2 = ToInt(tok[1], line);
      for (size_t t = 2; t < tok.size(); ++t) {
        const Int v = ToInt(tok[t], line);
        if (v < 1 || v > inst.n()) Bad(line, "vertex out of range");
        p.vertices.push_back(static_cast<int>(v - 1));
      }
      paths.push_back(std::move(p));
    } else if (kw == "dual") {
      if (tok.size() != 5) Bad(line, "expected 'dual i branch radius2 y2'");
      const Int i = ToInt(tok[1], line);
      const Int b = ToInt(tok[2], line);
      const Int r2 = ToInt(tok[3], line);
      const Int y2 = ToInt(tok[4], line);
      if (i < 1 || i > inst.n()) Bad(line, "node out of range");
      if (b < 0 || b > inst.k() || r2 < 0 || (b == 0) != (r2 == 0))
        Bad(line, "bad star coordinate");
      if (have_dual[i - 1]) Bad(line, "duplicate dual entry");
      have_dual[i - 1] = 1;
      sol.potential[i - 1] = GridPoint::Make(static_cast<int>(b), r2, y2);
    } else {
      Bad(line, "unknown record '" + kw + "'");
    }
  }
  if (seen_header != 4) throw ParseError("solution lacks value/cost/h/gap");
  for (int i = 0; i < inst.n(); ++i)
    if (!have_dual[i]) throw ParseError("missing dual for node " + std::to_string(i + 1));
  sol.flow.paths = std::move(paths);
  return sol;
}

std::vector<std::string> CheckSolution(const Instance& inst,
                                       const StoredSolution& sol) {
  const PreparedInstance prep(inst);
  std::vector<std::string> out;
  for (const GridPoint& u : sol.potential)
    if (!InGrid(u)) {
      out.push_back("dual point off the grid");
      return out;
    }
  const Certificate c = Certify(prep, sol.potential, sol.flow, true);
  out = c.violations;
  if (!out.empty()) return out;
  if (c.value2 != sol.value2) out.push_back("reported value differs");
  if (c.cost2_original != sol.cost2) out.push_back("reported cost differs");
  if (c.dual2h != sol.dual2h) out.push_back("reported h differs");
  if (c.gap != sol.gap) out.push_back("reported gap differs");
  return out;
}

}  // namespace mnmf
