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

// mnmf solve FILE [--json] [--no-certify] [--trace]
// mnmf oracle FILE
// mnmf check FILE SOLUTION
//
// Exit codes: 0 ok, 1 parse error, 2 certificate failure or internal
// error, 3 guard violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mnmf/oracle.h"
#include "mnmf/report.h"
#include "mnmf/solver.h"

namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kCertificate = 2;
constexpr int kGuard = 3;

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mnmf::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int RunSolve(const std::string& file, bool json, bool no_certify, bool trace) {
  const mnmf::Instance inst = mnmf::ReadInstanceFile(file);
  mnmf::SolveOptions opts;
  opts.certify = !no_certify;
  const mnmf::SolveResult r = mnmf::Solve(inst, opts);
  std::cout << (json ? mnmf::FormatJson(r, trace) : mnmf::FormatText(r, trace));
  if (r.certified && !r.certificate.ok()) {
    for (const std::string& v : r.certificate.violations)
      std::cerr << "certificate: " << v << "\n";
    return kCertificate;
  }
  return kOk;
}

int RunOracle(const std::string& file) {
  const mnmf::Instance inst = mnmf::ReadInstanceFile(file);
  const mnmf::OracleResult r = mnmf::BruteSolve(inst, mnmf::OracleM(inst));
  std::cout << "value " << r.value2 << "/2 cost " << r.cost2 << "/2\n";
  return kOk;
}

int RunCheck(const std::string& file, const std::string& solution) {
  const mnmf::Instance inst = mnmf::ReadInstanceFile(file);
  const mnmf::StoredSolution sol = mnmf::ParseSolution(inst, ReadAll(solution));
  const std::vector<std::string> bad = mnmf::CheckSolution(inst, sol);
  if (bad.empty()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const std::string& v : bad) std::cout << "violation: " << v << "\n";
  return kCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost node-capacitated free multiflow solver"};
  app.require_subcommand(1);

  std::string file, solution;
  bool json = false, no_certify = false, trace = false;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_flag("--json", json, "Emit a JSON report");
  solve->add_flag("--no-certify", no_certify, "Skip certificate checks");
  solve->add_flag("--trace", trace, "Emit 2h after every descent step");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference solve");
  oracle->add_option("file", file, "Instance file")->required();

  CLI::App* check = app.add_subcommand("check", "Verify a stored solution");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("solution", solution, "Solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*solve) return RunSolve(file, json, no_certify, trace);
    if (*oracle) return RunOracle(file);
    if (*check) return RunCheck(file, solution);
  } catch (const mnmf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const mnmf::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const mnmf::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertificate;
  }
  return kOk;
}
