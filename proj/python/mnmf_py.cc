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

// Python bindings.  Vertex ids are 1-based on the Python side, matching
// instance and solution files.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mnmf/oracle.h"
#include "mnmf/report.h"
#include "mnmf/solver.h"

namespace py = pybind11;

namespace {

mnmf::Instance MakeInstance(int n, int k, const std::vector<py::tuple>& edges,
                            const std::vector<mnmf::Int>& capacity) {
  std::vector<mnmf::Edge> es;
  for (const py::tuple& t : edges) {
    if (t.size() != 3) throw mnmf::ParseError("edge must be (u, v, cost)");
    es.push_back({t[0].cast<int>() - 1, t[1].cast<int>() - 1,
                  t[2].cast<mnmf::Int>()});
  }
  // Terminals carry no capacity; accept either all n entries or only the
  // nonterminal ones.
  std::vector<mnmf::Int> cap = capacity;
  if (static_cast<int>(cap.size()) == n - k) cap.insert(cap.begin(), k, 0);
  return mnmf::Instance(n, k, std::move(es), std::move(cap));
}

py::dict ToDict(const mnmf::SolveResult& r) {
  const mnmf::Certificate& c = r.certificate;
  py::list paths;
  for (const mnmf::FlowPath& p : r.flow.paths) {
    std::vector<int> vs;
    for (int v : p.vertices) vs.push_back(v + 1);
    paths.append(py::make_tuple(p.lambda2, vs));
  }
  py::list dual;
  for (const mnmf::GridPoint& u : r.potential)
    dual.append(py::make_tuple(u.x.branch, u.x.radius2, u.y2));
  py::dict d;
  d["value2"] = c.value2;
  d["cost2"] = c.cost2_original;
  d["dual2h"] = c.dual2h;
  d["gap"] = c.gap;
  d["M"] = r.M;
  d["mu"] = r.mu;
  d["certified"] = r.certified;
  d["ok"] = c.ok();
  d["violations"] = c.violations;
  d["paths"] = paths;
  d["potential"] = dual;
  py::list phases;
  for (const mnmf::PhaseStats& s : r.phases)
    phases.append(py::make_tuple(s.t, s.M, s.descents));
  d["phases"] = phases;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mnmf, m) {
  m.doc() = "Exact minimum-cost node-capacitated free multiflow solver";

  py::register_exception<mnmf::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mnmf::GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<mnmf::InvariantError>(m, "InvariantError",
                                               PyExc_AssertionError);

  py::class_<mnmf::Instance>(m, "Instance")
      .def(py::init(&MakeInstance), py::arg("n"), py::arg("k"),
           py::arg("edges"), py::arg("capacity"))
      .def_property_readonly("n", &mnmf::Instance::n)
      .def_property_readonly("k", &mnmf::Instance::k)
      .def_property_readonly("m", &mnmf::Instance::m)
      .def_property_readonly("edges",
                             [](const mnmf::Instance& inst) {
                               std::vector<py::tuple> out;
                               for (const mnmf::Edge& e : inst.edges())
                                 out.push_back(
                                     py::make_tuple(e.u + 1, e.v + 1, e.cost));
                               return out;
                             })
      .def_property_readonly("capacity", &mnmf::Instance::capacities)
      .def("__str__", &mnmf::FormatInstance)
      .def("__repr__", [](const mnmf::Instance& inst) {
        return "<mnmf.Instance n=" + std::to_string(inst.n()) +
               " m=" + std::to_string(inst.m()) +
               " k=" + std::to_string(inst.k()) + ">";
      });

  m.def("parse", &mnmf::ParseInstance, py::arg("text"),
        "Parse an instance from its text form.");
  m.def("read", &mnmf::ReadInstanceFile, py::arg("path"),
        "Read an instance file.");

  m.def(
      "solve",
      [](const mnmf::Instance& inst, bool certify) {
        mnmf::SolveOptions opts;
        opts.certify = certify;
        mnmf::SolveResult r;
        {
          py::gil_scoped_release release;
          r = mnmf::Solve(inst, opts);
        }
        return ToDict(r);
      },
      py::arg("instance"), py::arg("certify") = true,
      "Solve exactly; all flow quantities are doubled integers.");

  m.def(
      "report",
      [](const mnmf::Instance& inst, bool json, bool trace) {
        const mnmf::SolveResult r = mnmf::Solve(inst);
        return json ? mnmf::FormatJson(r, trace) : mnmf::FormatText(r, trace);
      },
      py::arg("instance"), py::arg("json") = false, py::arg("trace") = false,
      "Solve and return the CLI report.");

  m.def(
      "oracle",
      [](const mnmf::Instance& inst) {
        const mnmf::OracleResult r =
            mnmf::BruteSolve(inst, mnmf::OracleM(inst));
        return py::make_tuple(r.value2, r.cost2);
      },
      py::arg("instance"),
      "Reference (value2, cost2) from exhaustive path enumeration.");

  m.def(
      "check",
      [](const mnmf::Instance& inst, const std::string& solution) {
        return mnmf::CheckSolution(inst, mnmf::ParseSolution(inst, solution));
      },
      py::arg("instance"), py::arg("solution"),
      "Violations found in a stored solution; empty means valid.");
}
