// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "prismforge/algebra/parser.hpp"
#include "prismforge/charp.hpp"
#include "prismforge/cli.hpp"
#include "prismforge/delta.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/prism.hpp"
#include "prismforge/tower.hpp"

namespace py = pybind11;
using namespace prismforge;

namespace {

// Polynomials cross the boundary as strings in the parser grammar.
RingPtr zz(const std::vector<std::string>& vars, std::uint64_t p) {
  return RingContext::make(vars, CoefficientDomain::integers(), p);
}

Ideal parse_ideal(const std::vector<std::string>& gens, const RingPtr& r) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, g);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}


py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["name"] = v.name;
  d["pass"] = v.pass;
  d["detail"] = v.detail;
  d["witness"] = v.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Delta-rings, prisms and perfectoid towers over polynomial presentations.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<HypothesisFailed>(m, "HypothesisFailed", base.ptr());
  py::register_exception<ResourceExceeded>(m, "ResourceExceeded", base.ptr());
  py::register_exception<NotStabilized>(m, "NotStabilized", base.ptr());
  py::register_exception<Inconclusive>(m, "Inconclusive", base.ptr());

  m.def(
      "delta",
      [](const std::string& f, const std::vector<std::string>& vars, std::uint64_t p) {
        auto r = zz(vars, p);
        return delta_of(parse_poly(f, r), FrobeniusLift::monomial(p)).to_string();
      },
      py::arg("f"), py::arg("vars"), py::arg("p"), "delta(f) for the monomial lift.");

  m.def(
      "stabilize",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& vars, std::uint64_t p,
         unsigned max_iter) {
        auto r = zz(vars, p);
        auto st = delta_stabilize(parse_ideal(gens, r), FrobeniusLift::monomial(p), max_iter);
        return py::make_tuple(strings(st.generators()), st.delta_height);
      },
      py::arg("generators"), py::arg("vars"), py::arg("p"), py::arg("max_iter") = 8,
      "Delta-stabilization; returns (generators, delta_height).");

  m.def("fermat_sum", [](std::uint64_t p, const std::vector<unsigned>& n) { return fermat_sum(p, n).to_string(); },
        py::arg("p"), py::arg("n"));
  m.def(
      "beta_poly",
      [](std::uint64_t p, const std::vector<unsigned>& n) {
        return beta_poly(p, static_cast<unsigned>(n.size()) + 1, n).to_string();
      },
      py::arg("p"), py::arg("n"), "beta for exponents (n2, ..., nm) in X1..Xm.");

  m.def(
      "is_reduced",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& vars, std::uint64_t p) {
        auto r = RingContext::make(vars, CoefficientDomain::prime_field(p));
        return is_reduced(parse_ideal(gens, r));
      },
      py::arg("generators"), py::arg("vars"), py::arg("p"), "Whether GF(p)[vars]/I is reduced.");

  m.def(
      "check_prism",
      [](const std::string& path, unsigned levels) {
        auto c = theorem_hypotheses(cli::spec_prism(cli::load_spec(path)), levels);
        py::list vs;
        for (const auto& v : c.verdicts()) vs.append(verdict_dict(v));
        py::dict d;
        d["overall"] = c.overall;
        d["verdicts"] = vs;
        return d;
      },
      py::arg("spec"), py::arg("levels") = 3, "Hypothesis certificate for a spec file.");

  m.def(
      "tower",
      [](const std::string& path, unsigned levels) {
        std::vector<std::vector<std::string>> out;
        for (const auto& l : build_tower(cli::spec_prism(cli::load_spec(path)), levels))
          out.push_back(strings(l.relations.generators()));
        return out;
      },
      py::arg("spec"), py::arg("levels") = 3, "Relations of each tower level.");

  m.def(
      "toric_ideal",
      [](const std::vector<std::vector<long>>& gens, std::uint64_t p) {
        return strings(toric_ideal(make_semigroup(gens), p).ideal.generators());
      },
      py::arg("generators"), py::arg("p"));
  m.def(
      "simplicial_rank",
      [](const std::vector<std::vector<long>>& gens) {
        auto s = simplicial_rank(make_semigroup(gens));
        return py::make_tuple(s.rank, s.simplicial);
      },
      py::arg("generators"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int rc;
        {
          py::gil_scoped_release release;
          rc = cli::run(args, out, err);
        }
        return py::make_tuple(rc, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
