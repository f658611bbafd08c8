// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "prismforge/algebra/parser.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/tower.hpp"

namespace prismforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string order = "grevlex";
  std::optional<std::size_t> max_pairs;
  unsigned max_degree = 64;
  std::string file;
  std::string poly;
  std::string matrix;
  std::string kind = "p";
  std::vector<std::string> ambient;
  std::uint64_t prime = 2;
  unsigned max_iter = 8;
  unsigned levels = 3;
  bool fractional = false, tilt = false, pillars = false, axioms = false, force = false;
};

std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json verdict_json(const Verdict& v) {
  return Json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}, {"witness", v.witness}, {"method", v.method}};
}

Json root_json(const RootClosureCertificate& rc) {
  Json levels = Json::array();
  for (const auto& l : rc.per_level) {
    levels.push_back(Json{{"level", l.level}, {"injective", l.injective},
                          {"witness", l.witness ? l.witness->to_string() : ""}});
  }
  return Json{{"verdict", rc.verdict_string()}, {"levels_checked", rc.levels_checked}, {"per_level", levels}};
}

Json hypotheses_json(const HypothesisCertificate& c) {
  Json v = Json::array();
  for (const auto& x : c.verdicts()) v.push_back(verdict_json(x));
  Json j{{"overall", c.overall}, {"verdicts", v}};
  if (c.root_closed) j["root_closure"] = root_json(*c.root_closed);
  j["notes"] = c.notes;
  return j;
}

void render_text(const Json& j, std::ostream& out, int indent);

void render_scalar(const Json& j, std::ostream& out) {
  if (j.is_string()) {
    out << j.get<std::string>();
  } else {
    out << j.dump();
  }
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << k << ": ";
        if (v.is_structured()) {
          out << (v.is_array() ? "[]" : "{}");
        } else {
          render_scalar(v, out);
        }
        out << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else if (v.is_array()) {
        out << pad << "- " << v.dump() << "\n";
      } else {
        out << pad << "- ";
        render_scalar(v, out);
        out << "\n";
      }
    }
  } else {
    out << pad;
    render_scalar(j, out);
    out << "\n";
  }
}

struct Context {
  Options opt;
  Limits limits;
  Json report;
  int code = 0;
};

void cmd_delta(Context& c) {
  SpecFile spec = load_spec(c.opt.file);
  RingPtr ring = spec_ring(spec);
  FrobeniusLift lift = spec_lift(spec, ring);
  validate_frobenius_lift(lift, ring);
  Polynomial f = parse_poly(c.opt.poly, ring);
  c.report["ring"] = ring->describe();
  c.report["f"] = f.to_string();
  c.report["delta"] = delta_of(f, lift).to_string();
  c.report["phi"] = lift.apply(f).to_string();
}

void cmd_stabilize(Context& c) {
  SpecFile spec = load_spec(c.opt.file);
  RingPtr ring = spec_ring(spec);
  FrobeniusLift lift = spec_lift(spec, ring);
  Ideal J = spec_ideal(spec, ring);
  auto res = delta_stabilize(J, lift, c.opt.max_iter, c.limits);
  c.report["ring"] = ring->describe();
  c.report["input"] = strings(J.generators());
  c.report["generators"] = strings(res.generators());
  c.report["delta_height"] = res.delta_height;
  Json trace = Json::array();
  for (const auto& s : res.trace) {
    trace.push_back(Json{{"iteration", s.iteration}, {"element", s.element}, {"member", s.member},
                         {"tier", to_string(s.tier)}, {"denominator", s.denominator.get_str()}});
  }
  c.report["trace"] = trace;
  auto G = res.ideal.basis(parse_order(c.opt.order), c.limits);
  c.report["basis"] = Json{{"order", G->order.name()}, {"elements", strings(G->elements)}};
}

void cmd_check_prism(Context& c) {
  PrismSpec spec = spec_prism(load_spec(c.opt.file));
  auto cert = theorem_hypotheses(spec, c.opt.levels, c.limits);
  c.report["ring"] = spec.ring->describe();
  c.report["relations"] = strings(spec.J.generators());
  c.report["orientation"] = spec.d.to_string();
  c.report["flavor"] = to_string(spec.flavor);
  c.report["hypotheses"] = hypotheses_json(cert);
  if (!cert.overall) c.code = 1;
}

void cmd_tower(Context& c) {
  PrismSpec spec = spec_prism(load_spec(c.opt.file));
  const unsigned k = c.opt.levels;
  if (c.opt.force) {
    auto cert = theorem_hypotheses(spec, k, c.limits);
    c.report["hypotheses"] = hypotheses_json(cert);
  }
  auto levels = build_tower(spec, k, c.opt.force, c.limits);
  Json lv = Json::array();
  for (const auto& l : levels) {
    Json j{{"index", l.index}, {"relations", strings(l.relations.generators())}, {"transition", l.transition},
           {"presentation", l.header}};
    if (c.opt.fractional) j["fractional"] = fractional_presentation(l, spec.lift).header;
    lv.push_back(j);
  }
  c.report["levels"] = lv;
  if (c.opt.tilt) {
    auto t = tilt(spec);
    c.report["tilt"] = Json{{"presentation", t.to_string()},
                            {"relations", strings(t.relations.generators())},
                            {"completion", t.completion ? t.completion->to_string() : ""},
                            {"transition", t.transition}};
  }
  if (c.opt.pillars) {
    auto p = pillars(spec, k, c.limits);
    Json pl = Json::array();
    for (const auto& l : p.levels) {
      pl.push_back(Json{{"level", l.level}, {"generator", l.generator.to_string()},
                        {"modulo", strings(l.modulo.generators())}});
    }
    c.report["pillars"] = Json{{"levels", pl},
                               {"unit_numerator", p.unit_numerator.to_string()},
                               {"unit_denominator", p.unit_denominator.to_string()},
                               {"denominator_residue", p.denominator_residue.get_str()},
                               {"identity_verified", p.identity_verified},
                               {"congruence_verified", p.congruence_verified}};
  }
  if (c.opt.axioms) {
    auto a = axiom_certificate(spec, k, 1, c.limits);
    Json v = Json::array();
    for (const auto& x : a.verdicts) {
      Json j{{"axiom", std::string(1, x.axiom)}, {"pass", x.pass}, {"method", to_string(x.method)},
             {"detail", x.detail}, {"witness", x.witness}};
      if (x.level) j["level"] = *x.level;
      v.push_back(j);
    }
    c.report["axioms"] = Json{{"all_pass", a.all_pass()}, {"verdicts", v}, {"notes", a.notes}};
    if (!a.all_pass()) c.code = 1;
  }
}

void cmd_toric(Context& c) {
  auto sg = make_semigroup(parse_matrix(c.opt.matrix), c.opt.ambient);
  auto t = toric_ideal(sg, c.opt.prime, c.limits);
  RingPtr amb = t.parametrization.begin()->second.ring();
  bool vanish = true;
  for (const auto& g : t.ideal.generators()) vanish = vanish && substitute(g, t.parametrization, amb).is_zero();
  auto sr = simplicial_rank(sg);
  auto gd = generic_degree_monomial(sg, c.opt.prime);
  c.report["ring"] = t.ring->describe();
  c.report["ideal"] = strings(t.ideal.generators());
  Json param = Json::object();
  for (const auto& [u, img] : t.parametrization) param[u] = img.to_string();
  c.report["parametrization"] = param;
  c.report["generators_vanish"] = vanish;
  c.report["delta_stable"] = is_delta_stable(t.ideal, t.lift, c.limits);
  c.report["rank"] = sr.rank;
  c.report["simplicial"] = sr.simplicial;
  c.report["generic_degree"] = gd.degree.get_str();
  c.report["transition_degree"] = gd.transition.get_str();
}

void cmd_roots(Context& c) {
  SpecFile spec = load_spec(c.opt.file);
  RingPtr ring = spec_ring(spec);
  std::optional<SemigroupSpec> sg;
  if (spec.semigroup) sg = make_semigroup(*spec.semigroup, spec.vars);
  RootsKind kind;
  if (c.opt.kind == "p") {
    kind = RootsKind::RootsOfP;
  } else if (c.opt.kind == "unity") {
    kind = RootsKind::RootsOfUnity;
  } else {
    throw InputError("--kind must be p or unity");
  }
  auto tower = adjoin_roots_tower(ring, spec_ideal(spec, ring), spec_lift(spec, ring), kind, c.opt.levels, sg,
                                  c.limits);
  Json lv = Json::array();
  for (const auto& l : tower.levels) {
    lv.push_back(Json{{"index", l.index}, {"presentation", l.header},
                      {"relations", strings(l.relations.generators())}, {"transition", l.transition}});
  }
  c.report["levels"] = lv;
  c.report["tilt"] = Json{{"presentation", tower.tilt.to_string()},
                          {"relations", strings(tower.tilt.relations.generators())},
                          {"extra_variable", tower.tilt.extra_variable.value_or("")},
                          {"transition", tower.tilt.transition}};
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return 2;
    case ErrorKind::Hypothesis:
      return 1;
    case ErrorKind::Resource:
    case ErrorKind::Inconclusive:
      return 3;
  }
  return 2;
}

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return "input";
    case ErrorKind::Hypothesis:
      return "hypothesis";
    case ErrorKind::Resource:
      return "resource";
    case ErrorKind::Inconclusive:
      return "inconclusive";
  }
  return "input";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context c;
  CLI::App app{"exact delta-ring, prism and perfectoid-tower computations", "prismforge"};
  app.require_subcommand(1);
  app.add_option("--format", c.opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", c.opt.order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--max-pairs", c.opt.max_pairs, "pair cap per basis computation");
  app.add_option("--max-degree", c.opt.max_degree, "degree cap per basis computation");

  auto* delta = app.add_subcommand("delta", "delta(f) and phi(f)");
  delta->add_option("file", c.opt.file)->required();
  delta->add_option("--poly", c.opt.poly)->required();

  auto* stab = app.add_subcommand("stabilize", "delta-stabilization of the spec ideal");
  stab->add_option("file", c.opt.file)->required();
  stab->add_option("--max-iter", c.opt.max_iter);

  auto* check = app.add_subcommand("check-prism", "hypotheses of the tower theorem");
  check->add_option("file", c.opt.file)->required();
  check->add_option("--levels", c.opt.levels);

  auto* tower = app.add_subcommand("tower", "tower levels and reports");
  tower->add_option("file", c.opt.file)->required();
  tower->add_option("--levels", c.opt.levels);
  tower->add_flag("--fractional", c.opt.fractional);
  tower->add_flag("--tilt", c.opt.tilt);
  tower->add_flag("--pillars", c.opt.pillars);
  tower->add_flag("--axioms", c.opt.axioms);
  tower->add_flag("--force", c.opt.force);

  auto* toric = app.add_subcommand("toric", "toric ideal of an affine semigroup");
  toric->add_option("--matrix", c.opt.matrix)->required();
  toric->add_option("--prime", c.opt.prime);
  toric->add_option("--ambient", c.opt.ambient, "names of the ambient variables");

  auto* roots = app.add_subcommand("roots", "roots-of-p or roots-of-unity tower");
  roots->add_option("file", c.opt.file)->required();
  roots->add_option("--kind", c.opt.kind)->check(CLI::IsMember({"p", "unity"}));
  roots->add_option("--levels", c.opt.levels);

  std::vector<std::string> argv_store{"prismforge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  c.limits.stats = std::make_shared<Stats>();
  c.limits.max_degree = c.opt.max_degree;
  if (const char* env = std::getenv("PRISMFORGE_MAX_PAIRS")) {
    try {
      c.limits.max_pairs = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: PRISMFORGE_MAX_PAIRS is not a number\n";
      return 2;
    }
  }
  if (c.opt.max_pairs) c.limits.max_pairs = *c.opt.max_pairs;

  auto* sub = app.get_subcommands().front();
  c.report["command"] = sub->get_name();
  std::string input;
  for (const auto& a : args) input += a + '\0';
  try {
    if (!c.opt.file.empty()) input += read_file(c.opt.file);
    c.report["input_digest"] = digest(input);
    if (sub == delta) {
      cmd_delta(c);
    } else if (sub == stab) {
      cmd_stabilize(c);
    } else if (sub == check) {
      cmd_check_prism(c);
    } else if (sub == tower) {
      cmd_tower(c);
    } else if (sub == toric) {
      cmd_toric(c);
    } else {
      cmd_roots(c);
    }
  } catch (const Error& e) {
    c.code = exit_code(e.kind());
    Json ej{{"kind", kind_name(e.kind())}, {"message", e.what()}};
    if (const auto* h = dynamic_cast<const HypothesisFailed*>(&e)) {
      ej["component"] = h->component();
      ej["witness"] = h->witness();
    }
    c.report["error"] = ej;
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    c.code = 2;
    c.report["error"] = Json{{"kind", "input"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  c.report["resources"] = Json{{"pairs", c.limits.stats->pairs.load()}, {"bases", c.limits.stats->bases.load()}};
  c.report["exit_code"] = c.code;
  if (c.opt.format == "json") {
    out << c.report.dump(2) << "\n";
  } else {
    render_text(c.report, out, 0);
  }
  return c.code;
}

}  // namespace prismforge::cli
