// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/tower.hpp"

#include <algorithm>
#include <random>

#include "prismforge/errors.hpp"

namespace prismforge {

namespace {

std::string pow_str(std::uint64_t p, unsigned i) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, i);
  return q.get_str();
}

long long ipow(std::uint64_t p, unsigned i) {
  long long q = 1;
  for (unsigned k = 0; k < i; ++k) q *= static_cast<long long>(p);
  return q;
}

std::string join(const std::vector<Polynomial>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ", ") + g.to_string();
  return s;
}

std::string variables_at(const RingContext& ring, unsigned level) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (i) s += ", ";
    s += ring.variables()[i];
    if (level > 0) s += "^{1/" + pow_str(ring.prime(), level) + "}";
  }
  return s;
}

std::string header_of(const std::string& base, const Ideal& I, unsigned level) {
  std::string s = base;
  if (I.ring()->nvars() > 0) s += "[" + variables_at(*I.ring(), level) + "]";
  if (!I.is_zero()) s += "/(" + join(I.generators()) + ")";
  return s;
}

std::string local_base(const RingContext& ring) { return "ZZ_(" + std::to_string(ring.prime()) + ")"; }

Polynomial p_constant(const RingPtr& ring) {
  return Polynomial::constant(ring, mpz_class(static_cast<unsigned long>(ring->prime())));
}

}  // namespace

std::vector<TowerLevel> build_tower(const PrismSpec& spec, unsigned k, bool force, const Limits& limits) {
  if (!force) {
    auto cert = theorem_hypotheses(spec, k, limits);
    if (auto bad = cert.first_failure()) throw HypothesisFailed(bad->name, bad->detail, bad->witness);
  }
  std::vector<TowerLevel> out;
  Polynomial di = spec.d;
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0) di = spec.lift.apply(di);
    Ideal rel = spec.J.plus({di});
    std::string tr = i == 0 ? "base" : "phi: level " + std::to_string(i - 1) + " -> level " + std::to_string(i);
    out.push_back(TowerLevel{i, rel, 0, std::move(tr), header_of(local_base(*spec.ring), rel, 0)});
  }
  return out;
}

TowerLevel fractional_presentation(const TowerLevel& level, const FrobeniusLift& lift) {
  if (!lift.is_monomial()) throw UnsupportedError("fractional presentation needs the monomial lift");
  const unsigned i = level.index;
  RingPtr ring = level.relations.ring()->with_level(i);
  std::vector<Polynomial> gens;
  for (const auto& g : level.relations.generators()) gens.push_back(fractional_relabel(g, static_cast<int>(i)));
  Ideal rel(ring, std::move(gens));
  TowerLevel out{i, rel, i, level.transition, ""};
  out.header = header_of(local_base(*ring), rel, i);
  return out;
}

ProjectionKernel projection_kernel(const PrismSpec& spec, unsigned i, const Limits&) {
  const std::uint64_t p = spec.prime();
  Ideal Jb = reduce_ideal(spec.J, p);
  Polynomial db = reduce_mod(spec.d, CoefficientDomain::prime_field(p));
  Polynomial lower = db.pow(ipow(p, i));
  Polynomial upper = lower.pow(static_cast<long long>(p));
  return ProjectionKernel{i, Jb.plus({upper}), Ideal(Jb.ring(), {lower})};
}

PillarReport pillars(const PrismSpec& spec, unsigned k, const Limits& limits) {
  const std::uint64_t p = spec.prime();
  Polynomial dd = delta_of(spec.d, spec.lift);
  PillarReport rep{{}, -dd, spec.lift.apply(dd), 0, false, false};
  rep.denominator_residue = local_residue(rep.unit_denominator, spec);
  if (rep.denominator_residue == 0) {
    throw HypothesisFailed("pillars", "phi(delta(d)) is not a local unit", rep.unit_denominator.to_string());
  }
  Polynomial di = spec.d;
  for (unsigned i = 1; i <= k; ++i) {
    di = spec.lift.apply(di);
    rep.levels.push_back(PillarLevel{i, spec.d, spec.J.plus({di})});
  }
  Polynomial lhs = spec.d.pow(static_cast<long long>(p)) + p_constant(spec.ring) * dd;
  Polynomial phid = spec.lift.apply(spec.d);
  rep.identity_verified = (lhs - phid).is_zero();
  rep.congruence_verified = membership(lhs, spec.J.plus({phid}), MembershipMode::ZpLocal, limits).member;
  return rep;
}

std::string TiltReport::to_string() const {
  std::string s;
  if (display) {
    s = *display;
  } else {
    s = ring->nvars() == 0 ? ring->domain().name() : ring->describe();
    if (!relations.is_zero()) s += "/(" + join(relations.generators()) + ")";
  }
  if (completion) s += " completed at (" + completion->to_string() + ")";
  if (extra_variable) s += "[|" + *extra_variable + "|]";
  return s + ", transitions " + transition;
}

TiltReport tilt(const PrismSpec& spec) {
  const std::uint64_t p = spec.prime();
  Ideal Jb = reduce_ideal(spec.J, p);
  std::optional<Polynomial> comp;
  if (spec.flavor == PrismFlavor::Zariskian) {
    Polynomial db = reduce_mod(spec.d, CoefficientDomain::prime_field(p));
    if (!db.is_zero()) db = db.scaled(1 / db.leading_term(MonomialOrder::grevlex()).coeff);
    comp = db;
  }
  return TiltReport{Jb.ring(), Jb, comp, "F", std::nullopt, std::nullopt};
}

RootsTower adjoin_roots_tower(const RingPtr& ring, const Ideal& J, const FrobeniusLift& lift, RootsKind kind,
                              unsigned k, const std::optional<SemigroupSpec>& semigroup, const Limits& limits) {
  if (ring->domain().kind() != DomainKind::IntegerZ || ring->prime() == 0) {
    throw InputError("roots towers start from ZZ with a prime, got " + ring->describe());
  }
  require_same_ring(ring, J.ring(), "adjoin_roots_tower");
  validate_frobenius_lift(lift, ring);
  const std::uint64_t p = ring->prime();
  const std::string extra = kind == RootsKind::RootsOfP ? "T" : "q";
  if (ring->index_of(extra)) throw InputError("variable " + extra + " is reserved for the roots tower");

  if (!is_delta_stable(J, lift, limits)) throw HypothesisFailed("delta_stable", "J is not delta-stable", J.to_string());
  if (!J.is_zero()) {
    Ideal K = colon(J, p_constant(ring), limits);
    for (const auto& g : K.generators())
      if (!membership(g, J, MembershipMode::ZpLocal, limits).member)
        throw HypothesisFailed("p_torsion_free", "p kills a nonzero class modulo J", g.to_string());
  }
  Ideal Jb = reduce_ideal(J, p);
  if (auto r = pth_power_injective(Jb, Jb, limits); !r.injective) {
    throw HypothesisFailed("reduced_mod_p", "J mod p is not reduced", r.witness->to_string());
  }

  std::optional<ToricPresentation> toric;
  if (semigroup) toric = toric_ideal(*semigroup, p, limits);

  std::vector<std::string> names = ring->variables();
  names.push_back(extra);
  RingPtr big = ring->with_variables(names);
  const std::string zp = "Z_" + std::to_string(p);

  RootsTower out{{}, TiltReport{Jb.ring(), Jb, std::nullopt, "F", "T", std::nullopt}};
  if (toric) {
    std::string h;
    for (const auto& [u, img] : toric->parametrization) h += (h.empty() ? "" : ", ") + img.to_string();
    out.tilt.display = "GF(" + std::to_string(p) + ")[|" + h + "|]";
  }
  for (unsigned i = 0; i <= k; ++i) {
    const long long q = ipow(p, i);
    Polynomial t = Polynomial::variable(big, extra);
    Polynomial rel(big);
    std::string base = zp;
    if (kind == RootsKind::RootsOfP) {
      rel = p_constant(big) - t.pow(q);
      if (i > 0) base += "[" + std::to_string(p) + "^{1/" + std::to_string(q) + "}]";
    } else {
      for (std::uint64_t j = 0; j < p; ++j) rel = rel + t.pow(static_cast<long long>(j) * q);
      base += "[zeta_" + pow_str(p, i + 1) + "]";
    }
    std::vector<Polynomial> gens;
    for (const auto& g : J.generators()) gens.push_back(embed(g, big));
    gens.push_back(rel);

    std::string header;
    if (toric) {
      std::string h;
      for (const auto& [u, img] : toric->parametrization) {
        h += (h.empty() ? "" : ", ") + fractional_relabel(img, static_cast<int>(i)).to_string();
      }
      header = base + "[|" + h + "|]";
    } else {
      std::vector<Polynomial> rj;
      for (const auto& g : J.generators()) rj.push_back(fractional_relabel(g, static_cast<int>(i)));
      header = header_of(base, Ideal(ring->with_level(i), rj), i);
    }
    std::string tr = i == 0 ? "base" : "level " + std::to_string(i - 1) + " -> level " + std::to_string(i);
    out.levels.push_back(TowerLevel{i, Ideal(big, std::move(gens)), i, std::move(tr), std::move(header)});
  }
  return out;
}

std::string to_string(AxiomMethod m) {
  switch (m) {
    case AxiomMethod::ProvedByConstruction:
      return "proved-by-construction";
    case AxiomMethod::Checked:
      return "checked";
    case AxiomMethod::OutOfScope:
      return "out-of-desk-scope";
  }
  return {};
}

bool AxiomCertificate::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.pass; });
}

bool AxiomCertificate::axiom_passes(char axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom && !v.pass) return false;
  return true;
}

namespace {

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned max_deg) {
  const std::uint64_t p = ring->domain().prime();
  std::uniform_int_distribution<unsigned> nterms(1, 4), coeff(1, static_cast<unsigned>(p - 1)), deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() == 0 ? 0 : ring->nvars() - 1);
  std::vector<Term> terms;
  for (unsigned t = nterms(rng); t > 0; --t) {
    Monomial m(ring->nvars());
    if (ring->nvars() > 0)
      for (unsigned e = deg(rng); e > 0; --e) m = m * Monomial::variable(ring->nvars(), var(rng));
    terms.push_back({m, mpq_class(coeff(rng))});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

AxiomCertificate axiom_certificate(const PrismSpec& spec, unsigned k, std::uint64_t seed, const Limits& limits) {
  constexpr unsigned kSamples = 32;
  const std::uint64_t p = spec.prime();
  const auto P = static_cast<long long>(p);
  AxiomCertificate cert;
  cert.levels = k;
  Ideal Jb = reduce_ideal(spec.J, p);
  Polynomial db = reduce_mod(spec.d, CoefficientDomain::prime_field(p));
  std::vector<Polynomial> dpow{db};
  for (unsigned i = 0; i <= k; ++i) dpow.push_back(dpow.back().pow(P));

  cert.verdicts.push_back({'a', true, AxiomMethod::ProvedByConstruction, "levels are quotients of A by phi^i(d) with phi-induced maps", std::nullopt, ""});

  for (unsigned i = 0; i <= k; ++i) {
    AxiomVerdict v{'b', true, AxiomMethod::Checked, "p-th power injective", i, ""};
    try {
      auto r = pth_power_injective(Jb.plus({dpow[i]}), Jb.plus({dpow[i + 1]}), limits);
      v.pass = r.injective;
      if (!r.injective) {
        v.detail = "p-th power map not injective";
        v.witness = r.witness->to_string();
      }
    } catch (const InputError& e) {
      v.pass = false;
      v.detail = e.what();
    }
    cert.verdicts.push_back(std::move(v));
  }

  {
    std::mt19937_64 rng(seed);
    AxiomVerdict v{'c', true, AxiomMethod::ProvedByConstruction,
                   "Frobenius factors through the projection; " + std::to_string(kSamples) + " random samples agree",
                   std::nullopt, ""};
    for (unsigned s = 0; s < kSamples && v.pass; ++s) {
      const unsigned i = s % (k + 1);
      Polynomial x = random_poly(Jb.ring(), rng, 4);
      Polynomial r = random_poly(Jb.ring(), rng, 4);
      Polynomial diff = (x + dpow[i] * r).pow(P) - x.pow(P);
      if (!membership(diff, Jb.plus({dpow[i + 1]}), MembershipMode::Fp, limits).member) {
        v.pass = false;
        v.level = i;
        v.detail = "spot-check failed";
        v.witness = x.to_string();
      }
    }
    cert.verdicts.push_back(std::move(v));
  }

  cert.verdicts.push_back({'d', true, AxiomMethod::ProvedByConstruction, "projections are quotient maps", std::nullopt, ""});
  cert.verdicts.push_back({'e', true, AxiomMethod::ProvedByConstruction,
                           to_string(spec.flavor) + " prism, local at (p, variables)", std::nullopt, ""});

  for (unsigned i = 0; i <= k; ++i) {
    auto ker = projection_kernel(spec, i, limits);
    Ideal lhs = ker.ambient.plus(ker.kernel.generators());
    Ideal rhs = ker.ambient.plus({db.pow(ipow(p, i))});
    AxiomVerdict v{'f', ideal_equal(lhs, rhs, MembershipMode::Fp, limits), AxiomMethod::Checked,
                   "kernel generated by the pillar power", i, ""};
    if (!v.pass) v.witness = ker.kernel.to_string();
    cert.verdicts.push_back(std::move(v));
  }

  auto tf = transversal_check(spec, limits).first;
  cert.verdicts.push_back({'g', tf.pass, AxiomMethod::Checked, "p-torsion-free: " + tf.method, std::nullopt, tf.witness});

  if (!cert.axiom_passes('b')) cert.notes.push_back("purely-inseparable-only: axiom (b) fails");
  return cert;
}

}  // namespace prismforge
