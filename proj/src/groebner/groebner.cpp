// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <mutex>

#include "engine.hpp"
#include "prismforge/errors.hpp"
#include "prismforge/groebner/ideal.hpp"

namespace prismforge {

namespace {

using detail::FpCoeffs;
using detail::Poly;
using detail::QCoeffs;
using detail::ZCoeffs;

template <class R>
Poly<R> to_engine(const R& ring, const Polynomial& f, const MonomialOrder& ord) {
  Poly<R> out;
  for (const auto& t : f.sorted_terms(ord)) {
    auto c = ring.from(t.coeff);
    if (ring.is_zero(c)) continue;
    out.m.push_back(t.mono);
    out.c.push_back(std::move(c));
  }
  return out;
}

template <class R>
Polynomial from_engine(const R& ring, const Poly<R>& f, const RingPtr& target) {
  std::vector<Term> t;
  t.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) t.push_back({f.m[k], ring.to(f.c[k])});
  return Polynomial(target, std::move(t));
}

template <class R>
GroebnerBasis run_engine(const R& ring, const RingPtr& target, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const Limits& lim, bool track) {
  std::vector<Poly<R>> in;
  in.reserve(gens.size());
  for (const auto& g : gens) in.push_back(to_engine(ring, g, ord));
  detail::EngineResult<R> res;
  if constexpr (R::is_field) {
    res = detail::buchberger_field(ring, ord, in, track, lim);
  } else {
    res = detail::buchberger_integer(ring, ord, in, track, lim);
  }
  if (lim.stats) ++lim.stats->bases;
  GroebnerBasis G;
  G.ring = target;
  G.order = ord;
  G.strong = !R::is_field;
  G.pairs = res.pairs;
  for (const auto& b : res.basis) G.elements.push_back(from_engine(ring, b, target));
  if (track) {
    std::vector<std::vector<Polynomial>> cof;
    for (const auto& reps : res.reps) {
      std::vector<Polynomial> row;
      for (const auto& r : reps) row.push_back(from_engine(ring, r, target));
      cof.push_back(std::move(row));
    }
    G.cofactors = std::move(cof);
  }
  return G;
}

GroebnerBasis compute_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                            const MonomialOrder& ord, const Limits& lim, bool track) {
  const auto& dom = ring->domain();
  switch (dom.kind()) {
    case DomainKind::PrimeField:
      return run_engine(FpCoeffs{dom.prime()}, ring, gens, ord, lim, track);
    case DomainKind::RationalQ:
      return run_engine(QCoeffs{}, ring, gens, ord, lim, track);
    case DomainKind::IntegerZ:
      return run_engine(ZCoeffs{}, ring, gens, ord, lim, track);
    case DomainKind::TruncatedPadic:
      break;
  }
  throw UnsupportedError("Groebner bases over " + dom.name());
}

template <class R>
Polynomial nf_engine(const R& ring, const Polynomial& f, const GroebnerBasis& G,
                     std::vector<Polynomial>* quotients) {
  const auto& ord = G.order;
  std::vector<Poly<R>> basis;
  basis.reserve(G.elements.size());
  for (const auto& g : G.elements) basis.push_back(to_engine(ring, g, ord));
  std::vector<const Poly<R>*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  std::vector<std::vector<Term>> qterms(basis.size());
  detail::StepFn<R> step;
  if (quotients) {
    step = [&](std::size_t k, const typename R::T& q, const Monomial& mono) {
      qterms[k].push_back({mono, ring.to(q)});
    };
  }
  Poly<R> r;
  if constexpr (R::is_field) {
    r = detail::reduce_field(ring, ord, to_engine(ring, f, ord), ptrs, false, step);
  } else {
    r = detail::reduce_integer(ring, ord, to_engine(ring, f, ord), ptrs, false, true, step);
  }
  if (quotients) {
    quotients->clear();
    for (auto& q : qterms) quotients->push_back(Polynomial(G.ring, std::move(q)));
  }
  return from_engine(ring, r, G.ring);
}

Polynomial nf_dispatch(const Polynomial& f, const GroebnerBasis& G, std::vector<Polynomial>* q) {
  require_same_ring(f.ring(), G.ring, "normal_form");
  const auto& dom = G.ring->domain();
  switch (dom.kind()) {
    case DomainKind::PrimeField:
      return nf_engine(FpCoeffs{dom.prime()}, f, G, q);
    case DomainKind::RationalQ:
      return nf_engine(QCoeffs{}, f, G, q);
    case DomainKind::IntegerZ:
      return nf_engine(ZCoeffs{}, f, G, q);
    case DomainKind::TruncatedPadic:
      break;
  }
  throw UnsupportedError("normal forms over " + dom.name());
}

std::string fresh_name(const RingContext& ring, const std::string& base) {
  std::string name = base;
  for (int k = 1; ring.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

/// g / f when f divides g exactly; the division runs over QQ for ZZ rings.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  const auto& ring = g.ring();
  RingPtr work = ring->domain().kind() == DomainKind::IntegerZ
                     ? ring->with_domain(CoefficientDomain::rationals())
                     : ring;
  GroebnerBasis G;
  G.ring = work;
  G.order = MonomialOrder::grevlex();
  G.elements = {embed(f, work)};
  std::vector<Polynomial> q;
  Polynomial r = nf_dispatch(embed(g, work), G, &q);
  if (!r.is_zero()) throw InputError("internal: inexact division in colon");
  return embed(q[0], ring);
}

}  // namespace

std::string GroebnerBasis::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) s += ", ";
    s += elements[k].to_string();
  }
  return s + "]";
}

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "Ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::shared_ptr<const GroebnerBasis> Ideal::basis(const MonomialOrder& order, const Limits& limits,
                                                  bool track) const {
  return basis_over(ring_->domain(), order, limits, track);
}

std::shared_ptr<const GroebnerBasis> Ideal::basis_over(const CoefficientDomain& domain,
                                                       const MonomialOrder& order,
                                                       const Limits& limits, bool track) const {
  const std::string key = domain.name() + "|" + order.name() + (track ? "|t" : "");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
    if (!track) {
      auto jt = cache_->bases.find(key + "|t");
      if (jt != cache_->bases.end()) return jt->second;
    }
  }
  RingPtr target = domain == ring_->domain() ? ring_ : ring_->with_domain(domain);
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(target == ring_ ? g : Polynomial(target, g.terms()));
  auto G = std::make_shared<const GroebnerBasis>(compute_basis(target, gens, order, limits, track));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->bases.emplace(key, G);
  return G;
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += gens_[k].to_string();
  }
  return s + ")";
}

GroebnerBasis groebner_field(const Ideal& I, const MonomialOrder& order, const Limits& limits,
                             bool track) {
  if (!I.ring()->domain().is_field()) {
    throw InputError("groebner_field needs GF(p) or QQ, got " + I.ring()->domain().name());
  }
  return *I.basis(order, limits, track);
}

GroebnerBasis strong_groebner_int(const Ideal& I, const MonomialOrder& order, const Limits& limits,
                                  bool track) {
  if (I.ring()->domain().kind() != DomainKind::IntegerZ) {
    throw InputError("strong_groebner_int needs ZZ, got " + I.ring()->domain().name());
  }
  return *I.basis(order, limits, track);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return nf_dispatch(f, G, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       std::vector<Polynomial>& quotients) {
  return nf_dispatch(f, G, &quotients);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  const auto& ord = G.order;
  const auto& E = G.elements;
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      const Term& ti = E[i].leading_term(ord);
      const Term& tj = E[j].leading_term(ord);
      Monomial l = ti.mono.lcm(tj.mono);
      Monomial mi = l / ti.mono, mj = l / tj.mono;
      if (!G.strong) {
        Polynomial s = E[i].times_monomial(mi, 1 / ti.coeff) - E[j].times_monomial(mj, 1 / tj.coeff);
        if (!normal_form(s, G).is_zero()) return false;
        continue;
      }
      mpz_class a = ti.coeff.get_num(), b = tj.coeff.get_num(), lc;
      mpz_lcm(lc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Polynomial s = E[i].times_monomial(mi, mpq_class(lc / a)) - E[j].times_monomial(mj, mpq_class(lc / b));
      if (!normal_form(s, G).is_zero()) return false;
      mpz_class g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Polynomial gp = E[i].times_monomial(mi, mpq_class(u)) + E[j].times_monomial(mj, mpq_class(v));
      if (!normal_form(gp, G).is_zero()) return false;
    }
  }
  return true;
}

std::string to_string(MembershipTier t) {
  switch (t) {
    case MembershipTier::Fp:
      return "Fp";
    case MembershipTier::Q:
      return "Q";
    case MembershipTier::Z:
      return "Z";
    case MembershipTier::ZpLocal:
      return "Zp_local";
  }
  return "?";
}

bool MembershipCertificate::verify() const {
  if (!cofactors || cofactors->size() != generators.size()) return false;
  Polynomial rhs(element.ring());
  for (std::size_t j = 0; j < generators.size(); ++j) rhs = rhs + (*cofactors)[j] * generators[j];
  return element.scaled(mpq_class(denominator)) == rhs;
}

namespace {

MembershipCertificate decide_in(const Polynomial& f, const Ideal& I, const CoefficientDomain& dom,
                                MembershipTier tier, const Limits& limits, bool with_cof) {
  RingPtr target = dom == I.ring()->domain() ? I.ring() : I.ring()->with_domain(dom);
  MembershipCertificate cert(Polynomial(target, f.terms()));
  cert.tier = tier;
  for (const auto& g : I.generators()) cert.generators.push_back(Polynomial(target, g.terms()));
  if (I.is_zero()) {
    cert.member = cert.element.is_zero();
    if (cert.member && with_cof) cert.cofactors = std::vector<Polynomial>{};
    return cert;
  }
  auto G = I.basis_over(dom, MonomialOrder::grevlex(), limits, with_cof);
  std::vector<Polynomial> q;
  Polynomial r = normal_form(cert.element, *G, q);
  cert.member = r.is_zero();
  if (cert.member && with_cof) {
    std::vector<Polynomial> cof(cert.generators.size(), Polynomial(target));
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k].is_zero()) continue;
      for (std::size_t j = 0; j < cof.size(); ++j) cof[j] = cof[j] + q[k] * (*G->cofactors)[k][j];
    }
    cert.cofactors = std::move(cof);
  }
  return cert;
}

}  // namespace

MembershipCertificate membership(const Polynomial& f, const Ideal& I, MembershipMode mode,
                                 const Limits& limits, bool with_cofactors) {
  require_same_ring(f.ring(), I.ring(), "membership");
  const auto& ring = I.ring();
  const auto kind = ring->domain().kind();
  switch (mode) {
    case MembershipMode::Fp: {
      if (ring->prime() == 0) throw InputError("Fp membership needs a prime");
      auto dom = CoefficientDomain::prime_field(ring->prime());
      return decide_in(f, I, dom, MembershipTier::Fp, limits, with_cofactors);
    }
    case MembershipMode::Q:
      if (kind != DomainKind::IntegerZ && kind != DomainKind::RationalQ) {
        throw InputError("QQ membership needs ZZ or QQ coefficients");
      }
      return decide_in(f, I, CoefficientDomain::rationals(), MembershipTier::Q, limits,
                       with_cofactors);
    case MembershipMode::Z:
      if (kind != DomainKind::IntegerZ) throw InputError("ZZ membership needs ZZ coefficients");
      return decide_in(f, I, ring->domain(), MembershipTier::Z, limits, with_cofactors);
    case MembershipMode::ZpLocal:
      break;
  }
  if (kind != DomainKind::IntegerZ || ring->prime() == 0) {
    throw InputError("Zp_local membership needs ZZ coefficients and a prime");
  }
  auto z = decide_in(f, I, ring->domain(), MembershipTier::Z, limits, with_cofactors);
  if (z.member) return z;
  auto q = decide_in(f, I, CoefficientDomain::rationals(), MembershipTier::Q, limits, false);
  if (!q.member) {
    z.tier = MembershipTier::Q;
    return z;
  }
  // f lies in I over QQ, so (I : f) meets ZZ in a nonzero ideal c0*ZZ and
  // f is in I localized at p exactly when p does not divide c0.
  Ideal K = colon(I, f, limits);
  auto G = K.basis(MonomialOrder::grevlex(), limits);
  std::optional<mpz_class> c0;
  for (const auto& g : G->elements) {
    if (g.is_constant()) c0 = g.constant_term().get_num();
  }
  if (!c0) {
    throw Inconclusive("no integer denominator found for " + f.to_string(), f.to_string());
  }
  MembershipCertificate cert(f);
  cert.tier = MembershipTier::ZpLocal;
  cert.generators = I.generators();
  mpz_class c = abs(*c0);
  cert.member = mpz_divisible_ui_p(c.get_mpz_t(), ring->prime()) == 0;
  cert.denominator = cert.member ? c : mpz_class(1);
  if (cert.member && with_cofactors) {
    auto inner = decide_in(f.scaled(mpq_class(c)), I, ring->domain(), MembershipTier::Z, limits, true);
    if (!inner.member) throw Inconclusive("denominator certificate failed", f.to_string());
    cert.cofactors = inner.cofactors;
  }
  return cert;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const Limits& limits) {
  const auto& ring = I.ring();
  std::vector<bool> dropped(ring->nvars(), false);
  for (const auto& v : drop) {
    auto idx = ring->index_of(v);
    if (!idx) throw InputError("eliminate: unknown variable " + v);
    dropped[*idx] = true;
  }
  std::vector<std::string> order_vars, kept;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (dropped[i]) order_vars.push_back(ring->variables()[i]);
  const unsigned block = static_cast<unsigned>(order_vars.size());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!dropped[i]) {
      order_vars.push_back(ring->variables()[i]);
      kept.push_back(ring->variables()[i]);
    }
  RingPtr kept_ring = ring->with_variables(kept);
  if (I.is_zero()) return Ideal(kept_ring);
  RingPtr work = ring->with_variables(order_vars);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, work));
  Ideal J(work, gens);
  auto G = J.basis(MonomialOrder::elimination(block), limits);
  std::vector<Polynomial> out;
  for (const auto& g : G->elements) {
    bool free = true;
    for (std::size_t v : g.support())
      if (v < block) free = false;
    if (free) out.push_back(embed(g, kept_ring));
  }
  return Ideal(kept_ring, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J, const Limits& limits) {
  require_same_ring(I.ring(), J.ring(), "intersect");
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(ring);
  std::string t = fresh_name(*ring, "t_aux");
  std::vector<std::string> vars = ring->variables();
  vars.insert(vars.begin(), t);
  RingPtr work = ring->with_variables(vars);
  Polynomial tv = Polynomial::variable(work, 0);
  Polynomial one_minus_t = Polynomial::constant(work, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(tv * embed(g, work));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed(g, work));
  Ideal K = eliminate(Ideal(work, gens), {t}, limits);
  std::vector<Polynomial> out;
  for (const auto& g : K.generators()) out.push_back(embed(g, ring));
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& f, const Limits& limits) {
  require_same_ring(I.ring(), f.ring(), "colon");
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  const auto kind = I.ring()->domain().kind();
  if (kind == DomainKind::TruncatedPadic) throw UnsupportedError("colon over " + I.ring()->domain().name());
  if (I.is_zero()) return Ideal(I.ring());
  Ideal K = intersect(I, Ideal(I.ring(), {f}), limits);
  std::vector<Polynomial> out;
  for (const auto& g : K.generators()) out.push_back(divide_exact(g, f));
  return Ideal(I.ring(), std::move(out));
}

Ideal initial_ideal(const Ideal& I, const MonomialOrder& order, const Limits& limits) {
  if (!I.ring()->domain().is_field()) {
    throw InputError("initial_ideal needs a field, got " + I.ring()->domain().name());
  }
  if (I.is_zero()) return I;
  auto G = I.basis(order, limits);
  std::vector<Polynomial> out;
  for (const auto& g : G->elements) out.push_back(Polynomial::monomial(I.ring(), g.leading_term(order).mono));
  return Ideal(I.ring(), std::move(out));
}

bool ideal_contains(const Ideal& I, const Ideal& J, MembershipMode mode, const Limits& limits) {
  for (const auto& g : J.generators())
    if (!membership(g, I, mode, limits).member) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, MembershipMode mode, const Limits& limits) {
  require_same_ring(I.ring(), J.ring(), "ideal_equal");
  return ideal_contains(I, J, mode, limits) && ideal_contains(J, I, mode, limits);
}

Ideal contract_to_pth_powers(const Ideal& I, const Limits& limits) {
  const auto& ring = I.ring();
  if (ring->domain().kind() != DomainKind::PrimeField) {
    throw InputError("contract_to_pth_powers needs GF(p), got " + ring->domain().name());
  }
  if (I.is_zero()) return I;
  const std::uint64_t p = ring->prime();
  const std::size_t n = ring->nvars();
  std::vector<std::string> vars = ring->variables();
  std::vector<std::string> ys;
  for (std::size_t i = 0; i < n; ++i) {
    std::string y = fresh_name(*ring, "pw_" + vars[i]);
    ys.push_back(y);
    vars.push_back(y);
  }
  RingPtr work = ring->with_variables(vars);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, work));
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(work, n + i) -
                   Polynomial::variable(work, i).pow(static_cast<long long>(p)));
  }
  Ideal K = eliminate(Ideal(work, gens), ring->variables(), limits);
  std::vector<Polynomial> out;
  for (const auto& g : K.generators()) out.push_back(Polynomial(ring, g.terms()));
  return Ideal(ring, std::move(out));
}

}  // namespace prismforge
