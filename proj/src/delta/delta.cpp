// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/delta.hpp"

#include <functional>

#include "prismforge/errors.hpp"

namespace prismforge {

FrobeniusLift FrobeniusLift::monomial(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("Frobenius lift needs a prime, got " + std::to_string(p));
  return FrobeniusLift(p, {});
}

FrobeniusLift FrobeniusLift::custom(std::uint64_t p, std::map<std::string, Polynomial> images) {
  if (!is_prime(p)) throw InputError("Frobenius lift needs a prime, got " + std::to_string(p));
  return FrobeniusLift(p, std::move(images));
}

Polynomial FrobeniusLift::image_of(const std::string& var, const RingPtr& ring) const {
  auto it = images_.find(var);
  if (it != images_.end()) return embed(it->second, ring);
  return Polynomial::variable(ring, var).pow(static_cast<long long>(p_));
}

Polynomial FrobeniusLift::apply(const Polynomial& f) const {
  const auto& ring = f.ring();
  if (images_.empty()) {
    std::vector<Term> t;
    t.reserve(f.size());
    for (const auto& x : f.terms()) t.push_back({x.mono.pow(static_cast<unsigned>(p_)), x.coeff});
    return Polynomial(ring, std::move(t));
  }
  std::map<std::string, Polynomial> img;
  for (std::size_t v : f.support()) {
    const auto& name = ring->variables()[v];
    img.emplace(name, image_of(name, ring));
  }
  return substitute(f, img, ring);
}

void validate_frobenius_lift(const FrobeniusLift& lift, const RingPtr& ring) {
  if (ring->domain().kind() != DomainKind::IntegerZ) {
    throw InputError("Frobenius lifts are validated over ZZ, got " + ring->domain().name());
  }
  for (const auto& [name, img] : lift.images()) {
    if (!ring->index_of(name)) throw InputError("lift image for unknown variable " + name);
    if (img.ring()->domain().kind() != DomainKind::IntegerZ) {
      throw InputError("lift image of " + name + " must have integer coefficients");
    }
  }
  const mpz_class p(static_cast<unsigned long>(lift.prime()));
  for (const auto& name : ring->variables()) {
    Polynomial diff = lift.image_of(name, ring) -
                      Polynomial::variable(ring, name).pow(static_cast<long long>(lift.prime()));
    for (const auto& t : diff.terms()) {
      if (mpz_divisible_p(t.coeff.get_num_mpz_t(), p.get_mpz_t()) == 0) {
        throw InvalidLift(name, t.coeff.get_str());
      }
    }
  }
}

Polynomial delta_of(const Polynomial& f, const FrobeniusLift& lift) {
  const Polynomial diff = lift.apply(f) - f.pow(static_cast<long long>(lift.prime()));
  return exact_div_int(diff, mpz_class(static_cast<unsigned long>(lift.prime())));
}

Polynomial phi_pow(const Polynomial& f, unsigned i, const FrobeniusLift& lift) {
  Polynomial g = f;
  for (unsigned k = 0; k < i; ++k) g = lift.apply(g);
  return g;
}

Polynomial PhiMonomialDecomposition::reconstruct() const {
  std::vector<Term> t;
  for (const auto& [k, m] : parts) t.push_back({m, mpq_class(k)});
  return Polynomial(ring, std::move(t));
}

PhiMonomialDecomposition phi_monomial_decomposition(const Polynomial& f, const FrobeniusLift& lift) {
  PhiMonomialDecomposition out;
  out.ring = f.ring();
  for (const auto& t : f.terms()) {
    if (t.coeff.get_den() != 1) throw InputError("phi-monomial decomposition needs integer coefficients");
    if (!lift.is_monomial()) {
      Polynomial m = Polynomial::monomial(f.ring(), t.mono);
      if (lift.apply(m) != m.pow(static_cast<long long>(lift.prime()))) {
        throw NotPhiMonomial(format_monomial(t.mono, *f.ring()));
      }
    }
    out.parts.emplace_back(t.coeff.get_num(), t.mono);
  }
  return out;
}

StabilizationResult delta_stabilize(const Ideal& J, const FrobeniusLift& lift, unsigned max_iter,
                                    const Limits& limits) {
  const auto& ring = J.ring();
  if (ring->domain().kind() != DomainKind::IntegerZ) {
    throw InputError("delta-stabilization runs over ZZ, got " + ring->domain().name());
  }
  if (ring->prime() != lift.prime()) throw InputError("ring prime and lift prime differ");
  StabilizationResult res{J, 0, {}};
  std::vector<Polynomial> frontier = J.generators();
  for (unsigned k = 0; k <= max_iter; ++k) {
    std::vector<Polynomial> fresh;
    for (const auto& g : frontier) {
      Polynomial dg = delta_of(g, lift);
      StabilizationStep step;
      step.iteration = k;
      step.element = dg.to_string();
      if (dg.is_zero()) {
        step.member = true;
      } else {
        auto cert = membership(dg, res.ideal, MembershipMode::ZpLocal, limits);
        step.member = cert.member;
        step.tier = cert.tier;
        step.denominator = cert.denominator;
        if (!cert.member) fresh.push_back(dg);
      }
      res.trace.push_back(std::move(step));
    }
    if (fresh.empty()) {
      res.delta_height = k;
      return res;
    }
    res.ideal = res.ideal.plus(fresh);
    frontier = std::move(fresh);
  }
  throw NotStabilized(max_iter);
}

bool is_delta_stable(const Ideal& J, const FrobeniusLift& lift, const Limits& limits) {
  for (const auto& g : J.generators()) {
    Polynomial dg = delta_of(g, lift);
    if (dg.is_zero()) continue;
    if (!membership(dg, J, MembershipMode::ZpLocal, limits).member) return false;
  }
  return true;
}

unsigned delta_height_bound(const Polynomial& f, const FrobeniusLift& lift, unsigned max_iter,
                            const Limits& limits) {
  auto dec = phi_monomial_decomposition(f, lift);
  if (dec.parts.empty()) return 0;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  RingPtr tring = RingContext::make(names, CoefficientDomain::integers(), lift.prime());
  std::vector<Term> t;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    t.push_back({Monomial::variable(names.size(), i), mpq_class(dec.parts[i].first)});
  }
  Ideal J(tring, {Polynomial(tring, std::move(t))});
  return delta_stabilize(J, FrobeniusLift::monomial(lift.prime()), max_iter, limits).delta_height;
}

Polynomial fermat_sum(std::uint64_t p, const std::vector<unsigned>& n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n.size(); ++i) names.push_back("X" + std::to_string(i + 1));
  RingPtr ring = RingContext::make(names, CoefficientDomain::integers(), p);
  std::vector<Term> t;
  for (std::size_t i = 0; i < n.size(); ++i) t.push_back({Monomial::variable(n.size(), i, n[i]), 1});
  return Polynomial(ring, std::move(t));
}

Polynomial beta_poly(std::uint64_t p, unsigned m, const std::vector<unsigned>& n) {
  if (!is_prime(p)) throw InputError("beta_poly needs a prime");
  if (m < 3) throw InputError("beta_poly needs m >= 3");
  if (n.size() != m - 1) throw InputError("beta_poly needs exponents n_2..n_m");
  for (unsigned x : n)
    if (x < 1) throw InputError("beta_poly needs exponents >= 1");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= m; ++i) names.push_back("X" + std::to_string(i));
  RingPtr qring = RingContext::make(names, CoefficientDomain::rationals(), p);
  const unsigned slots = 2 * (m - 1);  // f_2..f_m then e_2..e_m
  const unsigned cap = static_cast<unsigned>(p - 1);
  std::vector<mpz_class> fact(p + 1, 1);
  for (unsigned k = 1; k <= p; ++k) fact[k] = fact[k - 1] * k;

  std::vector<unsigned> a(slots, 0);
  std::vector<Term> terms;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned slot, unsigned left) {
    if (slot == slots) {
      if (left != 0) return;
      unsigned fsum = 0;
      for (unsigned j = 0; j < m - 1; ++j) fsum += a[j];
      if (fsum > cap) return;
      mpz_class den = 1;
      for (unsigned x : a) den *= fact[x];
      mpq_class c(fact[p - 1], den);
      c.canonicalize();
      if (fsum % 2 == 0) c = -c;  // -(...) * (-1)^{sum f}
      Monomial mono(m);
      for (unsigned j = 0; j < m - 1; ++j) mono.set(j + 1, n[j] * (a[j] + a[j + m - 1]));
      terms.push_back({mono, c});
      return;
    }
    for (unsigned v = 0; v <= std::min(cap, left); ++v) {
      a[slot] = v;
      rec(slot + 1, left - v);
    }
    a[slot] = 0;
  };
  rec(0, static_cast<unsigned>(p));
  Polynomial q(qring, std::move(terms));
  return Polynomial(qring->with_domain(CoefficientDomain::integers()), q.terms());
}

}  // namespace prismforge
