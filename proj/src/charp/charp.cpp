// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/charp.hpp"

#include "prismforge/errors.hpp"

namespace prismforge {

namespace {

void require_prime_field(const Ideal& I, const char* where) {
  if (I.ring()->domain().kind() != DomainKind::PrimeField) {
    throw InputError(std::string(where) + " needs a GF(p) ring, got " + I.ring()->describe());
  }
}

}  // namespace

Ideal frobenius_preimage(const Ideal& I, const Limits& limits) {
  require_prime_field(I, "frobenius_preimage");
  return contract_to_pth_powers(I, limits);
}

bool is_reduced(const Ideal& I, const Limits& limits) {
  return ideal_contains(I, frobenius_preimage(I, limits), MembershipMode::Fp, limits);
}

InjectivityResult pth_power_injective(const Ideal& I1, const Ideal& I2, const Limits& limits) {
  require_prime_field(I1, "pth_power_injective");
  require_same_ring(I1.ring(), I2.ring(), "pth_power_injective");
  const auto p = static_cast<long long>(I1.ring()->domain().prime());
  for (const auto& g : I1.generators()) {
    if (!membership(g.pow(p), I2, MembershipMode::Fp, limits).member) {
      throw InputError("p-th power map is not well defined: (" + g.to_string() + ")^" +
                       std::to_string(p) + " is not in " + I2.to_string());
    }
  }
  InjectivityResult out;
  const Ideal K = frobenius_preimage(I2, limits);
  for (const auto& g : K.generators()) {
    if (!membership(g, I1, MembershipMode::Fp, limits).member) {
      out.injective = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

std::string RootClosureCertificate::verdict_string() const {
  switch (verdict) {
    case RootClosureVerdict::CertifiedUpTo:
      return "CertifiedUpTo(" + std::to_string(levels_checked) + ")";
    case RootClosureVerdict::FailedAt:
      return "FailedAt(" + std::to_string(failed_level) + ", " + witness->to_string() + ")";
    case RootClosureVerdict::Precondition:
      return "PreconditionFailed(" + detail + ")";
  }
  return {};
}

RootClosureCertificate p_root_closed_certificate(const Ideal& Jbar, const Polynomial& d, unsigned k,
                                                 const Limits& limits) {
  require_prime_field(Jbar, "p_root_closed_certificate");
  require_same_ring(Jbar.ring(), d.ring(), "p_root_closed_certificate");
  RootClosureCertificate cert;
  cert.levels_checked = k;
  if (membership(d, Jbar, MembershipMode::Fp, limits).member) {
    cert.verdict = RootClosureVerdict::Precondition;
    cert.detail = "d is zero modulo " + Jbar.to_string();
    return cert;
  }
  if (!is_nonzerodivisor(d, Jbar, limits)) {
    cert.verdict = RootClosureVerdict::Precondition;
    cert.detail = "d is a zero-divisor modulo " + Jbar.to_string();
    return cert;
  }
  const auto p = static_cast<long long>(Jbar.ring()->domain().prime());
  Polynomial dpow = d;
  for (unsigned i = 0; i <= k; ++i) {
    Polynomial next = dpow.pow(p);
    auto r = pth_power_injective(Jbar.plus({dpow}), Jbar.plus({next}), limits);
    cert.per_level.push_back({i, r.injective, r.witness});
    if (!r.injective) {
      cert.verdict = RootClosureVerdict::FailedAt;
      cert.failed_level = i;
      cert.witness = r.witness;
      return cert;
    }
    dpow = std::move(next);
  }
  return cert;
}

bool is_nonzerodivisor(const Polynomial& f, const Ideal& I, const Limits& limits) {
  if (!I.ring()->domain().is_field()) throw InputError("is_nonzerodivisor needs a field domain");
  const auto mode = I.ring()->domain().kind() == DomainKind::PrimeField ? MembershipMode::Fp
                                                                         : MembershipMode::Q;
  return ideal_contains(I, colon(I, f, limits), mode, limits);
}

}  // namespace prismforge
