// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/algebra/coefficient.hpp"

#include "prismforge/errors.hpp"

namespace prismforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  // 50 Miller-Rabin rounds after BPSW are exact far beyond 64 bits.
  return mpz_probab_prime_p(z.get_mpz_t(), 50) != 0;
}

CoefficientDomain CoefficientDomain::integers() { return {DomainKind::IntegerZ, 0, 0}; }

CoefficientDomain CoefficientDomain::rationals() { return {DomainKind::RationalQ, 0, 0}; }

CoefficientDomain CoefficientDomain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("GF(p) requires a prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31)) throw UnsupportedError("primes above 2^31");
  return {DomainKind::PrimeField, p, 1};
}

CoefficientDomain CoefficientDomain::truncated_padic(std::uint64_t p, unsigned N) {
  if (!is_prime(p)) throw InputError("Z/p^N requires a prime, got " + std::to_string(p));
  if (N < 1) throw InputError("Z/p^N requires N >= 1");
  return {DomainKind::TruncatedPadic, p, N};
}

mpz_class CoefficientDomain::modulus() const {
  switch (kind_) {
    case DomainKind::PrimeField:
      return mpz_class(static_cast<unsigned long>(p_));
    case DomainKind::TruncatedPadic: {
      mpz_class m;
      mpz_ui_pow_ui(m.get_mpz_t(), p_, n_);
      return m;
    }
    default:
      return 0;
  }
}

mpq_class CoefficientDomain::normalize(const mpq_class& value) const {
  switch (kind_) {
    case DomainKind::RationalQ:
      return value;
    case DomainKind::IntegerZ:
      if (value.get_den() != 1) {
        throw InputError("coefficient " + to_string(value) + " is not an integer");
      }
      return value;
    case DomainKind::PrimeField:
    case DomainKind::TruncatedPadic: {
      const mpz_class m = modulus();
      mpz_class num = value.get_num() % m;
      if (num < 0) num += m;
      if (value.get_den() == 1) return mpq_class(num);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), value.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
        throw InputError("denominator of " + to_string(value) + " is divisible by " +
                         std::to_string(p_));
      }
      mpz_class r = (num * inv) % m;
      if (r < 0) r += m;
      return mpq_class(r);
    }
  }
  return value;
}

std::string CoefficientDomain::name() const {
  switch (kind_) {
    case DomainKind::IntegerZ:
      return "ZZ";
    case DomainKind::RationalQ:
      return "QQ";
    case DomainKind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
    case DomainKind::TruncatedPadic:
      return "Z/" + std::to_string(p_) + "^" + std::to_string(n_);
  }
  return "?";
}

std::string to_string(const mpz_class& v) { return v.get_str(); }

std::string to_string(const mpq_class& v) { return v.get_str(); }

}  // namespace prismforge
