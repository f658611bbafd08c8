// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace prismforge {

enum class DomainKind { IntegerZ, RationalQ, PrimeField, TruncatedPadic };

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t n);

/// One of ZZ, QQ, GF(p) or Z/p^N. Arithmetic in every domain is exact;
/// values are carried as rationals and normalized into the domain.
class CoefficientDomain {
 public:
  static CoefficientDomain integers();
  static CoefficientDomain rationals();
  static CoefficientDomain prime_field(std::uint64_t p);
  static CoefficientDomain truncated_padic(std::uint64_t p, unsigned N);

  DomainKind kind() const noexcept { return kind_; }
  /// 0 for ZZ and QQ.
  std::uint64_t prime() const noexcept { return p_; }
  unsigned truncation() const noexcept { return n_; }
  bool is_field() const noexcept {
    return kind_ == DomainKind::RationalQ || kind_ == DomainKind::PrimeField;
  }
  /// p for GF(p), p^N for Z/p^N, 0 otherwise.
  mpz_class modulus() const;

  /// Maps a rational into the canonical representative of this domain.
  /// Throws InputError when the value has no image (a fraction in ZZ, or a
  /// denominator divisible by p in the modular domains).
  mpq_class normalize(const mpq_class& value) const;

  std::string name() const;

  friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.n_ == b.n_;
  }
  friend bool operator!=(const CoefficientDomain& a, const CoefficientDomain& b) {
    return !(a == b);
  }

 private:
  CoefficientDomain(DomainKind kind, std::uint64_t p, unsigned n) : kind_(kind), p_(p), n_(n) {}

  DomainKind kind_;
  std::uint64_t p_;
  unsigned n_;
};

std::string to_string(const mpz_class& v);
std::string to_string(const mpq_class& v);

}  // namespace prismforge
