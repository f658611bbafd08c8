// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "prismforge/algebra/monomial.hpp"
#include "prismforge/algebra/order.hpp"
#include "prismforge/algebra/ring.hpp"

namespace prismforge {

struct Term {
  Monomial mono;
  mpq_class coeff;
};

/// Sparse polynomial in canonical form: nonzero coefficients normalized into
/// the ring's domain, terms sorted by grevlex, largest first.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const mpq_class& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const mpq_class& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the monomial 1.
  mpq_class constant_term() const;
  mpq_class coefficient(const Monomial& m) const;
  unsigned degree() const noexcept;
  /// Variables with a nonzero exponent somewhere.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial pow(long long k) const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_monomial(const Monomial& m, const mpq_class& c = 1) const;

  /// Terms sorted by `order`, largest first.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Leading term under `order`; the polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& order) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Formats a monomial, honouring the ring's fractional level.
std::string format_monomial(const Monomial& m, const RingContext& ring);

/// Image of `f` under the ring map sending each variable of f's ring to the
/// given polynomial. All images live in `target`; variables of f that do not
/// occur need no image.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images);

/// f / n, exact. Over ZZ every coefficient must be divisible by n.
Polynomial exact_div_int(const Polynomial& f, const mpz_class& n);

/// Coefficient-wise image in `target` (ZZ -> GF(p), ZZ -> Z/p^N, QQ -> GF(p), ...).
Polynomial reduce_mod(const Polynomial& f, const CoefficientDomain& target);

/// Same exponents read at level + delta_level.
Polynomial fractional_relabel(const Polynomial& f, int delta_level);

/// Re-homes f into a ring with the same variables listed (possibly in a
/// different order, possibly more of them). Coefficients are re-normalized.
Polynomial embed(const Polynomial& f, const RingPtr& target);

}  // namespace prismforge
