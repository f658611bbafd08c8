// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/algebra/polynomial.hpp"
#include "prismforge/groebner/limits.hpp"

namespace prismforge {

/// Reduced basis over GF(p) or QQ, or reduced strong basis over ZZ, sorted
/// ascending by leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elements;
  bool reduced = true;
  bool strong = false;
  /// cofactors[k][j]: elements[k] = sum_j cofactors[k][j] * generators[j].
  std::optional<std::vector<std::vector<Polynomial>>> cofactors;
  std::size_t pairs = 0;

  std::string to_string() const;
};

/// Finitely generated ideal. No generators means the zero ideal. Bases are
/// cached per (order, tracking) and shared between copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  std::shared_ptr<const GroebnerBasis> basis(const MonomialOrder& order, const Limits& limits = {},
                                             bool track = false) const;
  /// Basis of the ideal generated by the images of the generators in
  /// another coefficient domain (ZZ -> QQ, ZZ -> GF(p), ...).
  std::shared_ptr<const GroebnerBasis> basis_over(const CoefficientDomain& domain,
                                                  const MonomialOrder& order,
                                                  const Limits& limits = {},
                                                  bool track = false) const;

  Ideal plus(const std::vector<Polynomial>& more) const;
  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis groebner_field(const Ideal& I, const MonomialOrder& order, const Limits& limits = {},
                             bool track = false);
GroebnerBasis strong_groebner_int(const Ideal& I, const MonomialOrder& order,
                                  const Limits& limits = {}, bool track = false);

/// Remainder against G. Over ZZ coefficients are reduced into [0, |lc|).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
/// Remainder plus quotients q with f = sum q[k]*G[k] + remainder.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, std::vector<Polynomial>& quotients);

/// Buchberger criterion: every S-polynomial (and G-polynomial over ZZ)
/// reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

enum class MembershipMode { Fp, Q, Z, ZpLocal };
enum class MembershipTier { Fp, Q, Z, ZpLocal };

std::string to_string(MembershipTier t);

struct MembershipCertificate {
  explicit MembershipCertificate(Polynomial f) : element(std::move(f)) {}

  bool member = false;
  MembershipTier tier = MembershipTier::Z;
  mpz_class denominator = 1;
  Polynomial element;
  std::vector<Polynomial> generators;
  /// c * f = sum cofactors[j] * generators[j]
  std::optional<std::vector<Polynomial>> cofactors;

  /// Re-checks the cofactor identity by exact arithmetic. False when there
  /// are no cofactors.
  bool verify() const;
};

MembershipCertificate membership(const Polynomial& f, const Ideal& I, MembershipMode mode,
                                 const Limits& limits = {}, bool with_cofactors = false);

/// I intersected with k[remaining variables], presented in a ring of the
/// remaining variables (original order). Works over a field or ZZ.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const Limits& limits = {});

Ideal intersect(const Ideal& I, const Ideal& J, const Limits& limits = {});

/// (I : f), over a field or ZZ.
Ideal colon(const Ideal& I, const Polynomial& f, const Limits& limits = {});

/// Monomial ideal of leading terms of the reduced basis (field domains).
Ideal initial_ideal(const Ideal& I, const MonomialOrder& order, const Limits& limits = {});

/// Mutual membership of generators.
bool ideal_equal(const Ideal& I, const Ideal& J, MembershipMode mode, const Limits& limits = {});
bool ideal_contains(const Ideal& I, const Ideal& J, MembershipMode mode, const Limits& limits = {});

/// {g : g(X^p) in I}, i.e. the p-th root of I intersected with GF(p)[X^p],
/// relabeled to the original variables.
Ideal contract_to_pth_powers(const Ideal& I, const Limits& limits = {});

}  // namespace prismforge
