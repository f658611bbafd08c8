// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prismforge/algebra/polynomial.hpp"
#include "prismforge/groebner/ideal.hpp"

namespace prismforge {

/// A Frobenius lift on a polynomial ring over ZZ, given by variable images.
/// The monomial lift sends every variable X to X^p; a custom lift overrides
/// some variables and leaves the rest on X^p.
class FrobeniusLift {
 public:
  static FrobeniusLift monomial(std::uint64_t p);
  static FrobeniusLift custom(std::uint64_t p, std::map<std::string, Polynomial> images);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_monomial() const noexcept { return images_.empty(); }
  const std::map<std::string, Polynomial>& images() const noexcept { return images_; }

  /// phi(var) as an element of `ring`.
  Polynomial image_of(const std::string& var, const RingPtr& ring) const;
  /// phi(f); works in any coefficient domain.
  Polynomial apply(const Polynomial& f) const;

 private:
  FrobeniusLift(std::uint64_t p, std::map<std::string, Polynomial> images)
      : p_(p), images_(std::move(images)) {}

  std::uint64_t p_;
  std::map<std::string, Polynomial> images_;
};

/// Throws InvalidLift(variable, coefficient) unless phi(X) = X^p mod p for
/// every variable of `ring`.
void validate_frobenius_lift(const FrobeniusLift& lift, const RingPtr& ring);

/// (phi(f) - f^p) / p.
Polynomial delta_of(const Polynomial& f, const FrobeniusLift& lift);
Polynomial phi_pow(const Polynomial& f, unsigned i, const FrobeniusLift& lift);

struct PhiMonomialDecomposition {
  RingPtr ring;
  std::vector<std::pair<mpz_class, Monomial>> parts;

  Polynomial reconstruct() const;
};

PhiMonomialDecomposition phi_monomial_decomposition(const Polynomial& f, const FrobeniusLift& lift);

struct StabilizationStep {
  unsigned iteration = 0;
  std::string element;
  bool member = false;
  MembershipTier tier = MembershipTier::Z;
  mpz_class denominator = 1;
};

struct StabilizationResult {
  Ideal ideal;
  unsigned delta_height = 0;
  std::vector<StabilizationStep> trace;

  const std::vector<Polynomial>& generators() const { return ideal.generators(); }
};

/// Adjoins delta of every newly added generator until all delta images are
/// members (ZZ first, then ZZ localized at p). Throws NotStabilized.
StabilizationResult delta_stabilize(const Ideal& J, const FrobeniusLift& lift, unsigned max_iter = 8,
                                    const Limits& limits = {});

bool is_delta_stable(const Ideal& J, const FrobeniusLift& lift, const Limits& limits = {});

/// Height of sum k_i t_i in ZZ[t_1..t_m] with the monomial lift, where
/// f = sum k_i M_i is the phi-monomial decomposition of f.
unsigned delta_height_bound(const Polynomial& f, const FrobeniusLift& lift, unsigned max_iter = 8,
                            const Limits& limits = {});

/// The closed form congruent to delta(X_1^{n_1} + ... + X_m^{n_m}) modulo
/// that sum, in ZZ[X1..Xm] (X1 does not occur). `n` lists n_2..n_m.
Polynomial beta_poly(std::uint64_t p, unsigned m, const std::vector<unsigned>& n);

/// X1^{n_1} + ... + X_m^{n_m} in ZZ[X1..Xm] with prime p.
Polynomial fermat_sum(std::uint64_t p, const std::vector<unsigned>& n);

}  // namespace prismforge
