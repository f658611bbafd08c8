// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismforge/groebner/ideal.hpp"

namespace prismforge {

/// {x : x^p in I} for I over GF(p).
Ideal frobenius_preimage(const Ideal& I, const Limits& limits = {});

bool is_reduced(const Ideal& I, const Limits& limits = {});

struct InjectivityResult {
  bool injective = true;
  /// Generator of frobenius_preimage(I2) outside I1.
  std::optional<Polynomial> witness;
};

/// Injectivity of R/I1 -> R/I2, x |-> x^p. Throws InputError when the map is
/// not well defined.
InjectivityResult pth_power_injective(const Ideal& I1, const Ideal& I2, const Limits& limits = {});

enum class RootClosureVerdict { CertifiedUpTo, FailedAt, Precondition };

struct RootClosureLevel {
  unsigned level = 0;
  bool injective = true;
  std::optional<Polynomial> witness;
};

struct RootClosureCertificate {
  unsigned levels_checked = 0;
  std::vector<RootClosureLevel> per_level;
  RootClosureVerdict verdict = RootClosureVerdict::CertifiedUpTo;
  /// Failing level for FailedAt.
  unsigned failed_level = 0;
  std::optional<Polynomial> witness;
  /// Why the precondition failed.
  std::string detail;

  std::string verdict_string() const;
};

/// Injectivity of (Jbar, d^{p^i}) -> (Jbar, d^{p^{i+1}}) for i = 0..k.
RootClosureCertificate p_root_closed_certificate(const Ideal& Jbar, const Polynomial& d, unsigned k = 3,
                                                 const Limits& limits = {});

bool is_nonzerodivisor(const Polynomial& f, const Ideal& I, const Limits& limits = {});

}  // namespace prismforge
