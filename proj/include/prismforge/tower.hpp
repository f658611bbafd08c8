// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/prism.hpp"

namespace prismforge {

struct TowerLevel {
  unsigned index = 0;
  Ideal relations;
  /// Exponents of the header read over p^presentation_level.
  unsigned presentation_level = 0;
  std::string transition;
  std::string header;
};

/// Levels 0..k with relations (J, phi^i(d)). Throws HypothesisFailed unless
/// the hypotheses hold or `force` is set.
std::vector<TowerLevel> build_tower(const PrismSpec& spec, unsigned k, bool force = false,
                                    const Limits& limits = {});

/// Relabels level i into X^{1/p^i} notation. Monomial lifts only.
TowerLevel fractional_presentation(const TowerLevel& level, const FrobeniusLift& lift);

struct ProjectionKernel {
  unsigned level = 0;
  /// (J mod p, d^{p^{i+1}}) over GF(p).
  Ideal ambient;
  /// Generators of ker(A/(p, d^{p^{i+1}}) -> A/(p, d^{p^i})) modulo `ambient`.
  Ideal kernel;
};

ProjectionKernel projection_kernel(const PrismSpec& spec, unsigned i, const Limits& limits = {});

struct PillarLevel {
  unsigned level = 0;
  Polynomial generator;  // f_i, the class of d
  Ideal modulo;          // (J, phi^i(d))
};

struct PillarReport {
  std::vector<PillarLevel> levels;
  Polynomial unit_numerator;    // -delta(d)
  Polynomial unit_denominator;  // phi(delta(d))
  mpz_class denominator_residue;
  bool identity_verified = false;    // d^p + p delta(d) - phi(d) = 0
  bool congruence_verified = false;  // d^p + p delta(d) in (J, phi(d))
};

PillarReport pillars(const PrismSpec& spec, unsigned k, const Limits& limits = {});

struct TiltReport {
  RingPtr ring;  // GF(p)
  Ideal relations;
  std::optional<Polynomial> completion;  // d mod p, absent for crystalline
  std::string transition = "F";
  std::optional<std::string> extra_variable;
  /// Replaces ring and relations in to_string, e.g. GF(2)[|s^2, s^3|].
  std::optional<std::string> display;

  std::string to_string() const;
};

TiltReport tilt(const PrismSpec& spec);

enum class RootsKind { RootsOfP, RootsOfUnity };

struct RootsTower {
  std::vector<TowerLevel> levels;
  TiltReport tilt;
};

/// Base change of R = ZZ_(p)[vars]/J along the (p - T) or ([p]_q) prism.
/// With a semigroup the headers show the monomial algebra of H^{1/p^i}.
RootsTower adjoin_roots_tower(const RingPtr& ring, const Ideal& J, const FrobeniusLift& lift, RootsKind kind,
                              unsigned k, const std::optional<SemigroupSpec>& semigroup = std::nullopt,
                              const Limits& limits = {});

enum class AxiomMethod { ProvedByConstruction, Checked, OutOfScope };

std::string to_string(AxiomMethod m);

struct AxiomVerdict {
  char axiom = 'a';
  bool pass = true;
  AxiomMethod method = AxiomMethod::Checked;
  std::string detail;
  std::optional<unsigned> level;
  std::string witness;
};

struct AxiomCertificate {
  unsigned levels = 0;
  std::vector<AxiomVerdict> verdicts;
  std::vector<std::string> notes;

  bool all_pass() const;
  bool axiom_passes(char axiom) const;
};

AxiomCertificate axiom_certificate(const PrismSpec& spec, unsigned k, std::uint64_t seed = 1,
                                   const Limits& limits = {});

}  // namespace prismforge
