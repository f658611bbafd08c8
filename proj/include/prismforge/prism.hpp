// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/charp.hpp"
#include "prismforge/delta.hpp"

namespace prismforge {

enum class PrismFlavor { Zariskian, Crystalline };

std::string to_string(PrismFlavor f);

/// (A, (d)) with A = ZZ_(p)[vars]/J localized at (p, vars) or, for the
/// crystalline flavor, d = p.
struct PrismSpec {
  RingPtr ring;  // ZZ with prime p
  Ideal J;
  FrobeniusLift lift;
  Polynomial d;
  PrismFlavor flavor = PrismFlavor::Zariskian;
  /// Recentres the maximal ideal: variable -> polynomial over shift_ring,
  /// e.g. q -> 1 + u. Unlisted variables map to themselves.
  std::map<std::string, Polynomial> shift;
  RingPtr shift_ring;

  std::uint64_t prime() const { return ring->prime(); }
};

/// Builds a spec and validates the lift. Crystalline specs get d = p.
PrismSpec make_prism(RingPtr ring, std::vector<Polynomial> J, FrobeniusLift lift,
                     std::optional<Polynomial> d, PrismFlavor flavor = PrismFlavor::Zariskian,
                     const std::map<std::string, std::string>& shift = {});

/// (ZZ_(p)[T], (p - T)) with delta(T) = 0.
PrismSpec t_prism(std::uint64_t p);
/// (ZZ_(p)[q], ([p]_q)) with phi(q) = q^p, localized at (p, q - 1).
PrismSpec q_prism(std::uint64_t p);

/// f at the (shifted) origin, reduced into [0, p).
mpz_class local_residue(const Polynomial& f, const PrismSpec& spec);

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string witness;
  std::string method;
};

struct HypothesisCertificate {
  Verdict delta_stable;
  Verdict orientation;
  std::optional<Verdict> distinguished;
  std::optional<Verdict> p_torsion_free;
  std::optional<Verdict> d_nzd_mod_p;
  std::optional<RootClosureCertificate> root_closed;
  bool overall = false;
  std::vector<std::string> notes;

  std::vector<Verdict> verdicts() const;
  /// First failing component, if any.
  std::optional<Verdict> first_failure() const;
};

HypothesisCertificate validate_preprism(const PrismSpec& spec, const Limits& limits = {});
Verdict distinguished_unit_check(const PrismSpec& spec);
std::pair<Verdict, Verdict> transversal_check(const PrismSpec& spec, const Limits& limits = {});
HypothesisCertificate theorem_hypotheses(const PrismSpec& spec, unsigned k = 3, const Limits& limits = {});

/// J mod p in GF(p)[vars].
Ideal reduce_ideal(const Ideal& J, std::uint64_t p);

struct SemigroupSpec {
  std::size_t dim = 0;
  std::vector<std::vector<long>> generators;
  /// Names of the ambient monomials, t1..tn when empty.
  std::vector<std::string> ambient;

  std::vector<std::string> ambient_names() const;
};

SemigroupSpec make_semigroup(std::vector<std::vector<long>> generators,
                             std::vector<std::string> ambient = {});

struct ToricPresentation {
  RingPtr ring;  // ZZ[u1..ur] with prime p
  Ideal ideal;
  FrobeniusLift lift;
  /// u_j -> t^{a_j} in ZZ[ambient].
  std::map<std::string, Polynomial> parametrization;
};

ToricPresentation toric_ideal(const SemigroupSpec& sg, std::uint64_t p, const Limits& limits = {});

struct SimplicialRank {
  unsigned rank = 0;
  bool simplicial = false;
  /// Indices of an extremal subset when simplicial.
  std::vector<std::size_t> extremal;
};

SimplicialRank simplicial_rank(const SemigroupSpec& sg);

struct GenericDegree {
  unsigned rank = 0;
  mpz_class degree;      // p^rank
  mpz_class transition;  // p * degree
};

GenericDegree generic_degree_monomial(const PrismSpec& spec);
GenericDegree generic_degree_monomial(const SemigroupSpec& sg, std::uint64_t p);

}  // namespace prismforge
