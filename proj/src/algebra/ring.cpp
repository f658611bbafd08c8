// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/algebra/ring.hpp"

#include <cctype>
#include <set>

#include "prismforge/algebra/monomial.hpp"
#include "prismforge/errors.hpp"

namespace prismforge {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

RingPtr RingContext::make(std::vector<std::string> variables, CoefficientDomain domain,
                          std::uint64_t prime, unsigned level) {
  if (variables.size() > kMaxVars) {
    throw UnsupportedError("more than " + std::to_string(kMaxVars) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (v == "p") throw InputError("'p' is reserved for the prime and cannot be a variable");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  if (domain.prime() != 0) {
    if (prime != 0 && prime != domain.prime()) {
      throw InputError("ring prime " + std::to_string(prime) + " disagrees with domain " +
                       domain.name());
    }
    prime = domain.prime();
  } else if (prime != 0 && !is_prime(prime)) {
    throw InputError(std::to_string(prime) + " is not prime");
  }
  if (level != 0 && prime == 0) throw InputError("fractional level needs a prime");
  return RingPtr(new RingContext(std::move(variables), domain, prime, level));
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr RingContext::with_domain(const CoefficientDomain& domain) const {
  std::uint64_t p = domain.prime() != 0 ? domain.prime() : prime_;
  return make(vars_, domain, p, level_);
}

RingPtr RingContext::with_level(unsigned level) const { return make(vars_, domain_, prime_, level); }

RingPtr RingContext::with_variables(std::vector<std::string> variables) const {
  return make(std::move(variables), domain_, prime_, level_);
}

std::string RingContext::describe() const {
  std::string s = domain_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ", ";
    s += vars_[i];
  }
  return s + "]";
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw ContextMismatch(std::string(where) + ": " + a->describe() +
                                              " vs " + b->describe());
}

}  // namespace prismforge
