// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/algebra/coefficient.hpp"

namespace prismforge {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Variables, coefficient domain, fractional display level and the prime
/// that the literal `p` denotes. Immutable; compared by value.
class RingContext {
 public:
  static RingPtr make(std::vector<std::string> variables, CoefficientDomain domain,
                      std::uint64_t prime = 0, unsigned level = 0);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const CoefficientDomain& domain() const noexcept { return domain_; }
  unsigned level() const noexcept { return level_; }
  /// Prime attached to the ring; 0 when none (then `p` cannot be parsed).
  std::uint64_t prime() const noexcept { return prime_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  RingPtr with_domain(const CoefficientDomain& domain) const;
  RingPtr with_level(unsigned level) const;
  RingPtr with_variables(std::vector<std::string> variables) const;

  std::string describe() const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.vars_ == b.vars_ && a.domain_ == b.domain_ && a.level_ == b.level_ &&
           a.prime_ == b.prime_;
  }

 private:
  RingContext(std::vector<std::string> v, CoefficientDomain d, std::uint64_t p, unsigned l)
      : vars_(std::move(v)), domain_(d), level_(l), prime_(p) {}

  std::vector<std::string> vars_;
  CoefficientDomain domain_;
  unsigned level_;
  std::uint64_t prime_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

bool is_identifier(const std::string& s);

}  // namespace prismforge
