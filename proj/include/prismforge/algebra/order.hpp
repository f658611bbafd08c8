// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "prismforge/algebra/monomial.hpp"

namespace prismforge {

/// lex, grevlex, or a two-block elimination order. In the elimination order
/// the first `block` variables form block 1; each block is compared by degree
/// and then lexicographically by variable index, block 1 first.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder elimination(unsigned block) { return MonomialOrder(Kind::Elimination, block); }

  Kind kind() const noexcept { return kind_; }
  unsigned block() const noexcept { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, unsigned b) : kind_(k), block_(b) {}
  Kind kind_;
  unsigned block_;
};

/// Parses "lex" or "grevlex".
MonomialOrder parse_order(const std::string& name);

}  // namespace prismforge
