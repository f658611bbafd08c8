// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/algebra/order.hpp"

#include "prismforge/errors.hpp"

namespace prismforge {

namespace {

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

unsigned degree_range(const Monomial& m, std::size_t lo, std::size_t hi) {
  unsigned d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, n);
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Elimination: {
      const std::size_t k = block_ < n ? block_ : n;
      unsigned da = degree_range(a, 0, k), db = degree_range(b, 0, k);
      if (da != db) return da < db ? -1 : 1;
      if (int c = lex_range(a, b, 0, k)) return c;
      da = a.degree() - da;
      db = b.degree() - db;
      if (da != db) return da < db ? -1 : 1;
      return lex_range(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw InputError("unknown monomial order '" + name + "'");
}

}  // namespace prismforge
