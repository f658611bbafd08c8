// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "prismforge/algebra/monomial.hpp"

#include <algorithm>
#include <limits>

#include "prismforge/errors.hpp"

namespace prismforge {

namespace {

constexpr unsigned kMaxExp = std::numeric_limits<std::uint16_t>::max();

std::uint16_t checked(unsigned long long v) {
  if (v > kMaxExp) throw ResourceExceeded("exponent " + std::to_string(v) + " exceeds 65535");
  return static_cast<std::uint16_t>(v);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw UnsupportedError("too many variables");
}

Monomial::Monomial(std::size_t nvars, const std::vector<unsigned>& exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw InputError("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) e_[i] = checked(exps[i]);
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned exponent) {
  Monomial m(nvars);
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  e_[i] = checked(value);
  refresh();
}

void Monomial::refresh() noexcept {
  deg_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    deg_ += e_[i];
    if (e_[i]) mask_ |= (1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = checked(unsigned(e_[i]) + o.e_[i]);
  r.deg_ = deg_ + o.deg_;
  r.mask_ = mask_ | o.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = checked(static_cast<unsigned long long>(e_[i]) * k);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

std::vector<unsigned> Monomial::exponents() const { return {e_.begin(), e_.begin() + n_}; }

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace prismforge
