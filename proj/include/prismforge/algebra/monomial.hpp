// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace prismforge {

inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector with cached total degree and support mask.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, const std::vector<unsigned>& exps);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned exponent = 1);

  std::size_t nvars() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }
  std::uint32_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, unsigned value);

  bool divides(const Monomial& other) const noexcept {
    if (mask_ & ~other.mask_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse: returns this / other.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::vector<unsigned> exponents() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.mask_ == b.mask_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace prismforge
