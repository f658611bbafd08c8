// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prismforge {

/// Broad failure classes. The CLI maps them onto exit codes.
enum class ErrorKind {
  Input,         // malformed input, invalid lift, unsupported request (exit 2)
  Resource,      // pair/degree caps, iteration caps (exit 3)
  Inconclusive,  // a check could not be decided within its method (exit 3)
  Hypothesis,    // a theorem hypothesis failed and the run was not forced (exit 1)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ContextMismatch : public InputError {
 public:
  explicit ContextMismatch(const std::string& what)
      : InputError("ring context mismatch: " + what) {}
};

class NotDivisible : public InputError {
 public:
  NotDivisible(const std::string& coefficient, const std::string& monomial)
      : InputError("coefficient " + coefficient + " of monomial " + monomial +
                   " is not divisible"),
        coefficient_(coefficient),
        monomial_(monomial) {}
  const std::string& coefficient() const noexcept { return coefficient_; }
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string coefficient_;
  std::string monomial_;
};

class InvalidLift : public InputError {
 public:
  InvalidLift(const std::string& variable, const std::string& witness)
      : InputError("invalid Frobenius lift at variable " + variable +
                   ": coefficient " + witness + " of phi(x) - x^p is not divisible by p"),
        variable_(variable),
        witness_(witness) {}
  const std::string& variable() const noexcept { return variable_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string variable_;
  std::string witness_;
};

class NotPhiMonomial : public InputError {
 public:
  explicit NotPhiMonomial(const std::string& monomial)
      : InputError("monomial " + monomial + " is not a phi-monomial under the given lift"),
        monomial_(monomial) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

class UnsupportedError : public InputError {
 public:
  explicit UnsupportedError(const std::string& what) : InputError("unsupported: " + what) {}
};

class ResourceExceeded : public Error {
 public:
  explicit ResourceExceeded(const std::string& what)
      : Error(ErrorKind::Resource, "resource bound exceeded: " + what) {}
};

class NotStabilized : public Error {
 public:
  explicit NotStabilized(unsigned max_iter)
      : Error(ErrorKind::Resource,
              "delta-stabilization did not terminate within " + std::to_string(max_iter) +
                  " iterations"),
        max_iter_(max_iter) {}
  unsigned max_iter() const noexcept { return max_iter_; }

 private:
  unsigned max_iter_;
};

class Inconclusive : public Error {
 public:
  Inconclusive(const std::string& what, std::string element)
      : Error(ErrorKind::Inconclusive, "inconclusive: " + what), element_(std::move(element)) {}
  const std::string& element() const noexcept { return element_; }

 private:
  std::string element_;
};

class HypothesisFailed : public Error {
 public:
  HypothesisFailed(const std::string& component, const std::string& detail, std::string witness)
      : Error(ErrorKind::Hypothesis, "hypothesis " + component + " failed: " + detail),
        component_(component),
        witness_(std::move(witness)) {}
  const std::string& component() const noexcept { return component_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string component_;
  std::string witness_;
};

}  // namespace prismforge
