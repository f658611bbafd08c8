// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/prism.hpp"

namespace prismforge::cli {

/// Parsed ring-spec file. Keys: p, vars, frobenius, ideal, orientation,
/// flavor, semigroup, shift.
struct SpecFile {
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  /// Empty means the monomial lift.
  std::map<std::string, std::string> frobenius;
  std::vector<std::string> ideal;
  std::optional<std::string> orientation;
  PrismFlavor flavor = PrismFlavor::Zariskian;
  std::optional<std::vector<std::vector<long>>> semigroup;
  std::map<std::string, std::string> shift;
};

/// Flat `key = value` lines; values are integers, "strings", [arrays] (may
/// span lines) and {inline = "tables"}. '#' starts a comment.
SpecFile parse_spec(const std::string& text);
SpecFile load_spec(const std::string& path);

/// Integer matrix literal such as [[1,0],[1,1]] or [2, 3].
std::vector<std::vector<long>> parse_matrix(const std::string& text);

RingPtr spec_ring(const SpecFile& spec);
FrobeniusLift spec_lift(const SpecFile& spec, const RingPtr& ring);
Ideal spec_ideal(const SpecFile& spec, const RingPtr& ring);
/// Throws InputError when a zariskian spec has no orientation.
PrismSpec spec_prism(const SpecFile& spec);

/// Entry point shared by the executable and the tests. Returns the exit code:
/// 0 success, 1 failed hypothesis, 2 input error, 3 resource bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prismforge::cli
