// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>

namespace prismforge {

/// Counters shared by every basis computation that sees the same Limits.
struct Stats {
  std::atomic<std::uint64_t> pairs{0};
  std::atomic<std::uint64_t> bases{0};
};

/// Resource caps for basis computations. Exceeding either throws
/// ResourceExceeded. The degree cap never drops below the largest input
/// degree of the computation it governs.
struct Limits {
  std::size_t max_pairs = 50000;
  unsigned max_degree = 64;
  std::shared_ptr<Stats> stats;
};

}  // namespace prismforge
