// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "prismforge/algebra/polynomial.hpp"

namespace prismforge {

/// expr   := ['-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := atom ('^' uint)?
/// atom   := int ['/' int] | 'p' | ident | '(' expr ')'
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace prismforge
