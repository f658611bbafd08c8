// Copyright 2026 The prismforge Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "prismforge/cli.hpp"

int main(int argc, char** argv) {
  return prismforge::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
