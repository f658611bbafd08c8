# Copyright 2026 The prismforge Authors
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

import json

from ._core import (
    Error,
    HypothesisFailed,
    Inconclusive,
    InputError,
    NotStabilized,
    ResourceExceeded,
    beta_poly,
    check_prism,
    delta,
    fermat_sum,
    is_reduced,
    run,
    simplicial_rank,
    stabilize,
    toric_ideal,
    tower,
)

__all__ = [
    "Error",
    "HypothesisFailed",
    "Inconclusive",
    "InputError",
    "NotStabilized",
    "ResourceExceeded",
    "beta_poly",
    "check_prism",
    "delta",
    "fermat_sum",
    "is_reduced",
    "report",
    "run",
    "simplicial_rank",
    "stabilize",
    "toric_ideal",
    "tower",
]


def report(*args):
    """Runs a CLI command with JSON output and returns (exit_code, report)."""
    code, out, _ = run(["--format", "json", *args])
    return code, json.loads(out)
