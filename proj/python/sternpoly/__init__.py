"""Stern polynomials B_n(t): exact arithmetic, congruence search, identities."""

import json

from ._core import (
    SternError,
    binary_string,
    conjecture_ids,
    count_real_roots,
    hyperbinary_poly,
    identity_names,
    is_solution,
    parse_index,
    pi,
    stern_degree,
    stern_number,
    stern_poly,
    stern_pretty,
)
from . import _core

__all__ = [
    "SternError",
    "binary_string",
    "conjecture_ids",
    "count_real_roots",
    "enumerate_solutions",
    "hyperbinary_poly",
    "identity_names",
    "is_solution",
    "mine_affine_families",
    "parse_index",
    "pi",
    "run_conjecture",
    "run_identity",
    "stern_degree",
    "stern_number",
    "stern_poly",
    "stern_pretty",
    "typo_ledger",
]


def enumerate_solutions(bound, r, m, exclude=(), workers=1):
    """Search report as a dict; ``solutions`` lists the counted odd n <= bound."""
    return json.loads(_core.enumerate_solutions_json(bound, r, m, list(exclude), workers))


def mine_affine_families(solutions, r, m, depth=4):
    return json.loads(_core.mine_json(list(solutions), r, m, depth))


def run_identity(name, grid="", workers=1):
    return json.loads(_core.run_identity_json(name, grid, workers))


def run_conjecture(conjecture_id, grid="", workers=1):
    return json.loads(_core.run_conjecture_json(conjecture_id, grid, workers))


def typo_ledger():
    return json.loads(_core.typo_ledger_json())
