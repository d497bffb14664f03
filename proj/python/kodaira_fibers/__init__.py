"""Kodaira type calculus for singular fibers of abelian fibrations."""

import json

from ._kodaira import (
    DomainError,
    base_change,
    canonical_type,
    cokernel,
    enumerate_balanced,
    multiple_fiber_types,
    parse_automorphism,
    pi0,
    quotient_type,
    recipe_ids,
    run_recipe,
    semistable_reduction,
    table_ids,
    validate,
)
from ._kodaira import emit_table_json as _emit_table_json

__all__ = [
    "DomainError",
    "base_change",
    "canonical_type",
    "cokernel",
    "emit_table",
    "enumerate_balanced",
    "multiple_fiber_types",
    "parse_automorphism",
    "pi0",
    "quotient_type",
    "recipe_ids",
    "run_recipe",
    "semistable_reduction",
    "table_ids",
    "validate",
]


def emit_table(table_id):
    """Rows of a classification table as a list of dicts."""
    return json.loads(_emit_table_json(table_id))
