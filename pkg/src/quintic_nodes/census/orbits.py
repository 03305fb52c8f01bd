"""Orbit lengths and line counts under the coordinate permutation group."""
from __future__ import annotations

from typing import Sequence

from .solve import (
    ContinuousFamily,
    GenericCurve,
    Pattern,
    arrangements,
    block_permutations,
    block_symmetry_order,
)


def scalar_symmetry(pattern: Pattern, values: Sequence) -> int:
    """Number of scalars sigma for which sigma*values is a block permutation
    of values (values may be field elements or polynomials)."""
    t = next(i for i, v in enumerate(values) if v)
    count = 0
    for pi in block_permutations(pattern):
        vt, wt = values[t], values[pi[t]]
        if all(not (values[pi[r]] * vt - wt * values[r]) for r in range(len(values))):
            count += 1
    return count


def orbit_length(pattern: Pattern, values: Sequence) -> int:
    """Distinct projective points in the orbit of one solution."""
    return arrangements(pattern) // scalar_symmetry(pattern, values)


def curve_orbit_length(curve: GenericCurve) -> int:
    """Orbit length at a generic point of a one-parameter family."""
    return orbit_length(curve.pattern, curve.values)


def points_per_solution(pattern: Pattern) -> int:
    """Projective points contributed by one solution in P(L), averaged over
    a permutation-stable solution set: (n+2)! / (prod m! * |G|)."""
    return arrangements(pattern) // block_symmetry_order(pattern)


def line_count(family: ContinuousFamily) -> int:
    """Number of distinct images of a positive-dimensional family.

    The value space is stable under permutations of equal-multiplicity
    blocks, so each block permutation maps the family onto itself.
    """
    return points_per_solution(family.pattern)
