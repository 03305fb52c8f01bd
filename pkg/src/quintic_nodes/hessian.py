"""Hessian criterion for ordinary nodes in an affine chart.

The chart sets one nonzero coordinate to 1 and eliminates the last
coordinate through x_last = -h(x).  Second partials of the chart equation
come from the closed-form ambient second partials of
F = C5/5 - (lam/3) C2 C3 by the chain rule

    f_ij = F_ij - F_i,last - F_last,j + F_last,last.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import ExactMatrix, FieldError, det_exact
from .pencil import PencilParam, SymPoint

NODE = "node"
NOT_NODE = "not-node"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class ChartPoint:
    n: int
    chart_index: int
    coords: tuple

    def homogeneous(self) -> list:
        """Full coordinates with the chart entry 1 and the last entry -h."""
        full = list(self.coords)
        full.insert(self.chart_index, Fraction(1))
        full.append(-sum(full, Fraction(0)))
        return full


@dataclass(frozen=True)
class HessianResult:
    matrix: ExactMatrix
    determinant: object

    @property
    def is_node(self) -> bool:
        return bool(self.determinant)


def chart_reduce(pt: SymPoint) -> ChartPoint:
    full = pt.arrangement()
    idx = next(i for i, v in enumerate(full) if v)
    scale = 1 / full[idx]
    full = [v * scale for v in full]
    coords = full[:idx] + full[idx + 1:-1]
    return ChartPoint(pt.n, idx, tuple(coords))


def ambient_second_partials(x: Sequence, lam):
    """Closure computing d^2 F / dx_i dx_j for F = C5/5 - (lam/3) C2 C3."""
    c2 = sum((v * v for v in x), Fraction(0))
    c3 = sum((v * v * v for v in x), Fraction(0))
    cubes = [v * v * v for v in x]
    diag = [4 * cu - lam * (2 * c3 + 6 * v * c2) / 3 - 4 * lam * cu for v, cu in zip(x, cubes)]

    def second(i: int, j: int):
        if i == j:
            return diag[i]
        xi, xj = x[i], x[j]
        return -2 * lam * xi * xj * (xi + xj)

    return second


def chart_hessian(full: Sequence, chart_index: int, lam) -> list[list]:
    """Hessian of the chart equation at the homogeneous point ``full``
    (which must already have the chart coordinate equal to 1)."""
    N = len(full)
    last = N - 1
    free = [i for i in range(N) if i != chart_index and i != last]
    F = ambient_second_partials(full, lam)
    col_last = {i: F(i, last) for i in free}
    f_ll = F(last, last)
    rows = []
    for i in free:
        row = []
        for j in free:
            row.append(F(i, j) - col_last[i] - col_last[j] + f_ll)
        rows.append(row)
    return rows


def hessian_at(n: int, y: ChartPoint, p: PencilParam) -> HessianResult:
    if not p.alpha:
        raise ValueError("the Hessian criterion needs alpha != 0")
    if y.n != n:
        raise ValueError("chart point dimension mismatch")
    m = chart_hessian(y.homogeneous(), y.chart_index, p.lam)
    matrix = ExactMatrix.of(m)
    return HessianResult(matrix, det_exact(matrix.entries))


def hessian_det_at(full: Sequence, lam):
    """Determinant of the chart Hessian at an unnormalized homogeneous point."""
    idx = next(i for i, v in enumerate(full) if v)
    scale = 1 / full[idx]
    full = [v * scale for v in full]
    return det_exact(chart_hessian(full, idx, lam))


def verify_orbit_nodes(pt: SymPoint, p: PencilParam) -> str:
    """Node status of a whole orbit from one representative.

    For a representative over Q[t]/(q) a nonzero determinant certifies
    every conjugate point at once.
    """
    try:
        result = hessian_at(pt.n, chart_reduce(pt), p)
    except FieldError:
        return UNVERIFIED
    return NODE if result.is_node else NOT_NODE
