"""Exact dense matrices: fraction-free determinants and nullspaces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numberfield import FieldElement, common_field


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple, ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
            raise ValueError("matrix must be rectangular and nonempty")
        field = common_field(x for r in rows for x in r)
        if field.degree > 1:
            rows = tuple(tuple(field(x) for x in r) for r in rows)
        return cls(rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n = self.rows
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i)
        )

    def det(self):
        return det_exact(self.entries)


def det_exact(m):
    """Determinant by Bareiss elimination with full pivoting.

    Works for entries in any exact field (``Fraction`` or
    :class:`FieldElement`); every division is exact.
    """
    if isinstance(m, ExactMatrix):
        m = m.entries
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next(((i, j) for i in range(k, n) for j in range(k, n) if a[i][j]), None)
            if pivot is None:
                return a[k][k] * 0
            i, j = pivot
            if i != k:
                a[k], a[i] = a[i], a[k]
                sign = -sign
            if j != k:
                for row in a:
                    row[k], row[j] = row[j], row[k]
                sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) / prev
            row_i[k] = akk * 0
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def cofactor_det(m):
    """Laplace expansion along the first row (reference implementation)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def rref(m: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def nullspace(m: Sequence[Sequence]) -> list[list]:
    """Basis of the right nullspace of ``m`` (list of column vectors)."""
    if not m:
        return []
    cols = len(m[0])
    a, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(v)
    return basis


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), 0 * a[0][0])
             for j in range(len(b[0]))] for i in range(len(a))]
