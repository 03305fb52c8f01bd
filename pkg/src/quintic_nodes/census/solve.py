"""Exact solution of one multiplicity pattern.

A singular point with distinct values v_1..v_k (multiplicities m_1..m_k)
satisfies sum m_i v_i = 0 and, when k = 4, sum v_i = 0 (the four values are
then all the roots of the root quartic, which has no cubic term).  The
admissible value vectors form a linear space L.  Projectively L is a point,
a line or (only for four equal multiplicities) a plane.

On a projective line the chart v = s*u + w (w_i = 1, u_i = 0 for a chosen
block i) covers everything except the single point u.  Each condition
P(v_k) = 0 is linear in lambda:  A_k(s)*lambda + B_k(s) = 0.  The rows
(A_k, B_k) must have rank <= 1, so all 2x2 minors vanish.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from ..exactnum import (
    QQ,
    FieldElement,
    NumberField,
    Poly,
    nullspace,
    poly_factor,
    poly_gcd,
    poly_gcd_many,
)
from ..exactnum.numberfield import FieldError

Pattern = tuple


class SolverError(RuntimeError):
    """A residual polynomial could not be handled exactly."""


def enumerate_patterns(n: int) -> list[Pattern]:
    """Partitions of n+2 into at most four parts, largest parts first."""
    if n < 2:
        raise ValueError("n must be at least 2")
    total = n + 2
    out = []

    def rec(remaining, max_part, parts):
        if remaining == 0:
            out.append(tuple(parts))
            return
        if len(parts) == 4:
            return
        for p in range(min(remaining, max_part), 0, -1):
            rec(remaining - p, p, parts + [p])

    rec(total, total, [])
    return sorted(out, reverse=True)


def block_symmetry_order(pattern: Pattern) -> int:
    """Order of the group permuting blocks of equal multiplicity."""
    counts = {}
    for m in pattern:
        counts[m] = counts.get(m, 0) + 1
    return prod(factorial(c) for c in counts.values())


def arrangements(pattern: Pattern) -> int:
    """(n+2)! / prod m_i!"""
    return factorial(sum(pattern)) // prod(factorial(m) for m in pattern)


def block_permutations(pattern: Pattern) -> list[tuple[int, ...]]:
    """All permutations of block indices preserving multiplicities."""
    from itertools import permutations

    k = len(pattern)
    return [pi for pi in permutations(range(k)) if all(pattern[pi[i]] == pattern[i] for i in range(k))]


# ---------------------------------------------------------------------------
# branch records


@dataclass
class IsolatedSolution:
    """A Galois orbit of projective solutions over Q[s]/(q).

    ``lam`` is None when the point is singular for every parameter.
    ``count`` is the number of projective solutions (= deg q).
    """

    pattern: Pattern
    values: tuple
    lam: FieldElement | None
    count: int

    @property
    def field(self) -> NumberField:
        for v in self.values:
            if isinstance(v, FieldElement):
                return v.field
        return QQ


@dataclass
class GenericCurve:
    """Solutions v(s) with a(s)*lambda + b(s) = 0 for every lambda."""

    pattern: Pattern
    values: tuple  # Polys in s
    a: Poly
    b: Poly
    chart_block: int


@dataclass
class ContinuousFamily:
    """A positive-dimensional singular locus at a fixed lambda."""

    pattern: Pattern
    basis: tuple  # basis vectors (Fractions) of the value space
    lam: Fraction

    @property
    def dimension(self) -> int:
        return len(self.basis) - 1


@dataclass
class PatternSolution:
    pattern: Pattern
    isolated: list[IsolatedSolution] = field(default_factory=list)
    curves: list[GenericCurve] = field(default_factory=list)
    continuous: list[ContinuousFamily] = field(default_factory=list)
    collapsed: int = 0  # solutions discarded because two values coincide


# ---------------------------------------------------------------------------
# root-quartic rows


def quartic_rows(n: int, pattern: Pattern, values: Sequence) -> list[tuple]:
    """Rows (A_k, B_k) with P(v_k) = A_k*lambda + B_k.

    ``values`` may be numbers, field elements or polynomials.
    """
    N = n + 2
    zero = values[0] * 0
    c2 = sum((m * v * v for m, v in zip(pattern, values)), zero)
    c3 = sum((m * v * v * v for m, v in zip(pattern, values)), zero)
    c4 = sum((m * (v * v) * (v * v) for m, v in zip(pattern, values)), zero)
    rows = []
    for v in values:
        v2 = v * v
        A = c2 * c2 / N - c2 * v2 - Fraction(2, 3) * c3 * v
        B = v2 * v2 - c4 / N
        rows.append((A, B))
    return rows


def _value_space(pattern: Pattern) -> list[list[Fraction]]:
    k = len(pattern)
    cons = [[Fraction(m) for m in pattern]]
    if k == 4:
        cons.append([Fraction(1)] * 4)
    return nullspace(cons)


def _distinct(values: Sequence) -> bool:
    for i in range(len(values)):
        for j in range(i):
            if not (values[i] - values[j]):
                return False
    return any(bool(v) for v in values)


def _solve_point(n: int, pattern: Pattern, values: Sequence, count: int, sol: PatternSolution) -> None:
    """Solve the rows at a single (possibly algebraic) point."""
    values = [v if isinstance(v, FieldElement) else QQ(v) for v in values]
    if not _distinct(values):
        sol.collapsed += 1
        return
    rows = quartic_rows(n, pattern, values)
    lam = None
    for A, B in rows:
        if A:
            lam = -B / A
            break
    if lam is None:
        if all(not B for _, B in rows):
            sol.isolated.append(IsolatedSolution(pattern, tuple(values), None, count))
        return
    if any(A * lam + B for A, B in rows):
        return
    sol.isolated.append(IsolatedSolution(pattern, tuple(values), lam, count))


def _roots_over_fields(p: Poly):
    """Yield (field, root, degree) for each irreducible factor of p."""
    fac = poly_factor(p)
    for f, _ in fac.factors:
        if f.degree == 1:
            yield QQ, QQ(-f.coeff(0)), 1
            continue
        try:
            K = NumberField(f, check=False)
        except FieldError as exc:
            raise SolverError(f"factor {f} of degree {f.degree} exceeds supported field degree") from exc
        yield K, K.gen, f.degree


def _line_chart(basis: list[list[Fraction]]) -> tuple[int, list[Fraction], list[Fraction]]:
    """Pick (i, u, w) spanning L with w_i = 1 and u_i = 0."""
    k = len(basis[0])
    for i in range(k):
        if any(b[i] for b in basis):
            break
    e1, e2 = basis
    if not e1[i]:
        e1, e2 = e2, e1
    w = [x / e1[i] for x in e1]
    u = [x - e2[i] * y for x, y in zip(e2, w)]
    j = next(idx for idx, x in enumerate(u) if x)
    u = [x / u[j] for x in u]
    w = [x - w[j] * y for x, y in zip(w, u)]
    return i, u, w


def _merge_isolated(pattern: Pattern, sol: PatternSolution, start: int, i: int, u) -> None:
    """Merge solution records exchanged by block permutations.

    A point with chart value v_i != 0 has chart parameter s = v_j / v_i,
    where j is the first index with u_j != 0; records are identified by
    the minimal polynomial of s (or by being the point u itself).
    """
    recs = sol.isolated[start:]
    if len(recs) < 2:
        return
    j = next(idx for idx, x in enumerate(u) if x)

    def key(values):
        if not values[i]:
            return ("inf",)
        return ("s", (values[j] / values[i]).minpoly().coeffs)

    index = {key(r.values): k for k, r in enumerate(recs)}
    parent = list(range(len(recs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, r in enumerate(recs):
        for pi in block_permutations(pattern):
            other = index.get(key([r.values[pi[t]] for t in range(len(pattern))]))
            if other is not None:
                parent[find(other)] = find(k)
    merged: dict[int, IsolatedSolution] = {}
    for k, r in enumerate(recs):
        root = find(k)
        if root in merged:
            merged[root].count += r.count
        else:
            merged[root] = IsolatedSolution(r.pattern, r.values, r.lam, r.count)
    sol.isolated[start:] = [merged[k] for k in sorted(merged)]


def _solve_line(n: int, pattern: Pattern, basis, sol: PatternSolution) -> None:
    i, u, w = _line_chart(basis)
    s = Poly.x()
    vals = [Poly((wk, uk)) for uk, wk in zip(u, w)]
    rows = quartic_rows(n, pattern, vals)

    start = len(sol.isolated)
    # the point u outside the chart
    _solve_point(n, pattern, [Fraction(x) for x in u], 1, sol)

    minors = [rows[p][0] * rows[q][1] - rows[q][0] * rows[p][1]
              for p in range(len(rows)) for q in range(p)]
    if any(minors):
        G = poly_gcd_many(minors)
        if G.degree < 1:
            return
        for K, root, deg in _roots_over_fields(G):
            _solve_point(n, pattern, [v(root) for v in vals], deg, sol)
        _merge_isolated(pattern, sol, start, i, u)
        return

    # rank <= 1 identically: rows are multiples of one primitive row (a, b)
    r = next(idx for idx, (A, B) in enumerate(rows) if A or B)
    A, B = rows[r]
    g = poly_gcd(A, B)
    a, b = A.exact_div(g), B.exact_div(g)
    weights = [(Ak.exact_div(a) if a else Bk.exact_div(b)) for Ak, Bk in rows]
    W = poly_gcd_many(weights)
    if W.degree >= 1:
        for K, root, deg in _roots_over_fields(W):
            values = [v(root) for v in vals]
            if not _distinct(values):
                sol.collapsed += 1
                continue
            sol.isolated.append(IsolatedSolution(pattern, tuple(values), None, deg))
    _merge_isolated(pattern, sol, start, i, u)
    if a.degree <= 0 and b.degree <= 0:
        if a:
            sol.continuous.append(ContinuousFamily(pattern, (tuple(u), tuple(w)), Fraction(-b.coeff(0) / a.coeff(0))))
        return
    sol.curves.append(GenericCurve(pattern, tuple(vals), a, b, i))


def _solve_equal_blocks(n: int, pattern: Pattern, sol: PatternSolution) -> None:
    """Four blocks of equal multiplicity m.

    Then P must equal prod (X - v_i).  With e1 = 0 the coefficient
    comparison reduces to e2*(1 - 2*m*lam) = 0 and e3*(1 - 2*m*lam) = 0,
    the constant term matching identically.  So either lam = 1/(2m) and
    the whole plane of value vectors is singular, or e2 = e3 = 0 and the
    values are the four roots of X^4 + e4, i.e. r*(1, i, -1, -i).
    """
    m = pattern[0]
    basis = _value_space(pattern)
    sol.continuous.append(ContinuousFamily(pattern, tuple(tuple(b) for b in basis), Fraction(1, 2 * m)))
    K = NumberField(Poly((1, 0, 1)), label="Q(i)")
    i = K.gen
    # the 24 orderings of (1, i, -1, -i) modulo the 4 scalars i^k
    sol.isolated.append(IsolatedSolution(pattern, (K.one, i, -K.one, -i), None, 6))


def solve_pattern(n: int, pattern: Pattern) -> PatternSolution:
    pattern = tuple(pattern)
    if sum(pattern) != n + 2 or not 1 <= len(pattern) <= 4:
        raise ValueError(f"{pattern} is not a pattern for n = {n}")
    sol = PatternSolution(pattern)
    basis = _value_space(pattern)
    dim = len(basis)
    if dim == 0:
        return sol  # only the zero vector: all coordinates equal
    if dim == 1:
        _solve_point(n, pattern, basis[0], 1, sol)
    elif dim == 2:
        _solve_line(n, pattern, basis, sol)
    else:
        _solve_equal_blocks(n, pattern, sol)
    return sol
