"""Factorization of rational polynomials of small degree.

Linear factors come from the rational-root test, quartics are split by
undetermined coefficients.  A residual of degree five or more is searched
for factors by grouping high-precision complex roots; every candidate is
confirmed by exact division, so numerics can only cause a factor to be
missed, never invented.  Such residuals are flagged on the result.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .poly import Poly, squarefree_decomposition


@dataclass
class Factorization:
    constant: Fraction
    factors: list[tuple[Poly, int]]
    # factors of degree >= 5 whose irreducibility rests on the numeric search
    flagged: list[Poly] = field(default_factory=list)

    def expand(self) -> Poly:
        p = Poly((self.constant,))
        for f, m in self.factors:
            p = p * f ** m
        return p


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of a nonzero rational polynomial."""
    if not p:
        raise ValueError("zero polynomial")
    roots = []
    # strip the root 0 first so the constant term is nonzero
    k = 0
    while k < len(p.coeffs) and not p.coeffs[k]:
        k += 1
    if k:
        roots.append(Fraction(0))
        p = Poly(p.coeffs[k:])
    if p.degree < 1:
        return roots
    _, prim = p.content_primitive()
    ints = prim.integer_coeffs()
    a0, an = ints[0], ints[-1]
    # Cauchy bound prunes candidates that cannot be roots
    bound = 1 + max(abs(Fraction(c, an)) for c in ints[:-1])
    for q in _divisors(an):
        for num in _divisors(a0):
            for cand in (Fraction(num, q), Fraction(-num, q)):
                if abs(cand) > bound or cand in roots:
                    continue
                if not prim(cand):
                    roots.append(cand)
    return sorted(roots)


def _monic_integer(p: Poly) -> tuple[Poly, int]:
    """Return (g, a) with g monic integral and p(x) ~ g(a*x)."""
    _, prim = p.content_primitive()
    ints = prim.integer_coeffs()
    a = ints[-1]
    d = len(ints) - 1
    g = [ints[k] * a ** (d - 1 - k) for k in range(d)] + [1]
    return Poly(g), a


def split_quartic(p: Poly) -> tuple[Poly, Poly] | None:
    """Find a rational quadratic*quadratic split of a quartic with no
    rational roots, or None if it is irreducible over Q."""
    if p.degree != 4:
        raise ValueError("quartic expected")
    g, a = _monic_integer(p)
    s, r, q, pp = (int(c) for c in g.coeffs[:4])
    # g = (x^2 + u x + b)(x^2 + w x + d), b*d = s
    for b in _divisors(s) + [-d for d in _divisors(s)]:
        d = s // b
        if d != b:
            num = r - b * pp
            if num % (d - b):
                continue
            u = num // (d - b)
            w = pp - u
            if b + d + u * w != q:
                continue
        else:
            if r != b * pp:
                continue
            disc = pp * pp - 4 * (q - 2 * b)
            if disc < 0 or isqrt(disc) ** 2 != disc:
                continue
            rt = isqrt(disc)
            if (pp + rt) % 2:
                continue
            u, w = (pp + rt) // 2, (pp - rt) // 2
        f1 = Poly((b, u, 1))
        f2 = Poly((d, w, 1))
        # undo x -> a*x scaling
        back = Poly((0, Fraction(a)))
        f1 = f1(back).monic()
        f2 = f2(back).monic()
        return f1, f2
    return None


def _numeric_split(p: Poly, dps: int = 60) -> tuple[Poly, Poly] | None:
    """Search for a proper factor of a squarefree rational polynomial by
    grouping its complex roots; only exact divisors are returned."""
    import mpmath

    _, prim = p.content_primitive()
    ints = prim.integer_coeffs()
    lead = ints[-1]
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(ints[::-1], maxsteps=400, extraprec=4 * dps)
        d = len(roots)
        for k in range(1, d // 2 + 1):
            for subset in combinations(range(d), k):
                c = [mpmath.mpc(1)]
                for i in subset:
                    r = roots[i]
                    c = [mpmath.mpc(0)] + c
                    for j in range(len(c) - 1):
                        c[j] -= r * c[j + 1]
                scaled = [lead * x for x in c]
                if any(abs(x.imag) > mpmath.mpf(10) ** (-dps // 3) for x in scaled):
                    continue
                cand_ints = [int(mpmath.nint(x.real)) for x in scaled]
                if any(abs(x.real - n) > mpmath.mpf(10) ** (-dps // 3)
                       for x, n in zip(scaled, cand_ints)):
                    continue
                cand = Poly(Fraction(n, lead) for n in cand_ints)
                q, r = divmod(p, cand)
                if not r:
                    return cand.monic(), q.monic()
    return None


def _split_squarefree(p: Poly, out: list[Poly], flagged: list[Poly]) -> None:
    p = p.monic()
    if p.degree <= 0:
        return
    for root in rational_roots(p):
        lin = Poly((-root, 1))
        out.append(lin)
        p = p.exact_div(lin)
    if p.degree <= 0:
        return
    if p.degree <= 3:
        out.append(p)
        return
    if p.degree == 4:
        split = split_quartic(p)
        if split is None:
            out.append(p)
        else:
            out.extend(split)
        return
    split = _numeric_split(p)
    if split is None:
        out.append(p)
        flagged.append(p)
        return
    for part in split:
        _split_squarefree(part, out, flagged)


def _sort_key(f: Poly):
    return (f.degree, tuple(Fraction(c) for c in reversed(f.coeffs)))


def poly_factor(p: Poly) -> Factorization:
    """Factor a nonzero rational polynomial into monic irreducibles."""
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    constant = Fraction(p.lc)
    if p.degree == 0:
        return Factorization(constant, [])
    factors: list[tuple[Poly, int]] = []
    flagged: list[Poly] = []
    for part, mult in squarefree_decomposition(p):
        pieces: list[Poly] = []
        _split_squarefree(part, pieces, flagged)
        factors.extend((f, mult) for f in pieces)
    factors.sort(key=lambda fm: (_sort_key(fm[0]), fm[1]))
    return Factorization(constant, factors, flagged)


def is_irreducible(p: Poly) -> bool:
    fac = poly_factor(p)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1 and not fac.flagged
