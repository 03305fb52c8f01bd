"""The symmetric quintic pencil alpha*S5 + beta*S2*S3 on the hyperplane S1 = 0.

Points are handled through their distinct coordinate values and the
multiplicity of each value, so every evaluation costs O(#values).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .exactnum import QQ, FieldElement, Poly, common_field


def _fe(x, field=QQ) -> FieldElement:
    return field(x)


@dataclass(frozen=True)
class PencilParam:
    """A point (alpha : beta) of the parameter line, stored normalized."""

    alpha: FieldElement
    beta: FieldElement

    def __init__(self, alpha, beta):
        field = common_field([alpha, beta])
        a, b = _fe(alpha, field), _fe(beta, field)
        if not a and not b:
            raise ValueError("(0 : 0) is not a point of P^1")
        a, b = _normalize(a, b)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def from_lambda(cls, lam) -> "PencilParam":
        """The parameter with (alpha + beta) / (2 alpha) = lam."""
        lam = _fe(lam, common_field([lam]))
        return cls(lam.field.one, 2 * lam - 1)

    @property
    def field(self):
        return common_field([self.alpha, self.beta])

    @property
    def lam(self) -> FieldElement:
        if not self.alpha:
            raise ZeroDivisionError("lambda is undefined for alpha = 0")
        return (self.alpha + self.beta) / (2 * self.alpha)

    @property
    def ratio(self) -> FieldElement:
        """beta / alpha."""
        return self.beta / self.alpha

    def is_rational(self) -> bool:
        return self.alpha.is_rational() and self.beta.is_rational()

    def sort_key(self):
        if self.is_rational():
            return (0, self.alpha.to_rational(), self.beta.to_rational())
        mp = self.ratio.minpoly()
        return (1, mp.degree, tuple(Fraction(c) for c in reversed(mp.coeffs)), self.beta.coords)

    def __str__(self):
        if self.is_rational():
            return f"({self.alpha.to_rational()} : {self.beta.to_rational()})"
        return f"({self.alpha} : {self.beta})"

    __repr__ = __str__


def _normalize(a: FieldElement, b: FieldElement) -> tuple[FieldElement, FieldElement]:
    field = a.field
    one = field.one
    if not a:
        return a * 0, one
    t = b / a
    if t.is_rational():
        q = t.to_rational()
        return field(q.denominator), field(q.numerator)
    den = lcm(*(c.denominator for c in t.coords))
    # keep the integer multiple primitive
    nums = [int(c * den) for c in t.coords]
    g = gcd(den, *nums)
    den //= g
    return field(den), t * den


@dataclass(frozen=True)
class PowerSums:
    n: int
    c1: object
    c2: object
    c3: object
    c4: object
    c5: object


@dataclass(frozen=True)
class SymPoint:
    """A point of P^n given by distinct values and their multiplicities."""

    values: tuple
    mults: tuple[int, ...]

    def __init__(self, values: Sequence, mults: Sequence[int], check: bool = True):
        vals = tuple(Fraction(v) if isinstance(v, int) else v for v in values)
        ms = tuple(int(m) for m in mults)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "mults", ms)
        if check:
            self.validate()

    def validate(self) -> None:
        if len(self.values) != len(self.mults) or not self.values:
            raise ValueError("values and multiplicities must match")
        if len(self.values) > 4:
            raise ValueError("at most four distinct values can occur")
        if any(m <= 0 for m in self.mults):
            raise ValueError("multiplicities must be positive")
        if sum(m * v for m, v in zip(self.mults, self.values)):
            raise ValueError("coordinates must sum to zero")
        for i in range(len(self.values)):
            for j in range(i):
                if self.values[i] == self.values[j] or not (self.values[i] - self.values[j]):
                    raise ValueError("values must be pairwise distinct")
        if all(not v for v in self.values):
            raise ValueError("the zero vector is not a projective point")

    @property
    def n(self) -> int:
        return sum(self.mults) - 2

    def arrangement(self) -> list:
        """Homogeneous coordinates, block by block."""
        out = []
        for v, m in zip(self.values, self.mults):
            out.extend([v] * m)
        return out

    def scaled(self, factor) -> "SymPoint":
        return SymPoint([v * factor for v in self.values], self.mults, check=False)


def power_sums(pt: SymPoint) -> PowerSums:
    cs = []
    for i in range(1, 6):
        cs.append(sum((m * v ** i for v, m in zip(pt.values, pt.mults)), Fraction(0)))
    return PowerSums(pt.n, *cs)


def elementary_from_power(ps: PowerSums) -> tuple:
    """S1..S5 from C1..C5, valid modulo S1 (requires C1 = 0)."""
    if ps.c1:
        raise ValueError("power sums must satisfy C1 = 0")
    c2, c3, c4, c5 = ps.c2, ps.c3, ps.c4, ps.c5
    s1 = ps.c1
    s2 = -c2 / 2
    s3 = c3 / 3
    s4 = -c4 / 4 + c2 * c2 / 8
    s5 = c5 / 5 - c2 * c3 / 6
    return s1, s2, s3, s4, s5


@dataclass(frozen=True)
class QuarticP:
    """X^4 + c2 X^2 + c1 X + c0; the cubic coefficient is zero by construction."""

    c0: object
    c1: object
    c2: object

    @property
    def c3(self):
        return Fraction(0)

    @property
    def poly(self) -> Poly:
        return Poly((self.c0, self.c1, self.c2, 0, 1))

    def __call__(self, x):
        x2 = x * x
        return x2 * x2 + self.c2 * x2 + self.c1 * x + self.c0


def root_quartic(n: int, lam, ps: PowerSums) -> QuarticP:
    """The quartic whose roots contain every coordinate of a singular point."""
    if ps.c1:
        raise ValueError("power sums must satisfy C1 = 0")
    c2, c3, c4 = ps.c2, ps.c3, ps.c4
    return QuarticP(
        c0=(lam * c2 * c2 - c4) / (n + 2),
        c1=-Fraction(2, 3) * lam * c3,
        c2=-lam * c2,
    )


def evaluate_F(pt: SymPoint, p: PencilParam):
    ps = power_sums(pt)
    return p.alpha * ps.c5 / 5 - (p.alpha + p.beta) * ps.c2 * ps.c3 / 6


def partial(x, ps: PowerSums, p: PencilParam):
    """d F / d x_j at a coordinate of value x (ambient coordinates)."""
    return p.alpha * x ** 4 - (p.alpha + p.beta) * (2 * x * ps.c3 + 3 * x * x * ps.c2) / 6


def verify_singular(pt: SymPoint, p: PencilParam) -> bool:
    """True iff all ambient partials of F agree at the point."""
    if not p.alpha:
        raise ValueError("alpha = 0 is the degenerate member S2*S3")
    ps = power_sums(pt)
    grads = [partial(v, ps, p) for v in pt.values]
    return all(not (g - grads[0]) for g in grads[1:])


lemma1_quartic = root_quartic
