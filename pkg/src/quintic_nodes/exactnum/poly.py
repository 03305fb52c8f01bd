"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  Any coefficient type that
supports ``+ - * /`` exactly and whose zero is falsy works: ``Fraction``
for polynomials over Q, :class:`FieldElement` for polynomials over a
number field.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # -- arithmetic ---------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly((other,))

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly()
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [a[0] * 0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if not c:
                continue
            c = c / lead
            quo[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * oc
        return Poly(quo), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return self.exact_div(c)
        return Poly(x / c for x in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return self.coeffs == Poly((other,)).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation and calculus --------------------------------------
    def __call__(self, x):
        acc = 0 * x if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(c * i for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "Poly") -> "Poly":
        return self(inner)

    def monic(self) -> "Poly":
        return self / self.lc

    def map_coeffs(self, fn) -> "Poly":
        return Poly(fn(c) for c in self.coeffs)

    # -- over Q only --------------------------------------------------
    def content_primitive(self) -> tuple[Fraction, "Poly"]:
        """Split a rational polynomial as ``content * primitive`` with an
        integer primitive part whose leading coefficient is positive."""
        from math import gcd, lcm

        if not self.coeffs:
            return Fraction(0), Poly()
        den = lcm(*(Fraction(c).denominator for c in self.coeffs))
        nums = [int(Fraction(c) * den) for c in self.coeffs]
        g = gcd(*nums)
        if nums[-1] < 0:
            g = -g
        return Fraction(g, den), Poly(n // g for n in nums)

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append(c.numerator)
        return out

    # -- display ------------------------------------------------------
    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                cs = str(mag)
                if "/" in cs and k:
                    cs = f"({cs})"
            else:
                neg = False
                cs = f"({c})"
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
            terms.append(("-" if neg else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.format()})"

    __str__ = format


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while q:
        p, q = q, p % q
    if not p:
        return p
    return p.monic()


def poly_gcd_many(polys: Sequence[Poly]) -> Poly:
    g = Poly()
    for p in polys:
        g = poly_gcd(g, p)
        if g.degree == 0:
            break
    return g


def poly_resultant(f: Poly, g: Poly):
    """Resultant of two nonzero polynomials by the Euclidean recurrence."""
    if not f or not g:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc ** m
    if m == 0:
        return f.lc ** n
    r = f % g
    if not r:
        return f.lc * 0
    k = r.degree
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lc ** (m - k) * poly_resultant(g, r)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm; returns monic squarefree parts with multiplicities."""
    if not p:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    p = p.monic()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton-form interpolation through the points ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly((coef[-1],))
    for i in range(n - 2, -1, -1):
        p = p * Poly((-xs[i], 1)) + coef[i]
    return p
