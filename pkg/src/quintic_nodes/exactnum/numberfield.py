"""Number fields Q[t]/(q) of degree at most four and their elements."""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .poly import Poly

MAX_DEGREE = 4


class FieldError(ValueError):
    pass


class NumberField:
    """The quotient Q[t]/(modulus) for a monic irreducible modulus."""

    def __init__(self, modulus: Poly, label: str | None = None, check: bool = True):
        from .factor import is_irreducible

        if not modulus or modulus.degree < 1:
            raise FieldError("modulus must have positive degree")
        modulus = modulus.monic()
        if modulus.degree > MAX_DEGREE:
            raise FieldError(f"degree {modulus.degree} exceeds the supported maximum {MAX_DEGREE}")
        if check and modulus.degree > 1 and not is_irreducible(modulus):
            raise FieldError(f"modulus {modulus} is reducible over Q")
        self.modulus = modulus
        self.label = label or f"Q[t]/({modulus.format('t')})"
        self.degree = modulus.degree
        # t^k reduced mod q for k < 2*degree - 1
        self._powers = []
        for k in range(2 * self.degree - 1):
            r = (Poly.x() ** k) % modulus
            self._powers.append([r.coeff(i) for i in range(self.degree)])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.label})"

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.field.degree == 1:
                return FieldElement(self, [value.coords[0]])
            raise FieldError("cannot coerce between distinct number fields")
        if isinstance(value, Poly):
            r = value % self.modulus
            return FieldElement(self, [Fraction(r.coeff(i)) for i in range(self.degree)])
        return FieldElement(self, [Fraction(value)])

    @cached_property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self(-self.modulus.coeff(0))
        return FieldElement(self, [0, 1])

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, [])

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, [1])


QQ = NumberField(Poly.x(), label="Q", check=False)


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence):
        cs = [Fraction(c) for c in coords]
        cs += [Fraction(0)] * (field.degree - len(cs))
        if len(cs) != field.degree:
            raise FieldError("coordinate vector longer than the field degree")
        self.field = field
        self.coords = tuple(cs)

    # -- coercion ---------------------------------------------------------
    def _other(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other
            if other.field.degree == 1:
                return FieldElement(self.field, other.coords)
            if self.field.degree == 1:
                return None
            raise FieldError(f"mixed fields {self.field.label} and {other.field.label}")
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [other])
        return None

    def _promote(self, other):
        # self is rational and other lives in a proper extension
        return other.field(self)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, FieldElement):
                return self._promote(other) + other
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, FieldElement):
                return self._promote(other) - other
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, FieldElement):
                return self._promote(other) * other
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, [self.coords[0] * o.coords[0]])
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        out = [Fraction(0)] * d
        powers = self.field._powers
        for k, c in enumerate(prod):
            if c:
                for i, pk in enumerate(powers[k]):
                    if pk:
                        out[i] += c * pk
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of the zero field element")
        if self.field.degree == 1:
            return FieldElement(self.field, [1 / self.coords[0]])
        # extended Euclid: find u with u*a = 1 mod q
        r0, r1 = self.field.modulus, self.as_poly()
        s0, s1 = Poly(), Poly((1,))
        while r1.degree > 0:
            quo, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quo * s1
        # r1 is a nonzero constant because the modulus is irreducible
        return self.field(s1 / r1.coeff(0))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, FieldElement):
                return self._promote(other) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self.coords == other.coords
            if self.is_rational() and other.is_rational():
                return self.coords[0] == other.coords[0]
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.modulus, self.coords))

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coords[0]

    # -- structure --------------------------------------------------------
    def as_poly(self) -> Poly:
        return Poly(self.coords)

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self on the power basis (columns)."""
        d = self.field.degree
        basis_images = []
        for k in range(d):
            e = FieldElement(self.field, [0] * k + [1])
            basis_images.append((self * e).coords)
        return [[basis_images[j][i] for j in range(d)] for i in range(d)]

    def norm(self) -> Fraction:
        from .matrix import det_exact

        return det_exact(self.mult_matrix())

    def minpoly(self) -> Poly:
        """Minimal polynomial over Q (monic), by the first linear relation
        among the powers of self."""
        from .matrix import nullspace

        d = self.field.degree
        powers = [self.field.one]
        while True:
            powers.append(powers[-1] * self)
            k = len(powers) - 1
            # columns are coordinate vectors of 1, x, ..., x^k
            cols = [[p.coords[i] for p in powers] for i in range(d)]
            ns = nullspace(cols)
            if ns:
                rel = ns[0]
                return Poly(rel).monic()
            if k > d:
                raise AssertionError("no linear relation found among powers")

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coords[0])
        return f"[{self.as_poly().format('t')}]"

    __str__ = __repr__


def to_field(x, field: NumberField) -> FieldElement:
    return field(x)


def common_field(values) -> NumberField:
    """The unique non-rational field among the values, or Q."""
    found = QQ
    for v in values:
        if isinstance(v, FieldElement) and v.field.degree > 1:
            if found.degree > 1 and found != v.field:
                raise FieldError("values live in different number fields")
            found = v.field
    return found
