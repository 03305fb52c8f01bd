"""Node counts of the pentagon/Chebyshev construction by convolving
critical-value spectra.

The normalized pentagon polynomial R5/16 has critical values -1 (origin),
0 (the ten pairwise intersections of the edge lines) and +1 (the five
outer points).  On the axis y = 0,

    d/dx R5(x, 0) = 5x(x - 2)(x^2 - 2x - 4),

giving x = 0 (value -16), x = 2 (value 16) and x = 1 +- sqrt(5) (value 0);
the dihedral symmetry of order 10 spreads these over 1 + 5 + 10 points.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactnum import Poly

R5_AXIS = Poly((-16, 0, 20, 0, -5, 1))  # R5(x, 0)
MORSE_PENTAGON = 16
MORSE_CHEBYSHEV = 4
REFERENCE_PENTAGON_N3 = 31


@dataclass(frozen=True)
class CriticalSpectrum:
    entries: Mapping[Fraction, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {Fraction(k): int(v) for k, v in self.entries.items()}
        if any(v <= 0 for v in clean.values()):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def negated(self) -> "CriticalSpectrum":
        return CriticalSpectrum({-k: v for k, v in self.entries.items()})

    def mapped(self, f) -> "CriticalSpectrum":
        out: Counter = Counter()
        for k, v in self.entries.items():
            out[Fraction(f(k))] += v
        return CriticalSpectrum(out)


def pentagon_spectrum() -> CriticalSpectrum:
    """Critical values of R5/16 with multiplicities."""
    d = R5_AXIS.derivative()
    quad = Poly((-4, -2, 1))
    expected = Poly((0, 5)) * Poly((-2, 1)) * quad
    if d != expected:
        raise ArithmeticError("axis derivative does not factor as expected")
    origin, outer = R5_AXIS(Fraction(0)), R5_AXIS(Fraction(2))
    if divmod(R5_AXIS, quad)[1]:  # R5 vanishes at x = 1 +- sqrt(5)
        raise ArithmeticError("edge intersections must have critical value 0")
    spec = CriticalSpectrum({origin / 16: 1, outer / 16: 5, Fraction(0): 10})
    if spec.total != MORSE_PENTAGON:
        raise ArithmeticError("pentagon must have 16 critical points")
    return spec


T5 = Poly((0, 5, 0, -20, 0, 16))


def chebyshev_spectrum() -> CriticalSpectrum:
    """T5 takes the values +1, -1 alternately at its four critical points."""
    d = T5.derivative()
    # every critical point is a double root of T5^2 - 1
    lhs = T5 * T5 - Poly((1,))
    q, r = divmod(lhs, d * d)
    if r or q.degree != 2:
        raise ArithmeticError("T5 critical values are not +-1")
    # d is even, so its roots come in pairs +-z with T5(-z) = -T5(z)
    return CriticalSpectrum({Fraction(1): 2, Fraction(-1): 2})


def rhs_spectrum() -> CriticalSpectrum:
    """Spectrum of -(T5(z) - 1)/2."""
    return chebyshev_spectrum().mapped(lambda v: -(v - 1) / 2)


def _convolve(dist: Counter, spec: CriticalSpectrum, sign: int) -> Counter:
    out: Counter = Counter()
    for s, c in dist.items():
        for v, m in spec.entries.items():
            out[s + sign * v] += c * m
    return out


def pentagon_node_count(n: int, spectrum: CriticalSpectrum | None = None) -> int:
    """Affine singular points of
    sum_j (-1)^(j(1 + n mod 2)) R5~(x_2j, x_2j+1) = -(n mod 2)(T5(x_{n-1}) - 1)/2.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    spec = spectrum or pentagon_spectrum()
    odd = n % 2
    dist: Counter = Counter({Fraction(0): 1})
    for j in range(n // 2):
        sign = -1 if (j * (1 + odd)) % 2 else 1
        dist = _convolve(dist, spec, sign)
    if not odd:
        return dist[Fraction(0)]
    rhs = rhs_spectrum()
    return sum(dist[v] * m for v, m in rhs.entries.items())


def brute_force_count(n: int, spectrum: CriticalSpectrum | None = None) -> int:
    """Enumerate every tuple of critical points (oracle for small n)."""
    from itertools import product

    spec = spectrum or pentagon_spectrum()
    points = [v for v, m in spec.entries.items() for _ in range(m)]
    odd = n % 2
    signs = [(-1 if (j * (1 + odd)) % 2 else 1) for j in range(n // 2)]
    rhs = [v for v, m in rhs_spectrum().entries.items() for _ in range(m)] if odd else [Fraction(0)]
    total = 0
    for tup in product(points, repeat=len(signs)):
        s = sum(sg * v for sg, v in zip(signs, tup))
        total += sum(1 for r in rhs if s == r)
    return total
