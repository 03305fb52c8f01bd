"""Arnold's lattice-point number and Kalker's cubic count."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class BoundQuery:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")


def bounded_compositions(parts: int, lo: int, hi: int) -> list[int]:
    """counts[T] = number of tuples in [lo, hi]^parts summing to T."""
    counts = [1]
    for _ in range(parts):
        nxt = [0] * (len(counts) + hi)
        for total, c in enumerate(counts):
            if c:
                for k in range(lo, hi + 1):
                    nxt[total + k] += c
        counts = nxt
    return counts


def tuple_count(n: int, d: int, target: int) -> int:
    """Tuples (k_0..k_n) with 1 <= k_i <= d-1 summing to target."""
    if d < 2:
        return 0
    counts = bounded_compositions(n + 1, 1, d - 1)
    return counts[target] if 0 <= target < len(counts) else 0


def arnold_number(q: BoundQuery | int, d: int | None = None) -> int:
    """Ar_n(d): tuples in {1..d-1}^(n+1) summing to floor(n*d/2) + 1."""
    if not isinstance(q, BoundQuery):
        q = BoundQuery(q, d)
    return tuple_count(q.n, q.d, q.n * q.d // 2 + 1)


def kalker_cubic_count(n: int) -> int:
    if n < 1:
        raise ValueError("need n >= 1")
    return comb(n + 1, n // 2)
