"""Pataki intervals: admissible ranks of extreme points of a spectrahedron.

For ``S = L ∩ PSD_n`` with ``dim L = m`` an extreme point of rank ``r``
satisfies ``m >= C(n-r+1, 2)`` and ``m + C(r+1, 2) <= C(n+1, 2)``.
The solution set is ``ceil(A1) <= r <= floor(B2)`` where

    A1 = n + 1/2 - sqrt(8m + 1) / 2
    B2 = -1/2 + sqrt((2n+1)^2 - 8m) / 2

Both endpoints are evaluated with :func:`math.isqrt`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .errors import InvalidInput, InvalidSliceDim

__all__ = ["PatakiInterval", "pataki_general", "pataki_binary", "pataki_inequalities_hold"]


@dataclass(frozen=True)
class PatakiInterval:
    r_min: int
    r_max: int
    n: int
    m: int

    @property
    def is_empty(self) -> bool:
        return self.r_min > self.r_max

    def ranks(self) -> range:
        return range(self.r_min, self.r_max + 1)

    def __contains__(self, r) -> bool:
        return self.r_min <= r <= self.r_max

    def to_json(self) -> dict:
        return {"r_min": self.r_min, "r_max": self.r_max}


def pataki_inequalities_hold(n: int, m: int, r: int) -> bool:
    """Both Pataki inequalities for rank ``r``, written out literally."""
    return m >= comb(n - r + 1, 2) and m + comb(r + 1, 2) <= comb(n + 1, 2)


def pataki_general(n: int, m: int) -> PatakiInterval:
    if n < 1 or m < 0:
        raise InvalidInput("need n >= 1 and m >= 0")
    if m > comb(n + 1, 2):
        raise InvalidSliceDim(f"m = {m} exceeds dim S_2 = {comb(n + 1, 2)}")
    # ceil(A1) = -floor((sqrt(8m+1) - 2n - 1) / 2); the floor only depends on isqrt
    t = isqrt(8 * m + 1)
    r_min = -((t - 2 * n - 1) // 2)
    s = isqrt((2 * n + 1) ** 2 - 8 * m)
    r_max = (s - 1) // 2
    return PatakiInterval(r_min=r_min, r_max=r_max, n=n, m=m)


def pataki_binary(d: int) -> PatakiInterval:
    """Pataki interval of Gram(f) for a general binary form of degree ``2d``.

    ``r >= 2`` and ``C(r+1, 2) <= 2d + 1``.
    """
    if d < 1:
        raise InvalidInput("d must be >= 1")
    k = 1
    while comb(k + 2, 2) <= 2 * d + 1:
        k += 1
    return PatakiInterval(r_min=2, r_max=k, n=d + 1, m=comb(d, 2))
