"""Rank-two Gram points from complex factorizations ``f = g * conj(g)``.

A strictly positive form with simple roots is given by ``d`` roots
``z_1..z_d`` in the upper half plane and a rational ``s``:

    f = s^2 * prod_j (x1 - z_j x2)(x1 - conj(z_j) x2).

A factorization code is a ``d``-bit mask. Bit ``j`` set picks the factor
``x1 - conj(z_j) x2`` for ``g``, clear picks ``x1 - z_j x2``. Complementing
every bit replaces ``g`` by ``conj(g)`` and gives the same Gram point, so
canonical codes have bit 0 clear and there are ``2^(d-1)`` of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import (
    DegreeTooLarge,
    EqualCodes,
    InvalidInput,
    InvalidRoots,
    NonCanonicalCode,
)
from .exactnum import GaussianRational, rational_from_str, rational_to_str, scalar_from_json, scalar_to_json
from .forms import BinaryForm, linear_form, multiply
from .gram import GramPoint, gram_from_sos

__all__ = [
    "RootPairSet",
    "MAX_DEGREE",
    "code_to_bits",
    "bits_to_code",
    "is_canonical",
    "complement",
    "canonical_codes",
    "form_from_roots",
    "factor_g",
    "rank2_forms",
    "rank2_point",
    "enumerate_rank2",
    "split_degrees",
    "random_root_set",
]

MAX_DEGREE = 12


@dataclass(frozen=True)
class RootPairSet:
    d: int
    roots: tuple
    scale_sqrt: Fraction = Fraction(1)

    def __post_init__(self):
        roots = tuple(z if isinstance(z, GaussianRational) else GaussianRational(z) for z in self.roots)
        scale = Fraction(self.scale_sqrt)
        if self.d < 1:
            raise InvalidRoots("need d >= 1")
        if len(roots) != self.d:
            raise InvalidRoots(f"expected {self.d} roots, got {len(roots)}")
        for z in roots:
            if z.im == 0:
                raise InvalidRoots(f"real root {z}")
            if z.im < 0:
                raise InvalidRoots(f"root {z} is not the upper-half-plane representative")
        if len(set(roots)) != len(roots):
            raise InvalidRoots("repeated root")
        if scale == 0:
            raise InvalidRoots("scale_sqrt must be nonzero")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "scale_sqrt", scale)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "scale_sqrt": rational_to_str(self.scale_sqrt),
            "roots": [scalar_to_json(z) for z in self.roots],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RootPairSet":
        try:
            roots = [scalar_from_json(z) for z in obj["roots"]]
            roots = [z if isinstance(z, GaussianRational) else GaussianRational(z) for z in roots]
            return cls(int(obj["d"]), tuple(roots), rational_from_str(obj.get("scale_sqrt", "1")))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"bad root record: {exc}") from exc


# -- codes -----------------------------------------------------------------

def code_to_bits(code: int, d: int) -> str:
    """Little-endian bitstring: character ``j`` is bit ``j``."""
    return "".join(str((code >> j) & 1) for j in range(d))


def bits_to_code(bits: str) -> int:
    if not bits or set(bits) - {"0", "1"}:
        raise InvalidInput(f"bad code bitstring {bits!r}")
    return sum(1 << j for j, b in enumerate(bits) if b == "1")


def is_canonical(code: int) -> bool:
    return code & 1 == 0


def complement(code: int, d: int) -> int:
    return code ^ ((1 << d) - 1)


def canonical_codes(d: int) -> Iterator[int]:
    return iter(range(0, 1 << d, 2))


def _check_code(code: int, d: int):
    if not 0 <= code < (1 << d):
        raise InvalidInput(f"code {code} out of range for d = {d}")


# -- forms -----------------------------------------------------------------

def form_from_roots(R: RootPairSet) -> BinaryForm:
    """``s^2 * prod_j (x1^2 - 2 Re(z_j) x1 x2 + |z_j|^2 x2^2)``, rational."""
    f = BinaryForm(0, (R.scale_sqrt ** 2,))
    for z in R.roots:
        f = multiply(f, BinaryForm(2, (1, -2 * z.re, z.norm())))
    return f


def chosen_roots(R: RootPairSet, code: int) -> list[GaussianRational]:
    return [z.conjugate() if (code >> j) & 1 else z for j, z in enumerate(R.roots)]


def linear_product(roots, scale) -> BinaryForm:
    g = BinaryForm(0, (GaussianRational(scale),))
    for w in roots:
        g = multiply(g, linear_form(w))
    return g


def factor_g(R: RootPairSet, code: int) -> BinaryForm:
    """``g = s * prod_j (x1 - w_j x2)`` for the roots ``w_j`` picked by ``code``."""
    _check_code(code, R.d)
    return linear_product(chosen_roots(R, code), R.scale_sqrt)


def rank2_forms(R: RootPairSet, code: int) -> tuple[BinaryForm, BinaryForm]:
    """``p = (g + conj g) / 2`` and ``q = (g - conj g) / 2i``, i.e. ``g = p + i q``."""
    g = factor_g(R, code)
    return g.real_part(), g.imag_part()


def rank2_point(R: RootPairSet, code: int, *, strict: bool = True) -> GramPoint:
    """Gram point ``p p^T + q q^T`` of the factorization picked by ``code``.

    With ``strict=False`` non-canonical codes are accepted (they give the same
    point as their complement).
    """
    _check_code(code, R.d)
    if strict and not is_canonical(code):
        raise NonCanonicalCode(f"code {code_to_bits(code, R.d)} has bit 0 set")
    return gram_from_sos(rank2_forms(R, code))


def enumerate_rank2(R: RootPairSet, max_degree: int = MAX_DEGREE) -> list[tuple[int, GramPoint]]:
    """All ``2^(d-1)`` rank-two Gram points, in increasing code order."""
    if R.d > max_degree:
        raise DegreeTooLarge(f"d = {R.d} exceeds the enumeration bound {max_degree}")
    return [(c, rank2_point(R, c)) for c in canonical_codes(R.d)]


def split_degrees(c1: int, c2: int, d: int) -> tuple[int, int]:
    """Degrees ``(min, max)`` of the shared and the disagreeing factor of two codes."""
    _check_code(c1, d)
    _check_code(c2, d)
    if not (is_canonical(c1) and is_canonical(c2)):
        raise NonCanonicalCode("split_degrees expects canonical codes")
    if c1 == c2:
        raise EqualCodes("codes coincide")
    a = d - bin(c1 ^ c2).count("1")
    return (min(a, d - a), max(a, d - a))


def random_root_set(d: int, rng: random.Random, bound: int = 20, denom: int = 1,
                    scale_sqrt=1) -> RootPairSet:
    """Roots with ``re`` uniform on ``{-B..B}/q`` and ``im`` on ``{1..B}/q``.

    Collisions are redrawn.
    """
    if bound < 1 or denom < 1:
        raise InvalidInput("bound and denom must be positive")
    if d > (2 * bound + 1) * bound:
        raise InvalidInput("grid too small for d distinct roots")
    roots: list[GaussianRational] = []
    while len(roots) < d:
        z = GaussianRational(Fraction(rng.randint(-bound, bound), denom),
                             Fraction(rng.randint(1, bound), denom))
        if z not in roots:
            roots.append(z)
    return RootPairSet(d, tuple(roots), Fraction(scale_sqrt))
