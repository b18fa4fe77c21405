"""Fixed sets of the reflection ``R_m^a(z) = exp(2*pi*i*m/a) * conj(z)`` on ``{z : z^a = 1}``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import InputError, RationalAngle


class ZeroDimTag(str, enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    PAIR = "PairOfPoints"


@dataclass(frozen=True)
class ZeroDimClass:
    tag: ZeroDimTag
    points: frozenset[RationalAngle]

    def __post_init__(self) -> None:
        expected = {0: ZeroDimTag.EMPTY, 1: ZeroDimTag.POINT, 2: ZeroDimTag.PAIR}
        if expected.get(len(self.points)) is not self.tag:
            raise ValueError(f"tag {self.tag} does not match {len(self.points)} points")

    def sorted_points(self) -> list[RationalAngle]:
        return sorted(self.points)


def _check(a: int, m: int) -> None:
    if a < 1 or not 0 <= m < a:
        raise InputError(f"need a >= 1 and 0 <= m < a, got a={a}, m={m}")


def ray_angles(a: int, m: int) -> tuple[Fraction, Fraction]:
    """Arguments (in full turns) of the two rays making up the fixed line.

    The ``+`` ray points at ``exp(pi*i*m/a)``, the ``-`` ray is its opposite.
    """
    _check(a, m)
    plus = Fraction(m, 2 * a)
    return plus, (plus + Fraction(1, 2)) % 1


def ray_sign(a: int, m: int, ray: str) -> int:
    """Sign of ``z^a`` for nonzero ``z`` on the given ray of the fixed line."""
    _check(a, m)
    if ray == "+":
        return -1 if m % 2 else 1
    if ray == "-":
        return -1 if (m + a) % 2 else 1
    raise ValueError(f"ray must be '+' or '-', got {ray!r}")


@lru_cache(maxsize=4096)
def classify_zero_dim(a: int, m: int) -> ZeroDimClass:
    """Fixed points of ``R_m^a`` among the ``a``-th roots of unity.

    A root on the ``+`` ray exists iff ``m`` is even and one on the ``-``
    ray iff ``m + a`` is even, since ``z^a`` must equal ``+1`` there.
    """
    _check(a, m)
    q_plus, q_minus = ray_angles(a, m)
    points = set()
    if m % 2 == 0:
        points.add(RationalAngle(q_plus))
    if (m + a) % 2 == 0:
        points.add(RationalAngle(q_minus))
    tag = {0: ZeroDimTag.EMPTY, 1: ZeroDimTag.POINT, 2: ZeroDimTag.PAIR}[len(points)]
    return ZeroDimClass(tag, frozenset(points))


def sign_set(a: int, m: int) -> frozenset[int]:
    """Possible signs of ``z^a`` for ``z != 0`` on the fixed line of ``R_m^a``."""
    return frozenset(ray_sign(a, m, ray) for ray in "+-")
