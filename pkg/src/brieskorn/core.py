"""Exact domain types shared by every module.

Angles are rationals in units of full turns (``q`` stands for the point
``exp(2*pi*i*q)``), times and actions are rationals in units of pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Actions, chord times and Reeb periods, measured in units of pi.
PiUnits = Fraction


class BrieskornError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BrieskornError, ValueError):
    """Malformed or out-of-range user input."""


@dataclass(frozen=True)
class ExponentTuple:
    """Exponents ``(a_0, ..., a_n)`` of ``z_0^a_0 + ... + z_n^a_n``."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise InputError("empty exponent list")
        for j, value in enumerate(a):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(f"exponent {j} is not an integer: {value!r}")
            if value < 1:
                raise InputError(f"exponent {j} is {value}; entries must be >= 1")

    @property
    def n(self) -> int:
        """Complex dimension of the Milnor fiber."""
        return len(self.a) - 1

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, j):
        return self.a[j]

    def __str__(self) -> str:
        return format_tuple(self.a)


@dataclass(frozen=True)
class ReflectionTuple:
    """Reflection indices ``(m_0, ..., m_n)`` selecting ``R_m^a``."""

    m: tuple[int, ...]

    def __post_init__(self) -> None:
        m = tuple(self.m)
        object.__setattr__(self, "m", m)
        for j, value in enumerate(m):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InputError(f"reflection index {j} is not an integer: {value!r}")

    def check_against(self, a: ExponentTuple) -> None:
        if len(self.m) != len(a.a):
            raise InputError(
                f"reflection has length {len(self.m)} but exponents have length {len(a.a)}"
            )
        for j, (mj, aj) in enumerate(zip(self.m, a.a)):
            if not 0 <= mj < aj:
                raise InputError(f"reflection index {j} is {mj}, outside 0..{aj - 1}")

    def __len__(self) -> int:
        return len(self.m)

    def __iter__(self):
        return iter(self.m)

    def __getitem__(self, j):
        return self.m[j]

    def __str__(self) -> str:
        return format_tuple(self.m)


@dataclass(frozen=True, order=True)
class RationalAngle:
    """A root of unity ``exp(2*pi*i*q)`` stored as the reduced fraction ``q`` in [0, 1)."""

    value: Fraction

    def __post_init__(self) -> None:
        q = Fraction(self.value)
        object.__setattr__(self, "value", q - math.floor(q))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other: RationalAngle) -> RationalAngle:
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return RationalAngle(self.value + other.value)

    def __mul__(self, k: int) -> RationalAngle:
        if not isinstance(k, int):
            return NotImplemented
        return RationalAngle(self.value * k)

    __rmul__ = __mul__

    def to_complex(self) -> complex:
        theta = 2 * math.pi * float(self.value)
        return complex(math.cos(theta), math.sin(theta))

    def __str__(self) -> str:
        return str(self.value)


def format_tuple(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    tokens = [tok.strip() for tok in text.split(",")]
    if tokens == [""]:
        raise InputError(f"empty {what} list")
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"non-integer token {tok!r} in {what} list") from None
    return tuple(out)


def parse_exponents(text: str) -> ExponentTuple:
    """Parse ``"3,4,2,2"`` into an :class:`ExponentTuple`."""
    return ExponentTuple(_parse_ints(text, "exponent"))


def parse_reflection(text: str, a: ExponentTuple) -> ReflectionTuple:
    m = ReflectionTuple(_parse_ints(text, "reflection"))
    m.check_against(a)
    return m


def check_pair(a: ExponentTuple | Sequence[int], m: ReflectionTuple | Sequence[int]):
    """Coerce raw sequences and validate that ``m`` fits ``a``."""
    if not isinstance(a, ExponentTuple):
        a = ExponentTuple(tuple(a))
    if not isinstance(m, ReflectionTuple):
        m = ReflectionTuple(tuple(m))
    m.check_against(a)
    return a, m


def as_exponents(a: ExponentTuple | Sequence[int]) -> ExponentTuple:
    return a if isinstance(a, ExponentTuple) else ExponentTuple(tuple(a))


def lcm(values: Iterable[int]) -> int:
    return math.lcm(*values)
