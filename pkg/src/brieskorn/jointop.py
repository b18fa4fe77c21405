"""Join calculus for the homotopy type of the real Lagrangian ``L_m``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache, reduce

from .core import ExponentTuple, ReflectionTuple, check_pair
from .zerodim import ZeroDimTag, classify_zero_dim


class Kind(str, enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    SPHERE = "Sphere"


@dataclass(frozen=True)
class HomotopyType:
    kind: Kind
    dim: int | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.SPHERE:
            if self.dim is None or self.dim < 0:
                raise ValueError("a sphere needs a dimension >= 0")
        elif self.dim is not None:
            raise ValueError(f"{self.kind.value} carries no dimension")

    @classmethod
    def sphere(cls, k: int) -> HomotopyType:
        return cls(Kind.SPHERE, k)

    @property
    def is_empty(self) -> bool:
        return self.kind is Kind.EMPTY

    @property
    def is_contractible(self) -> bool:
        return self.kind is Kind.POINT

    def __str__(self) -> str:
        if self.kind is Kind.SPHERE:
            return f"Sphere {self.dim}"
        return self.kind.value

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "dim": self.dim}


EMPTY = HomotopyType(Kind.EMPTY)
POINT = HomotopyType(Kind.POINT)

_FACTOR_TYPE = {
    ZeroDimTag.EMPTY: EMPTY,
    ZeroDimTag.POINT: POINT,
    ZeroDimTag.PAIR: HomotopyType.sphere(0),
}


@lru_cache(maxsize=1024)
def join(h1: HomotopyType, h2: HomotopyType) -> HomotopyType:
    """Homotopy type of ``h1 * h2``, with the empty set as the unit."""
    if h1.is_empty:
        return h2
    if h2.is_empty:
        return h1
    if h1.kind is Kind.POINT or h2.kind is Kind.POINT:
        return POINT
    return HomotopyType.sphere(h1.dim + h2.dim + 1)


def factor_types(a, m) -> list[HomotopyType]:
    a, m = check_pair(a, m)
    return [_FACTOR_TYPE[classify_zero_dim(aj, mj).tag] for aj, mj in zip(a, m)]


def lagrangian_homotopy_type(
    a: ExponentTuple | tuple[int, ...], m: ReflectionTuple | tuple[int, ...]
) -> HomotopyType:
    """Fold :func:`join` left to right over the zero-dimensional factors."""
    return reduce(join, factor_types(a, m), EMPTY)


def component_count(h: HomotopyType) -> int:
    if h.is_empty:
        return 0
    if h.kind is Kind.SPHERE and h.dim == 0:
        return 2
    return 1


def reduced_homology(h: HomotopyType) -> dict[int, int]:
    """Nonzero reduced Betti numbers, keyed by degree."""
    if h.kind is Kind.SPHERE:
        return {h.dim: 1}
    return {}
