"""Reeb chord strata of the Legendrian boundary of ``L_m`` and the chord-count growth proxy.

The Reeb flow ``z_j -> exp(i t / a_j) z_j`` keeps the fixed line of
``R_{m_j}^{a_j}`` iff ``t / a_j`` is a multiple of pi. A boundary point
supported on ``J`` therefore returns to ``L_m`` exactly at the times
``t / pi`` in ``lcm(a_J) * Z``.

A chord unit is a pair (stratum, positive lattice time). Strata are indexed by
the support ``J`` and the ray pattern on ``J``. This is bookkeeping for an upper
bound on the chord complex, not a computation of wrapped Floer homology.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import ExponentTuple, InputError, PiUnits, ReflectionTuple, as_exponents, check_pair, lcm
from .zerodim import ray_sign, sign_set


@dataclass(frozen=True, order=True)
class ChordStratum:
    support: tuple[int, ...]
    rays: tuple[str, ...]
    signs: tuple[int, ...]
    lattice_gen: int

    def to_dict(self) -> dict:
        return {
            "support": list(self.support),
            "rays": "".join(self.rays),
            "signs": list(self.signs),
            "lattice_gen": self.lattice_gen,
        }


def reeb_period(a) -> PiUnits:
    """Period of the Reeb flow in units of pi: ``2 * lcm(a)``."""
    return Fraction(2 * lcm(as_exponents(a)))


def chord_strata(a: ExponentTuple, m: ReflectionTuple) -> list[ChordStratum]:
    """All (support, ray pattern) pairs whose sign pattern is mixed, in canonical order."""
    a, m = check_pair(a, m)
    return list(_strata(a.a, m.m))


@lru_cache(maxsize=4096)
def _strata(a: tuple[int, ...], m: tuple[int, ...]) -> tuple[ChordStratum, ...]:
    out = []
    for size in range(2, len(a) + 1):
        for support in itertools.combinations(range(len(a)), size):
            gen = lcm(a[j] for j in support)
            for rays in itertools.product("+-", repeat=size):
                signs = tuple(ray_sign(a[j], m[j], r) for j, r in zip(support, rays))
                if 1 in signs and -1 in signs:
                    out.append(ChordStratum(support, rays, signs, gen))
    out.sort()
    return tuple(out)


def support_counts(a, m) -> list[tuple[tuple[int, ...], int, int]]:
    """``(J, number of mixed ray patterns on J, lcm(a_J))`` for every support with |J| >= 2.

    Same totals as :func:`chord_strata` without listing the patterns: of the
    ``2^|J|`` patterns, the all-positive ones number ``prod_j p_j`` and the
    all-negative ones ``prod_j (2 - p_j)``, where ``p_j`` counts positive rays.
    """
    a, m = check_pair(a, m)
    pos = [sum(1 for r in "+-" if ray_sign(aj, mj, r) > 0) for aj, mj in zip(a, m)]
    out = []
    for size in range(2, len(a) + 1):
        for support in itertools.combinations(range(len(a)), size):
            all_pos = math.prod(pos[j] for j in support)
            all_neg = math.prod(2 - pos[j] for j in support)
            mixed = 2**size - all_pos - all_neg
            if mixed:
                out.append((support, mixed, lcm(a[j] for j in support)))
    return out


def has_mixed_signs(a, m) -> bool:
    """Combinatorial criterion for ``chord_strata(a, m)`` to be nonempty.

    Both signs must occur across the coordinates, and a stratum needs at
    least two of them (one odd exponent alone carries both signs).
    """
    a, m = check_pair(a, m)
    if len(a) < 2:
        return False
    available = set()
    for aj, mj in zip(a, m):
        available |= sign_set(aj, mj)
    return available == {1, -1}


def _action(value) -> Fraction:
    action = Fraction(value)
    if action < 0:
        raise InputError(f"action bound must be >= 0, got {action}")
    return action


def chord_count(a, m, action) -> int:
    """Number of chord units with time (in pi units) at most ``action``."""
    action = _action(action)
    return sum(mixed * math.floor(action / gen) for _, mixed, gen in support_counts(a, m))


def growth_proxy(a, m) -> Fraction:
    """``lim chord_count(A) / A`` in units of 1/pi, i.e. the sum of ``1/lattice_gen`` over strata."""
    return sum((Fraction(mixed, gen) for _, mixed, gen in support_counts(a, m)), Fraction(0))


def stratum_injection(a, m, b: int, k: int) -> list[tuple[int, int]]:
    """Witness that each stratum of ``(a, m)`` survives extension by ``(b, k)``.

    Returns ``(i, j)`` pairs: stratum ``i`` of the base equals stratum ``j`` of
    the extended tuple (support, rays, signs and lattice generator all agree).
    Raises ``AssertionError`` if some stratum has no image.
    """
    a, m = check_pair(a, m)
    ext_a, ext_m = check_pair(tuple(a) + (b,), tuple(m) + (k,))
    base = chord_strata(a, m)
    position = {s: j for j, s in enumerate(chord_strata(ext_a, ext_m))}
    pairs = []
    for i, s in enumerate(base):
        if s not in position:
            raise AssertionError(f"stratum {s} has no image after extension")
        pairs.append((i, position[s]))
    return pairs
