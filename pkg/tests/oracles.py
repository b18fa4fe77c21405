"""Independent reference implementations used only by the test-suite.

Nothing here imports the package's algorithms; each oracle recomputes its
quantity by brute force or from the defining formula.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from fractions import Fraction

import mpmath
import numpy as np


def fixed_roots(a: int, m: int) -> set[Fraction]:
    """Angles q = k/a (full turns) with e^{2 pi i m/a} * conj(e^{2 pi i q}) = e^{2 pi i q}."""
    rotation = Fraction(m, a)
    return {Fraction(k, a) for k in range(a) if (rotation - Fraction(k, a)) % 1 == Fraction(k, a)}


def line_signs(a: int, m: int) -> set[int]:
    """Signs of z**a for z != 0 on the fixed line of the reflection, by evaluation."""
    direction = cmath.exp(1j * math.pi * m / a)
    out = set()
    for r in (0.3, 0.7, 1.0, 1.9):
        for s in (1.0, -1.0):
            z = s * r * direction
            assert abs(direction**2 * z.conjugate() - z) < 1e-12
            w = z**a
            assert abs(w.imag) < 1e-9 * max(1.0, abs(w))
            out.add(1 if w.real > 0 else -1)
    return out


def eigenvalue_angles(a) -> Counter:
    """Reduced fractions sum(k_j/a_j) mod 1 over every 0 < k_j < a_j."""
    counts = Counter()
    for ks in itertools.product(*[range(1, x) for x in a]):
        counts[sum(Fraction(k, x) for k, x in zip(ks, a)) % 1] += 1
    return counts


def _phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)


def eigenvalue_profile(a) -> dict[int, int]:
    """Per-primitive-root multiplicity keyed by order, from brute-force angles."""
    by_order = Counter()
    for q, c in eigenvalue_angles(a).items():
        by_order[q.denominator] += c
    return {d: c // _phi(d) for d, c in by_order.items()}


def delta_float(a) -> float:
    """prod(1 - lambda) in double precision (fine for small Milnor numbers)."""
    prod = 1 + 0j
    for q, c in eigenvalue_angles(a).items():
        prod *= (1 - cmath.exp(2j * math.pi * float(q))) ** c
    return prod


def delta_mp(a) -> tuple[int, float]:
    """prod(1 - lambda) in multiprecision: (nearest integer, distance to it).

    Each factor has modulus at most 2, so |Delta(1)| <= 2**mu and
    0.302 * mu decimal digits resolve the integer part. The rounding is done
    at that precision as well.
    """
    big_l = math.lcm(*a)
    if any(x == 1 for x in a):
        return 1, 0.0
    grids = np.meshgrid(*[np.arange(1, x) * (big_l // x) for x in a], indexing="ij")
    residues = np.mod(sum(g.ravel() for g in grids), big_l)
    qs, cs = np.unique(residues, return_counts=True)
    with mpmath.workdps(int(0.302 * len(residues)) + 30):
        prod = mpmath.mpc(1)
        for q, c in zip(qs, cs):
            prod *= (1 - mpmath.expjpi(2 * mpmath.mpf(int(q)) / big_l)) ** int(c)
        nearest = int(mpmath.nint(prod.real))
        return nearest, float(abs(prod - nearest))


def hypothesis_clauses(a) -> bool:
    n_ok = len(a) >= 4
    twos_ok = list(a).count(2) >= 3
    odd_ok = len([x for x in a if x % 2 == 1]) <= 1
    return n_ok and twos_ok and odd_ok


def mixed_strata(a, m) -> list[tuple[tuple[int, ...], tuple[str, ...], int]]:
    """(support, rays, lattice) for every mixed pattern, signs read off numerically."""
    out = []
    for size in range(2, len(a) + 1):
        for support in itertools.combinations(range(len(a)), size):
            for rays in itertools.product("+-", repeat=size):
                signs = set()
                for j, r in zip(support, rays):
                    angle = math.pi * m[j] / a[j] + (math.pi if r == "-" else 0.0)
                    w = cmath.exp(1j * angle) ** a[j]
                    signs.add(1 if w.real > 0 else -1)
                if signs == {1, -1}:
                    out.append((support, rays, math.lcm(*[a[j] for j in support])))
    return out


def chord_units(a, m, action: Fraction) -> int:
    """Count (stratum, positive lattice time <= action) pairs one by one."""
    total = 0
    for _, _, gen in mixed_strata(a, m):
        t = gen
        while t <= action:
            total += 1
            t += gen
    return total


def fold_join(sizes_in: list[int]) -> tuple[str, int | None]:
    """Join of zero-dimensional factors counted by their number of points.

    A point absorbs anything; two S^0 factors raise the sphere dimension.
    """
    sizes = [c for c in sizes_in if c > 0]
    if not sizes:
        return ("Empty", None)
    if 1 in sizes:
        return ("Point", None)
    return ("Sphere", len(sizes) - 1)
