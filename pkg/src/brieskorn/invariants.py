"""Exact monodromy invariants: eigenvalue profile, Milnor number, Delta(1)."""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .core import BrieskornError, ExponentTuple, as_exponents, lcm

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "BRIESKORN_BUDGET"


class BudgetExceededError(BrieskornError):
    pass


class GaloisStabilityError(BrieskornError):
    """Raised when the eigenvalue counts are not Galois-stable (an internal bug)."""


class CriterionInapplicableError(BrieskornError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise BrieskornError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    result, rest, p = d, d, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


@lru_cache(maxsize=None)
def cyclotomic_at_one(d: int) -> int:
    """``Phi_d(1)``: 0 for d = 1, p for d = p^e, else 1."""
    if d == 1:
        return 0
    p = 2
    while p * p <= d:
        if d % p == 0:
            while d % p == 0:
                d //= p
            return p if d == 1 else 1
        p += 1
    return d


@dataclass(frozen=True)
class CyclotomicMultiset:
    """Monodromy eigenvalues grouped by order.

    ``mult[d]`` is the multiplicity of each primitive ``d``-th root of unity;
    orders with multiplicity zero are omitted.
    """

    mult: dict[int, int] = field(default_factory=dict)
    total: int = 0

    def __post_init__(self) -> None:
        if self.total != sum(m * totient(d) for d, m in self.mult.items()):
            raise ValueError("total does not match the multiplicity profile")

    def to_dict(self) -> dict[str, int]:
        return {str(d): self.mult[d] for d in sorted(self.mult)}


def milnor_number(a) -> int:
    return math.prod(aj - 1 for aj in as_exponents(a))


def residue_counts(a: ExponentTuple) -> tuple[int, Counter]:
    """Count tuples ``0 < k_j < a_j`` by ``L * sum(k_j / a_j) mod L``, ``L = lcm(a)``."""
    big_l = lcm(a)
    counts = Counter({0: 1})
    for aj in a:
        step = big_l // aj
        nxt: Counter = Counter()
        for r, c in counts.items():
            for k in range(1, aj):
                nxt[(r + k * step) % big_l] += c
        counts = nxt
    return big_l, counts


def eigenvalue_multiset(a, budget: int | None = None) -> CyclotomicMultiset:
    """Eigenvalues ``exp(2*pi*i*sum(k_j/a_j))`` over all ``0 < k_j < a_j``."""
    a = as_exponents(a)
    if budget is None:
        budget = default_budget()
    mu = milnor_number(a)
    if mu > budget:
        raise BudgetExceededError(f"Milnor number {mu} exceeds the enumeration budget {budget}")
    big_l, counts = residue_counts(a)

    by_order: dict[int, dict[int, int]] = {}
    for r, c in counts.items():
        g = math.gcd(r, big_l)
        by_order.setdefault(big_l // g, {})[r // g] = c

    mult = {}
    for d, hits in by_order.items():
        values = {hits.get(k, 0) for k in range(d) if math.gcd(k, d) == 1}
        if len(values) != 1:
            raise GaloisStabilityError(f"order {d} has unequal counts {sorted(values)}")
        (m_d,) = values
        if m_d:
            mult[d] = m_d
    return CyclotomicMultiset(mult, sum(counts.values()))


def delta_at_one(a, budget: int | None = None) -> int:
    """Characteristic polynomial of the monodromy evaluated at 1."""
    profile = eigenvalue_multiset(a, budget)
    if profile.mult.get(1, 0) > 0:
        return 0
    return math.prod(cyclotomic_at_one(d) ** m for d, m in profile.mult.items())


def is_topological_sphere_link(a, budget: int | None = None) -> bool:
    """``|Delta(1)| = 1``, meaningful only for links of dimension >= 5."""
    a = as_exponents(a)
    if a.n < 3:
        raise CriterionInapplicableError(
            f"sphere criterion needs n >= 3, got n = {a.n}"
        )
    return abs(delta_at_one(a, budget)) == 1
