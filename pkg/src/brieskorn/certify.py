"""Hypothesis check and reduction certificate for the volume-growth lower bound.

An accepted tuple is rearranged as ``(k+1, 2, 2, 2, b_0, ..., b_{l-1})`` with every
``b_i`` even. The base carries the reflection ``(0, 1, 1, 1)``; each extension
uses reflection index 1, whose zero-dimensional factor is empty because ``b_i`` is
even, so the homotopy type of the Lagrangian never changes along the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import BrieskornError, ExponentTuple, as_exponents
from .jointop import POINT, HomotopyType, component_count, lagrangian_homotopy_type
from .reeb import growth_proxy
from .zerodim import ZeroDimTag, classify_zero_dim

BASE_REFLECTION = (0, 1, 1, 1)
EXTENSION_INDEX = 1

POSITIVITY_AXIOM = {
    "name": "A_k base positivity",
    "statement": (
        "A connected component L_S of Fix R_(0,1,1,1) in W(k+1,2,2,2) has "
        "positive linear growth rate in wrapped Floer homology."
    ),
    "citation": "KKL18 (explicit computation of filtered wrapped Floer homology for the A_k base)",
    "verified_here": False,
}

_NUMBER_WORDS = {2: "two", 3: "three", 4: "four", 5: "five", 6: "six", 7: "seven"}


class HypothesisRejected(BrieskornError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class HypothesisCheck:
    accepted: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def check_theoremA_hypotheses(a) -> HypothesisCheck:
    """Accept iff n >= 3, at least three exponents equal 2, at most one is odd.

    The first failing clause, in that order, is reported.
    """
    a = as_exponents(a)
    if a.n < 3:
        return HypothesisCheck(False, f"n = {a.n} < 3")
    twos = sum(1 for aj in a if aj == 2)
    if twos < 3:
        return HypothesisCheck(False, f"only {twos} exponents equal 2 (need at least three)")
    odd = sum(1 for aj in a if aj % 2)
    if odd > 1:
        return HypothesisCheck(False, f"{_NUMBER_WORDS.get(odd, odd)} odd exponents")
    return HypothesisCheck(True)


@dataclass(frozen=True)
class ExtensionStep:
    exponent: int
    reflection_index: int
    factor: str
    homotopy_type: HomotopyType
    component_contractible: bool
    normal_structure: str
    proxy_before: Fraction
    proxy_after: Fraction

    def to_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "reflection_index": self.reflection_index,
            "factor": self.factor,
            "homotopy_type": self.homotopy_type.to_dict(),
            "component_contractible": self.component_contractible,
            "normal_structure": self.normal_structure,
            "proxy_before": self.proxy_before,
            "proxy_after": self.proxy_after,
        }


@dataclass(frozen=True)
class Certificate:
    input: tuple[int, ...]
    permutation: tuple[int, ...]
    arranged: tuple[int, ...]
    base: tuple[int, ...]
    base_reflection: tuple[int, ...]
    base_type: HomotopyType
    base_component_type: HomotopyType
    axiom: dict
    steps: list[ExtensionStep]
    reflection: tuple[int, ...]
    final_type: HomotopyType
    conclusion: list[str]
    notes: list[str] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.base[0] - 1

    def to_dict(self) -> dict:
        return {
            "input": list(self.input),
            "permutation": list(self.permutation),
            "arranged": list(self.arranged),
            "base": {
                "exponents": list(self.base),
                "k": self.k,
                "reflection": list(self.base_reflection),
                "homotopy_type": self.base_type.to_dict(),
                "component_type": self.base_component_type.to_dict(),
            },
            "axiom": dict(self.axiom),
            "steps": [s.to_dict() for s in self.steps],
            "reflection": list(self.reflection),
            "final_homotopy_type": self.final_type.to_dict(),
            "conclusion": list(self.conclusion),
            "notes": list(self.notes),
        }


def arrangement(a: ExponentTuple) -> tuple[int, ...]:
    """Permutation ``p`` with ``arranged[i] = a[p[i]]`` in the form ``(k+1, 2, 2, 2, b...)``.

    The head is the odd exponent if there is one, else the largest exponent
    (first occurrence). The first three remaining 2's follow, then the rest in
    input order.
    """
    values = list(a)
    odd = [j for j, v in enumerate(values) if v % 2]
    if odd:
        head = odd[0]
    else:
        head = max(range(len(values)), key=lambda j: (values[j], -j))
    rest = [j for j in range(len(values)) if j != head]
    twos = [j for j in rest if values[j] == 2][:3]
    tail = [j for j in rest if j not in twos]
    return (head, *twos, *tail)


def _components_contractible(h: HomotopyType) -> bool:
    # a point, or S^0 = two points
    return h == POINT or component_count(h) == 2


def build_certificate(a) -> Certificate:
    a = as_exponents(a)
    check = check_theoremA_hypotheses(a)
    if not check:
        raise HypothesisRejected(check.reason)

    perm = arrangement(a)
    arranged = tuple(a[j] for j in perm)
    base = arranged[:4]
    if base[1:] != (2, 2, 2) or any(b % 2 for b in arranged[4:]):
        raise AssertionError(f"arrangement {arranged} is not of the form (k+1,2,2,2,even...)")

    exps = list(base)
    refl = list(BASE_REFLECTION)
    base_type = lagrangian_homotopy_type(tuple(exps), tuple(refl))
    if component_count(base_type) == 0:
        raise AssertionError("base Lagrangian is empty")

    current_type = base_type
    proxy = growth_proxy(tuple(exps), tuple(refl))
    steps = []
    for b in arranged[4:]:
        factor = classify_zero_dim(b, EXTENSION_INDEX)
        if factor.tag is not ZeroDimTag.EMPTY:
            raise AssertionError(f"extension factor for b={b} is {factor.tag.value}")
        exps.append(b)
        refl.append(EXTENSION_INDEX)
        new_type = lagrangian_homotopy_type(tuple(exps), tuple(refl))
        if new_type != current_type:
            raise AssertionError(f"homotopy type changed from {current_type} to {new_type}")
        contractible = _components_contractible(new_type)
        new_proxy = growth_proxy(tuple(exps), tuple(refl))
        if new_proxy < proxy:
            raise AssertionError("growth proxy decreased under an even extension")
        steps.append(
            ExtensionStep(
                exponent=b,
                reflection_index=EXTENSION_INDEX,
                factor=factor.tag.value,
                homotopy_type=new_type,
                component_contractible=contractible,
                normal_structure=(
                    f"satisfied: invariant part contractible, n = {len(exps) - 1} >= 3"
                ),
                proxy_before=proxy,
                proxy_after=new_proxy,
            )
        )
        current_type, proxy = new_type, new_proxy

    notes = []
    if base[0] == 1:
        notes.append(
            "base exponent k+1 = 1: W(1,2,2,2) has Milnor number 0; the cited "
            "positivity statement is stated for A_k with k >= 1"
        )
    if base_type != POINT:
        notes.append(
            f"global type {base_type}; the chain uses any connected component, each contractible"
        )
    n = len(arranged) - 1
    conclusion = [
        f"W{arranged} admits a contractible admissible Lagrangian L "
        f"(a component of Fix R_{tuple(refl)}) with linear growth rate > 0",
        f"s_{n}(phi) >= 1 for every compactly supported symplectomorphism phi "
        "in the class of a nonzero power of the fibered twist",
        "both conclusions are conditional on the recorded axiom",
    ]
    return Certificate(
        input=tuple(a),
        permutation=perm,
        arranged=arranged,
        base=base,
        base_reflection=BASE_REFLECTION,
        base_type=base_type,
        base_component_type=POINT,
        axiom=dict(POSITIVITY_AXIOM),
        steps=steps,
        reflection=tuple(refl),
        final_type=current_type,
        conclusion=conclusion,
        notes=notes,
    )
