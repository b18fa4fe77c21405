"""Exact invariants of Brieskorn Milnor fibers and their real Lagrangians."""

from .core import (
    BrieskornError,
    ExponentTuple,
    InputError,
    RationalAngle,
    ReflectionTuple,
    parse_exponents,
    parse_reflection,
)
from .zerodim import ZeroDimClass, classify_zero_dim, sign_set
from .jointop import HomotopyType, component_count, join, lagrangian_homotopy_type, reduced_homology
from .invariants import delta_at_one, eigenvalue_multiset, is_topological_sphere_link, milnor_number
from .reeb import ChordStratum, chord_count, chord_strata, growth_proxy, reeb_period
from .certify import Certificate, build_certificate, check_theoremA_hypotheses

__version__ = "0.1.0"
