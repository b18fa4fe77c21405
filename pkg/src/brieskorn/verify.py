"""Floating-point checks of the explicit maps on the Milnor fiber and its link.

Everything here samples the affine fiber ``f = 1`` or the link
``f = 0, |z| = 1`` directly. Each check returns a :class:`VerificationReport`
carrying its worst residual so tolerances can be audited.

Faults can be injected by name (see :data:`FAULTS`) to confirm that a check is
able to fail at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from .core import BrieskornError, check_pair
from .jointop import component_count, lagrangian_homotopy_type
from .reeb import chord_strata, reeb_period
from .zerodim import classify_zero_dim, ray_angles, ray_sign

DEFAULT_TOL = 1e-9
FORMS_TOL = 1e-12
IDENTITY_TOL = 1e-10

FAULTS = ("perturb", "forms-sign", "retraction-naive", "reeb-offset")


class EmptyLagrangianError(BrieskornError):
    pass


class InsufficientSamplesError(BrieskornError):
    pass


@dataclass
class SamplePoint:
    coords: np.ndarray
    space: str = "Fiber"
    # join coordinates (angles in full turns, weights) when drawn through psi
    angles: np.ndarray | None = None
    weights: np.ndarray | None = None


@dataclass
class VerificationReport:
    name: str
    attempted: int
    passed_count: int
    max_residual: float
    tolerance: float
    passed: bool
    kind: str = "within"
    skipped: bool = False
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "attempted": self.attempted,
            "passed_count": self.passed_count,
            "worst_residual": self.max_residual,
            "tolerance": self.tolerance,
            "kind": self.kind,
            "passed": self.passed,
            "skipped": self.skipped,
            "detail": self.detail,
        }


def _report(name, residuals, tol, kind="within", detail="") -> VerificationReport:
    """``within``: every residual <= tol.  ``exceed``: every residual > tol."""
    res = np.asarray(residuals, dtype=float).ravel()
    if kind == "within":
        ok = res <= tol
        worst = float(res.max()) if res.size else 0.0
    elif kind == "exceed":
        ok = res > tol
        worst = float(res.min()) if res.size else math.inf
    else:
        raise ValueError(kind)
    ok &= np.isfinite(res)
    return VerificationReport(
        name, int(res.size), int(ok.sum()), worst, tol, bool(ok.all()), kind, detail=detail
    )


def skipped(name: str, reason: str) -> VerificationReport:
    return VerificationReport(name, 0, 0, 0.0, 0.0, True, skipped=True, detail=reason)


def _fault(fault, name):
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")
    return fault == name


# --- maps -------------------------------------------------------------------

def _arr(a) -> np.ndarray:
    return np.asarray(tuple(a), dtype=float)


def brieskorn(z: np.ndarray, a) -> np.ndarray:
    """``f(z) = sum z_j^a_j`` along the last axis."""
    return np.sum(z ** np.asarray(tuple(a)), axis=-1)


def reflect(z: np.ndarray, a, m) -> np.ndarray:
    rot = np.exp(2j * np.pi * np.asarray(tuple(m)) / _arr(a))
    return rot * np.conj(z)


def sigma(z: np.ndarray) -> np.ndarray:
    out = np.array(z, copy=True)
    out[..., -1] = -out[..., -1]
    return out


def liouville(z: np.ndarray, v: np.ndarray, a) -> np.ndarray:
    """Weighted form ``1/2 sum a_j (x_j dy_j - y_j dx_j)`` at ``z`` applied to ``v``."""
    return 0.5 * np.sum(_arr(a) * np.imag(np.conj(z) * v), axis=-1)


def reeb_flow(z: np.ndarray, a, t) -> np.ndarray:
    """Flow for time ``t`` (radians); ``t`` broadcasts against the sample axis."""
    t = np.asarray(t, dtype=float)
    return z * np.exp(1j * t[..., None] / _arr(a))


def psi(angles: np.ndarray, weights: np.ndarray, a) -> np.ndarray:
    """Join coordinates to the nonnegative part: ``z_j = t_j^(1/a_j) w_j``."""
    return weights ** (1.0 / _arr(a)) * np.exp(2j * np.pi * angles)


def phi(z: np.ndarray, a) -> tuple[np.ndarray, np.ndarray]:
    """Nonnegative part to join coordinates: ``w_j = z_j/|z_j|``, ``t_j = z_j^a_j``.

    ``w_j`` is NaN where ``z_j = 0`` (any point of the factor represents it).
    """
    r = np.abs(z)
    with np.errstate(invalid="ignore", divide="ignore"):
        w = np.where(r > 0, z / r, np.nan)
    return w, z ** np.asarray(tuple(a))


def retract(z: np.ndarray, a, t: float, *, naive: bool = False) -> np.ndarray:
    """Deformation ``G(z, t)`` pushing every negative ``z_j^a_j`` to zero.

    Negative coordinates shrink by ``(1-t)^(1/a_j)``; the others are rescaled by
    ``((1 - g_t) / (1 - g_0))^(1/a_j)`` with ``g_t`` the sum of the shrunken
    negative terms, which keeps ``f = 1``. Coordinates are handled by mask, so
    no reordering is needed.
    """
    inv = 1.0 / _arr(a)
    u = np.real(z ** np.asarray(tuple(a)))
    neg = u < 0
    g0 = np.sum(np.where(neg, u, 0.0), axis=-1, keepdims=True)
    gt = (1.0 - t) * g0
    pos_scale = ((1.0 - gt) / (1.0 - g0)) ** inv
    if naive:
        pos_scale = np.ones_like(pos_scale)
    neg_scale = (1.0 - t) ** inv
    return z * np.where(neg, neg_scale, pos_scale)


# --- sampling -----------------------------------------------------------------

def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _sample_join(a, m, count, rng):
    factors = [classify_zero_dim(aj, mj).sorted_points() for aj, mj in zip(a, m)]
    live = [j for j, pts in enumerate(factors) if pts]
    angles = np.zeros((count, len(a)))
    weights = np.zeros((count, len(a)))
    weights[:, live] = rng.dirichlet(np.ones(len(live)), size=count)
    for j in live:
        choices = np.array([float(p.value) for p in factors[j]])
        angles[:, j] = choices[rng.integers(0, len(choices), size=count)]
    return angles, weights


def sample_lagrangian(a, m, count: int, seed: int, tol: float = DEFAULT_TOL) -> list[SamplePoint]:
    """Random points of the nonnegative part of ``L_m`` drawn through ``psi``."""
    a, m = check_pair(a, m)
    if count <= 0:
        raise ValueError("count must be positive")
    if lagrangian_homotopy_type(a, m).is_empty:
        raise EmptyLagrangianError(f"L_m is empty for a={a}, m={m}")
    angles, weights = _sample_join(a, m, count, _rng(seed))
    z = psi(angles, weights, a)
    fiber = np.abs(brieskorn(z, a) - 1.0)
    fixed = np.max(np.abs(reflect(z, a, m) - z), axis=-1)
    worst = max(fiber.max(), fixed.max())
    if worst > tol:
        raise AssertionError(f"sampler produced a point off L_m (residual {worst:.3g})")
    return [SamplePoint(z[i], "Fiber", angles[i], weights[i]) for i in range(count)]


def _stack(points) -> np.ndarray:
    return np.array([p.coords for p in points])


def _sign_table(a, m):
    return np.array([[ray_sign(aj, mj, r) for r in "+-"] for aj, mj in zip(a, m)])


def sample_full_lagrangian(a, m, count: int, seed: int, *, neg_bound: float = 1.0,
                           require_negative: bool = False) -> np.ndarray:
    """Points of ``L_m`` including negative terms ``z_j^a_j`` down to ``-neg_bound``.

    Each row picks a ray per coordinate; negative terms get radii uniform in
    ``[0, neg_bound^(1/a_j)]`` and the positive terms share ``1 + sum|neg|``
    by a Dirichlet draw with parameters ``1/a_j`` (radii roughly uniform near 0).
    Returns a complex array of shape ``(count, n+1)``.
    """
    a, m = check_pair(a, m)
    rng = _rng(seed)
    d = len(a)
    av = _arr(a)
    table = _sign_table(a, m)
    if not (table > 0).any():
        raise EmptyLagrangianError(f"L_m is empty for a={a}, m={m}")
    if require_negative and not (table < 0).any():
        raise ValueError("no coordinate admits a negative term")

    rays = np.empty((0, d), dtype=int)
    for _ in range(200):
        draw = rng.integers(0, 2, size=(4 * count + 16, d))
        eps = table[np.arange(d), draw]
        ok = (eps > 0).any(axis=1)
        if require_negative:
            ok &= (eps < 0).any(axis=1)
        rays = np.vstack([rays, draw[ok]])
        if len(rays) >= count:
            break
    else:
        raise InsufficientSamplesError("could not draw admissible ray patterns")
    rays = rays[:count]
    eps = table[np.arange(d), rays]
    neg = eps < 0

    u = np.zeros((count, d))
    r_neg = rng.uniform(0.0, 1.0, size=(count, d)) * neg_bound ** (1.0 / av)
    u[neg] = (r_neg ** av)[neg]
    gam = rng.gamma(1.0 / av, size=(count, d))
    gam[neg] = 0.0
    share = gam / gam.sum(axis=1, keepdims=True)
    total = 1.0 + u.sum(axis=1, keepdims=True)
    u = np.where(neg, u, share * total)

    plus = np.array([float(ray_angles(aj, mj)[0]) for aj, mj in zip(a, m)])
    angles = plus + 0.5 * rays
    return u ** (1.0 / av) * np.exp(2j * np.pi * angles)


# --- checks -----------------------------------------------------------------

def verify_membership(a, m, points, tol: float = DEFAULT_TOL) -> VerificationReport:
    a, m = check_pair(a, m)
    z = _stack(points)
    res = np.maximum(
        np.abs(brieskorn(z, a) - 1.0), np.max(np.abs(reflect(z, a, m) - z), axis=-1)
    )
    return _report("membership", res, tol)


def verify_round_trip(a, m, points, tol: float = DEFAULT_TOL, fault=None) -> VerificationReport:
    """``psi(phi(z)) = z`` and ``phi(psi(w, t)) = (w, t)`` on the nonnegative part.

    The residual also measures how far ``phi(z)`` is from a valid join point:
    weights real, nonnegative and summing to 1, each ``w_j`` a fixed root of unity.
    """
    a, m = check_pair(a, m)
    z = _stack(points)
    if _fault(fault, "perturb"):
        z = z + 1e-3
    av = np.asarray(tuple(a))
    w, t = phi(z, a)
    nz = np.isfinite(w)
    w0 = np.where(nz, w, 0.0)

    valid = np.maximum.reduce([
        np.abs(np.sum(t, axis=-1) - 1.0),
        np.max(np.abs(np.imag(t)), axis=-1),
        np.max(np.maximum(-np.real(t), 0.0), axis=-1),
        np.max(np.where(nz, np.abs(w0 ** av - 1.0), 0.0), axis=-1),
        np.max(np.where(nz, np.abs(reflect(w0, a, m) - w0), 0.0), axis=-1),
    ])
    back = np.where(nz, np.maximum(np.real(t), 0.0) ** (1.0 / av) * w0, 0.0)
    res = np.maximum(valid, np.max(np.abs(back - z), axis=-1))

    if all(p.weights is not None for p in points):
        ang = np.array([p.angles for p in points])
        wts = np.array([p.weights for p in points])
        w2, t2 = phi(psi(ang, wts, a), a)
        live = wts > 0
        w_dev = np.where(live, np.abs(np.nan_to_num(w2) - np.exp(2j * np.pi * ang)), 0.0)
        t_dev = np.abs(t2 - wts)
        res = np.maximum(res, np.max(np.maximum(w_dev, t_dev), axis=-1))
    return _report("round_trip", res, tol)


def verify_retraction(a, m, count: int, seed: int, tol: float = DEFAULT_TOL,
                      fault=None, steps: int = 11) -> VerificationReport:
    """``G(., t)`` stays on ``L_m``, starts at the identity and ends on the nonnegative part."""
    a, m = check_pair(a, m)
    name = "retraction"
    if lagrangian_homotopy_type(a, m).is_empty:
        return skipped(name, "empty Lagrangian")
    if not (_sign_table(a, m) < 0).any():
        return skipped(name, "no coordinate admits a negative term")
    z = sample_full_lagrangian(a, m, count, seed, require_negative=True)
    naive = _fault(fault, "retraction-naive")
    res = np.max(np.abs(retract(z, a, 0.0, naive=naive) - z), axis=-1)
    for t in np.linspace(0.0, 1.0, steps):
        g = retract(z, a, t, naive=naive)
        res = np.maximum(res, np.abs(brieskorn(g, a) - 1.0))
        res = np.maximum(res, np.max(np.abs(reflect(g, a, m) - g), axis=-1))
    end = retract(z, a, 1.0, naive=naive) ** np.asarray(tuple(a))
    res = np.maximum(res, np.max(np.maximum(-np.real(end), 0.0), axis=-1))
    res = np.maximum(res, np.max(np.abs(np.imag(end)), axis=-1))
    return _report(name, res, tol)


def verify_forms(a, m, count: int, seed: int, tol: float = FORMS_TOL,
                 fault=None) -> list[VerificationReport]:
    """``sigma`` preserves the weighted Liouville form and ``R_m^a`` negates it.

    Both maps are real-linear, so they push tangent vectors forward by themselves.
    """
    a, m = check_pair(a, m)
    rng = _rng(seed)
    shape = (count, len(a))
    z = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    v = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    base = liouville(z, v, a)
    sig = liouville(sigma(z), sigma(v), a) - base
    expect = 1.0 if _fault(fault, "forms-sign") else -1.0
    refl = liouville(reflect(z, a, m), reflect(v, a, m), a) - expect * base
    return [_report("forms.sigma", np.abs(sig), tol), _report("forms.reflection", np.abs(refl), tol)]


def verify_involution(a, m, count: int, seed: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """``R`` squares to the identity, commutes with ``sigma`` and conjugates ``f``."""
    a, m = check_pair(a, m)
    rng = _rng(seed)
    shape = (count, len(a))
    z = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    z /= np.maximum(1.0, np.linalg.norm(z, axis=1, keepdims=True) / 2.0)
    rz = reflect(z, a, m)
    res = np.maximum.reduce([
        np.max(np.abs(reflect(rz, a, m) - z), axis=-1),
        np.max(np.abs(sigma(rz) - reflect(sigma(z), a, m)), axis=-1),
        np.abs(brieskorn(rz, a) - np.conj(brieskorn(z, a))),
    ])
    return _report("involution", res, tol)


def legendrian_point(a, m, stratum, rng) -> np.ndarray:
    """A point of the link on the fixed rays of ``stratum``, radii by bisection.

    Positive-sign radii are ``lam * u_j``, negative ones ``mu(lam) * u_j`` with
    ``|r| = 1``; ``sum eps_j r_j^a_j`` increases in ``lam`` from negative to
    positive, so the root is bracketed.
    """
    support = np.array(stratum.support)
    eps = np.array(stratum.signs)
    av = _arr(a)[support]
    u = rng.uniform(0.5, 1.0, size=len(support))
    pos, neg = eps > 0, eps < 0
    norm_p = math.sqrt(float(np.sum(u[pos] ** 2)))
    norm_n = math.sqrt(float(np.sum(u[neg] ** 2)))

    def radii(lam):
        mu = math.sqrt(max(0.0, 1.0 - (lam * norm_p) ** 2)) / norm_n
        return np.where(pos, lam * u, mu * u)

    def h(lam):
        return float(np.sum(eps * radii(lam) ** av))

    try:
        lam = bisect(h, 0.0, 1.0 / norm_p, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=400)
    except ValueError as exc:
        raise BrieskornError(f"bisection failed for stratum {stratum}: {exc}") from None
    z = np.zeros(len(a), dtype=complex)
    for idx, j in enumerate(support):
        plus = float(ray_angles(a[j], m[j])[0])
        angle = plus + (0.5 if stratum.rays[idx] == "-" else 0.0)
        z[j] = radii(lam)[idx] * np.exp(2j * np.pi * angle)
    return z


def verify_reeb(a, m, count: int, seed: int, tol: float = DEFAULT_TOL,
                identity_tol: float = IDENTITY_TOL, fault=None,
                off_lattice: int = 16) -> list[VerificationReport]:
    """Period, equivariance of ``f`` and the chord lattice of every stratum."""
    a, m = check_pair(a, m)
    rng = _rng(seed)
    period = math.pi * float(reeb_period(a))
    shape = (count, len(a))
    z = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    z *= rng.uniform(0.0, 2.0, size=(count, 1)) / np.linalg.norm(z, axis=1, keepdims=True)

    reports = [_report(
        "reeb.period", np.max(np.abs(reeb_flow(z, a, period) - z), axis=-1), identity_tol
    )]
    t = rng.uniform(0.0, 2.0 * period, size=count)
    eq = np.abs(brieskorn(reeb_flow(z, a, t), a) - np.exp(1j * t) * brieskorn(z, a))
    reports.append(_report("reeb.equivariance", eq, identity_tol))

    strata = chord_strata(a, m)
    if not strata:
        reports.append(skipped("reeb.lattice", "no chord strata"))
        reports.append(skipped("reeb.off_lattice", "no chord strata"))
        return reports

    def constraint(w):
        return np.max(np.abs(reflect(w, a, m) - w), axis=-1)

    shift = 0.5 if _fault(fault, "reeb-offset") else 0.0
    link, on, off = [], [], []
    for s in strata:
        p = legendrian_point(a, m, s, rng)
        link.append(max(abs(brieskorn(p, a)), abs(np.linalg.norm(p) - 1.0), constraint(p)))
        times = math.pi * s.lattice_gen * (np.array([1.0, 2.0]) + shift)
        on.extend(constraint(reeb_flow(p[None, :], a, times)))
        # keep random times at least 5% of a lattice step away from the lattice
        frac = rng.uniform(0.05, 0.95, size=off_lattice) + rng.integers(0, 2, size=off_lattice)
        off.extend(constraint(reeb_flow(p[None, :], a, math.pi * s.lattice_gen * frac)))
    reports.append(_report("reeb.link", link, tol))
    reports.append(_report("reeb.lattice", on, tol, detail=f"{len(strata)} strata"))
    reports.append(_report("reeb.off_lattice", off, 10 * tol, kind="exceed"))
    return reports


def estimate_components(a, m, count: int = 1000, seed: int = 0, *,
                        min_radius: float = 0.5, max_radius: float = 1.0,
                        neg_bound: float = 0.25) -> int:
    """Number of clusters in a proximity graph on sampled points of ``L_m``.

    The linking radius is eight times the 99th percentile nearest-neighbour
    distance, clamped to ``[min_radius, max_radius]``. Distinct components of
    the sampled region are at distance >= 2 from one another (two opposite
    rays with ``|z_j| >= 1``), so any radius below 2 cannot merge them.
    """
    a, m = check_pair(a, m)
    if a.n > 3:
        raise ValueError("component estimate is limited to n <= 3")
    if lagrangian_homotopy_type(a, m).is_empty:
        raise EmptyLagrangianError(f"L_m is empty for a={a}, m={m}")
    if count < 16:
        raise InsufficientSamplesError("need at least 16 samples")
    # any bound keeps the sampled region invariant under the retraction G;
    # a small one avoids sparse tips
    z = sample_full_lagrangian(a, m, count, seed, neg_bound=neg_bound)
    x = np.concatenate([z.real, z.imag], axis=1)
    tree = cKDTree(x)
    nn = tree.query(x, k=2)[0][:, 1]
    radius = min(max_radius, max(8.0 * float(np.quantile(nn, 0.99)), min_radius))
    pairs = tree.query_pairs(radius, output_type="ndarray")
    graph = coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(count, count)
    )
    return int(connected_components(graph, directed=False)[0])


def run_all(a, m, count: int = 1000, seed: int = 0, tol: float = DEFAULT_TOL,
            fault=None) -> tuple[list[VerificationReport], list[str]]:
    """Every applicable check; returns the reports and warnings."""
    a, m = check_pair(a, m)
    warnings = []
    reports = []
    if lagrangian_homotopy_type(a, m).is_empty:
        warnings.append("L_m is empty: sampling checks skipped")
        for name in ("membership", "round_trip", "retraction", "components"):
            reports.append(skipped(name, "empty Lagrangian"))
    else:
        points = sample_lagrangian(a, m, count, seed, tol)
        reports.append(verify_membership(a, m, points, tol))
        reports.append(verify_round_trip(a, m, points, tol, fault=fault))
        reports.append(verify_retraction(a, m, count, seed, tol, fault=fault))
        if a.n <= 3:
            expected = component_count(lagrangian_homotopy_type(a, m))
            found = estimate_components(a, m, count, seed)
            reports.append(VerificationReport(
                "components", 1, int(found == expected), float(abs(found - expected)), 0.0,
                found == expected, detail=f"estimated {found}, join calculus {expected}",
            ))
        else:
            reports.append(skipped("components", "n > 3"))
            warnings.append("component estimate skipped for n > 3")
    reports.extend(verify_forms(a, m, count, seed, fault=fault))
    reports.append(verify_involution(a, m, count, seed, tol))
    reports.extend(verify_reeb(a, m, count, seed, tol, fault=fault))
    return reports, warnings
