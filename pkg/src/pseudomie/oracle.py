"""Independent Numerov eigensolver for the radial equation.

Validates every closed-form energy without reusing any analytic spectrum:
the radial equation R'' = [l(l+1)/r^2 + (V - E)/lam] R is integrated
outward and the eigenvalue located by bisection on the node count and the
sign of the diverging tail.

Internally the integration runs on a grid uniform in x = ln r with
R(r) = sqrt(r) w(x), which resolves the 1/r^2 core at r_min = 1e-4 of the
well scale and the long Coulomb-like tails on the same footing; the
transformed equation w'' = F(x) w is still of Numerov form, so the method
keeps its fourth order in the log step.  Energy brackets are seeded from
the effective-potential minimum and a Langer-corrected WKB phase estimate,
both computed from the potential alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernel import propagate
from .potentials import MieParams, NoBoundStateError, PseudoharmonicParams

_trapz = getattr(np, "trapezoid", None) or np.trapz


class EigenvalueSearchError(RuntimeError):
    """Bisection could not bracket or confirm the requested level."""


@dataclass(frozen=True)
class NumerovConfig:
    """Grid and search parameters for one eigenvalue solve.

    energy_bracket seeds the bisection; the upper edge is widened (up to
    60 doublings of the span) if it does not yet lie above the requested
    level.
    """

    r_min: float  # angstrom, > 0
    r_max: float  # angstrom
    steps: int  # grid intervals, >= 1000
    energy_bracket: tuple[float, float]  # (E_lo, E_hi), eV
    energy_tol: float  # eV
    max_bisections: int = 200

    def __post_init__(self):
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError(f"need 0 < r_min < r_max, got ({self.r_min}, {self.r_max})")
        if self.steps < 1000:
            raise ValueError(f"steps must be at least 1000, got {self.steps}")
        if not self.energy_tol > 0.0:
            raise ValueError(f"energy_tol must be positive, got {self.energy_tol}")
        lo, hi = self.energy_bracket
        if not lo < hi:
            raise ValueError(f"energy bracket must satisfy lo < hi, got ({lo}, {hi})")
        if self.max_bisections < 1:
            raise ValueError("max_bisections must be at least 1")


def _log_grid(cfg: NumerovConfig):
    x = np.linspace(math.log(cfg.r_min), math.log(cfg.r_max), cfg.steps + 1)
    return x, np.exp(x), x[1] - x[0]


def _f_base(potential, lam, ell, r):
    """E-independent part of the transformed coefficient F(x)."""
    return ell * (ell + 1) + 0.25 + r * r * np.asarray(potential(r), dtype=float) / lam


def _indicial_strength(potential, lam, ell, r_min):
    """Exponent of the regular small-r branch, probed from the potential.

    Richardson-extrapolates lim r^2 V(r) to remove the O(r) Coulomb term,
    giving s - 1/2 = sqrt(l(l+1) + 1/4 + c2/lam) with w ~ exp((s-1/2) x).
    """
    c2 = 2.0 * (r_min / 2.0) ** 2 * potential(r_min / 2.0) - r_min**2 * potential(r_min)
    strength_sq = ell * (ell + 1) + 0.25 + c2 / lam
    return math.sqrt(strength_sq) if strength_sq > 0.0 else 0.0


def _shoot(base, w2, h, w0, energy):
    return propagate(base - energy * w2, h, w0, 1.0)


def _sign_flips(values) -> int:
    """Strict sign changes on the raw shooting solution (no dead-band).

    The diverging tail of an off-eigenvalue shot exceeds the allowed
    region by hundreds of e-folds, so any amplitude-relative dead-band
    would erase real nodes; raw flips are the oscillation-theorem count.
    """
    s = np.sign(values)
    s[s == 0.0] = 1.0
    return int(np.count_nonzero(s[1:] != s[:-1]))


def count_nodes(values) -> int:
    """Interior nodes of a sampled bounded function.

    Sign changes are counted after dropping the endpoints and all samples
    within a dead band of 1e-12 times the peak amplitude, so numerical
    zeros are not double-counted.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("need at least one sample")
    interior = arr[1:-1]
    if interior.size < 2:
        return 0
    band = 1e-12 * float(np.max(np.abs(interior)))
    kept = interior[np.abs(interior) > band]
    if kept.size < 2:
        return 0
    return int(np.count_nonzero(kept[:-1] * kept[1:] < 0.0))


def numerov_integrate(potential, lam, ell, energy, cfg: NumerovConfig):
    """Outward Numerov solution of the radial equation at a fixed energy.

    Returns (r, R) on the exponentially spaced grid, with R started on the
    regular branch r^s at r_min and normalized to max |R| = 1.  Overflow
    along the way rescales the running solution instead of aborting.
    """
    x, r, h = _log_grid(cfg)
    base = _f_base(potential, lam, ell, r)
    w2 = r * r / lam
    strength = _indicial_strength(potential, lam, ell, cfg.r_min)
    w0 = math.exp(-strength * h) if strength * h < 700.0 else 0.0
    w = _shoot(base, w2, h, w0, energy)
    radial = np.sqrt(r) * w
    peak = float(np.max(np.abs(radial)))
    if peak > 0.0:
        radial = radial / peak
    return r, radial


def solve_eigenvalue(potential, lam, ell, n_target, cfg: NumerovConfig) -> float:
    """Locate the bound level with n_target nodes by node-count bisection.

    The predicate "E above level" is (flips > n) or (flips == n and the
    tail has flipped against the (-1)^n sign of the just-below-threshold
    solution); it is monotone in E by the oscillation theorem, so the
    bisection converges to the eigenvalue of the truncated-domain problem,
    which agrees with the untruncated one to the exponentially small tail
    leakage.
    """
    if n_target < 0 or n_target != int(n_target):
        raise ValueError(f"n_target must be a nonnegative integer, got {n_target}")
    x, r, h = _log_grid(cfg)
    base = _f_base(potential, lam, ell, r)
    w2 = r * r / lam
    strength = _indicial_strength(potential, lam, ell, cfg.r_min)
    w0 = math.exp(-strength * h) if strength * h < 700.0 else 0.0
    tail_sign_below = 1.0 if n_target % 2 == 0 else -1.0

    def too_high(energy):
        w = _shoot(base, w2, h, w0, energy)
        flips = _sign_flips(w)
        tail = 1.0 if w[-1] >= 0.0 else -1.0
        return flips > n_target or (flips == n_target and tail != tail_sign_below)

    lo, hi = cfg.energy_bracket
    if too_high(lo):
        raise EigenvalueSearchError(
            f"bracket floor E={lo:.6g} eV already lies above level n={n_target} "
            f"(ell={ell}); the floor should sit at or below the potential minimum"
        )
    widenings = 0
    while not too_high(hi):
        if widenings >= 60:
            raise EigenvalueSearchError(
                f"level n={n_target} (ell={ell}) not found below E={hi:.6g} eV "
                f"after 60 bracket doublings from ({cfg.energy_bracket[0]:.6g}, "
                f"{cfg.energy_bracket[1]:.6g})"
            )
        hi = lo + 2.0 * (hi - lo)
        widenings += 1
    for _ in range(cfg.max_bisections):
        if hi - lo <= cfg.energy_tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if too_high(mid):
            hi = mid
        else:
            lo = mid
    energy = 0.5 * (lo + hi)
    edge = float(potential(cfg.r_max))
    if energy > edge:
        raise EigenvalueSearchError(
            f"converged E={energy:.6g} eV exceeds V(r_max)={edge:.6g} eV; level "
            f"n={n_target} (ell={ell}) is not bound on this domain"
        )
    return energy


def residual_norm(potential, lam, ell, energy, r, values) -> float:
    """Max-norm finite-difference residual of the radial equation.

    On a uniform grid, forms R'' by centered second differences and
    returns max over interior points of |R'' - [l(l+1)/r^2 + (V-E)/lam] R|
    divided by max |R|; second-order small for a true eigenfunction at its
    eigenvalue.
    """
    r = np.asarray(r, dtype=float)
    values = np.asarray(values, dtype=float)
    if r.size < 5:
        raise ValueError("need at least 5 samples")
    steps = np.diff(r)
    h = steps[0]
    if not np.allclose(steps, h, rtol=1e-8, atol=0.0):
        raise ValueError("residual check requires a uniform grid")
    second = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / (h * h)
    mid_r = r[1:-1]
    f = ell * (ell + 1) / mid_r**2 + (np.asarray(potential(mid_r)) - energy) / lam
    resid = second - f * values[1:-1]
    return float(np.max(np.abs(resid)) / np.max(np.abs(values)))


# ---------------------------------------------------------------------------
# default configurations


def _effective(potential, lam, ell):
    return lambda r: np.asarray(potential(r)) + lam * ell * (ell + 1) / np.asarray(r) ** 2


def _wkb_level(potential, lam, ell, k, r_lo, r_hi, floor, seed_span, cap=None):
    """Langer-corrected Bohr-Sommerfeld estimate of level k.

    Solves integral of sqrt((E - V - lam (l+1/2)^2/r^2)_+ / lam) dr
    = (k + 1/2) pi for E by bisection; used only to seed brackets and grid
    resolution, never as a result.
    """
    r = np.geomspace(r_lo, r_hi, 16384)
    veff = np.asarray(potential(r)) + lam * (ell + 0.5) ** 2 / r**2
    target = (k + 0.5) * math.pi

    def phase(energy):
        kloc = np.sqrt(np.maximum(energy - veff, 0.0) / lam)
        return float(_trapz(kloc, r))

    lo, hi = floor, floor + seed_span
    attempts = 0
    while phase(hi) < target:
        if cap is not None and hi >= cap:
            return cap
        hi = lo + 2.0 * (hi - lo)
        if cap is not None:
            hi = min(hi, cap)
        attempts += 1
        if attempts > 60:
            return hi
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if phase(mid) > target:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _grid_for(potential, lam, ell, e_lo, e_hi, e_acc, r_min, r_scan_hi):
    """r_max and steps from turning-point, tail, and resolution rules.

    r_max is 2.5 times the outer turning point at the bracket top, extended
    until the WKB tail integral at e_acc reaches 20 e-folds (needed for the
    slowly decaying Coulomb-like tails).  The log-step resolves one e-fold
    per step where the solution grows (stability of the node count) and
    0.05 radians per step where it oscillates (fourth-order accuracy well
    beyond the 1e-6 verification target).
    """
    r = np.geomspace(r_min, r_scan_hi, 16384)
    veff = np.asarray(potential(r)) + lam * ell * (ell + 1) / r**2
    below = np.nonzero(veff < e_hi)[0]
    r_turn = float(r[below[-1]]) if below.size else float(r[-1])
    kappa = np.sqrt(np.maximum(veff - e_acc, 0.0) / lam)
    efolds = np.concatenate(([0.0], np.cumsum(0.5 * (kappa[1:] + kappa[:-1]) * np.diff(r))))
    efolds -= np.interp(r_turn, r, efolds)
    far = np.nonzero((r > r_turn) & (efolds >= 20.0))[0]
    r_wkb = float(r[far[0]]) if far.size else float(r[-1])
    r_max = max(2.5 * r_turn, r_wkb)

    grid = np.geomspace(r_min, r_max, 8192)
    centrifugal = ell * (ell + 1) + 0.25
    v = np.asarray(potential(grid))
    f_lo = centrifugal + grid * grid * (v - e_lo) / lam
    f_hi = centrifugal + grid * grid * (v - e_hi) / lam
    growth = max(float(f_lo.max()), float(f_hi.max()), 1.0)
    oscillation = max(float(-f_lo.min()), float(-f_hi.min()), 1.0)
    h = min(1.0 / math.sqrt(growth), 0.05 / math.sqrt(oscillation))
    steps = int(math.ceil((math.log(r_max) - math.log(r_min)) / h))
    return r_max, min(max(steps, 4000), 500_000)


def pseudoharmonic_config(p: PseudoharmonicParams, ell: int, n_target: int) -> NumerovConfig:
    """Solver configuration for a pseudoharmonic level."""
    r_scale = max((p.a2 / p.a1) ** 0.25, (p.lam / p.a1) ** 0.25)
    a2_eff = p.a2 + p.lam * ell * (ell + 1)
    floor = p.a3 + 2.0 * math.sqrt(p.a1 * max(a2_eff, 0.0))
    spacing = 4.0 * math.sqrt(p.lam * p.a1)
    r_min = 1e-4 * r_scale
    hi = _wkb_level(p, p.lam, ell, n_target + 1, r_min, 3e3 * r_scale, floor, spacing)
    if not hi > floor:
        hi = floor + spacing * (n_target + 2)
    r_max, steps = _grid_for(p, p.lam, ell, floor, hi, hi, r_min, 3e3 * r_scale)
    tol = max((hi - floor) * 1e-9, 1e-13)
    return NumerovConfig(r_min, r_max, steps, (floor, hi), tol)


def mie_config(p: MieParams, ell: int, n_target: int) -> NumerovConfig:
    """Solver configuration for a Mie-type level."""
    if p.b >= 0.0:
        raise NoBoundStateError(f"Mie-type well with b = {p.b} >= 0 has no bound states")
    a_eff = p.a + p.lam * ell * (ell + 1)
    if a_eff > 0.0:
        r_scale = -2.0 * a_eff / p.b
        floor = p.c - p.b**2 / (4.0 * a_eff)
    else:
        r_scale = 2.0 * p.lam / abs(p.b)
        floor = p.c - p.b**2 / (2.0 * p.lam)
    r_min = 1e-4 * r_scale
    span = p.c - floor
    hi = _wkb_level(p, p.lam, ell, n_target + 1, r_min, 3e3 * r_scale, floor, span, cap=p.c)
    if not hi > floor:
        hi = p.c
    r_max, steps = _grid_for(p, p.lam, ell, floor, hi, hi, r_min, 3e3 * r_scale)
    tol = max((hi - floor) * 1e-9, 1e-13)
    return NumerovConfig(r_min, r_max, steps, (floor, hi), tol)


def default_config(p, ell: int, n_target: int) -> NumerovConfig:
    """Per-family solver configuration (dispatch on parameter type)."""
    if isinstance(p, PseudoharmonicParams):
        return pseudoharmonic_config(p, ell, n_target)
    if isinstance(p, MieParams):
        return mie_config(p, ell, n_target)
    raise TypeError(f"unsupported potential parameters: {type(p).__name__}")
