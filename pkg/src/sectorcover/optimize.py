"""Minimise cover density over each model's admissible parameters.

All three models attain their optimum on a constraint boundary, so the 1-D
searches below evaluate the interval endpoints alongside the golden-section
interior estimate.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import models
from .errors import ConvergenceError, EmptyDomainError, InvalidParametersError
from .models import CoverageModel

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
ALPHA_CLIP = 1e-3
MAX_ITER = 10_000
DEFAULT_TOL = 1e-9
TIGHT, FREE = "tight", "free"

_ALPHA_BOX = {
    CoverageModel.S1: (ALPHA_CLIP, math.pi / 3),
    CoverageModel.S2: (math.pi / 3, math.pi / 2),
    CoverageModel.S3: (ALPHA_CLIP, math.pi / 2),
}


@dataclass(frozen=True)
class OptimizationDomain:
    model: CoverageModel
    alpha_min: float
    alpha_max: float
    radius_rule: str = FREE

    def __post_init__(self):
        object.__setattr__(self, "model", CoverageModel.parse(self.model))
        if self.radius_rule not in (TIGHT, FREE):
            raise InvalidParametersError(f"radius_rule must be 'tight' or 'free', got {self.radius_rule!r}")
        if not 0 < self.alpha_min <= self.alpha_max <= math.pi / 2:
            raise EmptyDomainError(f"bad angle range [{self.alpha_min}, {self.alpha_max}]")
        lo, hi = _ALPHA_BOX[self.model]
        if self.alpha_max < lo or self.alpha_min > hi:
            raise EmptyDomainError(f"[{self.alpha_min}, {self.alpha_max}] misses the {self.model.value} angle range")


def default_domain(model, alpha_max: float | None = None, radius_rule: str = FREE) -> OptimizationDomain:
    """The model's full angle range, optionally capped at ``alpha_max``."""
    model = CoverageModel.parse(model)
    lo, hi = _ALPHA_BOX[model]
    if alpha_max is not None:
        hi = min(hi, alpha_max)
    return OptimizationDomain(model, lo, hi, radius_rule)


@dataclass(frozen=True)
class OptimalResult:
    model: CoverageModel
    alpha_star: float
    radius_star: float
    density_star: float
    iterations: int
    converged: bool

    @property
    def delta_star(self) -> float:
        """Radius slack above the reach bound ``1/sin(alpha_star)``."""
        return self.radius_star - 1.0 / math.sin(self.alpha_star)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["model"] = self.model.value
        return d


def golden_section(f, lo: float, hi: float, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER):
    """Minimise ``f`` on ``[lo, hi]``; returns ``(x, f(x), iterations)``.

    The endpoints compete with the interior bracket, so minima sitting on
    the boundary are returned exactly.
    """
    if tol <= 0:
        raise InvalidParametersError("tol must be positive")
    f_lo, f_hi = f(lo), f(hi)
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    it = 0
    while b - a > tol:
        if it >= max_iter:
            raise ConvergenceError(f"golden section did not reach tol={tol} in {max_iter} iterations")
        it += 1
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    x_in, f_in = (x1, f1) if f1 <= f2 else (x2, f2)
    best = min((f_lo, 0, lo), (f_in, 1, x_in), (f_hi, 2, hi))
    return best[2], best[0], it


def _safe_density(model, R, alpha, check_feasible=True) -> float:
    try:
        rep = models.density(model, R, alpha)
    except InvalidParametersError:
        return math.inf
    if check_feasible and not rep.feasible:
        return math.inf
    return rep.density


def reach_radius(alpha: float) -> float:
    """Smallest radius whose straight side spans the strip at angle ``alpha``."""
    return 1.0 / math.sin(alpha)


def best_radius(model, alpha: float, radius_rule: str = FREE, tol: float = DEFAULT_TOL):
    """Minimise density over the radius at a fixed angle; returns ``(R, D, iterations)``."""
    r0 = reach_radius(alpha)
    if radius_rule == TIGHT:
        return r0, _safe_density(model, r0, alpha), 0
    delta_max = 3.0 * max(1.0, r0)
    d, val, it = golden_section(lambda dl: _safe_density(model, r0 + dl, alpha), 0.0, delta_max, tol)
    return r0 + d, val, it


def optimize_model(domain: OptimizationDomain, tol: float = DEFAULT_TOL) -> OptimalResult:
    """Outer golden-section search over the angle of an inner radius minimisation."""
    model = domain.model
    lo, hi = _ALPHA_BOX[model]
    lo, hi = max(lo, domain.alpha_min), min(hi, domain.alpha_max)

    def outer(alpha):
        return best_radius(model, alpha, domain.radius_rule, tol)[1]

    alpha, val, it = golden_section(outer, lo, hi, tol)
    if not math.isfinite(val):
        raise EmptyDomainError(f"no feasible {model.value} parameters in [{lo}, {hi}]")
    R, val, _ = best_radius(model, alpha, domain.radius_rule, tol)
    return OptimalResult(model, alpha, R, val, it, models.is_feasible(model, R, alpha))


def find_alpha1(tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Stationary point of the tight-radius S1 density, ignoring the S1 angle cap."""

    def d1(alpha):
        return _safe_density(CoverageModel.S1, reach_radius(alpha), alpha, check_feasible=False)

    alpha, val, _ = golden_section(d1, ALPHA_CLIP, math.pi / 2 - ALPHA_CLIP, tol)
    return alpha, val


def grid_cross_check(model, grid_resolution: int = 2000, delta_span: float = 3.0) -> OptimalResult:
    """Brute-force argmin over a uniform ``(alpha, R)`` grid of feasible points.

    ``R`` runs over ``[1/sin(alpha), 1/sin(alpha) + delta_span]``. Ties go to
    the smallest angle, then the smallest radius.
    """
    model = CoverageModel.parse(model)
    if grid_resolution < 100:
        raise InvalidParametersError("grid_resolution must be at least 100")
    lo, hi = _ALPHA_BOX[model]
    alphas = np.linspace(lo, hi, grid_resolution)
    deltas = np.linspace(0.0, delta_span, grid_resolution)
    R = 1.0 / np.sin(alphas)[:, None] + deltas[None, :]
    dens, feas = models.density_array(model, R, alphas[:, None])
    dens = np.where(feas, dens, np.inf)
    k = int(np.argmin(dens))
    if not np.isfinite(dens.flat[k]):
        raise EmptyDomainError(f"no feasible {model.value} grid point")
    i, j = np.unravel_index(k, dens.shape)
    return OptimalResult(model, float(alphas[i]), float(R[i, j]), float(dens[i, j]), dens.size, True)


def s2_realizable_angle(R: float) -> float:
    """Smallest angle at which the S2 pattern with radius ``R`` really covers the strip."""
    q = math.sqrt(R * R - 1.0)
    return max(math.pi / 3, math.atan2(1.0, min(q, R - q)), math.asin(min(1.0, 1.0 / R)))


def optimize_s2_realizable(tol: float = DEFAULT_TOL, r_max: float = 4.0) -> OptimalResult:
    """Minimise S2 density subject to :func:`models.s2_realizable`.

    D2 grows with the angle, so for each radius the smallest realisable
    angle is optimal and the search reduces to one dimension in ``R``.
    """

    def d(R):
        return _safe_density(CoverageModel.S2, R, s2_realizable_angle(R))

    R, val, it = golden_section(d, 1.0 + 1e-6, r_max, tol)
    return OptimalResult(CoverageModel.S2, s2_realizable_angle(R), R, val, it, True)
