"""Closed-form tile widths and densities of the three regular sector covers.

Each model covers a ``1 x a`` tile with one pair of identical sectors, so the
density is ``2 * (R**2 * alpha / 2) / a = R**2 * alpha / a``.

* ``S1``: narrow sectors (``alpha <= pi/3``) with one side on a strip
  boundary, alternating top/bottom.
* ``S2``: the same alternating arrangement for ``pi/3 <= alpha <= pi/2``,
  where consecutive same-boundary sectors no longer meet.
* ``S3``: every vertex on the upper boundary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

from .errors import InfeasibleParametersError, InvalidParametersError

# Relative slack on the inequality constraints; the optima sit exactly on them.
FEAS_TOL = 1e-12


class CoverageModel(str, enum.Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"

    @classmethod
    def parse(cls, value) -> "CoverageModel":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise InvalidParametersError(f"unknown coverage model {value!r}") from None


@dataclass(frozen=True)
class DensityReport:
    model: CoverageModel
    radius: float
    angle: float
    tile_width: float
    density: float
    feasible: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["model"] = self.model.value
        return d


def _check_angle(alpha: float, upper: float = math.pi / 2) -> None:
    if not 0 < alpha <= upper:
        raise InvalidParametersError(f"angle {alpha} outside (0, {upper}]")


def tile_width(model, R: float, alpha: float) -> float:
    """Width ``a`` of the tile covered by one sector pair.

    May return a non-positive value (a degenerate cover); raises
    :class:`InvalidParametersError` when the formula itself is undefined.
    """
    model = CoverageModel.parse(model)
    if not R > 0:
        raise InvalidParametersError(f"radius must be positive, got {R}")
    _check_angle(alpha)
    if model is CoverageModel.S1:
        if alpha == math.pi / 2:
            raise InvalidParametersError("S1 width formula needs tan(alpha) finite")
        t = math.tan(alpha)
        rad = R * R - (1.0 - 0.5 * R * t) ** 2
        if rad < 0:
            raise InvalidParametersError(f"S1 radicand negative at R={R}, alpha={alpha}")
        return math.sqrt(rad) - 1.0 / t + 0.5 * R
    if R * R - 1.0 < 0:
        raise InvalidParametersError(f"{model.value} needs R >= 1, got {R}")
    half = math.sqrt(R * R - 1.0)
    if model is CoverageModel.S2:
        return 2.0 * half
    return 2.0 * (half - math.cos(alpha) / math.sin(alpha))


def is_feasible(model, R: float, alpha: float) -> bool:
    """Whether ``(R, alpha)`` lies in the model's admissible domain."""
    model = CoverageModel.parse(model)
    try:
        a = tile_width(model, R, alpha)
    except InvalidParametersError:
        return False
    reach = R * math.sin(alpha) >= 1.0 - FEAS_TOL
    if model is CoverageModel.S1:
        return alpha <= math.pi / 3 * (1 + FEAS_TOL) and reach and a > 0
    if model is CoverageModel.S2:
        return math.pi / 3 * (1 - FEAS_TOL) <= alpha <= math.pi / 2 and reach and R > 1
    return reach and a > 0


def density(model, R: float, alpha: float) -> DensityReport:
    """Evaluate the model's density; works outside the feasible domain too."""
    model = CoverageModel.parse(model)
    a = tile_width(model, R, alpha)
    if not a > 0:
        raise InvalidParametersError(f"degenerate tile width {a} for {model.value} at R={R}, alpha={alpha}")
    return DensityReport(model, R, alpha, a, R * R * alpha / a, is_feasible(model, R, alpha))


def remark_restricted_density(alpha_max: float) -> DensityReport:
    """S1 density at ``alpha = alpha_max`` with the tight radius ``R = 1/sin(alpha_max)``.

    Uses the closed form obtained by clearing ``sin(alpha)**2`` from the S1
    density, which is algebraically identical to :func:`density`.
    """
    if not 0 < alpha_max < math.pi / 3:
        raise InvalidParametersError(f"alpha_max must lie in (0, pi/3), got {alpha_max}")
    s, c = math.sin(alpha_max), math.cos(alpha_max)
    root = math.sqrt(1.0 / s**2 - (1.0 - 1.0 / (2.0 * c)) ** 2)
    value = 2.0 * alpha_max / (2.0 * s**2 * root - math.sin(2.0 * alpha_max) + s)
    R = 1.0 / s
    return DensityReport(
        CoverageModel.S1, R, alpha_max, tile_width(CoverageModel.S1, R, alpha_max), value,
        is_feasible(CoverageModel.S1, R, alpha_max),
    )


def obtuse_midline_density(R: float, alpha: float) -> DensityReport:
    """Density of an obtuse-sector cover with vertices on the midline.

    Splitting every sector along the midline leaves an S3 cover of each half
    strip; rescaling a half strip to unit width doubles the radius and
    leaves the density unchanged. The returned report describes that
    reduced S3 cover, ``(2R, alpha/2)``.
    """
    if not math.pi / 2 < alpha <= math.pi:
        raise InvalidParametersError(f"obtuse angle must lie in (pi/2, pi], got {alpha}")
    if R * math.sin(alpha / 2) < 0.5 * (1 - FEAS_TOL):
        raise InvalidParametersError(f"R={R} cannot reach across half the strip at alpha={alpha}")
    report = density(CoverageModel.S3, 2.0 * R, alpha / 2.0)
    if not report.feasible:
        raise InfeasibleParametersError(f"reduced S3 cover infeasible at R={2 * R}, alpha={alpha / 2}")
    return report


def bidirectional_density(base: DensityReport) -> float:
    """Density when a mirrored copy watches the opposite direction."""
    if not base.feasible:
        raise InvalidParametersError("bidirectional doubling needs a feasible base cover")
    return 2.0 * base.density


def s2_realizable(R: float, alpha: float) -> bool:
    """Whether the alternating S2 arrangement actually covers at period ``2*sqrt(R**2 - 1)``.

    With the two sectors of a pair offset by half a period, the strip is
    covered iff ``cot(alpha) <= min(sqrt(R**2-1), R - sqrt(R**2-1))``. This is
    stricter than :func:`is_feasible`; in particular it excludes
    ``(sqrt(2), pi/3)``.
    """
    if not is_feasible(CoverageModel.S2, R, alpha):
        return False
    q = math.sqrt(R * R - 1.0)
    cot = math.cos(alpha) / math.sin(alpha)
    return cot <= min(q, R - q) * (1 + FEAS_TOL) + FEAS_TOL


def density_array(model, R, alpha):
    """Vectorised density over arrays; returns ``(density, feasible)``.

    Entries where the formula is undefined or the tile degenerates get
    ``density = inf`` and ``feasible = False``.
    """
    import numpy as np

    model = CoverageModel.parse(model)
    R, alpha = np.broadcast_arrays(np.asarray(R, dtype=float), np.asarray(alpha, dtype=float))
    with np.errstate(invalid="ignore", divide="ignore"):
        reach = R * np.sin(alpha) >= 1.0 - FEAS_TOL
        if model is CoverageModel.S1:
            t = np.tan(alpha)
            rad = R * R - (1.0 - 0.5 * R * t) ** 2
            a = np.sqrt(rad) - 1.0 / t + 0.5 * R
            ok = (rad >= 0) & (alpha < math.pi / 2)
            box = alpha <= math.pi / 3 * (1 + FEAS_TOL)
        else:
            q = np.sqrt(R * R - 1.0)
            ok = R >= 1.0
            if model is CoverageModel.S2:
                a = 2.0 * q
                box = (alpha >= math.pi / 3 * (1 - FEAS_TOL)) & (R > 1.0)
            else:
                a = 2.0 * (q - np.cos(alpha) / np.sin(alpha))
                box = np.ones_like(ok)
        ok &= (alpha > 0) & (alpha <= math.pi / 2) & (R > 0) & (a > 0)
        d = np.where(ok, R * R * alpha / np.where(ok, a, 1.0), np.inf)
    return d, ok & reach & box
