"""Energy and lifetime comparison of two covers.

Sensing energy per unit time is proportional to covered area, so the
energy gap per unit strip area is the density difference and the lifetime
ratio is the inverse density ratio.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass

from . import models, optimize
from .errors import InvalidParametersError
from .models import CoverageModel, DensityReport

# Published lifetime gains keyed by (worse model, better model).
PUBLISHED_LIFETIME_GAIN = {
    (CoverageModel.S1, CoverageModel.S2): 0.16,
    (CoverageModel.S3, CoverageModel.S2): 0.52,
}
# Published values are quoted to whole percent.
DISCREPANCY_TOL = 0.01


@dataclass(frozen=True)
class ComparisonReport:
    model_a: CoverageModel
    model_b: CoverageModel
    density_a: float
    density_b: float
    energy_excess: float
    lifetime_gain: float
    published_lifetime_gain: float | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["model_a"] = self.model_a.value
        d["model_b"] = self.model_b.value
        return d

    def to_csv(self) -> str:
        buf = io.StringIO()
        row = self.to_dict()
        writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue()


def compare_models(a: DensityReport, b: DensityReport) -> ComparisonReport:
    """How much more energy cover ``a`` spends than ``b``, and how much longer ``b`` lives."""
    for rep in (a, b):
        if not rep.feasible or not rep.density > 0:
            raise InvalidParametersError(f"cannot compare infeasible {rep.model.value} report")
    gain = a.density / b.density - 1.0
    published = PUBLISHED_LIFETIME_GAIN.get((a.model, b.model))
    note = None
    if published is not None and abs(published - gain) > DISCREPANCY_TOL:
        note = (
            f"published lifetime gain {published:.0%} differs from the exact "
            f"density ratio {a.density / b.density:.6f} ({gain:.2%})"
        )
    return ComparisonReport(a.model, b.model, a.density, b.density, a.density - b.density, gain, published, note)


def model_optimum(model, tol: float = optimize.DEFAULT_TOL) -> DensityReport:
    """Density report at the model's optimum over its whole admissible domain."""
    res = optimize.optimize_model(optimize.default_domain(model), tol)
    return models.density(res.model, res.radius_star, res.alpha_star)


def compare_optima(a, b, tol: float = optimize.DEFAULT_TOL) -> ComparisonReport:
    return compare_models(model_optimum(a, tol), model_optimum(b, tol))
