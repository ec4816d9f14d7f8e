"""End-to-end acceptance checks, one test group per numbered criterion.

Each test carries a ``criterion`` marker; ``conftest.py`` folds the outcomes
into one PASS/FAIL line per criterion at the end of the run. Tolerances are
the stated ones and are never loosened here.
"""

import json
import math

import numpy as np
import pytest

from sectorcover import cli, compare, models, optimize, placement
from sectorcover.errors import ConstructionError
from sectorcover.geometry import StripWindow
from sectorcover.models import CoverageModel as M
from sectorcover.verify import SamplingSpec, empirical_density, multiplicity_density, verify_cover

SQ2 = math.sqrt(2)
PI = math.pi


def criterion(n):
    return pytest.mark.criterion(n)


def _cli_json(capsys, argv):
    assert cli.run(argv) == cli.EXIT_OK
    return json.loads(capsys.readouterr().out)


@criterion(1)
def test_c01_s1_optimum(capsys):
    out = _cli_json(capsys, ["optimize", "--model", "s1"])
    assert abs(out["alpha_star"] - PI / 3) <= 1e-6
    assert abs(out["radius_star"] - 2 / math.sqrt(3)) <= 1e-6
    assert out["density_star"] == pytest.approx(2 * PI / (3 * math.sqrt(3)), rel=1e-9, abs=0)


@criterion(2)
def test_c02_s2_optimum(capsys):
    out = _cli_json(capsys, ["optimize", "--model", "s2"])
    assert abs(out["alpha_star"] - PI / 3) <= 1e-6
    assert abs(out["radius_star"] - SQ2) <= 1e-6
    assert out["density_star"] == pytest.approx(PI / 3, rel=1e-9, abs=0)


@criterion(3)
def test_c03_s3_optimum(capsys):
    out = _cli_json(capsys, ["optimize", "--model", "s3"])
    assert abs(out["alpha_star"] - PI / 2) <= 1e-6
    assert abs(out["radius_star"] - SQ2) <= 1e-6
    assert out["density_star"] == pytest.approx(PI / 2, rel=1e-9, abs=0)


@criterion(4)
def test_c04_alpha1(capsys):
    out = _cli_json(capsys, ["alpha1"])
    assert abs(out["alpha1"] - 1.1418) <= 1e-3
    assert abs(out["density"] - 1.1767) <= 1e-3


@criterion(5)
def test_c05_capped_closed_form_identity():
    for alpha in np.linspace(0.1, PI / 3, 22)[1:-1]:
        lhs = models.remark_restricted_density(float(alpha)).density
        rhs = models.density(M.S1, 1 / math.sin(alpha), alpha).density
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=0)


@criterion(6)
def test_c06_comparison():
    s1, s2, s3 = (compare.model_optimum(m) for m in (M.S1, M.S2, M.S3))
    a = compare.compare_models(s1, s2)
    assert abs(a.energy_excess - 0.162) <= 5e-4
    assert abs(a.lifetime_gain - 0.1547) <= 1e-4
    b = compare.compare_models(s3, s2)
    assert abs(b.lifetime_gain - 0.5) <= 1e-12
    assert b.published_lifetime_gain == 0.52 and b.note and "52%" in b.note


# optimum first, then four more feasible points per model
POINTS = [
    (M.S1, 2 / math.sqrt(3), PI / 3),
    (M.S1, 1 / math.sin(0.9), 0.9),
    (M.S1, 1 / math.sin(0.6) + 0.5, 0.6),
    (M.S1, 1.5, 0.8),
    (M.S1, 1 / math.sin(0.3) + 1.0, 0.3),
    (M.S2, SQ2, PI / 3),
    (M.S2, SQ2, PI / 2),
    (M.S2, SQ2, 1.25),
    (M.S2, 1.2, 1.4),
    (M.S2, 1.1, 1.5),
    (M.S3, SQ2, PI / 2),
    (M.S3, 2.0, PI / 2),
    (M.S3, 1.5, 1.2),
    (M.S3, 3.0, 0.5),
    (M.S3, 1 / math.sin(0.9) + 0.3, 0.9),
]
IDS = [f"{m.value}-R{R:.4f}-a{a:.4f}" for m, R, a in POINTS]


def _window(model, R, alpha):
    return StripWindow(0.0, 4 * models.tile_width(model, R, alpha))


def test_points_are_feasible():
    assert all(models.is_feasible(m, R, a) for m, R, a in POINTS)


@criterion(7)
@pytest.mark.parametrize("model, R, alpha", POINTS, ids=IDS)
def test_c07_coverage_soundness(model, R, alpha):
    cover = placement.generate_cover(model, R, alpha, _window(model, R, alpha))
    report = verify_cover(cover, SamplingSpec())
    assert report.coverage_fraction == 1.0, f"uncovered point {report.worst_uncovered}"


@criterion(8)
@pytest.mark.parametrize("model, R, alpha", POINTS, ids=IDS)
def test_c08_density_consistency(model, R, alpha):
    try:
        cover = placement.generate_cover(model, R, alpha, _window(model, R, alpha))
    except ConstructionError:
        # density is a property of the periodic pattern itself
        cover = placement.build_pattern(model, R, alpha, _window(model, R, alpha))
    closed = models.density(model, R, alpha).density
    assert abs(empirical_density(cover) - closed) <= 1e-9
    assert multiplicity_density(cover, 1_000_000) == pytest.approx(closed, rel=0.01)


@criterion(9)
def test_c09_delta_monotonicity():
    alphas = np.linspace(0.1, PI / 3, 21)[1:]
    deltas = np.linspace(0.0, 2.0, 20)
    bad = []
    for alpha in alphas:
        d = [models.density(M.S1, 1 / math.sin(alpha) + dl, alpha).density for dl in deltas]
        if np.any(np.diff(d) < 0):
            bad.append(round(float(alpha), 4))
    assert not bad, f"density falls with delta at alpha = {bad}"


@criterion(9)
def test_c09_tight_radius_strict_decrease():
    alphas = np.linspace(0.1, PI / 3, 51)[1:]
    d = [models.density(M.S1, 1 / math.sin(a), a).density for a in alphas]
    assert np.all(np.diff(d) < 0)


def _d2_profile():
    radii = np.linspace(1.01, 4.0, 100)
    return radii, np.array([models.density(M.S2, R, PI / 3).density for R in radii])


@criterion(9)
def test_c09_d2_convex():
    _, d = _d2_profile()
    assert np.all(np.diff(d, 2) >= 0)


@criterion(9)
def test_c09_d2_grid_argmin():
    radii, d = _d2_profile()
    r_best = radii[int(np.argmin(d))]
    assert abs(r_best - SQ2) <= 1e-2, f"grid argmin {r_best:.5f}"


@criterion(10)
def test_c10_obtuse_reduction():
    assert models.obtuse_midline_density(SQ2 / 2, PI).density == pytest.approx(PI / 2, rel=1e-12, abs=0)
    assert models.obtuse_midline_density(SQ2 / 2, PI).density == pytest.approx(
        optimize.optimize_model(optimize.default_domain(M.S3)).density_star, rel=1e-9
    )


@criterion(11)
@pytest.mark.parametrize("model", list(M), ids=[m.value for m in M])
def test_c11_grid_cross_check(model):
    res = 2000
    lo, hi = optimize._ALPHA_BOX[model]
    cell_alpha = (hi - lo) / (res - 1)
    cell_r = 3.0 / (res - 1)
    best = optimize.optimize_model(optimize.default_domain(model))
    grid = optimize.grid_cross_check(model, res)
    assert abs(grid.alpha_star - best.alpha_star) <= cell_alpha
    assert abs(grid.radius_star - best.radius_star) <= cell_r
    assert abs(grid.density_star - best.density_star) <= 1e-4
