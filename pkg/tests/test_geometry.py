import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sectorcover.errors import InvalidParametersError
from sectorcover.geometry import (
    Point,
    SectorPlacement,
    SectorShape,
    StripWindow,
    directionally_covers,
    sector_area,
    sector_contains,
)

LEFT = SectorPlacement(SectorShape(1.0, math.pi / 3), Point(0.0, 0.0), 5 * math.pi / 6)
RIGHT = SectorPlacement(SectorShape(1.0, math.pi / 3), Point(0.0, 0.0), -math.pi / 6)


@pytest.mark.parametrize(
    "p, expected",
    [((-0.5, 0.0), True), ((-1.1, 0.0), False), ((0.0, 0.0), True), ((-1.0, 0.0), True)],
)
def test_sector_contains_examples(p, expected):
    assert sector_contains(LEFT, Point(*p)) is expected


def test_directional_examples():
    assert directionally_covers(LEFT, Point(-0.5, 0.0))
    assert sector_contains(RIGHT, Point(0.5, 0.0))
    assert not directionally_covers(RIGHT, Point(0.5, 0.0))
    assert directionally_covers(LEFT, Point(0.0, 0.0))


def test_straight_sides_closed():
    p, q = LEFT.side_endpoints()
    assert sector_contains(LEFT, p) and sector_contains(LEFT, q)
    assert sector_contains(LEFT, Point(0.5 * p.x, 0.5 * p.y))


@pytest.mark.parametrize(
    "R, alpha, expected",
    [(1.0, math.pi, math.pi / 2), (math.sqrt(2), math.pi / 3, math.pi / 3), (2 / math.sqrt(3), math.pi / 3, 2 * math.pi / 9)],
)
def test_sector_area(R, alpha, expected):
    assert sector_area(SectorShape(R, alpha)) == pytest.approx(expected, rel=1e-14)


def test_sector_area_matches_polar_quadrature():
    shape = SectorShape(1.3, 0.7)
    r = np.linspace(0, shape.radius, 20001)
    # integral of r dr dtheta by trapezoid rule
    assert np.trapezoid(r, r) * shape.angle == pytest.approx(sector_area(shape), rel=1e-9)


@pytest.mark.parametrize("bad", [dict(radius=0, angle=1), dict(radius=1, angle=0), dict(radius=1, angle=4)])
def test_shape_validation(bad):
    with pytest.raises(InvalidParametersError):
        SectorShape(**bad)


def test_window_and_point_validation():
    with pytest.raises(InvalidParametersError):
        StripWindow(1.0, 1.0)
    with pytest.raises(InvalidParametersError):
        Point(float("nan"), 0.0)


coords = st.floats(-3, 3, allow_nan=False)
angles = st.floats(0.05, math.pi)
starts = st.floats(-2 * math.pi, 2 * math.pi)


def _placement(r, a, sx, sy, th):
    return SectorPlacement(SectorShape(r, a), Point(sx, sy), th)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.2, 3), angles, coords, coords, starts, coords, coords)
def test_directional_implies_contains(r, a, sx, sy, th, px, py):
    s, p = _placement(r, a, sx, sy, th), Point(px, py)
    if directionally_covers(s, p):
        assert sector_contains(s, p)


def _far_from_boundary(s, p, tol=1e-6):
    dx, dy = p.x - s.vertex.x, p.y - s.vertex.y
    d = math.hypot(dx, dy)
    if abs(d - s.radius) < tol or d < tol:
        return False
    rel = (math.atan2(dy, dx) - s.start_direction) % (2 * math.pi)
    return min(abs(rel), abs(rel - s.angle), abs(rel - 2 * math.pi)) > tol and abs(p.x - s.vertex.x) > tol


@settings(max_examples=300, deadline=None)
@given(st.floats(0.2, 3), angles, coords, coords, starts, coords, coords, coords, coords)
def test_translation_invariance(r, a, sx, sy, th, px, py, tx, ty):
    s, p = _placement(r, a, sx, sy, th), Point(px, py)
    if not _far_from_boundary(s, p):
        return
    s2 = s.translated(tx, ty)
    p2 = Point(px + tx, py + ty)
    assert sector_contains(s, p) == sector_contains(s2, p2)
    assert directionally_covers(s, p) == directionally_covers(s2, p2)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.2, 3), angles, coords, coords, starts, coords, coords, st.floats(0.1, 10))
def test_scale_covariance(r, a, sx, sy, th, px, py, lam):
    s, p = _placement(r, a, sx, sy, th), Point(px, py)
    if not _far_from_boundary(s, p):
        return
    s2 = _placement(r * lam, a, sx * lam, sy * lam, th)
    p2 = Point(px * lam, py * lam)
    assert sector_contains(s, p) == sector_contains(s2, p2)
    assert directionally_covers(s, p) == directionally_covers(s2, p2)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.2, 3), angles, coords, coords, starts, coords, coords)
def test_angular_wraparound(r, a, sx, sy, th, px, py):
    s, p = _placement(r, a, sx, sy, th), Point(px, py)
    if not _far_from_boundary(s, p):
        return
    s2 = _placement(r, a, sx, sy, th + 2 * math.pi)
    assert sector_contains(s, p) == sector_contains(s2, p)
    assert directionally_covers(s, p) == directionally_covers(s2, p)
