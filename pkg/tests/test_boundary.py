"""Boundary validation and radial-function regularity."""

import math

import numpy as np
import pytest

from normlogic.errors import DomainError
from normlogic.geometry import Vec2
from normlogic.geometry.boundary import (ArcPiece, BoundarySpec, PointPiece,
                                         SegmentPiece)


def test_angular_gap_rejected():
    with pytest.raises(DomainError, match="gap"):
        BoundarySpec((ArcPiece(0.0, 1.0), ArcPiece(2.0, math.pi)),
                     antipodal=True)


def test_discontinuous_join_rejected():
    a = ArcPiece(0.0, 1.0)
    # segment starts at the right angle but the wrong radius
    seg = SegmentPiece(Vec2.from_polar(0.5, 1.0), Vec2.from_polar(0.5, 2.0))
    with pytest.raises(DomainError, match="discontinuous"):
        BoundarySpec((a, seg, ArcPiece(2.0, math.pi)), antipodal=True)


def test_incomplete_coverage_rejected():
    with pytest.raises(DomainError, match="stop"):
        BoundarySpec((ArcPiece(0.0, 1.0),), antipodal=True)


def test_rho_positive_and_lipschitz(l1_space):
    """Radial continuity on a dense grid, against an a-priori bound.

    For a convex body with the origin inside, |rho'| <= R sqrt(R^2 - r0^2)/r0
    where R is the max radius and r0 the inradius about the origin; the
    inradius of the inscribed grid polygon lower-bounds r0.
    """
    n = 100_000
    thetas = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    rho = l1_space.boundary.rho_arr(thetas)
    assert np.all(rho > 0.0)
    xs = rho * np.cos(thetas)
    ys = rho * np.sin(thetas)
    # distance from origin to each chord of the inscribed polygon
    x2, y2 = np.roll(xs, -1), np.roll(ys, -1)
    cross = np.abs(xs * y2 - ys * x2)
    chord = np.hypot(x2 - xs, y2 - ys)
    r0 = float(np.min(cross / chord))
    r_max = float(rho.max())
    lip = r_max * math.sqrt(max(r_max ** 2 - r0 ** 2, 0.0)) / r0
    dtheta = 2.0 * math.pi / n
    jumps = np.abs(np.diff(rho))
    assert float(jumps.max()) <= lip * dtheta * 1.01 + 1e-12


def test_rho_matches_unit_point(l1_space):
    for theta in (0.0, 0.3, 1.0, math.pi / 2, 2.5, math.pi, 4.0):
        p = l1_space.unit_point(theta)
        assert l1_space.norm(p) == pytest.approx(1.0, abs=1e-12)


def test_antipodal_symmetry(l1_space):
    rho = l1_space.boundary.rho
    for theta in (0.1, 0.7, 2.0, 3.0):
        assert rho(theta) == pytest.approx(rho(theta + math.pi), abs=1e-12)


def test_point_piece_zero_width(l1_space):
    kinds = [type(p).__name__ for p in l1_space.boundary.pieces]
    assert kinds == ["ArcPiece", "SegmentPiece", "SegmentPiece", "ArcPiece",
                     "GammaGraphPiece", "PointPiece"]
    point = l1_space.boundary.pieces[-1]
    assert isinstance(point, PointPiece)
    assert point.at == Vec2(-1.0, 0.0)


def test_norms_safe_under_threads(l1_space):
    from concurrent.futures import ThreadPoolExecutor
    import random
    rng = random.Random(0)
    vecs = [Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(64)]
    expected = [l1_space.norm(v) for v in vecs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(l1_space.norm, vecs))
    assert results == expected
