"""Construction of the main plane: parameters and unit-circle assembly.

The recipe: pick the smallest M passing the concavity gate (or a configured
M), pick the first rational q from the candidate list for which the two
boundary markers w1 (near e1) and w2 (near e2) end up base-norm distance
d > 3/4 apart, then scan rational radii r just above d/3 until the base-norm
circles of radii r about w1 and 2r about w2 meet at a point w3 strictly
north-east of the segment [w1, w2] and strictly inside the euclidean unit
disc.  The unit circle of the constructed norm is then: the euclidean arc
from e1 to w1, the segments [w1, w3] and [w3, w2], the euclidean arc from w2
to e2, the concave graph across the north-west quadrant closing at -e1, and
the antipodal image of all of that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..config import Config
from ..errors import ConstructionFailed
from .boundary import (ArcPiece, BoundarySpec, GammaGraphPiece, PointPiece,
                       SegmentPiece)
from .curve import concavity_gate, gamma_eval, graph_x_for_angle, l0_norm, \
    smallest_concave_m
from .spaces import PlaneSpace
from .vec import Vec2

_BISECT_ITERS = 80


@dataclass(frozen=True)
class L1Params:
    """Everything needed to rebuild the constructed plane bit for bit."""
    m: int
    q: Fraction
    r: Fraction
    d: float
    w1: Vec2
    w2: Vec2
    w3: Vec2


def base_unit_point(theta: float, m: int) -> Vec2:
    """Unit vector of the base norm at angle theta in (pi/2, pi)."""
    x = graph_x_for_angle(theta, m)
    return Vec2(x, gamma_eval(x, m))


def _marker_near_e1(q: float, m: int) -> Tuple[Vec2, float]:
    """Euclidean unit vector w1 = (cos t, sin t) with ||e1 - w1||_base = q."""
    def f(t: float) -> float:
        return l0_norm(Vec2(1.0 - math.cos(t), -math.sin(t)), m) - q

    lo = 0.01
    while f(lo) > 0.0:
        lo *= 0.5
        if lo < 1e-12:
            raise ConstructionFailed("w1: no lower bracket on the arc angle")
    hi = lo
    while f(hi) < 0.0:
        hi += 0.01
        if hi >= math.pi / 2:
            raise ConstructionFailed(f"w1: base distance never reaches q={q}")
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    return Vec2(math.cos(t), math.sin(t)), t


def _marker_near_e2(q: float, m: int) -> Tuple[Vec2, float]:
    """Euclidean unit vector w2 = (cos u, sin u) with ||e2 - w2||_base = q."""
    def f(u: float) -> float:
        return l0_norm(Vec2(-math.cos(u), 1.0 - math.sin(u)), m) - q

    hi = math.pi / 2 - 0.01
    while f(hi) > 0.0:
        hi = math.pi / 2 - 0.5 * (math.pi / 2 - hi)
        if math.pi / 2 - hi < 1e-12:
            raise ConstructionFailed("w2: no upper bracket on the arc angle")
    lo = hi
    while f(lo) < 0.0:
        lo -= 0.01
        if lo <= 0.0:
            raise ConstructionFailed(f"w2: base distance never reaches q={q}")
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            hi = mid
        else:
            lo = mid
    u = 0.5 * (lo + hi)
    return Vec2(math.cos(u), math.sin(u)), u


def _circle_meet(w1: Vec2, w2: Vec2, r: float, m: int) -> list:
    """All points w3 = w1 + r*u(theta) with ||w3 - w2||_base = 2r, u on the
    base unit circle's NW branch."""
    def residual(theta: float) -> Optional[float]:
        p = w1 + base_unit_point(theta, m).scale(r)
        dxy = p - w2
        if dxy.x * dxy.y >= 0.0:
            return None
        return l0_norm(dxy, m) - 2.0 * r

    n = 720
    lo_th = math.pi / 2 + 1e-9
    hi_th = math.pi - 1e-9
    prev_val = None
    prev_th = None
    hits = []
    for i in range(n + 1):
        th = lo_th + (hi_th - lo_th) * i / n
        val = residual(th)
        if val is None:
            prev_val = None
            continue
        if prev_val is not None and prev_val * val < 0.0:
            a, b = prev_th, th
            fa = prev_val
            for _ in range(_BISECT_ITERS):
                mid = 0.5 * (a + b)
                fm = residual(mid)
                if fm is None:
                    break
                if (fm < 0.0) == (fa < 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            th_star = 0.5 * (a + b)
            hits.append(w1 + base_unit_point(th_star, m).scale(r))
        prev_val, prev_th = val, th
    return hits


def _north_east_of(p: Vec2, a: Vec2, b: Vec2) -> bool:
    """Strictly on the far side of line a-b from the origin."""
    side = (b - a).cross(p - a)
    origin_side = (b - a).cross(-a)
    return side * origin_side < 0.0


def assemble_boundary(params: L1Params) -> BoundarySpec:
    """Unit-circle pieces for the constructed plane, in ccw angle order."""
    t1 = params.w1.angle()
    t2 = params.w2.angle()
    return BoundarySpec(pieces=(
        ArcPiece(0.0, t1),
        SegmentPiece(params.w1, params.w3),
        SegmentPiece(params.w3, params.w2),
        ArcPiece(t2, math.pi / 2),
        GammaGraphPiece(params.m),
        PointPiece(Vec2(-1.0, 0.0)),
    ), antipodal=True)


def check_params(params: L1Params, space: PlaneSpace,
                 tol: float = 1e-9) -> None:
    """Raise ConstructionFailed on the first violated parameter invariant."""
    p = params
    if not 0 < p.q < Fraction(1, 4):
        raise ConstructionFailed(f"q bound violated: q={p.q}")
    if not p.d > 0.75:
        raise ConstructionFailed(f"d > 3/4 violated: d={p.d}")
    if not (p.r > p.d / 3.0 and p.d / 3.0 >= 0.25):
        raise ConstructionFailed(f"r > d/3 >= 1/4 violated: r={p.r}, d={p.d}")
    for w in (p.w1, p.w2):
        if abs(w.hypot() - 1.0) > tol:
            raise ConstructionFailed(f"marker not on euclidean circle: {w}")
        if not (w.x > 0 and w.y > 0):
            raise ConstructionFailed(f"marker outside open NE quadrant: {w}")
    if not p.w3.hypot() < 1.0:
        raise ConstructionFailed(f"w3 outside open unit disc: {p.w3}")
    if not _north_east_of(p.w3, p.w1, p.w2):
        raise ConstructionFailed(f"w3 not north-east of [w1, w2]: {p.w3}")
    if abs(space.norm(p.w1 - p.w3) - float(p.r)) > tol:
        raise ConstructionFailed("segment [w1, w3] length differs from r")
    if abs(space.norm(p.w3 - p.w2) - 2.0 * float(p.r)) > tol:
        raise ConstructionFailed("segment [w3, w2] length differs from 2r")


def construct_l1(m: Optional[int] = None,
                 q_candidates: Optional[Sequence[Fraction]] = None,
                 r_grid_step: Optional[Fraction] = None,
                 config: Optional[Config] = None,
                 max_r_steps: int = 1024) -> Tuple[L1Params, PlaneSpace]:
    """Run the full construction; deterministic for fixed inputs."""
    cfg = config or Config()
    if m is None:
        m = cfg.m if cfg.m is not None else smallest_concave_m()
    if not concavity_gate(m):
        raise ConstructionFailed(f"M={m} fails the concavity gate")
    q_candidates = q_candidates if q_candidates is not None else cfg.q_candidates
    r_grid_step = r_grid_step if r_grid_step is not None else cfg.r_grid_step

    chosen = None
    for q in q_candidates:
        if not 0 < q < Fraction(1, 4):
            continue
        w1, _ = _marker_near_e1(float(q), m)
        w2, _ = _marker_near_e2(float(q), m)
        d = l0_norm(w1 - w2, m)
        if d > 0.75:
            chosen = (q, w1, w2, d)
            break
    if chosen is None:
        raise ConstructionFailed(
            "no candidate q gives both 0 < q < 1/4 and d > 3/4")
    q, w1, w2, d = chosen

    step = r_grid_step
    k0 = math.floor((d / 3.0) / float(step))
    for k in range(1, max_r_steps + 1):
        r = (k0 + k) * step
        for w3 in _circle_meet(w1, w2, float(r), m):
            if w3.hypot() < 1.0 and _north_east_of(w3, w1, w2):
                params = L1Params(m=m, q=q, r=r, d=d, w1=w1, w2=w2, w3=w3)
                boundary = assemble_boundary(params)
                boundary.validate_convex()
                space = PlaneSpace(boundary)
                check_params(params, space)
                return params, space
    raise ConstructionFailed(
        f"no rational r on the step-{step} grid above d/3 yields a valid w3")
