"""The boundary curve of the auxiliary plane and its base norm.

The north-west quadrant of the auxiliary unit circle is the graph of

    gamma(x) = g(s) / (1 + g(s)),   s = (x + 1) / (-x),   x in (-1, 0),

with g(s) = 2s + s^2 + sin(s)/M for a positive integer M.  gamma increases
from 0 to 1 across (-1, 0) and is strictly concave whenever M passes the
concavity gate, which makes every interior point of the graph a unit-circle
point of a well-defined norm.  That norm (here: the base norm) is only ever
needed for vectors in the open north-west and south-east quadrants, where the
graph and its antipode determine it completely.

Scalar entry points use plain floats; the ``*_arr`` variants accept numpy
arrays for the dense verification grids.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError

#: Bisection iteration count; enough to exhaust double precision on (-1, 0).
_BISECT_ITERS = 80


def g_eval(s: float, m: int) -> float:
    """g(s) = 2s + s^2 + sin(s)/M."""
    return 2.0 * s + s * s + math.sin(s) / m


def gamma_eval(x: float, m: int) -> float:
    """gamma(x) for x in the open interval (-1, 0)."""
    if not -1.0 < x < 0.0:
        raise DomainError(f"gamma is defined on (-1, 0); got {x}")
    s = (x + 1.0) / (-x)
    gs = g_eval(s, m)
    return gs / (1.0 + gs)


def gamma_dd(x: float, m: int) -> float:
    """Second derivative of gamma, in closed form.

    With h(x) = g(s(x)) and gamma = h/(1+h):

        gamma'' = (h''(1+h) - 2 h'^2) / (1+h)^3,
        h'  = g'(s) s',   h'' = g''(s) s'^2 + g'(s) s'',
        s'  = 1/x^2,      s'' = -2/x^3.
    """
    if not -1.0 < x < 0.0:
        raise DomainError(f"gamma'' is defined on (-1, 0); got {x}")
    s = (x + 1.0) / (-x)
    sp = 1.0 / (x * x)
    spp = -2.0 / (x * x * x)
    gs = 2.0 * s + s * s + math.sin(s) / m
    gp = 2.0 + 2.0 * s + math.cos(s) / m
    gpp = 2.0 - math.sin(s) / m
    hp = gp * sp
    hpp = gpp * sp * sp + gp * spp
    return (hpp * (1.0 + gs) - 2.0 * hp * hp) / (1.0 + gs) ** 3


def gamma_arr(x: np.ndarray, m: int) -> np.ndarray:
    s = (x + 1.0) / (-x)
    gs = 2.0 * s + s * s + np.sin(s) / m
    return gs / (1.0 + gs)


def gamma_dd_arr(x: np.ndarray, m: int) -> np.ndarray:
    s = (x + 1.0) / (-x)
    sp = 1.0 / (x * x)
    spp = -2.0 / (x * x * x)
    gs = 2.0 * s + s * s + np.sin(s) / m
    gp = 2.0 + 2.0 * s + np.cos(s) / m
    gpp = 2.0 - np.sin(s) / m
    hp = gp * sp
    hpp = gpp * sp * sp + gp * spp
    return (hpp * (1.0 + gs) - 2.0 * hp * hp) / (1.0 + gs) ** 3


def concavity_gate(m: int, grid_points: int = 10_000,
                   lo: float = -0.999, hi: float = -0.001) -> bool:
    """True iff gamma'' < 0 at every point of a dense grid of (-1, 0)."""
    xs = np.linspace(lo, hi, grid_points)
    return bool(np.all(gamma_dd_arr(xs, m) < 0.0))


def smallest_concave_m(limit: int = 64) -> int:
    """Smallest positive integer M passing the concavity gate."""
    for m in range(1, limit + 1):
        if concavity_gate(m):
            return m
    raise DomainError(f"no M <= {limit} passes the concavity gate")


def graph_x_for_slope(slope: float, m: int) -> float:
    """The unique x in (-1, 0) with gamma(x)/x equal to the given slope.

    gamma(x)/x decreases strictly from 0- to -inf across (-1, 0) because the
    boundary angle is monotone along a concave graph star-shaped about 0, so
    bisection applies.  slope must be negative.
    """
    if not slope < 0.0:
        raise DomainError(f"slope must be negative; got {slope}")
    lo, hi = -1.0, 0.0
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if mid <= -1.0 or mid >= 0.0:
            break
        # f = gamma(mid) - slope*mid: negative below the solution.
        if gamma_eval(mid, m) - slope * mid < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def l0_norm(v, m: int) -> float:
    """Base norm of a vector in the open NW or SE quadrant.

    Computed as v.x / x0 where x0 solves the ray/graph slope match; vectors in
    the SE quadrant go through their NW antipode.
    """
    x, y = (v.x, v.y) if hasattr(v, "x") else (float(v[0]), float(v[1]))
    if x == 0.0 or y == 0.0 or x * y > 0.0:
        raise DomainError(
            f"base norm needs the open NW or SE quadrant; got ({x}, {y})")
    if x > 0.0:  # antipodal symmetry
        x, y = -x, -y
    x0 = graph_x_for_slope(y / x, m)
    return x / x0


def graph_x_for_angle(theta: float, m: int) -> float:
    """The x in (-1, 0) whose graph point (x, gamma(x)) sits at angle theta.

    theta must lie in the open interval (pi/2, pi); the angle of the graph
    point decreases strictly in x.
    """
    if not math.pi / 2 < theta < math.pi:
        raise DomainError(f"angle outside (pi/2, pi): {theta}")
    c, s = math.cos(theta), math.sin(theta)
    lo, hi = -1.0, 0.0
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        if mid <= -1.0 or mid >= 0.0:
            break
        # cross((cos t, sin t), (x, gamma x)) > 0 iff the graph point's angle
        # exceeds theta, which happens below the solution.
        if gamma_eval(mid, m) * c - mid * s > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def graph_x_for_angle_arr(theta: np.ndarray, m: int) -> np.ndarray:
    """Vectorized graph_x_for_angle (theta strictly inside (pi/2, pi))."""
    c = np.cos(theta)
    s = np.sin(theta)
    lo = np.full_like(theta, -1.0)
    hi = np.zeros_like(theta)
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        above = gamma_arr(mid, m) * c - mid * s > 0.0
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    return 0.5 * (lo + hi)
