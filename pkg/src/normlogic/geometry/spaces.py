"""Normed spaces: boundary-defined planes, euclidean spaces, and 2-sums.

Every space is immutable and every operation a pure function, so values are
safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..errors import DomainError, ZeroVector
from .boundary import BoundarySpec
from .vec import Vec2, as_vec2, seg_point_distance


@dataclass(frozen=True)
class PlaneSpace:
    """Two-dimensional space whose unit circle is a BoundarySpec."""
    boundary: BoundarySpec

    @property
    def dimension(self) -> int:
        return 2

    def norm(self, v) -> float:
        x, y = _coords2(v)
        h = math.hypot(x, y)
        if h == 0.0:
            return 0.0
        return h / self.boundary.rho(math.atan2(y, x))

    def norm_arr(self, vs: np.ndarray) -> np.ndarray:
        """Norms of an (N, 2) array of vectors."""
        h = np.hypot(vs[:, 0], vs[:, 1])
        theta = np.arctan2(vs[:, 1], vs[:, 0])
        out = np.zeros(len(vs))
        nz = h > 0.0
        if nz.any():
            out[nz] = h[nz] / self.boundary.rho_arr(theta[nz])
        return out

    def unit_point(self, theta: float) -> Vec2:
        return self.boundary.unit_point(theta)


@dataclass(frozen=True)
class EuclideanSpace:
    dim: int

    @property
    def dimension(self) -> int:
        return self.dim

    def norm(self, v) -> float:
        if isinstance(v, Vec2):
            return v.hypot()
        return math.sqrt(math.fsum(float(c) * float(c) for c in v))

    def norm_arr(self, vs: np.ndarray) -> np.ndarray:
        return np.sqrt(np.sum(vs * vs, axis=1))

    def unit_point(self, theta: float) -> Vec2:
        if self.dim != 2:
            raise DomainError("unit_point needs dimension 2")
        return Vec2.from_polar(1.0, theta)


@dataclass(frozen=True)
class TwoSumSpace:
    """2-sum: ||(u, v)|| = sqrt(||u||_left^2 + ||v||_right^2)."""
    left: "NormedSpace"
    right: "NormedSpace"

    @property
    def dimension(self) -> int:
        return self.left.dimension + self.right.dimension

    def split(self, v: Sequence[float]) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
        v = _coords(v, self.dimension)
        k = self.left.dimension
        return v[:k], v[k:]

    def norm(self, v) -> float:
        u, w = self.split(v)
        return math.hypot(self.left.norm(u), self.right.norm(w))


NormedSpace = Union[PlaneSpace, EuclideanSpace, TwoSumSpace]


def two_sum(left: NormedSpace, right: NormedSpace) -> TwoSumSpace:
    return TwoSumSpace(left, right)


def norm(space: NormedSpace, v) -> float:
    """Norm of v in the given space (dimension must match)."""
    return space.norm(v)


def _coords2(v) -> Tuple[float, float]:
    if isinstance(v, Vec2):
        return (v.x, v.y)
    x, y = v
    return (float(x), float(y))


def _coords(v, dim: int) -> Tuple[float, ...]:
    if isinstance(v, Vec2):
        t = (v.x, v.y)
    else:
        t = tuple(float(c) for c in v)
    if len(t) != dim:
        raise DomainError(f"vector of dimension {len(t)}, space needs {dim}")
    return t


def _add(v, w):
    if isinstance(v, Vec2) and isinstance(w, Vec2):
        return v + w
    return tuple(a + b for a, b in zip(v, w))


def _scale(k: float, v):
    if isinstance(v, Vec2):
        return v.scale(k)
    return tuple(k * a for a in v)


def aux_a(space: NormedSpace, v, w):
    """The comparison point a(v, w): a proper convex combination of v and
    (||v||/||w||) w whose norm equals ||v|| ||v+w|| / (||v|| + ||w||)."""
    nv, nw = space.norm(v), space.norm(w)
    if nv == 0.0 or nw == 0.0:
        raise ZeroVector("aux_a needs nonzero arguments")
    c = 1.0 / (nv + nw)
    return _add(_scale(nv * c, v), _scale(nw * c * (nv / nw), w))


def same_direction(space: NormedSpace, v, w, tol: float) -> bool:
    """Additive same-direction test: ||v + w|| = ||v|| + ||w|| within tol."""
    return abs(space.norm(_add(v, w)) - space.norm(v) - space.norm(w)) <= tol


def is_rotund(space: NormedSpace, v, tol: float = 1e-9,
              sample_directions: int = 720) -> bool:
    """Whether v/||v|| is not an endpoint of a proper segment of the unit circle.

    Planes whose boundary lists its straight pieces get an exact answer: the
    normalized point is rotund iff it avoids every closed segment (and its
    antipode).  Euclidean spaces are strictly convex.  Any other plane falls
    back to sampled midpoint probing, sound only up to sampling density.
    """
    if isinstance(space, EuclideanSpace):
        if space.norm(v) == 0.0:
            raise ZeroVector("rotundity is about nonzero points")
        return True
    if not isinstance(space, PlaneSpace):
        raise DomainError("rotundity test implemented for plane spaces")
    n = space.norm(v)
    if n == 0.0:
        raise ZeroVector("rotundity is about nonzero points")
    p = as_vec2(v).scale(1.0 / n)
    segs = space.boundary.segments()
    if segs:
        for s in segs:
            if seg_point_distance(p, s.a, s.b) <= tol:
                return False
            if space.boundary.antipodal and \
                    seg_point_distance(p, -s.a, -s.b) <= tol:
                return False
        return True
    return _is_rotund_sampled(space, p, tol, sample_directions)


def _is_rotund_sampled(space: PlaneSpace, p: Vec2, tol: float,
                       directions: int) -> bool:
    """Probe unit points u with ||(u+p)/2|| = ||p||; any distinct hit means
    p sits inside a flat stretch of the circle."""
    for i in range(directions):
        theta = 2.0 * math.pi * i / directions
        u = space.unit_point(theta)
        if (u - p).hypot() <= tol * 1e3:
            continue
        if abs(space.norm((u + p).scale(0.5)) - 1.0) <= tol:
            return False
    return True
