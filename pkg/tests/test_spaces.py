"""Norm axioms, the comparison-point identity, and 2-sum behaviour."""

import math
import random

import numpy as np
import pytest

from normlogic.errors import ZeroVector
from normlogic.geometry import (EuclideanSpace, Vec2, aux_a, norm,
                                same_direction, two_sum)


def _random_vec(rng, lo=-3.0, hi=3.0):
    return Vec2(rng.uniform(lo, hi), rng.uniform(lo, hi))


def test_norm_of_zero(l1_space):
    assert norm(l1_space, Vec2(0.0, 0.0)) == 0.0
    assert norm(EuclideanSpace(3), (0.0, 0.0, 0.0)) == 0.0


def test_vec2_rejects_non_finite():
    from normlogic.errors import DomainError
    with pytest.raises(DomainError):
        Vec2(float("nan"), 0.0)
    with pytest.raises(DomainError):
        Vec2(0.0, float("inf"))


def test_homogeneity(l1_space):
    rng = random.Random(7)
    for _ in range(1000):
        v = _random_vec(rng)
        lam = rng.uniform(-5.0, 5.0)
        nv = l1_space.norm(v)
        assert abs(l1_space.norm(v.scale(lam)) - abs(lam) * nv) \
            <= 1e-9 * (1.0 + nv)


def test_triangle_inequality(l1_space):
    rng = random.Random(8)
    for _ in range(1000):
        v, w = _random_vec(rng), _random_vec(rng)
        assert l1_space.norm(v + w) <= l1_space.norm(v) + l1_space.norm(w) + 1e-9


def test_positive_definite(l1_space):
    rng = random.Random(9)
    for _ in range(200):
        v = _random_vec(rng)
        if v.hypot() > 1e-12:
            assert l1_space.norm(v) > 0.0


def test_norm_arr_matches_scalar(l1_space):
    rng = random.Random(10)
    vs = np.array([[rng.uniform(-2, 2), rng.uniform(-2, 2)]
                   for _ in range(500)])
    batch = l1_space.norm_arr(vs)
    for row, n in zip(vs, batch):
        assert n == pytest.approx(l1_space.norm(Vec2(*row)), abs=1e-12)


def test_aux_a_same_ray_is_identity(l1_space):
    v = Vec2(0.3, -1.2)
    a = aux_a(l1_space, v, v)
    assert (a - v).hypot() <= 1e-12
    a2 = aux_a(l1_space, v, v.scale(2.0))
    assert (a2 - v).hypot() <= 1e-12


def test_aux_a_norm_identity(l1_space):
    rng = random.Random(11)
    for _ in range(300):
        v, w = _random_vec(rng), _random_vec(rng)
        if v.hypot() < 1e-6 or w.hypot() < 1e-6:
            continue
        nv, nw = l1_space.norm(v), l1_space.norm(w)
        a = aux_a(l1_space, v, w)
        expected = nv * l1_space.norm(v + w) / (nv + nw)
        assert l1_space.norm(a) == pytest.approx(expected, abs=1e-9)
        assert l1_space.norm(a) <= nv + 1e-9


def test_aux_a_zero_vector(l1_space):
    with pytest.raises(ZeroVector):
        aux_a(l1_space, Vec2(0.0, 0.0), Vec2(1.0, 0.0))


def test_same_direction_basics(l1_space):
    v = Vec2(0.4, 1.1)
    assert same_direction(l1_space, v, v, 1e-9)
    assert same_direction(l1_space, v, v.scale(3.5), 1e-9)
    e2 = Vec2(0.0, 1.0)
    assert not same_direction(l1_space, e2, -e2, 1e-9)


def test_same_direction_on_maximal_segment(l1):
    # two interior points of [w1, w3], translated to rays from the origin,
    # witness additivity without being parallel
    params, space = l1
    p = params.w1.scale(0.7) + params.w3.scale(0.3)
    q = params.w1.scale(0.2) + params.w3.scale(0.8)
    assert abs(space.norm(p) - 1.0) < 1e-12
    assert abs(space.norm(q) - 1.0) < 1e-12
    assert same_direction(space, p, q, 1e-9)
    assert p.cross(q) != 0.0  # genuinely not parallel


def test_two_sum_norms(l1):
    params, space = l1
    w = two_sum(space, EuclideanSpace(1))
    assert w.dimension == 3
    w3 = params.w3
    assert w.norm((w3.x, w3.y, 0.0)) == pytest.approx(1.0, abs=1e-12)
    assert w.norm((0.0, 0.0, 2.5)) == pytest.approx(2.5, abs=1e-15)
    rng = random.Random(12)
    for _ in range(200):
        v = _random_vec(rng)
        t = rng.uniform(-2, 2)
        expect = math.hypot(space.norm(v), abs(t))
        assert w.norm((v.x, v.y, t)) == pytest.approx(expect, abs=1e-12)


def test_two_sum_nested(l1_space):
    w = two_sum(l1_space, EuclideanSpace(2))
    assert w.dimension == 4
    assert w.norm((0.0, 1.0, 0.0, 0.0)) == pytest.approx(1.0, abs=1e-12)
