"""Tolerance-aware evaluation of formulas over a normed space.

Quantifier-free formulas evaluate directly against an assignment; closed
purely-universal sentences get bounded refutation: sample assignments for the
prefix, report a counterexample only when the matrix is false under both the
working tolerance and a ten-times-tighter one.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..errors import NotClosed, SortError, UnboundVariable
from .ast import (And, Eq, Exists, Forall, Formula, Implies, Le, Lt, Not, Or,
                  SAdd, SConst, SNeg, SNorm, SVar, VAdd, VNeg, VScale, VVar,
                  VZero, VecEq, free_vars)

Assignment = Dict[str, object]


def _vec_value(term, a: Assignment, dim: int):
    if isinstance(term, VVar):
        try:
            v = a[term.name]
        except KeyError:
            raise UnboundVariable(term.name) from None
        return _as_coords(v, dim, term.name)
    if isinstance(term, VZero):
        return (0.0,) * dim
    if isinstance(term, VAdd):
        l = _vec_value(term.left, a, dim)
        r = _vec_value(term.right, a, dim)
        return tuple(x + y for x, y in zip(l, r))
    if isinstance(term, VNeg):
        return tuple(-x for x in _vec_value(term.arg, a, dim))
    if isinstance(term, VScale):
        c = float(term.coeff)
        return tuple(c * x for x in _vec_value(term.arg, a, dim))
    raise SortError(f"not a vector term: {term!r}")


def _as_coords(v, dim: int, name: str):
    if hasattr(v, "x") and hasattr(v, "y"):
        t = (float(v.x), float(v.y))
    elif isinstance(v, (int, float)):
        raise SortError(f"{name!r} holds a scalar but is used as a vector")
    else:
        t = tuple(float(c) for c in v)
    if len(t) != dim:
        raise SortError(f"{name!r} has dimension {len(t)}, space needs {dim}")
    return t


def _scalar_value(term, a: Assignment, space) -> float:
    if isinstance(term, SVar):
        try:
            v = a[term.name]
        except KeyError:
            raise UnboundVariable(term.name) from None
        if not isinstance(v, (int, float)):
            raise SortError(f"{term.name!r} holds a vector but is used as a "
                            "scalar")
        return float(v)
    if isinstance(term, SConst):
        return float(term.value)
    if isinstance(term, SNorm):
        return space.norm(_vec_value(term.arg, a, space.dimension))
    if isinstance(term, SAdd):
        return _scalar_value(term.left, a, space) + \
            _scalar_value(term.right, a, space)
    if isinstance(term, SNeg):
        return -_scalar_value(term.arg, a, space)
    raise SortError(f"not a scalar term: {term!r}")


def eval_qf(space, f: Formula, a: Assignment, tol: float) -> bool:
    """Truth of a quantifier-free formula at an assignment.

    Equalities hold within tol, non-strict comparisons get tol slack, strict
    ones need tol separation, and vector equality is max-coordinate distance
    at most tol.  Connectives short-circuit.
    """
    if isinstance(f, Eq):
        return abs(_scalar_value(f.left, a, space)
                   - _scalar_value(f.right, a, space)) <= tol
    if isinstance(f, Le):
        return _scalar_value(f.left, a, space) \
            <= _scalar_value(f.right, a, space) + tol
    if isinstance(f, Lt):
        return _scalar_value(f.left, a, space) \
            < _scalar_value(f.right, a, space) - tol
    if isinstance(f, VecEq):
        l = _vec_value(f.left, a, space.dimension)
        r = _vec_value(f.right, a, space.dimension)
        return max(abs(x - y) for x, y in zip(l, r)) <= tol
    if isinstance(f, Not):
        return not eval_qf(space, f.arg, a, tol)
    if isinstance(f, And):
        return all(eval_qf(space, g, a, tol) for g in f.args)
    if isinstance(f, Or):
        return any(eval_qf(space, g, a, tol) for g in f.args)
    if isinstance(f, Implies):
        return (not eval_qf(space, f.antecedent, a, tol)) or \
            eval_qf(space, f.consequent, a, tol)
    if isinstance(f, (Forall, Exists)):
        raise SortError("eval_qf needs a quantifier-free formula")
    raise SortError(f"unknown formula node: {f!r}")


# -- bounded refutation ----------------------------------------------------------


@dataclass(frozen=True)
class HoldsOnSamples:
    samples_tried: int


@dataclass(frozen=True)
class Counterexample:
    assignment: Assignment


def strip_universal_prefix(f: Formula) -> Tuple[Tuple[Tuple[str, str], ...],
                                                Formula]:
    """Variables and matrix of a purely universal sentence."""
    prefix: List[Tuple[str, str]] = []
    while isinstance(f, Forall):
        prefix.extend(f.vars)
        f = f.body
    return tuple(prefix), f


class Sampler:
    """Seeded assignment generator mixing box-uniform draws with curated
    special points (axes, markers, pair numerals, zero)."""

    def __init__(self, space, seed: int = 0, box: float = 3.0,
                 special_vectors: Optional[List] = None,
                 curated_probability: float = 0.25):
        self.space = space
        self.rng = random.Random(seed)
        self.box = box
        self.curated_probability = curated_probability
        dim = space.dimension
        specials = [(0.0,) * dim]
        for i in range(dim):
            e = [0.0] * dim
            e[i] = 1.0
            specials.append(tuple(e))
            specials.append(tuple(-c for c in e))
        if special_vectors:
            for v in special_vectors:
                t = (float(v.x), float(v.y)) if hasattr(v, "x") \
                    else tuple(float(c) for c in v)
                specials.append(t + (0.0,) * (dim - len(t)))
                specials.append(tuple(-c for c in t + (0.0,) * (dim - len(t))))
        self.special_points = specials

    def _random_vector(self):
        return tuple(self.rng.uniform(-self.box, self.box)
                     for _ in range(self.space.dimension))

    def _curated_vector(self):
        return self.rng.choice(self.special_points)

    def draw(self, prefix: Tuple[Tuple[str, str], ...]) -> Assignment:
        a: Assignment = {}
        pair_roots = sorted({n[:-2] for n, s in prefix
                             if s == "vec" and n.endswith(".1")
                             and (n[:-2] + ".2", "vec") in set(prefix)})
        curated_pairs = set()
        rng = self.rng
        for root in pair_roots:
            if rng.random() < self.curated_probability:
                curated_pairs.add(root)
        dim = self.space.dimension
        for name, sort in prefix:
            if name in a:
                continue
            if sort == "scalar":
                a[name] = rng.uniform(-self.box, self.box)
                continue
            root = name[:-2] if name.endswith((".1", ".2")) else None
            if root in curated_pairs:
                value = rng.choice((0.0, 1.0, 2.0, 3.0, math.pi))
                one, two = f"{root}.1", f"{root}.2"
                a[one] = (-value, 0.0) + (0.0,) * (dim - 2)
                a[two] = (0.0, value) + (0.0,) * (dim - 2)
                continue
            if rng.random() < self.curated_probability:
                a[name] = self._curated_vector()
            else:
                a[name] = self._random_vector()
        return a


def eval_bounded(space, f: Formula, sampler: Sampler, budget: int,
                 tol: float = 1e-6):
    """Search for a falsifying assignment of a closed universal sentence.

    A counterexample is reported only if the matrix evaluates false under
    both tol and tol/10; running out of budget is a HoldsOnSamples result,
    not an error.
    """
    if free_vars(f):
        raise NotClosed("bounded evaluation needs a closed sentence")
    prefix, matrix = strip_universal_prefix(f)
    if not prefix:
        value = eval_qf(space, matrix, {}, tol)
        if value:
            return HoldsOnSamples(samples_tried=0)
        return Counterexample(assignment={})
    tried = 0
    for _ in range(budget):
        a = sampler.draw(prefix)
        tried += 1
        if not eval_qf(space, matrix, a, tol) and \
                not eval_qf(space, matrix, a, tol / 10.0):
            return Counterexample(assignment=a)
    return HoldsOnSamples(samples_tried=tried)
