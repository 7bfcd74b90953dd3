"""Compilation of arithmetic formulas into universal-implication sentences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from ..errors import SortError
from ..geometry.construct import L1Params
from ..logic.ast import (And, Eq, Formula, Le, Not, Or, SAdd, SConst, SVar)
from ..logic.macros import MacroEnv
from ..logic.prenex import check_aia_shape
from ..logic.sentences import b_variable_blocks, mk_A, mk_A_prime, mk_B, \
    mk_B_prime
from ..logic.ast import Implies
from .arith import (AAdd, AAnd, AEq, ALe, AMul, ANat, ANot, AOr, AVar,
                    ArithFormula, var_count)
from .flatten import FlattenResult, flatten_multiplications

from fractions import Fraction


@dataclass(frozen=True)
class ReductionOutput:
    a: Formula
    b: Formula
    a_prime: Optional[Formula]
    b_prime: Optional[Formula]
    m: int
    k: int
    dimension: int
    flatten: FlattenResult
    manifest: Dict
    params: L1Params
    shape_ok: bool


def macro_env(params: L1Params) -> MacroEnv:
    return MacroEnv(q=params.q, r=params.r, m=params.m)


def render_additive(f: ArithFormula) -> Formula:
    """Additive arithmetic rendered over scalar-sorted variables."""
    def term(t):
        if isinstance(t, AVar):
            return SVar(t.name)
        if isinstance(t, ANat):
            return SConst(Fraction(t.value))
        if isinstance(t, AAdd):
            return SAdd(term(t.left), term(t.right))
        if isinstance(t, AMul):
            raise SortError("product node in an additive formula")
        raise SortError(f"unknown arithmetic term {t!r}")

    def go(g):
        if isinstance(g, AEq):
            return Eq(term(g.left), term(g.right))
        if isinstance(g, ALe):
            return Le(term(g.left), term(g.right))
        if isinstance(g, ANot):
            return Not(go(g.arg))
        if isinstance(g, AAnd):
            return And((go(g.left), go(g.right)))
        if isinstance(g, AOr):
            return Or((go(g.left), go(g.right)))
        raise SortError(f"unknown arithmetic formula {g!r}")

    return go(f)


def compile_formula(q: ArithFormula, dimension: int,
                    params: L1Params) -> ReductionOutput:
    """Emit the sentence pair whose joint validity over spaces like the
    constructed plane mirrors unsatisfiability of q over the naturals."""
    if dimension < 2:
        raise ValueError("dimension must be at least 2")
    flat = flatten_multiplications(q)
    k = var_count(q)
    env = macro_env(params)
    q1_logic = render_additive(flat.q1)
    a = mk_A(env)
    b = mk_B(q1_logic, flat.m, k, env)
    a_prime = b_prime = None
    if dimension > 2:
        a_prime = mk_A_prime(env)
        b_prime = mk_B_prime(q1_logic, flat.m, k, env)
    shape_ok = check_aia_shape(Implies(a, b))
    if dimension > 2:
        shape_ok = shape_ok and check_aia_shape(Implies(a_prime, b_prime))
    manifest = {
        "m": flat.m,
        "k": k,
        "dimension": dimension,
        "triples": [list(t) for t in flat.triples],
        "variables": b_variable_blocks(flat.m, k),
    }
    return ReductionOutput(a=a, b=b, a_prime=a_prime, b_prime=b_prime,
                           m=flat.m, k=k, dimension=dimension, flatten=flat,
                           manifest=manifest, params=params,
                           shape_ok=shape_ok)
