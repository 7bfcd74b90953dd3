"""Lifting arithmetic witnesses to falsifying vector assignments.

A witness for q makes the compiled refutation sentence false: assign the
canonical marker tuple, the circle-constant pair and its curve certificates,
number pairs for the witness values and the multiplication-triple values,
and the scalar bindings; every antecedent conjunct then holds while the
negated matrix fails.
"""

from __future__ import annotations

import math
from typing import Sequence, Tuple

from ..errors import ToleranceBreach, WitnessInvalid
from ..geometry.construct import L1Params
from ..logic.ast import And, Eq, Formula, Implies, Le, Lt, Not, Or, VecEq
from ..logic.evaluate import Assignment, eval_qf, strip_universal_prefix
from .arith import ArithFormula, eval_arith, var_count
from .compiler import ReductionOutput, compile_formula


def _pair(a: Assignment, name: str, value: float) -> None:
    a[f"{name}.1"] = (-value, 0.0)
    a[f"{name}.2"] = (0.0, value)


def _sine_zero_certificates(a: Assignment, base: Sequence[str],
                            u1_value: float) -> None:
    """Certificate pairs (u1, u2, u3) for the sine gadget at a zero:
    u2-slot = (1+u1)(2*u1+u1^2), u3-slot = u1^2."""
    u1_name, u2_name, u3_name = base
    _pair(a, u1_name, u1_value)
    _pair(a, u2_name, (1.0 + u1_value) * (2.0 * u1_value + u1_value ** 2))
    _pair(a, u3_name, u1_value ** 2)


def lift_witness(q: ArithFormula, witness: Sequence[int], params: L1Params,
                 space, tol: float = 1e-6,
                 compiled: ReductionOutput = None) -> Assignment:
    """Assignment falsifying the matrix of the compiled refutation sentence.

    The witness must satisfy q exactly; every antecedent conjunct of the
    matrix must evaluate true within tol, else ToleranceBreach names the
    first failing atom.
    """
    witness = tuple(int(v) for v in witness)
    k = var_count(q)
    if len(witness) != k:
        raise WitnessInvalid(f"witness length {len(witness)}, need {k}")
    if any(v < 0 for v in witness):
        raise WitnessInvalid("witness values must be natural numbers")
    env = {f"x{i}": v for i, v in enumerate(witness, start=1)}
    if not eval_arith(q, env):
        raise WitnessInvalid(f"witness {witness} does not satisfy the formula")

    out = compiled if compiled is not None else \
        compile_formula(q, 2, params)
    m = out.m
    pi = math.pi

    a: Assignment = {
        "e1": (1.0, 0.0),
        "e2": (0.0, 1.0),
        "w1": params.w1.as_tuple(),
        "w2": params.w2.as_tuple(),
        "w3": params.w3.as_tuple(),
    }
    _pair(a, "A", pi)
    # circle-constant certificates: the sine gadget at s = pi, t = 0
    a["U1.1"] = (-(1.0 + pi) * (2.0 * pi + pi ** 2), 0.0)
    a["U1.2"] = (0.0, (1.0 + pi) * (2.0 * pi + pi ** 2))
    _pair(a, "U2", pi ** 2)

    triples = out.flatten.triple_values(env)
    for i, (s_val, t_val, z_val) in enumerate(triples, start=1):
        _pair(a, f"S{i}", float(s_val))
        _pair(a, f"T{i}", float(t_val))
        _pair(a, f"Z{i}", float(z_val))
        _sine_zero_certificates(
            a, (f"S{m + i}", f"S{2 * m + i}", f"S{3 * m + i}"),
            (s_val + 1.0) * pi)
        _sine_zero_certificates(
            a, (f"T{m + i}", f"T{2 * m + i}", f"T{3 * m + i}"),
            (t_val + 1.0) * pi)
        a[f"s{i}"] = float(s_val)
        a[f"t{i}"] = float(t_val)
        a[f"z{i}"] = float(z_val)
    for i, x_val in enumerate(witness, start=1):
        _pair(a, f"X{i}", float(x_val))
        _sine_zero_certificates(
            a, (f"X{k + i}", f"X{2 * k + i}", f"X{3 * k + i}"),
            (x_val + 1.0) * pi)
        a[f"x{i}"] = float(x_val)

    _, matrix = strip_universal_prefix(out.b)
    antecedent = matrix.antecedent
    for conjunct in (antecedent.args if isinstance(antecedent, And)
                     else (antecedent,)):
        if not eval_qf(space, conjunct, a, tol):
            atom, residual = _first_failing_atom(space, conjunct, a, tol)
            raise ToleranceBreach(
                f"antecedent atom missed by {residual:.3e}: {atom!r}")
    if eval_qf(space, matrix, a, tol):
        raise ToleranceBreach(
            "lifted assignment fails to falsify the matrix")
    return a


def _first_failing_atom(space, f: Formula, a: Assignment,
                        tol: float) -> Tuple[Formula, float]:
    """Locate a false atom inside a failing formula, with its residual."""
    from ..logic.evaluate import _scalar_value, _vec_value

    if isinstance(f, (Eq, Le, Lt)):
        l = _scalar_value(f.left, a, space)
        r = _scalar_value(f.right, a, space)
        return f, abs(l - r)
    if isinstance(f, VecEq):
        l = _vec_value(f.left, a, space.dimension)
        r = _vec_value(f.right, a, space.dimension)
        return f, max(abs(x - y) for x, y in zip(l, r))
    if isinstance(f, Not):
        return _first_failing_atom(space, f.arg, a, tol)
    if isinstance(f, And):
        for g in f.args:
            if not eval_qf(space, g, a, tol):
                return _first_failing_atom(space, g, a, tol)
    if isinstance(f, Or):
        # all disjuncts fail; report the first
        return _first_failing_atom(space, f.args[0], a, tol) if f.args \
            else (f, math.inf)
    if isinstance(f, Implies):
        if not eval_qf(space, f.consequent, a, tol):
            return _first_failing_atom(space, f.consequent, a, tol)
        return _first_failing_atom(space, f.antecedent, a, tol)
    return f, math.nan
