"""Witness lifting: falsification of the refutation sentence's matrix."""

import pytest

from normlogic.errors import WitnessInvalid
from normlogic.logic import eval_qf
from normlogic.logic.evaluate import strip_universal_prefix
from normlogic.reduction import (bounded_nat_sat, compile_formula,
                                 lift_witness, parse_arith)


def _matrix(compiled):
    _, matrix = strip_universal_prefix(compiled.b)
    return matrix


def test_plain_equation(l1):
    params, space = l1
    q = parse_arith("x1 = 2")
    a = lift_witness(q, (2,), params, space)
    compiled = compile_formula(q, 2, params)
    assert not eval_qf(space, _matrix(compiled), a, 1e-6)
    assert eval_qf(space, _matrix(compiled).antecedent, a, 1e-6)


def test_square_equation_mult_block(l1):
    params, space = l1
    q = parse_arith("x1*x1 = 4")
    witness = bounded_nat_sat(q, 10)
    assert witness == (2,)
    compiled = compile_formula(q, 2, params)
    a = lift_witness(q, witness, params, space, compiled=compiled)
    matrix = _matrix(compiled)
    # the multiplication conjunct (third antecedent block) holds with the
    # product pair bound to 4
    blocks = matrix.antecedent.args
    assert eval_qf(space, blocks[2], a, 1e-6)
    assert a["Z1.2"] == (0.0, 4.0)
    assert not eval_qf(space, matrix, a, 1e-6)


def test_two_variable_formula(l1):
    params, space = l1
    q = parse_arith("x1 + x2 = x2 + x1 and x1 = 1")
    witness = bounded_nat_sat(q, 10)
    a = lift_witness(q, witness, params, space)
    compiled = compile_formula(q, 2, params)
    assert not eval_qf(space, _matrix(compiled), a, 1e-6)


def test_invalid_witness_rejected(l1):
    params, space = l1
    q = parse_arith("x1 = 2")
    with pytest.raises(WitnessInvalid):
        lift_witness(q, (3,), params, space)
    with pytest.raises(WitnessInvalid):
        lift_witness(q, (2, 5), params, space)  # wrong arity


def test_unsat_formula_has_no_witness(l1):
    params, space = l1
    q = parse_arith("x1 + 1 = x1")
    assert bounded_nat_sat(q, 100) is None
    with pytest.raises(WitnessInvalid):
        lift_witness(q, (0,), params, space)


def test_tolerance_breach_reports_atom(l1):
    from normlogic.errors import ToleranceBreach
    params, space = l1
    q = parse_arith("x1 = 2")
    # an impossible tolerance surfaces the accumulated rounding as a breach
    with pytest.raises(ToleranceBreach, match="missed by"):
        lift_witness(q, (2,), params, space, tol=1e-18)
