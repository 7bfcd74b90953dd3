"""Arithmetic syntax, semantics, and the bounded satisfiability oracle."""

import pytest

from normlogic.errors import ParseError
from normlogic.reduction import (bounded_nat_sat, eval_arith, parse_arith,
                                 print_arith, var_count)
from normlogic.reduction.arith import (AAdd, AAnd, AEq, ALe, AMul, ANat,
                                       ANot, AOr, AVar)


def test_parse_product_equation():
    f = parse_arith("x1*x1 = 2")
    assert f == AEq(AMul(AVar("x1"), AVar("x1")), ANat(2))


def test_parse_additive():
    f = parse_arith("x1 + 1 = x1")
    assert f == AEq(AAdd(AVar("x1"), ANat(1)), AVar("x1"))


def test_parse_error():
    with pytest.raises(ParseError):
        parse_arith("x1 = = 2")
    with pytest.raises(ParseError):
        parse_arith("x1 + = 2")
    with pytest.raises(ParseError):
        parse_arith("y1 = 2")  # variables are x1, x2, ...


def test_precedence():
    f = parse_arith("x1 + x2 * x3 = 7")
    assert f == AEq(AAdd(AVar("x1"), AMul(AVar("x2"), AVar("x3"))), ANat(7))
    g = parse_arith("(x1 + x2) * x3 = 7")
    assert g == AEq(AMul(AAdd(AVar("x1"), AVar("x2")), AVar("x3")), ANat(7))


def test_connective_precedence():
    f = parse_arith("x1 = 1 and x2 = 2 or x1 = 0")
    assert isinstance(f, AOr)
    assert isinstance(f.left, AAnd)


def test_strict_less_desugars():
    f = parse_arith("x1 < 3")
    assert f == AAnd(ALe(AVar("x1"), ANat(3)),
                     ANot(AEq(AVar("x1"), ANat(3))))


def test_parenthesized_formula():
    f = parse_arith("not (x1 = 2 or x1 = 3)")
    assert isinstance(f, ANot) and isinstance(f.arg, AOr)


@pytest.mark.parametrize("text", [
    "x1*x1 = 2", "x1 + 1 = x1", "x1 <= x2 and x2 + 1 <= x1",
    "not (x1 = 2 or x2 <= 1)", "(x1 + x2) * x3 = 7",
    "x1 * (x2 + 1) = 6", "2 * x1 = x2", "x1 < 3",
])
def test_round_trip(text):
    f = parse_arith(text)
    assert parse_arith(print_arith(f)) == f


def test_eval_arith():
    f = parse_arith("x1*x1 + x2 = 5")
    assert eval_arith(f, {"x1": 2, "x2": 1})
    assert not eval_arith(f, {"x1": 1, "x2": 1})


def test_var_count():
    assert var_count(parse_arith("x1 = 2")) == 1
    assert var_count(parse_arith("x3 = 2")) == 3  # ranges over x1..x3
    assert var_count(parse_arith("1 + 1 = 2")) == 0


def test_bounded_sat_square():
    assert bounded_nat_sat(parse_arith("x1*x1 = 4"), 10) == (2,)


def test_bounded_sat_unsat():
    assert bounded_nat_sat(parse_arith("x1 + 1 = x1"), 100) is None
    assert bounded_nat_sat(parse_arith("x1*x1 = 2"), 100) is None


def test_bounded_sat_lexicographic():
    # both (0,3) and (1,2) satisfy; lexicographic order picks (0,3)
    assert bounded_nat_sat(parse_arith("x1 + x2 = 3"), 5) == (0, 3)


def test_bounded_sat_closed_formula():
    assert bounded_nat_sat(parse_arith("1 + 1 = 2"), 3) == ()
    assert bounded_nat_sat(parse_arith("1 = 2"), 3) is None
