"""Evaluator semantics: tolerance contract, errors, bounded refutation."""

from fractions import Fraction

import pytest

from normlogic.errors import NotClosed, SortError, UnboundVariable
from normlogic.logic import (Counterexample, Eq, Forall, HoldsOnSamples, Le,
                             Lt, Not, Sampler, SConst, SNorm, SVar, VVar,
                             VZero, VecEq, eval_bounded, eval_qf)


def test_norm_of_zero_atom(l1_space):
    f = Eq(SNorm(VZero()), SConst(Fraction(0)))
    assert eval_qf(l1_space, f, {}, 1e-9)


def test_eq_tolerance(l1_space):
    f = Eq(SVar("a"), SVar("b"))
    assert eval_qf(l1_space, f, {"a": 1.0, "b": 1.0 + 5e-7}, 1e-6)
    assert not eval_qf(l1_space, f, {"a": 1.0, "b": 1.0 + 5e-6}, 1e-6)


def test_lt_strictness(l1_space):
    f = Lt(SVar("a"), SVar("b"))
    # within tolerance of equality: strictness must refuse
    assert not eval_qf(l1_space, f, {"a": 1.0, "b": 1.0 + 5e-7}, 1e-6)
    assert eval_qf(l1_space, f, {"a": 1.0, "b": 1.1}, 1e-6)
    # Le accepts the same near-tie
    assert eval_qf(l1_space, Le(SVar("a"), SVar("b")),
                   {"a": 1.0 + 5e-7, "b": 1.0}, 1e-6)


def test_veceq_max_coordinate(l1_space):
    f = VecEq(VVar("v"), VVar("w"))
    assert eval_qf(l1_space, f, {"v": (1, 2), "w": (1 + 1e-8, 2 - 1e-8)},
                   1e-6)
    assert not eval_qf(l1_space, f, {"v": (1, 2), "w": (1, 2.1)}, 1e-6)


def test_unbound_variable(l1_space):
    with pytest.raises(UnboundVariable):
        eval_qf(l1_space, Eq(SVar("a"), SConst(Fraction(0))), {}, 1e-6)


def test_sort_mismatch_in_assignment(l1_space):
    f = Eq(SNorm(VVar("v")), SConst(Fraction(0)))
    with pytest.raises(SortError):
        eval_qf(l1_space, f, {"v": 3.0}, 1e-6)


def test_quantifier_rejected(l1_space):
    f = Forall((("v", "vec"),), Eq(SNorm(VVar("v")), SConst(Fraction(0))))
    with pytest.raises(SortError):
        eval_qf(l1_space, f, {}, 1e-6)


def test_bounded_nonneg_norm_holds(l1_space):
    f = Forall((("v", "vec"),), Le(SConst(Fraction(0)), SNorm(VVar("v"))))
    res = eval_bounded(l1_space, f, Sampler(l1_space, seed=3), 500)
    assert isinstance(res, HoldsOnSamples)
    assert res.samples_tried == 500


def test_bounded_finds_zero_counterexample(l1_space):
    f = Forall((("v", "vec"),), Eq(SNorm(VVar("v")), SConst(Fraction(1))))
    res = eval_bounded(l1_space, f, Sampler(l1_space, seed=3), 2000)
    assert isinstance(res, Counterexample)
    # the reported assignment really falsifies the matrix at both tolerances
    body = f.body
    assert not eval_qf(l1_space, body, res.assignment, 1e-6)
    assert not eval_qf(l1_space, body, res.assignment, 1e-7)


def test_bounded_requires_closed(l1_space):
    f = Eq(SNorm(VVar("v")), SConst(Fraction(1)))
    with pytest.raises(NotClosed):
        eval_bounded(l1_space, f, Sampler(l1_space, seed=1), 10)


def test_sentence_a_holds_on_samples(l1):
    from normlogic.logic import mk_A
    from normlogic.reduction import macro_env
    params, space = l1
    sentence = mk_A(macro_env(params))
    sampler = Sampler(space, seed=11,
                      special_vectors=[params.w1, params.w2, params.w3])
    res = eval_bounded(space, sentence, sampler, 3000, tol=1e-6)
    assert isinstance(res, HoldsOnSamples)
