"""Shape checking and prenex variants of universal implications."""

from __future__ import annotations

from typing import Tuple

from ..errors import NotClosed
from .ast import (Exists, Forall, Formula, Implies, free_vars,
                  is_quantifier_free)
from .evaluate import strip_universal_prefix


def _purely_universal(f: Formula) -> bool:
    while isinstance(f, Forall):
        f = f.body
    return is_quantifier_free(f)


def check_aia_shape(f: Formula) -> bool:
    """True iff f is an implication between purely universal sentences."""
    if free_vars(f):
        raise NotClosed("shape check needs a closed sentence")
    if not isinstance(f, Implies):
        return False
    return _purely_universal(f.antecedent) and _purely_universal(f.consequent)


def _rename_apart(vars_a, taken):
    """Deterministically prime antecedent names that clash elsewhere."""
    mapping = {}
    renamed = []
    for name, sort in vars_a:
        new = name
        while new in taken:
            new += "'"
        taken = taken | {new}
        mapping[name] = new
        renamed.append((new, sort))
    return tuple(renamed), mapping


def _substitute_names(f: Formula, mapping):
    from .ast import (And, Eq, Le, Lt, Not, Or, SAdd, SConst, SNeg, SNorm,
                      SVar, VAdd, VNeg, VScale, VVar, VZero, VecEq)

    def term(t):
        if isinstance(t, VVar):
            return VVar(mapping.get(t.name, t.name))
        if isinstance(t, SVar):
            return SVar(mapping.get(t.name, t.name))
        if isinstance(t, (VZero, SConst)):
            return t
        if isinstance(t, (VNeg, SNeg, SNorm)):
            return type(t)(term(t.arg))
        if isinstance(t, VScale):
            return VScale(t.coeff, term(t.arg))
        if isinstance(t, (VAdd, SAdd)):
            return type(t)(term(t.left), term(t.right))
        raise TypeError(f"unknown term {t!r}")

    def go(g):
        if isinstance(g, (Eq, Le, Lt, VecEq)):
            return type(g)(term(g.left), term(g.right))
        if isinstance(g, Not):
            return Not(go(g.arg))
        if isinstance(g, (And, Or)):
            return type(g)(tuple(go(h) for h in g.args))
        if isinstance(g, Implies):
            return Implies(go(g.antecedent), go(g.consequent))
        if isinstance(g, (Forall, Exists)):
            inner = {k: v for k, v in mapping.items()
                     if k not in {n for n, _ in g.vars}}
            if inner == mapping:
                return type(g)(g.vars, go(g.body))
            return type(g)(g.vars, _substitute_names(g.body, inner))
        raise TypeError(f"unknown formula {g!r}")

    return go(f)


def prenex_variants(f: Formula) -> Tuple[Formula, Formula]:
    """Logically equivalent (forall-exists, exists-forall) prenex forms of an
    implication between purely universal sentences.

    Pulling the antecedent's universal prefix out of an implication flips it
    existential; clashing names get primed first.
    """
    if free_vars(f):
        raise NotClosed("prenexing needs a closed sentence")
    if not check_aia_shape(f):
        raise ValueError("not an implication of purely universal sentences")
    vars_a, matrix_a = strip_universal_prefix(f.antecedent)
    vars_b, matrix_b = strip_universal_prefix(f.consequent)
    taken = {n for n, _ in vars_b}
    renamed_a, mapping = _rename_apart(vars_a, taken)
    matrix_a = _substitute_names(matrix_a, mapping)
    core = Implies(matrix_a, matrix_b)

    def wrap(cls, vs, body):
        return cls(tuple(vs), body) if vs else body

    ae = wrap(Forall, vars_b, wrap(Exists, renamed_a, core))
    ea = wrap(Exists, renamed_a, wrap(Forall, vars_b, core))
    return ae, ea
