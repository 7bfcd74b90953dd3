"""Removal of multiplications from arithmetic formulas.

Every product node is replaced, bottom-up and left to right, by a fresh
variable z_i, with fresh s_i and t_i naming its operands through additive
side equations.  The result q1 is additive, and the original formula is
equivalent to exists s t z (z_i = s_i t_i for all i, and q1): the side
equations pin the fresh variables to values determined by the original ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .arith import (AAdd, AAnd, AEq, ALe, AMul, ANat, ANot, AOr, AVar,
                    ArithFormula, ArithTerm, eval_term)


@dataclass(frozen=True)
class FlattenResult:
    q1: ArithFormula
    triples: Tuple[Tuple[str, str, str], ...]  # (s_i, t_i, z_i) names
    m: int
    operand_terms: Tuple[Tuple[ArithTerm, ArithTerm], ...]  # rewritten operands

    def triple_values(self, witness: Dict[str, int]) -> List[Tuple[int, int, int]]:
        """Values of (s_i, t_i, z_i) determined by a witness, in order."""
        env = dict(witness)
        out = []
        for (s_name, t_name, z_name), (s_term, t_term) in \
                zip(self.triples, self.operand_terms):
            s_val = eval_term(s_term, env)
            t_val = eval_term(t_term, env)
            z_val = s_val * t_val
            env[s_name] = s_val
            env[t_name] = t_val
            env[z_name] = z_val
            out.append((s_val, t_val, z_val))
        return out


def flatten_multiplications(f: ArithFormula) -> FlattenResult:
    state = {"count": 0}
    side_eqs: List[ArithFormula] = []
    operands: List[Tuple[ArithTerm, ArithTerm]] = []
    triples: List[Tuple[str, str, str]] = []

    def term(t: ArithTerm) -> ArithTerm:
        if isinstance(t, (AVar, ANat)):
            return t
        if isinstance(t, AAdd):
            return AAdd(term(t.left), term(t.right))
        if isinstance(t, AMul):
            left = term(t.left)
            right = term(t.right)
            state["count"] += 1
            i = state["count"]
            s_name, t_name, z_name = f"s{i}", f"t{i}", f"z{i}"
            side_eqs.append(AEq(AVar(s_name), left))
            side_eqs.append(AEq(AVar(t_name), right))
            triples.append((s_name, t_name, z_name))
            operands.append((left, right))
            return AVar(z_name)
        raise TypeError(f"not a term: {t!r}")

    def formula(g: ArithFormula) -> ArithFormula:
        if isinstance(g, (AEq, ALe)):
            return type(g)(term(g.left), term(g.right))
        if isinstance(g, ANot):
            return ANot(formula(g.arg))
        if isinstance(g, (AAnd, AOr)):
            return type(g)(formula(g.left), formula(g.right))
        raise TypeError(f"not a formula: {g!r}")

    rewritten = formula(f)
    if not side_eqs:
        return FlattenResult(q1=f, triples=(), m=0, operand_terms=())
    q1 = rewritten
    for eq in reversed(side_eqs):
        q1 = AAnd(eq, q1)
    return FlattenResult(q1=q1, triples=tuple(triples),
                         m=state["count"], operand_terms=tuple(operands))


def has_mul(node) -> bool:
    if isinstance(node, AMul):
        return True
    if isinstance(node, (AVar, ANat)):
        return False
    if isinstance(node, (AAdd, AEq, ALe, AAnd, AOr)):
        return has_mul(node.left) or has_mul(node.right)
    if isinstance(node, ANot):
        return has_mul(node.arg)
    raise TypeError(f"unknown node: {node!r}")
