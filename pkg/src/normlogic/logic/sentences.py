"""The closed universal sentences of the reduction.

The first sentence pins down spaces that look like the constructed plane
(five-point configuration, a half-period below four, axis behaviour,
periodicity).  The second adds, for a given additive matrix over scalar
variables, enough natural-number and multiplication bindings that its
negation follows; together they form the universal implication emitted by
the compiler.  For dimensions above two both gain a decomposition clause
tying the axis vectors into the distinguished plane.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..errors import SortError
from .ast import (And, Eq, Formula, Forall, Implies, Not, SNorm, SVar, VVar,
                  conj, free_vars, is_quantifier_free, vadd)
from .macros import (MacroEnv, mk_Def, mk_Periodic, mk_pMult, mk_pN, mk_pPar,
                     mk_pPi, mk_pW)
from .pairs import pair_component_names, pair_var
from .ast import VecEq

_PLAIN_HEAD = ("e1", "e2", "w1", "w2", "w3")


def _pair_block(names) -> List[Tuple[str, str]]:
    out = []
    for n in names:
        a, b = pair_component_names(n)
        out.extend([(a, "vec"), (b, "vec")])
    return out


def mk_A(env: MacroEnv) -> Formula:
    """The space-characterizing sentence; closed and purely universal."""
    pair_names = ["A", "U1", "U2"]
    tail_pairs = ["S", "T", "V1", "V2", "V3", "V4", "V5"]
    prefix: List[Tuple[str, str]] = [(n, "vec") for n in _PLAIN_HEAD]
    prefix += _pair_block(pair_names)
    prefix += [("x", "vec"), ("y", "vec"), ("z", "vec")]
    prefix += _pair_block(tail_pairs)

    a, u1, u2 = (pair_var(n) for n in pair_names)
    s, t, v1, v2, v3, v4, v5 = (pair_var(n) for n in tail_pairs)
    ante = And((
        mk_pW(VVar("e1"), VVar("e2"), VVar("w1"), VVar("w2"), VVar("w3"),
              env),
        mk_pPi(a, u1, u2, env),
    ))
    cons = And((
        mk_Def(VVar("e1"), VVar("e2"), VVar("x"), VVar("y"), VVar("z")),
        mk_Periodic(a, s, t, v1, v2, v3, v4, v5, env),
    ))
    return Forall(tuple(prefix), Implies(ante, cons))


def b_variable_blocks(m: int, k: int) -> Dict[str, List[str]]:
    """Quantified variable names of the arithmetic sentence, by block."""
    return {
        "plain": list(_PLAIN_HEAD),
        "head_pairs": ["A", "U1", "U2"],
        "s_pairs": [f"S{i}" for i in range(1, 4 * m + 1)],
        "t_pairs": [f"T{i}" for i in range(1, 4 * m + 1)],
        "z_pairs": [f"Z{i}" for i in range(1, m + 1)],
        "scalars": [f"s{i}" for i in range(1, m + 1)]
        + [f"t{i}" for i in range(1, m + 1)]
        + [f"z{i}" for i in range(1, m + 1)],
        "x_pairs": [f"X{i}" for i in range(1, 4 * k + 1)],
        "x_scalars": [f"x{i}" for i in range(1, k + 1)],
    }


def mk_B(q1: Formula, m: int, k: int, env: MacroEnv) -> Formula:
    """The refutation sentence for an additive quantifier-free matrix q1
    over scalar variables s_i, t_i, z_i (multiplication triples) and x_i."""
    _require_additive_scalar_matrix(q1, m, k)
    blocks = b_variable_blocks(m, k)
    prefix: List[Tuple[str, str]] = [(n, "vec") for n in blocks["plain"]]
    prefix += _pair_block(blocks["head_pairs"])
    prefix += _pair_block(blocks["s_pairs"])
    prefix += _pair_block(blocks["t_pairs"])
    prefix += _pair_block(blocks["z_pairs"])
    prefix += [(n, "scalar") for n in blocks["scalars"]]
    prefix += _pair_block(blocks["x_pairs"])
    prefix += [(n, "scalar") for n in blocks["x_scalars"]]

    a, u1, u2 = (pair_var(n) for n in ["A", "U1", "U2"])
    ante: List[Formula] = [
        mk_pW(VVar("e1"), VVar("e2"), VVar("w1"), VVar("w2"), VVar("w3"),
              env),
        mk_pPi(a, u1, u2, env),
    ]
    s_p = [pair_var(n) for n in blocks["s_pairs"]]
    t_p = [pair_var(n) for n in blocks["t_pairs"]]
    z_p = [pair_var(n) for n in blocks["z_pairs"]]
    for i in range(1, m + 1):
        j = i - 1
        ante.append(And((
            mk_pN(s_p[j], s_p[m + j], s_p[2 * m + j], s_p[3 * m + j], a, env),
            mk_pN(t_p[j], t_p[m + j], t_p[2 * m + j], t_p[3 * m + j], a, env),
            mk_pMult(s_p[j], t_p[j], z_p[j]),
            Eq(SVar(f"s{i}"), SNorm(s_p[j].second)),
            Eq(SVar(f"t{i}"), SNorm(t_p[j].second)),
            Eq(SVar(f"z{i}"), SNorm(z_p[j].second)),
        )))
    x_p = [pair_var(n) for n in blocks["x_pairs"]]
    for i in range(1, k + 1):
        j = i - 1
        ante.append(And((
            mk_pN(x_p[j], x_p[k + j], x_p[2 * k + j], x_p[3 * k + j], a, env),
            Eq(SVar(f"x{i}"), SNorm(x_p[j].second)),
        )))
    return Forall(tuple(prefix), Implies(conj(ante), Not(q1)))


def mk_star() -> Formula:
    """Decomposition of the axis vectors over the marker directions."""
    e1, e2 = VVar("e1"), VVar("e2")
    w1, w2 = VVar("w1"), VVar("w2")
    a1, a2, b1, b2 = VVar("a1"), VVar("a2"), VVar("b1"), VVar("b2")
    return And((
        VecEq(e1, vadd(a1, b1)), mk_pPar(a1, w1), mk_pPar(b1, w2),
        VecEq(e2, vadd(a2, b2)), mk_pPar(a2, w1), mk_pPar(b2, w2),
    ))


_STAR_VARS = (("a1", "vec"), ("a2", "vec"), ("b1", "vec"), ("b2", "vec"))


def _conjoin_star(sentence: Formula) -> Formula:
    """Conjoin the decomposition clause to the five-point conjunct and
    universally quantify its four witnesses."""
    if not isinstance(sentence, Forall) or \
            not isinstance(sentence.body, Implies):
        raise SortError("expected a universal implication sentence")
    body = sentence.body
    ante = body.antecedent
    if not isinstance(ante, And) or len(ante.args) < 2:
        raise SortError("expected the five-point conjunct up front")
    new_ante = And((ante.args[0], mk_star()) + ante.args[1:])
    return Forall(sentence.vars + _STAR_VARS,
                  Implies(new_ante, body.consequent))


def mk_A_prime(env: MacroEnv) -> Formula:
    return _conjoin_star(mk_A(env))


def mk_B_prime(q1: Formula, m: int, k: int, env: MacroEnv) -> Formula:
    return _conjoin_star(mk_B(q1, m, k, env))


def _require_additive_scalar_matrix(q1: Formula, m: int, k: int) -> None:
    if not is_quantifier_free(q1):
        raise SortError("matrix must be quantifier-free")
    allowed = {f"s{i}" for i in range(1, m + 1)}
    allowed |= {f"t{i}" for i in range(1, m + 1)}
    allowed |= {f"z{i}" for i in range(1, m + 1)}
    allowed |= {f"x{i}" for i in range(1, k + 1)}
    for name, sort in free_vars(q1).items():
        if sort != "scalar":
            raise SortError(f"matrix variable {name!r} is not scalar-sorted")
        if name not in allowed:
            raise SortError(f"matrix variable {name!r} outside the declared "
                            f"blocks for m={m}, k={k}")
