"""Term and formula syntax for the additive two-sorted language.

Vector terms admit variables, zero, addition, negation, and scaling by
rational constants only; scalar terms admit variables, rational constants,
norms of vector terms, addition, and negation.  There is no scalar product
node, which keeps the language additive by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from ..errors import SortError

VEC = "vec"
SCALAR = "scalar"


# -- vector terms -----------------------------------------------------------

@dataclass(frozen=True)
class VVar:
    name: str


@dataclass(frozen=True)
class VZero:
    pass


@dataclass(frozen=True)
class VAdd:
    left: "VectorTerm"
    right: "VectorTerm"


@dataclass(frozen=True)
class VNeg:
    arg: "VectorTerm"


@dataclass(frozen=True)
class VScale:
    coeff: Fraction
    arg: "VectorTerm"


VectorTerm = Union[VVar, VZero, VAdd, VNeg, VScale]


# -- scalar terms -----------------------------------------------------------

@dataclass(frozen=True)
class SVar:
    name: str


@dataclass(frozen=True)
class SConst:
    value: Fraction


@dataclass(frozen=True)
class SNorm:
    arg: "VectorTerm"


@dataclass(frozen=True)
class SAdd:
    left: "ScalarTerm"
    right: "ScalarTerm"


@dataclass(frozen=True)
class SNeg:
    arg: "ScalarTerm"


ScalarTerm = Union[SVar, SConst, SNorm, SAdd, SNeg]


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    left: "ScalarTerm"
    right: "ScalarTerm"


@dataclass(frozen=True)
class Le:
    left: "ScalarTerm"
    right: "ScalarTerm"


@dataclass(frozen=True)
class Lt:
    left: "ScalarTerm"
    right: "ScalarTerm"


@dataclass(frozen=True)
class VecEq:
    left: "VectorTerm"
    right: "VectorTerm"


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    args: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    args: Tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Forall:
    vars: Tuple[Tuple[str, str], ...]  # (name, sort)
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: Tuple[Tuple[str, str], ...]
    body: "Formula"


Formula = Union[Eq, Le, Lt, VecEq, Not, And, Or, Implies, Forall, Exists]

TRUE = And(())
FALSE = Or(())


def conj(formulas) -> Formula:
    """N-ary conjunction; a single conjunct stays bare, none gives TRUE."""
    formulas = tuple(formulas)
    if len(formulas) == 1:
        return formulas[0]
    return And(formulas)


def disj(formulas) -> Formula:
    formulas = tuple(formulas)
    if len(formulas) == 1:
        return formulas[0]
    return Or(formulas)


# -- smart term constructors --------------------------------------------------

def vscale(coeff, arg: VectorTerm) -> VectorTerm:
    """Scale with the obvious simplifications (0, 1, -1, nested scales)."""
    coeff = Fraction(coeff)
    if coeff == 0:
        return VZero()
    if coeff == 1:
        return arg
    if isinstance(arg, VZero):
        return VZero()
    if isinstance(arg, VScale):
        return vscale(coeff * arg.coeff, arg.arg)
    if coeff == -1:
        return VNeg(arg)
    return VScale(coeff, arg)


def vadd(left: VectorTerm, right: VectorTerm) -> VectorTerm:
    if isinstance(left, VZero):
        return right
    if isinstance(right, VZero):
        return left
    return VAdd(left, right)


def vneg(arg: VectorTerm) -> VectorTerm:
    if isinstance(arg, VZero):
        return VZero()
    if isinstance(arg, VNeg):
        return arg.arg
    return VNeg(arg)


def vsub(left: VectorTerm, right: VectorTerm) -> VectorTerm:
    return vadd(left, vneg(right))


def sadd(left: ScalarTerm, right: ScalarTerm) -> ScalarTerm:
    return SAdd(left, right)


def snorm(arg: VectorTerm) -> ScalarTerm:
    return SNorm(arg)


# -- variables and sorts -------------------------------------------------------

def free_vars(node) -> Dict[str, str]:
    """Free variables of a term or formula, mapped to their sorts."""
    out: Dict[str, str] = {}
    _collect_free(node, {}, out)
    return out


def _merge(out: Dict[str, str], name: str, sort: str) -> None:
    if out.setdefault(name, sort) != sort:
        raise SortError(f"variable {name!r} used at both sorts")


def _collect_free(node, bound: Dict[str, str], out: Dict[str, str]) -> None:
    if isinstance(node, VVar):
        if node.name in bound:
            if bound[node.name] != VEC:
                raise SortError(f"{node.name!r} bound as scalar, used as vector")
        else:
            _merge(out, node.name, VEC)
    elif isinstance(node, SVar):
        if node.name in bound:
            if bound[node.name] != SCALAR:
                raise SortError(f"{node.name!r} bound as vector, used as scalar")
        else:
            _merge(out, node.name, SCALAR)
    elif isinstance(node, (VZero, SConst)):
        pass
    elif isinstance(node, (VNeg, SNeg, SNorm, VScale)):
        _collect_free(node.arg, bound, out)
    elif isinstance(node, (VAdd, SAdd, Eq, Le, Lt, VecEq)):
        _collect_free(node.left, bound, out)
        _collect_free(node.right, bound, out)
    elif isinstance(node, Not):
        _collect_free(node.arg, bound, out)
    elif isinstance(node, (And, Or)):
        for f in node.args:
            _collect_free(f, bound, out)
    elif isinstance(node, Implies):
        _collect_free(node.antecedent, bound, out)
        _collect_free(node.consequent, bound, out)
    elif isinstance(node, (Forall, Exists)):
        inner = dict(bound)
        for name, sort in node.vars:
            if sort not in (VEC, SCALAR):
                raise SortError(f"unknown sort {sort!r} for {name!r}")
            inner[name] = sort
        _collect_free(node.body, inner, out)
    else:
        raise SortError(f"unknown node {node!r}")


def check_sorts(node) -> None:
    """Structural well-sortedness pass; raises SortError on any defect.

    Dataclass fields already constrain shapes when built from this module's
    constructors, but parsed or hand-built trees get verified here.
    """
    _check(node)
    free_vars(node)  # also catches cross-sort variable use


_SCALAR_NODES = (SVar, SConst, SNorm, SAdd, SNeg)
_VECTOR_NODES = (VVar, VZero, VAdd, VNeg, VScale)
_FORMULA_NODES = (Eq, Le, Lt, VecEq, Not, And, Or, Implies, Forall, Exists)


def _check(node) -> None:
    if isinstance(node, (VVar, VZero, SVar, SConst)):
        return
    if isinstance(node, VScale):
        if not isinstance(node.coeff, Fraction):
            raise SortError(f"scale coefficient must be rational: {node!r}")
        _expect_vec(node.arg)
        return
    if isinstance(node, (VAdd,)):
        _expect_vec(node.left)
        _expect_vec(node.right)
        return
    if isinstance(node, VNeg):
        _expect_vec(node.arg)
        return
    if isinstance(node, SNorm):
        _expect_vec(node.arg)
        return
    if isinstance(node, SAdd):
        _expect_scalar(node.left)
        _expect_scalar(node.right)
        return
    if isinstance(node, SNeg):
        _expect_scalar(node.arg)
        return
    if isinstance(node, (Eq, Le, Lt)):
        _expect_scalar(node.left)
        _expect_scalar(node.right)
        return
    if isinstance(node, VecEq):
        _expect_vec(node.left)
        _expect_vec(node.right)
        return
    if isinstance(node, Not):
        _expect_formula(node.arg)
        return
    if isinstance(node, (And, Or)):
        for f in node.args:
            _expect_formula(f)
        return
    if isinstance(node, Implies):
        _expect_formula(node.antecedent)
        _expect_formula(node.consequent)
        return
    if isinstance(node, (Forall, Exists)):
        names = [n for n, _ in node.vars]
        if len(set(names)) != len(names):
            raise SortError(f"duplicate bound variable in {names}")
        _expect_formula(node.body)
        return
    raise SortError(f"unknown node {node!r}")


def _expect_vec(node) -> None:
    if not isinstance(node, _VECTOR_NODES):
        raise SortError(f"vector term expected, got {node!r}")
    _check(node)


def _expect_scalar(node) -> None:
    if not isinstance(node, _SCALAR_NODES):
        raise SortError(f"scalar term expected, got {node!r}")
    _check(node)


def _expect_formula(node) -> None:
    if not isinstance(node, _FORMULA_NODES):
        raise SortError(f"formula expected, got {node!r}")
    _check(node)


def is_quantifier_free(f: Formula) -> bool:
    if isinstance(f, (Forall, Exists)):
        return False
    if isinstance(f, Not):
        return is_quantifier_free(f.arg)
    if isinstance(f, (And, Or)):
        return all(is_quantifier_free(g) for g in f.args)
    if isinstance(f, Implies):
        return is_quantifier_free(f.antecedent) and \
            is_quantifier_free(f.consequent)
    return True


def node_count(node) -> int:
    """Total AST node count (terms and formulas)."""
    if isinstance(node, (VVar, VZero, SVar, SConst)):
        return 1
    if isinstance(node, (VNeg, SNeg, SNorm, VScale, Not)):
        return 1 + node_count(node.arg)
    if isinstance(node, (VAdd, SAdd, Eq, Le, Lt, VecEq)):
        return 1 + node_count(node.left) + node_count(node.right)
    if isinstance(node, (And, Or)):
        return 1 + sum(node_count(f) for f in node.args)
    if isinstance(node, Implies):
        return 1 + node_count(node.antecedent) + node_count(node.consequent)
    if isinstance(node, (Forall, Exists)):
        return 1 + node_count(node.body)
    raise SortError(f"unknown node {node!r}")
