"""Quantifier-free arithmetic over the naturals: syntax, parsing, evaluation.

Grammar (infix, case-sensitive keywords):

    formula := conj ('or' conj)*
    conj    := lit ('and' lit)*
    lit     := 'not' lit | '(' formula ')' | sum ('=' | '<=' | '<') sum
    sum     := product ('+' product)*
    product := atom ('*' atom)*
    atom    := variable | literal | '(' sum ')'

Variables are x1, x2, ...; literals are non-negative integers.  The strict
comparison a < b is an extension desugared at parse time to a <= b and not
a = b.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from ..errors import ParseError


@dataclass(frozen=True)
class AVar:
    name: str


@dataclass(frozen=True)
class ANat:
    value: int


@dataclass(frozen=True)
class AAdd:
    left: "ArithTerm"
    right: "ArithTerm"


@dataclass(frozen=True)
class AMul:
    left: "ArithTerm"
    right: "ArithTerm"


ArithTerm = Union[AVar, ANat, AAdd, AMul]


@dataclass(frozen=True)
class AEq:
    left: ArithTerm
    right: ArithTerm


@dataclass(frozen=True)
class ALe:
    left: ArithTerm
    right: ArithTerm


@dataclass(frozen=True)
class ANot:
    arg: "ArithFormula"


@dataclass(frozen=True)
class AAnd:
    left: "ArithFormula"
    right: "ArithFormula"


@dataclass(frozen=True)
class AOr:
    left: "ArithFormula"
    right: "ArithFormula"


ArithFormula = Union[AEq, ALe, ANot, AAnd, AOr]

_KEYWORDS = {"and", "or", "not"}
_VAR = re.compile(r"x[1-9][0-9]*$")


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x[0-9]+|and|or|not)|(<=|[()+*=<]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            off = len(text) - len(stripped)
            raise ParseError(f"bad token {stripped[0]!r}", off)
        num, word, sym = m.groups()
        off = m.end() - len((num or word or sym))
        if num is not None:
            tokens.append(("nat", num, off))
        elif word is not None:
            kind = "kw" if word in _KEYWORDS else "var"
            if kind == "var" and not _VAR.match(word):
                raise ParseError(f"bad variable {word!r} (use x1, x2, ...)",
                                 off)
            tokens.append((kind, word, off))
        else:
            tokens.append(("sym", sym, off))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        if self.pos >= len(self.tokens):
            return ("eof", "", len(self.text))
        return self.tokens[self.pos]

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _accept(self, kind, value=None):
        tok = self._peek()
        if tok[0] == kind and (value is None or tok[1] == value):
            self.pos += 1
            return tok
        return None

    def formula(self) -> ArithFormula:
        f = self.conj()
        while self._accept("kw", "or"):
            f = AOr(f, self.conj())
        return f

    def conj(self) -> ArithFormula:
        f = self.lit()
        while self._accept("kw", "and"):
            f = AAnd(f, self.lit())
        return f

    def lit(self) -> ArithFormula:
        if self._accept("kw", "not"):
            return ANot(self.lit())
        if self._peek()[:2] == ("sym", "(") and self._formula_ahead():
            self._next()
            f = self.formula()
            tok = self._next()
            if tok[:2] != ("sym", ")"):
                raise ParseError("expected ')'", tok[2])
            return f
        return self.comparison()

    def _formula_ahead(self) -> bool:
        """After '(', does the matching ')' close a formula (vs a term)?

        A parenthesized group is a term exactly when the token after its
        matching close is an arithmetic operator or comparator; it is a
        formula when a connective follows, when it contains a connective or
        comparator at depth zero, or at end of input.
        """
        depth = 0
        i = self.pos
        while i < len(self.tokens):
            kind, value, _ = self.tokens[i]
            if kind == "sym" and value == "(":
                depth += 1
            elif kind == "sym" and value == ")":
                depth -= 1
                if depth == 0:
                    break
            elif depth == 1 and (kind == "kw" or
                                 (kind == "sym" and value in ("=", "<=", "<"))):
                return True
            i += 1
        return False

    def comparison(self) -> ArithFormula:
        left = self.sum()
        tok = self._next()
        if tok[:2] == ("sym", "="):
            return AEq(left, self.sum())
        if tok[:2] == ("sym", "<="):
            return ALe(left, self.sum())
        if tok[:2] == ("sym", "<"):
            right = self.sum()
            return AAnd(ALe(left, right), ANot(AEq(left, right)))
        raise ParseError(f"expected a comparator, got {tok[1]!r}", tok[2])

    def sum(self) -> ArithTerm:
        t = self.product()
        while self._accept("sym", "+"):
            t = AAdd(t, self.product())
        return t

    def product(self) -> ArithTerm:
        t = self.atom()
        while self._accept("sym", "*"):
            t = AMul(t, self.atom())
        return t

    def atom(self) -> ArithTerm:
        tok = self._next()
        kind, value, off = tok
        if kind == "nat":
            return ANat(int(value))
        if kind == "var":
            return AVar(value)
        if kind == "sym" and value == "(":
            t = self.sum()
            tok = self._next()
            if tok[:2] != ("sym", ")"):
                raise ParseError("expected ')'", tok[2])
            return t
        raise ParseError(f"expected a term, got {value!r}", off)


def parse_arith(text: str) -> ArithFormula:
    parser = _Parser(text)
    f = parser.formula()
    tok = parser._peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return f


# -- printing -------------------------------------------------------------------

def _print_term(t: ArithTerm, parent: str = "") -> str:
    if isinstance(t, AVar):
        return t.name
    if isinstance(t, ANat):
        return str(t.value)
    if isinstance(t, AAdd):
        s = f"{_print_term(t.left, '+')} + {_print_term(t.right, '+r')}"
        return f"({s})" if parent in ("*", "*r", "+r") else s
    if isinstance(t, AMul):
        s = f"{_print_term(t.left, '*')} * {_print_term(t.right, '*r')}"
        return f"({s})" if parent in ("*r",) else s
    raise TypeError(f"not a term: {t!r}")


def print_arith(f: ArithFormula, parent: str = "") -> str:
    if isinstance(f, AEq):
        return f"{_print_term(f.left)} = {_print_term(f.right)}"
    if isinstance(f, ALe):
        return f"{_print_term(f.left)} <= {_print_term(f.right)}"
    if isinstance(f, ANot):
        return f"not ({print_arith(f.arg)})"
    if isinstance(f, AAnd):
        s = f"{print_arith(f.left, 'and')} and {print_arith(f.right, 'and_r')}"
        return f"({s})" if parent in ("and_r", "or_r") else s
    if isinstance(f, AOr):
        s = f"{print_arith(f.left, 'or')} or {print_arith(f.right, 'or_r')}"
        return f"({s})" if parent in ("and", "and_r", "or_r") else s
    raise TypeError(f"not a formula: {f!r}")


# -- semantics --------------------------------------------------------------------

def eval_term(t: ArithTerm, env: Dict[str, int]) -> int:
    if isinstance(t, AVar):
        return env[t.name]
    if isinstance(t, ANat):
        return t.value
    if isinstance(t, AAdd):
        return eval_term(t.left, env) + eval_term(t.right, env)
    if isinstance(t, AMul):
        return eval_term(t.left, env) * eval_term(t.right, env)
    raise TypeError(f"not a term: {t!r}")


def eval_arith(f: ArithFormula, env: Dict[str, int]) -> bool:
    if isinstance(f, AEq):
        return eval_term(f.left, env) == eval_term(f.right, env)
    if isinstance(f, ALe):
        return eval_term(f.left, env) <= eval_term(f.right, env)
    if isinstance(f, ANot):
        return not eval_arith(f.arg, env)
    if isinstance(f, AAnd):
        return eval_arith(f.left, env) and eval_arith(f.right, env)
    if isinstance(f, AOr):
        return eval_arith(f.left, env) or eval_arith(f.right, env)
    raise TypeError(f"not a formula: {f!r}")


def variables(node) -> set:
    if isinstance(node, AVar):
        return {node.name}
    if isinstance(node, ANat):
        return set()
    if isinstance(node, (AAdd, AMul, AEq, ALe, AAnd, AOr)):
        return variables(node.left) | variables(node.right)
    if isinstance(node, ANot):
        return variables(node.arg)
    raise TypeError(f"unknown node: {node!r}")


def var_count(f: ArithFormula) -> int:
    """k such that the variables are among x1..xk (0 for closed formulas)."""
    names = variables(f)
    return max((int(n[1:]) for n in names), default=0)


def bounded_nat_sat(f: ArithFormula, bound: int
                    ) -> Optional[Tuple[int, ...]]:
    """First witness in lexicographic order over [0, bound]^k, or None."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    k = var_count(f)
    names = [f"x{i}" for i in range(1, k + 1)]
    for values in itertools.product(range(bound + 1), repeat=k):
        if eval_arith(f, dict(zip(names, values))):
            return values
    return None
