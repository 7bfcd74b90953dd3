"""Concrete syntax: parenthesized prefix notation with sorted binders.

Grammar (one formula per file; whitespace separates tokens):

    formula  := (= s s) | (<= s s) | (< s s) | (veq v v)
              | (not f) | (and f ...) | (or f ...) | (=> f f)
              | (forall (binding ...) f) | (exists (binding ...) f)
    binding  := (name vec) | (name scalar)
    s        := name | rational | (+ s s) | (neg s) | (norm v)
    v        := name | 0v | (vadd v v) | (vneg v) | (vscale rational v)
    rational := integer | numerator/denominator

Printing is deterministic and parse(print(f)) == f.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from ..errors import ParseError
from .ast import (And, Eq, Exists, Forall, Formula, Implies, Le, Lt, Not, Or,
                  SAdd, SConst, SNeg, SNorm, SVar, VAdd, VNeg, VScale, VVar,
                  VZero, VecEq)

_NUMBER = re.compile(r"-?\d+(/\d+)?$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*$")


# -- printing ---------------------------------------------------------------

def print_vector(t) -> str:
    if isinstance(t, VVar):
        return t.name
    if isinstance(t, VZero):
        return "0v"
    if isinstance(t, VAdd):
        return f"(vadd {print_vector(t.left)} {print_vector(t.right)})"
    if isinstance(t, VNeg):
        return f"(vneg {print_vector(t.arg)})"
    if isinstance(t, VScale):
        return f"(vscale {t.coeff} {print_vector(t.arg)})"
    raise TypeError(f"not a vector term: {t!r}")


def print_scalar(t) -> str:
    if isinstance(t, SVar):
        return t.name
    if isinstance(t, SConst):
        return str(t.value)
    if isinstance(t, SNorm):
        return f"(norm {print_vector(t.arg)})"
    if isinstance(t, SAdd):
        return f"(+ {print_scalar(t.left)} {print_scalar(t.right)})"
    if isinstance(t, SNeg):
        return f"(neg {print_scalar(t.arg)})"
    raise TypeError(f"not a scalar term: {t!r}")


def print_sentence(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"(= {print_scalar(f.left)} {print_scalar(f.right)})"
    if isinstance(f, Le):
        return f"(<= {print_scalar(f.left)} {print_scalar(f.right)})"
    if isinstance(f, Lt):
        return f"(< {print_scalar(f.left)} {print_scalar(f.right)})"
    if isinstance(f, VecEq):
        return f"(veq {print_vector(f.left)} {print_vector(f.right)})"
    if isinstance(f, Not):
        return f"(not {print_sentence(f.arg)})"
    if isinstance(f, And):
        return "(and" + "".join(" " + print_sentence(g) for g in f.args) + ")"
    if isinstance(f, Or):
        return "(or" + "".join(" " + print_sentence(g) for g in f.args) + ")"
    if isinstance(f, Implies):
        return f"(=> {print_sentence(f.antecedent)} " \
               f"{print_sentence(f.consequent)})"
    if isinstance(f, (Forall, Exists)):
        head = "forall" if isinstance(f, Forall) else "exists"
        binds = " ".join(f"({n} {s})" for n, s in f.vars)
        return f"({head} ({binds}) {print_sentence(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


# -- tokenizing ---------------------------------------------------------------

def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "(":
            tokens.append(("open", "(", i))
            i += 1
        elif c == ")":
            tokens.append(("close", ")", i))
            i += 1
        elif c == ";":
            while i < n and text[i] != "\n":
                i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "();":
                j += 1
            tokens.append(("atom", text[i:j], i))
            i = j
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", len(self.text))
        return self.tokens[self.pos]

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _expect(self, kind: str):
        tok = self._next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}", tok[2])
        return tok

    def _head(self) -> Tuple[str, int]:
        self._expect("open")
        kind, value, offset = self._next()
        if kind != "atom":
            raise ParseError("expected an operator symbol", offset)
        return value, offset

    def formula(self) -> Formula:
        head, offset = self._head()
        if head == "=":
            f = Eq(self.scalar(), self.scalar())
        elif head == "<=":
            f = Le(self.scalar(), self.scalar())
        elif head == "<":
            f = Lt(self.scalar(), self.scalar())
        elif head == "veq":
            f = VecEq(self.vector(), self.vector())
        elif head == "not":
            f = Not(self.formula())
        elif head == "and":
            f = And(tuple(self._formula_list()))
            return f
        elif head == "or":
            f = Or(tuple(self._formula_list()))
            return f
        elif head == "=>":
            f = Implies(self.formula(), self.formula())
        elif head in ("forall", "exists"):
            binds = self._bindings()
            body = self.formula()
            cls = Forall if head == "forall" else Exists
            f = cls(binds, body)
        else:
            raise ParseError(f"unknown operator {head!r}", offset)
        self._expect("close")
        return f

    def _formula_list(self):
        out = []
        while self._peek()[0] != "close":
            out.append(self.formula())
        self._next()
        return out

    def _bindings(self):
        self._expect("open")
        binds = []
        while self._peek()[0] != "close":
            self._expect("open")
            kind, name, off = self._next()
            if kind != "atom" or not _NAME.match(name):
                raise ParseError("expected a variable name", off)
            kind, sort, off = self._next()
            if sort not in ("vec", "scalar"):
                raise ParseError(f"unknown sort {sort!r}", off)
            self._expect("close")
            binds.append((name, sort))
        self._next()
        return tuple(binds)

    def scalar(self):
        kind, value, offset = self._peek()
        if kind == "atom":
            self._next()
            if _NUMBER.match(value):
                return SConst(Fraction(value))
            if _NAME.match(value):
                return SVar(value)
            raise ParseError(f"bad scalar atom {value!r}", offset)
        head, offset = self._head()
        if head == "+":
            t = SAdd(self.scalar(), self.scalar())
        elif head == "neg":
            t = SNeg(self.scalar())
        elif head == "norm":
            t = SNorm(self.vector())
        else:
            raise ParseError(f"unknown scalar operator {head!r}", offset)
        self._expect("close")
        return t

    def vector(self):
        kind, value, offset = self._peek()
        if kind == "atom":
            self._next()
            if value == "0v":
                return VZero()
            if _NUMBER.match(value):
                raise ParseError("number in vector position", offset)
            if _NAME.match(value):
                return VVar(value)
            raise ParseError(f"bad vector atom {value!r}", offset)
        head, offset = self._head()
        if head == "vadd":
            t = VAdd(self.vector(), self.vector())
        elif head == "vneg":
            t = VNeg(self.vector())
        elif head == "vscale":
            kind, coeff, off = self._next()
            if kind != "atom" or not _NUMBER.match(coeff):
                raise ParseError("expected a rational coefficient", off)
            t = VScale(Fraction(coeff), self.vector())
        else:
            raise ParseError(f"unknown vector operator {head!r}", offset)
        self._expect("close")
        return t


def parse_sentence(text: str) -> Formula:
    parser = _Parser(text)
    f = parser.formula()
    if parser.pos < len(parser.tokens):
        tok = parser.tokens[parser.pos]
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return f
