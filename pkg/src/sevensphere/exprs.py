"""Plain-text expression language over the algebra: parser, evaluator, printer.

Grammar (whitespace-insensitive):

    expr     := additive
    additive := ['-'] mult { ('+' | '-') mult }
    mult     := atomic { '*' atomic }
    atomic   := scalar | atom | UNARY '(' expr ')' | '(' expr ')'
              | '(' expr NONASSOC expr ')'

Atoms are e0..e7, blade literals with strictly ascending digits (e126),
psi, omega, P0..P7, alpha0..alpha7.  The binary operators o (octonion
product), oX[expr] (deformed product at the bracketed point), bl / br
(left- and right-nested chain products) and ol / or (chain products between
two Clifford elements) are non-associative and must be explicitly grouped:
"(e1 o e2 o e3)" is rejected rather than silently re-associated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .clifford import (Multivector, OMEGA, PSI, gp, grade_project,
                       grade_involution, reversion, conjugation)
from .octonion import Octonion
from .deformed import bullet_left, bullet_right, odot, x_product
from .idempotents import alpha, build_P

NONASSOC_OPS = ("o", "oX", "bl", "br", "ol", "or")
_UNARY_OPS = ("rev", "gi", "conj")

_TOKEN_RE = re.compile(r"""
    (?P<num>\d+\.\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?|\d+(?:[eE][-+]?\d+)?)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<sym>[()\[\]+\-*])
  | (?P<ws>\s+)
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message: str, col: int):
        super().__init__(f"{message} at col {col}")
        self.col = col


class EvalError(ValueError):
    def __init__(self, message: str, path: str):
        super().__init__(f"{message} at {path}")
        self.path = path


@dataclass(frozen=True)
class Scalar:
    value: float


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    child: object


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    param: object = None  # the bracketed point of oX


@dataclass(frozen=True)
class _Token:
    kind: str  # num | name | sym | end
    text: str
    col: int   # 1-based


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.col)
        return tok

    def parse(self):
        node = self.additive()
        tok = self.peek()
        if tok.kind != "end":
            if tok.text in NONASSOC_OPS:
                raise ParseError("ungrouped non-associative chain", tok.col)
            raise ParseError(f"unexpected {tok.text!r}", tok.col)
        return node

    def additive(self):
        if self.peek().text == "-":
            self.next()
            node = Unary("neg", self.mult())
        else:
            node = self.mult()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            node = Binary(op, node, self.mult())
        return node

    def mult(self):
        node = self.atomic()
        while self.peek().text == "*":
            self.next()
            node = Binary("*", node, self.atomic())
        return node

    def atomic(self):
        tok = self.next()
        if tok.kind == "num":
            return Scalar(float(tok.text))
        if tok.text == "(":
            left = self.additive()
            nxt = self.next()
            if nxt.text == ")":
                return left
            if nxt.text in NONASSOC_OPS:
                param = None
                if nxt.text == "oX":
                    self.expect("[")
                    param = self.additive()
                    self.expect("]")
                right = self.additive()
                trail = self.peek()
                if trail.text in NONASSOC_OPS:
                    raise ParseError("ungrouped non-associative chain", trail.col)
                self.expect(")")
                return Binary(nxt.text, left, right, param)
            raise ParseError(f"expected ')' or an operator, found "
                             f"{nxt.text or 'end of input'!r}", nxt.col)
        if tok.kind == "name":
            if tok.text in _UNARY_OPS or re.fullmatch(r"grade[0-7]", tok.text):
                self.expect("(")
                child = self.additive()
                self.expect(")")
                return Unary(tok.text, child)
            if tok.text in NONASSOC_OPS:
                raise ParseError(f"operator {tok.text!r} outside parentheses", tok.col)
            return self._atom(tok)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.col)

    def _atom(self, tok: _Token):
        name = tok.text
        if name in ("psi", "omega"):
            return Atom(name)
        m = re.fullmatch(r"(P|alpha)([0-7])", name)
        if m:
            return Atom(name)
        m = re.fullmatch(r"e([0-9]+)", name)
        if m:
            digits = m.group(1)
            if digits == "0":
                return Atom("e0")
            idx = [int(d) for d in digits]
            if any(d < 1 or d > 7 for d in idx):
                raise ParseError(f"blade index out of range in {name!r}", tok.col)
            if idx != sorted(set(idx)):
                raise ParseError(
                    f"blade indices must be strictly ascending in {name!r} "
                    f"(write e.g. -1*e{''.join(map(str, sorted(set(idx))))})",
                    tok.col)
            return Atom(name)
        raise ParseError(f"unknown name {name!r}", tok.col)


def parse(text: str):
    """Parse an expression into its AST, or raise ParseError."""
    return _Parser(text).parse()


def _atom_value(name: str) -> Multivector:
    if name == "psi":
        return PSI
    if name == "omega":
        return OMEGA
    if name == "e0":
        return Multivector.scalar(1.0)
    if name.startswith("alpha"):
        return alpha(int(name[5:]))
    if name.startswith("P"):
        return build_P(int(name[1:]))
    mask = 0
    for d in name[1:]:
        mask |= 1 << (int(d) - 1)
    return Multivector.blade(mask)


def _as_octonion(mv: Multivector, path: str) -> Octonion:
    try:
        return Octonion.from_multivector(mv)
    except ValueError:
        raise EvalError("operand is not a paravector (grades 0 and 1 only)", path)


def evaluate(node, tol: float = 1e-10, path: str = "root") -> Multivector:
    """Evaluate an AST to a Multivector; paravector results are embedded back
    into the algebra.  Raises EvalError naming the offending node path."""
    if isinstance(node, Scalar):
        return Multivector.scalar(node.value)
    if isinstance(node, Atom):
        return _atom_value(node.name)
    if isinstance(node, Unary):
        child = evaluate(node.child, tol, path + ".child")
        if node.op == "neg":
            return -child
        if node.op == "rev":
            return reversion(child)
        if node.op == "gi":
            return grade_involution(child)
        if node.op == "conj":
            return conjugation(child)
        if node.op.startswith("grade"):
            return grade_project(child, {int(node.op[5:])})
        raise EvalError(f"unknown unary operator {node.op!r}", path)
    if isinstance(node, Binary):
        left = evaluate(node.left, tol, path + ".left")
        right = evaluate(node.right, tol, path + ".right")
        op = node.op
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return gp(left, right)
        if op == "o":
            from .octonion import oct_mul
            return oct_mul(_as_octonion(left, path + ".left"),
                           _as_octonion(right, path + ".right")).to_multivector()
        if op == "oX":
            x = _as_octonion(evaluate(node.param, tol, path + ".param"),
                             path + ".param")
            try:
                return x_product(_as_octonion(left, path + ".left"),
                                 _as_octonion(right, path + ".right"),
                                 x, tol).to_multivector()
            except ValueError as exc:
                raise EvalError(str(exc), path + ".param")
        if op == "bl":
            return bullet_left(_as_octonion(left, path + ".left"),
                               right).to_multivector()
        if op == "br":
            return bullet_right(left,
                                _as_octonion(right, path + ".right")).to_multivector()
        if op == "ol":
            return odot(left, right, "left").to_multivector()
        if op == "or":
            return odot(left, right, "right").to_multivector()
        raise EvalError(f"unknown operator {op!r}", path)
    raise EvalError(f"unknown node {node!r}", path)


def eval_text(text: str, tol: float = 1e-10) -> Multivector:
    """Parse and evaluate in one call."""
    return evaluate(parse(text), tol)


def format_real(value: float) -> str:
    return "%.17g" % value


def _mask_name(mask: int) -> str:
    return "e" + "".join(str(i) for i in range(1, 8) if mask >> (i - 1) & 1)


def format_multivector(mv: Multivector) -> str:
    """Canonical printing: signed sum of coef*eI terms in ascending mask
    order, unit coefficients elided, 17 significant digits, "0" when empty.
    The output reparses to the identical multivector."""
    parts = []
    for mask in np.flatnonzero(mv.coeff):
        coef = float(mv.coeff[mask])
        mag = abs(coef)
        if mask == 0:
            body = format_real(mag)
        elif mag == 1.0:
            body = _mask_name(int(mask))
        else:
            body = f"{format_real(mag)}*{_mask_name(int(mask))}"
        if not parts:
            parts.append(body if coef > 0 else "-" + body)
        else:
            parts.append(("+ " if coef > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def format_octonion(a: Octonion) -> str:
    return format_multivector(a.to_multivector())
