"""A small declarative language for groups, elements and algebras.

    group   := "Z" | "Q" | "O" | "Aff" | "lex" "(" group "," group ")"
    elem    := int | rat | "(" elem "," elem ")" | "aff" "(" rat "," rat ")"
    algebra := "gamma" "(" group "," elem ")" | "chain" "(" int ")"
             | "prod" "(" algebra "," algebra ")"
    rat     := int [ "/" int ]

Parsing builds an AST whose nodes carry (line, column) spans; semantic
construction turns group nodes into specs, element nodes into values
checked against a spec, and algebra nodes into interval algebras or
finite tables.  The printer emits canonical text, stable under reparse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import groups as gr
from .algebra import PmvAlgebra
from .finite import FiniteMv, make_chain, make_product
from .groups import GroupSpec, UnitalGroup


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class SemanticError(ParseError):
    pass


# ---------------------------------------------------------------------------
# Tokens


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "punct" | "end"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "(),/":
            toks.append(Token("punct", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("end", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Node:
    span: tuple = field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class GroupNode(Node):
    kind: str = ""
    left: Optional["GroupNode"] = None
    right: Optional["GroupNode"] = None


@dataclass(frozen=True)
class RatNode(Node):
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class PairNode(Node):
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class AffNode(Node):
    slope: Fraction = Fraction(1)
    shift: Fraction = Fraction(0)


@dataclass(frozen=True)
class GammaNode(Node):
    group: GroupNode = None
    unit: Node = None


@dataclass(frozen=True)
class ChainNode(Node):
    n: int = 1


@dataclass(frozen=True)
class ProdNode(Node):
    left: Node = None
    right: Node = None


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def take(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            got = t.text if t.text else "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", t.line, t.col)
        return self.take()

    def group(self) -> GroupNode:
        t = self.expect("name")
        span = (t.line, t.col)
        if t.text in ("Z", "Q", "O", "Aff"):
            return GroupNode(span, t.text)
        if t.text == "lex":
            self.expect("punct", "(")
            left = self.group()
            self.expect("punct", ",")
            right = self.group()
            self.expect("punct", ")")
            return GroupNode(span, "lex", left, right)
        raise ParseError(f"unknown group {t.text!r}", t.line, t.col)

    def _int(self) -> int:
        t = self.expect("int")
        return int(t.text)

    def rat(self) -> RatNode:
        t = self.peek()
        num = self._int()
        nxt = self.peek()
        if nxt.kind == "punct" and nxt.text == "/":
            self.take()
            den = self._int()
            if den == 0:
                raise ParseError("zero denominator", t.line, t.col)
            return RatNode((t.line, t.col), Fraction(num, den))
        return RatNode((t.line, t.col), Fraction(num))

    def elem(self) -> Node:
        t = self.peek()
        span = (t.line, t.col)
        if t.kind == "int":
            return self.rat()
        if t.kind == "punct" and t.text == "(":
            self.take()
            left = self.elem()
            self.expect("punct", ",")
            right = self.elem()
            self.expect("punct", ")")
            return PairNode(span, left, right)
        if t.kind == "name" and t.text == "aff":
            self.take()
            self.expect("punct", "(")
            a = self.rat()
            self.expect("punct", ",")
            b = self.rat()
            self.expect("punct", ")")
            return AffNode(span, a.value, b.value)
        raise ParseError(f"expected an element, got {t.text!r}", t.line, t.col)

    def algebra(self) -> Node:
        t = self.expect("name")
        span = (t.line, t.col)
        if t.text == "gamma":
            self.expect("punct", "(")
            g = self.group()
            self.expect("punct", ",")
            u = self.elem()
            self.expect("punct", ")")
            return GammaNode(span, g, u)
        if t.text == "chain":
            self.expect("punct", "(")
            n = self._int()
            self.expect("punct", ")")
            if n < 1:
                raise SemanticError("chain needs n >= 1", *span)
            return ChainNode(span, n)
        if t.text == "prod":
            self.expect("punct", "(")
            left = self.algebra()
            self.expect("punct", ",")
            right = self.algebra()
            self.expect("punct", ")")
            return ProdNode(span, left, right)
        raise ParseError(f"unknown algebra {t.text!r}", t.line, t.col)

    def done(self):
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"trailing input {t.text!r}", t.line, t.col)


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.algebra()
    p.done()
    return node


def parse_group(text: str) -> GroupNode:
    p = _Parser(text)
    node = p.group()
    p.done()
    return node


def parse_elem(text: str) -> Node:
    p = _Parser(text)
    node = p.elem()
    p.done()
    return node


# ---------------------------------------------------------------------------
# Printer


def print_ast(node: Node) -> str:
    if isinstance(node, GroupNode):
        if node.kind == "lex":
            return f"lex({print_ast(node.left)},{print_ast(node.right)})"
        return node.kind
    if isinstance(node, RatNode):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, PairNode):
        return f"({print_ast(node.left)},{print_ast(node.right)})"
    if isinstance(node, AffNode):
        a = RatNode(value=node.slope)
        b = RatNode(value=node.shift)
        return f"aff({print_ast(a)},{print_ast(b)})"
    if isinstance(node, GammaNode):
        return f"gamma({print_ast(node.group)},{print_ast(node.unit)})"
    if isinstance(node, ChainNode):
        return f"chain({node.n})"
    if isinstance(node, ProdNode):
        return f"prod({print_ast(node.left)},{print_ast(node.right)})"
    raise TypeError(f"not an AST node: {node!r}")


# ---------------------------------------------------------------------------
# Semantic construction


def build_group(node: GroupNode) -> GroupSpec:
    if node.kind == "lex":
        left = build_group(node.left)
        right = build_group(node.right)
        try:
            return gr.lex(left, right)
        except ValueError as exc:
            raise SemanticError(str(exc), *node.span) from None
    return {"Z": gr.Z, "Q": gr.Q, "O": gr.O, "Aff": gr.AFF}[node.kind]


def build_elem(spec: GroupSpec, node: Node):
    if spec.kind == "lex":
        if not isinstance(node, PairNode):
            raise SemanticError(f"{spec} needs a pair literal", *node.span)
        return (build_elem(spec.left, node.left), build_elem(spec.right, node.right))
    if spec.kind == "Aff":
        if not isinstance(node, AffNode):
            raise SemanticError("Aff needs aff(slope,shift)", *node.span)
        try:
            return gr.Aff(node.slope, node.shift)
        except gr.ShapeError as exc:
            raise SemanticError(str(exc), *node.span) from None
    if not isinstance(node, RatNode):
        raise SemanticError(f"{spec} needs a numeric literal", *node.span)
    v = node.value
    if spec.kind == "Z":
        if v.denominator != 1:
            raise SemanticError(f"Z needs an integer, got {v}", *node.span)
        return v.numerator
    if spec.kind == "Q":
        return v
    if v != 0:
        raise SemanticError("the trivial group has only 0", *node.span)
    return 0


def build_algebra(node: Node):
    """A GammaNode becomes a PmvAlgebra; chain/prod become FiniteMv tables."""
    if isinstance(node, GammaNode):
        spec = build_group(node.group)
        unit = build_elem(spec, node.unit)
        try:
            return PmvAlgebra(UnitalGroup(spec, unit))
        except (gr.ShapeError, ValueError) as exc:
            raise SemanticError(str(exc), *node.span) from None
    if isinstance(node, ChainNode):
        return make_chain(node.n)
    if isinstance(node, ProdNode):
        left = build_algebra(node.left)
        right = build_algebra(node.right)
        left = as_finite(left, node.left.span)
        right = as_finite(right, node.right.span)
        return make_product(left, right)
    raise TypeError(f"not an algebra node: {node!r}")


def as_finite(alg, span=(1, 1)) -> FiniteMv:
    """Realize an algebra as a table; only Gamma(Z, n) intervals are finite."""
    if isinstance(alg, FiniteMv):
        return alg
    if isinstance(alg, PmvAlgebra) and alg.spec == gr.Z:
        return make_chain(alg.unit)
    raise SemanticError(f"{alg} is not a finite algebra", *span)
