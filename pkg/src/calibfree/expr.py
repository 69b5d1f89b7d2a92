"""Connected-sum expressions over the manifold catalog.

Grammar (whitespace insignificant, ``#`` left-associative, ``*`` tighter)::

    expr := term ('#' term)*
    term := INT '*' term | NAME | NAME '(' INT (',' INT)* ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .manifolds import (
    CATALOG,
    ArityError,
    Catalog,
    ManifoldClass,
    UnknownNameError,
    connected_sum,
    multi_sum,
    params_text,
)


class ExprError(ValueError):
    """Base class for expression errors; ``category`` names the kind."""

    category = "error"

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{self.category}{where}: {message}")


class ExprSyntaxError(ExprError):
    category = "syntax error"


class ExprNameError(ExprError):
    category = "unknown name"


class ExprArityError(ExprError):
    category = "arity mismatch"


@dataclass(frozen=True)
class CatalogRef:
    name: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class Sum:
    left: "ManifoldExpr"
    right: "ManifoldExpr"


@dataclass(frozen=True)
class Repeat:
    count: int
    expr: "ManifoldExpr"


ManifoldExpr = Union[CatalogRef, Sum, Repeat]

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[#*(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                at = pos + len(rest) - len(rest.lstrip())
                raise ExprSyntaxError(f"unexpected character {text[at]!r}", at)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, catalog: Catalog):
        self.catalog = catalog
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> ManifoldExpr:
        node = self.term()
        while self.peek()[:2] == ("op", "#"):
            self.i += 1
            node = Sum(node, self.term())
        return node

    def term(self) -> ManifoldExpr:
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            count = int(value)
            if count < 1:
                raise ExprSyntaxError(f"repeat count must be >= 1, got {count}", pos)
            self.take("op", "*")
            return Repeat(count, self.term())
        if kind == "name":
            self.i += 1
            params = []
            if self.peek()[:2] == ("op", "("):
                self.i += 1
                params.append(int(self.take("int")[1]))
                while self.peek()[:2] == ("op", ","):
                    self.i += 1
                    params.append(int(self.take("int")[1]))
                self.take("op", ")")
            try:
                entry = self.catalog.entry(value)
            except UnknownNameError:
                raise ExprNameError(f"{value!r} is not in the catalog", pos) from None
            if len(params) != entry.arity:
                raise ExprArityError(
                    f"{entry.name} takes {entry.arity} parameter(s), got {len(params)}", pos)
            return CatalogRef(entry.name, tuple(params))
        got = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"expected a manifold name or repeat count, got {got}", pos)


def parse_expr(text: str, catalog: Catalog = CATALOG) -> ManifoldExpr:
    p = _Parser(text, catalog)
    node = p.expr()
    p.take("end")
    return node


def pretty(node: ManifoldExpr) -> str:
    """Canonical text form; parses back to the same tree."""
    if isinstance(node, CatalogRef):
        return node.name + params_text(node.params)
    if isinstance(node, Repeat):
        return f"{node.count}*{pretty(node.expr)}"
    return f"{pretty(node.left)} # {pretty(node.right)}"


def evaluate(node: ManifoldExpr, catalog: Catalog = CATALOG, lax: bool = False) -> ManifoldClass:
    if isinstance(node, CatalogRef):
        try:
            return catalog.lookup(node.name, node.params, lax=lax)
        except ArityError as exc:
            raise ExprArityError(str(exc)) from None
        except UnknownNameError as exc:
            raise ExprNameError(str(exc)) from None
    if isinstance(node, Repeat):
        return multi_sum([(node.count, evaluate(node.expr, catalog, lax))])
    return connected_sum(evaluate(node.left, catalog, lax), evaluate(node.right, catalog, lax))


def summands(node: ManifoldExpr) -> list[ManifoldExpr]:
    """Flatten the top-level '#' chain."""
    if isinstance(node, Sum):
        return summands(node.left) + summands(node.right)
    return [node]


def evaluate_text(text: str, catalog: Catalog = CATALOG, lax: bool = False) -> ManifoldClass:
    node = parse_expr(text, catalog)
    return evaluate(node, catalog, lax).relabel(pretty(node))
