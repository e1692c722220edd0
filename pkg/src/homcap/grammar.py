"""Text grammar for spaces and groups, with renderers that round-trip.

Groups:  ``Z``, ``Z/n`` (n >= 2), ``Z^r``, ``0``, combined with ``+``.
Spaces:  ``*``, ``S^n``, ``M(<group>, n)``, ``K(<group>, n)``, ``CP^n``,
infix ``v`` (wedge) and ``x`` (product, binds tighter), parentheses.
Whitespace is insignificant; tokenization is longest-match.
"""

from __future__ import annotations

import re

from .abelian import FgAbelianGroup
from .spaces import (
    POINT,
    ComplexProjective,
    EilenbergMacLane,
    Moore,
    Point,
    Product,
    SpaceExpr,
    Sphere,
    Wedge,
)

__all__ = [
    "ParseError",
    "DomainError",
    "parse_space",
    "parse_group",
    "render_space",
    "render_group",
]


class ParseError(ValueError):
    """Input does not match the grammar; carries a 1-based column."""

    def __init__(self, column: int, expected: str):
        self.column = column
        self.expected = expected
        super().__init__(f"column {column}: expected {expected}")


class DomainError(ValueError):
    """Grammatical input naming a space/group outside the domain rules."""


_TOKEN_RE = re.compile(r"\d+|CP|[SMKZvx]|[\^/+,()*]")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(pos + 1, f"a valid token, not {text[pos]!r}")
        tokens.append((m.group(), pos + 1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.end_column = len(text) + 1
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def column(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.end_column

    def take(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def expect(self, token: str, what: str | None = None) -> None:
        if self.peek() != token:
            raise ParseError(self.column(), what or f"{token!r}")
        self.pos += 1

    def number(self, what: str) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ParseError(self.column(), what)
        self.pos += 1
        return int(tok)

    def expect_end(self) -> None:
        if self.peek() is not None:
            raise ParseError(self.column(), "end of input")

    # -- groups ---------------------------------------------------------

    def group(self) -> FgAbelianGroup:
        orders = self.group_term()
        while self.peek() == "+":
            self.take()
            orders.extend(self.group_term())
        return FgAbelianGroup.from_orders(*orders)

    def group_term(self) -> list[int]:
        tok = self.peek()
        if tok == "0":
            self.take()
            return []
        if tok == "Z":
            self.take()
            nxt = self.peek()
            if nxt == "/":
                self.take()
                col = self.column()
                n = self.number("a cyclic order after 'Z/'")
                if n < 2:
                    raise DomainError(
                        f"column {col}: cyclic order must be >= 2 (Z/{n} is not a "
                        "group literal; write 0 for the trivial group)"
                    )
                return [n]
            if nxt == "^":
                self.take()
                return [0] * self.number("a rank after 'Z^'")
            return [0]
        raise ParseError(self.column(), "a group term: 'Z', 'Z/n', 'Z^r', or '0'")

    # -- spaces ---------------------------------------------------------

    def space(self) -> SpaceExpr:
        children = [self.product_expr()]
        while self.peek() == "v":
            self.take()
            children.append(self.product_expr())
        return children[0] if len(children) == 1 else Wedge(tuple(children))

    def product_expr(self) -> SpaceExpr:
        children = [self.atom()]
        while self.peek() == "x":
            self.take()
            children.append(self.atom())
        return children[0] if len(children) == 1 else Product(tuple(children))

    def atom(self) -> SpaceExpr:
        tok = self.peek()
        if tok == "*":
            self.take()
            return POINT
        if tok == "(":
            self.take()
            inner = self.space()
            self.expect(")", "')'")
            return inner
        if tok == "S":
            self.take()
            self.expect("^", "'^' after 'S'")
            col = self.column()
            n = self.number("a dimension after 'S^'")
            if n < 1:
                raise DomainError(f"column {col}: sphere dimension must be >= 1")
            return Sphere(n)
        if tok == "CP":
            self.take()
            self.expect("^", "'^' after 'CP'")
            col = self.column()
            n = self.number("an index after 'CP^'")
            if n == 1:
                raise DomainError(f"column {col}: CP^1 is the 2-sphere; write S^2")
            if n < 2:
                raise DomainError(f"column {col}: complex projective index must be >= 2")
            return ComplexProjective(n)
        if tok in ("M", "K"):
            self.take()
            self.expect("(", f"'(' after '{tok}'")
            group = self.group()
            self.expect(",", "',' before the degree")
            col = self.column()
            n = self.number("a degree")
            self.expect(")", "')'")
            if tok == "M":
                if n < 2:
                    raise DomainError(
                        f"column {col}: Moore spaces are not defined in degree 1; "
                        "degree must be >= 2"
                    )
                return Moore(group, n)
            if n < 1:
                raise DomainError(
                    f"column {col}: Eilenberg-MacLane degree must be >= 1"
                )
            return EilenbergMacLane(group, n)
        raise ParseError(
            self.column(),
            "a space: '*', 'S^n', 'M(group, n)', 'K(group, n)', 'CP^n', or '('",
        )


def parse_space(text: str) -> SpaceExpr:
    """Parse a space expression (the tree is as written, not canonicalized)."""
    p = _Parser(text)
    space = p.space()
    p.expect_end()
    return space


def parse_group(text: str) -> FgAbelianGroup:
    p = _Parser(text)
    group = p.group()
    p.expect_end()
    return group


def render_group(group: FgAbelianGroup) -> str:
    return str(group)


def render_space(space: SpaceExpr) -> str:
    """Grammar text for a space; re-parsing yields a structurally equal tree."""
    if isinstance(space, Point):
        return "*"
    if isinstance(space, Sphere):
        return f"S^{space.dim}"
    if isinstance(space, Moore):
        return f"M({render_group(space.group)}, {space.degree})"
    if isinstance(space, EilenbergMacLane):
        return f"K({render_group(space.group)}, {space.degree})"
    if isinstance(space, ComplexProjective):
        return f"CP^{space.dim}"
    if isinstance(space, Wedge):
        return " v ".join(
            f"({render_space(c)})" if isinstance(c, Wedge) else render_space(c)
            for c in space.children
        )
    if isinstance(space, Product):
        return " x ".join(
            f"({render_space(c)})" if isinstance(c, (Wedge, Product)) else render_space(c)
            for c in space.children
        )
    raise TypeError(f"not a space expression: {space!r}")
