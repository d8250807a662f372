"""
Formulas over named atoms: AST, parser and canonical renderer.

Grammar, loosest to tightest::

    implies := or ('->' implies)?          right-associative
    or      := and ('|' and)*              left-associative
    and     := unary ('&' unary)*          left-associative
    unary   := '!' unary | atom | '(' implies ')'
    atom    := [A-Za-z][A-Za-z0-9_]*

The glyphs ``¬ ⊓ ⊔ → ∧ ∨`` are accepted as aliases of ``! & | ->``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

from qlogic.errors import ParseError

# Bound on tree height and on '(' / '!' nesting; keeps every recursive walk well inside
# the interpreter's recursion limit.
MAX_DEPTH = 100


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Not, And, Or, Implies]


class Token(NamedTuple):
    kind: str  # 'atom', '!', '&', '|', '->', '(', ')', 'eof'
    text: str
    pos: int


_ALIASES = {
    "!": "!", "¬": "!",
    "&": "&", "⊓": "&", "∧": "&",
    "|": "|", "⊔": "|", "∨": "|",
    "→": "->",
    "(": "(", ")": ")",
}


def _is_ident_start(c: str) -> bool:
    return c.isascii() and c.isalpha()


def _is_ident_char(c: str) -> bool:
    return c.isascii() and (c.isalnum() or c == "_")


def tokenize(text: str) -> Iterator[Token]:
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "-":
            if text.startswith("->", i):
                yield Token("->", "->", i)
                i += 2
            else:
                raise ParseError(i, "expected '->'")
        elif c in _ALIASES:
            yield Token(_ALIASES[c], c, i)
            i += 1
        elif _is_ident_start(c):
            j = i + 1
            while j < n and _is_ident_char(text[j]):
                j += 1
            yield Token("atom", text[i:j], i)
            i = j
        else:
            raise ParseError(i, f"unexpected character {c!r}")
    yield Token("eof", "", n)


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = list(tokenize(text))
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def fail(self, expected: str):
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(tok.pos, f"expected {expected}, found {found}")

    def parse(self) -> Formula:
        f = self.implies()
        if self.tok.kind != "eof":
            self.fail("an operator or end of input")
        return f

    def implies(self) -> Formula:
        operands = [self.disjunction()]
        while self.take("->"):
            operands.append(self.disjunction())
        f = operands.pop()
        while operands:
            f = Implies(operands.pop(), f)
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.take("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.take("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        nots = 0
        while self.tok.kind == "!":
            if self.depth >= MAX_DEPTH:
                raise ParseError(self.tok.pos, "formula nested too deeply")
            self.i += 1
            nots += 1
            self.depth += 1
        f = self.primary()
        self.depth -= nots
        for _ in range(nots):
            f = Not(f)
        return f

    def primary(self) -> Formula:
        tok = self.tok
        if tok.kind == "atom":
            self.i += 1
            return Atom(tok.text)
        if tok.kind == "(":
            if self.depth >= MAX_DEPTH:
                raise ParseError(tok.pos, "formula nested too deeply")
            self.i += 1
            self.depth += 1
            f = self.implies()
            self.depth -= 1
            if not self.take(")"):
                self.fail("')'")
            return f
        self.fail("an atom, '!' or '('")


def parse(text: str) -> Formula:
    """Parse ``text`` into a :data:`Formula`; raises :class:`ParseError`."""
    f = _Parser(text).parse()
    if depth(f) > MAX_DEPTH:
        raise ParseError(0, f"formula tree deeper than {MAX_DEPTH}")
    return f


# Binding strength used by render; higher binds tighter.
_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Atom: 5}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}


def render(f: Formula) -> str:
    """Canonical text with the fewest parentheses that still parses back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = render(f.child)
        return "!" + (inner if _PREC[type(f.child)] >= _PREC[Not] else f"({inner})")
    prec = _PREC[type(f)]
    left, right = render(f.left), render(f.right)
    lp, rp = _PREC[type(f.left)], _PREC[type(f.right)]
    if isinstance(f, Implies):
        # right-associative: a left operand at the same level needs parentheses
        left_paren, right_paren = lp <= prec, rp < prec
    else:
        left_paren, right_paren = lp < prec, rp <= prec
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


def atoms_of(f: Formula) -> list[str]:
    """Distinct atom names in order of first occurrence."""
    seen: dict[str, None] = {}
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            seen.setdefault(g.name)
        elif isinstance(g, Not):
            stack.append(g.child)
        else:
            stack.append(g.right)
            stack.append(g.left)
    return list(seen)


def depth(f: Formula) -> int:
    """Height of the tree; an atom has depth 0."""
    best = 0
    stack = [(f, 0)]
    while stack:
        g, d = stack.pop()
        best = max(best, d)
        if isinstance(g, Not):
            stack.append((g.child, d + 1))
        elif not isinstance(g, Atom):
            stack.append((g.left, d + 1))
            stack.append((g.right, d + 1))
    return best
