"""A small expression language for motive classes.

Grammar (whitespace-insensitive, LL(1)):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary ('^' INT)?
    primary := 'L' | INT | 'A' INT | 'P' INT
             | 'Gr(' INT ',' INT ')' | 'Hilb' INT
             | 'Lin(' INT ')' | 'C(' INT ')' | 'Omega(' INT ',' INT ')'
             | 'Sym' INT '(' expr ')' | '(' expr ')'

'-' is left-associative difference, '*' binds tighter than '+'/'-', and '^'
binds tighter than '*'.  Integer literals denote disjoint unions of points,
so "P1 - 1" is the class L.  Difference is kept as its own node (rather than
addition of a negation) so registered formulas display exactly as written.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .atoms import AtomKind, atom_class
from .motive import MotiveClass


class ParseError(ValueError):
    """Syntax error with byte offset and the set of expected tokens."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        want = ", ".join(expected)
        super().__init__(f"syntax error at offset {offset}: expected {want}, found {found}")


class ArityError(ValueError):
    """Structurally valid atom with ill-formed parameters (e.g. Gr(3,2))."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"bad atom parameters at offset {offset}: {message}")


# -- abstract syntax ---------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    kind: AtomKind


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Lefschetz:
    pass


@dataclass(frozen=True)
class Sum:
    items: tuple


@dataclass(frozen=True)
class Diff:
    left: "VarietyExpr"
    right: "VarietyExpr"


@dataclass(frozen=True)
class Prod:
    items: tuple


@dataclass(frozen=True)
class Pow:
    base: "VarietyExpr"
    exponent: int


@dataclass(frozen=True)
class Sym:
    order: int
    inner: "VarietyExpr"


VarietyExpr = Union[Atom, Lit, Lefschetz, Sum, Diff, Prod, Pow, Sym]


# -- lexer --------------------------------------------------------------------

_PUNCT = "()+-*^,"


@dataclass(frozen=True)
class _Token:
    kind: str  # 'INT', 'WORD', one of _PUNCT, or 'EOF'
    text: str
    offset: int


def _lex(src: str) -> list[_Token]:
    toks = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            toks.append(_Token(ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(_Token("INT", src[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and src[j].isalpha():
                j += 1
            toks.append(_Token("WORD", src[i:j], i))
            i = j
        else:
            raise ParseError(i, ("expression",), repr(ch))
    toks.append(_Token("EOF", "", n))
    return toks


_PRIMARY_START = ("'L'", "'A'", "'P'", "'Gr'", "'Hilb'", "'Lin'", "'C'",
                  "'Omega'", "'Sym'", "integer", "'('")


class _Parser:
    def __init__(self, src: str):
        self.toks = _lex(src)
        self.i = 0

    def _peek(self) -> _Token:
        return self.toks[self.i]

    def _take(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _expect(self, kind: str, expected: tuple[str, ...]) -> _Token:
        t = self._peek()
        if t.kind != kind:
            raise ParseError(t.offset, expected, t.text or "end of input")
        return self._take()

    def _int(self) -> int:
        return int(self._expect("INT", ("integer",)).text)

    def parse(self) -> VarietyExpr:
        e = self.expr()
        t = self._peek()
        if t.kind != "EOF":
            raise ParseError(t.offset, ("'+'", "'-'", "'*'", "'^'", "end of input"), t.text)
        return e

    def expr(self) -> VarietyExpr:
        acc = self.term()
        while self._peek().kind in "+-":
            op = self._take().kind
            rhs = self.term()
            if op == "+":
                if isinstance(acc, Sum):
                    acc = Sum(acc.items + (rhs,))
                else:
                    acc = Sum((acc, rhs))
            else:
                acc = Diff(acc, rhs)
        return acc

    def term(self) -> VarietyExpr:
        items = [self.factor()]
        while self._peek().kind == "*":
            self._take()
            items.append(self.factor())
        return items[0] if len(items) == 1 else Prod(tuple(items))

    def factor(self) -> VarietyExpr:
        base = self.primary()
        if self._peek().kind == "^":
            self._take()
            return Pow(base, self._int())
        return base

    def primary(self) -> VarietyExpr:
        t = self._peek()
        if t.kind == "INT":
            return Lit(int(self._take().text))
        if t.kind == "(":
            self._take()
            e = self.expr()
            self._expect(")", ("')'",))
            return e
        if t.kind != "WORD":
            raise ParseError(t.offset, _PRIMARY_START, t.text or "end of input")
        word = self._take()
        if word.text == "L":
            return Lefschetz()
        if word.text == "A":
            return Atom(AtomKind("affine", (self._int(),)))
        if word.text == "P":
            return Atom(AtomKind("projective", (self._int(),)))
        if word.text == "Hilb":
            return Atom(AtomKind("hilb_p2", (self._int(),)))
        if word.text == "Gr":
            k, n = self._pair()
            if k > n:
                raise ArityError(word.offset, f"Gr({k},{n}) requires k <= n")
            return Atom(AtomKind("grassmannian", (k, n)))
        if word.text == "Lin":
            return Atom(AtomKind("linear_system", (self._paren_int(),)))
        if word.text == "C":
            return Atom(AtomKind("universal_curve", (self._paren_int(),)))
        if word.text == "Omega":
            return Atom(AtomKind("omega_locus", self._pair()))
        if word.text == "Sym":
            order = self._int()
            self._expect("(", ("'('",))
            inner = self.expr()
            self._expect(")", ("')'",))
            return Sym(order, inner)
        raise ParseError(word.offset, _PRIMARY_START, word.text)

    def _paren_int(self) -> int:
        self._expect("(", ("'('",))
        v = self._int()
        self._expect(")", ("')'",))
        return v

    def _pair(self) -> tuple[int, int]:
        self._expect("(", ("'('",))
        a = self._int()
        self._expect(",", ("','",))
        b = self._int()
        self._expect(")", ("')'",))
        return a, b


def parse(source: str) -> VarietyExpr:
    """Parse a source string into an expression tree."""
    return _Parser(source).parse()


# -- evaluation ----------------------------------------------------------------

def eval_expr(e: VarietyExpr) -> MotiveClass:
    """Evaluate an expression tree to its motive class."""
    if isinstance(e, Atom):
        return atom_class(e.kind)
    if isinstance(e, Lit):
        return MotiveClass((e.value,))
    if isinstance(e, Lefschetz):
        return MotiveClass((0, 1))
    if isinstance(e, Sum):
        acc = MotiveClass()
        for item in e.items:
            acc = acc + eval_expr(item)
        return acc
    if isinstance(e, Diff):
        return eval_expr(e.left) - eval_expr(e.right)
    if isinstance(e, Prod):
        acc = MotiveClass((1,))
        for item in e.items:
            acc = acc * eval_expr(item)
        return acc
    if isinstance(e, Pow):
        return eval_expr(e.base) ** e.exponent
    if isinstance(e, Sym):
        return eval_expr(e.inner).sym_power(e.order)
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(source: str) -> MotiveClass:
    """Parse and evaluate in one step."""
    return eval_expr(parse(source))


# -- formatting ----------------------------------------------------------------

_ADD, _MUL, _POW, _PRIMARY = 1, 2, 3, 4


def _prec(e: VarietyExpr) -> int:
    if isinstance(e, (Sum, Diff)):
        return _ADD
    if isinstance(e, Prod):
        return _MUL
    if isinstance(e, Pow):
        return _POW
    return _PRIMARY


def _atom_text(kind: AtomKind) -> str:
    k = kind.kind
    a = kind.args
    if k == "affine":
        return f"A{a[0]}"
    if k == "projective":
        return f"P{a[0]}"
    if k == "grassmannian":
        return f"Gr({a[0]},{a[1]})"
    if k == "hilb_p2":
        return f"Hilb{a[0]}"
    if k == "linear_system":
        return f"Lin({a[0]})"
    if k == "universal_curve":
        return f"C({a[0]})"
    return f"Omega({a[0]},{a[1]})"


def format_expr(e: VarietyExpr) -> str:
    """Render a tree in canonical syntax; parse(format_expr(e)) == e for
    trees in parser shape (no Sum directly under Sum or Prod under Prod)."""
    if isinstance(e, Atom):
        return _atom_text(e.kind)
    if isinstance(e, Lit):
        return str(e.value)
    if isinstance(e, Lefschetz):
        return "L"
    if isinstance(e, Sum):
        parts = []
        for pos, item in enumerate(e.items):
            text = format_expr(item)
            # later '+' operands at additive level would re-associate
            if isinstance(item, Sum) or (pos > 0 and _prec(item) <= _ADD):
                text = f"({text})"
            parts.append(text)
        return "+".join(parts)
    if isinstance(e, Diff):
        left = format_expr(e.left)
        right = format_expr(e.right)
        if _prec(e.right) <= _ADD:
            right = f"({right})"
        return f"{left}-{right}"
    if isinstance(e, Prod):
        parts = []
        for item in e.items:
            text = format_expr(item)
            if _prec(item) < _MUL or isinstance(item, Prod):
                text = f"({text})"
            parts.append(text)
        return "*".join(parts)
    if isinstance(e, Pow):
        base = format_expr(e.base)
        if _prec(e.base) < _PRIMARY:
            base = f"({base})"
        return f"{base}^{e.exponent}"
    if isinstance(e, Sym):
        return f"Sym{e.order}({format_expr(e.inner)})"
    raise TypeError(f"not an expression node: {e!r}")
