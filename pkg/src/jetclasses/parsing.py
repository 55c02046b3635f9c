"""
Text formats: polynomials, ideals, gradings and truncated series.

Grammar for polynomials::

    expr   := signed (("+" | "-") signed)*
    signed := ("+" | "-") signed | power (("*" | "/") factor)*
    factor := ("+" | "-") signed | power
    power  := atom ("^" INT)?
    atom   := INT | IDENT | "(" expr ")"

Identifiers are ``[A-Za-z][A-Za-z0-9]*`` with an optional ``_k`` jet suffix,
so ``x1_2`` is the second jet coordinate of ``x1``.  Multiplication must be
written out; ``2x`` is a syntax error.  Division is only by nonzero
constants.
"""

import re

from .algebra import MultiGrading, PolynomialRing, Variable
from .errors import GradingError, ParseError, UnknownVariableError

__all__ = [
    "parse_polynomial",
    "parse_polynomials",
    "parse_ideal_text",
    "parse_grading",
    "parse_series",
    "split_identifier",
]

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*(?:_\d+)?)|(?P<op>[-+*/^()])"
)
_IDENT = re.compile(r"([A-Za-z][A-Za-z0-9]*)(?:_(\d+))?$")


def split_identifier(ident):
    """``"x1_2" -> ("x1", 2)``; ``"y" -> ("y", 0)``."""
    m = _IDENT.match(ident)
    if not m:
        raise ParseError(f"bad identifier {ident!r}")
    return m.group(1), int(m.group(2) or 0)


def _tokenize(text):
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            tokens.append((kind, value, line, col))
        for ch in value:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], tok[3])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "ident") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed; write '*'")
            raise self.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self):
        value = self.signed()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.signed()
            value = value + rhs if op == "+" else value - rhs
        return value

    def signed(self):
        tok = self.peek()
        if tok[1] in ("+", "-"):
            self.take()
            inner = self.signed()
            return inner if tok[1] == "+" else -inner
        value = self.power()
        while self.peek()[1] in ("*", "/"):
            op = self.take()
            if self.peek()[1] in ("+", "-"):
                rhs = self.signed()
            else:
                rhs = self.power()
            if op[1] == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise self.error("division only by a nonzero constant", op)
                value = value / rhs.coefficient((0,) * self.ring.nvars)
        return value

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer", tok)
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, value = tok[0], tok[1]
        if kind == "int":
            return self.ring.constant(int(value))
        if kind == "ident":
            if value not in self.ring:
                raise UnknownVariableError(f"unknown variable {value!r}", tok[2], tok[3])
            return self.ring.gen(value)
        if value == "(":
            inner = self.expr()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return inner
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {value!r}", tok)


def _ring_from_identifiers(idents):
    bases = sorted({split_identifier(s)[0] for s in idents})
    index = {b: i for i, b in enumerate(bases)}
    variables = set()
    for s in idents:
        b, k = split_identifier(s)
        variables.add(Variable(b, index[b], k))
    return PolynomialRing(variables)


def parse_polynomials(texts, ring=None):
    """Parse several polynomials into one ring.

    Without ``ring`` a ring is built from the identifiers that occur, base
    names sorted alphabetically.
    """
    token_lists = [_tokenize(t) for t in texts]
    if ring is None:
        idents = {tok[1] for toks in token_lists for tok in toks if tok[0] == "ident"}
        ring = _ring_from_identifiers(idents)
    return [_Parser(toks, ring).parse() for toks in token_lists]


def parse_polynomial(text, ring=None):
    """Parse one polynomial; see the module docstring for the grammar."""
    return parse_polynomials([text], ring)[0]


def parse_ideal_text(text, ring=None):
    """Comma-separated generators, all parsed into one ring."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("no generators given")
    return parse_polynomials(parts, ring)


def parse_grading(text, ring):
    """Parse ``"x:2;y:3"`` or ``"a11:1,0;a21:0,1"`` into a :class:`MultiGrading`.

    Entries may name base variables; jet variables inherit from them.
    """
    table = {}
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        if ":" not in item:
            raise GradingError(f"expected 'var:degree', got {item!r}")
        name, vec = item.split(":", 1)
        try:
            table[name.strip()] = tuple(int(a) for a in vec.split(","))
        except ValueError:
            raise GradingError(f"bad degree vector in {item!r}") from None
    return MultiGrading(ring, table)


_T_RING = PolynomialRing([Variable("t", 0)])


def parse_series(text, m):
    """Parse a polynomial in ``t`` and truncate it modulo ``t^(m+1)``."""
    from .series import TruncatedSeries

    p = parse_polynomial(text, _T_RING)
    return TruncatedSeries.from_polynomial(p, m)
