"""Reading and writing maps, curves and points as text.

Grammar::

    map    ::= '[' poly (',' poly)* ']' 'over' domain '[' ident (',' ident)* ']'
    domain ::= 'QQ' | 'ZZ' | 'GF(' prime ')'
    poly   ::= ['+'|'-'] product (('+'|'-') product)*
    product::= power (['*'|'/'] power | power)*      # juxtaposition multiplies
    power  ::= atom (('^'|'**') integer)?
    atom   ::= integer | ident | '(' poly ')'

Division is only allowed by a nonzero constant. A curve is a map literal over a
single variable; a point is a comma separated list of numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import GREVLEX, Polynomial, mul, sorted_terms
from .ring import GF, QQ, ZZ, Domain


class ParseError(ValueError):
    """Syntax or semantic error with a 1-based line/column and the expected tokens."""

    def __init__(self, message, text="", pos=0, expected=()):
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(sorted(set(expected)))
        detail = f"line {self.line}, column {self.column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownVariable(ParseError):
    pass


class WrongArity(ParseError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^(),\[\]−]))"
)


@dataclass
class _Tok:
    kind: str  # num, ident, op, end
    text: str
    pos: int


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            toks.append(_Tok("end", "", n))
            return toks
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        val = m.group(kind)
        if val == "−":
            val = "-"
        toks.append(_Tok(kind, val, m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, expected=(), tok=None, cls=ParseError):
        tok = tok or self.tok
        return cls(msg, self.text, tok.pos, expected)

    def accept(self, text):
        if self.tok.kind != "num" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"found {found!r}", [repr(text)])

    def expect_end(self):
        if self.tok.kind != "end":
            raise self.error(f"trailing input {self.tok.text!r}", ["end of input"])

    # -- header -------------------------------------------------------------

    def domain(self):
        tok = self.tok
        if tok.kind == "ident" and tok.text in ("QQ", "ZZ"):
            self.i += 1
            return QQ if tok.text == "QQ" else ZZ
        if tok.kind == "ident" and tok.text == "GF":
            self.i += 1
            self.expect("(")
            ptok = self.tok
            if ptok.kind != "num":
                raise self.error("modulus must be an integer", ["integer"])
            self.i += 1
            self.expect(")")
            try:
                return GF(int(ptok.text))
            except ValueError as exc:
                raise self.error(str(exc), tok=ptok) from None
        raise self.error(f"unknown domain {tok.text!r}", ["QQ", "ZZ", "GF("])

    def ident_list(self):
        self.expect("[")
        names = []
        while True:
            tok = self.tok
            if tok.kind != "ident":
                raise self.error("expected a variable name", ["identifier"])
            if tok.text in names:
                raise self.error(f"duplicate variable {tok.text!r}")
            names.append(tok.text)
            self.i += 1
            if self.accept("]"):
                return names
            if not self.accept(","):
                raise self.error(f"found {self.tok.text!r}", ["','", "']'"])

    # -- polynomial expressions (kept as raw trees until the header is known) --

    def poly_list(self):
        self.expect("[")
        polys = []
        while True:
            polys.append(self.expr())
            if self.accept("]"):
                return polys
            if not self.accept(","):
                raise self.error(
                    f"found {self.tok.text or 'end of input'!r}", ["','", "']'", "operator"]
                )

    def expr(self):
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        node = self.product()
        if sign < 0:
            node = ("neg", node)
        while True:
            if self.accept("+"):
                node = ("add", node, self.product())
            elif self.accept("-"):
                node = ("sub", node, self.product())
            else:
                return node

    def product(self):
        node = self.power()
        while True:
            if self.accept("*"):
                node = ("mul", node, self.power())
            elif self.accept("/"):
                tok = self.tok
                node = ("div", node, self.power(), tok)
            elif self.tok.kind in ("num", "ident") or self.tok.text == "(":
                node = ("mul", node, self.power())
            else:
                return node

    def power(self):
        node = self.atom()
        if self.accept("^") or self.accept("**"):
            tok = self.tok
            if tok.kind != "num":
                raise self.error("exponent must be a non-negative integer", ["integer"])
            self.i += 1
            node = ("pow", node, int(tok.text))
        return node

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return ("num", int(tok.text))
        if tok.kind == "ident":
            self.i += 1
            return ("var", tok)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        # a leading sign inside a factor, e.g. "x*-2"
        if self.accept("-"):
            return ("neg", self.power())
        raise self.error(
            f"found {tok.text or 'end of input'!r}", ["number", "variable", "'('"]
        )


def _build(node, parser, domain, names):
    nv = len(names)
    kind = node[0]
    if kind == "num":
        return Polynomial.constant(domain, nv, node[1])
    if kind == "var":
        tok = node[1]
        if tok.text not in names:
            raise parser.error(
                f"unknown variable {tok.text!r}", names, tok=tok, cls=UnknownVariable
            )
        return Polynomial.variable(domain, nv, names.index(tok.text))
    if kind == "neg":
        return -_build(node[1], parser, domain, names)
    if kind == "pow":
        return _build(node[1], parser, domain, names) ** node[2]
    a = _build(node[1], parser, domain, names)
    b = _build(node[2], parser, domain, names)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return mul(a, b)
    # div
    if b.degree() > 0 or b.is_zero():
        raise parser.error("can only divide by a nonzero constant", tok=node[3])
    c = b.constant_term()
    if domain.kind == "ZZ":
        q = Fraction(1, 1) / c
        out = {}
        for m, v in a.terms.items():
            v = v * q
            if v.denominator != 1:
                raise parser.error("division leaves ZZ", tok=node[3])
            out[m] = v
        return Polynomial(domain, nv, out)
    return a * domain.inv(c)


def _parse_literal(text):
    p = _Parser(text)
    trees = p.poly_list()
    if not p.accept("over"):
        raise p.error(f"found {p.tok.text or 'end of input'!r}", ["'over'"])
    domain = p.domain()
    header_tok = p.tok
    names = p.ident_list()
    p.expect_end()
    polys = [_build(t, p, domain, names) for t in trees]
    return p, polys, domain, names, header_tok


def parse_polys(text):
    """Parse a literal into ``(polys, domain, names)`` without arity checks."""
    _, polys, domain, names, _ = _parse_literal(text)
    return polys, domain, names


def parse_map(text):
    """Parse ``[p1, ..., pn] over DOMAIN[x1, ..., xn]`` into a :class:`PolyMap`."""
    from .endo import PolyMap

    p, polys, domain, names, header = _parse_literal(text)
    if len(polys) != len(names):
        raise WrongArity(
            f"{len(polys)} polynomials in {len(names)} variables; a map needs n of each",
            text,
            header.pos,
        )
    return PolyMap(polys, names)


def parse_curve(text):
    """Parse ``[c1, ..., cn] over DOMAIN[t]`` into a :class:`Curve`."""
    from .endo import Curve

    p, polys, domain, names, header = _parse_literal(text)
    if len(names) != 1:
        raise WrongArity("a curve has exactly one parameter variable", text, header.pos)
    for k, c in enumerate(polys):
        if c.constant_term():
            raise ParseError(f"component {k + 1} has a nonzero constant term", text, 0)
    return Curve(polys, names[0])


def parse_coefficient(text, domain: Domain):
    text = text.strip().replace("−", "-")
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", text):
        raise ParseError(f"not a number: {text!r}", text, 0, ["integer", "a/b"])
    value = Fraction(text)
    if domain.kind == "ZZ" and value.denominator != 1:
        raise ParseError(f"{text} is not an integer", text, 0)
    return domain.convert(value)


def parse_point(text, domain: Domain):
    """``"1,-2,3/4"`` -> canonical coefficients."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return tuple(parse_coefficient(part, domain) for part in text.split(","))


# -- printing ---------------------------------------------------------------


def _monomial_text(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, names) -> str:
    """Canonical text: terms in descending grevlex, e.g. ``4*x^2 + x - 2*y``."""
    if f.is_zero():
        return "0"
    out = []
    for m, c in sorted_terms(f, GREVLEX):
        mono = _monomial_text(m, names)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_polys(polys, names) -> str:
    return "[" + ", ".join(format_poly(p, names) for p in polys) + "]"


def format_literal(polys, domain: Domain, names) -> str:
    return f"{format_polys(polys, names)} over {domain}[{', '.join(names)}]"


def format_point(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"
