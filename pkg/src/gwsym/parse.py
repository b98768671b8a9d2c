"""Text grammar for GW expressions, rational functions and polynomials.

    expr  := [sign] term (sign term)*   |   '0'   |   ''
    term  := [int ['*']] '<' class '>'
    class := rational                    (over Q, R, F_p)
           | rational function in t      (over F(t))

Errors carry the byte offset into the original text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .fields import QQ, FieldDesc, square_class
from .gw import GWElement

_INT = re.compile(r"\d+")
_RATIONAL = re.compile(r"\s*([+-]?\s*\d+)\s*(?:/\s*(\d+))?\s*")


@dataclass(frozen=True)
class GWTerm:
    sign: int
    mult: int
    cls: object

    def __str__(self):
        return f"{self.mult}*<{_fmt_class(self.cls)}>"


@dataclass(frozen=True)
class GWExpr:
    terms: tuple = ()

    def __str__(self):
        return render_expr(self)


def _fmt_class(c) -> str:
    if isinstance(c, tuple):
        from .funcfield import format_poly
        num, den = c
        if list(den) == [1]:
            return format_poly(num)
        return f"({format_poly(num)})/({format_poly(den)})"
    return str(c)


def render_expr(e: GWExpr) -> str:
    if not e.terms:
        return "0"
    out = []
    for i, t in enumerate(e.terms):
        body = f"{t.mult}*<{_fmt_class(t.cls)}>" if t.mult != 1 else f"<{_fmt_class(t.cls)}>"
        if i == 0:
            out.append(("-" if t.sign < 0 else "") + body)
        else:
            out.append(("- " if t.sign < 0 else "+ ") + body)
    return " ".join(out)


class _Scanner:
    def __init__(self, text: str, pos: int = 0, end: int | None = None):
        self.text = text
        self.pos = pos
        self.end = len(text) if end is None else end

    def skip(self):
        while self.pos < self.end and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < self.end else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def int(self) -> int | None:
        self.skip()
        m = _INT.match(self.text, self.pos, self.end)
        if not m:
            return None
        self.pos = m.end()
        return int(m.group())

    def fail(self, *expected):
        raise ParseError(self.pos, expected, self.text)


def parse_rational(text: str, start: int = 0, end: int | None = None) -> Fraction:
    end = len(text) if end is None else end
    m = _RATIONAL.fullmatch(text, start, end)
    if not m:
        raise ParseError(start, ["rational number"], text)
    num = int(m.group(1).replace(" ", ""))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(m.start(2), ["nonzero denominator"], text)
    return Fraction(num, den)


# -- dense polynomial arithmetic on Fraction lists, constant term first -------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _padd(p, q, s=1):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + s * (q[i] if i < len(q) else 0)
                  for i in range(n)])


def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


class _RatFuncParser:
    """Recursive descent over + - * / ^ and parentheses, values as (num, den)."""

    def __init__(self, text: str, var: str, start: int, end: int):
        self.s = _Scanner(text, start, end)
        self.var = var

    def parse(self):
        v = self.expr()
        if self.s.peek():
            self.s.fail("operator", "end of class")
        return v

    def expr(self):
        sign = 1
        if self.s.take("-"):
            sign = -1
        else:
            self.s.take("+")
        n, d = self.term()
        if sign < 0:
            n = [-c for c in n]
        while self.s.peek() in ("+", "-"):
            op = self.s.text[self.s.pos]
            self.s.pos += 1
            n2, d2 = self.term()
            n = _padd(_pmul(n, d2), _pmul(n2, d), 1 if op == "+" else -1)
            d = _pmul(d, d2)
        return n, d

    def term(self):
        n, d = self.factor()
        while True:
            c = self.s.peek()
            if c == "*":
                self.s.pos += 1
                n2, d2 = self.factor()
                n, d = _pmul(n, n2), _pmul(d, d2)
            elif c == "/":
                self.s.pos += 1
                pos = self.s.pos
                n2, d2 = self.factor()
                if n2 == [0]:
                    raise ParseError(pos, ["nonzero divisor"], self.s.text)
                n, d = _pmul(n, d2), _pmul(d, n2)
            elif c == "(" or (c and self.s.text.startswith(self.var, self.s.pos)):
                n2, d2 = self.factor()  # juxtaposition, as in 5t
                n, d = _pmul(n, n2), _pmul(d, d2)
            else:
                return n, d

    def factor(self):
        n, d = self.atom()
        if self.s.take("^"):
            k = self.s.int()
            if k is None:
                self.s.fail("exponent")
            pn, pd = [Fraction(1)], [Fraction(1)]
            for _ in range(k):
                pn, pd = _pmul(pn, n), _pmul(pd, d)
            n, d = pn, pd
        return n, d

    def atom(self):
        c = self.s.peek()
        if c == "(":
            self.s.pos += 1
            v = self.expr()
            if not self.s.take(")"):
                self.s.fail(")")
            return v
        if c and self.s.text.startswith(self.var, self.s.pos):
            self.s.pos += len(self.var)
            return [Fraction(0), Fraction(1)], [Fraction(1)]
        k = self.s.int()
        if k is None:
            self.s.fail("number", self.var, "(")
        return [Fraction(k)], [Fraction(1)]


def parse_ratfunc(text: str, var: str = "t", start: int = 0, end: int | None = None):
    """(num, den) Fraction coefficient lists, constant term first."""
    end = len(text) if end is None else end
    return _RatFuncParser(text, var, start, end).parse()


def parse_poly(text: str, var: str = "x") -> tuple[int, ...]:
    """Integer polynomial such as ``x^2-2``, constant term first."""
    num, den = parse_ratfunc(text, var)
    if len(den) != 1:
        raise ParseError(0, ["polynomial (no division by " + var + ")"], text)
    coeffs = [c / den[0] for c in num]
    if any(c.denominator != 1 for c in coeffs):
        raise ParseError(0, ["integer coefficients"], text)
    return tuple(int(c) for c in coeffs)


def parse_class(text: str, field: FieldDesc):
    if field.is_function_field:
        return square_class(parse_ratfunc(text, field.var), field)
    return square_class(parse_rational(text), field)


def parse_gw(text: str, field: FieldDesc | None = None) -> GWExpr:
    """Parse ``3<1> - 2<-1> + <2>``.  Classes are rational functions when ``field`` is F(t)."""
    s = _Scanner(text)
    if not s.peek():
        return GWExpr()
    if text.strip() == "0":
        return GWExpr()
    funcs = field is not None and field.is_function_field
    terms = []
    first = True
    while True:
        sign = 1
        c = s.peek()
        if c in ("+", "-"):
            s.pos += 1
            sign = -1 if c == "-" else 1
        elif not first:
            s.fail("+", "-", "end of input")
        mpos = s.pos
        mult = s.int()
        if mult is None:
            mult = 1
        elif mult < 1:
            raise ParseError(mpos, ["positive multiplier"], text)
        else:
            s.take("*")
        if not s.take("<"):
            s.fail("<")
        start = s.pos
        close = text.find(">", start)
        if close < 0:
            raise ParseError(len(text), [">"], text)
        if funcs:
            cls = parse_ratfunc(text, field.var, start, close)
            if cls[0] == [0]:
                raise ParseError(start, ["nonzero class"], text)
            cls = (tuple(cls[0]), tuple(cls[1]))
        else:
            cls = parse_rational(text, start, close)
            if cls == 0:
                raise ParseError(start, ["nonzero class"], text)
        s.pos = close + 1
        terms.append(GWTerm(sign, mult, cls))
        first = False
        if not s.peek():
            return GWExpr(tuple(terms))


def to_element(e: GWExpr, field: FieldDesc = QQ) -> GWElement:
    return GWElement(field, [(square_class(t.cls, field), t.sign * t.mult) for t in e.terms])


def parse_element(text: str, field: FieldDesc = QQ) -> GWElement:
    return to_element(parse_gw(text, field), field)
