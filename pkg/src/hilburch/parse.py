"""Recursive-descent parser and printer for polynomials in x, y.

Grammar (whitespace ignored)::

    poly  := ['+'|'-'] term (('+'|'-') term)*
    term  := (coeff | mono) ('*'? mono)*
    mono  := ('x'|'y') ('^' uint)?
    coeff := uint ('/' uint)?

The printer emits terms in descending lex order (x > y), writes exponents
with ``^`` and omits ``*``, so ``format_poly(parse_poly(s))`` is canonical.
"""

from fractions import Fraction

from .field import QQ
from .poly import LEX, Poly


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class _Parser:
    def __init__(self, text, field, cap):
        # keep original positions for error messages
        self.chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.i = 0
        self.field = field
        self.cap = cap
        self.end = len(text)

    def peek(self):
        return self.chars[self.i][1] if self.i < len(self.chars) else ""

    def pos(self):
        return self.chars[self.i][0] if self.i < len(self.chars) else self.end

    def take(self):
        c = self.peek()
        self.i += 1
        return c

    def uint(self):
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected an integer", self.pos())
        return int("".join(c for _, c in self.chars[start:self.i]))

    def mono(self):
        var = self.take()
        e = 1
        if self.peek() == "^":
            self.take()
            e = self.uint()
        return (e, 0) if var == "x" else (0, e)

    def term(self):
        coeff = Fraction(1)
        a = b = 0
        if self.peek().isdigit():
            num = self.uint()
            if self.peek() == "/":
                self.take()
                at = self.pos()
                den = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", at)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
        elif self.peek() in ("x", "y"):
            da, db = self.mono()
            a, b = a + da, b + db
        else:
            raise ParseError(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end", self.pos())
        while True:
            if self.peek() == "*":
                self.take()
                if self.peek() not in ("x", "y"):
                    raise ParseError("expected 'x' or 'y' after '*'", self.pos())
            if self.peek() in ("x", "y"):
                da, db = self.mono()
                a, b = a + da, b + db
            else:
                return (a, b), coeff

    def poly(self):
        terms = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        while True:
            at = self.pos()
            m, c = self.term()
            c = sign * c
            if self.field.p is not None and c.denominator % self.field.p == 0:
                raise ParseError(f"coefficient {c} not invertible mod {self.field.p}", at)
            terms[m] = terms.get(m, 0) + c
            if self.peek() in ("+", "-"):
                sign = -1 if self.take() == "-" else 1
                continue
            if self.peek():
                raise ParseError(f"unexpected {self.peek()!r}", self.pos())
            return Poly(terms, self.field, self.cap)


def parse_poly(text, field=QQ, cap=None):
    """Parse ``text`` into a ``Poly`` over ``field``.

    >>> str(parse_poly("x^4+x^3*y"))
    'x^4+x^3y'
    """
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    return _Parser(text, field, cap).poly()


def parse_poly_list(text, field=QQ, cap=None):
    """Parse ``"p1; p2; ..."`` (commas also accepted when unambiguous)."""
    sep = ";" if ";" in text else ","
    return [parse_poly(part, field, cap) for part in text.split(sep) if part.strip()]


def _format_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _format_mono(a, b):
    out = ""
    if a:
        out += "x" if a == 1 else f"x^{a}"
    if b:
        out += "y" if b == 1 else f"y^{b}"
    return out


def format_poly(f):
    if not f.terms:
        return "0"
    pieces = []
    for (a, b), c in f.sorted_terms(LEX):
        c = f.field.signed(c)
        neg = c < 0
        c = -c if neg else c
        mono = _format_mono(a, b)
        if not mono:
            body = _format_coeff(c)
        elif c == 1:
            body = mono
        else:
            body = _format_coeff(c) + mono
        pieces.append(("-" if neg else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += sign + body
    return out
