"""Sparse polynomials in x, y with an optional truncation cap.

A polynomial with ``cap = D`` stands for its class in R/m^D, where
R = k[[x, y]] and m = (x, y): no stored term has total degree >= D.
``cap = None`` means genuine polynomial data.

Monomials are tuples ``(a, b)`` for x^a y^b.
"""

import enum

from .field import QQ


class Order(enum.Enum):
    LEX = "lex"
    DEGLEX = "deglex"
    LOCAL = "local"

    def key(self, m):
        """Sort key: the order-greatest monomial has the greatest key."""
        a, b = m
        if self is Order.LEX:
            return (a, b)
        if self is Order.DEGLEX:
            return (a + b, a)
        # local degree order: lower degree wins, lex (x > y) breaks ties
        return (-(a + b), a)


LEX, DEGLEX, LOCAL = Order.LEX, Order.DEGLEX, Order.LOCAL


def compare(m1, m2, order=LOCAL):
    """Return -1, 0 or 1 as m1 is smaller, equal or greater than m2."""
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def deg(m):
    return m[0] + m[1]


def divides(m1, m2):
    return m1[0] <= m2[0] and m1[1] <= m2[1]


def _min_cap(c1, c2):
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    return min(c1, c2)


class Poly:
    """Immutable sparse bivariate polynomial over a ``Field``."""

    __slots__ = ("terms", "field", "cap")

    def __init__(self, terms=None, field=QQ, cap=None):
        if cap is not None and cap < 1:
            raise ValueError("cap must be a positive integer or None")
        clean = {}
        if terms:
            for m, c in terms.items():
                if cap is not None and m[0] + m[1] >= cap:
                    continue
                c = field(c)
                if c:
                    if m[0] < 0 or m[1] < 0:
                        raise ValueError(f"negative exponent in {m}")
                    clean[(int(m[0]), int(m[1]))] = c
        self.terms = clean
        self.field = field
        self.cap = cap

    @classmethod
    def _raw(cls, terms, field, cap):
        # terms already normalized and truncated
        p = object.__new__(cls)
        p.terms = terms
        p.field = field
        p.cap = cap
        return p

    # constructors

    @classmethod
    def zero(cls, field=QQ, cap=None):
        return cls._raw({}, field, cap)

    @classmethod
    def const(cls, c, field=QQ, cap=None):
        return cls({(0, 0): c}, field, cap)

    @classmethod
    def monomial(cls, a, b, coeff=1, field=QQ, cap=None):
        return cls({(a, b): coeff}, field, cap)

    @classmethod
    def from_y(cls, coeffs, field=QQ, cap=None):
        """Univariate polynomial in y from ``{exponent: coeff}`` or a list."""
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        return cls({(0, k): c for k, c in coeffs.items()}, field, cap)

    # basic protocol

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .parse import format_poly
        extra = "" if self.cap is None else f", cap={self.cap}"
        return f"Poly({format_poly(self)!r}, {self.field!r}{extra})"

    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    def coeff(self, a, b=None):
        m = a if b is None else (a, b)
        return self.terms.get(m, self.field.zero)

    def monomials(self):
        return self.terms.keys()

    # degrees

    def degree(self):
        """Largest total degree of a term. Undefined on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(a + b for a, b in self.terms)

    def order(self):
        """Least total degree of a term (the m-adic order). Undefined on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(a + b for a, b in self.terms)

    def is_y_only(self):
        return all(a == 0 for a, _ in self.terms)

    def y_coeffs(self):
        if not self.is_y_only():
            raise ValueError("not a polynomial in y alone")
        return {b: c for (_, b), c in self.terms.items()}

    def leading_term(self, order=LOCAL):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order=LOCAL):
        return self.leading_term(order)[0]

    def sorted_terms(self, order=LEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    # caps

    def with_cap(self, cap):
        """Reinterpret in R/m^cap (drops terms of degree >= cap); None keeps the terms as exact data."""
        if cap is None:
            return Poly._raw(dict(self.terms), self.field, None)
        return Poly(self.terms, self.field, cap)

    def truncate(self, D):
        """Drop all terms of total degree > D; the cap is kept."""
        return Poly._raw({m: c for m, c in self.terms.items() if m[0] + m[1] <= D},
                         self.field, self.cap)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return Poly.const(other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        cap = _min_cap(self.cap, other.cap)
        p = self.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else (v + c if p is None else (v + c) % p)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        if cap is not None and (self.cap != cap or other.cap != cap):
            out = {m: c for m, c in out.items() if m[0] + m[1] < cap}
        return Poly._raw(out, self.field, cap)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p is None:
            return Poly._raw({m: -c for m, c in self.terms.items()}, self.field, self.cap)
        return Poly._raw({m: -c % p for m, c in self.terms.items()}, self.field, self.cap)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        return self.mul(other, _min_cap(self.cap, other.cap))

    __rmul__ = __mul__

    def mul(self, other, cap):
        """Product in R/m^cap (``cap=None`` for the exact product)."""
        p = self.field.p
        out = {}
        get = out.get
        for (a1, b1), c1 in self.terms.items():
            d1 = a1 + b1
            for (a2, b2), c2 in other.terms.items():
                if cap is not None and d1 + a2 + b2 >= cap:
                    continue
                m = (a1 + a2, b1 + b2)
                out[m] = get(m, 0) + c1 * c2
        if p is None:
            out = {m: c for m, c in out.items() if c}
        else:
            out = {m: c % p for m, c in out.items() if c % p}
        return Poly._raw(out, self.field, cap)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return Poly._raw({}, self.field, self.cap)
        p = self.field.p
        if p is None:
            return Poly._raw({m: v * c for m, v in self.terms.items()}, self.field, self.cap)
        return Poly._raw({m: v * c % p for m, v in self.terms.items()}, self.field, self.cap)

    def shift(self, a, b, coeff=None):
        """Multiply by ``coeff * x^a y^b``, respecting the cap."""
        cap = self.cap
        terms = self.terms
        if coeff is not None:
            coeff = self.field(coeff)
            if not coeff:
                return Poly._raw({}, self.field, cap)
            p = self.field.p
            terms = {m: (v * coeff if p is None else v * coeff % p) for m, v in terms.items()}
        out = {(m[0] + a, m[1] + b): v for m, v in terms.items()
               if cap is None or m[0] + m[1] + a + b < cap}
        return Poly._raw(out, self.field, cap)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.field, self.cap)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self, order=LOCAL):
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def substitute_linear(self, g):
        """Substitute x -> g11 x + g12 y, y -> g21 x + g22 y."""
        (g11, g12), (g21, g22) = g
        F = self.field
        X = Poly({(1, 0): g11, (0, 1): g12}, F, self.cap)
        Y = Poly({(1, 0): g21, (0, 1): g22}, F, self.cap)
        out = Poly.zero(F, self.cap)
        xpow = {0: Poly.const(1, F, self.cap)}
        ypow = {0: Poly.const(1, F, self.cap)}
        for (a, b), c in self.terms.items():
            for k, base, cache in ((a, X, xpow), (b, Y, ypow)):
                while k not in cache:
                    n = max(cache)
                    cache[n + 1] = cache[n] * base
            out = out + (xpow[a] * ypow[b]).scale(c)
        return out


def mul_truncated(f, g, cap):
    return f.mul(g, cap)


def truncate(f, D):
    return f.truncate(D)


def leading_term(f, order=LOCAL):
    return f.leading_term(order)


def x(field=QQ, cap=None):
    return Poly.monomial(1, 0, 1, field, cap)


def y(field=QQ, cap=None):
    return Poly.monomial(0, 1, 1, field, cap)
