"""Exact coefficient fields: the rationals and prime fields F_p."""

from fractions import Fraction
import math


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Field:
    """A coefficient field, either Q (``p is None``) or F_p.

    Elements are plain Python values: ``Fraction`` for Q and ints in
    ``range(p)`` for F_p. Use ``field(value)`` to convert.
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not (2 <= p < 2**31) or not is_prime(p):
                raise ValueError(f"F_p needs a prime 2 <= p < 2^31, got {p}")
        self.p = p

    @property
    def is_finite(self):
        return self.p is not None

    def __call__(self, value):
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else -a % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def elements(self):
        if self.p is None:
            raise ValueError("Q is infinite")
        return range(self.p)

    def random(self, rng, bound=5):
        """Uniform element of F_p, or an integer in [-bound, bound] for Q."""
        if self.p is None:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)

    def signed(self, a):
        """Representative used for printing (symmetric for F_p)."""
        if self.p is None:
            return a
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def tag(self):
        return "q" if self.p is None else f"p={self.p}"


QQ = Field()


def GF(p):
    return Field(p)


def field_from_tag(tag):
    """Parse the ``q`` / ``p=NNN`` notation used on the command line."""
    tag = tag.strip().lower()
    if tag in ("q", "qq"):
        return QQ
    if tag.startswith("p="):
        return Field(int(tag[2:]))
    if tag.startswith("f") and tag[1:].isdigit():
        return Field(int(tag[1:]))
    raise ValueError(f"unknown field {tag!r}; use 'q' or 'p=NNN'")
