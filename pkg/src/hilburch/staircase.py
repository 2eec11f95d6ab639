"""Zero-dimensional monomial ideals of k[[x, y]] stored as staircases.

A staircase ``(t; m_0, ..., m_t)`` is the ideal
``(x^t, x^(t-1) y^m_1, ..., y^m_t)`` with ``0 = m_0 < m_1 <= ... <= m_t``.
"""

from dataclasses import dataclass
from functools import cached_property
import json

from .field import QQ
from .poly import Poly


@dataclass(frozen=True)
class Flags:
    lex_segment: bool
    lex_compatible: bool
    gorenstein_admissible: bool


@dataclass(frozen=True)
class Staircase:
    t: int
    m: tuple

    def __post_init__(self):
        m = tuple(int(v) for v in self.m)
        object.__setattr__(self, "m", m)
        if self.t < 1 or len(m) != self.t + 1:
            raise ValueError(f"need t >= 1 and t+1 exponents, got t={self.t}, m={m}")
        if m[0] != 0:
            raise ValueError("m_0 must be 0")
        if m[1] < 1:
            raise ValueError("m_1 must be >= 1 (t is minimal)")
        if any(m[i] > m[i + 1] for i in range(self.t)):
            raise ValueError(f"m must be nondecreasing, got {m}")

    @classmethod
    def from_m(cls, m):
        m = tuple(m)
        return cls(len(m) - 1, m)

    def __str__(self):
        return f"t={self.t}; m={','.join(map(str, self.m))}"

    # derived numbers

    @cached_property
    def d(self):
        """``d[j-1] = m_j - m_(j-1)`` for j = 1..t."""
        return tuple(self.m[j] - self.m[j - 1] for j in range(1, self.t + 1))

    def dj(self, j):
        return self.m[j] - self.m[j - 1]

    @property
    def colength(self):
        return sum(self.m)

    @cached_property
    def socle_degree(self):
        t, m = self.t, self.m
        return max(a + m[t - a] - 1 for a in range(t))

    def generators(self):
        """Staircase generators ``x^(t-i) y^m_i`` as monomials, i = 0..t."""
        return [(self.t - i, self.m[i]) for i in range(self.t + 1)]

    def minimal_generators(self):
        t, m = self.t, self.m
        return [(t - i, m[i]) for i in range(t + 1) if i == t or m[i] < m[i + 1]]

    def contains(self, mono):
        a, b = mono
        return a >= self.t or b >= self.m[self.t - a]

    def outside(self):
        """Monomials not in the ideal (a basis of R/E)."""
        return [(a, b) for a in range(self.t) for b in range(self.m[self.t - a])]

    @cached_property
    def hilbert_function(self):
        h = [0] * (self.socle_degree + 1)
        for a, b in self.outside():
            h[a + b] += 1
        return tuple(h)

    def u(self, i, j):
        """Degree matrix entry ``u_{i,j}`` (1-based, 1 <= i <= t+1, 1 <= j <= t)."""
        return self.m[j] - self.m[i - 1] + i - j

    def v(self, i, j):
        return max(self.u(i, j), 0)

    def degree_matrix(self):
        return [[self.u(i, j) for j in range(1, self.t + 1)] for i in range(1, self.t + 2)]

    # predicates

    def is_lex_segment(self):
        return all(self.m[i] < self.m[i + 1] for i in range(self.t))

    def lex_compatibility_witness(self):
        """The pair (i, j), j < i, maximizing ``(m_j - j - 1) - (m_i - i) > 0``.

        Returns None when the staircase is lex-compatible.
        """
        m = self.m
        best, witness = 0, None
        for i in range(1, self.t + 1):
            for j in range(1, i):
                gap = (m[j] - j - 1) - (m[i] - i)
                if gap > best:
                    best, witness = gap, (i, j)
        return witness

    def is_lex_compatible(self):
        return self.lex_compatibility_witness() is None

    def is_gorenstein_admissible(self):
        return all(self.u(i, i - 2) <= 0 for i in range(3, self.t + 2))

    def classify(self):
        return Flags(self.is_lex_segment(), self.is_lex_compatible(),
                     self.is_gorenstein_admissible())

    # matrices

    def canonical_H(self, field=QQ, cap=None):
        """The (t+1) x t matrix with y^d_i on the diagonal and -x below it."""
        t = self.t
        H = [[Poly.zero(field, cap) for _ in range(t)] for _ in range(t + 1)]
        for j in range(t):
            H[j][j] = Poly.monomial(0, self.d[j], 1, field, cap)
            H[j + 1][j] = Poly.monomial(1, 0, -1, field, cap)
        return H

    def monomial_polys(self, field=QQ, cap=None):
        return [Poly.monomial(a, b, 1, field, cap) for a, b in self.generators()]

    def to_json(self):
        return {"t": self.t, "m": list(self.m)}

    def to_generators_text(self):
        from .parse import format_poly
        return ",".join(format_poly(Poly.monomial(a, b)) for a, b in self.minimal_generators())


def staircase_from_generators(gens):
    """Normal form of the monomial ideal generated by ``gens`` (monomials)."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("no generators")
    if (0, 0) in gens:
        raise ValueError("unit ideal")
    xs = [a for a, b in gens if b == 0]
    ys = [b for a, b in gens if a == 0]
    if not xs or not ys:
        raise ValueError("not zero-dimensional: need pure powers of x and of y")
    t = min(xs)
    m = [0]
    for i in range(1, t + 1):
        a = t - i
        m.append(min(b for ga, b in gens if ga <= a))
    return Staircase(t, tuple(m))


def degree_matrix(E):
    return E.degree_matrix()


def canonical_H(E, field=QQ, cap=None):
    return E.canonical_H(field, cap)


def numerics(E):
    """Hilbert function, colength and socle degree of R/E."""
    return E.hilbert_function, E.colength, E.socle_degree


def classify(E):
    return E.classify()


def lex_segment_of(h):
    """The lex-segment staircase L with Hilbert function ``h``."""
    h = tuple(int(v) for v in h)
    if not h or h[0] != 1 or any(v <= 0 for v in h):
        raise ValueError(f"inadmissible Hilbert function {h}")
    # in degree i the complement of L is x^a y^(i-a) for a < h(i)
    cols = {}
    for i, hi in enumerate(h):
        if hi > i + 1:
            raise ValueError(f"inadmissible Hilbert function {h}: h({i}) > {i + 1}")
        for a in range(hi):
            cols.setdefault(a, set()).add(i - a)
    t = len(cols)
    m = [0] * (t + 1)
    for a in range(t):
        bs = cols.get(a)
        if not bs or bs != set(range(len(bs))):
            raise ValueError(f"inadmissible Hilbert function {h}")
        m[t - a] = len(bs)
    try:
        L = Staircase(t, tuple(m))
    except ValueError:
        raise ValueError(f"inadmissible Hilbert function {h}") from None
    if L.hilbert_function != h or not L.is_lex_segment():
        raise ValueError(f"inadmissible Hilbert function {h}")
    return L


def _partitions(d, t, smallest):
    # nondecreasing sequences of t positive parts >= smallest summing to d
    if t == 0:
        if d == 0:
            yield ()
        return
    for first in range(smallest, d // t + 1):
        for rest in _partitions(d - first, t - 1, first):
            yield (first,) + rest


def enumerate_staircases(d):
    """All staircases of colength ``d``, ordered lexicographically by (t, m)."""
    if d < 1:
        raise ValueError("colength must be >= 1")
    out = []
    for t in range(1, d + 1):
        for parts in _partitions(d, t, 1):
            out.append(Staircase(t, (0,) + parts))
    return out


def parse_staircase(text):
    """Accept ``0,1,3,5``, ``t=3; m=0,1,3,5``, a generator list or JSON."""
    from .parse import parse_poly

    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return Staircase(int(data["t"]), tuple(data["m"]))
    if "m=" in text:
        part = text.split("m=", 1)[1]
        return Staircase.from_m(int(v) for v in part.replace(";", ",").split(",") if v.strip())
    if "x" in text or "y" in text:
        sep = ";" if ";" in text else ","
        monos = []
        for piece in text.split(sep):
            f = parse_poly(piece)
            if len(f.terms) != 1:
                raise ValueError(f"not a monomial: {piece!r}")
            monos.append(next(iter(f.terms)))
        return staircase_from_generators(monos)
    return Staircase.from_m(int(v) for v in text.split(","))
