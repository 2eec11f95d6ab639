"""Deformations H + N of the canonical Hilbert-Burch matrix.

Indices follow the matrix convention: rows i = 1..t+1, columns j = 1..t.
Entries of N are polynomials (or truncated series) in y alone.
"""

from dataclasses import dataclass
import itertools

from .field import QQ
from .localstd import IdealPresentation
from .parse import format_poly, parse_poly
from .poly import LOCAL, Poly


@dataclass(frozen=True)
class FamilyFlags:
    in_N: bool
    in_N_le_s: bool
    in_T0: bool
    in_M: bool
    in_N_lt_d: bool


@dataclass(frozen=True, eq=False)
class Deformation:
    E: object
    entries: tuple
    field: object = QQ
    cap: int = None

    def __post_init__(self):
        t = self.E.t
        rows = tuple(tuple(self._coerce(v) for v in row) for row in self.entries)
        if len(rows) != t + 1 or any(len(r) != t for r in rows):
            raise ValueError(f"deformation of {self.E} must be {t + 1}x{t}")
        for row in rows:
            for v in row:
                if not v.is_y_only():
                    raise ValueError(f"entry {v} is not a series in y")
        object.__setattr__(self, "entries", rows)

    def _coerce(self, v):
        if isinstance(v, Poly):
            if v.field != self.field:
                raise ValueError("field mismatch")
            return v if v.cap == self.cap else v.with_cap(self.cap)
        if isinstance(v, str):
            return parse_poly(v, self.field, self.cap)
        return Poly.const(v, self.field, self.cap)

    @classmethod
    def zero(cls, E, field=QQ, cap=None):
        z = Poly.zero(field, cap)
        return cls(E, tuple((z,) * E.t for _ in range(E.t + 1)), field, cap)

    @classmethod
    def from_dict(cls, E, values, field=QQ, cap=None):
        """Build from ``{(i, j): entry}`` with 1-based indices."""
        rows = [[Poly.zero(field, cap) for _ in range(E.t)] for _ in range(E.t + 1)]
        for (i, j), v in values.items():
            if not (1 <= i <= E.t + 1 and 1 <= j <= E.t):
                raise IndexError(f"entry ({i},{j}) out of range")
            rows[i - 1][j - 1] = v if isinstance(v, Poly) else (
                parse_poly(v, field, cap) if isinstance(v, str) else Poly.const(v, field, cap))
        return cls(E, tuple(map(tuple, rows)), field, cap)

    def __eq__(self, other):
        return (isinstance(other, Deformation) and self.E == other.E
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.E, self.entries))

    def entry(self, i, j):
        return self.entries[i - 1][j - 1]

    def nonzero(self):
        """``{(i, j): entry}`` for the nonzero entries."""
        return {(i + 1, j + 1): v for i, row in enumerate(self.entries)
                for j, v in enumerate(row) if v}

    def with_cap(self, cap):
        return Deformation(self.E, tuple(tuple(v.with_cap(cap) for v in row) for row in self.entries),
                           self.field, cap)

    def truncate(self, D):
        return Deformation(self.E, tuple(tuple(v.truncate(D) for v in row) for row in self.entries),
                           self.field, self.cap)

    def matrix(self, cap="same"):
        """The matrix H + N."""
        cap = self.cap if cap == "same" else cap
        H = self.E.canonical_H(self.field, cap)
        return [[H[i][j] + self.entries[i][j].with_cap(cap) for j in range(self.E.t)]
                for i in range(self.E.t + 1)]

    def is_strictly_lower(self):
        return all(i > j for (i, j) in self.nonzero())

    def to_json(self):
        return {"staircase": self.E.to_json(),
                "entries": [[format_poly(v) for v in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data, field=QQ, cap=None):
        from .staircase import Staircase
        st = data["staircase"]
        E = Staircase(int(st["t"]), tuple(st["m"]))
        rows = tuple(tuple(parse_poly(s, field, cap) for s in row) for row in data["entries"])
        return cls(E, rows, field, cap)

    def __str__(self):
        from .serialize import render_matrix
        return render_matrix(self.matrix())


# families

def _ord_bound(E, i, j):
    u = E.u(i, j)
    return u + 1 if i <= j else u


def classify_deformation(E, N):
    if N.E != E:
        raise ValueError(f"deformation shape is for {N.E}, not {E}")
    s = E.socle_degree
    in_N = in_T0 = le_s = lt_d = True
    for (i, j), v in N.nonzero().items():
        lo, hi = v.order(), v.degree()
        if lo < _ord_bound(E, i, j):
            in_N = False
        if hi > s:
            le_s = False
        if i < j or hi >= E.dj(j):
            in_T0 = False
        if hi >= (E.dj(i) if i <= j else E.dj(j)):
            lt_d = False
    return FamilyFlags(in_N, in_N and le_s, in_T0, in_N and in_T0, in_N and lt_d)


def in_family_N(E, N):
    return classify_deformation(E, N).in_N


# coefficient templates: lists of slots (i, j, k) meaning the coefficient of y^k in n_{i,j}

def _column_major(slots):
    return sorted(slots, key=lambda s: (s[1], s[0], s[2]))


def m_template(E):
    """Slots of the canonical family: i > j and v_{i,j} <= k < d_j."""
    t = E.t
    return _column_major((i, j, k) for j in range(1, t + 1) for i in range(j + 1, t + 2)
                         for k in range(E.v(i, j), E.dj(j)))


def lt_d_template(E):
    """Slots of the family with deg n_{i,j} < d_i (i <= j), < d_j (i > j)."""
    t = E.t
    out = []
    for j in range(1, t + 1):
        for i in range(1, t + 2):
            lo = max(_ord_bound(E, i, j), 0)
            hi = E.dj(i) if i <= j else E.dj(j)
            out.extend((i, j, k) for k in range(lo, hi))
    return _column_major(out)


def forced_empty_slots(E):
    """Positions (i, j), i <= j, whose degree bound d_i leaves no room above the order bound."""
    t = E.t
    return [(i, j) for j in range(1, t + 1) for i in range(1, j + 1)
            if E.dj(i) > 0 and max(E.u(i, j) + 1, 0) >= E.dj(i)]


def le_s_template(E):
    """Slots of N(E) truncated at the socle degree."""
    s, t = E.socle_degree, E.t
    return _column_major((i, j, k) for j in range(1, t + 1) for i in range(1, t + 2)
                         for k in range(max(_ord_bound(E, i, j), 0), s + 1))


def deformation_from_slots(E, slots, values, field=QQ, cap=None):
    cells = {}
    for (i, j, k), c in zip(slots, values):
        if c:
            cells.setdefault((i, j), {})[k] = c
    return Deformation.from_dict(E, {ij: Poly.from_y(co, field, cap) for ij, co in cells.items()},
                                 field, cap)


# cell points

@dataclass(frozen=True)
class CellPoint:
    """Coordinates of a matrix in the canonical family, ordered by column, row, then power of y."""

    E: object
    coords: tuple
    field: object = QQ

    def __post_init__(self):
        if not self.E.is_lex_compatible():
            raise ValueError(f"{self.E} is not lex-compatible; no affine chart")
        coords = tuple(self.field(c) for c in self.coords)
        if len(coords) != len(m_template(self.E)):
            raise ValueError(f"expected {len(m_template(self.E))} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    def slots(self):
        return m_template(self.E)

    def as_dict(self):
        return dict(zip(self.slots(), self.coords))

    def to_json(self):
        return [str(self.field.signed(c)) for c in self.coords]

    def __str__(self):
        return "(" + ",".join(str(self.field.signed(c)) for c in self.coords) + ")"


def encode_cellpoint(E, N):
    if not E.is_lex_compatible():
        raise ValueError(f"{E} is not lex-compatible")
    if not classify_deformation(E, N).in_M:
        raise ValueError("deformation is not in the canonical family")
    slots = m_template(E)
    return CellPoint(E, tuple(N.entry(i, j).coeff(0, k) for i, j, k in slots), N.field)


def decode_cellpoint(p, cap=None):
    return deformation_from_slots(p.E, p.slots(), p.coords, p.field, cap)


def origin(E, field=QQ):
    return CellPoint(E, (0,) * len(m_template(E)), field)


def all_cellpoints(E, field):
    n = len(m_template(E))
    for values in itertools.product(field.elements(), repeat=n):
        yield CellPoint(E, values, field)


def random_cellpoint(E, field, rng, bound=5):
    n = len(m_template(E))
    return CellPoint(E, tuple(field.random(rng, bound) for _ in range(n)), field)


# minors

def _all_minors(M, cap):
    """Determinants of M with row r deleted, r = 0..t, by Laplace along columns."""
    rows = len(M)
    t = rows - 1
    field = next(v.field for row in M for v in row)
    memo = {}
    one = Poly.const(1, field, cap)

    def det(col, mask):
        # rows in mask, columns col..t-1
        if col == t:
            return one
        key = (col, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = Poly.zero(field, cap)
        sign = 1
        for r in range(rows):
            if not mask >> r & 1:
                continue
            entry = M[r][col]
            if entry:
                sub = det(col + 1, mask & ~(1 << r))
                if sub:
                    term = entry.mul(sub, cap)
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    full = (1 << rows) - 1
    return [det(0, full & ~(1 << r)) for r in range(rows)]


def signed_minors(E, N, cap="same"):
    """f_i = (-1)^(t-i) det of H+N without row i+1, computed in R/m^cap."""
    cap = N.cap if cap == "same" else cap
    M = N.matrix(cap)
    dets = _all_minors(M, cap)
    t = E.t
    return [d if (t - i) % 2 == 0 else -d for i, d in enumerate(dets)]


def phi(E, N, check=True):
    """The ideal of maximal minors of H + N, carried modulo m^(s+2)."""
    if check and not classify_deformation(E, N).in_N:
        raise ValueError("deformation violates the order bounds of N(E)")
    cap = E.socle_degree + 2
    f = signed_minors(E, N.with_cap(cap), cap)
    return IdealPresentation(tuple(f), N.field, cap, E)


def minors_leading_terms(f):
    return [g.leading_term(LOCAL) for g in f]


__all__ = [
    "FamilyFlags", "Deformation", "CellPoint", "classify_deformation", "in_family_N",
    "m_template", "lt_d_template", "le_s_template", "forced_empty_slots",
    "deformation_from_slots", "encode_cellpoint", "decode_cellpoint", "origin",
    "all_cellpoints", "random_cellpoint", "signed_minors", "phi", "minors_leading_terms",
]
