"""Standard bases in k[[x, y]] under the local degree order.

The leading term ideal of an m-primary ideal J is computed by linear
algebra in R/m^D: the image of J there is the span of all x^a y^b g, which
we row-reduce with the local-order-greatest monomial as pivot. If every
monomial outside the pivot set has degree <= D - 2, then m^(D-1) lies in
J + m^D, hence in J (Nakayama), and the pivot set is exactly Lt(J) below
degree D. Otherwise D is doubled.
"""

from collections import deque
from dataclasses import dataclass, field as dc_field
import itertools

from .field import QQ
from .parse import parse_poly
from .poly import LEX, LOCAL, Poly, divides
from .staircase import Staircase, staircase_from_generators

MAX_DEGREE = 64


class NotMPrimaryError(ValueError):
    pass


@dataclass(frozen=True)
class IdealPresentation:
    """Generators of an ideal of R, each valid modulo m^cap.

    ``known_lt`` may be set when the generators are known to be a standard
    basis with leading terms ``x^(t-i) y^m_i`` (in that order), e.g. the
    signed maximal minors of H + N for N in the admissible family.
    """

    gens: tuple
    field: object = QQ
    cap: int = None
    known_lt: Staircase = None

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g)
        if not gens:
            raise ValueError("the zero ideal is not m-primary")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_text(cls, text, field=QQ, cap=None):
        from .parse import parse_poly_list
        return cls(tuple(parse_poly_list(text, field, cap)), field, cap)

    @classmethod
    def monomial(cls, E, field=QQ):
        return cls(tuple(E.monomial_polys(field)), field, None, E)

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"


@dataclass(frozen=True)
class StandardBasis:
    """Monic elements f_0..f_t with Lt(f_i) = x^(t-i) y^m_i."""

    E: Staircase
    elements: tuple
    reduced: bool = False

    @property
    def field(self):
        return self.elements[0].field

    def fingerprint(self):
        return tuple(tuple(sorted(f.terms.items())) for f in self.elements)

    def ideal(self):
        return IdealPresentation(self.elements, self.field, None, self.E)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass
class DivisionResult:
    quotients: list
    remainder: Poly


@dataclass
class Echelon:
    """Reduced echelon certificate of the image of J in R/m^D."""

    D: int
    field: object
    staircase: Staircase
    rows: dict = dc_field(repr=False)     # pivot monomial -> reduced Poly

    def to_json(self):
        from .parse import format_poly
        return {"D": self.D, "field": self.field.tag,
                "staircase": self.staircase.to_json(),
                "pivots": {f"{a},{b}": format_poly(f) for (a, b), f in sorted(self.rows.items())}}


# Macaulay elimination

def _monomials_below(D):
    # local-order descending: degree ascending, then x-exponent descending
    return [(a, d - a) for d in range(D) for a in range(d, -1, -1)]


def _reduce_lead(row, pivots, p):
    while row:
        k = min(row)
        prow = pivots.get(k)
        if prow is None:
            return k
        c = row[k]
        for kk, v in prow:
            nv = row.get(kk, 0) - c * v
            if p is not None:
                nv %= p
            if nv:
                row[kk] = nv
            else:
                row.pop(kk, None)
    return None


def _eliminate(gens, D, field):
    """Pivot rows (index -> sorted items) spanning the image of (gens) in R/m^D."""
    monos = _monomials_below(D)
    index = {m: i for i, m in enumerate(monos)}
    mulx = [index.get((a + 1, b), -1) for a, b in monos]
    muly = [index.get((a, b + 1), -1) for a, b in monos]
    p = field.p
    pivots = {}
    queue = deque()
    for g in gens:
        row = {index[m]: c for m, c in g.terms.items() if m[0] + m[1] < D}
        if row:
            queue.append(row)
    while queue:
        row = queue.popleft()
        lead = _reduce_lead(row, pivots, p)
        if lead is None:
            continue
        inv = field.inv(row[lead])
        if p is None:
            items = sorted((k, v * inv) for k, v in row.items())
        else:
            items = sorted((k, v * inv % p) for k, v in row.items())
        pivots[lead] = items
        for table in (mulx, muly):
            shifted = {table[k]: v for k, v in items if table[k] >= 0}
            if shifted:
                queue.append(shifted)
    return monos, pivots


def _back_substitute(pivots, p):
    """Fully reduce every pivot row against the others."""
    done = {}
    for lead in sorted(pivots, reverse=True):
        row = dict(pivots[lead])
        for k in [k for k, _ in pivots[lead] if k != lead and k in done]:
            c = row.get(k)
            if not c:
                continue
            for kk, v in done[k]:
                nv = row.get(kk, 0) - c * v
                if p is not None:
                    nv %= p
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
        done[lead] = sorted(row.items())
    return done


def _initial_degree(J, hint):
    if hint is not None:
        D = hint.socle_degree + 2
    else:
        D = max(g.degree() for g in J.gens) + 2
    if J.cap is not None:
        D = min(D, J.cap)
    return max(D, 2)


def echelon(J, hint=None, start_degree=None):
    """Echelon certificate for Lt(J); raises ``NotMPrimaryError`` past the limit."""
    if any(g.order() == 0 for g in J.gens):
        raise NotMPrimaryError("unit ideal: a generator has a nonzero constant term")
    D = start_degree if start_degree is not None else _initial_degree(J, hint)
    field = J.field
    while True:
        monos, pivots = _eliminate(J.gens, D, field)
        outside = [monos[i] for i in range(len(monos)) if i not in pivots]
        if all(a + b <= D - 2 for a, b in outside):
            break
        if J.cap is not None and D >= J.cap:
            raise NotMPrimaryError(
                f"cannot certify Lt within the generators' cap {J.cap}")
        D *= 2
        if J.cap is not None:
            D = min(D, J.cap)
        if D > MAX_DEGREE:
            raise NotMPrimaryError(f"ideal not m-primary within degree {MAX_DEGREE}")
    lead_monos = [monos[i] for i in pivots]
    E = staircase_from_generators(lead_monos)
    reduced = _back_substitute(pivots, field.p)
    rows = {}
    for i, items in reduced.items():
        rows[monos[i]] = Poly._raw({monos[k]: v for k, v in items}, field, None)
    return Echelon(D, field, E, rows)


def lt_ideal_local(J, hint=None, start_degree=None):
    """Lt(J) under the local degree order, as a staircase."""
    if J.known_lt is not None:
        return J.known_lt
    return echelon(J, hint, start_degree).staircase


# division

def _pick_divisor(mono, leads):
    best = None
    for i, lm in enumerate(leads):
        if divides(lm, mono):
            if best is None or LOCAL.key(lm) > LOCAL.key(leads[best]):
                best = i
    return best


def grauert_divide(f, basis, cap=None):
    """Division with remainder under the local order, computed in R/m^cap.

    Always reduces against the local-order-greatest dividing leading term
    (ties to the least index).
    """
    elements = list(basis)
    F = f.field
    if cap is None:
        cap = f.cap
        for g in elements:
            if g.cap is not None:
                cap = g.cap if cap is None else min(cap, g.cap)
    if cap is None:
        raise ValueError("a finite cap is needed for division in R")
    leads, lcs = [], []
    for g in elements:
        m, c = g.leading_term(LOCAL)
        leads.append(m)
        lcs.append(c)
    h = f.with_cap(cap)
    quotients = [dict() for _ in elements]
    remainder = {}
    while h:
        m, c = h.leading_term(LOCAL)
        i = _pick_divisor(m, leads)
        if i is None:
            remainder[m] = c
            h = h - Poly._raw({m: c}, F, cap)
            continue
        q = F.div(c, lcs[i])
        a, b = m[0] - leads[i][0], m[1] - leads[i][1]
        quotients[i][(a, b)] = F.add(quotients[i].get((a, b), F.zero), q)
        h = h - elements[i].with_cap(cap).shift(a, b, q)
    return DivisionResult([Poly(q, F, cap) for q in quotients], Poly(remainder, F, cap))


def y_divide(f, basis, cap):
    """Quotients q_i in k[[y]] with f = sum q_i f_i modulo m^cap.

    Repeatedly cancels the leading term x^s y^r of the current element with
    y^(r - m_(t-s)) f_(t-s); only y-multipliers are ever used.
    """
    E = basis.E
    t, m = E.t, E.m
    F = f.field
    if any(a > t for a, _ in f.terms):
        raise ValueError("y_divide needs no monomial divisible by x^(t+1)")
    elements = [g.with_cap(cap) for g in basis]
    for i, g in enumerate(elements):
        if g.leading_term(LOCAL)[0] != (t - i, m[i]):
            raise ValueError("basis leading terms are not the staircase generators")
    lcs = [g.leading_term(LOCAL)[1] for g in elements]
    q = [dict() for _ in elements]
    g = f.with_cap(cap)
    while g:
        (s, r), c = g.leading_term(LOCAL)
        i = t - s
        if i < 0 or m[i] > r:
            raise ValueError(f"x^{s}y^{r} is not divisible by any leading term: "
                             "element not in the ideal within the cap")
        e = r - m[i]
        c = F.div(c, lcs[i])
        q[i][e] = F.add(q[i].get(e, F.zero), c)
        g = g - elements[i].shift(0, e, c)
    return [Poly.from_y(qi, F, cap) for qi in q]


# reduced standard bases

def _interreduce(elements, E, field):
    cap = E.socle_degree + 2
    basis = [g.with_cap(cap).monic(LOCAL) for g in elements]
    out = []
    for i, g in enumerate(basis):
        lead = Poly.monomial(E.t - i, E.m[i], 1, field, cap)
        tail = g - lead
        rem = grauert_divide(tail, basis, cap).remainder if tail else tail
        out.append((lead + rem).with_cap(None))
    return out


def reduced_standard_basis(J, hint=None):
    """The unique reduced standard basis of J, one element per staircase generator.

    Each element is ``x^(t-i) y^m_i`` plus a tail of monomials outside Lt(J);
    in particular no tail monomial is divisible by x^t.
    """
    if J.known_lt is not None:
        E = J.known_lt
        return StandardBasis(E, tuple(_interreduce(J.gens, E, J.field)), True)
    ech = echelon(J, hint)
    E = ech.staircase
    return StandardBasis(E, tuple(ech.rows[mono] for mono in E.generators()), True)


def standard_basis(E, polys):
    """Wrap given polynomials as a standard basis for E after checking leads."""
    polys = [p.monic(LOCAL) for p in polys]
    leads = [p.leading_term(LOCAL)[0] for p in polys]
    if leads != E.generators():
        raise ValueError(f"leading terms {leads} are not the generators of {E}")
    return StandardBasis(E, tuple(polys), False)


def verify_standard_basis(F, matrix=None):
    """Whether the leading terms of F generate Lt((F)).

    When ``matrix`` is given and F are its signed maximal minors, the matrix
    criterion is used: if the columns are liftings of the canonical columns
    and the leading terms contain pure powers of x and y, F is a standard
    basis without any elimination.
    """
    leads = [f.leading_term(LOCAL)[0] for f in F]
    if len(set(leads)) != len(leads):
        raise ValueError("duplicate leading terms")
    try:
        E = staircase_from_generators(leads)
    except ValueError:
        return False
    if matrix is not None and leads == E.generators():
        if all(is_lifting(E, j, [row[j - 1] for row in matrix]) for j in range(1, E.t + 1)):
            return True
    field = F[0].field
    cap = None
    for f in F:
        if f.cap is not None:
            cap = f.cap if cap is None else min(cap, f.cap)
    return lt_ideal_local(IdealPresentation(tuple(F), field, cap), hint=E) == E


def is_lifting(E, j, v):
    """Whether column ``v`` lifts the j-th column of the canonical matrix of E."""
    t, m = E.t, E.m
    if not 1 <= j <= t:
        raise IndexError(f"column index {j} out of range 1..{t}")
    if len(v) != t + 1:
        raise ValueError("column must have t+1 entries")
    field = next((e.field for e in v if isinstance(e, Poly)), QQ)
    H = E.canonical_H(field)
    target = LOCAL.key((t - j + 1, m[j]))
    for i in range(1, t + 2):
        n = v[i - 1] - H[i - 1][j - 1]
        if not n:
            continue
        a, b = n.leading_term(LOCAL)[0]
        prod = (a + t - i + 1, b + m[i - 1])
        if not LOCAL.key(prod) < target:
            return False
    return True


# membership and equality

def contains(J, f, basis=None):
    """Whether f lies in the m-primary ideal J."""
    sb = basis if basis is not None else reduced_standard_basis(J)
    cap = sb.E.socle_degree + 2
    return not grauert_divide(f.with_cap(cap), sb, cap).remainder


def contains_ideal(J, K):
    """Whether K is contained in J."""
    sb = reduced_standard_basis(J)
    return all(contains(J, g, sb) for g in K.gens)


def ideals_equal(J, K):
    sb_j = reduced_standard_basis(J)
    sb_k = reduced_standard_basis(K)
    return sb_j.E == sb_k.E and sb_j.fingerprint() == sb_k.fingerprint()


def minimal_number_of_generators(J):
    """dim J / mJ, from the colengths of J and mJ."""
    sb = reduced_standard_basis(J)
    F = sb.field
    prods = []
    for f in sb:
        prods.append(f.shift(1, 0))
        prods.append(f.shift(0, 1))
    mJ = IdealPresentation(tuple(prods), F)
    return lt_ideal_local(mJ).colength - sb.E.colength


# global lex Groebner bases

def _lex_normal_form(f, G):
    leads = [g.leading_term(LEX) for g in G]
    F = f.field
    h = f
    rem = {}
    while h:
        m, c = h.leading_term(LEX)
        for g, (lm, lc) in zip(G, leads):
            if divides(lm, m):
                h = h - g.shift(m[0] - lm[0], m[1] - lm[1], F.div(c, lc))
                break
        else:
            rem[m] = c
            h = h - Poly._raw({m: c}, F, None)
    return Poly(rem, F, None)


def _s_poly(f, g):
    (fa, fb), fc = f.leading_term(LEX)
    (ga, gb), gc = g.leading_term(LEX)
    la, lb = max(fa, ga), max(fb, gb)
    F = f.field
    return f.shift(la - fa, lb - fb, F.inv(fc)) - g.shift(la - ga, lb - gb, F.inv(gc))


def buchberger_lex(gens):
    """Reduced lex Groebner basis (x > y) of the polynomial ideal (gens)."""
    G = [g.with_cap(None).monic(LEX) for g in gens if g]
    if not G:
        raise ValueError("zero ideal")
    pairs = deque(itertools.combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.popleft()
        li, lj = G[i].leading_term(LEX)[0], G[j].leading_term(LEX)[0]
        if min(li[0], lj[0]) == 0 and min(li[1], lj[1]) == 0:
            continue    # coprime leading terms
        r = _lex_normal_form(_s_poly(G[i], G[j]), G)
        if r:
            G.append(r.monic(LEX))
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimalize, then reduce
    G.sort(key=lambda g: LEX.key(g.leading_term(LEX)[0]))
    minimal = []
    for g in G:
        lm = g.leading_term(LEX)[0]
        if not any(divides(h.leading_term(LEX)[0], lm) for h in minimal):
            minimal = [h for h in minimal if not divides(lm, h.leading_term(LEX)[0])]
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lead = Poly._raw({g.leading_term(LEX)[0]: g.field.one}, g.field, None)
        reduced.append(lead + _lex_normal_form(g - lead, others))
    reduced.sort(key=lambda g: LEX.key(g.leading_term(LEX)[0]), reverse=True)
    return reduced


def lt_ideal_lex(gens):
    """Lt_lex of a zero-dimensional polynomial ideal, as a staircase."""
    G = buchberger_lex(gens)
    leads = [g.leading_term(LEX)[0] for g in G]
    try:
        return staircase_from_generators(leads)
    except ValueError as exc:
        raise ValueError(f"not zero-dimensional at the origin: {exc}") from None


def contract_to_poly_ring(J, hint=None):
    """Generators of J ∩ P: the given generators plus all monomials of degree s+1."""
    s = lt_ideal_local(J, hint).socle_degree
    if J.cap is not None and J.cap < s + 1:
        raise ValueError("generators are not determined to degree s+1")
    out = [g.with_cap(None) for g in J.gens]
    out += [Poly.monomial(a, s + 1 - a, 1, J.field) for a in range(s + 2)]
    return out


def ideal(text, field=QQ, cap=None):
    """Shorthand: ``ideal("x^2; y^3 - x")``."""
    return IdealPresentation.from_text(text, field, cap)


__all__ = [
    "IdealPresentation", "StandardBasis", "DivisionResult", "Echelon",
    "echelon", "lt_ideal_local", "grauert_divide", "y_divide",
    "reduced_standard_basis", "standard_basis", "verify_standard_basis", "is_lifting",
    "contains", "contains_ideal", "ideals_equal", "minimal_number_of_generators",
    "buchberger_lex", "lt_ideal_lex", "contract_to_poly_ring", "ideal",
    "NotMPrimaryError", "parse_poly",
]
