"""Groebner cells V(E): membership, the inverse of the minors map, dimensions
and the finite-field probes."""

from dataclasses import dataclass
import itertools
import random

from .field import QQ
from .hbm import (CellPoint, Deformation, classify_deformation, deformation_from_slots,
                  encode_cellpoint, lt_d_template, le_s_template, m_template, phi,
                  forced_empty_slots)
from .localstd import (IdealPresentation, StandardBasis, echelon, lt_ideal_lex,
                       lt_ideal_local, reduced_standard_basis, y_divide, contract_to_poly_ring)
from .poly import LEX, LOCAL, Poly
from .staircase import lex_segment_of


@dataclass(frozen=True)
class CellReport:
    E: object
    dimension: int
    flags: object
    template_size: int
    note: str = ""

    def to_json(self):
        return {"staircase": self.E.to_json(), "dimension": self.dimension,
                "template_size": self.template_size,
                "flags": {"lex_segment": self.flags.lex_segment,
                          "lex_compatible": self.flags.lex_compatible,
                          "gorenstein_admissible": self.flags.gorenstein_admissible},
                "note": self.note}


def membership(J, E):
    """Whether Lt(J) = E."""
    return lt_ideal_local(J, hint=E) == E


# from an ideal to a deformation

def _as_basis(J):
    return J if isinstance(J, StandardBasis) else reduced_standard_basis(J)


def syzygy_deformation(J, cap=None):
    """A matrix N in N(E) with I_t(H + N) = J, read off the S-polynomials.

    ``J`` is an ideal or a standard basis; an ideal is replaced by its
    reduced standard basis. Entries are series in y, exact below degree s+2.
    """
    sb = _as_basis(J)
    E = sb.E
    t, s = E.t, E.socle_degree
    F = sb.field
    lead_deg = max(a + b for a, b in E.generators())
    out_cap = s + 2
    work = cap if cap is not None else out_cap + lead_deg
    f = [g.with_cap(work) for g in sb]
    cols = []
    for j in range(1, t + 1):
        S = f[j - 1].shift(0, E.dj(j)) - f[j].shift(1, 0)
        cols.append(y_divide(S, StandardBasis(E, tuple(f), sb.reduced), work))
    rows = tuple(tuple(-cols[j][i].with_cap(out_cap) for j in range(t)) for i in range(t + 1))
    return Deformation(E, rows, F, out_cap)


def truncate_deformation(E, N, degree=None):
    """Drop every term of degree above ``degree`` (default: the socle degree)."""
    return N.truncate(E.socle_degree if degree is None else degree)


def _split(n, d):
    low = {b: c for (_, b), c in n.terms.items() if b < d}
    high = {b - d: c for (_, b), c in n.terms.items() if b >= d}
    return Poly.from_y(low, n.field, n.cap), Poly.from_y(high, n.field, n.cap)


def _from_matrix(E, M, field, cap):
    H = E.canonical_H(field, cap)
    rows = []
    for i in range(E.t + 1):
        row = []
        for j in range(E.t):
            v = M[i][j] - H[i][j]
            if not v.is_y_only():
                raise ArithmeticError("reduction move left an x-term; preconditions violated")
            row.append(v)
        rows.append(tuple(row))
    return Deformation(E, tuple(rows), field, cap)


def reduction_move(E, N, i, j):
    """One (i, j) reduction move; returns N unchanged when the entry is already small.

    Below the diagonal (i > j) write n_{i,j} = r + y^(d_j) q, add -q times
    row j to row i and then q times column i-1 to column j-1. Above it
    (i < j) write n_{i,j} = r + y^(d_i) q, add -q times column i to column j
    and then q times row j+1 to row i+1. Both keep the ideal of maximal
    minors and reduce the degree of the (i, j) entry.
    """
    if i == j:
        raise ValueError("diagonal entries admit no reduction move")
    t = E.t
    if not (1 <= i <= t + 1 and 1 <= j <= t):
        raise IndexError(f"entry ({i},{j}) out of range")
    n = N.entry(i, j)
    d = E.dj(j) if i > j else E.dj(i)
    _, q = _split(n, d)
    if not q:
        return N
    M = N.matrix()
    if i > j:
        if any(a <= b for a, b in N.nonzero()):
            raise ValueError("lower reduction moves need a strictly lower triangular matrix")
        for c in range(t):
            M[i - 1][c] = M[i - 1][c] - q * M[j - 1][c]
        if j >= 2:
            for r in range(t + 1):
                M[r][j - 2] = M[r][j - 2] + q * M[r][i - 2]
    else:
        if any(a >= b for a, b in N.nonzero()):
            raise ValueError("upper reduction moves need a strictly upper triangular matrix")
        for r in range(t + 1):
            M[r][j - 1] = M[r][j - 1] - q * M[r][i - 1]
        if j + 1 <= t + 1 and i + 1 <= t + 1:
            for c in range(t):
                M[i][c] = M[i][c] + q * M[j][c]
    return _from_matrix(E, M, N.field, N.cap)


def reduce_lower(E, N):
    """Reduction moves from the last column to the first, rows top to bottom."""
    N = N.with_cap(None)
    for j in range(E.t, 0, -1):
        for i in range(j + 1, E.t + 2):
            N = reduction_move(E, N, i, j)
    return N


def reduce_upper(E, N, max_rounds=100):
    """Reduction moves on a strictly upper triangular matrix until every
    entry has degree below d_i."""
    N = N.with_cap(None)
    for _ in range(max_rounds):
        changed = False
        for j in range(1, E.t + 1):
            for i in range(j - 1, 0, -1):
                n = N.entry(i, j)
                if n and n.degree() >= E.dj(i):
                    N = reduction_move(E, N, i, j)
                    changed = True
        if not changed:
            return N
    raise RuntimeError("upper reduction did not stabilize")


def _check_lex_leads(sb):
    for i, f in enumerate(sb):
        if f.leading_term(LEX)[0] != f.leading_term(LOCAL)[0]:
            return i
    return None


def canonical_deformation(J):
    """The unique N in the canonical family with I_t(H + N) = J.

    Requires the reduced standard basis of J to have the same leading terms
    for lex and the local order (always true when Lt(J) is lex-compatible).
    """
    sb = _as_basis(J)
    E = sb.E
    bad = _check_lex_leads(sb)
    if bad is not None:
        raise ValueError(f"standard basis element f_{bad} has a different lex leading term; "
                         "no canonical matrix (use syzygy_deformation + truncate_deformation)")
    N = truncate_deformation(E, syzygy_deformation(sb))
    if not N.is_strictly_lower():
        raise ArithmeticError("syzygy matrix is not strictly lower triangular")
    N0 = reduce_lower(E, N)
    if not classify_deformation(E, N0).in_M:
        raise ArithmeticError("reduction did not reach the canonical family")
    return N0


def inverse_phi(J):
    """The cell point of J in the affine chart of its Groebner cell."""
    sb = _as_basis(J)
    if not sb.E.is_lex_compatible():
        raise ValueError(f"{sb.E} is not lex-compatible; the cell has no affine chart")
    return encode_cellpoint(sb.E, canonical_deformation(sb))


# dimensions

def cell_dimension(E):
    """Sum over i > j of d_j - v_{i,j}, each term counted only when positive.

    A zero step d_j makes the raw difference negative although the entry
    simply carries no free coefficient.
    """
    t = E.t
    return sum(max(E.dj(j) - E.v(i, j), 0) for j in range(1, t + 1) for i in range(j + 1, t + 2))


def cell_report(E):
    dim = cell_dimension(E)
    size = len(m_template(E))
    note = "" if E.is_lex_compatible() else \
        "not lex-compatible: value is the canonical-family template size, not the cell dimension"
    return CellReport(E, dim if E.is_lex_compatible() else size, E.classify(), size, note)


# coordinate changes

def change_coordinates(J, g):
    (a, b), (c, d) = g
    F = J.field
    if not F.sub(F.mul(F(a), F(d)), F.mul(F(b), F(c))):
        raise ValueError("singular coordinate change")
    gens = tuple(f.substitute_linear(((F(a), F(b)), (F(c), F(d)))) for f in J.gens)
    return IdealPresentation(gens, F, J.cap)


def _random_matrix(F, rng, bound):
    while True:
        if F.p is None:
            g = [[F(rng.randint(-bound, bound)) for _ in range(2)] for _ in range(2)]
        else:
            g = [[F.random(rng) for _ in range(2)] for _ in range(2)]
        if F.sub(F.mul(g[0][0], g[1][1]), F.mul(g[0][1], g[1][0])):
            return g


def generic_initial(J, seed=0, bound=100, draws=3):
    """Lt of J after a random linear change of coordinates, or None if
    independent draws disagree."""
    rng = random.Random(seed)
    results = set()
    for _ in range(draws):
        g = _random_matrix(J.field, rng, bound)
        results.add(lt_ideal_local(change_coordinates(J, g)))
    return results.pop() if len(results) == 1 else None


def stratify(d):
    """Monomial ideals of colength d with their Hilbert functions and cell data."""
    from .staircase import enumerate_staircases
    return [(E, E.hilbert_function, cell_report(E)) for E in enumerate_staircases(d)]


# non-surjectivity witness

def lex_obstruction_pair(E):
    """The pair (i, j) used for the witness: the violating pair with the
    largest gap, moved to the ends of the equality blocks of m."""
    w = E.lex_compatibility_witness()
    if w is None:
        return None
    i, j = w
    m = E.m
    i = max(l for l in range(1, E.t + 1) if m[l] == m[i])
    j = min(l for l in range(1, E.t + 1) if m[l] == m[j])
    return i, j


@dataclass(frozen=True)
class NonsurjWitness:
    ideal: IdealPresentation
    pair: tuple
    deformation: Deformation


def nonsurj_witness(E, field=QQ):
    """An ideal in V(E) whose contraction has a different lex leading term ideal."""
    pair = lex_obstruction_pair(E)
    if pair is None:
        raise ValueError(f"{E} is lex-compatible; every ideal of its cell is reached")
    i, j = pair
    t, m = E.t, E.m
    gens = []
    for k in range(t + 1):
        f = Poly.monomial(t - k, m[k], 1, field)
        if k == i:
            f = f + Poly.monomial(t - j, m[j] - 1, 1, field)
        gens.append(f)
    entries = {(j, i): Poly.monomial(0, E.dj(j) - 1, 1, field)}
    if i < t:
        entries[(j + 1, i + 1)] = Poly.monomial(0, E.dj(i + 1) - 1, -1, field)
    N = Deformation.from_dict(E, entries, field)
    return NonsurjWitness(IdealPresentation(tuple(gens), field, None), (i, j), N)


# finite-field counts

def tail_slots(E):
    """For each generator, the monomials allowed in a reduced tail."""
    outside = E.outside()
    slots = []
    for k, lead in enumerate(E.generators()):
        key = LOCAL.key(lead)
        slots.extend((k, mono) for mono in outside if LOCAL.key(mono) < key)
    return slots


def cell_points_over(E, F, budget=10**6):
    """All reduced standard bases with leading term ideal E over F_p.

    Every ideal of V(E) has a unique reduced standard basis, and a candidate
    with these leading terms and allowed tails is one exactly when Lt of the
    ideal it generates is E.
    """
    slots = tail_slots(E)
    if F.p ** len(slots) > budget:
        raise OverflowError(f"{F.p}^{len(slots)} candidates exceed the budget {budget}")
    leads = E.generators()
    out = []
    for values in itertools.product(F.elements(), repeat=len(slots)):
        terms = [{lead: 1} for lead in leads]
        for (k, mono), c in zip(slots, values):
            if c:
                terms[k][mono] = c
        gens = tuple(Poly(tm, F) for tm in terms)
        J = IdealPresentation(gens, F)
        if lt_ideal_local(J, hint=E) == E:
            out.append(StandardBasis(E, gens, True))
    return out


def count_cell_points(E, F, budget=10**6):
    return len(cell_points_over(E, F, budget))


def conjecture_probe(E, p, budget=10**6):
    """Compare the image of the small-degree family with the whole cell over F_p."""
    from .field import GF
    F = GF(p)
    d_slots = lt_d_template(E)
    if p ** len(d_slots) > budget:
        raise OverflowError(f"{p}^{len(d_slots)} matrices exceed the budget {budget}")
    cell = cell_points_over(E, F, budget)
    cell_keys = {sb.fingerprint() for sb in cell}
    seen = {}
    collisions = []
    for values in itertools.product(F.elements(), repeat=len(d_slots)):
        N = deformation_from_slots(E, d_slots, values, F)
        key = reduced_standard_basis(phi(E, N)).fingerprint()
        if key in seen:
            collisions.append((seen[key], N))
        else:
            seen[key] = N
    injective = not collisions
    image = len(seen)
    missing = len(cell_keys - set(seen))
    passed = injective and image == len(cell) == p ** len(d_slots) and not missing
    counterexamples = [{"kind": "collision", "first": a.to_json(), "second": b.to_json()}
                       for a, b in collisions[:5]]
    if missing:
        counterexamples.append({"kind": "missing", "count": missing})
    return {
        "staircase": E.to_json(), "prime": p,
        "n_template": len(le_s_template(E)), "d_template": len(d_slots),
        "cell_candidates": len(tail_slots(E)), "cell_count": len(cell),
        "image_count": image, "injective": injective,
        "forced_empty": [list(ij) for ij in forced_empty_slots(E)],
        "pass": passed, "counterexamples": counterexamples,
    }


__all__ = [
    "CellReport", "membership", "syzygy_deformation", "truncate_deformation",
    "reduction_move", "reduce_lower", "reduce_upper", "canonical_deformation",
    "inverse_phi", "cell_dimension", "cell_report", "change_coordinates",
    "generic_initial", "stratify", "lex_obstruction_pair", "NonsurjWitness",
    "nonsurj_witness", "tail_slots", "cell_points_over", "count_cell_points",
    "conjecture_probe", "contract_to_poly_ring", "lt_ideal_lex", "lex_segment_of",
    "echelon", "CellPoint",
]
