"""Gorenstein points of Groebner cells and Gorenstein covers of Artin quotients."""

from dataclasses import dataclass, field as dc_field
import itertools
import random

from .hbm import CellPoint, all_cellpoints, decode_cellpoint, m_template, phi, random_cellpoint
from .localstd import (IdealPresentation, contains, echelon, grauert_divide,
                       reduced_standard_basis)
from .parse import format_poly
from .poly import Poly


@dataclass(frozen=True)
class RankProfile:
    mu: int
    rank_const: int


def _rank(rows, F):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][col])
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = F.mul(rows[r][col], inv)
                rows[r] = [F.sub(a, F.mul(c, b)) for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def constant_matrix(E, N):
    return [[v.coeff(0, 0) for v in row] for row in N.matrix()]


def rank_profile(E, N):
    """Rank of H + N modulo m, and the resulting minimal number of generators."""
    r = _rank(constant_matrix(E, N), N.field)
    return RankProfile(E.t + 1 - r, r)


def is_gorenstein_point(E, p):
    """Whether every entry on the second subdiagonal has a nonzero constant term."""
    if not E.is_lex_segment():
        raise ValueError(f"{E} is not a lex-segment staircase")
    coords = p.as_dict()
    return all(coords.get((i, i - 2, 0), 0) for i in range(3, E.t + 2))


def _exact_generators(candidate, s_target):
    if candidate.cap is None or candidate.cap >= s_target + 1:
        return candidate.gens
    return reduced_standard_basis(candidate).elements


def is_cover(target, candidate, target_basis=None):
    """Whether the candidate ideal is contained in the target ideal."""
    sb = target_basis if target_basis is not None else reduced_standard_basis(target)
    cap = sb.E.socle_degree + 2
    for g in _exact_generators(candidate, sb.E.socle_degree):
        if grauert_divide(g.with_cap(cap), sb, cap).remainder:
            return False
    return True


@dataclass
class CoverResult:
    cover_ideal: IdealPresentation
    cell_point: CellPoint
    colength_gap: int
    certified_minimal: str = "upper-bound"

    def generators(self):
        """Minimal generators read off the reduced standard basis."""
        return minimal_generators(self.cover_ideal)

    def to_json(self):
        return {"point": [str(self.cell_point.field.signed(c)) for c in self.cell_point.coords]
                if self.cell_point is not None else None,
                "generators": [format_poly(g) for g in self.generators()],
                "gap": self.colength_gap, "gorenstein": True,
                "minimal": self.certified_minimal}


def cover_search(target, E, field, strategy="exhaustive_p", samples=10_000, bound=5,
                 seed=0, include=(), budget=10**6):
    """Gorenstein points of the cell of E whose ideal lies inside the target."""
    if not E.is_lex_segment() or not E.is_gorenstein_admissible():
        raise ValueError(f"{E} must be a Gorenstein-admissible lex segment")
    sb = reduced_standard_basis(target)
    if E.colength < sb.E.colength:
        raise ValueError("cover staircase is shorter than the target")
    gap = E.colength - sb.E.colength
    n = len(m_template(E))
    points = [p if isinstance(p, CellPoint) else CellPoint(E, tuple(p), field) for p in include]
    if strategy == "exhaustive_p":
        if field.p is None:
            raise ValueError("exhaustive search needs a finite field")
        if field.p ** n > budget:
            raise OverflowError(f"{field.p}^{n} points exceed the budget {budget}")
        source = itertools.chain(points, all_cellpoints(E, field))
    elif strategy == "random_q":
        rng = random.Random(seed)
        source = itertools.chain(points, (random_cellpoint(E, field, rng, bound)
                                          for _ in range(min(samples, budget))))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    results, seen = [], set()
    for p in source:
        if p in seen:
            continue
        seen.add(p)
        if not is_gorenstein_point(E, p):
            continue
        J = phi(E, decode_cellpoint(p))
        if is_cover(target, J, sb):
            results.append(CoverResult(J, p, gap))
    return results


# sub-ideals of codimension one

def _cotangent_basis(sb):
    """Products m*J and elements of sb forming a basis of J/mJ."""
    F = sb.field
    prods = []
    for f in sb:
        prods.append(f.shift(1, 0))
        prods.append(f.shift(0, 1))
    ech = echelon(IdealPresentation(tuple(prods), F))
    rows = ech.rows
    D = ech.D
    basis, residues = [], {}
    for f in sb:
        r = f.with_cap(D)
        for mono in [m for m in r.terms if m in rows]:
            c = r.terms.get(mono)
            if c:
                r = r - rows[mono].with_cap(D).scale(c)
        # eliminate against residues already chosen
        for lead, (row, _) in residues.items():
            c = r.terms.get(lead)
            if c:
                r = r - row.scale(c)
        if r:
            lead, c = max(r.terms.items(), key=lambda mc: (-(mc[0][0] + mc[0][1]), mc[0][0]))
            r = r.scale(F.inv(c))
            for other, (row, g) in list(residues.items()):
                cc = row.terms.get(lead)
                if cc:
                    residues[other] = (row - r.scale(cc), g)
            residues[lead] = (r, f)
            basis.append(f)
    return prods, basis


def minimal_generators(J):
    sb = reduced_standard_basis(J)
    return [g for g in _cotangent_basis(sb)[1]]


def codim_one_subideals(J):
    """All ideals K with mJ inside K inside J and dim J/K = 1 (over a finite field)."""
    sb = reduced_standard_basis(J)
    F = sb.field
    if F.p is None:
        raise ValueError("enumeration needs a finite field")
    prods, basis = _cotangent_basis(sb)
    mu = len(basis)
    for k0 in range(mu):
        for tail in itertools.product(F.elements(), repeat=mu - k0 - 1):
            c = [0] * k0 + [1] + list(tail)
            kernel = [basis[k] - basis[k0].scale(c[k]) for k in range(mu) if k != k0]
            yield IdealPresentation(tuple(prods) + tuple(g for g in kernel if g), F)


@dataclass
class GclResult:
    value: int
    exact: bool
    lower: int
    witnesses: list = dc_field(default_factory=list)
    searched: int = 0

    def to_json(self):
        return {"gcl": self.value, "kind": "exact" if self.exact else "upper-bound",
                "lower_bound": self.lower, "searched": self.searched,
                "witnesses": [w.to_json() for w in self.witnesses]}


def _mu(sb):
    return len(_cotangent_basis(sb)[1])


def gcl_exhaustive(target, max_gap=4, budget=100_000):
    """Exact Gorenstein colength over a finite field, by descending chains
    of codimension-one sub-ideals (every cover of gap g arises this way)."""
    sb = reduced_standard_basis(target)
    if _mu(sb) <= 2:
        return GclResult(0, True, 0, [CoverResult(target, None, 0, "exact")], 1)
    level = {sb.fingerprint(): target}
    searched = 1
    for gap in range(1, max_gap + 1):
        nxt = {}
        for J in level.values():
            for K in codim_one_subideals(J):
                ksb = reduced_standard_basis(K)
                key = ksb.fingerprint()
                if key in nxt:
                    continue
                searched += 1
                if searched > budget:
                    raise OverflowError(f"budget {budget} exhausted at gap {gap}")
                nxt[key] = ksb.ideal()
        covers = [CoverResult(K, None, gap, "exact") for K in nxt.values()
                  if _mu(reduced_standard_basis(K)) == 2]
        if covers:
            return GclResult(gap, True, gap, covers, searched)
        level = nxt
    raise OverflowError(f"no cover up to gap {max_gap}")


def gcl_bound(target, field, budget=10**6, samples=200, bound=5, seed=0,
              include=(), max_gap=4):
    """Gorenstein colength: exact by exhaustion over F_p, an upper bound over Q.

    ``include`` lists ``(staircase, coords)`` points to test in sampling mode.
    """
    if field.p is not None:
        return gcl_exhaustive(target, max_gap, budget)
    from .staircase import enumerate_staircases
    sb = reduced_standard_basis(target)
    if _mu(sb) <= 2:
        return GclResult(0, True, 0, [CoverResult(target, None, 0, "exact")], 1)
    searched = 0
    for gap in range(1, max_gap + 1):
        n = sb.E.colength + gap
        found = []
        for E in enumerate_staircases(n):
            if not (E.is_lex_segment() and E.is_gorenstein_admissible()):
                continue
            extra = [c for S, c in include if S == E]
            res = cover_search(target, E, field, "random_q", samples, bound, seed, extra)
            searched += samples + len(extra)
            found.extend(res)
            if searched > budget:
                raise OverflowError(f"budget {budget} exhausted at gap {gap}")
        if found:
            return GclResult(gap, False, 1, found, searched)
    raise OverflowError(f"no cover found up to gap {max_gap}")


__all__ = [
    "RankProfile", "rank_profile", "constant_matrix", "is_gorenstein_point", "is_cover",
    "CoverResult", "cover_search", "codim_one_subideals", "minimal_generators",
    "GclResult", "gcl_exhaustive", "gcl_bound", "contains", "Poly",
]
