import random

import pytest
from hypothesis import given, strategies as st

from hilburch.field import GF, QQ
from hilburch.hbm import Deformation, phi, random_cellpoint, decode_cellpoint, signed_minors
from hilburch.localstd import (IdealPresentation, NotMPrimaryError, buchberger_lex, contains,
                               contract_to_poly_ring, echelon, grauert_divide, ideal, ideals_equal,
                               is_lifting, lt_ideal_lex, lt_ideal_local,
                               minimal_number_of_generators, reduced_standard_basis,
                               standard_basis, verify_standard_basis, y_divide)
from hilburch.parse import format_poly, parse_poly
from hilburch.poly import LOCAL, Poly
from hilburch.staircase import Staircase, enumerate_staircases

from oracles import hilbert_function, lex_groebner_leads

L = Staircase.from_m((0, 1, 3, 5))
E4 = Staircase.from_m((0, 2, 2, 2, 2))
E6 = Staircase.from_m((0, 2, 2, 2, 2, 2, 8))


def fmt(fs):
    return [format_poly(f) for f in fs]


# leading-term ideals

def test_lt_examples():
    assert lt_ideal_local(ideal("x^3-x^2; x^2y-xy; xy^3-y^3; y^5")) == Staircase.from_m((0, 1, 3))
    assert lt_ideal_local(ideal("x^4+x^3y; y^2+x^3+x^2y")) == E4
    assert lt_ideal_local(IdealPresentation.monomial(L)) == L
    assert lt_ideal_local(ideal("x; y")) == Staircase.from_m((0, 1))


def test_unit_ideal_is_rejected():
    with pytest.raises(NotMPrimaryError):
        lt_ideal_local(ideal("1+x; y^3"))


def test_lt_errors():
    with pytest.raises(NotMPrimaryError):
        lt_ideal_local(ideal("x^2"))
    with pytest.raises(NotMPrimaryError):
        lt_ideal_local(ideal("xy; x^2"))
    with pytest.raises(ValueError):
        IdealPresentation(())
    with pytest.raises(ValueError):
        ideal("0")


def test_echelon_certificate_serializes():
    cert = echelon(ideal("x^4+x^3y; y^2+x^3+x^2y")).to_json()
    assert cert["staircase"] == {"t": 4, "m": [0, 2, 2, 2, 2]}
    assert cert["D"] >= 6


IDEALS = [
    "x^3-x^2; x^2y-xy; xy^3-y^3; y^5",
    "x^4+x^3y; y^2+x^3+x^2y",
    "x^6; xy^2-y^5; y^8",
    "x^3-2xy^2; x^2y-2y^3; y^3",
    "x^2+y^3; xy^2",
    "y-x^2+x^3; x^5",
    "x^2-y^2+x^3; xy+y^4",
]


@pytest.mark.parametrize("text", IDEALS)
def test_hilbert_function_matches_rank_oracle(text):
    J = ideal(text)
    E = lt_ideal_local(J)
    assert E.hilbert_function == hilbert_function(J.gens, QQ, E.socle_degree + 3)


@given(st.lists(st.sampled_from(["x^3", "y^4", "x^2y", "xy+y^3", "x^2-y^2", "y^2+x^3",
                                 "x^4+xy^2", "y^5-x^2y", "x y^2"]), min_size=2, max_size=4),
       st.integers(0, 2**32))
def test_lt_determinism(texts, seed):
    gens = [parse_poly(t) for t in texts] + [parse_poly("x^5"), parse_poly("y^6")]
    E = lt_ideal_local(IdealPresentation(tuple(gens)))
    shuffled = gens[:]
    random.Random(seed).shuffle(shuffled)
    assert lt_ideal_local(IdealPresentation(tuple(shuffled))) == E
    # idempotent under a larger starting degree
    assert lt_ideal_local(IdealPresentation(tuple(gens)), start_degree=2 * E.socle_degree + 4) == E
    assert E.hilbert_function == hilbert_function(gens, QQ, E.socle_degree + 3)


def test_lt_over_finite_field():
    F = GF(2)
    # x^2 + y^2 = (x+y)^2 in characteristic 2
    J = ideal("x^2+y^2; xy", F)
    assert lt_ideal_local(J) == lt_ideal_local(ideal("x^2+y^2; xy"))
    assert lt_ideal_local(J).hilbert_function == hilbert_function(J.gens, F, 6)


# division

def test_grauert_examples():
    sb = reduced_standard_basis(ideal("x^3-2xy^2; x^2y-2y^3; y^3"))
    cap = sb.E.socle_degree + 2
    res = grauert_divide(parse_poly("x^2y-y^3"), sb, cap)
    assert not res.remainder
    mono = IdealPresentation.monomial(L)
    sbm = reduced_standard_basis(mono)
    out = grauert_divide(parse_poly("x y^2"), sbm, 8)
    assert out.remainder == parse_poly("xy^2")
    assert not grauert_divide(sbm.elements[0].shift(0, 1), sbm, 8).remainder


def test_grauert_needs_cap():
    sb = reduced_standard_basis(ideal("x^2; y^2"))
    with pytest.raises(ValueError):
        grauert_divide(parse_poly("x"), sb)


def _random_poly(rng, F, deg, terms):
    return Poly({(rng.randint(0, deg), rng.randint(0, deg)): F(rng.randint(-4, 4))
                 for _ in range(terms)}, F)


@given(st.integers(0, 2**32))
def test_grauert_contract(seed):
    rng = random.Random(seed)
    F = GF(7) if seed % 2 else QQ
    E = rng.choice([S for d in range(3, 9) for S in enumerate_staircases(d) if S.is_lex_compatible()])
    N = decode_cellpoint(random_cellpoint(E, F, rng, 3))
    sb = reduced_standard_basis(phi(E, N))
    cap = E.socle_degree + 2
    f = _random_poly(rng, F, 5, 6)
    res = grauert_divide(f, sb, cap)
    total = res.remainder
    for q, g in zip(res.quotients, sb):
        total = total + q.mul(g.with_cap(cap), cap)
    assert (f.with_cap(cap) - total).is_zero()
    leads = E.generators()
    for mono in res.remainder.terms:
        assert not any(mono[0] >= a and mono[1] >= b for a, b in leads)
    if f.with_cap(cap):
        top = LOCAL.key(f.with_cap(cap).leading_term(LOCAL)[0])
        for q, g in zip(res.quotients, sb):
            if q:
                assert LOCAL.key(q.mul(g.with_cap(cap), cap).leading_term(LOCAL)[0]) <= top


def test_y_divide_polysurj():
    sb = reduced_standard_basis(ideal("x^4+x^3y; y^2+x^3+x^2y"))
    assert sb.E == E4
    f0, f1 = sb.elements[0], sb.elements[1]
    cap = 12
    S1 = f0.shift(0, 2) - f1.shift(1, 0)
    q = y_divide(S1, sb, cap)
    assert all(qi.is_y_only() for qi in q)
    total = Poly.zero(QQ, cap)
    for qi, g in zip(q, sb):
        total = total + qi.mul(g.with_cap(cap), cap)
    assert (S1.with_cap(cap) - total).is_zero()


def test_y_divide_trivial_cases():
    sb = reduced_standard_basis(ideal("x^4+x^3y; y^2+x^3+x^2y"))
    q = y_divide(sb.elements[2], sb, 10)
    assert [qi.terms for qi in q] == [{}, {}, {(0, 0): 1}, {}, {}]
    q = y_divide(sb.elements[4].shift(0, 1), sb, 10)
    assert [qi.terms for qi in q] == [{}, {}, {}, {}, {(0, 1): 1}]


def test_y_divide_errors():
    sb = reduced_standard_basis(ideal("x^2; y^2"))
    with pytest.raises(ValueError):
        y_divide(parse_poly("x^3"), sb, 6)
    with pytest.raises(ValueError):
        y_divide(parse_poly("x"), sb, 6)


# reduced standard bases

def test_reduced_basis_examples():
    sb = reduced_standard_basis(ideal("x^6; xy^2-y^5; y^8"))
    assert sb.E == E6
    assert format_poly(sb.elements[5]) == "xy^2-y^5"
    assert fmt(sb.elements[:5]) == ["x^6", "x^5y^2", "x^4y^2", "x^3y^2", "x^2y^2"]
    sb = reduced_standard_basis(ideal("x^4+x^3y; y^2+x^3+x^2y"))
    assert fmt(sb) == ["x^4+x^3y", "x^3y^2", "x^2y^2", "xy^2", "x^3+x^2y+y^2"]
    assert fmt(reduced_standard_basis(IdealPresentation.monomial(L))) == ["x^3", "x^2y", "xy^3", "y^5"]


def test_reduced_basis_tails_avoid_staircase_and_x_power():
    for text in IDEALS:
        sb = reduced_standard_basis(ideal(text))
        E = sb.E
        for i, f in enumerate(sb):
            lead = (E.t - i, E.m[i])
            assert f.leading_term(LOCAL) == (lead, 1)
            for mono in f.terms:
                if mono != lead:
                    assert mono in set(E.outside())
                    assert mono[0] < E.t


def test_reduced_basis_is_canonical():
    a = reduced_standard_basis(ideal("x^4+x^3y; y^2+x^3+x^2y"))
    b = reduced_standard_basis(ideal("y^2+x^3+x^2y; x^4+x^3y+y^2x^2; x y^2 + y^4"))
    assert a.fingerprint() == b.fingerprint()
    assert ideals_equal(ideal("x^4+x^3y; y^2+x^3+x^2y"),
                        ideal("y^2+x^3+x^2y; x^4+x^3y+y^2x^2"))


def test_certified_and_echelon_routes_agree():
    rng = random.Random(4)
    for _ in range(20):
        E = rng.choice([S for S in enumerate_staircases(7) if S.is_lex_compatible()])
        J = phi(E, decode_cellpoint(random_cellpoint(E, QQ, rng, 3)))
        fast = reduced_standard_basis(J)
        slow = reduced_standard_basis(IdealPresentation(J.gens, J.field, J.cap))
        assert fast.fingerprint() == slow.fingerprint()


def test_standard_basis_wrapper():
    sb = standard_basis(E4, [parse_poly(t) for t in
                             ["x^4+x^3y", "x^3y^2+y^5", "x^2y^2", "xy^2", "y^2+x^3+x^2y"]])
    assert not sb.reduced
    with pytest.raises(ValueError):
        standard_basis(E4, [parse_poly("x^4")])


# standard-basis verification and liftings

def test_verify_standard_basis():
    assert verify_standard_basis(IdealPresentation.monomial(L).gens)
    assert not verify_standard_basis([parse_poly("x^2+y"), parse_poly("y^2")])
    # direct computation: (x^2+y, y^2) = (y+x^2, x^4)
    assert lt_ideal_local(ideal("x^2+y; y^2")) == Staircase.from_m((0, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        verify_standard_basis([parse_poly("x^2"), parse_poly("x^2+y^3")])


def test_verify_minors_of_deformations():
    rng = random.Random(11)
    for _ in range(15):
        E = rng.choice([S for d in range(3, 8) for S in enumerate_staircases(d)])
        N = _random_family_N(E, rng)
        minors = signed_minors(E, N, None)
        M = N.matrix(None)
        assert verify_standard_basis(minors, M)
        assert verify_standard_basis(minors)


def _random_family_N(E, rng, F=QQ):
    from hilburch.hbm import _ord_bound
    values = {}
    for i in range(1, E.t + 2):
        for j in range(1, E.t + 1):
            if rng.random() < 0.4:
                lo = max(0, _ord_bound(E, i, j))
                values[(i, j)] = Poly.from_y({k: F(rng.randint(-3, 3)) for k in range(lo, lo + 3)}, F)
    return Deformation.from_dict(E, values, F)


def test_is_lifting():
    H = L.canonical_H()
    for j in range(1, L.t + 1):
        assert is_lifting(L, j, [row[j - 1] for row in H])
    rng = random.Random(2)
    for _ in range(10):
        N = _random_family_N(L, rng)
        M = N.matrix(None)
        assert all(is_lifting(L, j, [row[j - 1] for row in M]) for j in range(1, L.t + 1))
    # order bound violated by one on or above the diagonal
    for i in range(1, L.t + 1):
        for j in range(i, L.t + 1):
            u = L.u(i, j)
            if u < 0:
                continue
            v = [row[j - 1] for row in H]
            v[i - 1] = v[i - 1] + Poly.monomial(0, u)
            assert not is_lifting(L, j, v)
    with pytest.raises(IndexError):
        is_lifting(L, 0, [row[0] for row in H])


# ideal membership

def test_contains_and_mu():
    J = ideal("x^3-2xy^2; x^2y-2y^3; y^3")
    assert contains(J, parse_poly("x^2y-y^3"))
    assert not contains(J, parse_poly("x^2"))
    assert minimal_number_of_generators(J) == 3
    assert minimal_number_of_generators(ideal("x^6; xy^2-y^5; y^8")) == 3
    assert minimal_number_of_generators(ideal("x^3-2xy^2; x^2y-y^3")) == 2
    assert minimal_number_of_generators(IdealPresentation.monomial(L)) == 4


# lex Groebner bases

def test_buchberger_examples():
    assert lt_ideal_lex([parse_poly(t) for t in ["x^3-x^2", "x^2y-xy", "xy^3-y^3", "y^5"]]) == L
    assert lt_ideal_lex(list(IdealPresentation.monomial(E6).gens)) == E6
    with pytest.raises(ValueError):
        lt_ideal_lex([parse_poly("x^2")])


@pytest.mark.parametrize("texts", [
    ["x^3-x^2", "x^2y-xy", "xy^3-y^3", "y^5"],
    ["x^2+y^3", "xy^2", "y^5"],
    ["x^3-2xy^2", "x^2y-2y^3", "y^3"],
    ["y-x^2+x^3", "x^5"],
    ["x^2-y^2+x^3", "xy+y^4", "x^5", "y^5"],
])
def test_buchberger_matches_sympy(texts):
    gens = [parse_poly(t) for t in texts]
    G = buchberger_lex(gens)
    from hilburch.poly import LEX
    assert sorted(g.leading_term(LEX)[0] for g in G) == lex_groebner_leads(gens)


def test_lex_agrees_with_local_on_lex_compatible_cells():
    rng = random.Random(8)
    for _ in range(15):
        E = rng.choice([S for d in range(3, 8) for S in enumerate_staircases(d) if S.is_lex_compatible()])
        J = phi(E, decode_cellpoint(random_cellpoint(E, QQ, rng, 3)))
        assert lt_ideal_lex(contract_to_poly_ring(J)) == E


def test_contraction():
    assert lt_ideal_lex(contract_to_poly_ring(ideal("x; y"))) == Staircase(1, (0, 1))
    gens = contract_to_poly_ring(IdealPresentation.monomial(L))
    assert lt_ideal_lex(gens) == L
    J = ideal("x^6; x^5y^2; x^4y^2; x^3y^2; x^2y^2; xy^2+x^5y; y^8")
    assert lt_ideal_local(J) == E6
    I = contract_to_poly_ring(J)
    from hilburch.poly import LEX
    assert sorted(g.leading_term(LEX)[0] for g in buchberger_lex(I)) == \
        [(0, 8), (1, 3), (2, 2), (5, 1), (6, 0)]
