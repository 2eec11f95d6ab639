import random

import pytest

from hilburch.cells import (canonical_deformation, cell_dimension, cell_points_over, cell_report,
                            change_coordinates, conjecture_probe, generic_initial, inverse_phi,
                            lex_obstruction_pair, membership, nonsurj_witness, reduce_lower,
                            reduce_upper, reduction_move, stratify, syzygy_deformation,
                            truncate_deformation)
from hilburch.field import GF, QQ
from hilburch.fixtures import fixtures
from hilburch.hbm import (Deformation, _ord_bound, m_template, all_cellpoints, classify_deformation,
                          decode_cellpoint, origin, phi, random_cellpoint)
from hilburch.localstd import (IdealPresentation, ideal, ideals_equal, lt_ideal_lex,
                               lt_ideal_local, contract_to_poly_ring, reduced_standard_basis)
from hilburch.poly import Poly
from hilburch.parse import format_poly, parse_poly
from hilburch.staircase import Staircase, enumerate_staircases, lex_segment_of, staircase_from_generators

FX = fixtures()
L = Staircase.from_m((0, 1, 3, 5))
E4 = Staircase.from_m((0, 2, 2, 2, 2))
E6 = Staircase.from_m((0, 2, 2, 2, 2, 2, 8))


# membership

def test_membership():
    assert membership(FX.polysurj.ideal, E4)
    assert membership(IdealPresentation.monomial(L), L)
    m2 = Staircase.from_m((0, 1, 2))
    for c in (1, 3, -2):
        J = ideal(f"x^2{c:+d}y; xy; y^2")
        assert not membership(J, m2)
        assert membership(J, Staircase.from_m((0, 1, 1, 1)))


def test_stratify_colength_three():
    rows = stratify(3)
    assert [E for E, _, _ in rows] == FX.hilb3.staircases
    assert [h for _, h, _ in rows] == FX.hilb3.hilbert_functions
    assert [E.to_generators_text() for E, _, _ in rows] == ["x,y^3", "x^2,xy,y^2", "x^3,y"]


# syzygies and truncation

def test_syzygy_examples():
    N = syzygy_deformation(FX.step1.ideal)
    assert N == FX.step1.expected_syzygy
    assert syzygy_deformation(IdealPresentation.monomial(L)) == Deformation.zero(L, QQ, L.socle_degree + 2)
    N = syzygy_deformation(FX.polysurj.ideal)
    assert classify_deformation(E4, N).in_N
    assert N.truncate(3) == FX.noninj.N_prime


def test_syzygy_from_unreduced_basis_matches_display():
    from hilburch.localstd import standard_basis
    from hilburch.parse import parse_poly
    sb = standard_basis(E4, [parse_poly(t) for t in FX.polysurj.basis])
    N = syzygy_deformation(sb)
    assert truncate_deformation(E4, N, 3) == FX.polysurj2.expected_truncated


def test_surjectivity_on_fixtures():
    for J in [FX.polysurj.ideal, FX.step1.ideal, FX.cover.target,
              ideal("x^3-x^2; x^2y-xy; xy^3-y^3; y^5"), FX.nonsurj_witness and
              nonsurj_witness(E6).ideal, ideal("y-x^2+x^3; x^5"), ideal("x^2-y^2+x^3; xy+y^4")]:
        E = lt_ideal_local(J)
        N = syzygy_deformation(J)
        assert classify_deformation(E, N).in_N
        assert ideals_equal(phi(E, N), J)
        Nbar = truncate_deformation(E, N)
        assert classify_deformation(E, Nbar).in_N_le_s
        assert ideals_equal(phi(E, Nbar), J)


def test_truncation_of_polynomial_is_identity():
    N = FX.noninj.N_prime
    assert truncate_deformation(E4, N) == N


def test_truncation_keeps_ideal_random_fp():
    rng = random.Random(12)
    F = GF(5)
    for _ in range(20):
        E = rng.choice([S for d in range(3, 9) for S in enumerate_staircases(d)])
        N = _random_N(E, rng, F, extra=E.socle_degree + 3)
        assert ideals_equal(phi(E, N), phi(E, truncate_deformation(E, N)))


def _random_N(E, rng, F, extra=3, lower=False):
    values = {}
    for i in range(1, E.t + 2):
        for j in range(1, E.t + 1):
            if lower and i <= j:
                continue
            if rng.random() < 0.5:
                lo = max(0, _ord_bound(E, i, j))
                values[(i, j)] = Poly.from_y({k: F.random(rng, 3) for k in range(lo, lo + extra)}, F)
    return Deformation.from_dict(E, values, F)


# reduction moves

def test_step1_moves():
    E = E6
    N = truncate_deformation(E, FX.step1.expected_syzygy).with_cap(None)
    for i, j in FX.step1.moves:
        N = reduction_move(E, N, i, j)
    expected = FX.step1.expected_canonical.with_cap(None)
    # the two named moves settle columns 5 and 6; the compensating column
    # operations leave entries in column 4 for the later moves
    assert all(N.entry(i, j) == expected.entry(i, j) for i in range(1, 8) for j in (5, 6))
    assert {j for _, j in N.nonzero().keys() - expected.nonzero().keys()} == {4}
    assert ideals_equal(phi(E, N), FX.step1.ideal)
    assert reduce_lower(E, N) == expected


def test_move_is_identity_on_small_entries():
    N = FX.step1.expected_canonical.with_cap(None)
    assert reduction_move(E6, N, 7, 6) == N


def test_move_errors():
    N = Deformation.zero(L)
    with pytest.raises(ValueError):
        reduction_move(L, N, 2, 2)
    with pytest.raises(IndexError):
        reduction_move(L, N, 6, 1)


def test_lower_moves_keep_ideal_over_f5():
    rng = random.Random(21)
    F = GF(5)
    done = 0
    while done < 40:
        E = rng.choice([S for d in range(3, 9) for S in enumerate_staircases(d) if S.t >= 2])
        N = _random_N(E, rng, F, extra=4, lower=True)
        pos = [(i, j) for (i, j) in N.nonzero() if N.entry(i, j).degree() >= E.dj(j)]
        if not pos:
            continue
        i, j = rng.choice(pos)
        N2 = reduction_move(E, N, i, j)
        assert N2.is_strictly_lower()
        assert classify_deformation(E, N2).in_N
        assert not N2.entry(i, j) or N2.entry(i, j).degree() < E.dj(j)
        assert ideals_equal(phi(E, N), phi(E, N2))
        done += 1


def test_full_lower_reduction_lands_in_canonical_family():
    rng = random.Random(22)
    F = GF(5)
    for _ in range(25):
        E = rng.choice([S for d in range(3, 9) for S in enumerate_staircases(d)
                        if S.is_lex_compatible() and S.t >= 2])
        N = _random_N(E, rng, F, extra=4, lower=True)
        N0 = reduce_lower(E, N)
        assert classify_deformation(E, N0).in_M
        assert ideals_equal(phi(E, N), phi(E, N0))


# the canonical matrix

def test_canonical_step1():
    N0 = canonical_deformation(FX.step1.ideal)
    assert N0 == FX.step1.expected_canonical.with_cap(None)


def test_canonical_of_monomial_is_origin():
    assert inverse_phi(IdealPresentation.monomial(L)) == origin(L)


def test_roundtrip_over_f3():
    F = GF(3)
    rng = random.Random(0)
    for _ in range(40):
        p = random_cellpoint(L, F, rng)
        assert inverse_phi(phi(L, decode_cellpoint(p))) == p


def test_roundtrip_ideal_side_over_q():
    rng = random.Random(6)
    for _ in range(10):
        p = random_cellpoint(L, QQ, rng, 3)
        J = phi(L, decode_cellpoint(p))
        q = inverse_phi(IdealPresentation(J.gens, J.field, J.cap))
        assert ideals_equal(phi(L, decode_cellpoint(q)), J)


def test_canonical_rejects_mismatched_leads():
    with pytest.raises(ValueError):
        canonical_deformation(nonsurj_witness(E6).ideal)


# dimension

def test_dimensions():
    assert cell_dimension(L) == 6
    for d in range(2, 9):
        assert cell_dimension(Staircase.from_m((0, d))) == d - 1
    assert cell_dimension(Staircase.from_m((0, 1))) == 0
    rep = cell_report(E6)
    assert rep.note and rep.dimension == rep.template_size


def test_dimension_counts_cell_over_f2():
    # the number of F_2-points of a lex-compatible cell is 2^dim
    F = GF(2)
    for d in range(1, 7):
        for E in enumerate_staircases(d):
            if E.is_lex_compatible():
                assert cell_dimension(E) == len(m_template(E))
                assert len(cell_points_over(E, F)) == 2 ** cell_dimension(E)


# coordinate changes

def test_change_coordinates():
    J = FX.polysurj.ideal
    assert ideals_equal(change_coordinates(J, ((1, 0), (0, 1))), J)
    with pytest.raises(ValueError):
        change_coordinates(J, ((1, 2), (2, 4)))
    rng = random.Random(3)
    h = lt_ideal_local(J).hilbert_function
    for _ in range(5):
        g = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
            continue
        assert lt_ideal_local(change_coordinates(J, g)).hilbert_function == h


@pytest.mark.parametrize("J", [FX.polysurj.ideal, FX.step1.ideal, FX.cover.target,
                               ideal("x^3-x^2; x^2y-xy; xy^3-y^3; y^5")])
def test_generic_initial_is_lex_segment(J):
    h = lt_ideal_local(J).hilbert_function
    assert generic_initial(J, seed=1) == lex_segment_of(h)


# the non-surjectivity witness

def test_witness_construction():
    w = nonsurj_witness(E6)
    assert w.pair == (5, 1) == lex_obstruction_pair(E6)
    assert list(w.ideal.gens) == [parse_poly(g) for g in FX.nonsurj_witness.generators]
    assert membership(w.ideal, E6)
    expected = staircase_from_generators(FX.nonsurj_witness.expected_lt_lex)
    assert lt_ideal_lex(contract_to_poly_ring(w.ideal)) == expected != E6
    assert ideals_equal(phi(E6, w.deformation), w.ideal)
    with pytest.raises(ValueError):
        nonsurj_witness(L)


def test_witness_not_in_canonical_family_over_f2():
    F = GF(2)
    w = nonsurj_witness(E6, F)
    key = reduced_standard_basis(w.ideal).fingerprint()
    images = {reduced_standard_basis(phi(E6, decode_cellpoint_any(E6, v, F))).fingerprint()
              for v in _all_m_values(E6, F)}
    assert key not in images


def decode_cellpoint_any(E, values, F):
    from hilburch.hbm import deformation_from_slots, m_template
    return deformation_from_slots(E, m_template(E), values, F)


def _all_m_values(E, F):
    import itertools
    from hilburch.hbm import m_template
    return itertools.product(F.elements(), repeat=len(m_template(E)))


def test_small_witness():
    E = Staircase.from_m((0, 1, 1, 1))
    w = nonsurj_witness(E)
    assert membership(w.ideal, E)
    assert lt_ideal_lex(contract_to_poly_ring(w.ideal)) != E


def test_witness_reduces_into_small_degree_family():
    w = nonsurj_witness(E6)
    N = reduce_upper(E6, w.deformation)
    assert N.nonzero() == {(1, 5): Poly.monomial(0, 1)}
    assert classify_deformation(E6, N).in_N_lt_d
    assert ideals_equal(phi(E6, N), w.ideal)


# the finite-field probe

@pytest.mark.parametrize("p", [2, 3])
def test_probe_x4y2(p):
    rep = conjecture_probe(E4, p)
    assert rep["pass"] and rep["injective"]
    assert rep["image_count"] == rep["cell_count"] == p ** 4
    assert rep["d_template"] == FX.x4y2.d_template


@pytest.mark.parametrize("m", [(0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 4)])
def test_probe_lex_segments(m):
    E = Staircase.from_m(m)
    assert E.is_lex_segment()
    rep = conjecture_probe(E, 2)
    assert rep["pass"]


def test_probe_budget():
    with pytest.raises(OverflowError):
        conjecture_probe(E4, 3, budget=10)
