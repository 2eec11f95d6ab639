"""Named worked examples with their expected outputs."""

from types import SimpleNamespace

from .field import QQ
from .hbm import Deformation
from .localstd import ideal
from .parse import parse_poly
from .staircase import Staircase


def _deformation(E, values, field=QQ):
    return Deformation.from_dict(E, {ij: parse_poly(v, field) for ij, v in values.items()}, field)


def fixtures():
    L = Staircase.from_m((0, 1, 3, 5))
    E4 = Staircase.from_m((0, 2, 2, 2, 2))
    E6 = Staircase.from_m((0, 2, 2, 2, 2, 2, 8))

    ex1 = SimpleNamespace(
        staircase=L,
        deformation=_deformation(L, {(4, 3): "1"}),
        expected_minors=["x^3-x^2", "x^2y-xy", "xy^3-y^3", "y^5"],
        expected_lt_lex=L,
        expected_lt_local=Staircase.from_m((0, 1, 3)),
        expected_U=[[1, 2, 3], [1, 2, 3], [0, 1, 2], [-1, 0, 1]],
    )
    polysurj = SimpleNamespace(
        ideal=ideal("x^4+x^3y; y^2+x^3+x^2y"),
        staircase=E4,
        basis=["x^4+x^3y", "x^3y^2+y^5", "x^2y^2", "xy^2", "y^2+x^3+x^2y"],
        reduced_basis=["x^4+x^3y", "x^3y^2", "x^2y^2", "xy^2", "x^3+x^2y+y^2"],
    )
    polysurj2 = SimpleNamespace(
        staircase=E4,
        truncation_degree=3,
        expected_truncated=_deformation(E4, {
            (1, 4): "1", (2, 1): "-y-y^2-y^3", (2, 2): "y+y^2+y^3",
            (3, 1): "-y^3", (3, 2): "y^2+y^3", (4, 1): "y^3", (5, 2): "-y^3"}),
        expected_f0="x^4+x^3y+y^4-xy^4+y^5-x^2y^4-xy^5+y^6-x^2y^5-xy^6",
    )
    noninj = SimpleNamespace(
        staircase=E4,
        N_prime=_deformation(E4, {(1, 4): "1", (2, 1): "-y"}),
        N_bar=polysurj2.expected_truncated,
        ideal=polysurj.ideal,
        expected_basis=["x^4+x^3y", "x^3y^2", "x^2y^2", "xy^2", "y^2+x^3+x^2y"],
    )
    step1 = SimpleNamespace(
        ideal=ideal("x^6; xy^2-y^5; y^8"),
        staircase=E6,
        expected_syzygy=_deformation(E6, {(6, 5): "-y^3", (7, 5): "-1", (7, 6): "y^3"}),
        expected_canonical=_deformation(E6, {(7, 6): "y^3"}),
        moves=[(6, 5), (7, 5)],
        expected_f5="xy^2-y^5",
    )
    paramlex = SimpleNamespace(staircase=L, dimension=6,
                               slots=[(3, 1, 0), (4, 1, 0), (3, 2, 1), (4, 2, 0), (4, 2, 1), (4, 3, 1)])
    vgl = SimpleNamespace(staircase=L, point=(1, 0, 0, 1, 0, 0),
                          expected_generators=["x^3-2xy^2", "x^2y-y^3"], mu=2, rank_const=2)
    cover = SimpleNamespace(
        target=ideal("x^3-2xy^2; x^2y-2y^3; y^3"),
        hilbert_function=(1, 2, 3, 1),
        staircase=L,
        point=(1, 0, 0, 1, 0, 0),
        expected_cover=["x^2y-y^3", "x^3-2xy^2"],
        expected_gap=2,
    )
    nonsurj = SimpleNamespace(
        staircase=E6,
        pair=(5, 1),
        generators=["x^6", "x^5y^2", "x^4y^2", "x^3y^2", "x^2y^2", "xy^2+x^5y", "y^8"],
        expected_lt_lex=[(6, 0), (5, 1), (2, 2), (1, 3), (0, 8)],
        expected_N=_deformation(E6, {(1, 5): "y", (2, 6): "-y^5"}),
    )
    x4y2 = SimpleNamespace(staircase=E4, primes=(2, 3), d_template=4)
    hilb3 = SimpleNamespace(
        count=3,
        staircases=[Staircase.from_m((0, 3)), Staircase.from_m((0, 1, 2)), Staircase.from_m((0, 1, 1, 1))],
        hilbert_functions=[(1, 1, 1), (1, 2), (1, 1, 1)],
        lex_family="x^2+cy; xy; y^2",
    )
    return SimpleNamespace(**{
        "ex1": ex1, "polysurj": polysurj, "polysurj2": polysurj2, "noninj": noninj,
        "step1": step1, "paramlex": paramlex, "vgl": vgl, "cover": cover,
        "nonsurj_witness": nonsurj, "x4y2": x4y2, "hilb3": hilb3,
    })


FIXTURE_NAMES = ["ex1", "polysurj", "polysurj2", "noninj", "step1", "paramlex", "vgl",
                 "cover", "nonsurj-witness", "x4y2", "hilb3"]


def get(name):
    return getattr(fixtures(), name.replace("-", "_"))
