"""Find a Gorenstein cover of R/(x^3 - 2xy^2, x^2y - 2y^3, y^3).

The target has Hilbert function (1,2,3,1) and three generators. We look for
Gorenstein points in the cell of the lex segment (x^3, x^2y, xy^3, y^5)
whose ideal sits inside the target, then confirm over F_5 that nothing
smaller exists.
"""

from hilburch import GF, QQ, Staircase, cover_search, gcl_bound, ideal, lt_ideal_local
from hilburch.parse import format_poly

target = ideal("x^3-2xy^2; x^2y-2y^3; y^3")
L = Staircase.from_m((0, 1, 3, 5))
print("Hilbert function of the target:", lt_ideal_local(target).hilbert_function)

hits = cover_search(target, L, QQ, "random_q", samples=500, bound=3, seed=1,
                    include=[(1, 0, 0, 1, 0, 0)])
print(f"{len(hits)} cover(s) in the cell of {L.to_generators_text()}")
for r in hits[:5]:
    gens = ", ".join(format_poly(g) for g in r.generators())
    print(f"  point {r.cell_point}: ({gens}), gap {r.colength_gap}")

F5 = GF(5)
res = gcl_bound(ideal("x^3-2xy^2; x^2y-2y^3; y^3", F5), F5)
print(f"\nover F_5 the Gorenstein colength is exactly {res.value} "
      f"({res.searched} sub-ideals examined)")
