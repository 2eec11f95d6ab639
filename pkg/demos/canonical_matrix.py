"""Walk through the canonical Hilbert-Burch matrix of (x^6, xy^2 - y^5, y^8).

Run with ``python3 demos/canonical_matrix.py``.
"""

from hilburch import canonical_deformation, ideal, reduced_standard_basis, syzygy_deformation
from hilburch.cells import reduction_move, truncate_deformation
from hilburch.parse import format_poly

J = ideal("x^6; xy^2-y^5; y^8")
sb = reduced_standard_basis(J)
print("leading terms:", sb.E.to_generators_text())
for i, f in enumerate(sb):
    print(f"  f_{i} = {format_poly(f)}")

N = truncate_deformation(sb.E, syzygy_deformation(sb)).with_cap(None)
print("\nmatrix read off the S-polynomials:")
print(N)

for i, j in [(6, 5), (7, 5)]:
    N = reduction_move(sb.E, N, i, j)
    print(f"\nafter the ({i},{j}) move:")
    print(N)

print("\ncanonical matrix:")
print(canonical_deformation(J))
