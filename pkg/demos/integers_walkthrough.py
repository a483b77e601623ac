"""Walk through the E2 page for integer coefficients.

Run: python demos/integers_walkthrough.py
"""

from dihedral_bredon import ArtinParameters, builtin, bredon_vc, e2_page
from dihedral_bredon.abelian import render
from dihedral_bredon.bhs import k_of_laurent
from dihedral_bredon.report import render_text

Z = builtin("Z")

print("K-theory of the integers, as stored in the built-in profile:")
for q in range(0, 4):
    print(f"  K_{q}(Z) = {render(Z.k_table[q])}")

print("\nEvery infinite cyclic subgroup contributes K_q(Z[t, 1/t]), which splits:")
for q in range(0, 3):
    d = k_of_laurent(Z, q)
    print(f"  q={q}: K_q(Z) (+) K_(q-1)(Z) = {render(d.kq)} (+) {render(d.kq_minus_1)} -> {render(d.total)}")

print("\nOdd and even n give the same page for Z; compare n = 3 and n = 4:")
for n in (3, 4):
    print()
    print(render_text(e2_page(Z, ArtinParameters(n), (0, 2))).split("\n\ntrail:")[0])

print("\nWhere a single cell comes from:")
rep = bredon_vc(Z, 1, ArtinParameters(5))
print(f"  H_0 with K_1 coefficients, n = 5: {render(rep.cell(0, 1))}")
for step in rep.trail[(0, 1)]:
    print(f"    - {step}")
